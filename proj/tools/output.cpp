#include "output.hpp"

#include <sstream>

#include "heis/error.hpp"

namespace heis::cli {

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw ParseError("unknown format '" + std::string(name) + "'");
}

namespace {

Record cell_value(const std::string& s);

// strings that would read back as something else are written as JSON strings
std::string cell_text(const Record& v) {
  if (!v.is_string()) return v.dump();
  const auto& s = v.get_ref<const std::string&>();
  if ((!s.empty() && s.front() == '"') || cell_value(s) != v) return v.dump();
  return s;
}

// inverse of cell_text
Record cell_value(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  if (!s.empty() && (s.front() == '[' || s.front() == '{' || s.front() == '"')) {
    try {
      return Record::parse(s);
    } catch (const nlohmann::json::exception&) {
      return s;
    }
  }
  const bool neg = !s.empty() && s[0] == '-';
  if (s.size() > static_cast<std::size_t>(neg) && s.find_first_not_of("0123456789", neg) == std::string::npos) {
    const Record n = Record::parse(s);
    if (n.is_number_integer()) return n;
  }
  return s;
}

std::vector<std::string> keys_of(const Records& rows) {
  std::vector<std::string> k;
  if (!rows.empty())
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) k.push_back(it.key());
  return k;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> csv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
      continue;
    }
    any = true;
    if (c == '"') quoted = true;
    else if (c == ',') {
      row.push_back(std::move(cell));
      cell.clear();
    } else if (c == '\n') {
      row.push_back(std::move(cell));
      cell.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      cell += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted csv field");
  if (any) {
    row.push_back(std::move(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

Records from_table(const std::vector<std::vector<std::string>>& table) {
  Records out;
  if (table.empty()) return out;
  const auto& header = table.front();
  for (std::size_t r = 1; r < table.size(); ++r) {
    if (table[r].size() != header.size())
      throw ParseError("row " + std::to_string(r) + " has " + std::to_string(table[r].size()) + " fields, expected " +
                       std::to_string(header.size()));
    Record rec = Record::object();
    for (std::size_t c = 0; c < header.size(); ++c) rec[header[c]] = cell_value(table[r][c]);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

std::string emit(const Records& rows, Format f) {
  std::ostringstream os;
  const auto keys = keys_of(rows);
  switch (f) {
    case Format::json: {
      Record arr = Record::array();
      for (const auto& r : rows) arr.push_back(r);
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::csv:
      if (keys.empty()) break;
      for (std::size_t c = 0; c < keys.size(); ++c) os << (c ? "," : "") << csv_quote(keys[c]);
      os << '\n';
      for (const auto& r : rows) {
        for (std::size_t c = 0; c < keys.size(); ++c) os << (c ? "," : "") << csv_quote(cell_text(r.at(keys[c])));
        os << '\n';
      }
      break;
    case Format::text:
      if (keys.empty()) break;
      os << '#';
      for (std::size_t c = 0; c < keys.size(); ++c) os << (c ? "\t" : "") << keys[c];
      os << '\n';
      for (const auto& r : rows) {
        for (std::size_t c = 0; c < keys.size(); ++c) {
          const auto s = cell_text(r.at(keys[c]));
          if (s.find_first_of("\t\n") != std::string::npos) throw Error("text output cannot hold tabs or newlines");
          os << (c ? "\t" : "") << s;
        }
        os << '\n';
      }
      break;
  }
  return os.str();
}

Records parse(std::string_view text, Format f) {
  switch (f) {
    case Format::json: {
      Record doc;
      try {
        doc = Record::parse(text);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
      }
      if (!doc.is_array()) throw ParseError("expected a json array");
      return Records(doc.begin(), doc.end());
    }
    case Format::csv: return from_table(csv_rows(text));
    case Format::text: {
      std::vector<std::vector<std::string>> table;
      std::istringstream is{std::string(text)};
      std::string line;
      while (std::getline(is, line)) {
        if (table.empty()) {
          if (line.empty() || line[0] != '#') throw ParseError("text output starts with a '#' header");
          line.erase(0, 1);
        }
        std::vector<std::string> cells;
        std::size_t pos = 0;
        for (;;) {
          const auto tab = line.find('\t', pos);
          cells.push_back(line.substr(pos, tab - pos));
          if (tab == std::string::npos) break;
          pos = tab + 1;
        }
        table.push_back(std::move(cells));
      }
      return from_table(table);
    }
  }
  return {};
}

}  // namespace heis::cli
