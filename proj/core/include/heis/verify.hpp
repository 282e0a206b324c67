#pragma once

#include <string>
#include <vector>

namespace heis::verify {

struct Check {
  std::string theorem;
  int n = 0;
  int q = 0;
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

// bell-thm, heis-thm, del-thm, deg-cor, fe-thm, c-irr-thm, c-heis-thm, tech-lem1, alt-thm
const std::vector<std::string>& theorem_ids();

// Checks of one theorem at one (n, q). For tech-lem1, n is the parameter d.
// For fe-thm, c-irr-thm and c-heis-thm the group is U_{n+1}.
std::vector<Check> run(const std::string& theorem, int n, int q);

}  // namespace heis::verify
