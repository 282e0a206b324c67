#pragma once

#include <stdexcept>
#include <string>

namespace heis {

// Root of everything the library throws on bad input or exhausted budgets.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrimePower : public Error { public: using Error::Error; };
class TooLarge : public Error { public: using Error::Error; };
class FieldMismatch : public Error { public: using Error::Error; };
class ZeroInverse : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };
class NotAPartition : public Error { public: using Error::Error; };
class NotInFamily : public Error { public: using Error::Error; };
class UnknownFamily : public Error { public: using Error::Error; };
class NonIntegralDivision : public Error { public: using Error::Error; };
class SpaceTooLarge : public Error { public: using Error::Error; };

class NotClassX : public Error {
 public:
  NotClassX(std::size_t block, const std::string& what)
      : Error(what), block_(block) {}
  // zero-based index of the first block that is not of kind a, b or c
  std::size_t block() const noexcept { return block_; }

 private:
  std::size_t block_;
};

}  // namespace heis
