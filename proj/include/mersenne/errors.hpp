#pragma once

#include <stdexcept>
#include <string>

namespace mersenne {

/// Operands built over different moduli (p) were combined.
class ModulusMismatch : public std::invalid_argument {
public:
  ModulusMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("modulus mismatch: p=" + std::to_string(lhs) +
                              " vs p=" + std::to_string(rhs)) {}
};

/// Inversion requested for a non-unit.
class NotInvertible : public std::domain_error {
public:
  explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

/// An exhaustive scan would exceed its configured budget. Scans never
/// truncate silently; they raise this instead.
class BudgetExceeded : public std::length_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::length_error(what) {}
};

}  // namespace mersenne
