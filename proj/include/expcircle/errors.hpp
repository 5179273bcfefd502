#pragma once

#include <stdexcept>
#include <string>

namespace expcircle {

// Input lies on the prism model's singular facet (x_1 = 0 and x_k = 1),
// where the simplex-to-prism coordinate change has a vanishing denominator.
class FakeFaceError : public std::domain_error {
 public:
  FakeFaceError()
      : std::domain_error(
            "fake face: coordinate change is singular where x_1 = 0 and x_k = 1") {}
};

// The per-dimension matrices fail the boundary commutation test at `dimension`.
class NotAChainMapError : public std::domain_error {
 public:
  explicit NotAChainMapError(long dim)
      : std::domain_error("not a chain map: boundary commutation fails at dimension " +
                          std::to_string(dim)),
        dimension(dim) {}
  long dimension;
};

class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(const std::string& needed, unsigned long long budget)
      : std::runtime_error("enumeration budget exceeded: need " + needed +
                           " tuples, budget " + std::to_string(budget)) {}
};

}  // namespace expcircle
