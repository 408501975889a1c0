#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace degflag {

using BigInt = boost::multiprecision::cpp_int;

std::string to_decimal(const BigInt& value);
BigInt parse_decimal(const std::string& text);

// Error hierarchy. The C API maps each class onto one status code.

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Caller supplied a value outside an operation's precondition.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

// Input has the wrong shape (out-of-grid box, not a permutation, subset of
// the wrong size). Distinct from a well-formed object that breaks a
// combinatorial constraint, which is reported rather than thrown.
class StructuralError : public Error {
public:
  using Error::Error;
};

// An identity that must hold by construction failed; indicates a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

// A configurable generation cap was exceeded.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

struct Violation {
  std::string constraint;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// All k-subsets of {1..n}, each sorted, in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

// Sign of the permutation sorting `indices`; 0 if an index repeats.
int sort_with_sign(std::vector<int>& indices);

}  // namespace degflag
