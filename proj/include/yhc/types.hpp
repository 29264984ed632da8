#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace yhc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class TypeTag { A, AStar, B, C, D };

std::string to_string(TypeTag t);
// Accepts A, Astar (also A*, AStar), B, C, D.
std::optional<TypeTag> parse_type(std::string_view s);

// Types whose Weyl group is a plain symmetric group.
inline bool is_type_a(TypeTag t) { return t == TypeTag::A || t == TypeTag::AStar; }

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Group (or nested Weyl group) larger than the configured enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const BigInt& required, std::uint64_t budget);
  const BigInt& required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  BigInt required_;
  std::uint64_t budget_;
};

// A quantity that must be an exact integer turned out not to be.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace yhc
