#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>

namespace msgpt {

/// Worst-case test tally: a finite nonnegative count or Unreachable.
///
/// Unreachable is the boundary value of the recursions (a single item with
/// stages still to spend under the strict convention). It absorbs addition,
/// dominates max, and loses every min against a finite value.
class TestCount {
 public:
  constexpr TestCount() = default;  // Unreachable
  constexpr explicit TestCount(std::int64_t value) : value_(value) {}

  static constexpr TestCount unreachable() { return TestCount(); }
  static constexpr TestCount finite(std::int64_t value) { return TestCount(value); }

  constexpr bool is_finite() const { return value_ != kUnreachable; }
  constexpr bool is_unreachable() const { return value_ == kUnreachable; }

  // Throws std::logic_error on Unreachable.
  std::int64_t value() const;
  constexpr std::int64_t value_or(std::int64_t fallback) const {
    return is_finite() ? value_ : fallback;
  }

  std::string to_string() const;

  friend constexpr TestCount operator+(TestCount a, TestCount b) {
    if (a.is_unreachable() || b.is_unreachable()) return {};
    return TestCount(a.value_ + b.value_);
  }
  friend constexpr TestCount operator+(TestCount a, std::int64_t b) {
    return a + TestCount(b);
  }
  friend constexpr TestCount operator+(std::int64_t a, TestCount b) {
    return TestCount(a) + b;
  }
  TestCount& operator+=(TestCount other) { return *this = *this + other; }

  // Unreachable compares greater than every finite value.
  friend constexpr auto operator<=>(TestCount a, TestCount b) = default;
  friend constexpr bool operator==(TestCount a, TestCount b) = default;

 private:
  static constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();
  std::int64_t value_ = kUnreachable;
};

constexpr TestCount max(TestCount a, TestCount b) { return a < b ? b : a; }
constexpr TestCount min(TestCount a, TestCount b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, TestCount count);

}  // namespace msgpt
