#include "msgpt/test_count.hpp"

#include <ostream>
#include <stdexcept>

namespace msgpt {

std::int64_t TestCount::value() const {
  if (is_unreachable()) throw std::logic_error("TestCount::value() on Unreachable");
  return value_;
}

std::string TestCount::to_string() const {
  return is_finite() ? std::to_string(value_) : std::string("inf");
}

std::ostream& operator<<(std::ostream& os, TestCount count) {
  return os << count.to_string();
}

}  // namespace msgpt
