#pragma once

#include <stdexcept>

namespace msgpt {

/// A strategy finished its stages without isolating every defective.
class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or table would exceed its configured budget. Guards are
/// hard errors; nothing is silently truncated.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace msgpt
