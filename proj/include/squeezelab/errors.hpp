#pragma once

#include <stdexcept>
#include <string>

namespace squeezelab {

/// An adaptive procedure (truncation, scan) hit its cap without meeting its
/// stopping rule.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A truncated-basis request falls outside the region where the truncation
/// is known to be accurate.
class TrustRegionError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace squeezelab
