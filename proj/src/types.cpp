#include "squeezelab/types.hpp"

#include <cmath>
#include <stdexcept>

namespace squeezelab {

void validate(const SqueezedNumberState& state) {
  if (state.m < 0) throw std::invalid_argument("photon index m must be nonnegative");
  if (!std::isfinite(state.r)) throw std::invalid_argument("squeeze parameter r must be finite");
}

std::string to_string(Representation rep) {
  switch (rep) {
    case Representation::photon: return "photon";
    case Representation::position: return "position";
    case Representation::momentum: return "momentum";
    case Representation::q_slice: return "q_slice";
  }
  return "unknown";
}

namespace {

void validate_axis(double lo, double hi, int n, const char* name) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw std::invalid_argument(std::string(name) + " bounds must be finite");
  if (n <= 0) throw std::invalid_argument(std::string("empty grid along ") + name);
  if (n == 1 && lo != hi) throw std::invalid_argument(std::string("single-point ") + name + " axis needs min == max");
  if (n >= 2 && !(lo < hi)) throw std::invalid_argument(std::string(name) + " axis needs min < max");
}

double axis_at(double lo, double hi, int n, int i) {
  if (n == 1) return lo;
  if (i == n - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace

void GridSpec::validate() const {
  validate_axis(re_min, re_max, n_re, "re");
  validate_axis(im_min, im_max, n_im, "im");
}

double GridSpec::re_at(int i) const { return axis_at(re_min, re_max, n_re, i); }
double GridSpec::im_at(int j) const { return axis_at(im_min, im_max, n_im, j); }

}  // namespace squeezelab
