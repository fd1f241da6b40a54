#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace squeezelab {

/// |m, r> = S(r)|m>: Fock state m squeezed by the real parameter r.
struct SqueezedNumberState {
  int m = 0;
  double r = 0.0;
};

/// Throws std::invalid_argument unless m >= 0 and r is finite.
void validate(const SqueezedNumberState& state);

enum class Representation { photon, position, momentum, q_slice };

std::string to_string(Representation rep);

struct TableMeta {
  SqueezedNumberState state;
  Representation representation = Representation::photon;
  /// Only entries with index parity equal to state.m parity can be nonzero.
  bool parity_gapped = false;
  /// Last index evaluated (photon tables) or number of samples.
  std::size_t truncation = 0;
  /// Probability mass captured by the table (photon tables), else 0.
  double captured_mass = 0.0;
};

/// Ordered samples of a probability (or density) against a coordinate.
/// coords are strictly increasing and probs are nonnegative.
struct DistributionTable {
  std::vector<double> coords;
  std::vector<double> probs;
  TableMeta meta;

  std::size_t size() const { return coords.size(); }
};

/// Rectangular sampling of the complex plane: n_re points on [re_min, re_max]
/// and n_im points on [im_min, im_max], endpoints included. An axis with a
/// single point requires min == max.
struct GridSpec {
  double re_min = -4.0;
  double re_max = 4.0;
  double im_min = -4.0;
  double im_max = 4.0;
  int n_re = 81;
  int n_im = 81;

  void validate() const;
  double re_at(int i) const;
  double im_at(int j) const;
  std::size_t size() const { return static_cast<std::size_t>(n_re) * static_cast<std::size_t>(n_im); }
};

}  // namespace squeezelab
