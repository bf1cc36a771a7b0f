#ifndef HFLKIT_SATELLITE_HPP
#define HFLKIT_SATELLITE_HPP

#include <cstdint>

#include "hflkit/graded_complex.hpp"
#include "hflkit/laurent.hpp"

namespace hflkit {

/// Companion K, pattern L in the solid torus, and L's winding number.
struct SatelliteSpec {
  LaurentPoly companion_alexander;
  LaurentPoly pattern_alexander;
  std::int64_t winding = 0;

  /// Throws std::invalid_argument unless both polynomials are nonzero and
  /// symmetric up to ±t^k.
  void validate() const;
};

/// Δ_K(t^w) · Δ_L(t), in symmetric form with positive top coefficient.
LaurentPoly satellite_alexander(const SatelliteSpec& spec);

/// Σ_{k=-n}^{n} (-1)^(n+k) t^k.
LaurentPoly torus_alexander(int n);

/// HFK-hat of the Whitehead double of T(2,2n+1) in Spin^c class 1: the
/// longitude homology summed over classes, Maslov shifted by +1/2.
HomologyTable whitehead_hfk_one(int n);

/// Expected ranks: 2 at n, n-2, ..., -n+2 and 2n at -n+1.
HomologyTable whitehead_expected_table(int n);

}  // namespace hflkit

#endif  // HFLKIT_SATELLITE_HPP
