#include "hflkit/satellite.hpp"

#include <stdexcept>

#include "hflkit/longitude.hpp"

namespace hflkit {

namespace {

void require_symmetric(const LaurentPoly& p, const char* what) {
  if (p.is_zero()) throw std::invalid_argument(std::string(what) + " polynomial is zero");
  try {
    (void)laurent_symmetrize(p);
  } catch (const std::domain_error&) {
    throw std::invalid_argument(std::string(what) + " polynomial is not symmetric up to a unit: " + p.to_string());
  }
}

}  // namespace

void SatelliteSpec::validate() const {
  require_symmetric(companion_alexander, "companion");
  require_symmetric(pattern_alexander, "pattern");
}

LaurentPoly satellite_alexander(const SatelliteSpec& spec) {
  spec.validate();
  return laurent_symmetrize(laurent_mul(laurent_substitute(spec.companion_alexander, spec.winding),
                                        spec.pattern_alexander));
}

LaurentPoly torus_alexander(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
  LaurentPoly p;
  for (int k = -n; k <= n; ++k) p += LaurentPoly::monomial((n + k) % 2 == 0 ? 1 : -1, HalfInt::from_int(k));
  return p;
}

HomologyTable whitehead_hfk_one(int n) {
  return hfl_compute(n).collapse_spinc(HalfInt::from_int(1), HalfInt::from_twice(1));
}

HomologyTable whitehead_expected_table(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
  HomologyTable table;
  const HalfInt one = HalfInt::from_int(1);
  for (int mu = n; mu >= -n + 2; mu -= 2) table.add_free(one, HalfInt::from_int(mu), 2);
  table.add_free(one, HalfInt::from_int(-n + 1), 2 * n);
  return table;
}

}  // namespace hflkit
