#ifndef HFLKIT_LONGITUDE_HPP
#define HFLKIT_LONGITUDE_HPP

#include <string>
#include <vector>

#include "hflkit/graded_complex.hpp"
#include "hflkit/half_int.hpp"

namespace hflkit {

/// Generator x_ij = {x_i} ∪ z_j or y_ij = {y_i} ∪ z_j of the longitude
/// complex of T(2,2n+1). i is the winding index of the point on the
/// longitude, j the Kauffman state index.
struct LongitudeGenerator {
  enum class Kind { X, Y };

  Kind kind = Kind::X;
  int i = 1;
  int j = 1;
  int n = 1;

  /// j - i - n - 1/2.
  HalfInt spinc() const { return HalfInt::from_twice(2 * (j - i - n) - 1); }

  /// ±(j - n - 3/2), positive for X.
  HalfInt maslov() const {
    const HalfInt base = HalfInt::from_twice(2 * (j - n) - 3);
    return kind == Kind::X ? base : -base;
  }

  std::string label() const;
  Generator as_generator() const { return {label(), spinc(), maslov()}; }

  friend bool operator==(const LongitudeGenerator&, const LongitudeGenerator&) = default;
};

/// Generators of Spin^c class s, ordered by j then kind (X before Y).
std::vector<LongitudeGenerator> longitude_generators(int n, HalfInt s);

/// CFL-hat(T(2,2n+1), s).
///
/// x_{i,j} with j odd hits x_{i-1,j-1}; y_{i,j} with j odd hits y_{i+1,j+1}.
/// Both arrows pair the same generators the cancellation argument pairs, and
/// both lower the Maslov grading by one. Every coefficient is +1. Classes
/// with |s| > n - 1/2 give the empty complex. Throws std::invalid_argument
/// for n < 1 or integral s.
GradedComplex build_hfl_complex(int n, HalfInt s);

/// Half-integral classes s with |s| <= n - 1/2, ascending.
std::vector<HalfInt> hfl_classes(int n);

/// HFL-hat of every class, computed from the chain complexes.
HomologyTable hfl_compute(int n);

/// Z_(-n+1/2) ⊕ Z_(ε(s)s) per class, ε(s) = (-1)^(n-1/2-s).
HomologyTable hfl_closed_form(int n);

/// ε(s) for a class of T(2,2n+1).
int hfl_epsilon(int n, HalfInt s);

/// Class s and class -s carry the same Maslov data up to an overall shift.
bool verify_symmetry(int n);

/// Rank 2 and no torsion at ±(n-1/2); empty complexes at ±(n+1/2), ±(n+3/2).
bool verify_genus_and_fibered(int n);

}  // namespace hflkit

#endif  // HFLKIT_LONGITUDE_HPP
