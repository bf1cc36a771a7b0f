#ifndef HFLKIT_GRADED_COMPLEX_HPP
#define HFLKIT_GRADED_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hflkit/half_int.hpp"
#include "hflkit/int_matrix.hpp"
#include "hflkit/laurent.hpp"

namespace hflkit {

/// Raised when a complex breaks d∘d = 0 or grading compatibility.
class MalformedComplex : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Generator {
  std::string label;
  HalfInt spinc;
  HalfInt maslov;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Free bigraded chain complex over Z.
///
/// Column g of the differential holds the boundary of generator g in the
/// generator basis. Nonzero entries may only connect generators of equal
/// Spin^c class whose Maslov gradings differ by exactly one (target lower).
class GradedComplex {
public:
  GradedComplex() = default;
  GradedComplex(std::vector<Generator> generators, IntMatrix differential);

  /// Zero differential on the given generators.
  explicit GradedComplex(std::vector<Generator> generators);

  const std::vector<Generator>& generators() const { return generators_; }
  const IntMatrix& differential() const { return differential_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }

  /// Number of nonzero differential entries.
  std::size_t arrow_count() const;

  /// Throws MalformedComplex naming the first violation found.
  void validate() const;

private:
  std::vector<Generator> generators_;
  IntMatrix differential_;
};

struct HomologyGroup {
  std::int64_t free_rank = 0;
  std::vector<BigInt> torsion;  // each > 1, d_1 | d_2 | ...

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Bigrading key (Spin^c, Maslov).
struct Bigrading {
  HalfInt spinc;
  HalfInt maslov;
  friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

/// Homology indexed by bigrading. Zero groups are never stored.
class HomologyTable {
public:
  using Entries = std::map<Bigrading, HomologyGroup>;

  /// Adds `group` into the entry at `at`, merging free rank and torsion.
  void add(Bigrading at, const HomologyGroup& group);
  void add_free(HalfInt spinc, HalfInt maslov, std::int64_t rank = 1) { add({spinc, maslov}, {rank, {}}); }

  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  std::int64_t total_rank() const;
  bool has_torsion() const;

  /// Sub-table of one Spin^c class.
  HomologyTable restricted_to(HalfInt spinc) const;

  /// Sum over all Spin^c classes placed in `target_class`, Maslov shifted by `shift`.
  HomologyTable collapse_spinc(HalfInt target_class, HalfInt shift) const;

  /// Merged table of both operands.
  void merge(const HomologyTable& other);

  friend bool operator==(const HomologyTable&, const HomologyTable&) = default;

private:
  Entries entries_;
};

/// Homology of each bigrading via Smith normal form of the graded pieces
/// of the differential. Validates the complex first.
HomologyTable homology(const GradedComplex& complex);

/// Σ (-1)^floor(maslov) t^spinc over generators. Throws MalformedComplex if a
/// Spin^c class mixes integral and half-integral Maslov gradings.
LaurentPoly euler_characteristic(const GradedComplex& complex);

/// Direct sum of complexes; generator order is a's then b's.
GradedComplex direct_sum(const GradedComplex& a, const GradedComplex& b);

}  // namespace hflkit

#endif  // HFLKIT_GRADED_COMPLEX_HPP
