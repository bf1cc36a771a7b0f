#include "hflkit/graded_complex.hpp"

#include <set>

#include "hflkit/smith.hpp"

namespace hflkit {

GradedComplex::GradedComplex(std::vector<Generator> generators, IntMatrix differential)
    : generators_(std::move(generators)), differential_(std::move(differential)) {
  const auto n = static_cast<Eigen::Index>(generators_.size());
  if (differential_.rows() != n || differential_.cols() != n) {
    throw MalformedComplex("differential is " + std::to_string(differential_.rows()) + "x" +
                           std::to_string(differential_.cols()) + " but there are " + std::to_string(n) +
                           " generators");
  }
}

GradedComplex::GradedComplex(std::vector<Generator> generators)
    : GradedComplex(generators, IntMatrix::Zero(static_cast<Eigen::Index>(generators.size()),
                                                static_cast<Eigen::Index>(generators.size()))) {}

std::size_t GradedComplex::arrow_count() const {
  std::size_t count = 0;
  for (Eigen::Index j = 0; j < differential_.cols(); ++j) {
    for (Eigen::Index i = 0; i < differential_.rows(); ++i) {
      if (differential_(i, j) != 0) ++count;
    }
  }
  return count;
}

void GradedComplex::validate() const {
  const Eigen::Index n = differential_.cols();
  for (Eigen::Index g = 0; g < n; ++g) {
    for (Eigen::Index h = 0; h < n; ++h) {
      if (differential_(h, g) == 0) continue;
      const Generator& src = generators_[g];
      const Generator& dst = generators_[h];
      if (src.spinc != dst.spinc) {
        throw MalformedComplex("arrow " + src.label + " -> " + dst.label + " changes Spin^c class");
      }
      if (src.maslov - dst.maslov != HalfInt::from_int(1)) {
        throw MalformedComplex("arrow " + src.label + " -> " + dst.label + " does not drop Maslov grading by 1");
      }
    }
  }
  if (n == 0) return;
  const IntMatrix square = differential_ * differential_;
  for (Eigen::Index g = 0; g < n; ++g) {
    for (Eigen::Index h = 0; h < n; ++h) {
      if (square(h, g) != 0) {
        throw MalformedComplex("d∘d != 0 on generator " + generators_[g].label + " (component along " +
                               generators_[h].label + ")");
      }
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

std::vector<BigInt> normalise_torsion(const std::vector<BigInt>& factors) {
  if (factors.size() < 2) return factors;
  const auto k = static_cast<Eigen::Index>(factors.size());
  IntMatrix diag = IntMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) diag(i, i) = factors[static_cast<std::size_t>(i)];
  std::vector<BigInt> out;
  for (const BigInt& d : smith_normal_form(diag).invariant_factors()) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

}  // namespace

void HomologyTable::add(Bigrading at, const HomologyGroup& group) {
  if (group.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(at, group);
  if (inserted) return;
  it->second.free_rank += group.free_rank;
  std::vector<BigInt> torsion = it->second.torsion;
  torsion.insert(torsion.end(), group.torsion.begin(), group.torsion.end());
  it->second.torsion = normalise_torsion(torsion);
}

std::int64_t HomologyTable::total_rank() const {
  std::int64_t sum = 0;
  for (const auto& [key, group] : entries_) sum += group.free_rank;
  return sum;
}

bool HomologyTable::has_torsion() const {
  for (const auto& [key, group] : entries_) {
    if (!group.torsion.empty()) return true;
  }
  return false;
}

HomologyTable HomologyTable::restricted_to(HalfInt spinc) const {
  HomologyTable out;
  for (const auto& [key, group] : entries_) {
    if (key.spinc == spinc) out.entries_.emplace(key, group);
  }
  return out;
}

HomologyTable HomologyTable::collapse_spinc(HalfInt target_class, HalfInt shift) const {
  HomologyTable out;
  for (const auto& [key, group] : entries_) out.add({target_class, key.maslov + shift}, group);
  return out;
}

void HomologyTable::merge(const HomologyTable& other) {
  for (const auto& [key, group] : other.entries_) add(key, group);
}

// ---------------------------------------------------------------------------

HomologyTable homology(const GradedComplex& complex) {
  complex.validate();

  // Generator indices per bigrading.
  std::map<Bigrading, std::vector<Eigen::Index>> blocks;
  const auto& gens = complex.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    blocks[{gens[g].spinc, gens[g].maslov}].push_back(static_cast<Eigen::Index>(g));
  }

  const IntMatrix& d = complex.differential();
  const auto piece = [&](const std::vector<Eigen::Index>& from, const std::vector<Eigen::Index>& to) {
    IntMatrix m(static_cast<Eigen::Index>(to.size()), static_cast<Eigen::Index>(from.size()));
    for (std::size_t c = 0; c < from.size(); ++c) {
      for (std::size_t r = 0; r < to.size(); ++r) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = d(to[r], from[c]);
      }
    }
    return m;
  };
  static const std::vector<Eigen::Index> kNone;
  const auto block_at = [&](Bigrading key) -> const std::vector<Eigen::Index>& {
    auto it = blocks.find(key);
    return it == blocks.end() ? kNone : it->second;
  };

  HomologyTable table;
  for (const auto& [key, here] : blocks) {
    const HalfInt one = HalfInt::from_int(1);
    const auto& below = block_at({key.spinc, key.maslov - one});
    const auto& above = block_at({key.spinc, key.maslov + one});

    // Outgoing d: C_m -> C_{m-1}, incoming d: C_{m+1} -> C_m.
    const Eigen::Index out_rank = below.empty() ? 0 : smith_normal_form(piece(here, below)).rank();
    HomologyGroup group;
    Eigen::Index in_rank = 0;
    if (!above.empty()) {
      const auto snf = smith_normal_form(piece(above, here));
      in_rank = snf.rank();
      for (const BigInt& factor : snf.invariant_factors()) {
        if (factor > 1) group.torsion.push_back(factor);
      }
    }
    group.free_rank = static_cast<std::int64_t>(here.size()) - out_rank - in_rank;
    table.add(key, group);
  }
  return table;
}

LaurentPoly euler_characteristic(const GradedComplex& complex) {
  std::map<HalfInt, std::set<bool>> parity;
  LaurentPoly chi;
  for (const Generator& g : complex.generators()) {
    parity[g.spinc].insert(g.maslov.is_integer());
    const BigInt sign = (g.maslov.floor() % 2 == 0) ? 1 : -1;
    chi += LaurentPoly::monomial(sign, g.spinc);
  }
  for (const auto& [spinc, kinds] : parity) {
    if (kinds.size() > 1) {
      throw MalformedComplex("Spin^c class " + spinc.to_string() +
                             " mixes integral and half-integral Maslov gradings");
    }
  }
  return chi;
}

GradedComplex direct_sum(const GradedComplex& a, const GradedComplex& b) {
  std::vector<Generator> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  const auto na = static_cast<Eigen::Index>(a.size());
  const auto nb = static_cast<Eigen::Index>(b.size());
  IntMatrix d = IntMatrix::Zero(na + nb, na + nb);
  d.topLeftCorner(na, na) = a.differential();
  d.bottomRightCorner(nb, nb) = b.differential();
  return GradedComplex(std::move(gens), std::move(d));
}

}  // namespace hflkit
