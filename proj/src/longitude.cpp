#include "hflkit/longitude.hpp"

#include <algorithm>
#include <stdexcept>

namespace hflkit {

namespace {

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
}

// (maslov - min maslov, rank) pairs of one class.
std::vector<std::pair<std::int64_t, std::int64_t>> relative_profile(const HomologyTable& cls) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  if (cls.empty()) return out;
  const HalfInt base = cls.entries().begin()->first.maslov;
  for (const auto& [key, group] : cls.entries()) {
    if (!group.torsion.empty()) return {{-1, -1}};
    out.emplace_back((key.maslov - base).twice(), group.free_rank);
  }
  return out;
}

}  // namespace

std::string LongitudeGenerator::label() const {
  return std::string(kind == Kind::X ? "x" : "y") + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

std::vector<LongitudeGenerator> longitude_generators(int n, HalfInt s) {
  require_n(n);
  if (s.is_integer()) {
    throw std::invalid_argument("Spin^c classes are strictly half-integral, got " + s.to_string());
  }
  std::vector<LongitudeGenerator> out;
  if (s.twice() > 2 * n - 1 || s.twice() < -(2 * n - 1)) return out;
  // j - i = s + n + 1/2
  const std::int64_t offset = (s.twice() + 2 * n + 1) / 2;
  for (int j = 1; j <= 2 * n + 1; ++j) {
    const std::int64_t i = j - offset;
    if (i < 1) continue;
    for (auto kind : {LongitudeGenerator::Kind::X, LongitudeGenerator::Kind::Y}) {
      out.push_back({kind, static_cast<int>(i), j, n});
    }
  }
  return out;
}

GradedComplex build_hfl_complex(int n, HalfInt s) {
  const auto gens = longitude_generators(n, s);
  const auto size = static_cast<Eigen::Index>(gens.size());
  const auto find = [&](LongitudeGenerator::Kind kind, int i, int j) -> Eigen::Index {
    for (Eigen::Index k = 0; k < size; ++k) {
      const auto& g = gens[static_cast<std::size_t>(k)];
      if (g.kind == kind && g.i == i && g.j == j) return k;
    }
    return -1;
  };

  IntMatrix d = IntMatrix::Zero(size, size);
  for (Eigen::Index col = 0; col < size; ++col) {
    const auto& g = gens[static_cast<std::size_t>(col)];
    if (g.j % 2 == 0) continue;
    const Eigen::Index row = g.kind == LongitudeGenerator::Kind::X ? find(g.kind, g.i - 1, g.j - 1)
                                                                   : find(g.kind, g.i + 1, g.j + 1);
    if (row >= 0) d(row, col) = 1;
  }

  std::vector<Generator> labelled;
  labelled.reserve(gens.size());
  for (const auto& g : gens) labelled.push_back(g.as_generator());
  return GradedComplex(std::move(labelled), std::move(d));
}

std::vector<HalfInt> hfl_classes(int n) {
  require_n(n);
  std::vector<HalfInt> out;
  for (std::int64_t twice = -(2 * n - 1); twice <= 2 * n - 1; twice += 2) out.push_back(HalfInt::from_twice(twice));
  return out;
}

HomologyTable hfl_compute(int n) {
  HomologyTable table;
  for (HalfInt s : hfl_classes(n)) table.merge(homology(build_hfl_complex(n, s)));
  return table;
}

int hfl_epsilon(int n, HalfInt s) {
  const HalfInt exponent = HalfInt::from_twice(2 * n - 1) - s;
  return exponent.floor() % 2 == 0 ? 1 : -1;
}

HomologyTable hfl_closed_form(int n) {
  HomologyTable table;
  const HalfInt bottom = HalfInt::from_twice(-2 * n + 1);
  for (HalfInt s : hfl_classes(n)) {
    table.add_free(s, bottom);
    table.add_free(s, s * hfl_epsilon(n, s));
  }
  return table;
}

bool verify_symmetry(int n) {
  const HomologyTable table = hfl_compute(n);
  // One class beyond the genus on each side, so vanishing is compared too.
  for (std::int64_t twice = 1; twice <= 2 * n + 1; twice += 2) {
    const HalfInt s = HalfInt::from_twice(twice);
    if (relative_profile(table.restricted_to(s)) != relative_profile(table.restricted_to(-s))) return false;
  }
  return true;
}

bool verify_genus_and_fibered(int n) {
  const HomologyTable table = hfl_compute(n);
  const HalfInt top = HalfInt::from_twice(2 * n - 1);
  for (HalfInt s : {top, -top}) {
    const HomologyTable cls = table.restricted_to(s);
    if (cls.total_rank() != 2 || cls.has_torsion()) return false;
  }
  for (std::int64_t twice : {2 * n + 1, 2 * n + 3}) {
    for (HalfInt s : {HalfInt::from_twice(twice), HalfInt::from_twice(-twice)}) {
      if (!build_hfl_complex(n, s).empty()) return false;
    }
  }
  return true;
}

}  // namespace hflkit
