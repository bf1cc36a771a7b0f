#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hflkit/complex_json.hpp"
#include "hflkit/graded_complex.hpp"
#include "hflkit/half_int.hpp"
#include "hflkit/laurent.hpp"
#include "hflkit/smith.hpp"
#include "oracles.hpp"
#include "random_complexes.hpp"

using namespace hflkit;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (int v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

HalfInt h(std::int64_t twice) { return HalfInt::from_twice(twice); }

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

void check_smith(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  CHECK(snf.U * a * snf.V == snf.D);
  CHECK(abs(oracle::determinant(snf.U)) == 1);
  CHECK(abs(oracle::determinant(snf.V)) == 1);
  for (Eigen::Index i = 0; i < snf.D.rows(); ++i)
    for (Eigen::Index j = 0; j < snf.D.cols(); ++j)
      if (i != j) CHECK(snf.D(i, j) == 0);
  const auto factors = snf.invariant_factors();
  for (std::size_t k = 0; k < factors.size(); ++k) {
    CHECK(factors[k] > 0);
    if (k > 0) CHECK(factors[k] % factors[k - 1] == 0);
  }
  CHECK(snf.rank() == oracle::rational_rank(a));
}

}  // namespace

TEST_CASE("HalfInt parsing and arithmetic") {
  CHECK(HalfInt::parse("3/2") == h(3));
  CHECK(HalfInt::parse("-1/2") == h(-1));
  CHECK(HalfInt::parse("4") == HalfInt::from_int(4));
  CHECK(HalfInt::parse("+5/2") == h(5));
  CHECK_THROWS_AS(HalfInt::parse("1/3"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse(""), std::invalid_argument);

  CHECK(h(-3).to_string() == "-3/2");
  CHECK(h(4).to_string() == "2");
  CHECK(h(-1).floor() == -1);
  CHECK(h(1).floor() == 0);
  CHECK(h(-4).floor() == -2);
  CHECK(h(1) + h(1) == HalfInt::from_int(1));
  CHECK(h(3) * -3 == h(-9));
  CHECK(h(-1) < h(1));
  CHECK_FALSE(h(3).is_integer());
}

TEST_CASE("smith_normal_form on the listed examples") {
  SUBCASE("identity") {
    const IntMatrix id = IntMatrix::Identity(2, 2);
    const auto snf = smith_normal_form(id);
    CHECK(snf.D == id);
    CHECK(snf.U == id);
    CHECK(snf.V == id);
  }
  SUBCASE("[[1,2],[3,4]] -> diag(1, 2)") {
    const auto snf = smith_normal_form(mat({{1, 2}, {3, 4}}));
    CHECK(snf.D == mat({{1, 0}, {0, 2}}));
    check_smith(mat({{1, 2}, {3, 4}}));
  }
  SUBCASE("[[2,4],[4,8]] -> diag(2, 0)") {
    const auto snf = smith_normal_form(mat({{2, 4}, {4, 8}}));
    CHECK(snf.D == mat({{2, 0}, {0, 0}}));
  }
  SUBCASE("empty and non-square shapes") {
    CHECK(smith_normal_form(IntMatrix(0, 0)).D.size() == 0);
    CHECK(smith_normal_form(IntMatrix(0, 3)).V.rows() == 3);
    check_smith(mat({{6, 4, 0}, {0, 0, 10}}));
    check_smith(mat({{0, 0}, {0, 0}, {0, 0}}));
  }
  SUBCASE("divisibility fix-up: diag(2, 3) -> diag(1, 6)") {
    const auto snf = smith_normal_form(mat({{2, 0}, {0, 3}}));
    CHECK(snf.D == mat({{1, 0}, {0, 6}}));
  }
  SUBCASE("works for machine integers too") {
    Matrix<long long> a(2, 2);
    a << 4, 6, 6, 4;
    const auto snf = smith_normal_form(a);
    CHECK(snf.D(0, 0) == 2);
    CHECK(snf.D(1, 1) == 10);
    CHECK(snf.U * a * snf.V == snf.D);
  }
}

TEST_CASE("smith_normal_form property: invariant factors match determinantal divisors") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 150; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, dim(rng), dim(rng), 9);
    check_smith(a);
    const auto factors = smith_normal_form(a).invariant_factors();
    BigInt product = 1;
    for (const auto& d : factors) product *= d;
    CHECK(product == oracle::minor_gcd(a, static_cast<int>(factors.size())));
  }
}

TEST_CASE("smith_normal_form handles entries beyond 64 bits") {
  IntMatrix a(2, 2);
  const BigInt big("123456789012345678901234567890");
  a << big, BigInt(big * 2), BigInt(big * 3), BigInt(big * 4 + 1);
  check_smith(a);
}

TEST_CASE("homology of small complexes") {
  SUBCASE("zero differential") {
    const GradedComplex c({{"a", h(1), HalfInt::from_int(0)}, {"b", h(1), HalfInt::from_int(1)}});
    const HomologyTable t = homology(c);
    CHECK(t.size() == 2);
    CHECK(t.entries().at({h(1), HalfInt::from_int(0)}) == HomologyGroup{1, {}});
    CHECK(t.entries().at({h(1), HalfInt::from_int(1)}) == HomologyGroup{1, {}});
  }
  SUBCASE("acyclic pair") {
    IntMatrix d = IntMatrix::Zero(2, 2);
    d(1, 0) = 1;
    const GradedComplex c({{"x", h(1), HalfInt::from_int(1)}, {"y", h(1), HalfInt::from_int(0)}}, d);
    CHECK(homology(c).empty());
    CHECK(euler_characteristic(c).is_zero());
  }
  SUBCASE("coefficient 2 leaves Z/2 at the target") {
    IntMatrix d = IntMatrix::Zero(2, 2);
    d(1, 0) = 2;
    const GradedComplex c({{"x", h(1), HalfInt::from_int(1)}, {"y", h(1), HalfInt::from_int(0)}}, d);
    const HomologyTable t = homology(c);
    REQUIRE(t.size() == 1);
    const auto& [key, group] = *t.entries().begin();
    CHECK(key.maslov == HalfInt::from_int(0));
    CHECK(group.free_rank == 0);
    REQUIRE(group.torsion.size() == 1);
    CHECK(group.torsion[0] == 2);
  }
}

TEST_CASE("homology rejects malformed complexes") {
  SUBCASE("Maslov drop of 2") {
    IntMatrix d = IntMatrix::Zero(2, 2);
    d(1, 0) = 1;
    const GradedComplex c({{"x", h(1), HalfInt::from_int(2)}, {"y", h(1), HalfInt::from_int(0)}}, d);
    CHECK_THROWS_AS(homology(c), MalformedComplex);
  }
  SUBCASE("arrow across Spin^c classes") {
    IntMatrix d = IntMatrix::Zero(2, 2);
    d(1, 0) = 1;
    const GradedComplex c({{"x", h(1), HalfInt::from_int(1)}, {"y", h(3), HalfInt::from_int(0)}}, d);
    CHECK_THROWS_AS(homology(c), MalformedComplex);
  }
  SUBCASE("d∘d != 0") {
    IntMatrix d = IntMatrix::Zero(3, 3);
    d(1, 0) = 1;
    d(2, 1) = 1;
    const GradedComplex c({{"a", h(1), HalfInt::from_int(2)},
                           {"b", h(1), HalfInt::from_int(1)},
                           {"c", h(1), HalfInt::from_int(0)}},
                          d);
    CHECK_THROWS_AS(homology(c), MalformedComplex);
  }
  SUBCASE("wrong matrix shape") {
    CHECK_THROWS_AS(GradedComplex({{"a", h(1), h(0)}}, IntMatrix::Zero(2, 2)), MalformedComplex);
  }
}

TEST_CASE("homology of random mapping cones matches the rational-rank oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const GradedComplex c = oracle::random_cone_complex(rng);
    const IntMatrix& d = c.differential();
    if (c.size() > 0) CHECK((d * d).isZero());
    const HomologyTable t = homology(c);

    std::map<Bigrading, std::vector<Eigen::Index>> blocks;
    for (std::size_t g = 0; g < c.size(); ++g)
      blocks[{c.generators()[g].spinc, c.generators()[g].maslov}].push_back(static_cast<Eigen::Index>(g));
    const auto rank_between = [&](const Bigrading& from, const Bigrading& to) -> Eigen::Index {
      if (!blocks.contains(from) || !blocks.contains(to)) return 0;
      return oracle::rational_rank(d(blocks[to], blocks[from]));
    };
    for (const auto& [key, idx] : blocks) {
      const Bigrading below{key.spinc, key.maslov - HalfInt::from_int(1)};
      const Bigrading above{key.spinc, key.maslov + HalfInt::from_int(1)};
      const auto expected = static_cast<std::int64_t>(idx.size()) - rank_between(key, below) - rank_between(above, key);
      const auto it = t.entries().find(key);
      CHECK((it == t.entries().end() ? 0 : it->second.free_rank) == expected);
    }
  }
}

TEST_CASE("euler_characteristic") {
  SUBCASE("state complex of T(2,3)") {
    const GradedComplex c({{"z1", HalfInt::from_int(-1), HalfInt::from_int(0)},
                           {"z2", HalfInt::from_int(0), HalfInt::from_int(1)},
                           {"z3", HalfInt::from_int(1), HalfInt::from_int(2)}});
    CHECK(euler_characteristic(c) == P("t^-1 - 1 + t"));
  }
  SUBCASE("mixed parity in one class is rejected") {
    const GradedComplex c({{"a", h(1), HalfInt::from_int(0)}, {"b", h(1), h(1)}});
    CHECK_THROWS_AS(euler_characteristic(c), MalformedComplex);
  }
  SUBCASE("invariant under adding an acyclic pair") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
      const GradedComplex c = oracle::random_cone_complex(rng);
      IntMatrix d = IntMatrix::Zero(2, 2);
      d(1, 0) = trial % 2 == 0 ? 1 : -1;
      const GradedComplex pair({{"u", h(1), h(1 + 2 * (trial % 3))}, {"v", h(1), h(-1 + 2 * (trial % 3))}}, d);
      CHECK(euler_characteristic(direct_sum(c, pair)) == euler_characteristic(c));
    }
  }
}

TEST_CASE("HomologyTable merging normalises torsion") {
  HomologyTable t;
  t.add({h(1), h(1)}, {0, {BigInt(2)}});
  t.add({h(1), h(1)}, {1, {BigInt(3)}});
  const auto& g = t.entries().at({h(1), h(1)});
  CHECK(g.free_rank == 1);
  REQUIRE(g.torsion.size() == 1);
  CHECK(g.torsion[0] == 6);
  t.add({h(3), h(1)}, {});
  CHECK(t.size() == 1);
}

TEST_CASE("Laurent polynomial arithmetic") {
  CHECK(P("t^-1 - 1 + t") * P("1") == P("t^-1 - 1 + t"));
  CHECK(P("t - 1") * P("t + 1") == P("t^2 - 1"));
  CHECK(P("t^-1 - 1 + t") * P("t^-1 - 1 + t") == P("t^-2 - 2t^-1 + 3 - 2t + t^2"));
  CHECK(laurent_add(P("t"), P("-t")).is_zero());
  CHECK(P("t^(1/2)") * P("t^{-1/2}") == P("1"));
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(P("t^-2 - t^-1 + 1 - t + t^2").to_string() == "t^-2 - t^-1 + 1 - t + t^2");
  CHECK(P("3*t^-1/2 - 2").to_string() == "3t^-1/2 - 2");
  CHECK(P("t^-1-1+t") == P("t^-1 - 1 + t"));
}

TEST_CASE("Laurent parsing rejects garbage") {
  CHECK_THROWS_AS(P(""), std::invalid_argument);
  CHECK_THROWS_AS(P("t^"), std::invalid_argument);
  CHECK_THROWS_AS(P("t t"), std::invalid_argument);
  CHECK_THROWS_AS(P("x + 1"), std::invalid_argument);
  CHECK_THROWS_AS(P("t^(1/2"), std::invalid_argument);
  CHECK_THROWS_AS(P("t^1/3"), std::invalid_argument);
}

TEST_CASE("laurent_substitute") {
  CHECK(laurent_substitute(P("t"), 3) == P("t^3"));
  CHECK(laurent_substitute(P("t^-1 - 1 + t"), 0) == P("1"));
  CHECK(laurent_substitute(P("t^-1 - 1 + t"), -1) == P("t^-1 - 1 + t"));
  CHECK(laurent_substitute(P("t^1/2"), 3) == P("t^3/2"));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-4, 4), expo(-5, 5), factor(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly p;
    for (int k = 0; k < 4; ++k) p += LaurentPoly::monomial(coef(rng), HalfInt::from_twice(expo(rng)));
    int a = 0, b = 0;
    while (a == 0) a = factor(rng);
    while (b == 0) b = factor(rng);
    CHECK(laurent_substitute(laurent_substitute(p, a), b) == laurent_substitute(p, a * b));
  }
}

TEST_CASE("laurent_equal_up_to_unit") {
  CHECK(laurent_equal_up_to_unit(P("t - 1"), P("1 - t^-1")));
  CHECK_FALSE(laurent_equal_up_to_unit(P("t - 1"), P("t + 1")));
  CHECK(laurent_equal_up_to_unit(LaurentPoly(), LaurentPoly()));
  CHECK_FALSE(laurent_equal_up_to_unit(LaurentPoly(), P("1")));
  CHECK(laurent_equal_up_to_unit(P("t^1/2 - t^3/2"), P("1 - t")));
}

TEST_CASE("laurent_symmetrize") {
  CHECK(laurent_symmetrize(P("1 - t + t^2")) == P("t^-1 - 1 + t"));
  CHECK(laurent_symmetrize(P("-t^3")) == P("1"));
  CHECK_THROWS_AS(laurent_symmetrize(P("1 + 2t")), std::domain_error);
  CHECK_THROWS_AS(laurent_symmetrize(P("1 + 2t + t^3")), std::domain_error);
}

TEST_CASE("GradedComplex JSON round trip preserves the complex") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const GradedComplex c = oracle::random_cone_complex(rng);
    const GradedComplex back = complex_from_json(nlohmann::json::parse(to_json(c).dump()));
    CHECK(back.generators() == c.generators());
    CHECK(back.differential() == c.differential());
  }
}

TEST_CASE("GradedComplex JSON accepts shorthand and rejects bad input") {
  const auto j = nlohmann::json::parse(R"({
    "generators": [{"spinc": "1/2", "maslov": 1}, {"spinc": {"twice": 1}, "maslov": "0"}],
    "differential": [{"from": 0, "to": 1, "coefficient": 2}]
  })");
  const GradedComplex c = complex_from_json(j);
  CHECK(c.generators()[0].label == "g0");
  CHECK(c.differential()(1, 0) == 2);

  CHECK_THROWS_AS(complex_from_json(nlohmann::json::parse(R"({"generators": 3})")), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_json(nlohmann::json::parse(
                      R"({"generators": [{"spinc": "1/2", "maslov": 0}], "differential": [{"from": 0, "to": 4, "coefficient": 1}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(half_int_from_json(nlohmann::json::parse(R"({"twice": 3, "value": "1/2"})")), std::invalid_argument);
}
