#include "thompson/measures.hpp"

#include <doctest.h>

#include <string>

#include "test_util.hpp"

using namespace thompson;

namespace {

EPWord ep(const std::string& pre, const std::string& per) {
  return EPWord(BinaryWord(pre), BinaryWord(per));
}

DyadicPoint dy(const std::string& w) { return DyadicPoint(BinaryWord(w)); }

// Independent route to the sup: evaluate defect_at on one representative
// of every cylinder of length L = N + k(s) and keep the first maximizer.
std::pair<Rational, BinaryWord> brute_sup(const PrefixMap& s, long long N) {
  const long long L = N + s.k();
  Rational best(-1);
  std::string best_word;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << L); ++i) {
    std::string p(static_cast<std::size_t>(L), '0');
    for (long long b = 0; b < L; ++b)
      p[static_cast<std::size_t>(b)] = (i >> (L - 1 - b)) & 1 ? '1' : '0';
    Rational d = defect_at(s, EPWord(BinaryWord(p), BinaryWord("0")), N);
    if (d > best) {
      best = d;
      best_word = p;
    }
  }
  return {best, BinaryWord(best_word)};
}

}  // namespace

TEST_CASE("l1 distance on point masses") {
  auto da = FiniteMeasure<DyadicPoint>::point_mass(dy("1"));
  auto db = FiniteMeasure<DyadicPoint>::point_mass(dy("01"));
  CHECK(l1_distance(da, da) == 0);
  CHECK(l1_distance(da, db) == 2);

  FiniteMeasure<DyadicPoint>::WeightMap w;
  w[dy("1")] = Rational(1, 2);
  w[dy("01")] = Rational(1, 2);
  auto mix = FiniteMeasure<DyadicPoint>::from_weights(std::move(w));
  CHECK(l1_distance(mix, da) == 1);
}

TEST_CASE("l1 distance is a metric") {
  Rng rng(11);
  auto random_measure = [&rng]() {
    FiniteMeasure<DyadicPoint>::WeightMap w;
    const std::uint64_t atoms = 1 + rng.below(4);
    for (std::uint64_t i = 0; i < atoms; ++i)
      w[testutil::random_dyadic(rng, 5)] += Rational(1, atoms);
    return FiniteMeasure<DyadicPoint>::from_weights(std::move(w));
  };
  for (int i = 0; i < 50; ++i) {
    auto a = random_measure(), b = random_measure(), c = random_measure();
    CHECK(l1_distance(a, b) == l1_distance(b, a));
    CHECK(l1_distance(a, c) <= l1_distance(a, b) + l1_distance(b, c));
    CHECK(l1_distance(a, a) == 0);
  }
}

TEST_CASE("pushforward sums colliding weights") {
  FiniteMeasure<BinaryWord>::WeightMap w;
  w[BinaryWord("10")] = Rational(1, 2);
  w[BinaryWord("1")] = Rational(1, 2);
  auto m = FiniteMeasure<BinaryWord>::from_weights(std::move(w));

  auto collapsed = pushforward([](const BinaryWord& u) { return DyadicPoint(u); }, m);
  CHECK(collapsed.support_size() == 1);
  CHECK(collapsed.at(dy("1")) == 1);

  auto constant = pushforward([](const BinaryWord&) { return DyadicPoint(); }, m);
  CHECK(constant.at(DyadicPoint()) == 1);

  auto shifted = pushforward([](const BinaryWord& u) { return BinaryWord("1") + u; }, m);
  CHECK(shifted.support_size() == 2);
}

TEST_CASE("mu_N averages the prefix truncations") {
  auto zeros = mu_N(EPWord(), 7);
  CHECK(zeros.support_size() == 1);
  CHECK(zeros.at(DyadicPoint()) == 1);

  auto m = mu_N(ep("1010", "0"), 4);
  CHECK(m.support_size() == 2);
  CHECK(m.at(dy("1")) == Rational(1, 2));
  CHECK(m.at(dy("101")) == Rational(1, 2));

  auto ones = mu_N(ep("", "1"), 2);
  CHECK(ones.at(dy("1")) == Rational(1, 2));
  CHECK(ones.at(dy("11")) == Rational(1, 2));

  CHECK_THROWS_AS(mu_N(EPWord(), 0), Error);
}

TEST_CASE("mu_N depends only on the first N letters") {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    EPWord x = random_epword(rng);
    long long N = 1 + rng.below(10);
    EPWord y = prepend(x.head(static_cast<std::size_t>(N)), random_epword(rng));
    CHECK(l1_distance(mu_N(x, N), mu_N(y, N)) == 0);
  }
}

TEST_CASE("pointwise defects") {
  Rng rng(33);
  PrefixMap half = rot(Rational(1, 2));
  for (int i = 0; i < 30; ++i) {
    EPWord x = random_epword(rng);
    long long N = 1 + rng.below(12);
    CHECK(defect_at(half, x, N) == 0);
    CHECK(defect_at(PrefixMap(), x, N) == 0);
  }
  CHECK(defect_at(gen_A(), ep("", "1"), 4) == Rational(1, 2));
}

TEST_CASE("defect is constant on cylinders of length N + k") {
  Rng rng(55);
  for (int i = 0; i < 30; ++i) {
    PrefixMap s = testutil::random_element(rng, 3);
    long long N = 1 + rng.below(8);
    EPWord x = random_epword(rng);
    const std::size_t L = static_cast<std::size_t>(N + s.k());
    EPWord y = prepend(x.head(L), random_epword(rng));
    CHECK(defect_at(s, x, N) == defect_at(s, y, N));
  }
}

TEST_CASE("sup_defect enumerates cylinders exactly") {
  auto id_report = sup_defect(PrefixMap(), 5);
  CHECK(id_report.sup_defect == 0);
  CHECK(id_report.bound == 0);

  auto half_report = sup_defect(rot(Rational(1, 2)), 8);
  CHECK(half_report.sup_defect == 0);
  CHECK(half_report.bound == Rational(1, 2));

  auto a_report = sup_defect(gen_A(), 8);
  CHECK(a_report.sup_defect >= Rational(1, 4));
  CHECK(a_report.sup_defect <= 1);
  auto [oracle_sup, oracle_witness] = brute_sup(gen_A(), 8);
  CHECK(a_report.sup_defect == oracle_sup);
  CHECK(a_report.witness == oracle_witness);
}

TEST_CASE("sup_defect is independent of the partitioning") {
  for (long long N : {3, 6}) {
    auto one = sup_defect(gen_B(), N, kEnumerationCap, 1);
    auto four = sup_defect(gen_B(), N, kEnumerationCap, 4);
    CHECK(one.sup_defect == four.sup_defect);
    CHECK(one.witness == four.witness);
  }
}

TEST_CASE("sup_defect respects the enumeration cap") {
  CHECK_THROWS_AS(sup_defect(gen_A(), 25), Error);
  try {
    sup_defect(gen_A(), 25);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cap_exceeded);
  }
  CHECK_THROWS_AS(sup_defect(gen_A(), 4, 30), Error);  // cap above the hard limit
}

TEST_CASE("theorem bound holds on the generator pool") {
  for (const auto& s : testutil::generator_pool()) {
    const long long k = s.k();
    for (long long N : {4, 8, 16}) {
      if (N <= 2 * k || N + k > 18) continue;
      auto report = sup_defect(s, N);
      CHECK(report.sup_defect <= report.bound);
    }
  }
}

TEST_CASE("doubling N halves the bound") {
  auto r1 = sup_defect(gen_A(), 4);
  auto r2 = sup_defect(gen_A(), 8);
  CHECK(r2.bound == r1.bound / 2);
}

TEST_CASE("sampled estimates never exceed the exact sup") {
  Rng seed_src(1);
  for (int i = 0; i < 10; ++i) {
    PrefixMap s = testutil::random_element(seed_src, 3);
    long long N = 1 + seed_src.below(6);
    auto exact = sup_defect(s, N);
    Rational est = sampled_sup_defect(s, N, 40, 1000 + i);
    CHECK(est <= exact.sup_defect);
  }
  CHECK(sampled_sup_defect(gen_A(), 8, 0, 5) == 0);
  CHECK(sampled_sup_defect(rot(Rational(1, 2)), 8, 50, 7) == 0);
  CHECK(sampled_sup_defect(gen_A(), 8, 50, 42) ==
        sampled_sup_defect(gen_A(), 8, 50, 42));
}

TEST_CASE("folner boxes") {
  auto b0 = folner_box(0);
  CHECK(b0.support_size() == 1);
  CHECK((b0.at(SlopePair{0, 0}) == 1));

  auto b1 = folner_box(1);
  CHECK(b1.support_size() == 9);
  CHECK((b1.at(SlopePair{1, -1}) == Rational(1, 9)));
}

TEST_CASE("folner defect closed form") {
  CHECK((folner_defect(SlopePair{0, 0}, 3) == 0));
  CHECK((folner_defect(SlopePair{1, 0}, 1) == Rational(2, 3)));
  CHECK((folner_defect(SlopePair{5, 0}, 1) == 2));

  // closed form vs. actual translation of the box
  for (long long n = 0; n <= 4; ++n) {
    for (long long a = -3; a <= 3; ++a) {
      for (long long b = -3; b <= 3; ++b) {
        SlopePair shift{a, b};
        auto box = folner_box(n);
        auto moved = pushforward(
            [&](const SlopePair& m) { return m + shift; }, box);
        CHECK(folner_defect(shift, n) == l1_distance(moved, box));
      }
    }
  }
}
