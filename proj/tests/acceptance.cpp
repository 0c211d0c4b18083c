// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance here is exact rational equality or an exact <= bound.

#include "thompson/germs.hpp"
#include "thompson/relam.hpp"

#include <chrono>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace thompson;

int failures = 0;

struct Criterion {
  int id;
  std::string label;
  bool ok = true;
  long long checks = 0;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
      ok = false;
      if (notes.size() < 3) notes.push_back(what);
    }
  }
};

void finish(const Criterion& c) {
  if (c.ok) {
    std::cout << "PASS criterion " << c.id << ": " << c.label << " (" << c.checks
              << " checks)\n";
  } else {
    ++failures;
    std::cout << "FAIL criterion " << c.id << ": " << c.label << "\n";
    for (const auto& n : c.notes) std::cout << "      " << n << "\n";
  }
}

PrefixMap fold_word(const std::vector<PrefixMap>& factors) {
  PrefixMap acc;
  for (const auto& f : factors) acc = compose(acc, f);
  return acc;
}

std::vector<PrefixMap> random_factors(Rng& rng, const std::vector<PrefixMap>& pool,
                                      std::uint64_t max_len) {
  std::vector<PrefixMap> out;
  const std::uint64_t len = rng.below(max_len + 1);
  for (std::uint64_t i = 0; i < len; ++i) out.push_back(pool[rng.below(pool.size())]);
  return out;
}

const std::vector<PrefixMap>& full_pool() {
  static const std::vector<PrefixMap> pool = {
      gen_A(),             gen_B(),         rot(Rational(1, 2)),
      rot(Rational(1, 4)), invert(gen_A()), invert(gen_B()),
      invert(rot(Rational(1, 4)))};
  return pool;
}

const std::vector<PrefixMap>& f_pool() {
  static const std::vector<PrefixMap> pool = {gen_A(), gen_B(), invert(gen_A()),
                                              invert(gen_B())};
  return pool;
}

EPWord random_nondyadic(Rng& rng) {
  for (;;) {
    EPWord x = random_epword(rng);
    if (!x.is_dyadic()) return x;
  }
}

DyadicPoint random_dyadic(Rng& rng, std::size_t max_len) {
  const std::size_t len = rng.below(max_len + 1);
  std::string bits;
  for (std::size_t i = 0; i < len; ++i) bits.push_back(rng.below(2) ? '1' : '0');
  return DyadicPoint(BinaryWord(std::move(bits)));
}

// Independent enumeration of the sup through the public pointwise defect.
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

// O(n^2) germ-matching route to the condition (ii) sum.
Rational brute_condition_ii(const CantorGerm& g, long long n) {
  std::vector<CantorGerm> moved, target;
  for (long long j = 1; j <= n; ++j) {
    moved.push_back(compose(
        g, CantorGerm(g.source(), j, g.source().shift(static_cast<std::size_t>(j)))));
    target.push_back(
        CantorGerm(g.target(), j, g.target().shift(static_cast<std::size_t>(j))));
  }
  Rational total(0);
  std::vector<bool> used(target.size(), false);
  for (const auto& m : moved) {
    Rational mass(0);
    for (std::size_t i = 0; i < target.size(); ++i) {
      if (!used[i] && target[i] == m) {
        mass += Rational(1, n);
        used[i] = true;
      }
    }
    total += abs(Rational(1, n) - mass);
  }
  for (std::size_t i = 0; i < target.size(); ++i)
    if (!used[i]) total += Rational(1, n);
  return total;
}

void criterion_1() {
  Criterion c{1, "exact sup defect within 4k/N on the generator set"};
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, PrefixMap>> elements = {
      {"A", gen_A()},
      {"B", gen_B()},
      {"rot:1/2", rot(Rational(1, 2))},
      {"rot:1/4", rot(Rational(1, 4))}};
  for (const auto& [name, s] : elements) {
    const long long k = s.k();
    for (long long N : {4, 8, 16}) {
      if (N <= 2 * k) continue;
      DefectReport report = sup_defect(s, N);
      c.require(report.sup_defect <= report.bound,
                name + " at N=" + std::to_string(N) + ": sup " +
                    to_string(report.sup_defect) + " > bound " +
                    to_string(report.bound));
      if (name == "rot:1/2")
        c.require(report.sup_defect == 0,
                  "rot:1/2 at N=" + std::to_string(N) + " not exactly 0");
    }
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  c.require(elapsed < 60, "runtime " + std::to_string(elapsed) + "s exceeds 60s");
  finish(c);
}

void criterion_2() {
  Criterion c{2, "pointwise defect of A at the all-ones sequence is 2/N"};
  const EPWord ones(BinaryWord(), BinaryWord("1"));
  for (long long N : {4, 8, 16})
    c.require(defect_at(gen_A(), ones, N) == Rational(2, N),
              "N=" + std::to_string(N));
  finish(c);
}

void criterion_3() {
  Criterion c{3, "cylinder enumeration agrees with the brute-force oracle"};
  Rng rng(303);
  int done = 0;
  while (done < 50) {
    PrefixMap s = fold_word(random_factors(rng, full_pool(), 3));
    const long long k = s.k();
    if (k > 13) continue;
    const long long N =
        1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(14 - k)));
    auto [oracle_sup, oracle_witness] = brute_sup(s, N);
    DefectReport report = sup_defect(s, N);
    c.require(report.sup_defect == oracle_sup,
              "sup mismatch at trial " + std::to_string(done));
    c.require(report.witness == oracle_witness,
              "witness mismatch at trial " + std::to_string(done));
    ++done;
  }
  finish(c);
}

void criterion_4() {
  Criterion c{4, "group laws on 500 random generator words"};
  Rng rng(404);
  for (int trial = 0; trial < 500; ++trial) {
    auto factors = random_factors(rng, full_pool(), 8);
    if (factors.empty()) factors.push_back(full_pool()[rng.below(full_pool().size())]);

    PrefixMap left = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) left = compose(left, factors[i]);
    PrefixMap right = factors.back();
    for (std::size_t i = factors.size() - 1; i-- > 0;)
      right = compose(factors[i], right);
    c.require(left == right,
              "associativity / normal form at trial " + std::to_string(trial));

    c.require(compose(left, invert(left)).is_identity() &&
                  compose(invert(left), left).is_identity(),
              "two-sided inverse at trial " + std::to_string(trial));

    const std::size_t split = rng.below(factors.size() + 1);
    PrefixMap front, back;
    for (std::size_t i = 0; i < split; ++i) front = compose(front, factors[i]);
    for (std::size_t i = split; i < factors.size(); ++i)
      back = compose(back, factors[i]);
    c.require(compose(front, back) == left,
              "split product normal form at trial " + std::to_string(trial));

    EPWord x = random_epword(rng);
    PrefixMap g = fold_word(random_factors(rng, full_pool(), 3));
    c.require(compose(g, left).apply(x) == g.apply(left.apply(x)),
              "action law at trial " + std::to_string(trial));
  }
  finish(c);
}

void criterion_5() {
  Criterion c{5, "phi intertwines the circle and sequence actions"};
  Rng rng(505);
  for (int trial = 0; trial < 200; ++trial) {
    PrefixMap s = fold_word(random_factors(rng, full_pool(), 5));
    const std::uint64_t den = 1 + rng.below(97);
    Rational theta(rng.below(den), den);
    c.require(phi(s.circle_apply(theta)) == s.apply(phi(theta)),
              "trial " + std::to_string(trial) + " at theta " + to_string(theta));
  }
  finish(c);
}

void criterion_6() {
  Criterion c{6, "composed coset measures telescope within eta + nu"};
  Rng rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    PrefixMap s = fold_word(random_factors(rng, full_pool(), 4));
    EPWord x = random_epword(rng);
    const long long N = 1 + static_cast<long long>(rng.below(12));
    const long long n = static_cast<long long>(rng.below(9));
    ExtDefect d = ext_defect_mu_folner(s, x, N, n);
    c.require(d.total <= d.eta + d.nu,
              "telescoping at trial " + std::to_string(trial));
  }
  Rng rng2(607);
  for (int trial = 0; trial < 10; ++trial) {
    EPWord x = random_epword(rng2);
    c.require(ext_defect_mu_folner(PrefixMap(), x, 6, 3).total == 0, "identity case");
    c.require(ext_defect_mu_folner(rot(Rational(1, 2)), x, 6, 3).total == 0,
              "rot:1/2 case");
  }
  finish(c);
}

void criterion_7() {
  Criterion c{7, "germ functoriality and the phi-tilde homomorphism"};
  Rng rng(707);
  for (int trial = 0; trial < 200; ++trial) {
    PrefixMap g = fold_word(random_factors(rng, full_pool(), 4));
    PrefixMap h = fold_word(random_factors(rng, full_pool(), 4));

    EPWord x = random_nondyadic(rng);
    c.require(germ_at(compose(g, h), x) ==
                  compose(germ_at(g, h.apply(x)), germ_at(h, x)),
              "non-dyadic functoriality at trial " + std::to_string(trial));

    DyadicPoint d = random_dyadic(rng, 6);
    c.require(germ_at(compose(g, h), d) ==
                  compose(germ_at(g, h.apply(d)), germ_at(h, d)),
              "dyadic functoriality at trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 100; ++trial) {
    PrefixMap g = fold_word(random_factors(rng, full_pool(), 4));
    PrefixMap h = fold_word(random_factors(rng, full_pool(), 4));
    const std::uint64_t den = 3 + 2 * rng.below(40);
    Rational theta(1 + rng.below(den - 1), den);
    Rational htheta = h.circle_apply(theta);
    c.require(phi_tilde(compose(g, h), theta) ==
                  compose(phi_tilde(g, htheta), phi_tilde(h, theta)),
              "phi-tilde homomorphism at trial " + std::to_string(trial));
  }
  finish(c);
}

void criterion_8() {
  Criterion c{8, "commutators are exactly the trivial germs at the fixed point"};
  Rng rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    PrefixMap g = fold_word(random_factors(rng, f_pool(), 6));
    PrefixMap h = fold_word(random_factors(rng, f_pool(), 6));
    PrefixMap comm = compose(compose(g, h), compose(invert(g), invert(h)));
    c.require((comm.abelianization() == SlopePair{0, 0}),
              "commutator abelianization at trial " + std::to_string(trial));
    c.require(germ_equal(comm, PrefixMap(), DyadicPoint()),
              "commutator germ at trial " + std::to_string(trial));
  }
  int found = 0;
  while (found < 20) {
    PrefixMap f = fold_word(random_factors(rng, f_pool(), 6));
    if ((f.abelianization() == SlopePair{0, 0})) continue;
    c.require(!germ_equal(f, PrefixMap(), DyadicPoint()),
              "nontrivial germ " + std::to_string(found));
    ++found;
  }
  finish(c);
}

void criterion_9() {
  Criterion c{9, "condition (ii) decay on the standard germ set"};
  const auto set = standard_germ_test_set();
  for (const auto& g : set.cantor) {
    for (long long n : {4, 8, 16, 32}) {
      Rational d = condition_ii_defect(g, n);
      c.require(d == brute_condition_ii(g, n),
                "oracle mismatch for " + to_string(g) + " at n=" + std::to_string(n));
      c.require(d <= condition_ii_bound(g, n),
                "bound exceeded for " + to_string(g) + " at n=" + std::to_string(n));
    }
  }
  for (const auto& g : set.dyadic) {
    for (long long n : {4, 8, 16, 32}) {
      c.require(condition_ii_defect(g, n) == folner_defect(g.slopes, n),
                "closed form mismatch for " + to_string(g) +
                    " at n=" + std::to_string(n));
    }
  }
  const EPWord alt(BinaryWord(), BinaryWord("01"));
  const CantorGerm two(alt, 2, alt);
  const std::vector<std::pair<long long, Rational>> expected = {
      {4, Rational(1)}, {8, Rational(1, 2)}, {16, Rational(1, 4)}, {32, Rational(1, 8)}};
  for (const auto& [n, want] : expected)
    c.require(condition_ii_defect(two, n) == want,
              "shift-germ sequence at n=" + std::to_string(n));
  finish(c);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures == 0) {
    std::cout << "all criteria passed\n";
  } else {
    std::cout << failures << " criterion(s) failed\n";
  }
  return failures;
}
