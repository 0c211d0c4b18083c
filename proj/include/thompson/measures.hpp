#pragma once

#include "thompson/prefix_map.hpp"

#include <cstdint>
#include <map>
#include <type_traits>
#include <utility>

namespace thompson {

/// Finitely supported probability measure with exact rational weights.
/// Keys need a strict total order and canonical equality. All stored
/// weights are positive and sum to one exactly.
template <class K>
class FiniteMeasure {
 public:
  using WeightMap = std::map<K, Rational>;

  static FiniteMeasure point_mass(K k) {
    WeightMap w;
    w.emplace(std::move(k), Rational(1));
    return FiniteMeasure(std::move(w));
  }

  static FiniteMeasure from_weights(WeightMap w) {
    Rational total(0);
    for (const auto& [key, weight] : w) {
      if (weight <= 0) fail(Errc::bad_input, "measure weights must be positive");
      total += weight;
    }
    if (total != 1) fail(Errc::bad_input, "measure weights must sum to one");
    return FiniteMeasure(std::move(w));
  }

  const WeightMap& weights() const { return w_; }
  std::size_t support_size() const { return w_.size(); }

  Rational at(const K& k) const {
    auto it = w_.find(k);
    return it == w_.end() ? Rational(0) : it->second;
  }

 private:
  explicit FiniteMeasure(WeightMap w) : w_(std::move(w)) {}
  WeightMap w_;
};

template <class K>
Rational l1_distance(const FiniteMeasure<K>& a, const FiniteMeasure<K>& b) {
  Rational d(0);
  auto i = a.weights().begin();
  auto j = b.weights().begin();
  const auto ie = a.weights().end();
  const auto je = b.weights().end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && i->first < j->first)) {
      d += i->second;
      ++i;
    } else if (i == ie || j->first < i->first) {
      d += j->second;
      ++j;
    } else {
      d += abs(i->second - j->second);
      ++i;
      ++j;
    }
  }
  return d;
}

/// Image measure; weights of colliding keys are summed.
template <class F, class K>
auto pushforward(F&& f, const FiniteMeasure<K>& m) {
  using K2 = std::decay_t<decltype(f(std::declval<const K&>()))>;
  typename FiniteMeasure<K2>::WeightMap w;
  for (const auto& [key, weight] : m.weights()) w[f(key)] += weight;
  return FiniteMeasure<K2>::from_weights(std::move(w));
}

/// Average of the point masses at the first N prefix truncations of x,
/// each padded with zeros: (1/N) sum_{j=1..N} delta at x_{[1,j]}0^∞.
/// Prefixes differing only by trailing zeros merge.
FiniteMeasure<DyadicPoint> mu_N(const EPWord& x, long long N);

/// || s·mu_N(x) - mu_N(sx) ||_1, exact. Depends only on head(x, N + k(s)).
Rational defect_at(const PrefixMap& s, const EPWord& x, long long N);

inline constexpr long long kEnumerationCap = 26;

struct DefectReport {
  PrefixMap element;
  long long N = 0;
  Rational sup_defect;
  Rational bound;      // 4 k(s) / N
  BinaryWord witness;  // lexicographically least length-(N+k) prefix attaining the sup
};

/// Exact supremum of defect_at over all sequences, by enumerating every
/// cylinder of length L = N + k(s); the defect is constant on each.
/// Throws Errc::cap_exceeded when L > cap. Partitioning across workers
/// does not affect the result.
DefectReport sup_defect(const PrefixMap& s, long long N,
                        long long cap = kEnumerationCap, unsigned workers = 0);

/// Max of defect_at over pseudorandom sequences; a lower bound for the
/// true sup, deterministic for a fixed seed. samples = 0 gives 0.
Rational sampled_sup_defect(const PrefixMap& s, long long N, long long samples,
                            std::uint64_t seed);

/// Uniform measure on the lattice box [-n,n]^2 in Z^2 (coordinates are
/// slope-exponent pairs, the image of F/[F,F]).
FiniteMeasure<SlopePair> folner_box(long long n);

/// || (box translated by a) - box ||_1 in closed form:
/// 2 (1 - max(0, 2n+1-|a_1|) max(0, 2n+1-|a_2|) / (2n+1)^2).
Rational folner_defect(const SlopePair& a, long long n);

/// splitmix64; identical output stream on every platform.
struct Rng {
  std::uint64_t state = 0;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);
};

/// Preperiod length uniform in [0,12], period length in [1,6], uniform bits.
EPWord random_epword(Rng& rng);

}  // namespace thompson
