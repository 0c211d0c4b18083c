#pragma once

#include "thompson/words.hpp"

#include <string>
#include <utility>
#include <vector>

namespace thompson {

/// Z^2 vector of one-sided slope exponents: log2 of the derivative of the
/// induced circle map approaching a point from above (right) and from
/// below (left).
struct SlopePair {
  long long right = 0;
  long long left = 0;

  friend auto operator<=>(const SlopePair&, const SlopePair&) = default;
};

SlopePair operator+(SlopePair a, SlopePair b);
SlopePair operator-(SlopePair a);
std::string to_string(const SlopePair& s);  // "(right,left)"

/// Element of the prefix-replacement group V: a bijective table between
/// two complete prefix codes, acting by g(w_i x) = z_i x. Tables are kept
/// in reduced form (no two pairs u0->v0, u1->v1 survive; they merge to
/// u->v) and sorted by domain word. The reduced table is a normal form:
/// two tables describe the same map iff they are identical.
class PrefixMap {
 public:
  using Pair = std::pair<BinaryWord, BinaryWord>;

  PrefixMap();  // identity {ε→ε}

  /// Checks both sides are complete prefix codes of equal cardinality,
  /// then reduces. Throws Errc::incomplete_code / not_prefix_free.
  static PrefixMap validate(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  std::size_t max_domain_length() const { return maxdom_; }

  /// The unique pair whose domain word is a prefix of x.
  const Pair& pair_covering(const EPWord& x) const;

  EPWord apply(const EPWord& x) const;
  DyadicPoint apply(const DyadicPoint& d) const;

  /// The induced piecewise-linear right-continuous map of [0,1).
  Rational circle_apply(const Rational& theta) const;

  bool is_identity() const;
  bool in_T() const;  // at most one discontinuity of the circle map
  bool in_F() const;  // order-preserving on [0,1); fixes the point 0 ≡ 1
  long long k() const;  // max over pairs of max(|w|, |z|-|w|)

  /// One-sided slope exponents of the circle map at a dyadic point.
  SlopePair slope_exponents(const DyadicPoint& x) const;

  /// Slope exponents at the fixed point 0 ≡ 1; a homomorphism F -> Z^2.
  SlopePair abelianization() const;  // requires in_F()

  friend bool operator==(const PrefixMap&, const PrefixMap&) = default;

 private:
  std::vector<Pair> pairs_;  // reduced, sorted by domain word
  std::size_t maxdom_ = 0;
};

PrefixMap compose(const PrefixMap& t, const PrefixMap& s);  // t ∘ s
PrefixMap invert(const PrefixMap& s);

PrefixMap gen_A();  // {0->00, 10->01, 11->1}
PrefixMap gen_B();  // {0->0, 10->100, 110->101, 111->11}

/// Rotation x ↦ x + q mod 1 for dyadic q in [0,1); rejects non-dyadic q.
PrefixMap rot(const Rational& q);

/// Product of named generators, e.g. "A*B^-1*rot:1/2". "id" is the
/// identity; the leftmost factor is applied last.
PrefixMap parse_group_word(const std::string& word);

std::string to_string(const PrefixMap& s);  // "{0->00, 10->01, 11->1}"

}  // namespace thompson
