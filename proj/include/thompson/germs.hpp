#pragma once

#include "thompson/measures.hpp"

#include <string>
#include <vector>

namespace thompson {

/// Germ over a non-zero-tail point, as a tail-equivalence triple
/// (target, cocycle, source): there are words w, v with |w| - |v| =
/// cocycle, target = prepend(w, t) and source = prepend(v, t) for a
/// common tail t. The minimal witnessing (w, v) is recorded.
class CantorGerm {
 public:
  CantorGerm(EPWord target, long long cocycle, EPWord source);
  static CantorGerm identity(const EPWord& x);

  const EPWord& target() const { return target_; }
  long long cocycle() const { return cocycle_; }
  const EPWord& source() const { return source_; }
  const BinaryWord& witness_target() const { return w_; }  // w
  const BinaryWord& witness_source() const { return v_; }  // v

  friend auto operator<=>(const CantorGerm& a, const CantorGerm& b) {
    if (auto c = a.target_ <=> b.target_; c != 0) return c;
    if (auto c = a.cocycle_ <=> b.cocycle_; c != 0) return c;
    return a.source_ <=> b.source_;
  }
  friend bool operator==(const CantorGerm& a, const CantorGerm& b) {
    return (a <=> b) == 0;
  }

 private:
  EPWord target_;
  long long cocycle_ = 0;
  EPWord source_;
  BinaryWord w_, v_;  // minimal witness, derived from the triple
};

/// Germ at a zero-tail point: the triple (target, source, one-sided
/// slope exponents). Identity germs have equal endpoints and slopes (0,0).
struct DyadicGerm {
  DyadicPoint target;
  DyadicPoint source;
  SlopePair slopes;

  friend auto operator<=>(const DyadicGerm&, const DyadicGerm&) = default;
};

CantorGerm germ_at(const PrefixMap& g, const EPWord& x);       // x non-dyadic
DyadicGerm germ_at(const PrefixMap& g, const DyadicPoint& x);  // requires in_T

/// Whether g and h agree on a neighborhood of x: g^{-1}h fixes x and the
/// adjacent linear pieces are the identity.
bool germ_equal(const PrefixMap& g, const PrefixMap& h, const EPWord& x);
bool germ_equal(const PrefixMap& g, const PrefixMap& h, const DyadicPoint& x);

CantorGerm compose(const CantorGerm& a, const CantorGerm& b);  // a after b
DyadicGerm compose(const DyadicGerm& a, const DyadicGerm& b);
CantorGerm invert(const CantorGerm& a);
DyadicGerm invert(const DyadicGerm& a);

/// Circle germ (g, theta) at a non-dyadic rational carried to the
/// sequence side: germ_at(g, phi(theta)). A groupoid homomorphism.
CantorGerm phi_tilde(const PrefixMap& g, const Rational& theta);

/// Fiber measure over the range point x: uniform mass 1/n on the n germs
/// (x, j, shift(x, j)), j = 1..n — the germs of "prepend head(x,j)".
struct FiberMeasure {
  EPWord base;
  long long n = 0;
  FiniteMeasure<CantorGerm> measure;
};

FiberMeasure fiber_measure(const EPWord& x, long long n);  // x non-dyadic

/// || g·m_n^{source} - m_n^{target} ||_1, exact.
Rational condition_ii_defect(const CantorGerm& g, long long n);

/// 2 (|v| + |w|) / n, the telescoping bound for the above.
Rational condition_ii_bound(const CantorGerm& g, long long n);

/// Point mass at source = basepoint tensored with the Følner box on the
/// slope coordinate.
FiniteMeasure<DyadicGerm> fiber_measure_dyadic(
    const DyadicPoint& x, long long n,
    const DyadicPoint& basepoint = DyadicPoint());

/// Equals folner_defect(g.slopes, n): left multiplication by g translates
/// the slope coordinate and transports the base point.
Rational condition_ii_defect(const DyadicGerm& g, long long n);

enum class OrbitPart { dyadic, cantor };

/// Classification by orbit: zero-tail sequences (and dyadic rationals on
/// the circle) form one invariant part, everything else the other.
OrbitPart invariant_split(const EPWord& x);
OrbitPart invariant_split(const Rational& theta);

struct GermTestSet {
  std::vector<CantorGerm> cantor;
  std::vector<DyadicGerm> dyadic;
};

/// Fixed mixed bag of germs used by the verification reports.
GermTestSet standard_germ_test_set();

// Text forms: "source ==k==> target" and "source --(r,l)--> target".
std::string to_string(const CantorGerm& g);
std::string to_string(const DyadicGerm& g);
CantorGerm parse_cantor_germ(const std::string& text);
DyadicGerm parse_dyadic_germ(const std::string& text);

}  // namespace thompson
