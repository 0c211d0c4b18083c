#pragma once

#include "thompson/measures.hpp"

#include <functional>

namespace thompson {

/// Coset tF of the point stabilizer F in T, identified with the orbit
/// point t·0^∞.
struct CosetTF {
  DyadicPoint point;

  friend auto operator<=>(const CosetTF&, const CosetTF&) = default;
};

/// Coset t[F,F], identified with the pair (t·0^∞, ab(σ(t·0^∞)^{-1} t))
/// relative to the fixed cross-section σ.
struct CosetTFF {
  DyadicPoint point;
  SlopePair ab;

  friend auto operator<=>(const CosetTFF&, const CosetTFF&) = default;
};

CosetTF coset_of(const PrefixMap& t);  // t·0^∞; requires in_T

/// Cross-section of the orbit map: the dyadic rotation carrying 0^∞ to d.
/// sigma(ε) is the identity and coset_of(sigma(d)) = d.
PrefixMap sigma(const DyadicPoint& d);

CosetTF act(const PrefixMap& s, const CosetTF& c);

/// σ(s·d)^{-1} s σ(d); lands in F.
PrefixMap estar_cocycle(const PrefixMap& s, const DyadicPoint& d);

/// Abelianization of estar_cocycle(s, d) without building its table:
/// the rotations have slope 1 everywhere, so by the chain rule only s
/// contributes, and the value is slope_exponents(s, d).
SlopePair cocycle_ab(const PrefixMap& s, const DyadicPoint& d);

CosetTFF act(const PrefixMap& s, const CosetTFF& c);

using EtaMap = std::function<FiniteMeasure<CosetTF>(const EPWord&)>;
using NuMap = std::function<FiniteMeasure<SlopePair>(const EPWord&)>;

/// x ↦ sum_a eta^x(a) · (image of nu^{σ(a)^{-1} x} under m ↦ (a, m)).
FiniteMeasure<CosetTFF> ext_compose(const EtaMap& eta, const NuMap& nu,
                                    const EPWord& x);

struct ExtDefect {
  Rational total;  // || s·mu(x) - mu(sx) ||_1 for mu = ext_compose(eta, nu, ·)
  Rational eta;    // || s·eta^x - eta^{sx} ||_1
  Rational nu;     // max over supp eta^x of folner_defect(cocycle_ab(s,a), n)
};

/// Defect decomposition of the composed map. With nu the constant Følner
/// box of parameter n, total <= eta + nu holds exactly.
ExtDefect ext_defect(const PrefixMap& s, const EtaMap& eta, const NuMap& nu,
                     const EPWord& x, long long n);

/// The built-in instance: eta = mu_N lifted to cosets, nu the constant
/// Følner box of parameter n.
ExtDefect ext_defect_mu_folner(const PrefixMap& s, const EPWord& x,
                               long long N, long long n);

}  // namespace thompson
