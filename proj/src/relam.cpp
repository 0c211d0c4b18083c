#include "thompson/relam.hpp"

#include <algorithm>

namespace thompson {

namespace {

void require_T(const PrefixMap& s, const char* who) {
  if (!s.in_T()) fail(Errc::not_in_T, std::string(who) + " needs an element of T");
}

}  // namespace

CosetTF coset_of(const PrefixMap& t) {
  require_T(t, "coset_of");
  return {t.apply(DyadicPoint())};
}

PrefixMap sigma(const DyadicPoint& d) { return rot(psi(d.word())); }

CosetTF act(const PrefixMap& s, const CosetTF& c) {
  require_T(s, "act");
  return {s.apply(c.point)};
}

PrefixMap estar_cocycle(const PrefixMap& s, const DyadicPoint& d) {
  require_T(s, "estar_cocycle");
  const DyadicPoint sd = s.apply(d);
  return compose(compose(invert(sigma(sd)), s), sigma(d));
}

SlopePair cocycle_ab(const PrefixMap& s, const DyadicPoint& d) {
  require_T(s, "cocycle_ab");
  return s.slope_exponents(d);
}

CosetTFF act(const PrefixMap& s, const CosetTFF& c) {
  require_T(s, "act");
  return {s.apply(c.point), c.ab + cocycle_ab(s, c.point)};
}

FiniteMeasure<CosetTFF> ext_compose(const EtaMap& eta, const NuMap& nu,
                                    const EPWord& x) {
  const auto ex = eta(x);
  FiniteMeasure<CosetTFF>::WeightMap w;
  for (const auto& [a, wa] : ex.weights()) {
    const EPWord y = invert(sigma(a.point)).apply(x);
    const auto nu_y = nu(y);
    for (const auto& [m, wm] : nu_y.weights()) w[CosetTFF{a.point, m}] += wa * wm;
  }
  return FiniteMeasure<CosetTFF>::from_weights(std::move(w));
}

ExtDefect ext_defect(const PrefixMap& s, const EtaMap& eta, const NuMap& nu,
                     const EPWord& x, long long n) {
  require_T(s, "ext_defect");
  const EPWord sx = s.apply(x);

  const auto ex = eta(x);
  const auto pushed_eta =
      pushforward([&](const CosetTF& c) { return act(s, c); }, ex);
  ExtDefect out;
  out.eta = l1_distance(pushed_eta, eta(sx));

  out.nu = Rational(0);
  for (const auto& [a, wa] : ex.weights()) {
    (void)wa;
    Rational d = folner_defect(cocycle_ab(s, a.point), n);
    if (d > out.nu) out.nu = d;
  }

  const auto mixed = ext_compose(eta, nu, x);
  const auto pushed =
      pushforward([&](const CosetTFF& c) { return act(s, c); }, mixed);
  out.total = l1_distance(pushed, ext_compose(eta, nu, sx));
  return out;
}

ExtDefect ext_defect_mu_folner(const PrefixMap& s, const EPWord& x,
                               long long N, long long n) {
  EtaMap eta = [N](const EPWord& y) {
    return pushforward([](const DyadicPoint& d) { return CosetTF{d}; },
                       mu_N(y, N));
  };
  const auto box = folner_box(n);
  NuMap nu = [box](const EPWord&) { return box; };
  return ext_defect(s, eta, nu, x, n);
}

}  // namespace thompson
