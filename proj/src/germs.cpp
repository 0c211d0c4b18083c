#include "thompson/germs.hpp"

#include <regex>
#include <string>

namespace thompson {

namespace {

void require_T(const PrefixMap& g, const char* who) {
  if (!g.in_T()) fail(Errc::not_in_T, std::string(who) + " needs an element of T");
}

void require_nondyadic(const EPWord& x, const char* who) {
  if (x.is_dyadic())
    fail(Errc::dyadic_point,
         std::string(who) + ": zero-tail points take dyadic germs, got " + to_string(x));
}

}  // namespace

CantorGerm::CantorGerm(EPWord target, long long cocycle, EPWord source)
    : target_(std::move(target)), cocycle_(cocycle), source_(std::move(source)) {
  require_nondyadic(target_, "CantorGerm");
  require_nondyadic(source_, "CantorGerm");
  if (source_.period().size() != target_.period().size())
    fail(Errc::bad_input, "germ endpoints are not tail-equivalent");

  // Find the least i >= max(0, -cocycle) with shift(source, i) equal to
  // shift(target, i + cocycle). Beyond the preperiods both shifts are
  // purely periodic, so one period length of candidates decides.
  const long long floor_i = std::max<long long>(0, -cocycle_);
  const long long stable = std::max<long long>(
      {floor_i, static_cast<long long>(source_.preperiod().size()),
       static_cast<long long>(target_.preperiod().size()) - cocycle_});
  const long long per = static_cast<long long>(source_.period().size());
  long long found = -1;
  for (long long i = stable; i < stable + per; ++i) {
    if (source_.shift(static_cast<std::size_t>(i)) ==
        target_.shift(static_cast<std::size_t>(i + cocycle_))) {
      found = i;
      break;
    }
  }
  if (found < 0) fail(Errc::bad_input, "germ endpoints are not tail-equivalent along the cocycle");
  while (found > floor_i &&
         source_.at(static_cast<std::size_t>(found - 1)) ==
             target_.at(static_cast<std::size_t>(found + cocycle_ - 1)))
    --found;
  v_ = source_.head(static_cast<std::size_t>(found));
  w_ = target_.head(static_cast<std::size_t>(found + cocycle_));
}

CantorGerm CantorGerm::identity(const EPWord& x) { return CantorGerm(x, 0, x); }

CantorGerm germ_at(const PrefixMap& g, const EPWord& x) {
  require_T(g, "germ_at");
  require_nondyadic(x, "germ_at");
  const auto& [w, z] = g.pair_covering(x);
  const long long cocycle =
      static_cast<long long>(z.size()) - static_cast<long long>(w.size());
  return CantorGerm(g.apply(x), cocycle, x);
}

DyadicGerm germ_at(const PrefixMap& g, const DyadicPoint& x) {
  require_T(g, "germ_at");
  return DyadicGerm{g.apply(x), x, g.slope_exponents(x)};
}

bool germ_equal(const PrefixMap& g, const PrefixMap& h, const EPWord& x) {
  require_T(g, "germ_equal");
  require_T(h, "germ_equal");
  require_nondyadic(x, "germ_equal");
  const PrefixMap f = compose(invert(g), h);
  const auto& [w, z] = f.pair_covering(x);
  return w.size() == z.size() && f.apply(x) == x;
}

bool germ_equal(const PrefixMap& g, const PrefixMap& h, const DyadicPoint& x) {
  require_T(g, "germ_equal");
  require_T(h, "germ_equal");
  const PrefixMap f = compose(invert(g), h);
  // A piecewise-linear map fixing x whose one-sided slopes are both 1 is
  // the identity on the two adjacent pieces, hence on a neighborhood.
  return f.apply(x) == x && f.slope_exponents(x) == SlopePair{0, 0};
}

CantorGerm compose(const CantorGerm& a, const CantorGerm& b) {
  if (a.source() != b.target())
    fail(Errc::source_target_mismatch,
         "cannot compose: source " + to_string(a.source()) + " != target " +
             to_string(b.target()));
  return CantorGerm(a.target(), a.cocycle() + b.cocycle(), b.source());
}

DyadicGerm compose(const DyadicGerm& a, const DyadicGerm& b) {
  if (a.source != b.target)
    fail(Errc::source_target_mismatch,
         "cannot compose: source " + to_string(a.source) + " != target " +
             to_string(b.target));
  return DyadicGerm{a.target, b.source, a.slopes + b.slopes};
}

CantorGerm invert(const CantorGerm& a) {
  return CantorGerm(a.source(), -a.cocycle(), a.target());
}

DyadicGerm invert(const DyadicGerm& a) {
  return DyadicGerm{a.source, a.target, -a.slopes};
}

CantorGerm phi_tilde(const PrefixMap& g, const Rational& theta) {
  if (theta < 0 || theta >= 1)
    fail(Errc::bad_input, "circle point must lie in [0,1), got " + to_string(theta));
  if (is_dyadic(theta))
    fail(Errc::dyadic_point,
         "dyadic circle germs live in the discrete part, got theta = " + to_string(theta));
  return germ_at(g, phi(theta));
}

FiberMeasure fiber_measure(const EPWord& x, long long n) {
  if (n < 1) fail(Errc::bad_input, "fiber_measure needs n >= 1");
  require_nondyadic(x, "fiber_measure");
  FiniteMeasure<CantorGerm>::WeightMap w;
  const Rational unit(1, n);
  for (long long j = 1; j <= n; ++j)
    w[CantorGerm(x, j, x.shift(static_cast<std::size_t>(j)))] += unit;
  return FiberMeasure{x, n, FiniteMeasure<CantorGerm>::from_weights(std::move(w))};
}

Rational condition_ii_defect(const CantorGerm& g, long long n) {
  const auto src = fiber_measure(g.source(), n);
  const auto tgt = fiber_measure(g.target(), n);
  const auto moved =
      pushforward([&](const CantorGerm& h) { return compose(g, h); }, src.measure);
  return l1_distance(moved, tgt.measure);
}

Rational condition_ii_bound(const CantorGerm& g, long long n) {
  if (n < 1) fail(Errc::bad_input, "condition_ii_bound needs n >= 1");
  const long long letters = static_cast<long long>(g.witness_source().size()) +
                            static_cast<long long>(g.witness_target().size());
  return Rational(2 * letters, n);
}

FiniteMeasure<DyadicGerm> fiber_measure_dyadic(const DyadicPoint& x, long long n,
                                               const DyadicPoint& basepoint) {
  return pushforward(
      [&](const SlopePair& m) { return DyadicGerm{x, basepoint, m}; },
      folner_box(n));
}

Rational condition_ii_defect(const DyadicGerm& g, long long n) {
  const auto src = fiber_measure_dyadic(g.source, n);
  const auto tgt = fiber_measure_dyadic(g.target, n);
  const auto moved =
      pushforward([&](const DyadicGerm& h) { return compose(g, h); }, src);
  return l1_distance(moved, tgt);
}

OrbitPart invariant_split(const EPWord& x) {
  return x.is_dyadic() ? OrbitPart::dyadic : OrbitPart::cantor;
}

OrbitPart invariant_split(const Rational& theta) {
  if (theta < 0 || theta >= 1)
    fail(Errc::bad_input, "circle point must lie in [0,1), got " + to_string(theta));
  return is_dyadic(theta) ? OrbitPart::dyadic : OrbitPart::cantor;
}

GermTestSet standard_germ_test_set() {
  GermTestSet set;
  const EPWord alt(BinaryWord(), BinaryWord("01"));   // (01)^∞
  const EPWord ones(BinaryWord(), BinaryWord("1"));   // 1^∞
  const EPWord mixed(BinaryWord("1"), BinaryWord("10"));

  set.cantor.push_back(CantorGerm::identity(alt));
  set.cantor.push_back(CantorGerm(alt, 2, alt));
  set.cantor.push_back(germ_at(gen_A(), ones));
  set.cantor.push_back(germ_at(gen_B(), EPWord(BinaryWord(), BinaryWord("110"))));
  set.cantor.push_back(germ_at(compose(gen_A(), gen_B()), mixed));
  set.cantor.push_back(germ_at(invert(gen_A()), alt));

  const DyadicPoint zero;
  set.dyadic.push_back(DyadicGerm{zero, zero, SlopePair{0, 0}});
  set.dyadic.push_back(germ_at(gen_A(), zero));
  set.dyadic.push_back(germ_at(rot(Rational(1, 2)), zero));
  set.dyadic.push_back(germ_at(gen_B(), DyadicPoint(BinaryWord("1"))));
  set.dyadic.push_back(germ_at(compose(gen_A(), invert(gen_B())),
                               DyadicPoint(BinaryWord("101"))));
  return set;
}

std::string to_string(const CantorGerm& g) {
  return to_string(g.source()) + " ==" + std::to_string(g.cocycle()) + "==> " +
         to_string(g.target());
}

std::string to_string(const DyadicGerm& g) {
  return to_string(g.source) + " --" + to_string(g.slopes) + "--> " +
         to_string(g.target);
}

CantorGerm parse_cantor_germ(const std::string& text) {
  static const std::regex re(R"(^\s*(\S+)\s*==(-?\d+)==>\s*(\S+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    fail(Errc::bad_input, "expected \"source ==k==> target\", got: " + text);
  return CantorGerm(parse_epword(m[3]), std::stoll(m[2]), parse_epword(m[1]));
}

DyadicGerm parse_dyadic_germ(const std::string& text) {
  static const std::regex re(
      R"(^\s*([01]*)\s*--\((-?\d+),(-?\d+)\)-->\s*([01]*)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    fail(Errc::bad_input, "expected \"source --(r,l)--> target\", got: " + text);
  return DyadicGerm{DyadicPoint(BinaryWord(m[4])), DyadicPoint(BinaryWord(m[1])),
                    SlopePair{std::stoll(m[2]), std::stoll(m[3])}};
}

}  // namespace thompson
