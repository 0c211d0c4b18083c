#include "thompson/prefix_map.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace thompson {

SlopePair operator+(SlopePair a, SlopePair b) {
  return {a.right + b.right, a.left + b.left};
}

SlopePair operator-(SlopePair a) { return {-a.right, -a.left}; }

std::string to_string(const SlopePair& s) {
  return "(" + std::to_string(s.right) + "," + std::to_string(s.left) + ")";
}

namespace {

void check_code(const std::vector<BinaryWord>& words, const char* side) {
  std::vector<BinaryWord> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i].is_prefix_of(sorted[i + 1]))
      fail(Errc::not_prefix_free, std::string(side) + " code is not prefix-free at \"" +
                                      sorted[i].str() + "\" / \"" + sorted[i + 1].str() + "\"");
  }
  std::size_t maxlen = 0;
  for (const auto& w : sorted) maxlen = std::max(maxlen, w.size());
  Int kraft(0);
  for (const auto& w : sorted) kraft += pow2(maxlen - w.size());
  if (kraft != pow2(maxlen))
    fail(Errc::incomplete_code,
         std::string(side) + " code has Kraft sum " + Rational(kraft, pow2(maxlen)).str() +
             ", expected 1");
}

// Merge every surviving sibling pair u0->q0, u1->q1 into u->q.
void reduce_pairs(std::map<std::string, std::string>& m) {
  std::vector<std::string> work;
  work.reserve(m.size());
  for (const auto& [d, r] : m)
    if (!d.empty()) work.push_back(d.substr(0, d.size() - 1));
  while (!work.empty()) {
    std::string u = std::move(work.back());
    work.pop_back();
    auto i0 = m.find(u + "0");
    auto i1 = m.find(u + "1");
    if (i0 == m.end() || i1 == m.end()) continue;
    const std::string& r0 = i0->second;
    const std::string& r1 = i1->second;
    if (r0.empty() || r1.empty() || r0.size() != r1.size()) continue;
    if (r0.back() != '0' || r1.back() != '1') continue;
    if (r0.compare(0, r0.size() - 1, r1, 0, r1.size() - 1) != 0) continue;
    std::string q = r0.substr(0, r0.size() - 1);
    m.erase(i0);
    m.erase(i1);
    m.emplace(u, std::move(q));
    if (!u.empty()) work.push_back(u.substr(0, u.size() - 1));
  }
}

}  // namespace

PrefixMap::PrefixMap() : pairs_{{BinaryWord(), BinaryWord()}}, maxdom_(0) {}

PrefixMap PrefixMap::validate(std::vector<Pair> pairs) {
  if (pairs.empty()) fail(Errc::incomplete_code, "empty table");

  std::vector<BinaryWord> dom, ran;
  dom.reserve(pairs.size());
  ran.reserve(pairs.size());
  for (const auto& [w, z] : pairs) {
    dom.push_back(w);
    ran.push_back(z);
  }
  check_code(dom, "domain");
  check_code(ran, "range");

  std::map<std::string, std::string> m;
  for (auto& [w, z] : pairs) m.emplace(w.str(), z.str());
  reduce_pairs(m);

  PrefixMap out;
  out.pairs_.clear();
  out.maxdom_ = 0;
  for (auto& [w, z] : m) {
    out.maxdom_ = std::max(out.maxdom_, w.size());
    out.pairs_.emplace_back(BinaryWord(w), BinaryWord(z));
  }
  return out;  // std::map iteration is already sorted by domain word
}

const PrefixMap::Pair& PrefixMap::pair_covering(const EPWord& x) const {
  const BinaryWord h = x.head(maxdom_);
  // In a complete prefix code the covering word is the largest one <= h.
  auto it = std::upper_bound(
      pairs_.begin(), pairs_.end(), h,
      [](const BinaryWord& key, const Pair& p) { return key < p.first; });
  --it;
  return *it;
}

EPWord PrefixMap::apply(const EPWord& x) const {
  const Pair& p = pair_covering(x);
  return prepend(p.second, x.shift(p.first.size()));
}

DyadicPoint PrefixMap::apply(const DyadicPoint& d) const {
  EPWord image = apply(EPWord(d));
  // Zero tails are preserved: prefix replacement cannot change the tail class.
  return to_dyadic(image);
}

Rational PrefixMap::circle_apply(const Rational& theta) const {
  if (theta < 0 || theta >= 1)
    fail(Errc::bad_input, "circle point must lie in [0,1), got " + to_string(theta));
  for (const auto& [w, z] : pairs_) {
    Rational lo = psi(w);
    Rational len(1, pow2(w.size()));
    if (theta >= lo && theta < lo + len) {
      // C(w) -> C(z) affinely with slope 2^{|w|-|z|}
      Rational slope = w.size() >= z.size()
                           ? Rational(pow2(w.size() - z.size()))
                           : Rational(1, pow2(z.size() - w.size()));
      return psi(z) + slope * (theta - lo);
    }
  }
  fail(Errc::bad_input, "no covering cylinder");  // unreachable on valid tables
}

bool PrefixMap::is_identity() const {
  return pairs_.size() == 1 && pairs_[0].first == pairs_[0].second &&
         pairs_[0].first.empty();
}

bool PrefixMap::in_T() const {
  // Range words in domain order must be a cyclic rotation of their sorted
  // order; for prefix-free words the lexicographic order matches the
  // interval order, so count cyclic descents.
  const std::size_t n = pairs_.size();
  int descents = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const BinaryWord& cur = pairs_[i].second;
    const BinaryWord& nxt = pairs_[(i + 1) % n].second;
    if (nxt < cur) ++descents;
  }
  return descents <= 1;
}

bool PrefixMap::in_F() const {
  for (std::size_t i = 0; i + 1 < pairs_.size(); ++i)
    if (!(pairs_[i].second < pairs_[i + 1].second)) return false;
  return true;
}

long long PrefixMap::k() const {
  long long k = 0;
  for (const auto& [w, z] : pairs_) {
    k = std::max(k, static_cast<long long>(w.size()));
    k = std::max(k, static_cast<long long>(z.size()) - static_cast<long long>(w.size()));
  }
  return k;
}

SlopePair PrefixMap::slope_exponents(const DyadicPoint& x) const {
  // From above: the zero-tail sequence through x. From below: the
  // one-tail sequence; at 0 that is 1^∞, the approach from 1^-.
  const Pair& above = pair_covering(EPWord(x));
  EPWord below_seq =
      x.word().empty()
          ? EPWord(BinaryWord(), BinaryWord("1"))
          : EPWord(BinaryWord(x.word().str().substr(0, x.word().size() - 1) + "0"),
                   BinaryWord("1"));
  const Pair& below = pair_covering(below_seq);
  auto exp_of = [](const Pair& p) {
    return static_cast<long long>(p.first.size()) -
           static_cast<long long>(p.second.size());
  };
  return {exp_of(above), exp_of(below)};
}

SlopePair PrefixMap::abelianization() const {
  if (!in_F()) fail(Errc::not_in_F, "abelianization needs an element of F");
  return slope_exponents(DyadicPoint());
}

PrefixMap compose(const PrefixMap& t, const PrefixMap& s) {
  std::vector<PrefixMap::Pair> out;
  for (const auto& [a, b] : s.pairs()) {
    const PrefixMap::Pair* cover = nullptr;
    for (const auto& p : t.pairs()) {
      if (p.first.is_prefix_of(b)) {
        cover = &p;
        break;
      }
    }
    if (cover) {
      // b = c·e, so t maps C(b) into C(d·e): one pair handles all of C(a).
      out.emplace_back(a, cover->second + b.suffix(cover->first.size()));
    } else {
      // every t-piece below b refines C(a)
      for (const auto& [c, d] : t.pairs())
        if (b.is_prefix_of(c)) out.emplace_back(a + c.suffix(b.size()), d);
    }
  }
  return PrefixMap::validate(std::move(out));
}

PrefixMap invert(const PrefixMap& s) {
  std::vector<PrefixMap::Pair> out;
  out.reserve(s.size());
  for (const auto& [w, z] : s.pairs()) out.emplace_back(z, w);
  return PrefixMap::validate(std::move(out));
}

PrefixMap gen_A() {
  return PrefixMap::validate({{BinaryWord("0"), BinaryWord("00")},
                              {BinaryWord("10"), BinaryWord("01")},
                              {BinaryWord("11"), BinaryWord("1")}});
}

PrefixMap gen_B() {
  return PrefixMap::validate({{BinaryWord("0"), BinaryWord("0")},
                              {BinaryWord("10"), BinaryWord("100")},
                              {BinaryWord("110"), BinaryWord("101")},
                              {BinaryWord("111"), BinaryWord("11")}});
}

PrefixMap rot(const Rational& q) {
  if (q < 0 || q >= 1) fail(Errc::bad_input, "rotation amount must lie in [0,1)");
  if (!is_dyadic(q)) fail(Errc::bad_input, "rotation amount must be dyadic, got " + to_string(q));
  if (q == 0) return PrefixMap();
  Int den = denominator(q);
  std::size_t m = 0;
  while (pow2(m) < den) ++m;
  const Int num = numerator(q);
  const Int size = pow2(m);
  std::vector<PrefixMap::Pair> pairs;
  for (Int i = 0; i < size; ++i) {
    Int j = i + num;
    if (j >= size) j -= size;
    auto word_of = [&](Int v) {
      std::string bits(m, '0');
      for (std::size_t b = 0; b < m; ++b)
        if (bit_test(v, static_cast<unsigned>(m - 1 - b))) bits[b] = '1';
      return BinaryWord(std::move(bits));
    };
    pairs.emplace_back(word_of(i), word_of(j));
  }
  return PrefixMap::validate(std::move(pairs));
}

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out.push_back(c);
  return out;
}

PrefixMap base_element(const std::string& name) {
  if (name == "A") return gen_A();
  if (name == "B") return gen_B();
  if (name == "id" || name == "e") return PrefixMap();
  if (name.rfind("rot:", 0) == 0) return rot(parse_rational(name.substr(4)));
  fail(Errc::bad_input, "unknown generator: " + name);
}

}  // namespace

PrefixMap parse_group_word(const std::string& word) {
  std::string text = strip_spaces(word);
  if (text.empty()) return PrefixMap();
  PrefixMap acc;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    std::string tok = text.substr(pos, star == std::string::npos ? star : star - pos);
    if (tok.empty()) fail(Errc::bad_input, "empty factor in word: " + word);
    long long exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      const std::string etext = tok.substr(caret + 1);
      std::size_t used = 0;
      try {
        exp = std::stoll(etext, &used);
      } catch (const std::exception&) {
        fail(Errc::bad_input, "bad exponent in: " + tok);
      }
      if (used != etext.size()) fail(Errc::bad_input, "bad exponent in: " + tok);
      tok = tok.substr(0, caret);
    }
    PrefixMap base = base_element(tok);
    if (exp < 0) {
      base = invert(base);
      exp = -exp;
    }
    for (long long i = 0; i < exp; ++i) acc = compose(acc, base);
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return acc;
}

std::string to_string(const PrefixMap& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [w, z] : s.pairs()) {
    if (!first) out << ", ";
    first = false;
    out << w.str() << "->" << z.str();
  }
  out << "}";
  return out.str();
}

}  // namespace thompson
