#include "thompson/words.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace thompson {

Int pow2(std::size_t e) {
  Int r(1);
  return r << e;
}

bool is_dyadic(const Rational& q) {
  Int d = denominator(q);
  return (d & (d - 1)) == 0;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den <= 0) fail(Errc::bad_input, "denominator must be positive: " + text);
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::bad_input, "not a rational: " + text);
  }
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

BinaryWord::BinaryWord(std::string bits) : bits_(std::move(bits)) {
  for (char c : bits_)
    if (c != '0' && c != '1')
      fail(Errc::bad_input, "binary word may contain only 0 and 1: " + bits_);
}

bool BinaryWord::is_prefix_of(const BinaryWord& w) const {
  return bits_.size() <= w.bits_.size() &&
         w.bits_.compare(0, bits_.size(), bits_) == 0;
}

BinaryWord BinaryWord::suffix(std::size_t from) const {
  return BinaryWord(bits_.substr(std::min(from, bits_.size())));
}

BinaryWord operator+(const BinaryWord& a, const BinaryWord& b) {
  return BinaryWord(a.bits_ + b.bits_);
}

DyadicPoint::DyadicPoint(BinaryWord word) : word_(std::move(word)) {
  std::string w = word_.str();
  while (!w.empty() && w.back() == '0') w.pop_back();
  word_ = BinaryWord(std::move(w));
}

namespace {

// Shortest word whose repetition gives p.
std::string primitive_root(const std::string& p) {
  const std::size_t n = p.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = p[i] == p[i - d];
    if (ok) return p.substr(0, d);
  }
  return p;
}

std::string rotate_left(std::string p, std::size_t r) {
  r %= p.size();
  std::rotate(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(r), p.end());
  return p;
}

}  // namespace

EPWord::EPWord() : pre_(), per_(BinaryWord("0")) {}

EPWord::EPWord(BinaryWord preperiod, BinaryWord period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) fail(Errc::bad_input, "period must be nonempty");
  canonicalize();
}

EPWord::EPWord(const DyadicPoint& d) : pre_(d.word()), per_(BinaryWord("0")) {
  // d's word never ends in 0, so this is already canonical.
}

void EPWord::canonicalize() {
  std::string p = primitive_root(per_.str());
  std::string u = pre_.str();
  // Absorb matching preperiod tail letters into a rotation of the period;
  // rotating preserves primitivity.
  while (!u.empty() && u.back() == p.back()) {
    u.pop_back();
    p.insert(p.begin(), p.back());
    p.pop_back();
  }
  pre_ = BinaryWord(std::move(u));
  per_ = BinaryWord(std::move(p));
}

char EPWord::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

BinaryWord EPWord::head(std::size_t n) const {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return BinaryWord(std::move(out));
}

EPWord EPWord::shift(std::size_t n) const {
  if (n <= pre_.size()) return EPWord(pre_.suffix(n), per_);
  return EPWord(BinaryWord(), BinaryWord(rotate_left(per_.str(), n - pre_.size())));
}

bool EPWord::is_dyadic() const { return per_.str() == "0"; }

EPWord prepend(const BinaryWord& w, const EPWord& x) {
  return EPWord(w + x.preperiod(), x.period());
}

Rational psi(const BinaryWord& w) {
  Int num(0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    num <<= 1;
    if (w[i] == '1') num += 1;
  }
  return Rational(num, pow2(w.size()));
}

Rational value(const EPWord& x) {
  Int pnum(0);
  for (std::size_t i = 0; i < x.period().size(); ++i) {
    pnum <<= 1;
    if (x.period()[i] == '1') pnum += 1;
  }
  Rational tail(pnum, pow2(x.period().size()) - 1);
  return psi(x.preperiod()) + tail / Rational(pow2(x.preperiod().size()));
}

EPWord phi(const Rational& theta) {
  if (theta < 0 || theta >= 1)
    fail(Errc::bad_input, "phi needs an argument in [0,1), got " + to_string(theta));
  std::map<Rational, std::size_t> seen;
  std::string bits;
  Rational t = theta;
  for (;;) {
    auto [it, fresh] = seen.emplace(t, bits.size());
    if (!fresh) {
      return EPWord(BinaryWord(bits.substr(0, it->second)),
                    BinaryWord(bits.substr(it->second)));
    }
    t *= 2;
    if (t >= 1) {
      bits.push_back('1');
      t -= 1;
    } else {
      bits.push_back('0');
    }
  }
}

DyadicPoint canonical_dyadic(const BinaryWord& w) { return DyadicPoint(w); }

DyadicPoint to_dyadic(const EPWord& x) {
  if (!x.is_dyadic()) fail(Errc::bad_input, "sequence does not end in 0^inf: " + to_string(x));
  return DyadicPoint(x.preperiod());
}

BinaryWord parse_binary_word(const std::string& text) { return BinaryWord(text); }

EPWord parse_epword(const std::string& text) {
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open ||
      close + 1 != text.size())
    fail(Errc::bad_input, "expected u(p), got: " + text);
  return EPWord(BinaryWord(text.substr(0, open)),
                BinaryWord(text.substr(open + 1, close - open - 1)));
}

std::string to_string(const BinaryWord& w) { return w.str(); }

std::string to_string(const DyadicPoint& d) { return d.word().str(); }

std::string to_string(const EPWord& x) {
  return x.preperiod().str() + "(" + x.period().str() + ")";
}

}  // namespace thompson
