#pragma once

#include "thompson/errors.hpp"
#include "thompson/rational.hpp"

#include <compare>
#include <cstddef>
#include <string>

namespace thompson {

/// Finite word over the alphabet {0,1}. The empty word stands for the
/// whole space: C(w) is the cylinder of infinite sequences extending w,
/// and C(ε) is everything.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::string bits);  // rejects characters outside {0,1}

  const std::string& str() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  char operator[](std::size_t i) const { return bits_[i]; }

  bool is_prefix_of(const BinaryWord& w) const;
  BinaryWord suffix(std::size_t from) const;

  friend BinaryWord operator+(const BinaryWord& a, const BinaryWord& b);

  // Lexicographic; on prefix-incomparable words this agrees with the
  // order of the corresponding dyadic intervals.
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::string bits_;
};

/// Point of the zero-tail orbit: the sequence w0^∞, stored as the unique
/// word with no trailing zeros. The empty word is 0^∞ itself.
class DyadicPoint {
 public:
  DyadicPoint() = default;                // 0^∞
  explicit DyadicPoint(BinaryWord word);  // strips trailing zeros

  const BinaryWord& word() const { return word_; }

  friend auto operator<=>(const DyadicPoint&, const DyadicPoint&) = default;

 private:
  BinaryWord word_;
};

/// Eventually periodic infinite binary sequence in canonical form:
/// the period is primitive and the preperiod is the shortest possible.
/// Two sequences are equal iff their canonical fields coincide.
class EPWord {
 public:
  EPWord();  // 0^∞
  EPWord(BinaryWord preperiod, BinaryWord period);
  explicit EPWord(const DyadicPoint& d);  // d.word() followed by 0^∞

  const BinaryWord& preperiod() const { return pre_; }
  const BinaryWord& period() const { return per_; }

  char at(std::size_t i) const;  // 0-based
  BinaryWord head(std::size_t n) const;
  EPWord shift(std::size_t n) const;

  bool is_dyadic() const;  // tail 0^∞

  friend auto operator<=>(const EPWord&, const EPWord&) = default;

 private:
  void canonicalize();

  BinaryWord pre_;
  BinaryWord per_;
};

EPWord prepend(const BinaryWord& w, const EPWord& x);

/// Binary-fraction value of a finite word: sum of w_n 2^{-n}. Lands in [0,1).
Rational psi(const BinaryWord& w);

/// Value of an eventually periodic sequence as a base-2 series, in closed form.
Rational value(const EPWord& x);

/// Binary expansion of a rational in [0,1). Dyadic inputs get the
/// expansion ending in 0^∞, never the 1^∞ tail.
EPWord phi(const Rational& theta);

DyadicPoint canonical_dyadic(const BinaryWord& w);
DyadicPoint to_dyadic(const EPWord& x);  // requires is_dyadic()

BinaryWord parse_binary_word(const std::string& text);
EPWord parse_epword(const std::string& text);  // "u(p)", e.g. "11(0)" or "(01)"
std::string to_string(const BinaryWord& w);
std::string to_string(const DyadicPoint& d);
std::string to_string(const EPWord& x);

}  // namespace thompson
