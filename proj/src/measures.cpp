#include "thompson/measures.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <vector>

namespace thompson {

FiniteMeasure<DyadicPoint> mu_N(const EPWord& x, long long N) {
  if (N < 1) fail(Errc::bad_input, "mu_N needs N >= 1");
  FiniteMeasure<DyadicPoint>::WeightMap w;
  const Rational unit(1, N);
  for (long long j = 1; j <= N; ++j)
    w[DyadicPoint(x.head(static_cast<std::size_t>(j)))] += unit;
  return FiniteMeasure<DyadicPoint>::from_weights(std::move(w));
}

Rational defect_at(const PrefixMap& s, const EPWord& x, long long N) {
  auto pushed = pushforward([&](const DyadicPoint& d) { return s.apply(d); },
                            mu_N(x, N));
  return l1_distance(pushed, mu_N(s.apply(x), N));
}

namespace {

// Plain-string view of the table, for the enumeration inner loop.
struct RawTable {
  std::vector<std::pair<std::string, std::string>> rows;  // sorted by domain
  std::size_t maxdom = 0;

  explicit RawTable(const PrefixMap& s) {
    rows.reserve(s.size());
    for (const auto& [w, z] : s.pairs()) rows.emplace_back(w.str(), z.str());
    maxdom = s.max_domain_length();
  }

  // Covering row for the sequence a·0^∞.
  const std::pair<std::string, std::string>& covering(const std::string& a) const {
    std::string key = a.substr(0, std::min(a.size(), maxdom));
    key.resize(maxdom, '0');
    auto it = std::upper_bound(
        rows.begin(), rows.end(), key,
        [](const std::string& k, const auto& row) { return k < row.first; });
    --it;
    return *it;
  }

  // Image of the zero-tail point a·0^∞, as a word with no trailing zeros.
  std::string apply_dyadic_word(const std::string& a) const {
    const auto& [w, z] = covering(a);
    std::string out = z;
    if (a.size() > w.size()) out.append(a, w.size(), std::string::npos);
    while (!out.empty() && out.back() == '0') out.pop_back();
    return out;
  }
};

long long count_l1(std::vector<std::string>& a, std::vector<std::string>& b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  long long diff = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      ++diff;
      ++i;
    } else if (i == a.size() || b[j] < a[i]) {
      ++diff;
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return diff;
}

// N times the defect on the cylinder C(p), |p| = N + k(s).
long long defect_numerator(const RawTable& table, const std::string& p, long long N) {
  std::vector<std::string> lhs, rhs;
  lhs.reserve(static_cast<std::size_t>(N));
  rhs.reserve(static_cast<std::size_t>(N));

  // atoms of s·mu_N(x): images of the truncated-and-padded prefixes
  std::size_t last_one = 0;  // length of p[0:j) with trailing zeros removed
  for (long long j = 1; j <= N; ++j) {
    if (p[static_cast<std::size_t>(j - 1)] == '1') last_one = static_cast<std::size_t>(j);
    lhs.push_back(table.apply_dyadic_word(p.substr(0, last_one)));
  }

  // atoms of mu_N(s·x): prefixes of the image word
  const auto& [w, z] = table.covering(p);
  std::string y = z + p.substr(w.size());
  last_one = 0;
  for (long long j = 1; j <= N; ++j) {
    if (y[static_cast<std::size_t>(j - 1)] == '1') last_one = static_cast<std::size_t>(j);
    rhs.push_back(y.substr(0, last_one));
  }

  return count_l1(lhs, rhs);
}

struct ChunkResult {
  long long max_num = -1;
  std::uint64_t argmax = 0;
};

ChunkResult scan_range(const RawTable& table, long long L, long long N,
                       std::uint64_t begin, std::uint64_t end) {
  ChunkResult r;
  std::string p(static_cast<std::size_t>(L), '0');
  for (std::uint64_t i = begin; i < end; ++i) {
    for (long long b = 0; b < L; ++b)
      p[static_cast<std::size_t>(b)] = (i >> (L - 1 - b)) & 1 ? '1' : '0';
    long long num = defect_numerator(table, p, N);
    if (num > r.max_num) {
      r.max_num = num;
      r.argmax = i;
    }
  }
  return r;
}

}  // namespace

DefectReport sup_defect(const PrefixMap& s, long long N, long long cap, unsigned workers) {
  if (N < 1) fail(Errc::bad_input, "sup_defect needs N >= 1");
  if (cap > kEnumerationCap)
    fail(Errc::bad_input, "enumeration cap may not exceed " + std::to_string(kEnumerationCap));
  const long long k = s.k();
  const long long L = N + k;
  if (L > cap)
    fail(Errc::cap_exceeded, "N + k(s) = " + std::to_string(L) + " exceeds the cap " +
                                 std::to_string(cap) + "; use a sampled estimate");

  const RawTable table(s);
  const std::uint64_t total = std::uint64_t{1} << L;

  if (workers == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    workers = std::clamp(hw, 1u, 8u);
  }
  if (total < 4096) workers = 1;

  std::vector<std::future<ChunkResult>> futures;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    futures.push_back(std::async(std::launch::async, [&table, L, N, lo, hi] {
      return scan_range(table, L, N, lo, hi);
    }));
  }

  ChunkResult best;
  for (auto& f : futures) {
    ChunkResult r = f.get();
    // ties resolve to the lexicographically least witness
    if (r.max_num > best.max_num ||
        (r.max_num == best.max_num && r.argmax < best.argmax))
      best = r;
  }

  std::string witness(static_cast<std::size_t>(L), '0');
  for (long long b = 0; b < L; ++b)
    witness[static_cast<std::size_t>(b)] = (best.argmax >> (L - 1 - b)) & 1 ? '1' : '0';

  DefectReport report;
  report.element = s;
  report.N = N;
  report.sup_defect = Rational(best.max_num, N);
  report.bound = Rational(4 * k, N);
  report.witness = BinaryWord(std::move(witness));
  return report;
}

Rational sampled_sup_defect(const PrefixMap& s, long long N, long long samples,
                            std::uint64_t seed) {
  if (N < 1) fail(Errc::bad_input, "sampled_sup_defect needs N >= 1");
  Rng rng(seed);
  Rational best(0);  // empty max convention
  for (long long i = 0; i < samples; ++i) {
    Rational d = defect_at(s, random_epword(rng), N);
    if (d > best) best = d;
  }
  return best;
}

FiniteMeasure<SlopePair> folner_box(long long n) {
  if (n < 0) fail(Errc::bad_input, "folner_box needs n >= 0");
  FiniteMeasure<SlopePair>::WeightMap w;
  const long long side = 2 * n + 1;
  const Rational unit(1, side * side);
  for (long long a = -n; a <= n; ++a)
    for (long long b = -n; b <= n; ++b) w.emplace(SlopePair{a, b}, unit);
  return FiniteMeasure<SlopePair>::from_weights(std::move(w));
}

Rational folner_defect(const SlopePair& a, long long n) {
  if (n < 0) fail(Errc::bad_input, "folner_defect needs n >= 0");
  const long long side = 2 * n + 1;
  const long long ox = std::max(0ll, side - std::llabs(a.right));
  const long long oy = std::max(0ll, side - std::llabs(a.left));
  return 2 * (Rational(1) - Rational(ox * oy, side * side));
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

EPWord random_epword(Rng& rng) {
  const std::size_t prelen = rng.below(13);
  const std::size_t perlen = 1 + rng.below(6);
  std::string pre, per;
  for (std::size_t i = 0; i < prelen; ++i) pre.push_back(rng.below(2) ? '1' : '0');
  for (std::size_t i = 0; i < perlen; ++i) per.push_back(rng.below(2) ? '1' : '0');
  return EPWord(BinaryWord(std::move(pre)), BinaryWord(std::move(per)));
}

}  // namespace thompson
