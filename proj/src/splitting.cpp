#include "gbn/splitting.hpp"

#include <algorithm>

namespace gbn {

namespace {

void check_entries(const SplittingType& e, const char* who) {
  require(!e.e.empty(), std::string(who) + ": empty splitting type");
  for (long long v : e.e) require_small(v, "entry");
  for (size_t i = 1; i < e.e.size(); ++i)
    require(e.e[i - 1] <= e.e[i],
            std::string(who) + ": entries not weakly increasing");
}

long long floordiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SplittingType normalize(std::vector<long long> raw) {
  require(!raw.empty(), "normalize: empty splitting type");
  for (long long v : raw) require_small(v, "entry");
  std::sort(raw.begin(), raw.end());
  return SplittingType{std::move(raw)};
}

EulerData euler_data(const SplittingType& e) {
  check_entries(e, "euler_data");
  EulerData out{0, 0, 0};
  for (long long v : e.e) {
    out.degree += v;
    out.h0 += std::max(v + 1, 0LL);
    out.h1_line += std::max(0LL, -v - 1);
  }
  return out;
}

long long twisted_h0(const SplittingType& e, long long m) {
  check_entries(e, "twisted_h0");
  require_small(m, "m");
  long long h = 0;
  for (long long v : e.e) h += std::max(m + v + 1, 0LL);
  return h;
}

long long magnitude(const SplittingType& e) {
  check_entries(e, "magnitude");
  long long u = 0;
  for (size_t i = 0; i < e.e.size(); ++i)
    for (size_t j = i + 1; j < e.e.size(); ++j)
      u += std::max(0LL, e.e[j] - e.e[i] - 1);
  return u;
}

long long expected_splitting_dim(long long g, const SplittingType& e) {
  require_small(g, "g");
  require(g >= 1, "expected_splitting_dim: g must be at least 1");
  return g - magnitude(e);
}

bool splitting_nonempty(long long g, const SplittingType& e) {
  return expected_splitting_dim(g, e) >= 0;
}

long long splitting_dim(long long g, const SplittingType& e) {
  long long rho = expected_splitting_dim(g, e);
  require(rho >= 0, "splitting_dim: stratum is empty");
  return std::min(g, rho);
}

bool leq(const SplittingType& lo, const SplittingType& hi) {
  check_entries(lo, "leq");
  check_entries(hi, "leq");
  require(lo.size() == hi.size(), "leq: lengths differ");
  long long sl = 0, sh = 0;
  for (long long i = 0; i < lo.size(); ++i) {
    sl += lo.e[i];
    sh += hi.e[i];
  }
  require(sl == sh, "leq: total degrees differ");
  sl = sh = 0;
  for (long long i = 0; i < lo.size(); ++i) {
    sl += lo.e[i];
    sh += hi.e[i];
    if (sl > sh) return false;
  }
  return true;
}

SplittingType balanced(long long rank, long long degree) {
  require_small(rank, "rank");
  require_small(degree, "degree");
  require(rank >= 1, "balanced: rank must be at least 1");
  long long q = floordiv(degree, rank);
  long long rem = degree - q * rank;  // 0 <= rem < rank
  std::vector<long long> v;
  v.reserve(rank);
  for (long long i = 0; i < rank - rem; ++i) v.push_back(q);
  for (long long i = 0; i < rem; ++i) v.push_back(q + 1);
  return SplittingType{std::move(v)};
}

std::vector<long long> admissible_shifts(long long g, long long nu, long long r,
                                         long long d) {
  require_small(g, "g");
  require_small(nu, "nu");
  require_small(r, "r");
  require_small(d, "d");
  require(g >= 1, "admissible_shifts: g must be at least 1");
  require(nu >= 1, "admissible_shifts: nu must be at least 1");
  require(r >= 0, "admissible_shifts: r must be nonnegative");
  std::vector<long long> out;
  long long lo = std::max(0LL, r + 2 - nu);
  for (long long ell = lo; ell <= r; ++ell) {
    if (ell == 0 || ell <= g + 2 * r + 1 - d - nu) out.push_back(ell);
  }
  return out;
}

SplittingType w_vector(long long g, long long nu, long long r, long long ell,
                       long long d) {
  require(r > d - g, "w_vector: requires r > d - g");
  auto shifts = admissible_shifts(g, nu, r, d);
  require(std::find(shifts.begin(), shifts.end(), ell) != shifts.end(),
          "w_vector: shift not admissible");
  long long dp = d + 1 - g - nu;
  auto block = [](long long rank, long long degree) -> std::vector<long long> {
    if (rank == 0) {
      require(degree == 0, "w_vector: rank zero block with nonzero degree");
      return {};
    }
    require(rank > 0, "w_vector: negative block rank");
    return balanced(rank, degree).e;
  };
  std::vector<long long> v = block(nu - r - 1 + ell, dp - ell);
  std::vector<long long> w = block(r + 1 - ell, ell);
  v.insert(v.end(), w.begin(), w.end());
  return normalize(std::move(v));
}

std::vector<SplittingType> enumerate_types(long long nu, long long total,
                                           long long lo, long long hi) {
  require_small(nu, "nu");
  require_small(total, "total");
  require_small(lo, "min_entry");
  require_small(hi, "max_entry");
  require(nu >= 1, "enumerate_types: nu must be at least 1");
  require(nu <= 64, "enumerate_types: nu too large to enumerate");
  require(lo <= hi, "enumerate_types: min_entry > max_entry");
  require(nu * lo <= total && total <= nu * hi,
          "enumerate_types: total not achievable within the entry bounds");
  std::vector<SplittingType> out;
  std::vector<long long> cur(nu);
  // depth first, keeping entries weakly increasing; prefix pruning by what the
  // remaining slots can still sum to
  auto rec = [&](auto&& self, long long pos, long long minval,
                 long long remaining) -> void {
    if (pos == nu) {
      out.push_back(SplittingType{cur});
      return;
    }
    long long slots = nu - pos - 1;
    for (long long v = minval; v <= hi; ++v) {
      long long rest = remaining - v;
      if (rest < slots * v) break;  // everything later is >= v
      if (rest > slots * hi) continue;
      cur[pos] = v;
      self(self, pos + 1, v, rest);
    }
  };
  rec(rec, 0, lo, total);
  return out;  // construction order is lexicographic
}

namespace {

std::vector<SplittingType> maximal_in_window(long long nu, long long total,
                                             long long r, long long lo,
                                             long long hi) {
  require(r >= 0, "brute_force_maximal: r must be nonnegative");
  auto all = enumerate_types(nu, total, lo, hi);
  std::vector<SplittingType> pool;
  for (auto& e : all)
    if (euler_data(e).h0 >= r + 1) pool.push_back(e);
  // dominance via precomputed partial sums; all pool members share length
  // and total already
  std::vector<std::vector<long long>> prefix(pool.size());
  for (size_t i = 0; i < pool.size(); ++i) {
    prefix[i].reserve(nu);
    long long s = 0;
    for (long long v : pool[i].e) prefix[i].push_back(s += v);
  }
  std::vector<SplittingType> out;
  for (size_t i = 0; i < pool.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < pool.size() && maximal; ++j) {
      if (i == j || prefix[i] == prefix[j]) continue;
      bool under = true;
      for (long long k = 0; k < nu && under; ++k)
        under = prefix[i][k] <= prefix[j][k];
      maximal = !under;
    }
    if (maximal) out.push_back(pool[i]);
  }
  return out;
}

bool touches(const std::vector<SplittingType>& v, long long lo, long long hi) {
  for (const auto& e : v)
    if (e.e.front() == lo || e.e.back() == hi) return true;
  return false;
}

}  // namespace

std::vector<SplittingType> brute_force_maximal(long long nu, long long total,
                                               long long r, long long lo,
                                               long long hi) {
  auto out = maximal_in_window(nu, total, r, lo, hi);
  if (touches(out, lo, hi))
    fail("brute_force_maximal: maximal element touches the window boundary, "
         "widen the window");
  return out;
}

std::vector<SplittingType> maximal_types(long long nu, long long total,
                                         long long r) {
  require_small(nu, "nu");
  require_small(total, "total");
  require(r >= 0, "maximal_types: r must be nonnegative");
  long long q = floordiv(total, std::max(nu, 1LL));
  long long lo = q - (r + 3);
  long long hi = q + r + 3;
  for (int tries = 0; tries < 256; ++tries) {
    auto out = maximal_in_window(nu, total, r, lo, hi);
    // an empty answer from a too-small window is inconclusive too: for
    // nu >= 2 the section count is unbounded over the full poset, so some
    // element always clears r + 1
    bool inconclusive = touches(out, lo, hi) || (out.empty() && nu >= 2);
    if (!inconclusive) return out;
    lo -= 2;
    hi += 2;
  }
  fail("maximal_types: window failed to stabilize");
}

}  // namespace gbn
