#include "gbn/core.hpp"

#include <algorithm>

namespace gbn {

void fail(const std::string& what) { throw std::invalid_argument(what); }

void require(bool ok, const std::string& what) {
  if (!ok) fail(what);
}

void require_small(long long v, const char* name) {
  if (v > input_cap || v < -input_cap)
    fail(std::string(name) + " out of supported range (|x| <= 10^6)");
}

CurveParams::CurveParams(long long g_, long long nu_) : g(g_), nu(nu_) {
  require_small(g, "g");
  require_small(nu, "nu");
  require(g >= 2, "CurveParams: genus must be at least 2");
  // nu-gonal curves that are general in the sense used here need
  // 3 <= nu < floor((g+3)/2); the top value is the generic gonality
  require(nu >= 3, "CurveParams: gonality must be at least 3");
  require(nu < (g + 3) / 2,
          "CurveParams: gonality must satisfy nu < floor((g+3)/2)");
}

void require_classification_genus(const CurveParams& c) {
  require(c.g >= 4, "classification requires genus >= 4");
}

long long rho_rank1(long long g, long long r, long long d) {
  require_small(g, "g");
  require_small(r, "r");
  require_small(d, "d");
  require(g >= 0, "rho_rank1: g must be nonnegative");
  require(r >= 0, "rho_rank1: r must be nonnegative");
  return g - (r + 1) * (g + r - d);
}

LineBundleProfile general_line_bundle_profile(long long g, long long e) {
  require_small(g, "g");
  require_small(e, "e");
  require(g >= 1, "general_line_bundle_profile: g must be at least 1");
  LineBundleProfile p;
  p.degree = e;
  p.h0 = std::max(0LL, e - g + 1);
  p.h1 = std::max(0LL, g - 1 - e);
  return p;
}

long long k_index(long long g, long long d, long long i) {
  require_small(g, "g");
  require_small(d, "d");
  require_small(i, "i");
  require(i >= 0, "k_index: i must be nonnegative");
  return d - 2 * g + 2 + i;
}

long long rho_rank2(long long g, long long d, long long i) {
  require(i >= 1, "rho_rank2: i must be at least 1");
  return 4 * g - 3 - i * k_index(g, d, i);
}

long long rho_fixed_det(long long g, long long d) {
  return 3 * (g - 1) - 2 * k_index(g, d, 2);
}

}  // namespace gbn
