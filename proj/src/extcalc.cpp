#include "gbn/extcalc.hpp"

#include <algorithm>

namespace gbn {

long long ext_dim(long long g, long long d, long long delta, bool iso,
                  std::optional<long long> explicit_h0) {
  require_small(g, "g");
  require_small(d, "d");
  require_small(delta, "delta");
  require(g >= 1, "ext_dim: g must be at least 1");
  if (explicit_h0) {
    require_small(*explicit_h0, "explicit_h0");
    require(*explicit_h0 >= 0, "ext_dim: explicit h0 must be nonnegative");
    return *explicit_h0;
  }
  if (iso) return g;
  require(2 * delta - d >= 0,
          "ext_dim: 2 delta - d < 0, the nonspeciality behind the formula can "
          "fail; supply the h0 explicitly");
  long long m = 2 * delta - d + g - 1;
  require(m >= 0, "ext_dim: negative dimension");
  return m;
}

ExtensionData make_extension_data(long long g, long long d, long long delta,
                                  long long l, long long r, bool iso,
                                  std::optional<long long> explicit_h0) {
  require_small(l, "l");
  require_small(r, "r");
  require(l >= 0 && r >= 0, "extension data: l and r must be nonnegative");
  ExtensionData x{g, d, delta, l, r, iso, 0};
  x.m = ext_dim(g, d, delta, iso, explicit_h0);
  return x;
}

long long degeneracy_codim(long long t, long long l, long long r) {
  require_small(t, "t");
  require_small(l, "l");
  require_small(r, "r");
  require(t >= 1, "degeneracy_codim: t must be at least 1");
  require(l >= 0 && r >= 0, "degeneracy_codim: l and r must be nonnegative");
  return std::max(0LL, t * (l - r + t));
}

long long expected_degeneracy_dim(long long m, long long t, long long l,
                                  long long r) {
  require_small(m, "m");
  return std::min(m, m - degeneracy_codim(t, l, r));
}

long long w1_dim(long long l, long long r, long long m) {
  require_small(l, "l");
  require_small(r, "r");
  require_small(m, "m");
  require(r >= 1, "w1_dim: requires r >= 1");
  require(l >= 1, "w1_dim: requires l >= 1");
  require(l >= r - 1, "w1_dim: requires l >= r - 1");
  require(m >= l + 1, "w1_dim: requires m >= l + 1");
  return m - (l - r + 1);
}

long long generic_speciality(long long quotient_h1, long long l, long long r,
                             bool on_w1) {
  require_small(quotient_h1, "quotient_h1");
  require_small(l, "l");
  require_small(r, "r");
  require(quotient_h1 >= 0, "generic_speciality: quotient h1 negative");
  require(l >= r,
          "generic_speciality: needs l >= r for the generic coboundary to be "
          "surjective");
  return quotient_h1 + (on_w1 ? 1 : 0);
}

SegreData segre_data(long long d, long long delta) {
  require_small(d, "d");
  require_small(delta, "delta");
  SegreData s;
  s.gamma_sq = 2 * delta - d;
  s.semistable_possible = s.gamma_sq >= 0;
  return s;
}

SecantDims secant_dims(long long g, long long d, long long delta,
                       long long sigma) {
  require_small(sigma, "sigma");
  long long gam = 2 * delta - d;
  require(gam >= 2, "secant_stability_test: requires 2 delta - d >= 2");
  require(((sigma - gam) % 2) == 0,
          "secant_stability_test: sigma must have the parity of 2 delta - d");
  require(sigma >= 4 + d - 2 * delta,
          "secant_stability_test: sigma below 4 + d - 2 delta");
  require(sigma <= gam, "secant_stability_test: sigma above 2 delta - d");
  SecantDims s;
  s.h = (gam + sigma - 2) / 2;
  s.dim_p = ext_dim(g, d, delta, false) - 1;
  s.secant_dim = std::min(s.dim_p, 2 * s.h - 1);
  return s;
}

SecantVerdict secant_stability_test(long long g, long long d, long long delta,
                                    long long sigma,
                                    long long family_proj_dim) {
  require_small(family_proj_dim, "family_proj_dim");
  SecantDims s = secant_dims(g, d, delta, sigma);
  require(family_proj_dim >= 0,
          "secant_stability_test: family dimension negative");
  require(family_proj_dim <= s.dim_p,
          "secant_stability_test: family does not fit inside P(Ext^1)");
  if (family_proj_dim > s.secant_dim) return SecantVerdict::Certified;
  if (family_proj_dim == s.secant_dim) return SecantVerdict::Boundary;
  return SecantVerdict::NotCertified;
}

long long modular_image_dim(long long base_dim, long long fiber_family_dim,
                            long long generic_fiber_dim) {
  require_small(base_dim, "base_dim");
  require_small(fiber_family_dim, "fiber_family_dim");
  require_small(generic_fiber_dim, "generic_fiber_dim");
  require(base_dim >= 0, "modular_image_dim: base dimension negative");
  require(fiber_family_dim >= 0,
          "modular_image_dim: fiber family dimension negative");
  require(generic_fiber_dim >= 0,
          "modular_image_dim: generic fiber dimension negative");
  require(generic_fiber_dim <= base_dim + fiber_family_dim,
          "modular_image_dim: generic fiber exceeds the total space");
  long long out = base_dim + fiber_family_dim - generic_fiber_dim;
  require(out >= 0, "modular_image_dim: negative image dimension");
  return out;
}

const char* secant_verdict_name(SecantVerdict v) {
  switch (v) {
    case SecantVerdict::Certified: return "certified";
    case SecantVerdict::Boundary: return "boundary";
    case SecantVerdict::NotCertified: return "not_certified";
  }
  return "?";
}

}  // namespace gbn
