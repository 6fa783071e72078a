#pragma once

#include <optional>

#include "gbn/core.hpp"

namespace gbn {

// Dimension bookkeeping for extensions 0 -> N -> F -> L -> 0 of line bundles
// on a genus g curve, deg L = delta, deg N = d - delta.

// dim Ext^1(L, N): g when L = N, otherwise h0(K + L - N) which equals
// 2 delta - d + g - 1 as long as 2 delta - d >= 0 keeps that twist
// nonspecial. When it does not, the formula is not valid and the caller must
// pass the h0 explicitly; this function refuses to guess.
long long ext_dim(long long g, long long d, long long delta, bool iso,
                  std::optional<long long> explicit_h0 = std::nullopt);

struct ExtensionData {
  long long g, d, delta;
  long long l, r;  // l = h0(L), r = h1(N)
  bool iso;
  long long m;  // dim Ext^1(L, N)
};

ExtensionData make_extension_data(long long g, long long d, long long delta,
                                  long long l, long long r, bool iso,
                                  std::optional<long long> explicit_h0 =
                                      std::nullopt);

// expected codimension c(t) = max{0, t(l - r + t)} of the locus where the
// coboundary H0(L) -> H1(N) drops rank by at least t
long long degeneracy_codim(long long t, long long l, long long r);

// min{m, m - c(t)}
long long expected_degeneracy_dim(long long m, long long t, long long l,
                                  long long r);

// dimension m - (l - r + 1) of the corank one locus W_1 inside Ext^1, valid
// under r >= 1, l >= max{1, r - 1}, m >= l + 1; each violated hypothesis is
// reported by name. On W_1 the generic class has coboundary of corank
// exactly one, and when l >= r the generic class of the whole space has
// corank zero.
long long w1_dim(long long l, long long r, long long m);

// h1 of the extension bundle: the quotient's h1 plus the corank of the
// coboundary, so +0 for a generic class and +1 for a generic class on W_1.
// Needs l >= r, else corank zero is not the generic value and this refuses.
long long generic_speciality(long long quotient_h1, long long l, long long r,
                             bool on_w1 = false);

struct SegreData {
  long long gamma_sq;        // 2 delta - d
  bool semistable_possible;  // gamma_sq >= 0
};
SegreData segre_data(long long d, long long delta);

enum class SecantVerdict {
  Certified,     // family dimension strictly beats the secant variety
  Boundary,      // equality: the count alone cannot decide
  NotCertified,  // secant variety at least as large as the family
};

struct SecantDims {
  long long h;           // secant index (2 delta - d + sigma - 2) / 2
  long long dim_p;       // dim P(Ext^1)
  long long secant_dim;  // min{dim_p, 2h - 1}
};

// the dimension side of the secant criterion, shared by the verdict below
// and by callers that bring their own family
SecantDims secant_dims(long long g, long long d, long long delta,
                       long long sigma);

// stability certificate s(F) >= sigma by secant avoidance: classes on the
// h-secant variety of the degree 2 delta - d model, h = (2delta-d+sigma-2)/2,
// are exactly those with a destabilizing line subbundle of excess sigma; the
// secant has dimension min{dim P, 2h - 1} inside P = P(Ext^1) of dimension
// ext_dim - 1. Requires 2 delta - d >= 2, sigma of the same parity as
// 2 delta - d, 4 + d - 2 delta <= sigma <= 2 delta - d, and the family to
// live inside P.
SecantVerdict secant_stability_test(long long g, long long d, long long delta,
                                    long long sigma,
                                    long long family_proj_dim);

// base + fiber - generic_fiber, with the obvious sanity checks
long long modular_image_dim(long long base_dim, long long fiber_family_dim,
                            long long generic_fiber_dim);

const char* secant_verdict_name(SecantVerdict v);

}  // namespace gbn
