#pragma once

#include <stdexcept>
#include <string>

namespace gbn {

// Everything here is exact 64 bit integer arithmetic. Public entry points cap
// their inputs at |x| <= 10^6, which keeps every expression in the library
// (all linear or quadratic in the inputs) far away from overflow.
inline constexpr long long input_cap = 1000000;

[[noreturn]] void fail(const std::string& what);
void require(bool ok, const std::string& what);
void require_small(long long v, const char* name);

// A nu-gonal curve of genus g. General means: general in the nu-gonal locus,
// so the gonality pencil A is unique and W^1_nu = {A}.
struct CurveParams {
  long long g;
  long long nu;
  CurveParams(long long g_, long long nu_);
};

// rank 1 and rank 2 classification routines insist on g >= 4
void require_classification_genus(const CurveParams& c);

struct LineBundleProfile {
  long long degree;
  long long h0;
  long long h1;
};

// rho(g, r, d) = g - (r+1)(g+r-d)
long long rho_rank1(long long g, long long r, long long d);

// cohomology of a general line bundle of degree e on a general genus g curve
LineBundleProfile general_line_bundle_profile(long long g, long long e);

// k_i = d - 2g + 2 + i
long long k_index(long long g, long long d, long long i);

// expected dimension 4g - 3 - i*k_i of the rank 2 locus with i extra
// sections; at i = 2 this reads 8g - 11 - 2d
long long rho_rank2(long long g, long long d, long long i);

// fixed determinant expected dimension 3(g-1) - 2*k_2 = 7g - 11 - 2d
long long rho_fixed_det(long long g, long long d);

}  // namespace gbn
