#pragma once

#include <vector>

#include "gbn/core.hpp"

namespace gbn {

// Splitting type of a vector bundle on the line, entries weakly increasing.
struct SplittingType {
  std::vector<long long> e;
  long long size() const { return static_cast<long long>(e.size()); }
  bool operator==(const SplittingType&) const = default;
  bool operator<(const SplittingType& o) const { return e < o.e; }  // lexicographic
};

// sort a raw entry list into a SplittingType; empty input is rejected
SplittingType normalize(std::vector<long long> raw);

struct EulerData {
  long long degree;
  long long h0;
  long long h1_line;
};

// degree = sum e_i, h0 = sum max{e_i + 1, 0}, h1 = sum max{0, -e_i - 1}
EulerData euler_data(const SplittingType& e);

// h0 after twisting by m: sum max{m + e_i + 1, 0}
long long twisted_h0(const SplittingType& e, long long m);

// u(e) = sum over pairs i < j of max{0, e_j - e_i - 1}. This is h^1 of the
// endomorphism bundle of O(e), and the codimension the stratum of e is
// expected to have inside the space of degree-e bundles on the curve.
long long magnitude(const SplittingType& e);

// rho'(g, e) = g - u(e); the stratum on a general nu-gonal curve of genus g
// is nonempty iff rho' >= 0, and then of pure dimension min{g, rho'}
long long expected_splitting_dim(long long g, const SplittingType& e);
bool splitting_nonempty(long long g, const SplittingType& e);
long long splitting_dim(long long g, const SplittingType& e);

// dominance within a fixed (length, degree) stratum: lo <= hi iff every
// partial sum of lo is <= the matching partial sum of hi. Mismatched length
// or total degree is an error, not a false.
bool leq(const SplittingType& lo, const SplittingType& hi);

// the unique weakly increasing vector of given length and sum whose entries
// differ by at most one
SplittingType balanced(long long rank, long long degree);

// shifts ell for which the two block vector below is defined:
// max{0, r + 2 - nu} <= ell <= r, and (ell = 0 or ell <= g + 2r + 1 - d - nu)
std::vector<long long> admissible_shifts(long long g, long long nu, long long r,
                                         long long d);

// concatenation of balanced(nu - r - 1 + ell, d' - ell) and
// balanced(r + 1 - ell, ell), sorted, where d' = d + 1 - g - nu. Defined for
// r > d - g and admissible ell; the result always carries exactly r + 1
// sections: the first block stays strictly negative, the second nonnegative.
SplittingType w_vector(long long g, long long nu, long long r, long long ell,
                       long long d);

// all weakly increasing length-nu vectors with entries in [lo, hi] summing to
// total, in lexicographic order
std::vector<SplittingType> enumerate_types(long long nu, long long total,
                                           long long lo, long long hi);

// maximal elements, under dominance, of {e in the window : h0(e) >= r + 1}.
// Errors out if a maximal element touches the window boundary, since the
// window was then too small to be conclusive.
std::vector<SplittingType> brute_force_maximal(long long nu, long long total,
                                               long long r, long long lo,
                                               long long hi);

// same computation with the window grown automatically until conclusive.
// Anything above an element of a window stays inside that element's entry
// range, so a window-maximal element clear of the boundary is maximal
// outright.
std::vector<SplittingType> maximal_types(long long nu, long long total,
                                         long long r);

}  // namespace gbn
