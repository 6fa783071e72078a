#pragma once

#include <optional>

#include "gbn/splitting.hpp"

namespace gbn {

enum class GenericElement {
  GonalPlusBasePoints,  // gonality pencil plus a general base divisor
  BasePointFreePencil,
  GeneralSeries,  // stratum of rank above 1, no finer description carried
  FullPicard,
};

struct Rank1Component {
  // stratum shift; absent in the full Picard case, which is not a stratum
  std::optional<long long> shift;
  // splitting type of the stratum; the balanced generic type when full Picard
  SplittingType vector;
  long long dimension;
  GenericElement generic;
  long long base_degree = 0;  // meaningful for GonalPlusBasePoints only
};

// components of W^r_d on a general nu-gonal curve. For r <= d - g the locus
// is all of Picard (one component of dimension g); otherwise one component
// for each admissible shift whose stratum is nonempty, of dimension
// rho(g, r - ell, d) - ell * nu. An empty return means the locus is empty.
std::vector<Rank1Component> stratify(const CurveParams& c, long long r,
                                     long long d);

enum class PencilCase {
  Empty,                // t < nu
  GonalPlusBasePoints,  // nu <= t < (g+2)/2
  BothTypes,            // (g+2)/2 <= t <= g+2-nu
  BasePointFree,        // g+2-nu < t < g+1
  FullPicard,           // t >= g+1
};

struct PencilTable {
  PencilCase row;
  std::vector<Rank1Component> components;
};

// the pencil classification by degree t, rows as in PencilCase; dimensions
// are t - nu for the gonal-plus-base-points family and 2t - g - 2 for the
// base point free one. Always agrees with stratify(c, 1, t).
PencilTable pencil_table(const CurveParams& c, long long t);

// dim |r A| for the gonality pencil A: r while g >= r(nu - 1), r nu - g after
long long gonal_power_dim(const CurveParams& c, long long r);

const char* generic_element_name(GenericElement ge);
const char* pencil_case_name(PencilCase pc);

}  // namespace gbn
