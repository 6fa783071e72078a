#include "gbn/rank1.hpp"

#include <algorithm>

namespace gbn {

std::vector<Rank1Component> stratify(const CurveParams& c, long long r,
                                     long long d) {
  require_classification_genus(c);
  require_small(r, "r");
  require_small(d, "d");
  require(r >= 0, "stratify: r must be nonnegative");
  require(d >= 0, "stratify: d must be nonnegative");
  std::vector<Rank1Component> out;
  if (r <= d - c.g) {
    Rank1Component fp;
    fp.shift = std::nullopt;
    fp.vector = balanced(c.nu, d + 1 - c.g - c.nu);
    fp.dimension = c.g;
    fp.generic = GenericElement::FullPicard;
    out.push_back(std::move(fp));
    return out;
  }
  for (long long ell : admissible_shifts(c.g, c.nu, r, d)) {
    SplittingType w = w_vector(c.g, c.nu, r, ell, d);
    long long rho = c.g - magnitude(w);
    if (rho < 0) continue;
    Rank1Component comp;
    comp.shift = ell;
    comp.vector = std::move(w);
    comp.dimension = rho_rank1(c.g, r - ell, d) - ell * c.nu;
    if (r == 1 && ell == 1) {
      comp.generic = GenericElement::GonalPlusBasePoints;
      comp.base_degree = d - c.nu;
    } else if (r == 1 && ell == 0) {
      comp.generic = GenericElement::BasePointFreePencil;
    } else {
      comp.generic = GenericElement::GeneralSeries;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

PencilTable pencil_table(const CurveParams& c, long long t) {
  require_classification_genus(c);
  require_small(t, "t");
  require(t >= 0, "pencil_table: t must be nonnegative");
  // literal transcription of the row bounds; they tile t >= nu, which the
  // exclusive checks below enforce
  bool row_a = c.nu <= t && 2 * t < c.g + 2;
  bool row_b = 2 * t >= c.g + 2 && t <= c.g + 2 - c.nu;
  bool row_c = t > c.g + 2 - c.nu && t < c.g + 1;
  bool row_d = t >= c.g + 1;
  PencilTable table;
  if (t < c.nu) {
    require(!row_a && !row_b && !row_c && !row_d,
            "pencil_table: rows overlap below gonality");
    table.row = PencilCase::Empty;
  } else {
    require(int(row_a) + int(row_b) + int(row_c) + int(row_d) == 1,
            "pencil_table: rows fail to partition t >= nu");
    table.row = row_a   ? PencilCase::GonalPlusBasePoints
                : row_b ? PencilCase::BothTypes
                : row_c ? PencilCase::BasePointFree
                        : PencilCase::FullPicard;
  }
  table.components = stratify(c, 1, t);
  return table;
}

long long gonal_power_dim(const CurveParams& c, long long r) {
  require_small(r, "r");
  require(r >= 0, "gonal_power_dim: r must be nonnegative");
  if (r == 0) return 0;
  if (c.g >= r * (c.nu - 1)) return r;
  return r * c.nu - c.g;
}

const char* generic_element_name(GenericElement ge) {
  switch (ge) {
    case GenericElement::GonalPlusBasePoints: return "gonal_plus_base_points";
    case GenericElement::BasePointFreePencil: return "base_point_free_pencil";
    case GenericElement::GeneralSeries: return "general_series";
    case GenericElement::FullPicard: return "full_picard";
  }
  return "?";
}

const char* pencil_case_name(PencilCase pc) {
  switch (pc) {
    case PencilCase::Empty: return "empty";
    case PencilCase::GonalPlusBasePoints: return "gonal_plus_base_points";
    case PencilCase::BothTypes: return "both_types";
    case PencilCase::BasePointFree: return "base_point_free";
    case PencilCase::FullPicard: return "full_picard";
  }
  return "?";
}

}  // namespace gbn
