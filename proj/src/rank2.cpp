#include "gbn/rank2.hpp"

#include <algorithm>

namespace gbn {

namespace {

// presence rules; everything else in this file hangs off these three
bool in_empty_range(long long g, long long d) { return d >= 4 * g - 6; }

bool sup2_present(long long g, long long nu, long long d) {
  return 2 * nu <= g - 2 && d >= 2 * g - 5 + 2 * nu && d <= 4 * g - 5 - 2 * nu;
}

// nu at the boundary (2nu = g-1 or g) with d inside the window where the
// degree count predicts a second component that is not constructed
bool in_sliver(long long g, long long nu, long long d) {
  return 2 * nu >= g - 1 && d >= 2 * g - 5 + 2 * nu && d <= 4 * g - 5 - 2 * nu;
}

bool divisor_kernel(long long g, long long nu, long long d) {
  return 2 * nu <= g || d >= 3 * g - 4;
}

Rank2Component make_reg2(long long g, long long nu, long long d) {
  Rank2Component c;
  c.kind = ComponentKind::Reg2;
  c.dimension = 8 * g - 11 - 2 * d;
  c.expected_dimension = rho_rank2(g, d, 2);
  c.status = ComponentStatus::Regular;
  c.generically_smooth = true;
  c.birational = BirationalType::Uniruled;
  c.presentation.kernel = divisor_kernel(g, nu, d)
                              ? KernelKind::CanonicalMinusGeneralDivisor
                              : KernelKind::GeneralOfDegree;
  c.presentation.kernel_degree = d - 2 * g + 3;
  c.presentation.quotient = QuotientKind::CanonicalMinusPoint;
  c.presentation.quotient_degree = 2 * g - 3;
  c.presentation.quotient_h1 = 1;
  c.presentation.minimality = Minimality::AmongSpecialEffectiveQuotients;
  // a stable bundle has s >= 1, and s has the parity of d
  c.segre = SegreBound{false, (d % 2 != 0) ? 1 : 2};
  if (d >= 4 * g - 4 - 2 * nu)
    c.proved_for_genus_at_least = 4;
  else if (2 * nu <= g && d >= 3 * g - 5)
    c.proved_for_genus_at_least = 6;
  else
    c.proved_for_genus_at_least = 8;
  c.provenance = Provenance::Proved;
  return c;
}

Rank2Component make_sup2(long long g, long long nu, long long d) {
  Rank2Component c;
  c.kind = ComponentKind::Sup2;
  c.dimension = 6 * g - 6 - d - 2 * nu;
  c.expected_dimension = rho_rank2(g, d, 2);
  // the excess 6g-6-d-2nu - (8g-11-2d) = d - (2g-5+2nu) vanishes exactly at
  // the low end of the window
  c.status = c.dimension > c.expected_dimension ? ComponentStatus::Superabundant
                                                : ComponentStatus::Regular;
  c.generically_smooth = true;
  c.birational = BirationalType::Ruled;
  c.presentation.kernel = KernelKind::GeneralOfDegree;
  c.presentation.kernel_degree = d - 2 * g + 2 + nu;
  c.presentation.quotient = QuotientKind::CanonicalMinusGonal;
  c.presentation.quotient_degree = 2 * g - 2 - nu;
  c.presentation.quotient_h1 = 2;
  c.presentation.minimality = Minimality::AmongAllQuotients;
  c.segre = SegreBound{true, 4 * g - 4 - d - 2 * nu};
  c.proved_for_genus_at_least = 8;
  c.provenance = Provenance::Proved;
  return c;
}

CaseLabel derive_label(long long g, long long nu, long long d) {
  if (in_empty_range(g, d)) return CaseLabel::Empty;
  if (d >= 4 * g - 4 - 2 * nu)
    return divisor_kernel(g, nu, d) ? CaseLabel::II_1 : CaseLabel::II_2;
  if (d <= 2 * g - 6 + 2 * nu) return CaseLabel::VI;
  // remaining gap exists only for 2nu <= g
  if (d == 2 * g - 5 + 2 * nu) return CaseLabel::V;
  if (d <= 3 * g - 6) return CaseLabel::IV;
  return CaseLabel::III;
}

std::string triple_tag(long long g, long long nu, long long d) {
  return "g=" + std::to_string(g) + " nu=" + std::to_string(nu) +
         " d=" + std::to_string(d);
}

// structural checks shared by audit; push a line per breach
void check_classification(const Classification& cl,
                          std::vector<std::string>& out) {
  long long g = cl.g, nu = cl.nu, d = cl.d;
  auto bad = [&](const std::string& what) {
    out.push_back(triple_tag(g, nu, d) + ": " + what);
  };
  bool empty = cl.components.empty();
  if (empty != (cl.label == CaseLabel::Empty))
    bad("empty label and empty component list disagree");
  if (empty != in_empty_range(g, d)) bad("emptiness off the range 4g-6..4g-4");
  if (cl.components.size() > 2) bad("more than two components");
  long long n_reg = 0, n_sup = 0;
  const Rank2Component* reg = nullptr;
  const Rank2Component* sup = nullptr;
  for (const auto& c : cl.components) {
    if (c.kind == ComponentKind::Reg2) {
      ++n_reg;
      reg = &c;
    } else {
      ++n_sup;
      sup = &c;
    }
    if (c.expected_dimension != rho_rank2(g, d, 2))
      bad("expected dimension is not the Brill-Noether number");
    if ((c.status == ComponentStatus::Superabundant) !=
        (c.dimension > c.expected_dimension))
      bad("status flag disagrees with the dimension comparison");
    if (c.presentation.kernel_degree + c.presentation.quotient_degree != d)
      bad("kernel and quotient degrees do not sum to d");
    if (c.provenance != Provenance::Proved)
      bad("classify emitted an unproved component");
  }
  if (n_reg > 1 || n_sup > 1) bad("duplicated component kind");
  bool want_reg = !in_empty_range(g, d) && d <= 4 * g - 7;
  if ((reg != nullptr) != want_reg) bad("regular component presence wrong");
  if (reg) {
    if (reg->dimension != 8 * g - 11 - 2 * d)
      bad("regular component dimension wrong");
    if (reg->status != ComponentStatus::Regular)
      bad("regular component flagged superabundant");
    if (reg->birational != BirationalType::Uniruled)
      bad("regular component not uniruled");
    if (reg->segre.exact || reg->segre.value != ((d % 2 != 0) ? 1 : 2))
      bad("regular component Segre bound wrong");
    if (reg->presentation.quotient_h1 != 1)
      bad("regular component quotient speciality wrong");
  }
  if ((sup != nullptr) != sup2_present(g, nu, d))
    bad("superabundant component presence off its window");
  if (sup) {
    if (sup->dimension != 6 * g - 6 - d - 2 * nu)
      bad("superabundant component dimension wrong");
    if ((sup->status == ComponentStatus::Superabundant) !=
        (d > 2 * g - 5 + 2 * nu))
      bad("superabundance does not match d > 2g-5+2nu");
    if (sup->birational != BirationalType::Ruled)
      bad("superabundant component not ruled");
    if (!sup->segre.exact || sup->segre.value != 4 * g - 4 - d - 2 * nu)
      bad("superabundant component Segre invariant wrong");
    if (sup->presentation.quotient_h1 != 2)
      bad("superabundant component quotient speciality wrong");
  }
  if (reg && sup) {
    if (sup->dimension - reg->dimension != d - (2 * g - 5 + 2 * nu))
      bad("dimension gap between the two components wrong");
  }
  if (cl.ambiguous != in_sliver(g, nu, d)) bad("ambiguity flag off the sliver");
}

std::string range_key(CaseLabel l) {
  switch (l) {
    case CaseLabel::Empty: return "I";  // the roman numbering's empty case
    case CaseLabel::I: return "I";
    case CaseLabel::II_1:
    case CaseLabel::II_2: return "II";
    case CaseLabel::III: return "III";
    case CaseLabel::IV: return "IV";
    case CaseLabel::V: return "V";
    case CaseLabel::VI: return "VI";
  }
  return "?";
}

}  // namespace

Classification classify(const CurveParams& c, long long d) {
  require_classification_genus(c);
  require_small(d, "d");
  require(d >= 2 * c.g - 2, "classify: d below 2g-2");
  require(d <= 4 * c.g - 4, "classify: d above 4g-4");
  Classification out;
  out.g = c.g;
  out.nu = c.nu;
  out.d = d;
  out.label = derive_label(c.g, c.nu, d);
  out.ambiguous = in_sliver(c.g, c.nu, d);
  if (!in_empty_range(c.g, d)) {
    out.components.push_back(make_reg2(c.g, c.nu, d));
    if (sup2_present(c.g, c.nu, d))
      out.components.push_back(make_sup2(c.g, c.nu, d));
  }
  if (out.ambiguous)
    out.warnings.push_back(
        "uncovered sliver: 2nu in {g-1, g} and 2g-5+2nu <= d <= 4g-5-2nu; the "
        "degree count predicts a second component that is not constructed");
  long long threshold = 0;
  for (const auto& comp : out.components)
    threshold = std::max(threshold, comp.proved_for_genus_at_least);
  if (threshold > c.g)
    out.warnings.push_back(
        "results in this degree range are established for genus >= " +
        std::to_string(threshold) + "; g=" + std::to_string(c.g) +
        " is below that");
  return out;
}

TeixidorResult teixidor_test(const CurveParams& c, long long d) {
  require_classification_genus(c);
  require_small(d, "d");
  require(d >= 2 * c.g - 3, "teixidor_test: d below 2g-3");
  require(d <= 4 * c.g - 7, "teixidor_test: d above 4g-7");
  // least n with 2n < 4g-4-d, W^1_n nonempty, and
  // dim W^1_n >= 2g + 2n - d - 5; pencils only exist from n = nu on
  for (long long n = c.nu; 2 * n < 4 * c.g - 4 - d; ++n) {
    auto comps = stratify(c, 1, n);
    if (comps.empty()) continue;
    long long best = 0;
    for (const auto& comp : comps) best = std::max(best, comp.dimension);
    if (best >= 2 * c.g + 2 * n - d - 5) return {true, n};
  }
  return {false, std::nullopt};
}

std::vector<FixedDetComponent> fixed_det_components(const CurveParams& c,
                                                    long long d) {
  require_classification_genus(c);
  require_small(d, "d");
  require(2 * c.nu <= c.g - 2,
          "fixed_det_components: requires nu <= (g-2)/2");
  require(d >= 2 * c.g - 2, "fixed_det_components: d below 2g-2");
  require(d <= 4 * c.g - 5 - 2 * c.nu,
          "fixed_det_components: d above 4g-5-2nu");
  std::vector<FixedDetComponent> out;
  if (d <= 3 * c.g - 4)
    out.push_back({ComponentKind::Reg2, rho_fixed_det(c.g, d),
                   "of the expected dimension"});
  if (d >= 2 * c.g - 5 + 2 * c.nu)
    out.push_back({ComponentKind::Sup2, 5 * c.g - 6 - d - 2 * c.nu,
                   "birational to P(Ext^1(K_C - A, N))"});
  return out;
}

AuditReport audit(long long g_min, long long g_max,
                  std::optional<long long> nu_filter) {
  require_small(g_min, "g_min");
  require_small(g_max, "g_max");
  require(g_min >= 4, "audit: g_min must be at least 4");
  require(g_max >= g_min, "audit: empty genus range");
  if (nu_filter) require_small(*nu_filter, "nu");
  AuditReport rep;
  rep.g_min = g_min;
  rep.g_max = g_max;
  rep.nu_filter = nu_filter;
  for (long long g = g_min; g <= g_max; ++g) {
    for (long long nu = 3; nu < (g + 3) / 2; ++nu) {
      if (nu_filter && nu != *nu_filter) continue;
      CurveParams c(g, nu);
      CellRanges cell{g, nu, {}};
      std::vector<std::string> seen;
      for (long long d = 2 * g - 2; d <= 4 * g - 4; ++d) {
        Classification cl = classify(c, d);
        ++rep.triples;
        if (cl.components.empty())
          ++rep.empty_triples;
        else if (cl.components.size() == 1)
          ++rep.one_component;
        else
          ++rep.two_components;
        if (cl.ambiguous) rep.ambiguous_triples.push_back({g, nu, d});
        check_classification(cl, rep.violations);
        if (d <= 4 * g - 7) {
          TeixidorResult tx = teixidor_test(c, d);
          bool two = cl.components.size() >= 2;
          if (tx.reducible && !two)
            rep.teixidor_mismatches.push_back({g, nu, d});
          else if (!tx.reducible && two)
            rep.violations.push_back(
                triple_tag(g, nu, d) +
                ": two components but the degree count sees only one");
        }
        std::string key = range_key(cl.label);
        if (!cell.intervals.empty() && cell.intervals.back().name == key) {
          cell.intervals.back().d_hi = d;
        } else {
          if (std::find(seen.begin(), seen.end(), key) != seen.end())
            rep.violations.push_back(triple_tag(g, nu, d) +
                                     ": case interval not contiguous");
          seen.push_back(key);
          cell.intervals.push_back({key, d, d});
        }
      }
      rep.ranges.push_back(std::move(cell));
    }
  }
  return rep;
}

const char* case_label_name(CaseLabel c) {
  switch (c) {
    case CaseLabel::Empty: return "Empty";
    case CaseLabel::I: return "I";
    case CaseLabel::II_1: return "II_1";
    case CaseLabel::II_2: return "II_2";
    case CaseLabel::III: return "III";
    case CaseLabel::IV: return "IV";
    case CaseLabel::V: return "V";
    case CaseLabel::VI: return "VI";
  }
  return "?";
}

const char* component_kind_name(ComponentKind k) {
  return k == ComponentKind::Reg2 ? "Reg2" : "Sup2";
}

const char* component_status_name(ComponentStatus s) {
  return s == ComponentStatus::Regular ? "regular" : "superabundant";
}

const char* birational_type_name(BirationalType b) {
  return b == BirationalType::Uniruled ? "uniruled" : "ruled";
}

const char* kernel_kind_name(KernelKind k) {
  return k == KernelKind::GeneralOfDegree ? "general_of_degree"
                                          : "canonical_minus_general_divisor";
}

const char* quotient_kind_name(QuotientKind q) {
  return q == QuotientKind::CanonicalMinusPoint ? "canonical_minus_point"
                                                : "canonical_minus_gonal";
}

const char* minimality_name(Minimality m) {
  return m == Minimality::AmongSpecialEffectiveQuotients
             ? "minimal_among_special_effective_quotients"
             : "minimal_among_all_quotients";
}

const char* provenance_name(Provenance p) {
  return p == Provenance::Proved ? "proved" : "predicted_unconstructed";
}

}  // namespace gbn
