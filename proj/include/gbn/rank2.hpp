#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbn/rank1.hpp"

namespace gbn {

// Components of the locus of stable rank 2 bundles of degree d with at least
// k_2 = d - 2g + 6 sections, on a general nu-gonal curve, for
// 2g - 2 <= d <= 4g - 4.

enum class KernelKind {
  GeneralOfDegree,              // a general line bundle of the stated degree
  CanonicalMinusGeneralDivisor  // K - D with D a general effective divisor
};

enum class QuotientKind {
  CanonicalMinusPoint,  // K - p, degree 2g - 3, h1 = 1
  CanonicalMinusGonal   // K - A with A the gonality pencil, h1 = 2
};

enum class Minimality {
  AmongSpecialEffectiveQuotients,  // minimal degree among special quotients
                                   // with sections; smaller ones exist
  AmongAllQuotients                // minimal degree among all line quotients
};

struct Presentation {
  KernelKind kernel;
  long long kernel_degree;  // degree of the kernel line bundle
  QuotientKind quotient;
  long long quotient_degree;
  long long quotient_h1;
  Minimality minimality;
};

enum class ComponentKind { Reg2, Sup2 };
enum class ComponentStatus { Regular, Superabundant };
enum class BirationalType { Uniruled, Ruled };
enum class Provenance { Proved, PredictedUnconstructed };

struct SegreBound {
  bool exact;  // false: lower bound only
  long long value;
};

struct Rank2Component {
  ComponentKind kind;
  long long dimension;
  long long expected_dimension;  // 8g - 11 - 2d
  ComponentStatus status;        // Superabundant iff dimension > expected
  bool generically_smooth;
  BirationalType birational;
  Presentation presentation;
  SegreBound segre;
  long long proved_for_genus_at_least;
  Provenance provenance;  // classify only ever emits Proved
};

// theorem-style case labels, derived annotations on top of the presence
// rules; the empty range 4g-6 <= d <= 4g-4 is labeled Empty (it is what the
// roman numbering calls case one)
enum class CaseLabel { Empty, I, II_1, II_2, III, IV, V, VI };

struct Classification {
  long long g, nu, d;
  CaseLabel label;
  std::vector<Rank2Component> components;  // Reg2 first when both appear
  std::vector<std::string> warnings;
  bool ambiguous;
};

Classification classify(const CurveParams& c, long long d);

struct TeixidorResult {
  bool reducible;
  std::optional<long long> witness_n;  // least witness degree
};

// reducibility criterion: the locus is reducible as soon as some n with
// 2n < 4g - 4 - d has W^1_n nonempty of dimension >= 2g + 2n - d - 5.
// Valid for 2g - 3 <= d <= 4g - 7.
TeixidorResult teixidor_test(const CurveParams& c, long long d);

struct FixedDetComponent {
  ComponentKind kind;
  long long dimension;
  std::string note;
};

// fixed determinant slice, for nu <= (g-2)/2 and 2g-2 <= d <= 4g-5-2nu
std::vector<FixedDetComponent> fixed_det_components(const CurveParams& c,
                                                    long long d);

struct Triple {
  long long g, nu, d;
  auto operator<=>(const Triple&) const = default;
};

struct CaseInterval {
  std::string name;  // theorem-style key: I, II, III, IV, V, VI
  long long d_lo, d_hi;
};

struct CellRanges {
  long long g, nu;
  std::vector<CaseInterval> intervals;  // increasing in d, contiguous
};

struct AuditReport {
  long long g_min, g_max;
  std::optional<long long> nu_filter;
  long long triples = 0;
  long long empty_triples = 0;
  long long one_component = 0;
  long long two_components = 0;
  // reducibility predicted by the degree count but no second component
  // proved: the expected-but-unconstructed cases
  std::vector<Triple> teixidor_mismatches;
  std::vector<Triple> ambiguous_triples;
  std::vector<std::string> violations;  // internal consistency breaches
  std::vector<CellRanges> ranges;
};

// full sweep over g in [g_min, g_max], every admissible nu (optionally one
// nu), every d in [2g-2, 4g-4]: classify everything, check every structural
// invariant, compare against the reducibility count on [2g-2, 4g-7], and
// record the case intervals per (g, nu)
AuditReport audit(long long g_min, long long g_max,
                  std::optional<long long> nu_filter = std::nullopt);

const char* case_label_name(CaseLabel c);
const char* component_kind_name(ComponentKind k);
const char* component_status_name(ComponentStatus s);
const char* birational_type_name(BirationalType b);
const char* kernel_kind_name(KernelKind k);
const char* quotient_kind_name(QuotientKind q);
const char* minimality_name(Minimality m);
const char* provenance_name(Provenance p);

}  // namespace gbn
