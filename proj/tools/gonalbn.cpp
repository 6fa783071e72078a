#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbn/extcalc.hpp"
#include "gbn/rank2.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace gbn;

namespace {

std::string vec_str(const SplittingType& e) {
  std::ostringstream os;
  os << "(";
  for (long long i = 0; i < e.size(); ++i) {
    if (i) os << ",";
    os << e.e[i];
  }
  os << ")";
  return os.str();
}

const char* yesno(bool b) { return b ? "yes" : "no"; }
const char* truefalse(bool b) { return b ? "true" : "false"; }

void cell(std::ostream& os, const std::string& text, int width, bool left,
          bool last = false) {
  os << (left ? std::left : std::right) << std::setw(width) << text;
  if (!last) os << "  ";
}

// ---- rank 1 component rendering, shared by rank1 and pencil ----

ordered_json rank1_component_json(const Rank1Component& c) {
  ordered_json j;
  if (c.shift)
    j["shift"] = *c.shift;
  else
    j["shift"] = nullptr;
  j["vector"] = c.vector.e;
  j["dim"] = c.dimension;
  j["generic"] = generic_element_name(c.generic);
  if (c.generic == GenericElement::GonalPlusBasePoints)
    j["base_degree"] = c.base_degree;
  else
    j["base_degree"] = nullptr;
  return j;
}

void rank1_component_table(std::ostream& os,
                           const std::vector<Rank1Component>& comps) {
  if (comps.empty()) {
    os << "components none\n";
    return;
  }
  cell(os, "shift", 5, false);
  cell(os, "vector", 18, true);
  cell(os, "dim", 4, false);
  cell(os, "generic", 22, true);
  cell(os, "base", 4, false, true);
  os << "\n";
  for (const auto& c : comps) {
    cell(os, c.shift ? std::to_string(*c.shift) : "-", 5, false);
    cell(os, vec_str(c.vector), 18, true);
    cell(os, std::to_string(c.dimension), 4, false);
    cell(os, generic_element_name(c.generic), 22, true);
    cell(os,
         c.generic == GenericElement::GonalPlusBasePoints
             ? std::to_string(c.base_degree)
             : "-",
         4, false, true);
    os << "\n";
  }
}

// ---- classify ----

ordered_json classify_json(const Classification& cl) {
  ordered_json j;
  j["input"]["g"] = cl.g;
  j["input"]["nu"] = cl.nu;
  j["input"]["d"] = cl.d;
  j["case"] = case_label_name(cl.label);
  j["empty"] = cl.components.empty();
  j["components"] = ordered_json::array();
  for (const auto& c : cl.components) {
    ordered_json k;
    k["kind"] = component_kind_name(c.kind);
    k["dim"] = c.dimension;
    k["expected_dim"] = c.expected_dimension;
    k["status"] = component_status_name(c.status);
    k["generically_smooth"] = c.generically_smooth;
    k["birational"] = birational_type_name(c.birational);
    k["presentation"]["kernel"] = kernel_kind_name(c.presentation.kernel);
    k["presentation"]["kernel_degree"] = c.presentation.kernel_degree;
    k["presentation"]["quotient"] = quotient_kind_name(c.presentation.quotient);
    k["presentation"]["quotient_degree"] = c.presentation.quotient_degree;
    k["presentation"]["quotient_h1"] = c.presentation.quotient_h1;
    if (c.segre.exact)
      k["segre"]["exact"] = c.segre.value;
    else
      k["segre"]["lower_bound"] = c.segre.value;
    k["proved_for_genus_at_least"] = c.proved_for_genus_at_least;
    j["components"].push_back(std::move(k));
  }
  j["warnings"] = cl.warnings;
  j["ambiguous"] = cl.ambiguous;
  return j;
}

std::string classify_table(const Classification& cl) {
  std::ostringstream os;
  os << "classify g=" << cl.g << " nu=" << cl.nu << " d=" << cl.d << "\n";
  os << "case " << case_label_name(cl.label) << "  ambiguous "
     << yesno(cl.ambiguous) << "\n";
  if (cl.components.empty()) {
    os << "components none\n";
  } else {
    cell(os, "kind", 4, true);
    cell(os, "dim", 4, false);
    cell(os, "exp", 4, false);
    cell(os, "status", 13, true);
    cell(os, "sm", 3, true);
    cell(os, "type", 8, true);
    cell(os, "kernel", 31, true);
    cell(os, "kdeg", 4, false);
    cell(os, "quotient", 21, true);
    cell(os, "qdeg", 4, false);
    cell(os, "qh1", 3, false);
    cell(os, "segre", 5, false);
    cell(os, "g>=", 3, false, true);
    os << "\n";
    for (const auto& c : cl.components) {
      cell(os, component_kind_name(c.kind), 4, true);
      cell(os, std::to_string(c.dimension), 4, false);
      cell(os, std::to_string(c.expected_dimension), 4, false);
      cell(os, component_status_name(c.status), 13, true);
      cell(os, yesno(c.generically_smooth), 3, true);
      cell(os, birational_type_name(c.birational), 8, true);
      cell(os, kernel_kind_name(c.presentation.kernel), 31, true);
      cell(os, std::to_string(c.presentation.kernel_degree), 4, false);
      cell(os, quotient_kind_name(c.presentation.quotient), 21, true);
      cell(os, std::to_string(c.presentation.quotient_degree), 4, false);
      cell(os, std::to_string(c.presentation.quotient_h1), 3, false);
      cell(os,
           (c.segre.exact ? "=" : ">=") + std::to_string(c.segre.value), 5,
           false);
      cell(os, std::to_string(c.proved_for_genus_at_least), 3, false, true);
      os << "\n";
    }
  }
  for (const auto& w : cl.warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string run_classify(long long g, long long nu, long long d,
                         const std::string& fmt) {
  Classification cl = classify(CurveParams(g, nu), d);
  if (fmt == "json") return classify_json(cl).dump(2) + "\n";
  return classify_table(cl);
}

// ---- rank1 / pencil ----

std::string run_rank1(long long g, long long nu, long long r, long long d,
                      const std::string& fmt) {
  auto comps = stratify(CurveParams(g, nu), r, d);
  if (fmt == "json") {
    ordered_json j;
    j["input"]["g"] = g;
    j["input"]["nu"] = nu;
    j["input"]["r"] = r;
    j["input"]["d"] = d;
    j["empty"] = comps.empty();
    j["components"] = ordered_json::array();
    for (const auto& c : comps)
      j["components"].push_back(rank1_component_json(c));
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "rank1 g=" << g << " nu=" << nu << " r=" << r << " d=" << d << "\n";
  rank1_component_table(os, comps);
  return os.str();
}

std::string run_pencil(long long g, long long nu, long long t,
                       const std::string& fmt) {
  auto table = pencil_table(CurveParams(g, nu), t);
  if (fmt == "json") {
    ordered_json j;
    j["input"]["g"] = g;
    j["input"]["nu"] = nu;
    j["input"]["t"] = t;
    j["case"] = pencil_case_name(table.row);
    j["components"] = ordered_json::array();
    for (const auto& c : table.components)
      j["components"].push_back(rank1_component_json(c));
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "pencil g=" << g << " nu=" << nu << " t=" << t << "\n";
  os << "row " << pencil_case_name(table.row) << "\n";
  rank1_component_table(os, table.components);
  return os.str();
}

// ---- splitting ----

std::string run_split_max(long long nu, long long total, long long r,
                          const std::string& fmt) {
  auto maximal = maximal_types(nu, total, r);
  if (fmt == "json") {
    ordered_json j;
    j["input"]["nu"] = nu;
    j["input"]["total"] = total;
    j["input"]["r"] = r;
    j["maximal"] = ordered_json::array();
    for (const auto& e : maximal) j["maximal"].push_back(e.e);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "splitting max nu=" << nu << " total=" << total << " r=" << r << "\n";
  if (maximal.empty()) os << "none\n";
  for (const auto& e : maximal) os << vec_str(e) << "\n";
  return os.str();
}

std::string run_split_w(long long g, long long nu, long long r, long long ell,
                        long long d, const std::string& fmt) {
  SplittingType w = w_vector(g, nu, r, ell, d);
  long long h0 = euler_data(w).h0;
  long long u = magnitude(w);
  long long rho = expected_splitting_dim(g, w);
  bool nonempty = rho >= 0;
  if (fmt == "json") {
    ordered_json j;
    j["input"]["g"] = g;
    j["input"]["nu"] = nu;
    j["input"]["r"] = r;
    j["input"]["ell"] = ell;
    j["input"]["d"] = d;
    j["vector"] = w.e;
    j["h0"] = h0;
    j["magnitude"] = u;
    j["expected_dim"] = rho;
    j["nonempty"] = nonempty;
    if (nonempty)
      j["dim"] = splitting_dim(g, w);
    else
      j["dim"] = nullptr;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "splitting w g=" << g << " nu=" << nu << " r=" << r << " ell=" << ell
     << " d=" << d << "\n";
  os << "vector " << vec_str(w) << "\n";
  os << "h0 " << h0 << "\n";
  os << "magnitude " << u << "\n";
  os << "expected_dim " << rho << "\n";
  os << "nonempty " << yesno(nonempty) << "\n";
  if (nonempty)
    os << "dim " << splitting_dim(g, w) << "\n";
  else
    os << "dim -\n";
  return os.str();
}

// ---- ext ----

std::string run_ext(long long g, long long d, long long delta, bool iso,
                    bool has_sigma, long long sigma, const std::string& fmt) {
  if (iso && has_sigma)
    fail("ext: --sigma applies to the non-isomorphic case only");
  long long m = ext_dim(g, d, delta, iso);
  SegreData sd = segre_data(d, delta);
  if (fmt == "json") {
    ordered_json j;
    j["input"]["g"] = g;
    j["input"]["d"] = d;
    j["input"]["delta"] = delta;
    j["input"]["iso"] = iso;
    j["ext_dim"] = m;
    j["proj_dim"] = m - 1;
    j["segre"]["gamma_sq"] = sd.gamma_sq;
    j["segre"]["semistable_possible"] = sd.semistable_possible;
    if (has_sigma) {
      SecantDims sec = secant_dims(g, d, delta, sigma);
      j["secant"]["sigma"] = sigma;
      j["secant"]["h"] = sec.h;
      j["secant"]["secant_dim"] = sec.secant_dim;
    } else {
      j["secant"] = nullptr;
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "ext g=" << g << " d=" << d << " delta=" << delta << " iso="
     << yesno(iso) << "\n";
  os << "ext_dim " << m << "\n";
  os << "proj_dim " << m - 1 << "\n";
  os << "gamma_sq " << sd.gamma_sq << "\n";
  os << "semistable_possible " << yesno(sd.semistable_possible) << "\n";
  if (has_sigma) {
    SecantDims sec = secant_dims(g, d, delta, sigma);
    os << "sigma " << sigma << "\n";
    os << "secant_h " << sec.h << "\n";
    os << "secant_dim " << sec.secant_dim << "\n";
  }
  return os.str();
}

// ---- fixed-det ----

std::string run_fixed_det(long long g, long long nu, long long d,
                          const std::string& fmt) {
  auto comps = fixed_det_components(CurveParams(g, nu), d);
  if (fmt == "json") {
    ordered_json j;
    j["input"]["g"] = g;
    j["input"]["nu"] = nu;
    j["input"]["d"] = d;
    j["components"] = ordered_json::array();
    for (const auto& c : comps) {
      ordered_json k;
      k["kind"] = component_kind_name(c.kind);
      k["dim"] = c.dimension;
      k["note"] = c.note;
      j["components"].push_back(std::move(k));
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "fixed-det g=" << g << " nu=" << nu << " d=" << d << "\n";
  cell(os, "kind", 4, true);
  cell(os, "dim", 4, false);
  cell(os, "note", 4, true, true);
  os << "\n";
  for (const auto& c : comps) {
    cell(os, component_kind_name(c.kind), 4, true);
    cell(os, std::to_string(c.dimension), 4, false);
    cell(os, c.note, 4, true, true);
    os << "\n";
  }
  return os.str();
}

// ---- audit ----

ordered_json triple_json(const Triple& t) {
  ordered_json j;
  j["g"] = t.g;
  j["nu"] = t.nu;
  j["d"] = t.d;
  return j;
}

std::string run_audit(long long g_min, long long g_max, bool has_nu,
                      long long nu, const std::string& fmt) {
  auto rep = audit(g_min, g_max,
                   has_nu ? std::optional<long long>(nu) : std::nullopt);
  if (fmt == "json") {
    ordered_json j;
    j["input"]["g_min"] = rep.g_min;
    j["input"]["g_max"] = rep.g_max;
    if (rep.nu_filter)
      j["input"]["nu"] = *rep.nu_filter;
    else
      j["input"]["nu"] = nullptr;
    j["triples"] = rep.triples;
    j["empty_triples"] = rep.empty_triples;
    j["one_component"] = rep.one_component;
    j["two_components"] = rep.two_components;
    j["teixidor_mismatches"] = ordered_json::array();
    for (const auto& t : rep.teixidor_mismatches)
      j["teixidor_mismatches"].push_back(triple_json(t));
    j["ambiguous"] = ordered_json::array();
    for (const auto& t : rep.ambiguous_triples)
      j["ambiguous"].push_back(triple_json(t));
    j["violations"] = rep.violations;
    j["ranges"] = ordered_json::array();
    for (const auto& cell : rep.ranges) {
      ordered_json c;
      c["g"] = cell.g;
      c["nu"] = cell.nu;
      c["intervals"] = ordered_json::array();
      for (const auto& iv : cell.intervals) {
        ordered_json k;
        k["case"] = iv.name;
        k["d_lo"] = iv.d_lo;
        k["d_hi"] = iv.d_hi;
        c["intervals"].push_back(std::move(k));
      }
      j["ranges"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "audit g=" << rep.g_min << ".." << rep.g_max;
  if (rep.nu_filter) os << " nu=" << *rep.nu_filter;
  os << "\n";
  os << "triples " << rep.triples << "\n";
  os << "empty " << rep.empty_triples << "\n";
  os << "one_component " << rep.one_component << "\n";
  os << "two_components " << rep.two_components << "\n";
  os << "teixidor_mismatches " << rep.teixidor_mismatches.size() << "\n";
  for (const auto& t : rep.teixidor_mismatches)
    os << "  g=" << t.g << " nu=" << t.nu << " d=" << t.d << "\n";
  os << "ambiguous " << rep.ambiguous_triples.size() << "\n";
  for (const auto& t : rep.ambiguous_triples)
    os << "  g=" << t.g << " nu=" << t.nu << " d=" << t.d << "\n";
  os << "violations " << rep.violations.size() << "\n";
  for (const auto& v : rep.violations) os << "  " << v << "\n";
  os << "ranges\n";
  for (const auto& cell : rep.ranges) {
    os << "  g=" << cell.g << " nu=" << cell.nu << " ";
    for (const auto& iv : cell.intervals)
      os << " " << iv.name << "[" << iv.d_lo << "," << iv.d_hi << "]";
    os << "\n";
  }
  return os.str();
}

// ---- sweep ----

struct SweepRow {
  long long g, nu, d;
  std::string label;
  bool has_reg = false, has_sup = false, superabundant = false;
  long long dim_reg = 0, dim_sup = 0, rho = 0;
};

std::vector<SweepRow> sweep_rows(long long g_min, long long g_max, bool has_nu,
                                 long long nu_filter) {
  std::vector<SweepRow> rows;
  for (long long g = g_min; g <= g_max; ++g)
    for (long long nu = 3; nu < (g + 3) / 2; ++nu) {
      if (has_nu && nu != nu_filter) continue;
      CurveParams c(g, nu);
      for (long long d = 2 * g - 2; d <= 4 * g - 4; ++d) {
        Classification cl = classify(c, d);
        SweepRow row;
        row.g = g;
        row.nu = nu;
        row.d = d;
        row.label = case_label_name(cl.label);
        row.rho = rho_rank2(g, d, 2);
        for (const auto& comp : cl.components) {
          if (comp.kind == ComponentKind::Reg2) {
            row.has_reg = true;
            row.dim_reg = comp.dimension;
          } else {
            row.has_sup = true;
            row.dim_sup = comp.dimension;
          }
          if (comp.status == ComponentStatus::Superabundant)
            row.superabundant = true;
        }
        rows.push_back(std::move(row));
      }
    }
  return rows;
}

std::string run_sweep(long long g_min, long long g_max, bool has_nu,
                      long long nu_filter, const std::string& fmt) {
  auto rows = sweep_rows(g_min, g_max, has_nu, nu_filter);
  if (fmt == "csv") {
    std::ostringstream os;
    os << "g,nu,d,case,dim_reg,dim_sup,rho,superabundant\n";
    for (const auto& r : rows) {
      os << r.g << "," << r.nu << "," << r.d << "," << r.label << ",";
      if (r.has_reg) os << r.dim_reg;
      os << ",";
      if (r.has_sup) os << r.dim_sup;
      os << "," << r.rho << "," << truefalse(r.superabundant) << "\n";
    }
    return os.str();
  }
  if (fmt == "json") {
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json k;
      k["g"] = r.g;
      k["nu"] = r.nu;
      k["d"] = r.d;
      k["case"] = r.label;
      if (r.has_reg)
        k["dim_reg"] = r.dim_reg;
      else
        k["dim_reg"] = nullptr;
      if (r.has_sup)
        k["dim_sup"] = r.dim_sup;
      else
        k["dim_sup"] = nullptr;
      k["rho"] = r.rho;
      k["superabundant"] = r.superabundant;
      j["rows"].push_back(std::move(k));
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "sweep g=" << g_min << ".." << g_max;
  if (has_nu) os << " nu=" << nu_filter;
  os << "\n";
  cell(os, "g", 3, false);
  cell(os, "nu", 3, false);
  cell(os, "d", 4, false);
  cell(os, "case", 5, true);
  cell(os, "dim_reg", 7, false);
  cell(os, "dim_sup", 7, false);
  cell(os, "rho", 4, false);
  cell(os, "superabundant", 13, true, true);
  os << "\n";
  for (const auto& r : rows) {
    cell(os, std::to_string(r.g), 3, false);
    cell(os, std::to_string(r.nu), 3, false);
    cell(os, std::to_string(r.d), 4, false);
    cell(os, r.label, 5, true);
    cell(os, r.has_reg ? std::to_string(r.dim_reg) : "-", 7, false);
    cell(os, r.has_sup ? std::to_string(r.dim_sup) : "-", 7, false);
    cell(os, std::to_string(r.rho), 4, false);
    cell(os, truefalse(r.superabundant), 13, true, true);
    os << "\n";
  }
  return os.str();
}

std::string resolve_format(const std::string& fmt, bool is_sweep) {
  if (fmt.empty()) return is_sweep ? "csv" : "table";
  if (fmt == "json" || fmt == "table") return fmt;
  if (fmt == "csv") {
    if (is_sweep) return fmt;
    fail("csv output is only defined for sweep");
  }
  fail("unknown format: " + fmt);
}

void emit(const std::string& payload, const std::string& outfile) {
  if (outfile.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(outfile, std::ios::binary);
  if (!f) fail("cannot open output file: " + outfile);
  f << payload;
  if (!f.good()) fail("cannot write output file: " + outfile);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank 1 and rank 2 Brill-Noether loci on general nu-gonal "
               "curves: exact integer classification queries"};
  app.require_subcommand(1);

  long long g = 0, nu = 0, d = 0, r = 0, t = 0, total = 0, ell = 0, sigma = 0,
            delta = 0, g_min = 0, g_max = 0;
  bool iso = false;
  std::string fmt, outfile;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--format", fmt, "json, table, or (sweep only) csv");
    cmd->add_option("--out", outfile, "write the output to a file");
  };

  auto* c_classify = app.add_subcommand(
      "classify", "components of the rank 2 locus for one (g, nu, d)");
  c_classify->add_option("--g", g)->required();
  c_classify->add_option("--nu", nu)->required();
  c_classify->add_option("--d", d)->required();
  add_io(c_classify);

  auto* c_rank1 = app.add_subcommand(
      "rank1", "components of W^r_d with their splitting types");
  c_rank1->add_option("--g", g)->required();
  c_rank1->add_option("--nu", nu)->required();
  c_rank1->add_option("--r", r)->required();
  c_rank1->add_option("--d", d)->required();
  add_io(c_rank1);

  auto* c_pencil =
      app.add_subcommand("pencil", "the degree-t pencil classification row");
  c_pencil->add_option("--g", g)->required();
  c_pencil->add_option("--nu", nu)->required();
  c_pencil->add_option("--t", t)->required();
  add_io(c_pencil);

  auto* c_split = app.add_subcommand("splitting", "splitting type utilities");
  c_split->require_subcommand(1);
  auto* c_smax = c_split->add_subcommand(
      "max", "maximal splitting types with at least r+1 sections");
  c_smax->add_option("--nu", nu)->required();
  c_smax->add_option("--total", total)->required();
  c_smax->add_option("--r", r)->required();
  add_io(c_smax);
  auto* c_sw = c_split->add_subcommand(
      "w", "the two-block vector for a shift, with its stratum data");
  c_sw->add_option("--g", g)->required();
  c_sw->add_option("--nu", nu)->required();
  c_sw->add_option("--r", r)->required();
  c_sw->add_option("--ell", ell)->required();
  c_sw->add_option("--d", d)->required();
  add_io(c_sw);

  auto* c_ext = app.add_subcommand(
      "ext", "extension space and secant dimension bookkeeping");
  c_ext->add_option("--g", g)->required();
  c_ext->add_option("--d", d)->required();
  c_ext->add_option("--delta", delta)->required();
  c_ext->add_flag("--iso", iso, "quotient isomorphic to the kernel");
  auto* sigma_opt = c_ext->add_option("--sigma", sigma);
  add_io(c_ext);

  auto* c_fd = app.add_subcommand(
      "fixed-det", "the fixed determinant slice of the classification");
  c_fd->add_option("--g", g)->required();
  c_fd->add_option("--nu", nu)->required();
  c_fd->add_option("--d", d)->required();
  add_io(c_fd);

  auto* c_audit = app.add_subcommand(
      "audit", "sweep a genus range and check every structural invariant");
  c_audit->add_option("--g-min", g_min)->required();
  c_audit->add_option("--g-max", g_max)->required();
  auto* audit_nu = c_audit->add_option("--nu", nu);
  add_io(c_audit);

  auto* c_sweep = app.add_subcommand(
      "sweep", "classification rows over a grid, one line per (g, nu, d)");
  auto* sweep_g = c_sweep->add_option("--g", g);
  auto* sweep_gmin = c_sweep->add_option("--g-min", g_min);
  auto* sweep_gmax = c_sweep->add_option("--g-max", g_max);
  auto* sweep_nu = c_sweep->add_option("--nu", nu);
  add_io(c_sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::string payload;
    if (app.got_subcommand(c_classify)) {
      payload = run_classify(g, nu, d, resolve_format(fmt, false));
    } else if (app.got_subcommand(c_rank1)) {
      payload = run_rank1(g, nu, r, d, resolve_format(fmt, false));
    } else if (app.got_subcommand(c_pencil)) {
      payload = run_pencil(g, nu, t, resolve_format(fmt, false));
    } else if (app.got_subcommand(c_split)) {
      if (c_split->got_subcommand(c_smax))
        payload = run_split_max(nu, total, r, resolve_format(fmt, false));
      else
        payload = run_split_w(g, nu, r, ell, d, resolve_format(fmt, false));
    } else if (app.got_subcommand(c_ext)) {
      payload = run_ext(g, d, delta, iso, sigma_opt->count() > 0, sigma,
                        resolve_format(fmt, false));
    } else if (app.got_subcommand(c_fd)) {
      payload = run_fixed_det(g, nu, d, resolve_format(fmt, false));
    } else if (app.got_subcommand(c_audit)) {
      payload = run_audit(g_min, g_max, audit_nu->count() > 0, nu,
                          resolve_format(fmt, false));
    } else if (app.got_subcommand(c_sweep)) {
      bool has_g = sweep_g->count() > 0;
      bool has_range = sweep_gmin->count() > 0 || sweep_gmax->count() > 0;
      if (has_g == has_range)
        fail("sweep: give either --g or both --g-min and --g-max");
      if (has_range && (sweep_gmin->count() == 0 || sweep_gmax->count() == 0))
        fail("sweep: --g-min and --g-max go together");
      long long lo = has_g ? g : g_min;
      long long hi = has_g ? g : g_max;
      require(lo >= 4, "sweep: genus must be at least 4");
      require(hi >= lo, "sweep: empty genus range");
      payload =
          run_sweep(lo, hi, sweep_nu->count() > 0, nu, resolve_format(fmt, true));
    }
    emit(payload, outfile);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
