#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csym/fixtures.hpp"
#include "csym/groebner.hpp"
#include "csym/int_matrix.hpp"
#include "csym/io.hpp"
#include "csym/polytope.hpp"
#include "csym/poset.hpp"

namespace csym {

struct ClassifyOptions {
  std::string order_spec = "canonical";  // "canonical" or "seed:<N>"
  std::uint64_t seed = 0;                // embedded in the report
  int normal_dilate_max = 3;
  std::int64_t minor_budget = 10'000'000;
  int kernel_degree_cap = 3;
};

inline MonomialOrder order_from_spec(const PosetRing& ring,
                                     const std::string& spec) {
  if (spec == "canonical") return canonical_order(ring);
  if (spec.rfind("seed:", 0) == 0)
    return random_compatible_order(ring, std::stoull(spec.substr(5)));
  throw RangeError("order spec must be \"canonical\" or \"seed:<N>\", got \"" +
                   spec + "\"");
}

/// End-to-end verification record for one poset.
struct Report {
  std::string schema = "1";
  std::uint64_t seed = 0;
  std::string order_spec = "canonical";
  Poset input;

  int ideal_count = 0;  // including the empty ideal

  // matrices
  int order_matrix_rows = 0, order_matrix_cols = 0;
  int csym_matrix_rows = 0, csym_matrix_cols = 0;
  bool order_matrix_unimodular = false;
  std::optional<std::pair<std::vector<int>, Int>> unimodular_witness;
  bool order_matrix_spans = false;
  bool csym_matrix_spans = false;

  // groebner
  std::size_t basis_size = 0;
  bool buchberger_pass = false;
  std::size_t initial_generators = 0;  // minimal generators of the lead ideal
  std::size_t lead_multiset_size = 0;
  std::size_t distinct_leads = 0;
  bool all_squarefree = false;
  bool all_quadratic = false;

  // geometry
  bool fano = false;
  bool gorenstein = false;
  bool dual_integral = false;
  bool delta_symmetric = false;
  int normal_dilate_max = 0;
  bool normal = false;
  std::vector<Int> delta;

  std::string verdict;  // "PASS" or "INCONSISTENT"

  bool operator==(const Report& o) const = default;
};

/// Everything the pipeline builds, for callers that want more than the
/// report (the sweep re-uses the ring, basis and polytope).
struct Pipeline {
  PosetRing ring;
  MonomialOrder order;
  IntMatrix a_order;
  IntMatrix a_csym;
  std::vector<Binomial> basis;
  std::optional<Polytope> polytope;
  Report report;
};

inline Pipeline run_pipeline(const Poset& p, const ClassifyOptions& opts) {
  Pipeline pl{PosetRing(p)};
  Report& r = pl.report;
  r.seed = opts.seed;
  r.order_spec = opts.order_spec;
  r.input = p;
  r.ideal_count = pl.ring.ideal_count() + 1;

  pl.a_order = order_matrix(p);
  pl.a_csym = centrally_symmetric(pl.a_order);
  r.order_matrix_rows = pl.a_order.rows;
  r.order_matrix_cols = pl.a_order.cols;
  r.csym_matrix_rows = pl.a_csym.rows;
  r.csym_matrix_cols = pl.a_csym.cols;
  auto unimod = is_unimodular(pl.a_order, opts.minor_budget);
  r.order_matrix_unimodular = unimod.unimodular;
  r.unimodular_witness = unimod.witness_minor;
  r.order_matrix_spans = lattice_spans(pl.a_order).spans_full_lattice;
  r.csym_matrix_spans = lattice_spans(pl.a_csym).spans_full_lattice;

  pl.order = order_from_spec(pl.ring, opts.order_spec);
  pl.basis = csym_binomial_basis(pl.ring);
  r.basis_size = pl.basis.size();
  r.buchberger_pass = buchberger_verify(pl.basis, pl.order).is_groebner;
  auto init = initial_ideal_minimal_generators(pl.basis, pl.order);
  r.initial_generators = init.minimal_generators.size();
  r.lead_multiset_size = init.lead_multiset_size;
  r.distinct_leads = init.distinct_leads;
  r.all_squarefree = init.all_squarefree;
  r.all_quadratic = init.all_quadratic;

  pl.polytope.emplace(csym_polytope(pl.a_order));
  const Polytope& poly = *pl.polytope;
  r.fano = is_fano(poly);
  if (r.fano) {
    auto gor = is_gorenstein_fano(poly);
    r.gorenstein = gor.gorenstein;
    r.dual_integral = gor.dual_integral;
    r.delta_symmetric = gor.delta_symmetric;
  }
  r.normal_dilate_max = opts.normal_dilate_max;
  r.normal = is_normal_up_to(poly, opts.normal_dilate_max).normal_up_to;
  r.delta = ehrhart_delta(poly).delta;

  bool premise = r.csym_matrix_spans && r.buchberger_pass && r.all_squarefree;
  bool conclusion = r.fano && r.gorenstein && r.normal;
  r.verdict = (premise && conclusion) ? "PASS" : "INCONSISTENT";
  return pl;
}

inline Report classify_poset(const Poset& p, const ClassifyOptions& opts) {
  return run_pipeline(p, opts).report;
}

/// The three counts that must agree degree by degree: standard monomials of
/// the marked basis, semigroup elements of the configuration, and lattice
/// points of the dilated polytope.
inline bool triple_count_identity(const Pipeline& pl, int tmax) {
  for (int t = 0; t <= tmax; ++t) {
    Int standard = standard_monomial_count(pl.basis, pl.order,
                                           pl.ring.var_count(), t);
    Int semigroup = semigroup_degree_count(pl.a_csym, t);
    Int geometric = lattice_point_count(*pl.polytope, t);
    if (standard != semigroup || semigroup != geometric) return false;
  }
  return true;
}

inline Json report_to_json(const Report& r) {
  Json j;
  j["schema"] = r.schema;
  j["kind"] = "classify-report";
  j["seed"] = r.seed;
  j["order"] = r.order_spec;
  j["input"] = poset_to_json(r.input);
  j["ideals"] = Json{{"count", r.ideal_count}};
  Json witness;
  if (r.unimodular_witness) {
    witness = Json{{"columns", r.unimodular_witness->first},
                   {"determinant", r.unimodular_witness->second.str()}};
  } else {
    witness = nullptr;
  }
  j["matrices"] = Json{
      {"order_matrix", Json{{"rows", r.order_matrix_rows},
                            {"cols", r.order_matrix_cols}}},
      {"csym_matrix", Json{{"rows", r.csym_matrix_rows},
                           {"cols", r.csym_matrix_cols}}},
      {"order_matrix_unimodular", r.order_matrix_unimodular},
      {"unimodular_witness", witness},
      {"order_matrix_spans", r.order_matrix_spans},
      {"csym_matrix_spans", r.csym_matrix_spans}};
  j["groebner"] = Json{{"basis_size", r.basis_size},
                       {"buchberger_pass", r.buchberger_pass},
                       {"initial_generators", r.initial_generators},
                       {"lead_multiset_size", r.lead_multiset_size},
                       {"distinct_leads", r.distinct_leads},
                       {"all_squarefree", r.all_squarefree},
                       {"all_quadratic", r.all_quadratic}};
  Json delta = Json::array();
  for (const auto& v : r.delta) delta.push_back(int_to_json(v));
  j["geometry"] = Json{{"fano", r.fano},
                       {"gorenstein", r.gorenstein},
                       {"dual_integral", r.dual_integral},
                       {"delta_symmetric", r.delta_symmetric},
                       {"normal_dilate_max", r.normal_dilate_max},
                       {"normal", r.normal},
                       {"delta", delta}};
  j["consistency"] = r.verdict;
  return j;
}

inline Report report_from_json(const Json& j) {
  Report r;
  r.schema = j.at("schema").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.order_spec = j.at("order").get<std::string>();
  r.input = poset_from_json(j.at("input"));
  r.ideal_count = j.at("ideals").at("count").get<int>();
  const auto& m = j.at("matrices");
  r.order_matrix_rows = m.at("order_matrix").at("rows").get<int>();
  r.order_matrix_cols = m.at("order_matrix").at("cols").get<int>();
  r.csym_matrix_rows = m.at("csym_matrix").at("rows").get<int>();
  r.csym_matrix_cols = m.at("csym_matrix").at("cols").get<int>();
  r.order_matrix_unimodular = m.at("order_matrix_unimodular").get<bool>();
  if (!m.at("unimodular_witness").is_null()) {
    r.unimodular_witness = {
        m.at("unimodular_witness").at("columns").get<std::vector<int>>(),
        Int(m.at("unimodular_witness").at("determinant").get<std::string>())};
  }
  r.order_matrix_spans = m.at("order_matrix_spans").get<bool>();
  r.csym_matrix_spans = m.at("csym_matrix_spans").get<bool>();
  const auto& g = j.at("groebner");
  r.basis_size = g.at("basis_size").get<std::size_t>();
  r.buchberger_pass = g.at("buchberger_pass").get<bool>();
  r.initial_generators = g.at("initial_generators").get<std::size_t>();
  r.lead_multiset_size = g.at("lead_multiset_size").get<std::size_t>();
  r.distinct_leads = g.at("distinct_leads").get<std::size_t>();
  r.all_squarefree = g.at("all_squarefree").get<bool>();
  r.all_quadratic = g.at("all_quadratic").get<bool>();
  const auto& geo = j.at("geometry");
  r.fano = geo.at("fano").get<bool>();
  r.gorenstein = geo.at("gorenstein").get<bool>();
  r.dual_integral = geo.at("dual_integral").get<bool>();
  r.delta_symmetric = geo.at("delta_symmetric").get<bool>();
  r.normal_dilate_max = geo.at("normal_dilate_max").get<int>();
  r.normal = geo.at("normal").get<bool>();
  for (const auto& v : geo.at("delta")) r.delta.push_back(int_from_json(v));
  r.verdict = j.at("consistency").get<std::string>();
  return r;
}

// ---------------------------------------------------------------------------
// The bundled negative example: a configuration that spans its lattice but
// is not unimodular, whose centrally symmetric polytope fails both normality
// and Gorensteinness, and whose toric ideal needs a cubic generator.
// ---------------------------------------------------------------------------

struct NegativeExampleReport {
  std::string schema = "1";
  bool spans_full_lattice = false;          // expect true
  bool unimodular = true;                   // expect false
  std::optional<std::pair<std::vector<int>, Int>> unimodular_witness;
  bool fano = false;
  std::string normality_status;             // "refuted" or "inconclusive"
  std::optional<std::pair<long, std::vector<Int>>> normality_witness;
  int normality_dilates_checked = 0;
  // Gorenstein is probed along two routes. The polytope route (facet offsets
  // all one = reflexive) comes out TRUE for this configuration; the failure
  // the fixture is bundled for lives in the toric ring, whose Hilbert-series
  // numerator is asymmetric. Both are reported.
  bool dual_integral = true;
  std::optional<Facet> nonunit_facet;
  std::vector<Int> ring_h_numerator;        // trimmed of trailing zeros
  bool ring_h_stabilized = false;           // a zero coefficient was reached
  bool ring_gorenstein = true;              // expect false
  bool quadratic_generation = true;         // expect false
  std::optional<Binomial> cubic_witness;
  std::size_t quadratic_kernel_size = 0;
  bool all_reproduced = false;
};

inline std::string generic_monomial_to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [id, e] : m.exps) {
    if (!out.empty()) out += "*";
    out += "v" + std::to_string(id + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline NegativeExampleReport run_negative_example(
    int normal_dilate_max = 3, std::int64_t minor_budget = 10'000'000) {
  NegativeExampleReport rep;
  IntMatrix a = fixtures::example_1_4_configuration();
  rep.spans_full_lattice = lattice_spans(a).spans_full_lattice;
  auto unimod = is_unimodular(a, minor_budget);
  rep.unimodular = unimod.unimodular;
  rep.unimodular_witness = unimod.witness_minor;

  Polytope q = csym_polytope(a);
  rep.fano = is_fano(q);
  rep.normality_dilates_checked = normal_dilate_max;
  auto norm = is_normal_up_to(q, normal_dilate_max);
  if (!norm.normal_up_to) {
    rep.normality_status = "refuted";
    rep.normality_witness = norm.witness;
  } else {
    rep.normality_status = "inconclusive";
  }
  rep.dual_integral = true;
  for (const auto& f : q.facets())
    if (f.offset != 1) {
      rep.dual_integral = false;
      rep.nonunit_facet = f;
      break;
    }

  IntMatrix a_pm = centrally_symmetric(a);
  // Ring route: were the ring Gorenstein it would be Cohen-Macaulay, the
  // numerator would be a degree-one-generated Artinian Hilbert function
  // (so complete once it hits zero), and it would be symmetric.
  auto hn = hilbert_numerator(a_pm, 9);
  rep.ring_h_numerator = hn.numerator;
  while (!rep.ring_h_numerator.empty() && rep.ring_h_numerator.back() == 0) {
    rep.ring_h_stabilized = true;
    rep.ring_h_numerator.pop_back();
  }
  bool symmetric = true;
  for (std::size_t i = 0; i < rep.ring_h_numerator.size(); ++i)
    if (rep.ring_h_numerator[i] !=
        rep.ring_h_numerator[rep.ring_h_numerator.size() - 1 - i])
      symmetric = false;
  rep.ring_gorenstein = !rep.ring_h_stabilized || symmetric;
  MonomialOrder ord;
  ord.rank_of.resize(a_pm.cols);
  for (int i = 0; i < a_pm.cols; ++i) ord.rank_of[i] = i;
  auto qgen = quadratic_generation_test(a_pm, ord);
  rep.quadratic_generation = qgen.generated_in_degree_two_up_to_3;
  rep.cubic_witness = qgen.witness;
  rep.quadratic_kernel_size = qgen.quadratic_kernel_size;

  rep.all_reproduced = rep.spans_full_lattice && !rep.unimodular &&
                       !rep.ring_gorenstein && !rep.quadratic_generation;
  return rep;
}

inline Json negative_example_to_json(const NegativeExampleReport& r) {
  Json j;
  j["schema"] = r.schema;
  j["kind"] = "negative-example-report";
  auto claim = [](bool expected, bool observed) {
    return Json{{"expected", expected},
                {"observed", observed},
                {"reproduced", expected == observed}};
  };
  j["claims"]["spans_full_lattice"] = claim(true, r.spans_full_lattice);
  j["claims"]["unimodular"] = claim(false, r.unimodular);
  if (r.unimodular_witness)
    j["claims"]["unimodular"]["witness"] =
        Json{{"columns", r.unimodular_witness->first},
             {"determinant", r.unimodular_witness->second.str()}};
  Json norm{{"expected", false},
            {"status", r.normality_status},
            {"dilates_checked", r.normality_dilates_checked}};
  if (r.normality_witness) {
    Json pt = Json::array();
    for (const auto& x : r.normality_witness->second)
      pt.push_back(int_to_json(x));
    norm["witness"] = Json{{"dilate", r.normality_witness->first},
                           {"point", pt}};
  }
  j["claims"]["normal"] = norm;
  j["claims"]["gorenstein"] = claim(false, r.ring_gorenstein);
  j["claims"]["gorenstein"]["polytope_dual_integral"] = r.dual_integral;
  if (r.nonunit_facet) {
    Json nrm = Json::array();
    for (const auto& x : r.nonunit_facet->normal) nrm.push_back(int_to_json(x));
    j["claims"]["gorenstein"]["nonunit_facet"] =
        Json{{"normal", nrm}, {"offset", int_to_json(r.nonunit_facet->offset)}};
  }
  Json hnum = Json::array();
  for (const auto& v : r.ring_h_numerator) hnum.push_back(int_to_json(v));
  j["claims"]["gorenstein"]["ring_h_numerator"] = hnum;
  j["claims"]["gorenstein"]["ring_h_stabilized"] = r.ring_h_stabilized;
  j["claims"]["quadratic_generation"] = claim(false, r.quadratic_generation);
  if (r.cubic_witness)
    j["claims"]["quadratic_generation"]["witness"] =
        generic_monomial_to_string(r.cubic_witness->lead) + " - " +
        generic_monomial_to_string(r.cubic_witness->trail);
  j["claims"]["quadratic_generation"]["quadratic_kernel_size"] =
      r.quadratic_kernel_size;
  j["fano"] = r.fano;
  j["all_reproduced"] = r.all_reproduced;
  return j;
}

// ---------------------------------------------------------------------------
// Exhaustive sweep over all labeled posets up to a given size.
// ---------------------------------------------------------------------------

struct SweepRow {
  int d = 0;
  std::size_t posets = 0;
  std::size_t pass = 0;        // classify verdict PASS
  std::size_t prop_24_ok = 0;  // unimodular <=> no 3-antichain
  std::size_t triple_ok = 0;   // standard = semigroup = lattice counts
};

struct SweepSummary {
  int dmax = 0;
  std::vector<SweepRow> rows;
  bool all_pass = false;
};

inline SweepSummary run_sweep(int dmax, const ClassifyOptions& opts,
                              int triple_tmax = 4) {
  SweepSummary summary;
  summary.dmax = dmax;
  bool ok = true;
  for (int d = 1; d <= dmax; ++d) {
    SweepRow row;
    row.d = d;
    for (const Poset& p : enumerate_all_posets(d)) {
      ++row.posets;
      Pipeline pl = run_pipeline(p, opts);
      if (pl.report.verdict == "PASS") ++row.pass;
      bool equiv = pl.report.order_matrix_unimodular == !has_three_antichain(p);
      if (equiv) ++row.prop_24_ok;
      if (triple_count_identity(pl, triple_tmax)) ++row.triple_ok;
    }
    ok = ok && row.pass == row.posets && row.prop_24_ok == row.posets &&
         row.triple_ok == row.posets;
    summary.rows.push_back(row);
  }
  summary.all_pass = ok;
  return summary;
}

inline Json sweep_to_json(const SweepSummary& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows)
    rows.push_back(Json{{"d", r.d},
                        {"posets", r.posets},
                        {"pass", r.pass},
                        {"prop_2_4_ok", r.prop_24_ok},
                        {"triple_count_ok", r.triple_ok}});
  return Json{{"schema", "1"},
              {"kind", "sweep-summary"},
              {"dmax", s.dmax},
              {"rows", rows},
              {"all_pass", s.all_pass}};
}

}  // namespace csym
