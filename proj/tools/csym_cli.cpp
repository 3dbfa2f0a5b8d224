// Command-line front end: ingest posets or matrices (from JSON files or named
// fixtures), run the verification pipeline, and emit machine-readable reports
// on stdout with a human summary on stderr.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "csym/fixtures.hpp"
#include "csym/groebner.hpp"
#include "csym/io.hpp"
#include "csym/report.hpp"

namespace {

using namespace csym;

// exit codes: 0 all checks pass, 1 a check failed, 2 bad input / cap hit
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

ParsedInput resolve_input(const std::string& spec) {
  if (auto fixture = fixtures::lookup(spec)) {
    if (fixture->poset) return *fixture->poset;
    return *fixture->matrix;
  }
  return parse_input_json(load_json_file(spec));
}

Poset require_poset(const ParsedInput& input, const std::string& spec) {
  if (const Poset* p = std::get_if<Poset>(&input)) return *p;
  throw RangeError("input \"" + spec + "\" is not a poset");
}

int cmd_classify(const std::string& input_spec, const ClassifyOptions& opts) {
  Poset p = require_poset(resolve_input(input_spec), input_spec);
  Report report = classify_poset(p, opts);
  std::cout << report_to_json(report).dump(2) << "\n";
  std::cerr << "ideals: " << report.ideal_count
            << "  basis: " << report.basis_size
            << "  initial generators: " << report.initial_generators
            << "  buchberger: " << (report.buchberger_pass ? "pass" : "FAIL")
            << "  verdict: " << report.verdict << "\n";
  return report.verdict == "PASS" ? kExitPass : kExitFail;
}

int cmd_gb_verify(const std::string& input_spec, const ClassifyOptions& opts,
                  const std::string& out_path) {
  Poset p = require_poset(resolve_input(input_spec), input_spec);
  PosetRing ring(p);
  MonomialOrder ord = order_from_spec(ring, opts.order_spec);
  auto basis = csym_binomial_basis(ring);
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw RangeError("cannot open output file: " + out_path);
    out = &file;
  }
  for (const auto& b : basis) (*out) << binomial_to_string(ring, b) << "\n";
  auto buch = buchberger_verify(basis, ord);
  auto init = initial_ideal_minimal_generators(basis, ord);
  std::cerr << "order: " << opts.order_spec << "  basis: " << basis.size()
            << "  minimal initial generators: "
            << init.minimal_generators.size()
            << "  squarefree: " << (init.all_squarefree ? "yes" : "NO")
            << "  quadratic: " << (init.all_quadratic ? "yes" : "NO")
            << "  buchberger: " << (buch.is_groebner ? "pass" : "FAIL")
            << "\n";
  bool ok = buch.is_groebner && init.all_squarefree && init.all_quadratic;
  return ok ? kExitPass : kExitFail;
}

int cmd_ehrhart(const std::string& input_spec, long dilate_max,
                bool use_order_polytope) {
  ParsedInput input = resolve_input(input_spec);
  std::optional<Polytope> poly;
  std::string which = "input";
  bool antichain_input = false;
  int antichain_d = 0;
  if (const Poset* p = std::get_if<Poset>(&input)) {
    if (use_order_polytope) {
      poly.emplace(order_polytope(*p));
      which = "order";
    } else {
      poly.emplace(csym_polytope(order_matrix(*p)));
      which = "csym";
    }
    antichain_input = std::all_of(p->below.begin(), p->below.end(),
                                  [](std::uint64_t m) { return m == 0; });
    antichain_d = p->d;
  } else if (const IntMatrix* m = std::get_if<IntMatrix>(&input)) {
    poly.emplace(csym_polytope(*m));
    which = "csym";
  } else {
    poly.emplace(std::get<Polytope>(input));
  }
  EhrhartData data = ehrhart_delta(*poly, dilate_max);
  Json j = ehrhart_to_json(data);
  j["schema"] = "1";
  j["kind"] = "ehrhart";
  j["polytope"] = which;
  if (antichain_input && which == "csym") {
    Json cross = Json::array();
    bool all_match = true;
    for (long t = 0; t < static_cast<long>(data.counts.size()); ++t) {
      auto forms = antichain_closed_forms(antichain_d, t);
      bool match = forms.point_count == data.counts[t] &&
                   forms.zonotope_count == data.counts[t];
      all_match = all_match && match;
      cross.push_back(Json{{"t", t},
                           {"closed_form", int_to_json(forms.point_count)},
                           {"zonotope", int_to_json(forms.zonotope_count)},
                           {"match", match}});
    }
    auto forms = antichain_closed_forms(antichain_d, 1);
    bool delta_match = forms.delta == data.delta;
    j["closed_form_check"] =
        Json{{"counts", cross},
             {"delta_eulerian_match", delta_match},
             {"all_match", all_match && delta_match}};
  }
  std::cout << j.dump(2) << "\n";
  std::cerr << "counts up to t=" << data.counts.size() - 1 << ", delta = [";
  for (std::size_t i = 0; i < data.delta.size(); ++i)
    std::cerr << (i ? "," : "") << data.delta[i];
  std::cerr << "]\n";
  return kExitPass;
}

int cmd_negative_example(int dilate_max, std::int64_t minor_budget) {
  NegativeExampleReport rep = run_negative_example(dilate_max, minor_budget);
  std::cout << negative_example_to_json(rep).dump(2) << "\n";
  std::cerr << "spans Z^7: " << (rep.spans_full_lattice ? "yes" : "NO")
            << "  unimodular: " << (rep.unimodular ? "YES" : "no")
            << "  normality: " << rep.normality_status
            << "  polytope dual integral: "
            << (rep.dual_integral ? "yes" : "no")
            << "  ring Gorenstein: " << (rep.ring_gorenstein ? "YES" : "no")
            << "  quadratically generated: "
            << (rep.quadratic_generation ? "YES" : "no") << "\n";
  return rep.all_reproduced ? kExitPass : kExitFail;
}

int cmd_sweep(int dmax, const ClassifyOptions& opts) {
  SweepSummary summary = run_sweep(dmax, opts);
  std::cout << sweep_to_json(summary).dump(2) << "\n";
  for (const auto& row : summary.rows)
    std::cerr << "d=" << row.d << ": " << row.pass << "/" << row.posets
              << " pass, " << row.prop_24_ok << "/" << row.posets
              << " unimodularity equivalence, " << row.triple_ok << "/"
              << row.posets << " triple-count\n";
  return summary.all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact toolkit for centrally symmetric configurations of order "
      "polytopes: Groebner-basis verification, polyhedral certification, "
      "and Ehrhart data"};
  app.require_subcommand(1);
  app.fallthrough();

  ClassifyOptions opts;
  std::string input_spec;
  std::string out_path;
  long dilate_max = 3;
  bool use_order_polytope = false;
  int dmax = 4;
  bool allow_slow = false;

  app.add_option("--seed", opts.seed, "seed for randomized orders")
      ->capture_default_str();

  auto* classify = app.add_subcommand(
      "classify", "run the full pipeline on a poset and report");
  classify->add_option("input", input_spec, "poset JSON file or fixture name")
      ->required();
  classify->add_option("--order", opts.order_spec,
                       "monomial order: canonical or seed:<N>")
      ->capture_default_str();
  classify->add_option("--dilate-max", opts.normal_dilate_max,
                       "largest dilate checked for normality")
      ->capture_default_str();
  classify->add_option("--minor-budget", opts.minor_budget,
                       "maximal-minor enumeration budget")
      ->capture_default_str();

  auto* gb = app.add_subcommand(
      "gb-verify", "print the binomial basis and verify it is Groebner");
  gb->add_option("input", input_spec, "poset JSON file or fixture name")
      ->required();
  gb->add_option("--order", opts.order_spec,
                 "monomial order: canonical or seed:<N>")
      ->capture_default_str();
  gb->add_option("--out", out_path, "write the basis listing to a file");

  auto* ehr = app.add_subcommand("ehrhart",
                                 "dilate counts, Ehrhart polynomial, delta");
  ehr->add_option("input", input_spec,
                  "poset/matrix/polytope JSON file or fixture name")
      ->required();
  ehr->add_option("--dilate-max", dilate_max,
                  "count dilates at least this far")
      ->capture_default_str();
  ehr->add_flag("--order-polytope", use_order_polytope,
                "use the order polytope instead of the centrally symmetric "
                "polytope (poset inputs only)");

  auto* neg = app.add_subcommand(
      "negative-example",
      "verify the bundled non-normal, non-Gorenstein configuration");
  neg->add_option("--dilate-max", dilate_max,
                  "largest dilate searched for a normality witness")
      ->capture_default_str();
  neg->add_option("--minor-budget", opts.minor_budget,
                  "maximal-minor enumeration budget")
      ->capture_default_str();

  auto* sweep = app.add_subcommand(
      "sweep", "classify every labeled poset up to --dmax");
  sweep->add_option("--dmax", dmax, "largest ground-set size")
      ->capture_default_str();
  sweep->add_flag("--allow-slow", allow_slow, "permit dmax = 5");
  sweep->add_option("--order", opts.order_spec,
                    "monomial order: canonical or seed:<N>")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(input_spec, opts);
    if (gb->parsed()) return cmd_gb_verify(input_spec, opts, out_path);
    if (ehr->parsed())
      return cmd_ehrhart(input_spec, dilate_max, use_order_polytope);
    if (neg->parsed())
      return cmd_negative_example(static_cast<int>(dilate_max),
                                  opts.minor_budget);
    if (sweep->parsed()) {
      if (dmax > 4 && !allow_slow) {
        std::cerr << "dmax > 4 needs --allow-slow\n";
        return kExitInputError;
      }
      if (dmax > 5) {
        std::cerr << "dmax is capped at 5\n";
        return kExitInputError;
      }
      return cmd_sweep(dmax, opts);
    }
  } catch (const InternalCheckError& e) {
    std::cerr << "internal consistency violation: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
