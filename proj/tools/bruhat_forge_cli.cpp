// Command-line front end: analyze, verify, enumerate, export.
// Exit codes: 0 success, 1 counterexample found, 2 usage error.
#include "bruhat_forge/io.hpp"
#include "bruhat_forge/series.hpp"
#include "bruhat_forge/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

using namespace bruhat;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Family family_or_throw(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "'");
  return *f;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot write " + out_path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

// R_w walks every chamber of the group, so large groups are skipped.
constexpr double kChamberLimit = 1e5;

double finite_group_order(const CoxeterSystem& W) {
  const int n = W.rank();
  double fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  switch (W.family()) {
    case Family::A: return fact * (n + 1);
    case Family::B:
    case Family::C: return fact * std::pow(2.0, n);
    case Family::D: return fact * std::pow(2.0, n - 1);
    case Family::E: return n == 6 ? 51840.0 : n == 7 ? 2903040.0 : 696729600.0;
    case Family::F4: return 1152.0;
    case Family::G2: return 12.0;
    default: return std::numeric_limits<double>::infinity();
  }
}

Json analyze(const GroupElement& w, bool verify, int horizon) {
  const CoxeterSystem& W = w.system();
  Json rep{{"schema", kSchemaVersion}, {"element", to_json(w)}};
  rep["support"] = gen_set_json(W, support(w));
  rep["leftDescents"] = gen_set_json(W, descents(w, Side::Left));
  rep["rightDescents"] = gen_set_json(W, descents(w, Side::Right));
  const IntPolynomial P = poincare(w);
  rep["P"] = to_json(P);
  rep["P_text"] = P.to_string();
  rep["rationallySmooth"] = P.is_palindromic();
  if (W.is_finite() && W.roots() && finite_group_order(W) > kChamberLimit) {
    rep["R"] = nullptr;
    rep["R_skipped"] = "group has " + std::to_string(static_cast<long long>(finite_group_order(W))) + " chambers";
  } else if (W.is_finite() && W.roots()) {
    const IntPolynomial R = r_poly_generic(w);
    rep["R"] = to_json(R);
    rep["R_text"] = R.to_string();
    rep["P_equals_R"] = P == R;
  }
  Json cands = Json::array();
  for (int s : grassmannian_bp_candidates(w)) cands.push_back(W.label(s));
  rep["grassmannianBpCandidates"] = cands;
  if (W.family() == Family::A) {
    const Permutation p = permutation_of(w);
    const ClassFlags f = classify(p);
    rep["patternFlags"] = Json{{"smooth", f.smooth}, {"completeBp", f.complete_bp}, {"divisor", f.divisor}, {"polished", f.polished}};
    Json at = Json::array();
    for (int r = 1; r < static_cast<int>(p.size()); ++r)
      if (grassmannian_bp_at_r(p, r)) at.push_back(r);
    rep["grassmannianBpAt"] = at;
  }
  if (W.family() == Family::AffineA) rep["affineSmooth"] = affine_is_smooth(affine_of(w), horizon);
  if (const auto chain = complete_bp(w)) {
    Json factors = Json::array();
    for (const auto& f : chain->factors) factors.push_back(to_word_string(f));
    rep["completeBpChain"] = factors;
  } else {
    rep["completeBpChain"] = nullptr;
  }
  if (const auto deg = chain_bp_factorization(w))
    rep["chainBpDegrees"] = *deg;
  else
    rep["chainBpDegrees"] = nullptr;
  if (verify) {
    Json all = Json::array();
    for (GenSet J = 0; J <= W.all_generators(); ++J) all.push_back(to_json(is_bp(w, J, true)));
    rep["bpVerdicts"] = all;
  }
  return rep;
}

const CoxeterSystem& graph_system(std::optional<int> path, std::optional<int> cycle, const std::string& family, int rank) {
  if (path) return build_system(Family::A, *path);
  if (cycle) return build_system(Family::AffineA, *cycle);
  if (rank < 1) throw UsageError("give --path, --cycle or --family with --rank");
  return build_system(family_or_throw(family), rank);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat order, BP decompositions, patterns and staircase diagrams"};
  app.require_subcommand(1);

  std::string family = "A", out_path, format = "json", filter = "all";
  int rank = 0, min_rank = 1, max_rank = 3, horizon = 0, jobs = 0, trials = 1000, count = 10;
  unsigned seed = 20240611;
  bool verify_flag = false, list = false;
  std::optional<int> path, cycle;

  auto* analyze_cmd = app.add_subcommand("analyze", "report on one element");
  std::string literal;
  analyze_cmd->add_option("element", literal, "element literal: 2431, -2,1,-3, [8,1,-2,3] or s1 s2 s1")->required();
  analyze_cmd->add_option("--family", family, "A, B, C, D, E, F4, G2, AffineA, FreeUniversal");
  analyze_cmd->add_option("--rank", rank, "rank (inferred from the literal when omitted)");
  analyze_cmd->add_option("--horizon", horizon, "affine pattern horizon (0: pattern length)");
  analyze_cmd->add_flag("--verify", verify_flag, "compute all four BP criteria for every J");
  analyze_cmd->add_option("--out", out_path);

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive theorem sweep");
  std::string theorem;
  verify_cmd->add_option("theorem,--theorem", theorem, "theorem id, positional or as --theorem")->check(CLI::IsMember(theorem_ids()));
  verify_cmd->add_option("--family", family);
  verify_cmd->add_option("--min-rank", min_rank);
  verify_cmd->add_option("--max-rank", max_rank);
  verify_cmd->add_option("--horizon", horizon);
  verify_cmd->add_option("--jobs", jobs, "worker threads (default BRUHAT_FORGE_JOBS or hardware)");
  verify_cmd->add_option("--trials", trials);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--out", out_path);

  auto* enum_cmd = app.add_subcommand("enumerate", "counts of smooth elements, diagrams, series");
  std::string kind;
  enum_cmd->add_option("kind", kind, "smooth | rationally-smooth | complete-bp | diagrams | series | group")
      ->required()
      ->check(CLI::IsMember({"smooth", "rationally-smooth", "complete-bp", "diagrams", "series", "group"}));
  enum_cmd->add_option("--family", family);
  enum_cmd->add_option("--rank", rank);
  enum_cmd->add_option("--path", path, "path Coxeter graph with N vertices");
  enum_cmd->add_option("--cycle", cycle, "cycle Coxeter graph with N vertices");
  enum_cmd->add_option("--filter", filter, "all | fullySupported | increasing | broken | spherical");
  enum_cmd->add_option("--count", count, "series terms");
  enum_cmd->add_flag("--list", list, "include the items");
  enum_cmd->add_option("--out", out_path);

  auto* export_cmd = app.add_subcommand("export", "DOT or JSON export");
  std::string object, value;
  export_cmd->add_option("object", object, "interval | inversion-graph | diagram")
      ->required()
      ->check(CLI::IsMember({"interval", "inversion-graph", "diagram"}));
  export_cmd->add_option("value", value, "element literal, permutation, or diagram JSON")->required();
  export_cmd->add_option("--family", family);
  export_cmd->add_option("--rank", rank);
  export_cmd->add_option("--path", path);
  export_cmd->add_option("--cycle", cycle);
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) {
      const Family f = family_or_throw(family);
      const GroupElement w = parse_element(literal, f, rank);
      emit(analyze(w, verify_flag, horizon).dump(2), out_path);
      return 0;
    }
    if (*verify_cmd) {
      if (theorem.empty()) throw UsageError("a theorem id is required: " + [] {
        std::string all;
        for (const auto& id : theorem_ids()) all += (all.empty() ? "" : ", ") + id;
        return all;
      }());
      SweepConfig c;
      c.family = family_or_throw(family);
      c.min_rank = min_rank;
      c.max_rank = max_rank;
      c.horizon = horizon;
      c.jobs = jobs;
      c.trials = trials;
      c.seed = seed;
      const SweepResult r = verify_theorem(theorem, c);
      Json rep{{"schema", kSchemaVersion}, {"theorem", theorem},     {"family", family_name(c.family)},
               {"minRank", min_rank},      {"maxRank", max_rank},   {"checked", r.checked},
               {"passed", r.passed()},     {"counterexamples", r.failures}};
      emit(rep.dump(2), out_path);
      return r.passed() ? 0 : 1;
    }
    if (*enum_cmd) {
      Json rep{{"schema", kSchemaVersion}, {"kind", kind}};
      Json items = Json::array();
      std::size_t n = 0;
      if (kind == "series") {
        const auto coeffs = series_coefficients(series_spec(family), count);
        for (const auto& c : coeffs) items.push_back(c.str());
        rep["series"] = family;
        rep["coefficients"] = items;
        emit(rep.dump(2), out_path);
        return 0;
      }
      if (kind == "diagrams") {
        const CoxeterSystem& W = graph_system(path, cycle, family, rank);
        const auto flt = parse_diagram_filter(filter);
        if (!flt) throw UsageError("unknown filter '" + filter + "'");
        const auto ds = enumerate_diagrams(W, *flt);
        n = ds.size();
        rep["graph"] = W.name();
        rep["filter"] = filter;
        if (list)
          for (const auto& D : ds) items.push_back(to_json(D));
      } else {
        const Family f = family_or_throw(family);
        if (rank < 1) throw UsageError("--rank is required");
        const CoxeterSystem& W = build_system(f, rank);
        rep["system"] = W.name();
        for (const auto& w : enumerate_group(W)) {
          bool keep = true;
          if (kind == "smooth") {
            if (f == Family::A) keep = classify(permutation_of(w)).smooth;
            else keep = is_rationally_smooth(w);
          } else if (kind == "rationally-smooth") {
            keep = is_rationally_smooth(w);
          } else if (kind == "complete-bp") {
            keep = complete_bp(w).has_value();
          }
          if (!keep) continue;
          ++n;
          if (list) items.push_back(to_literal(w));
        }
      }
      rep["count"] = n;
      if (list) rep["items"] = items;
      emit(rep.dump(2), out_path);
      return 0;
    }
    if (*export_cmd) {
      if (object == "interval") {
        const GroupElement w = parse_element(value, family_or_throw(family), rank);
        const Interval I = lower_interval(w);
        emit(format == "dot" ? interval_dot(I) : Json{{"schema", kSchemaVersion}, {"interval", to_json(I)}}.dump(2), out_path);
      } else if (object == "inversion-graph") {
        const InversionGraph G = inversion_graph(parse_permutation(value));
        if (format == "dot") {
          emit(inversion_graph_dot(G), out_path);
        } else {
          Json edges = Json::array();
          for (auto [i, j] : G.edges) edges.push_back(Json::array({i, j}));
          emit(Json{{"schema", kSchemaVersion}, {"vertices", G.n}, {"edges", edges}, {"R", to_json(r_poly_graph(G))}}.dump(2), out_path);
        }
      } else {
        const CoxeterSystem& W = graph_system(path, cycle, family, rank);
        const StaircaseDiagram D = diagram_from_json(Json::parse(value), W);
        const DiagramCheck chk = validate_diagram(D);
        if (format == "dot") {
          emit(diagram_dot(D), out_path);
        } else {
          Json rep{{"schema", kSchemaVersion}, {"diagram", to_json(D)}, {"valid", chk.valid}};
          if (!chk.valid) rep["violation"] = Json{{"axiom", chk.axiom}, {"witness", chk.witness}};
          else if (W.is_finite() || [&] {
                     for (GenSet B : D.blocks)
                       if (!W.parabolic_finite(B)) return false;
                     return true;
                   }())
            rep["maximalLabellingProduct"] = to_json(lambda_product(D, maximal_labelling(D)));
          emit(rep.dump(2), out_path);
        }
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
