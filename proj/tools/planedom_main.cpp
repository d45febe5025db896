// planedom: build finite projective planes, construct the named dominating
// set families, analyze candidates, run the exact solvers and the integer
// feasibility scan.
//
// Exit codes: 0 success, 1 usage error, 2 validation/domain error,
// 3 search budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "planedom/constructions.hpp"
#include "planedom/errors.hpp"
#include "planedom/feasibility.hpp"
#include "planedom/plane.hpp"
#include "planedom/sets.hpp"
#include "planedom/solver.hpp"

namespace {

using namespace planedom;

int thread_cap() {
  const char* env = std::getenv("PLANEDOM_THREADS");
  if (!env) return 0;
  int v = std::atoi(env);
  return v > 0 ? v : 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("ParseError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    out << text << "\n";
  }
}

Plane plane_from_flags(int q, const std::string& plane_file) {
  if (!plane_file.empty()) {
    Plane pl = load_plane(read_file(plane_file), plane_file);
    if (!validate_axioms(pl).ok())
      fail("InvalidPlane", "loaded plane fails the projective-plane axioms");
    return pl;
  }
  return build_pg2q(q);
}

nlohmann::ordered_json validation_to_json(const ValidationReport& rep) {
  nlohmann::ordered_json j;
  j["ok"] = rep.ok();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : rep.violations)
    arr.push_back({{"axiom", v.axiom}, {"a", v.a}, {"b", v.b}, {"detail", v.detail}});
  j["violations"] = std::move(arr);
  return j;
}

sets::Candidate construct_family(const Plane& pl, const std::string& family, int t) {
  using namespace constructions;
  int q = pl.q();
  LineId l0 = 0;
  std::vector<PointId> pts0 = pl.points_on(l0);
  if (family == "i") return family_i(pl, l0, pts0.front());
  if (family == "ii") {
    for (PointId p = 0; p < pl.n(); ++p)
      if (!pl.incident(p, l0)) return family_ii(pl, l0, p);
  }
  if (family == "iii") {
    auto baer = baer_subplane(pl);
    return family_iii(pl, baer, baer.front());
  }
  if (family == "blocking-pencil") {
    auto baer = baer_subplane(pl);
    for (PointId p = 0; p < pl.n(); ++p)
      if (!sets::to_bitrow(baer, pl.n()).test(p)) return blocking_plus_pencil(pl, baer, p);
  }
  if (family == "baer") {
    sets::Candidate D;
    D.points = baer_subplane(pl);
    return D;
  }
  if (family == "baer-union") return baer_union(pl);
  if (family == "oval-skew") return oval_plus_skew(pl);
  if (family == "nonstable") return nonstable_3q_minus_1(pl, l0, pts0[0], pts0[1]);
  if (family == "pg3qm2") return pg_3q_minus_2(pl, t > 0 ? t : std::max(1, q / 2));
  fail("BadParameter", "unknown family: " + family);
}

int run(int argc, char** argv) {
  CLI::App app{"finite projective plane domination toolkit"};
  app.require_subcommand(1);

  int q = 0, t = 0, max_size = 0, qmin = 0, qmax = 0;
  double budget = 0;
  bool nontrivial = false, all_k = false;
  std::string out_path, plane_file, set_file;

  auto* c_build = app.add_subcommand("build", "emit the PG(2,q) plane JSON");
  c_build->add_option("--q", q)->required();
  c_build->add_option("--out", out_path);

  auto* c_validate = app.add_subcommand("validate", "check the plane axioms");
  c_validate->add_option("--plane", plane_file)->required();

  auto* c_construct = app.add_subcommand("construct", "build a named family candidate");
  std::string family;
  c_construct->add_option("--family", family)->required();
  c_construct->add_option("--q", q)->required();
  c_construct->add_option("--t", t);
  c_construct->add_option("--out", out_path);

  auto* c_analyze = app.add_subcommand("analyze", "full diagnostic of a candidate");
  c_analyze->add_option("--plane", plane_file)->required();
  c_analyze->add_option("--set", set_file)->required();

  auto* c_gamma = app.add_subcommand("gamma", "exact domination number");
  c_gamma->add_option("--q", q)->required();
  c_gamma->add_option("--budget-seconds", budget);

  auto* c_blocking = app.add_subcommand("min-blocking", "exact minimum blocking set");
  c_blocking->add_option("--q", q)->required();
  c_blocking->add_flag("--nontrivial", nontrivial);

  auto* c_enum = app.add_subcommand("enumerate-minimal", "all minimal dominating sets");
  c_enum->add_option("--q", q)->required();
  c_enum->add_option("--max-size", max_size)->required();

  auto* c_scan = app.add_subcommand("scan", "integer feasibility scan");
  c_scan->add_option("--qmin", qmin)->required();
  c_scan->add_option("--qmax", qmax)->required();
  c_scan->add_flag("--all-k", all_k);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (c_build->parsed()) {
    write_output(out_path, plane_to_json(build_pg2q(q)));
    return 0;
  }

  if (c_validate->parsed()) {
    Plane pl = load_plane(read_file(plane_file), plane_file);
    ValidationReport rep = validate_axioms(pl);
    std::cout << validation_to_json(rep).dump() << "\n";
    return rep.ok() ? 0 : 2;
  }

  if (c_construct->parsed()) {
    Plane pl = build_pg2q(q);
    sets::Candidate D = construct_family(pl, family, t);
    write_output(out_path, sets::candidate_to_json(D));
    std::cerr << "size " << D.size() << "\n";
    return 0;
  }

  if (c_analyze->parsed()) {
    Plane pl = plane_from_flags(0, plane_file);
    sets::Candidate D = sets::candidate_from_json(read_file(set_file), pl);
    std::cout << sets::report_to_json(sets::analyze(pl, D)) << "\n";
    return 0;
  }

  if (c_gamma->parsed()) {
    Plane pl = build_pg2q(q);
    solver::SearchResult res = solver::min_dominating(pl, budget);
    nlohmann::ordered_json j;
    j["optimum"] = res.optimum;
    j["lower_bound"] = res.lower_bound;
    j["proof"] = res.proof == solver::Proof::exhausted ? "exhausted" : "bound_met";
    j["nodes"] = res.nodes_expanded;
    j["witness"] = nlohmann::ordered_json::parse(sets::candidate_to_json(res.witness));
    std::cout << j.dump() << "\n";
    return res.proof == solver::Proof::exhausted ? 0 : 3;
  }

  if (c_blocking->parsed()) {
    Plane pl = build_pg2q(q);
    auto res = solver::min_blocking(pl, nontrivial);
    nlohmann::ordered_json j;
    if (res) {
      j["optimum"] = res->optimum;
      j["witness"] = res->witness.points;
    } else {
      j["optimum"] = nullptr;
      j["witness"] = nullptr;
    }
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (c_enum->parsed()) {
    Plane pl = build_pg2q(q);
    auto all = solver::enumerate_minimal_dominating(pl, max_size);
    for (const auto& D : all) std::cout << sets::candidate_to_json(D) << "\n";
    std::cerr << "count " << all.size() << "\n";
    return 0;
  }

  if (c_scan->parsed()) {
    auto records = feas::scan(qmin, qmax, all_k, thread_cap());
    for (const auto& rec : records) std::cout << feas::record_to_json(rec) << "\n";
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    nlohmann::json j{{"error", e.code()}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    nlohmann::json j{{"error", "Internal"}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return 2;
  }
}
