// End-to-end checks, one line of output per criterion.

#include <algorithm>
#include <cstdio>
#include <random>
#include <vector>

#include "planedom/constructions.hpp"
#include "planedom/errors.hpp"
#include "planedom/feasibility.hpp"
#include "planedom/plane.hpp"
#include "planedom/sets.hpp"
#include "planedom/solver.hpp"

using namespace planedom;
using sets::Candidate;

namespace {

int failures = 0;

void report(int number, const char* name, bool ok) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", number, name);
  if (!ok) ++failures;
}

int isqrt(int q) {
  int r = 1;
  while (r * r < q) ++r;
  return r;
}

bool criterion_gamma() {
  for (int q : {2, 3, 4}) {
    auto res = solver::min_dominating(build_pg2q(q));
    if (res.optimum != 2 * q || res.proof != solver::Proof::exhausted) return false;
  }
  auto res5 = solver::min_dominating(build_pg2q(5), 600);
  if (res5.optimum != 10) return false;
  if (res5.proof != solver::Proof::exhausted && res5.lower_bound != 10) return false;
  return true;
}

bool criterion_classification() {
  Plane pl = build_pg2q(3);
  auto all = solver::enumerate_minimal_dominating(pl, 6);
  if (all.empty()) return false;
  for (const auto& D : all)
    if (sets::classify(pl, D) != "case_i") return false;
  return true;
}

bool criterion_bruen() {
  Plane pl = build_pg2q(4);
  auto res = solver::min_blocking(pl, true);
  if (!res || res->optimum != 7) return false;
  auto spec = sets::secant_spectrum(pl, res->witness.points);
  return spec.count(1) == 14 && spec.count(3) == 7;
}

bool criterion_constructions() {
  using namespace constructions;
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    Plane pl = build_pg2q(q);
    PointId on = pl.points_on(0).front();
    PointId off = 0;
    while (pl.incident(off, 0)) ++off;

    Candidate i = family_i(pl, 0, on);
    if (i.size() != 2 * q || !sets::is_stable(pl, i) || !sets::is_primal(pl, i))
      return false;

    Candidate ii = family_ii(pl, 0, off);
    if (ii.size() != 2 * q + 2 || !sets::is_minimal(pl, ii) || !sets::is_primal(pl, ii))
      return false;

    Candidate ov = oval_plus_skew(pl);
    int ov_size = (q % 2 == 1) ? q + 1 + q * (q - 1) / 2 : q + 2 + q * (q - 1) / 2;
    if (ov.size() != ov_size || !sets::is_dominating(pl, ov)) return false;

    auto pts = pl.points_on(0);
    Candidate ns = nonstable_3q_minus_1(pl, 0, pts[0], pts[1]);
    if (ns.size() != 3 * q - 1 || !sets::is_dominating(pl, ns)) return false;
    if (q >= 3 && sets::is_stable(pl, ns)) return false;

    if (q >= 3) {
      Candidate pg = pg_3q_minus_2(pl, std::max(1, q / 2));
      if (pg.size() != 3 * q - 2 || !sets::is_dominating(pl, pg)) return false;
    }
  }
  for (int q : {4, 9}) {
    Plane pl = build_pg2q(q);
    int r = isqrt(q);
    auto baer = baer_subplane(pl);
    Candidate iii = family_iii(pl, baer, baer.front());
    if (iii.size() != 2 * q + r + 1 || !sets::is_stable(pl, iii)) return false;
    PointId outside = 0;
    while (std::find(baer.begin(), baer.end(), outside) != baer.end()) ++outside;
    Candidate bp = blocking_plus_pencil(pl, baer, outside);
    if (bp.size() != 2 * q + r + 2 || !sets::is_dominating(pl, bp)) return false;
    Candidate bu = baer_union(pl);
    if (bu.size() != 2 * q + 2 * r + 2 || !sets::is_dominating(pl, bu) ||
        sets::is_primal(pl, bu))
      return false;
  }
  return true;
}

bool criterion_standard_equations() {
  std::mt19937 rng(20240901);
  for (int q : {3, 4, 5}) {
    Plane pl = build_pg2q(q);
    std::uniform_int_distribution<int> size_d(0, 2 * q);
    for (int trial = 0; trial < 3334; ++trial) {
      std::vector<PointId> ids(pl.n());
      for (int i = 0; i < pl.n(); ++i) ids[i] = i;
      std::shuffle(ids.begin(), ids.end(), rng);
      ids.resize(size_d(rng));
      std::sort(ids.begin(), ids.end());
      auto spec = sets::secant_spectrum(pl, ids);
      long long sum_m = 0, sum_mm = 0;
      for (auto [m, cnt] : spec.histogram) {
        sum_m += (long long)m * cnt;
        sum_mm += (long long)m * (m - 1) * cnt;
      }
      long long s = (long long)ids.size();
      if (sum_m != s * (q + 1) || sum_mm != s * (s - 1)) return false;
      if (!ids.empty()) {
        long long blocked = sets::blocked_lines(pl, ids);
        long long bound = sets::bound_blocked_lines(int(ids.size()), q);
        if (blocked > bound) return false;
        bool is_collinear = true;
        if (ids.size() > 2) {
          LineId l = pl.line_through(ids[0], ids[1]);
          for (PointId p : ids)
            if (!pl.incident(p, l)) is_collinear = false;
        }
        if ((blocked == bound) != is_collinear) return false;
      }
    }
  }
  return true;
}

bool criterion_weights() {
  std::mt19937 rng(5150);
  for (int q : {3, 4}) {
    Plane pl = build_pg2q(q);
    std::uniform_int_distribution<int> size_d(0, 2 * q);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<PointId> ids(pl.n());
      for (int i = 0; i < pl.n(); ++i) ids[i] = i;
      std::shuffle(ids.begin(), ids.end(), rng);
      ids.resize(size_d(rng));
      int k = std::max(1, sets::max_secant(pl, ids));
      auto lw = sets::line_weights(pl, ids, k);
      if (lw.total > 0) return false;  // all m_i <= k = k_max
      for (LineId l = 0; l < pl.n(); ++l) {
        long long rhs = lw.w[l];
        for (PointId P : pl.points_on(l)) rhs += lw.wl(pl, l, P);
        if (lw.total != rhs) return false;
      }
    }
  }
  // the weight inequality for every constructed family candidate
  using namespace constructions;
  auto check = [](const Plane& pl, const Candidate& D) {
    int q = pl.q();
    int k = std::max(1, sets::max_secant(pl, D.points));
    long long w = sets::weight(pl, D.points, k);
    return w >= sets::bound_lbweird((long long)D.points.size(), k, D.size(), q);
  };
  for (int q : {3, 4, 5, 7, 8, 9}) {
    Plane pl = build_pg2q(q);
    PointId off = 0;
    while (pl.incident(off, 0)) ++off;
    auto pts = pl.points_on(0);
    if (!check(pl, family_i(pl, 0, pts[0]))) return false;
    if (!check(pl, family_ii(pl, 0, off))) return false;
    if (!check(pl, oval_plus_skew(pl))) return false;
    if (!check(pl, nonstable_3q_minus_1(pl, 0, pts[0], pts[1]))) return false;
    if (!check(pl, pg_3q_minus_2(pl, std::max(1, q / 2)))) return false;
  }
  for (int q : {4, 9}) {
    Plane pl = build_pg2q(q);
    auto baer = constructions::baer_subplane(pl);
    if (!check(pl, family_iii(pl, baer, baer.front()))) return false;
    if (!check(pl, baer_union(pl))) return false;
  }
  return true;
}

bool criterion_scan() {
  auto records = feas::scan(21, 130);
  if (records.empty()) return false;
  for (const auto& r : records) {
    if (r.q >= 30 && r.beta0 >= 2) return false;
    if (!r.case_label) return false;
    if (*r.case_label == "I.a") {
      if (2 * r.b != r.k) return false;
    } else if (*r.case_label == "II.a") {
      if (r.b != r.k) return false;
    } else {
      return false;
    }
    if (r.b >= 2 && !feas::combinatorial_exclusion(r)) return false;
  }
  return true;
}

bool criterion_duality() {
  for (int q : {2, 3, 4}) {
    Plane pl = build_pg2q(q);
    Plane d = pl.dual();
    if (solver::min_dominating(pl).optimum != solver::min_dominating(d).optimum)
      return false;
    PointId off = 0;
    while (pl.incident(off, 0)) ++off;
    for (const Candidate& D :
         {constructions::family_i(pl, 0, pl.points_on(0).front()),
          constructions::family_ii(pl, 0, off)}) {
      Candidate swapped;
      swapped.points = D.lines;
      swapped.lines = D.points;
      auto a = sets::analyze(pl, D);
      auto b = sets::analyze(d, swapped);
      if (a.dominating != b.dominating || a.minimal != b.minimal ||
          a.stable != b.stable || a.primal != b.primal || a.k != b.c || a.c != b.k ||
          a.blocking != b.covering || a.covering != b.blocking)
        return false;
    }
  }
  return true;
}

bool criterion_3q_minus_2() {
  for (int q : {5, 7}) {
    Plane pl = build_pg2q(q);
    for (int t = 1; t <= q - 1; ++t) {
      Candidate D = constructions::pg_3q_minus_2(pl, t);
      if (D.size() != 3 * q - 2) return false;
      if (!sets::is_dominating(pl, D)) return false;
      if (sets::is_blocking(pl, D.points)) return false;
      if (sets::is_covering(pl, D.lines)) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  report(1, "domination number 2q (exact search, q<=5)", criterion_gamma());
  report(2, "all minimal dominating sets of size 6 at q=3 have the extremal shape",
         criterion_classification());
  report(3, "minimum nontrivial blocking set of PG(2,4) is a Baer subplane",
         criterion_bruen());
  report(4, "construction sizes and flags", criterion_constructions());
  report(5, "standard equations and blocked-line bound on random sets",
         criterion_standard_equations());
  report(6, "weight identities and the weight lower bound", criterion_weights());
  report(7, "feasibility scan 21..130", criterion_scan());
  report(8, "duality of analysis and of the domination number", criterion_duality());
  report(9, "3q-2 dominating set with non-blocking parts", criterion_3q_minus_2());
  return failures == 0 ? 0 : 1;
}
