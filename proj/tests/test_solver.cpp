#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "planedom/constructions.hpp"
#include "planedom/errors.hpp"
#include "planedom/plane.hpp"
#include "planedom/sets.hpp"
#include "planedom/solver.hpp"

using namespace planedom;
using sets::Candidate;

namespace {

// Plain subset enumeration over the 2n bipartite vertices, no pruning.
struct BruteForce {
  const Plane& pl;
  int n;

  Candidate to_candidate(const std::vector<int>& vs) const {
    Candidate D;
    for (int v : vs) (v < n ? D.points : D.lines).push_back(v < n ? v : v - n);
    return D;
  }

  void subsets(int start, int left, std::vector<int>& cur,
               const std::function<void(const std::vector<int>&)>& fn) {
    if (left == 0) {
      fn(cur);
      return;
    }
    for (int v = start; v <= 2 * n - left; ++v) {
      cur.push_back(v);
      subsets(v + 1, left - 1, cur, fn);
      cur.pop_back();
    }
  }

  int gamma() {
    for (int size = 1; size <= 2 * n; ++size) {
      bool found = false;
      std::vector<int> cur;
      subsets(0, size, cur, [&](const std::vector<int>& vs) {
        if (!found && sets::is_dominating(pl, to_candidate(vs))) found = true;
      });
      if (found) return size;
    }
    return 2 * n;
  }

  std::set<std::vector<int>> minimal_up_to(int max_size) {
    std::set<std::vector<int>> out;
    for (int size = 1; size <= max_size; ++size) {
      std::vector<int> cur;
      subsets(0, size, cur, [&](const std::vector<int>& vs) {
        Candidate D = to_candidate(vs);
        if (sets::is_dominating(pl, D) && sets::is_minimal(pl, D)) out.insert(vs);
      });
    }
    return out;
  }
};

std::vector<int> vertex_list(const Plane& pl, const Candidate& D) {
  std::vector<int> vs;
  for (PointId p : D.points) vs.push_back(p);
  for (LineId l : D.lines) vs.push_back(pl.n() + l);
  std::sort(vs.begin(), vs.end());
  return vs;
}

}  // namespace

TEST_CASE("domination number is 2q for small orders") {
  for (int q : {2, 3, 4}) {
    Plane pl = build_pg2q(q);
    auto res = solver::min_dominating(pl);
    CHECK(res.optimum == 2 * q);
    CHECK(res.proof == solver::Proof::exhausted);
    CHECK(res.witness.size() == 2 * q);
    CHECK(sets::is_dominating(pl, res.witness));
    CHECK(res.lower_bound == 2 * q);
  }
}

TEST_CASE("brute-force oracle agrees on gamma") {
  for (int q : {2, 3}) {
    Plane pl = build_pg2q(q);
    BruteForce bf{pl, pl.n()};
    CHECK(solver::min_dominating(pl).optimum == bf.gamma());
  }
}

TEST_CASE("witness is the lexicographically least optimum") {
  Plane pl = build_pg2q(2);
  auto res = solver::min_dominating(pl);
  BruteForce bf{pl, pl.n()};
  std::vector<int> best;
  std::vector<int> cur;
  bf.subsets(0, 4, cur, [&](const std::vector<int>& vs) {
    if (best.empty() && sets::is_dominating(pl, bf.to_candidate(vs))) best = vs;
  });
  CHECK(vertex_list(pl, res.witness) == best);
}

TEST_CASE("enumerate_minimal_dominating matches brute force") {
  for (int q : {2, 3}) {
    Plane pl = build_pg2q(q);
    int cap = 2 * q;
    auto fast = solver::enumerate_minimal_dominating(pl, cap);
    BruteForce bf{pl, pl.n()};
    auto slow = bf.minimal_up_to(cap);
    REQUIRE(fast.size() == slow.size());
    for (const auto& D : fast) CHECK(slow.count(vertex_list(pl, D)) == 1);
  }
}

TEST_CASE("enumerate below gamma is empty") {
  Plane pl = build_pg2q(2);
  CHECK(solver::enumerate_minimal_dominating(pl, 3).empty());
}

TEST_CASE("enumeration guard refuses big instances") {
  try {
    solver::enumerate_minimal_dominating(build_pg2q(5), 10);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "TooLarge");
  }
  try {
    solver::enumerate_minimal_dominating(build_pg2q(4), 11);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "TooLarge");
  }
}

TEST_CASE("min_blocking") {
  Plane pl3 = build_pg2q(3);
  auto triv = solver::min_blocking(pl3, false);
  REQUIRE(triv.has_value());
  CHECK(triv->optimum == 4);  // a full line
  CHECK(sets::is_blocking(pl3, triv->witness.points));

  Plane pl4 = build_pg2q(4);
  auto baer = solver::min_blocking(pl4, true);
  REQUIRE(baer.has_value());
  CHECK(baer->optimum == 7);
  CHECK(sets::is_blocking(pl4, baer->witness.points));
  auto spec = sets::secant_spectrum(pl4, baer->witness.points);
  CHECK(spec.count(1) == 14);
  CHECK(spec.count(3) == 7);
  CHECK(sets::is_baer_pointset(pl4, baer->witness.points));

  Plane pl2 = build_pg2q(2);
  CHECK_FALSE(solver::min_blocking(pl2, true).has_value());
}

TEST_CASE("extend_to_blocking") {
  Plane pl9 = build_pg2q(9);
  auto baer = constructions::baer_subplane(pl9);
  std::vector<PointId> punctured(baer.begin() + 1, baer.end());
  auto ext = solver::extend_to_blocking(pl9, punctured, 1);
  REQUIRE(ext.has_value());
  CHECK(ext->size() == 1);
  {
    auto S = punctured;
    S.push_back((*ext)[0]);
    CHECK(sets::is_blocking(pl9, S));
  }

  // a full line minus 2 points has only q-1 points, below the q+1 floor for
  // blocking sets, so one extra point can never suffice; two can
  Plane pl5 = build_pg2q(5);
  auto line = pl5.points_on(0);
  std::vector<PointId> most(line.begin() + 2, line.end());
  CHECK_FALSE(solver::extend_to_blocking(pl5, most, 1).has_value());
  auto ext2 = solver::extend_to_blocking(pl5, most, 2);
  REQUIRE(ext2.has_value());
  CHECK(ext2->size() == 2);
  {
    auto S = most;
    S.insert(S.end(), ext2->begin(), ext2->end());
    CHECK(sets::is_blocking(pl5, S));
  }

  // already blocking: empty extension
  CHECK(solver::extend_to_blocking(pl5, line, 2)->empty());

  // pg_3q_minus_2 point part is not blocking; t=0 finds nothing
  auto D = constructions::pg_3q_minus_2(pl5, 2);
  CHECK_FALSE(solver::extend_to_blocking(pl5, D.points, 0).has_value());

  try {
    solver::extend_to_blocking(pl5, line, 5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "BadParameter");
  }
}

TEST_CASE("duality of the domination number") {
  for (int q : {2, 3, 4}) {
    Plane pl = build_pg2q(q);
    CHECK(solver::min_dominating(pl.dual()).optimum == solver::min_dominating(pl).optimum);
  }
}

TEST_CASE("invalid planes are refused") {
  Plane pl = build_pg2q(2);
  std::vector<BitRow> rows;
  for (LineId l = 0; l < 7; ++l) rows.push_back(pl.line_row(l));
  rows[6] = rows[0];  // duplicate line
  Plane bad = Plane::from_incidence(2, rows, Plane::Tag::loaded, "bad");
  try {
    solver::min_dominating(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "InvalidPlane");
  }
}
