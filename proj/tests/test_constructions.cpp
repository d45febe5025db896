#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "planedom/constructions.hpp"
#include "planedom/errors.hpp"
#include "planedom/plane.hpp"
#include "planedom/sets.hpp"

using namespace planedom;
using namespace planedom::constructions;
using sets::Candidate;

namespace {

const std::vector<int> kOrders = {2, 3, 4, 5, 7, 8, 9};
const std::vector<int> kSquares = {4, 9};

int isqrt(int q) {
  int r = 1;
  while (r * r < q) ++r;
  return r;
}

PointId off_line_point(const Plane& pl, LineId l) {
  PointId p = 0;
  while (pl.incident(p, l)) ++p;
  return p;
}

}  // namespace

TEST_CASE("family_i: size 2q, dominating, minimal, stable, primal") {
  for (int q : kOrders) {
    Plane pl = build_pg2q(q);
    Candidate D = family_i(pl, 0, pl.points_on(0).front());
    CHECK(D.size() == 2 * q);
    CHECK(sets::is_dominating(pl, D));
    CHECK(sets::is_minimal(pl, D));
    CHECK(sets::is_stable(pl, D));
    CHECK(sets::is_primal(pl, D));
  }
  Plane pl = build_pg2q(3);
  try {
    family_i(pl, 0, off_line_point(pl, 0));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "NotIncident");
  }
}

TEST_CASE("family_ii: size 2q+2, dominating, minimal, primal") {
  for (int q : kOrders) {
    Plane pl = build_pg2q(q);
    Candidate D = family_ii(pl, 0, off_line_point(pl, 0));
    CHECK(D.size() == 2 * q + 2);
    CHECK(sets::is_dominating(pl, D));
    CHECK(sets::is_minimal(pl, D));
    CHECK(sets::is_primal(pl, D));
  }
  Plane pl = build_pg2q(3);
  try {
    family_ii(pl, 0, pl.points_on(0).front());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "Incident");
  }
}

TEST_CASE("family_iii: size 2q+sqrt(q)+1, dominating, minimal, stable") {
  for (int q : kSquares) {
    Plane pl = build_pg2q(q);
    auto baer = baer_subplane(pl);
    Candidate D = family_iii(pl, baer, baer.front());
    CHECK(D.size() == 2 * q + isqrt(q) + 1);
    CHECK(sets::is_dominating(pl, D));
    CHECK(sets::is_minimal(pl, D));
    CHECK(sets::is_stable(pl, D));
  }
  Plane pl5 = build_pg2q(5);
  try {
    baer_subplane(pl5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "NotSquareOrder");
  }
  Plane pl9 = build_pg2q(9);
  try {
    family_iii(pl9, {0, 1, 2}, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "NotBaer");
  }
}

TEST_CASE("blocking_plus_pencil sizes") {
  Plane pl = build_pg2q(9);
  auto baer = baer_subplane(pl);
  Candidate in = blocking_plus_pencil(pl, baer, baer.front());
  CHECK(in.size() == 22);  // |B| + q
  CHECK(sets::is_dominating(pl, in));
  PointId outside = 0;
  while (std::find(baer.begin(), baer.end(), outside) != baer.end()) ++outside;
  Candidate out = blocking_plus_pencil(pl, baer, outside);
  CHECK(out.size() == 23);  // |B| + q + 1
  CHECK(sets::is_dominating(pl, out));
  // B = line, P on it: the line of the pencil equal to B's carrier is not essential
  Candidate red = blocking_plus_pencil(pl, pl.points_on(0), pl.points_on(0).front());
  CHECK(red.size() == 2 * 9 + 1);
  CHECK(sets::is_dominating(pl, red));
  CHECK_FALSE(sets::is_minimal(pl, red));
  try {
    blocking_plus_pencil(pl, {0, 1}, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "NotBlocking");
  }
}

TEST_CASE("baer_subplane and dual_baer") {
  Plane pl4 = build_pg2q(4);
  auto b4 = baer_subplane(pl4);
  CHECK(b4.size() == 7);  // Fano inside PG(2,4)
  CHECK(sets::is_baer_pointset(pl4, b4));
  Plane pl9 = build_pg2q(9);
  auto b9 = baer_subplane(pl9);
  CHECK(b9.size() == 13);
  auto db9 = dual_baer(pl9, b9);
  CHECK(db9.size() == 13);
  CHECK(sets::is_covering(pl9, db9));
}

TEST_CASE("baer_union: size 2q+2sqrt(q)+2, dominating, non-primal") {
  for (int q : kSquares) {
    Plane pl = build_pg2q(q);
    Candidate D = baer_union(pl);
    CHECK(D.size() == 2 * q + 2 * isqrt(q) + 2);
    CHECK(int(D.points.size()) == q + isqrt(q) + 1);
    CHECK(int(D.lines.size()) == q + isqrt(q) + 1);
    CHECK(sets::is_dominating(pl, D));
    CHECK_FALSE(sets::is_primal(pl, D));
  }
}

TEST_CASE("oval_plus_skew sizes") {
  for (int q : kOrders) {
    Plane pl = build_pg2q(q);
    Candidate D = oval_plus_skew(pl);
    int expected = (q % 2 == 1) ? q + 1 + q * (q - 1) / 2 : q + 2 + q * (q - 1) / 2;
    CHECK(D.size() == expected);
    CHECK(sets::is_dominating(pl, D));
    // at q=2 any 2-secant already makes a set primal
    if (q >= 3) CHECK_FALSE(sets::is_primal(pl, D));
  }
  // spot values: q=3 -> 4+3, q=5 -> 6+10, q=4 -> 12 < 14
  CHECK(oval_plus_skew(build_pg2q(3)).size() == 7);
  CHECK(oval_plus_skew(build_pg2q(5)).size() == 16);
  CHECK(oval_plus_skew(build_pg2q(4)).size() == 12);
}

TEST_CASE("oval point parts are arcs") {
  for (int q : kOrders) {
    Plane pl = build_pg2q(q);
    Candidate D = oval_plus_skew(pl);
    CHECK(sets::max_secant(pl, D.points) == 2);  // no 3 collinear
    CHECK(int(D.points.size()) == (q % 2 == 1 ? q + 1 : q + 2));
  }
}

TEST_CASE("nonstable_3q_minus_1") {
  for (int q : kOrders) {
    Plane pl = build_pg2q(q);
    auto pts = pl.points_on(0);
    Candidate D = nonstable_3q_minus_1(pl, 0, pts[0], pts[1]);
    CHECK(D.size() == 3 * q - 1);
    CHECK(sets::is_dominating(pl, D));
    if (q >= 3) CHECK_FALSE(sets::is_stable(pl, D));
  }
  Plane pl = build_pg2q(3);
  auto pts = pl.points_on(0);
  try {
    nonstable_3q_minus_1(pl, 0, pts[0], pts[0]);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "SamePoint");
  }
}

TEST_CASE("pg_3q_minus_2") {
  for (int q : {3, 4, 5, 7, 8, 9}) {
    Plane pl = build_pg2q(q);
    for (int t = 1; t <= q - 1; ++t) {
      Candidate D = pg_3q_minus_2(pl, t);
      CHECK(D.size() == 3 * q - 2);
      CHECK(sets::is_dominating(pl, D));
      CHECK_FALSE(sets::is_blocking(pl, D.points));
      CHECK_FALSE(sets::is_covering(pl, D.lines));
      if (t >= 2 && t <= q - 2) CHECK_FALSE(sets::is_primal(pl, D));
    }
  }
  Plane pl5 = build_pg2q(5);
  CHECK(pg_3q_minus_2(pl5, 2).size() == 13);
  CHECK(pg_3q_minus_2(build_pg2q(7), 3).size() == 19);
  try {
    pg_3q_minus_2(pl5, 5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "BadParameter");
  }
}
