#include "planedom/constructions.hpp"

#include <algorithm>

#include "planedom/errors.hpp"

namespace planedom::constructions {

namespace {

void require_desarguesian(const Plane& pl) {
  if (pl.tag() != Plane::Tag::desarguesian)
    fail("NotSquareOrder", "construction requires a Desarguesian plane built by build_pg2q");
}

int baer_root(int q) {
  int r = 1;
  while (r * r < q) ++r;
  if (r * r != q) fail("NotSquareOrder", "q = " + std::to_string(q) + " is not a square");
  return r;
}

std::vector<PointId> sorted(std::vector<PointId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Candidate family_i(const Plane& pl, LineId l, PointId P) {
  if (!pl.incident(P, l)) fail("NotIncident", "family_i requires P on l");
  Candidate D;
  for (PointId x : pl.points_on(l))
    if (x != P) D.points.push_back(x);
  for (LineId m : pl.lines_through(P))
    if (m != l) D.lines.push_back(m);
  return D;
}

Candidate family_ii(const Plane& pl, LineId l, PointId P) {
  if (pl.incident(P, l)) fail("Incident", "family_ii requires P off l");
  Candidate D;
  D.points = pl.points_on(l);
  D.lines = pl.lines_through(P);
  return D;
}

Candidate family_iii(const Plane& pl, const std::vector<PointId>& baer, PointId P) {
  baer_root(pl.q());
  if (!sets::is_baer_pointset(pl, baer)) fail("NotBaer", "point set is not a Baer subplane");
  if (std::find(baer.begin(), baer.end(), P) == baer.end())
    fail("NotIncident", "P must belong to the Baer subplane");
  Candidate D;
  for (PointId x : baer)
    if (x != P) D.points.push_back(x);
  D.points = sorted(D.points);
  D.lines = pl.lines_through(P);
  return D;
}

Candidate blocking_plus_pencil(const Plane& pl, const std::vector<PointId>& B, PointId P) {
  if (!sets::is_blocking(pl, B)) fail("NotBlocking", "B is not a blocking set");
  Candidate D;
  for (PointId x : B)
    if (x != P) D.points.push_back(x);
  D.points = sorted(D.points);
  D.lines = pl.lines_through(P);
  return D;
}

std::vector<PointId> baer_subplane(const Plane& pl) {
  require_desarguesian(pl);
  int q = pl.q();
  int r = baer_root(q);
  gf::FieldSpec f = field_for_order(q);
  auto coords = pg_coordinates(f);

  // The subfield GF(r) inside GF(q) is the fixed set of x -> x^r.
  std::vector<bool> in_subfield(q, false);
  for (gf::Element a = 0; a < q; ++a)
    if (f.pow(a, r) == a) in_subfield[a] = true;

  std::vector<PointId> out;
  for (PointId p = 0; p < pl.n(); ++p) {
    const auto& c = coords[p];
    if (in_subfield[c[0]] && in_subfield[c[1]] && in_subfield[c[2]]) out.push_back(p);
  }
  return out;
}

std::vector<LineId> dual_baer(const Plane& pl, const std::vector<PointId>& baer) {
  int r = baer_root(pl.q());
  BitRow b = sets::to_bitrow(baer, pl.n());
  std::vector<LineId> out;
  for (LineId l = 0; l < pl.n(); ++l)
    if (pl.line_row(l).and_count(b) == r + 1) out.push_back(l);
  return out;
}

Candidate baer_union(const Plane& pl) {
  Candidate D;
  D.points = baer_subplane(pl);
  D.lines = dual_baer(pl, D.points);
  return D;
}

std::vector<PointId> conic(const Plane& pl) {
  require_desarguesian(pl);
  gf::FieldSpec f = field_for_order(pl.q());
  auto coords = pg_coordinates(f);
  std::vector<PointId> out;
  for (PointId p = 0; p < pl.n(); ++p) {
    const auto& c = coords[p];
    if (f.mul(c[1], c[1]) == f.mul(c[0], c[2])) out.push_back(p);
  }
  return out;
}

Candidate oval_plus_skew(const Plane& pl) {
  require_desarguesian(pl);
  Candidate D;
  D.points = conic(pl);
  if (pl.q() % 2 == 0) {
    // Even order: all tangents of the conic are concurrent in the nucleus.
    BitRow c = sets::to_bitrow(D.points, pl.n());
    std::vector<LineId> tangents;
    for (LineId l = 0; l < pl.n(); ++l)
      if (pl.line_row(l).and_count(c) == 1) tangents.push_back(l);
    PointId nucleus = pl.meet(tangents[0], tangents[1]);
    D.points.push_back(nucleus);
    D.points = sorted(D.points);
  }
  BitRow pts = sets::to_bitrow(D.points, pl.n());
  for (LineId l = 0; l < pl.n(); ++l)
    if (!pl.line_row(l).intersects(pts)) D.lines.push_back(l);
  return D;
}

Candidate nonstable_3q_minus_1(const Plane& pl, LineId l, PointId P, PointId Q) {
  if (P == Q) fail("SamePoint", "P and Q must differ");
  if (!pl.incident(P, l) || !pl.incident(Q, l))
    fail("NotIncident", "P and Q must both lie on l");
  Candidate D;
  for (PointId x : pl.points_on(l))
    if (x != P && x != Q) D.points.push_back(x);
  BitRow lns(pl.n());
  for (LineId m : pl.lines_through(P)) lns.set(m);
  for (LineId m : pl.lines_through(Q)) lns.set(m);
  lns.reset(l);
  D.lines = lns.to_indices();
  return D;
}

Candidate pg_3q_minus_2(const Plane& pl, int t) {
  int q = pl.q();
  if (t < 1 || t > q - 1) fail("BadParameter", "t must satisfy 1 <= t <= q-1");

  // l0 = {P0,...,Pq}, [P0] = {l0,...,lq}, l1 = {P0,Q1,...,Qq}.
  LineId l0 = 0;
  std::vector<PointId> pts0 = pl.points_on(l0);
  PointId P0 = pts0[0];
  std::vector<LineId> pen0 = pl.lines_through(P0);
  std::vector<LineId> pencil_rest;  // l1..lq in id order
  for (LineId m : pen0)
    if (m != l0) pencil_rest.push_back(m);
  LineId l1 = pencil_rest[0];
  std::vector<PointId> Qs;  // Q1..Qq
  for (PointId x : pl.points_on(l1))
    if (x != P0) Qs.push_back(x);

  Candidate D;
  // P_D = {P2,...,Pq} + {Q1,...,Qt}; P1 is left out and anchors the
  // extra lines below (a line through P1 and an uncovered Q_j would
  // otherwise be dominated by nothing).
  PointId P1 = -1;
  for (PointId x : pts0) {
    if (x == P0) continue;
    if (P1 < 0) {
      P1 = x;
      continue;
    }
    D.points.push_back(x);
  }
  for (int i = 0; i < t; ++i) D.points.push_back(Qs[i]);
  // D_L = {l2,...,lq} + {P1Q_{t+1},...,P1Q_q}
  BitRow lns(pl.n());
  for (size_t i = 1; i < pencil_rest.size(); ++i) lns.set(pencil_rest[i]);
  for (int i = t; i < q; ++i) lns.set(pl.line_through(P1, Qs[i]));
  D.lines = lns.to_indices();
  D.points = sorted(D.points);
  return D;
}

}  // namespace planedom::constructions
