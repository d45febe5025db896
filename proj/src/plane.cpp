#include "planedom/plane.hpp"

#include <algorithm>
#include <array>
#include <set>

#include <nlohmann/json.hpp>

#include "planedom/errors.hpp"

namespace planedom {

namespace {

using Triple = std::array<gf::Element, 3>;

// All normalized homogeneous triples over GF(q): leftmost nonzero
// coordinate equal to 1, in lexicographic order. Their positions in this
// list are the point (and, dually, line) ids.
std::vector<Triple> normalized_triples(const gf::FieldSpec& f) {
  int q = f.q();
  std::vector<Triple> out;
  out.reserve(q * q + q + 1);
  out.push_back({0, 0, 1});
  for (gf::Element a = 0; a < q; ++a) out.push_back({0, 1, a});
  for (gf::Element a = 0; a < q; ++a)
    for (gf::Element b = 0; b < q; ++b) out.push_back({1, a, b});
  std::sort(out.begin(), out.end());
  return out;
}

gf::Element dot(const gf::FieldSpec& f, const Triple& a, const Triple& b) {
  gf::Element s = 0;
  for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

}  // namespace

Plane Plane::from_incidence(int q, std::vector<BitRow> line_points, Tag tag,
                            std::string source) {
  Plane pl;
  pl.q_ = q;
  pl.n_ = q * q + q + 1;
  pl.tag_ = tag;
  pl.source_ = std::move(source);
  pl.line_points_ = std::move(line_points);
  pl.point_lines_.assign(pl.n_, BitRow(pl.n_));
  for (LineId l = 0; l < int(pl.line_points_.size()); ++l)
    for (int p = pl.line_points_[l].first(); p >= 0; p = pl.line_points_[l].next(p))
      pl.point_lines_[p].set(l);
  return pl;
}

LineId Plane::line_through(PointId p, PointId q) const {
  if (p == q) fail("SamePoint", "line_through requires two distinct points");
  BitRow common = point_lines_[p] & point_lines_[q];
  return common.first();
}

PointId Plane::meet(LineId l, LineId m) const {
  if (l == m) fail("SameLine", "meet requires two distinct lines");
  BitRow common = line_points_[l] & line_points_[m];
  return common.first();
}

Plane Plane::dual() const {
  Plane d;
  d.q_ = q_;
  d.n_ = n_;
  d.tag_ = tag_;
  d.source_ = source_.empty() ? "dual" : "dual(" + source_ + ")";
  d.line_points_ = point_lines_;
  d.point_lines_ = line_points_;
  return d;
}

Plane build_pg2q(const gf::FieldSpec& f) {
  int q = f.q();
  int n = q * q + q + 1;
  std::vector<Triple> coords = normalized_triples(f);
  std::vector<BitRow> line_points(n, BitRow(n));
  for (LineId l = 0; l < n; ++l)
    for (PointId p = 0; p < n; ++p)
      if (dot(f, coords[l], coords[p]) == 0) line_points[l].set(p);
  return Plane::from_incidence(q, std::move(line_points), Plane::Tag::desarguesian,
                               "PG(2," + std::to_string(q) + ")");
}

gf::FieldSpec field_for_order(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!gf::is_prime(p) || q % p != 0) continue;
    int h = 0;
    long long t = q;
    while (t % p == 0) {
      t /= p;
      ++h;
    }
    if (t != 1) break;
    return gf::field_new(p, h);
  }
  fail("Unsupported", "q = " + std::to_string(q) + " is not a prime power");
}

Plane build_pg2q(int q) { return build_pg2q(field_for_order(q)); }

std::vector<std::array<gf::Element, 3>> pg_coordinates(const gf::FieldSpec& f) {
  return normalized_triples(f);
}

ValidationReport validate_axioms(const Plane& pl) {
  ValidationReport rep;
  int q = pl.q(), n = pl.n();

  auto violate = [&rep](const std::string& axiom, int a, int b, const std::string& detail) {
    rep.violations.push_back({axiom, a, b, detail});
  };

  for (LineId l = 0; l < n; ++l) {
    int c = pl.line_row(l).count();
    if (c != q + 1)
      violate("line_size", l, -1, "line has " + std::to_string(c) + " points, expected " +
                                      std::to_string(q + 1));
  }
  for (PointId p = 0; p < n; ++p) {
    int c = pl.point_row(p).count();
    if (c != q + 1)
      violate("point_degree", p, -1, "point lies on " + std::to_string(c) +
                                         " lines, expected " + std::to_string(q + 1));
  }
  for (PointId p = 0; p < n; ++p)
    for (PointId r = p + 1; r < n; ++r) {
      int c = pl.point_row(p).and_count(pl.point_row(r));
      if (c != 1)
        violate("unique_join", p, r,
                "points share " + std::to_string(c) + " lines, expected 1");
    }
  for (LineId l = 0; l < n; ++l)
    for (LineId m = l + 1; m < n; ++m) {
      int c = pl.line_row(l).and_count(pl.line_row(m));
      if (c != 1)
        violate("unique_meet", l, m,
                "lines share " + std::to_string(c) + " points, expected 1");
    }
  return rep;
}

Plane load_plane(const std::string& text, const std::string& source_name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("points") || !j.contains("lines"))
    fail("ParseError", "plane document must have order, points and lines");
  int q = j["order"].get<int>();
  if (q < 2) fail("ParseError", "order must be at least 2");
  int n = q * q + q + 1;
  if (j["points"].get<int>() != n)
    fail("DimensionMismatch", "declared point count != q^2+q+1");
  if (!j["lines"].is_array() || int(j["lines"].size()) != n)
    fail("DimensionMismatch", "expected " + std::to_string(n) + " lines, got " +
                                  std::to_string(j["lines"].size()));
  std::vector<BitRow> rows(n, BitRow(n));
  for (int l = 0; l < n; ++l) {
    const auto& arr = j["lines"][l];
    if (!arr.is_array() || int(arr.size()) != q + 1)
      fail("DimensionMismatch", "line " + std::to_string(l) + " has " +
                                    std::to_string(arr.size()) + " points, expected " +
                                    std::to_string(q + 1));
    for (const auto& v : arr) {
      int p = v.get<int>();
      if (p < 0 || p >= n) fail("ParseError", "point id out of range on line " + std::to_string(l));
      if (rows[l].test(p)) fail("ParseError", "duplicate point id on line " + std::to_string(l));
      rows[l].set(p);
    }
  }
  return Plane::from_incidence(q, std::move(rows), Plane::Tag::loaded, source_name);
}

std::string plane_to_json(const Plane& pl) {
  nlohmann::ordered_json j;
  j["order"] = pl.q();
  j["points"] = pl.n();
  auto lines = nlohmann::ordered_json::array();
  for (LineId l = 0; l < pl.n(); ++l) lines.push_back(pl.points_on(l));
  j["lines"] = std::move(lines);
  return j.dump();
}

}  // namespace planedom
