#pragma once

#include <array>
#include <string>
#include <vector>

#include "planedom/bitrow.hpp"
#include "planedom/gf.hpp"

namespace planedom {

using PointId = int;
using LineId = int;

/// Immutable incidence structure of a projective plane of order q:
/// q^2+q+1 points and lines, incidence stored both row-wise (points per
/// line) and column-wise (lines per point). Loaded planes are untrusted
/// until validate_axioms passes.
class Plane {
public:
  enum class Tag { desarguesian, loaded };

  int q() const { return q_; }
  int n() const { return n_; }  // q^2 + q + 1
  Tag tag() const { return tag_; }
  const std::string& source() const { return source_; }

  const BitRow& line_row(LineId l) const { return line_points_[l]; }
  const BitRow& point_row(PointId p) const { return point_lines_[p]; }
  bool incident(PointId p, LineId l) const { return line_points_[l].test(p); }

  std::vector<PointId> points_on(LineId l) const { return line_points_[l].to_indices(); }
  std::vector<LineId> lines_through(PointId p) const { return point_lines_[p].to_indices(); }

  /// The unique line through two distinct points. SamePoint on P == Q.
  LineId line_through(PointId p, PointId q) const;
  /// The unique common point of two distinct lines. SameLine on l == m.
  PointId meet(LineId l, LineId m) const;
  /// The q+1 lines incident with P.
  std::vector<LineId> pencil(PointId p) const { return lines_through(p); }

  /// Swaps point and line roles. dual(dual(plane)) has identical incidence.
  Plane dual() const;

  static Plane from_incidence(int q, std::vector<BitRow> line_points, Tag tag,
                              std::string source);

private:
  int q_ = 0, n_ = 0;
  Tag tag_ = Tag::loaded;
  std::string source_;
  std::vector<BitRow> line_points_;   // per line, bits over point ids
  std::vector<BitRow> point_lines_;   // per point, bits over line ids
};

struct AxiomViolation {
  std::string axiom;  // which axiom failed
  int a = -1, b = -1; // witness pair (ids; meaning depends on axiom)
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Builds PG(2,q) over the given field: points are normalized homogeneous
/// triples (leftmost nonzero coordinate 1), ids in lexicographic order;
/// lines dually; incidence is a zero dot product.
Plane build_pg2q(const gf::FieldSpec& field);

Plane build_pg2q(int q);  // convenience; factors q = p^h itself

/// The field GF(q) with the built-in modulus. Errors: Unsupported if q is
/// not a prime power within the cap.
gf::FieldSpec field_for_order(int q);

/// The normalized homogeneous triples of PG(2,q) in id order. The same
/// list coordinatizes points and lines.
std::vector<std::array<gf::Element, 3>> pg_coordinates(const gf::FieldSpec& field);

/// Checks every projective-plane axiom and lists each violation with a
/// witness. Empty report iff the structure is a projective plane of its
/// declared order. Violations are data, not errors.
ValidationReport validate_axioms(const Plane& plane);

/// Parses the JSON plane format {"order": q, "points": n, "lines": [[...]]}.
/// Errors: ParseError on malformed input; DimensionMismatch on wrong counts.
/// The result is tagged loaded and should be validated before analysis.
Plane load_plane(const std::string& text, const std::string& source_name = "input");

/// Serializes a plane to the JSON format (lines sorted, stable output).
std::string plane_to_json(const Plane& plane);

}  // namespace planedom
