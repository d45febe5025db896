#pragma once

#include "planedom/plane.hpp"
#include "planedom/sets.hpp"

namespace planedom::constructions {

using sets::Candidate;

/// (i): q collinear points [l] \ {P} plus q concurrent lines [P] \ {l},
/// P on l. Size 2q; dominating, minimal, stable, primal.
/// Errors: NotIncident.
Candidate family_i(const Plane& plane, LineId l, PointId P);

/// (ii): full line plus full pencil of an off-line point. Size 2q+2.
/// Errors: Incident.
Candidate family_ii(const Plane& plane, LineId l, PointId P);

/// (iii): Baer subplane minus a point P of it, plus the full pencil [P].
/// Size 2q+sqrt(q)+1. Errors: NotSquareOrder, NotBaer.
Candidate family_iii(const Plane& plane, const std::vector<PointId>& baer, PointId P);

/// (B \ {P}) + [P] for a blocking set B; size |B|+q or |B|+q+1 depending
/// on P in B. Errors: NotBlocking.
Candidate blocking_plus_pencil(const Plane& plane, const std::vector<PointId>& B, PointId P);

/// Subfield Baer subplane of a Desarguesian plane of square order:
/// the points whose normalized coordinates lie in GF(sqrt(q)).
/// Errors: NotSquareOrder.
std::vector<PointId> baer_subplane(const Plane& plane);

/// The q+sqrt(q)+1 long secants of a Baer subplane; a covering set.
std::vector<LineId> dual_baer(const Plane& plane, const std::vector<PointId>& baer);

/// Baer subplane points plus the dual Baer lines of the same subplane.
/// Size 2q+2sqrt(q)+2; dominating, non-primal.
Candidate baer_union(const Plane& plane);

/// Conic y^2 = xz (plus its nucleus for even q) together with all lines
/// skew to it. Size q+1+q(q-1)/2 (odd q) or q+2+q(q-1)/2 (even q).
Candidate oval_plus_skew(const Plane& plane);

/// ([l] \ {P,Q}) + (([P] ∪ [Q]) \ {l}), P != Q on l. Size 3q-1,
/// dominating but not stable. Errors: NotIncident.
Candidate nonstable_3q_minus_1(const Plane& plane, LineId l, PointId P, PointId Q);

/// The size-3q-2 dominating set whose point part is not blocking and
/// whose line part is not covering, with parameter 1 <= t <= q-1.
/// Errors: BadParameter.
Candidate pg_3q_minus_2(const Plane& plane, int t);

/// Conic points of y^2 = xz in normalized coordinates.
std::vector<PointId> conic(const Plane& plane);

}  // namespace planedom::constructions
