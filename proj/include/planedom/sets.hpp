#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planedom/plane.hpp"

namespace planedom::sets {

/// A candidate dominating set: a point set and a line set on one plane.
struct Candidate {
  std::vector<PointId> points;
  std::vector<LineId> lines;

  int size() const { return int(points.size() + lines.size()); }
};

BitRow to_bitrow(const std::vector<int>& ids, int n);

/// Histogram of |line ∩ S| over all lines (dually, of |[P] ∩ L| over all
/// points). Satisfies both standard equations, asserted at construction.
struct SecantSpectrum {
  std::map<int, int> histogram;  // intersection size -> number of lines
  int k_max = 0;                 // largest secant size
  int skew_count = 0;            // lines with empty intersection

  int count(int m) const {
    auto it = histogram.find(m);
    return it == histogram.end() ? 0 : it->second;
  }
};

bool is_blocking(const Plane& plane, const std::vector<PointId>& S);
bool is_covering(const Plane& plane, const std::vector<LineId>& L);

bool is_dominating(const Plane& plane, const Candidate& D);

/// True iff no single-vertex removal leaves D dominating.
/// Errors: NotDominating if D is not dominating.
bool is_minimal(const Plane& plane, const Candidate& D);

/// Minimal, and no one-vertex augmentation contains a strictly smaller
/// dominating set. Implemented by the pair-removal criterion: dominating
/// sets are upward closed, so a smaller dominating subset of D ∪ {v}
/// exists iff some 2-element removal of D ∪ {v} still dominates.
/// Errors: NotDominating.
bool is_stable(const Plane& plane, const Candidate& D);

/// Contains q concurrent lines or q collinear points.
bool is_primal(const Plane& plane, const Candidate& D);

SecantSpectrum secant_spectrum(const Plane& plane, const std::vector<PointId>& S);
SecantSpectrum concurrency_spectrum(const Plane& plane, const std::vector<LineId>& L);

/// k(P_D): maximum number of collinear points of S.
int max_secant(const Plane& plane, const std::vector<PointId>& S);
/// c(D_L): maximum number of concurrent lines of L.
int max_concurrency(const Plane& plane, const std::vector<LineId>& L);

/// w(S) = sum over non-skew lines of (m_i - 1)(m_i - k). Nonpositive
/// whenever every m_i <= k.
long long weight(const Plane& plane, const std::vector<PointId>& S, int k);

struct LineWeights {
  std::vector<long long> w;      // per line; 0 for skew lines
  std::vector<LineId> heavy;     // lines with w < 0
  long long total = 0;           // w(S)

  /// w_l(P): sum of w over the lines through P other than l.
  long long wl(const Plane& plane, LineId l, PointId P) const;
};

/// Per-line weights; the identity w(S) = w(l) + sum_{P in l} w_l(P) holds
/// for every line and is asserted internally.
LineWeights line_weights(const Plane& plane, const std::vector<PointId>& S, int k);

/// kq+1: the most lines k_pts points can block; equality iff collinear.
long long bound_blocked_lines(int k_pts, int q);

/// Number of lines blocked by S (lines meeting S).
int blocked_lines(const Plane& plane, const std::vector<PointId>& S);
/// Number of points covered by L.
int covered_points(const Plane& plane, const std::vector<LineId>& L);

/// c^2 - (nlines+1)c + nlines(q+1) + 1: the most points nlines lines with
/// maximum concurrency c can cover.
long long bound_cover(int c, int nlines, int q);

struct MinqqBound {
  long long size_bound;   // max of the two dual bounds on |D|
  long long gamma_bound;  // analytic lower bound on the domination number: 2q
};

/// |D| >= q^2+q-(q-1)|P_D| and its dual; combined they give |D| >= 2q.
/// Errors: NotDominating.
MinqqBound bound_minqq(const Plane& plane, const Candidate& D);

/// Right-hand side of w(S) >= |S|^2 - (kq+1)|S| + k(q^2+q+1-|D|).
long long bound_lbweird(long long sizeP, long long k, long long sizeD, long long q);

enum class ImplicationStatus { satisfied, vacuous, violated };

struct Implication {
  std::string name;
  ImplicationStatus status;
};

struct NagyszeloReport {
  std::vector<Implication> implications;
  bool any_violated() const;
};

/// Evaluates the hypotheses and conclusions of the k/c bounds
/// (k <= |P_D|-q+1 under non-primality and |D|+|P_D| <= 4q-3, its dual,
/// and |L_D| >= 4q-2-|D| under the concurrency window) on the concrete
/// candidate. A violated implication indicates a bug.
/// Errors: NotDominating.
NagyszeloReport check_nagyszelo(const Plane& plane, const Candidate& D);

/// True iff every line meets P_D in 0, 1, k-1 or k points (k = k_max).
bool check_egyfajta(const Plane& plane, const Candidate& D);

/// Number of tangent lines to B through P. Errors: NotEssential if
/// B \ {P} is still blocking (or P not in B / B not blocking).
int tangent_count(const Plane& plane, const std::vector<PointId>& B, PointId P);

/// Size q+sqrt(q)+1 with secant spectrum support {1, sqrt(q)+1}.
bool is_baer_pointset(const Plane& plane, const std::vector<PointId>& S);
bool is_dual_baer_lineset(const Plane& plane, const std::vector<LineId>& L);

/// Structural classification of a minimal dominating set against the
/// extremal cases. Exact set comparisons only; anything that matches no
/// pattern is "unclassified". Errors: NotMinimal.
std::string classify(const Plane& plane, const Candidate& D);

struct AnalysisReport {
  bool dominating = false;
  bool blocking = false;    // of the point part
  bool covering = false;    // of the line part
  bool minimal = false;
  bool stable = false;
  bool primal = false;
  int k = 0;
  int c = 0;
  SecantSpectrum spectrum;
  long long weight = 0;     // w(P_D) with k = k_max
  long long bound_blocked = 0;
  long long bound_cover_value = 0;
  long long bound_minqq_size = 0;
  long long bound_minqq_gamma = 0;
  long long bound_lbweird_value = 0;
  std::string classification = "unclassified";
};

AnalysisReport analyze(const Plane& plane, const Candidate& D);

/// Candidate JSON: {"points":[...], "lines":[...]}. Duplicate ids rejected.
Candidate candidate_from_json(const std::string& text, const Plane& plane);
std::string candidate_to_json(const Candidate& D);
std::string report_to_json(const AnalysisReport& rep);

}  // namespace planedom::sets
