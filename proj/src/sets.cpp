#include "planedom/sets.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include <nlohmann/json.hpp>

#include "planedom/errors.hpp"

namespace planedom::sets {

namespace {

int isqrt_floor(int q) {
  int s = int(std::sqrt(double(q)));
  while (s * s > q) --s;
  while ((s + 1) * (s + 1) <= q) ++s;
  return s;
}

bool is_square(int q) {
  int s = isqrt_floor(q);
  return s * s == q;
}

// Vertex ids of the incidence graph: points are 0..n-1, lines n..2n-1.
int point_vertex(int p) { return p; }
int line_vertex(const Plane& pl, int l) { return pl.n() + l; }

// Closed neighborhoods of all 2n vertices, as bit rows over vertex ids.
std::vector<BitRow> closed_neighborhoods(const Plane& pl) {
  int n = pl.n();
  std::vector<BitRow> nb(2 * n, BitRow(2 * n));
  for (PointId p = 0; p < n; ++p) {
    nb[p].set(p);
    for (LineId l : pl.lines_through(p)) nb[p].set(n + l);
  }
  for (LineId l = 0; l < n; ++l) {
    nb[n + l].set(n + l);
    for (PointId p : pl.points_on(l)) nb[n + l].set(p);
  }
  return nb;
}

std::vector<int> candidate_vertices(const Plane& pl, const Candidate& D) {
  std::vector<int> vs;
  vs.reserve(D.size());
  for (PointId p : D.points) vs.push_back(point_vertex(p));
  for (LineId l : D.lines) vs.push_back(line_vertex(pl, l));
  return vs;
}

// Number of chosen dominators per vertex of the incidence graph.
std::vector<int> coverage_counts(const Plane& pl, const Candidate& D) {
  int n = pl.n();
  std::vector<int> cov(2 * n, 0);
  for (PointId p : D.points) {
    ++cov[p];
    for (LineId l : pl.lines_through(p)) ++cov[n + l];
  }
  for (LineId l : D.lines) {
    ++cov[n + l];
    for (PointId p : pl.points_on(l)) ++cov[p];
  }
  return cov;
}

SecantSpectrum spectrum_from_counts(const std::vector<int>& sizes, int total_lines,
                                    int set_size, int q) {
  SecantSpectrum sp;
  for (int m : sizes) ++sp.histogram[m];
  sp.k_max = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  sp.skew_count = sp.count(0);

  // Standard equations, exact.
  long long sum_m = 0, sum_mm = 0, total = 0;
  for (const auto& [m, cnt] : sp.histogram) {
    total += cnt;
    sum_m += (long long)m * cnt;
    sum_mm += (long long)m * (m - 1) * cnt;
  }
  assert(total == total_lines);
  assert(sum_m == (long long)set_size * (q + 1));
  assert(sum_mm == (long long)set_size * (set_size - 1));
  (void)total_lines;
  (void)q;
  return sp;
}

}  // namespace

BitRow to_bitrow(const std::vector<int>& ids, int n) {
  BitRow row(n);
  for (int i : ids) row.set(i);
  return row;
}

bool is_blocking(const Plane& pl, const std::vector<PointId>& S) {
  BitRow s = to_bitrow(S, pl.n());
  for (LineId l = 0; l < pl.n(); ++l)
    if (!pl.line_row(l).intersects(s)) return false;
  return true;
}

bool is_covering(const Plane& pl, const std::vector<LineId>& L) {
  BitRow s = to_bitrow(L, pl.n());
  for (PointId p = 0; p < pl.n(); ++p)
    if (!pl.point_row(p).intersects(s)) return false;
  return true;
}

bool is_dominating(const Plane& pl, const Candidate& D) {
  int n = pl.n();
  BitRow ps = to_bitrow(D.points, n), ls = to_bitrow(D.lines, n);
  for (LineId l = 0; l < n; ++l)
    if (!ls.test(l) && !pl.line_row(l).intersects(ps)) return false;
  for (PointId p = 0; p < n; ++p)
    if (!ps.test(p) && !pl.point_row(p).intersects(ls)) return false;
  return true;
}

bool is_minimal(const Plane& pl, const Candidate& D) {
  if (!is_dominating(pl, D)) fail("NotDominating", "candidate is not dominating");
  std::vector<int> cov = coverage_counts(pl, D);
  int n = pl.n();
  auto has_private = [&](int v) {
    // v must be the unique dominator of some vertex in N[v].
    if (v < n) {
      if (cov[v] == 1) return true;
      for (LineId l : pl.lines_through(v))
        if (cov[n + l] == 1) return true;
    } else {
      if (cov[v] == 1) return true;
      for (PointId p : pl.points_on(v - n))
        if (cov[p] == 1) return true;
    }
    return false;
  };
  for (int v : candidate_vertices(pl, D))
    if (!has_private(v)) return false;
  return true;
}

bool is_stable(const Plane& pl, const Candidate& D) {
  if (!is_minimal(pl, D)) return false;
  int n = pl.n();
  std::vector<BitRow> nb = closed_neighborhoods(pl);
  std::vector<int> base_cov = coverage_counts(pl, D);
  std::vector<int> members = candidate_vertices(pl, D);
  BitRow in_d(2 * n);
  for (int v : members) in_d.set(v);

  for (int v = 0; v < 2 * n; ++v) {
    if (in_d.test(v)) continue;
    // D' = D + v; look for a pair {x,y} whose removal keeps D' dominating.
    std::vector<int> cov = base_cov;
    for (int u = nb[v].first(); u >= 0; u = nb[v].next(u)) ++cov[u];
    BitRow cov1(2 * n), cov2(2 * n);
    for (int u = 0; u < 2 * n; ++u) {
      if (cov[u] == 1) cov1.set(u);
      else if (cov[u] == 2) cov2.set(u);
    }
    std::vector<int> dprime = members;
    dprime.push_back(v);
    std::vector<BitRow> crit2;
    std::vector<int> removable;
    for (int x : dprime) {
      if ((nb[x] & cov1).any()) continue;  // x is the sole dominator of something
      removable.push_back(x);
      crit2.push_back(nb[x] & cov2);
    }
    for (size_t i = 0; i < removable.size(); ++i)
      for (size_t j = i + 1; j < removable.size(); ++j)
        if (!crit2[i].intersects(crit2[j])) return false;
  }
  return true;
}

bool is_primal(const Plane& pl, const Candidate& D) {
  int q = pl.q();
  return max_secant(pl, D.points) >= q || max_concurrency(pl, D.lines) >= q;
}

SecantSpectrum secant_spectrum(const Plane& pl, const std::vector<PointId>& S) {
  BitRow s = to_bitrow(S, pl.n());
  std::vector<int> sizes(pl.n());
  for (LineId l = 0; l < pl.n(); ++l) sizes[l] = pl.line_row(l).and_count(s);
  return spectrum_from_counts(sizes, pl.n(), int(S.size()), pl.q());
}

SecantSpectrum concurrency_spectrum(const Plane& pl, const std::vector<LineId>& L) {
  BitRow s = to_bitrow(L, pl.n());
  std::vector<int> sizes(pl.n());
  for (PointId p = 0; p < pl.n(); ++p) sizes[p] = pl.point_row(p).and_count(s);
  return spectrum_from_counts(sizes, pl.n(), int(L.size()), pl.q());
}

int max_secant(const Plane& pl, const std::vector<PointId>& S) {
  if (S.empty()) return 0;
  BitRow s = to_bitrow(S, pl.n());
  int k = 0;
  for (LineId l = 0; l < pl.n(); ++l) k = std::max(k, pl.line_row(l).and_count(s));
  return k;
}

int max_concurrency(const Plane& pl, const std::vector<LineId>& L) {
  if (L.empty()) return 0;
  BitRow s = to_bitrow(L, pl.n());
  int c = 0;
  for (PointId p = 0; p < pl.n(); ++p) c = std::max(c, pl.point_row(p).and_count(s));
  return c;
}

long long weight(const Plane& pl, const std::vector<PointId>& S, int k) {
  if (k < 1) fail("BadParameter", "weight requires k >= 1");
  SecantSpectrum sp = secant_spectrum(pl, S);
  long long w = 0;
  for (const auto& [m, cnt] : sp.histogram)
    if (m > 0) w += (long long)(m - 1) * (m - k) * cnt;
  return w;
}

long long LineWeights::wl(const Plane& pl, LineId l, PointId P) const {
  long long s = 0;
  for (LineId m : pl.lines_through(P))
    if (m != l) s += w[m];
  return s;
}

LineWeights line_weights(const Plane& pl, const std::vector<PointId>& S, int k) {
  if (k < 1) fail("BadParameter", "line_weights requires k >= 1");
  BitRow s = to_bitrow(S, pl.n());
  LineWeights lw;
  lw.w.resize(pl.n());
  for (LineId l = 0; l < pl.n(); ++l) {
    int m = pl.line_row(l).and_count(s);
    lw.w[l] = (m == 0) ? 0 : (long long)(m - 1) * (m - k);
    lw.total += lw.w[l];
    if (lw.w[l] < 0) lw.heavy.push_back(l);
  }
  // Identity: w(S) = w(l) + sum_{P in l} w_l(P) for every line.
  for (LineId l = 0; l < pl.n(); ++l) {
    long long rhs = lw.w[l];
    for (PointId P : pl.points_on(l)) rhs += lw.wl(pl, l, P);
    assert(rhs == lw.total);
    (void)rhs;
  }
  return lw;
}

long long bound_blocked_lines(int k_pts, int q) {
  if (k_pts < 1) fail("BadParameter", "bound_blocked_lines requires k_pts >= 1");
  return (long long)k_pts * q + 1;
}

int blocked_lines(const Plane& pl, const std::vector<PointId>& S) {
  BitRow s = to_bitrow(S, pl.n());
  int c = 0;
  for (LineId l = 0; l < pl.n(); ++l)
    if (pl.line_row(l).intersects(s)) ++c;
  return c;
}

int covered_points(const Plane& pl, const std::vector<LineId>& L) {
  BitRow s = to_bitrow(L, pl.n());
  int c = 0;
  for (PointId p = 0; p < pl.n(); ++p)
    if (pl.point_row(p).intersects(s)) ++c;
  return c;
}

long long bound_cover(int c, int nlines, int q) {
  if (c < 1 || c > nlines) fail("BadParameter", "bound_cover requires 1 <= c <= nlines");
  return (long long)c * c - (long long)(nlines + 1) * c + (long long)nlines * (q + 1) + 1;
}

MinqqBound bound_minqq(const Plane& pl, const Candidate& D) {
  if (!is_dominating(pl, D)) fail("NotDominating", "candidate is not dominating");
  long long q = pl.q();
  long long bp = q * q + q - (q - 1) * (long long)D.points.size();
  long long bl = q * q + q - (q - 1) * (long long)D.lines.size();
  return {std::max(bp, bl), 2 * q};
}

long long bound_lbweird(long long sizeP, long long k, long long sizeD, long long q) {
  if (sizeP < 0 || k < 0 || sizeD < 0 || q < 0)
    fail("BadParameter", "bound_lbweird requires nonnegative arguments");
  return sizeP * sizeP - (k * q + 1) * sizeP + k * (q * q + q + 1 - sizeD);
}

bool NagyszeloReport::any_violated() const {
  return std::any_of(implications.begin(), implications.end(), [](const Implication& i) {
    return i.status == ImplicationStatus::violated;
  });
}

NagyszeloReport check_nagyszelo(const Plane& pl, const Candidate& D) {
  if (!is_dominating(pl, D)) fail("NotDominating", "candidate is not dominating");
  long long q = pl.q();
  long long sz = D.size(), sp = D.points.size(), sl = D.lines.size();
  int k = max_secant(pl, D.points);
  int c = max_concurrency(pl, D.lines);
  bool primal = is_primal(pl, D);

  NagyszeloReport rep;
  auto judge = [&rep](const std::string& name, bool hyp, bool concl) {
    rep.implications.push_back(
        {name, !hyp ? ImplicationStatus::vacuous
                    : concl ? ImplicationStatus::satisfied : ImplicationStatus::violated});
  };
  judge("k_le_sizeP-q+1", !primal && sz + sp <= 4 * q - 3, k <= sp - q + 1);
  judge("c_le_sizeL-q+1", !primal && sz + sl <= 4 * q - 3, c <= sl - q + 1);
  judge("sizeL_ge_4q-2-sizeD", sl + 2 - q <= c && c <= q - 1, sl >= 4 * q - 2 - sz);
  return rep;
}

bool check_egyfajta(const Plane& pl, const Candidate& D) {
  SecantSpectrum sp = secant_spectrum(pl, D.points);
  int k = sp.k_max;
  for (const auto& [m, cnt] : sp.histogram) {
    (void)cnt;
    if (m != 0 && m != 1 && m != k - 1 && m != k) return false;
  }
  return true;
}

int tangent_count(const Plane& pl, const std::vector<PointId>& B, PointId P) {
  if (!is_blocking(pl, B)) fail("NotBlocking", "B is not a blocking set");
  BitRow b = to_bitrow(B, pl.n());
  if (!b.test(P)) fail("NotEssential", "P is not a point of B");
  std::vector<PointId> rest;
  for (PointId x : B)
    if (x != P) rest.push_back(x);
  if (is_blocking(pl, rest)) fail("NotEssential", "P is not essential for B");
  int t = 0;
  for (LineId l : pl.lines_through(P))
    if (pl.line_row(l).and_count(b) == 1) ++t;
  return t;
}

bool is_baer_pointset(const Plane& pl, const std::vector<PointId>& S) {
  int q = pl.q();
  if (!is_square(q)) return false;
  int r = isqrt_floor(q);
  if (int(S.size()) != q + r + 1) return false;
  SecantSpectrum sp = secant_spectrum(pl, S);
  return sp.histogram.size() == 2 && sp.count(1) > 0 && sp.count(r + 1) > 0;
}

bool is_dual_baer_lineset(const Plane& pl, const std::vector<LineId>& L) {
  return is_baer_pointset(pl.dual(), L);
}

namespace {

// Compares sz against 2q + sqrt(q) + 1 exactly: returns -1/0/+1.
int cmp_iii_threshold(long long sz, int q) {
  long long d = sz - 2LL * q - 1;  // compare d with sqrt(q)
  if (d < 0) return -1;
  if (d * d < q) return -1;
  if (d * d == q) return 0;
  return 1;
}

// Full-pencil detection: L is exactly [P] for some point P.
std::optional<PointId> pencil_center(const Plane& pl, const BitRow& L, int count) {
  if (count != pl.q() + 1) return std::nullopt;
  int first = L.first();
  int second = L.next(first);
  PointId P = pl.meet(first, second);
  BitRow pen(pl.n());
  for (LineId l : pl.lines_through(P)) pen.set(l);
  if (pen == L) return P;
  return std::nullopt;
}

std::optional<LineId> full_line(const Plane& pl, const BitRow& P, int count) {
  auto center = pencil_center(pl.dual(), P, count);
  return center ? std::optional<LineId>(*center) : std::nullopt;
}

bool all_points_essential_projective(const Plane& pl, const std::vector<PointId>& pts,
                                     const BitRow& B) {
  for (PointId x : pts) {
    bool essential = false;
    for (LineId l : pl.lines_through(x))
      if (pl.line_row(l).and_count(B) == 1) {
        essential = true;
        break;
      }
    if (!essential) return false;
  }
  return true;
}

// Sub-labels "a"/"b" of case (iv) for the given orientation; empty if none.
std::string classify_iv(const Plane& pl, const std::vector<PointId>& pts,
                        const std::vector<LineId>& lns) {
  int n = pl.n(), q = pl.q();
  BitRow P = to_bitrow(pts, n), L = to_bitrow(lns, n);

  // (a): L is a full pencil [C], and P + C is a nontrivial blocking set
  // in which every point of P is essential.
  if (auto C = pencil_center(pl, L, int(lns.size())); C && !P.test(*C)) {
    std::vector<PointId> b_pts = pts;
    b_pts.push_back(*C);
    BitRow B = P;
    B.set(*C);
    if (is_blocking(pl, b_pts)) {
      bool trivial = false;
      for (LineId l = 0; l < n; ++l)
        if (pl.line_row(l).and_count(B) == q + 1) trivial = true;
      if (!trivial && all_points_essential_projective(pl, pts, B)) return "a";
    }
  }

  // (b): L is a full pencil [C] plus one extra line e, P misses e, and
  // P + C blocks every line other than e (an affine blocking set).
  if (int(lns.size()) == q + 2) {
    for (LineId e : lns) {
      BitRow rest = L;
      rest.reset(e);
      auto C = pencil_center(pl, rest, q + 1);
      if (!C || P.test(*C) || pl.incident(*C, e)) continue;
      if (pl.line_row(e).intersects(P)) continue;
      BitRow B = P;
      B.set(*C);
      bool affine_blocking = true;
      for (LineId l = 0; l < n && affine_blocking; ++l)
        if (l != e && !pl.line_row(l).intersects(B)) affine_blocking = false;
      if (affine_blocking) return "b";
    }
  }
  return "";
}

}  // namespace

std::string classify(const Plane& pl, const Candidate& D) {
  if (!is_dominating(pl, D)) fail("NotMinimal", "candidate is not dominating");
  if (!is_minimal(pl, D)) fail("NotMinimal", "candidate is not a minimal dominating set");

  int n = pl.n(), q = pl.q();
  int sq = isqrt_floor(q);
  long long sz = D.size();
  BitRow P = to_bitrow(D.points, n), L = to_bitrow(D.lines, n);

  // (i): q collinear points on l, q concurrent lines through a point of l,
  // with the shared point and line both outside D.
  if (int(D.points.size()) == q && int(D.lines.size()) == q) {
    int k = max_secant(pl, D.points);
    int c = max_concurrency(pl, D.lines);
    if (k == q && c == q) {
      LineId l = -1;
      for (LineId m = 0; m < n; ++m)
        if (pl.line_row(m).and_count(P) == q) l = m;
      BitRow missing = pl.line_row(l);
      missing.subtract(P);
      PointId Pm = missing.first();
      BitRow pen(n);
      for (LineId m : pl.lines_through(Pm)) pen.set(m);
      pen.reset(l);
      if (pen == L && !L.test(l) && !P.test(Pm)) return "case_i";
    }
  }

  // (ii): full line plus full pencil of an off-line point.
  if (int(D.points.size()) == q + 1 && int(D.lines.size()) == q + 1) {
    auto l = full_line(pl, P, q + 1);
    auto C = pencil_center(pl, L, q + 1);
    if (l && C && !pl.incident(*C, *l)) return "case_ii";
  }

  // (iii a): full pencil of P plus a Baer subplane minus P.
  if (auto C = pencil_center(pl, L, int(D.lines.size())); C && !P.test(*C)) {
    std::vector<PointId> b_pts = D.points;
    b_pts.push_back(*C);
    if (is_baer_pointset(pl, b_pts)) return "case_iii_a";
  }
  // (iii b): the dual structure.
  if (auto l = full_line(pl, P, int(D.points.size())); l && !L.test(*l)) {
    std::vector<LineId> b_lns = D.lines;
    b_lns.push_back(*l);
    if (is_dual_baer_lineset(pl, b_lns)) return "case_iii_b";
  }

  bool primal = is_primal(pl, D);
  if (primal) {
    if (sz >= 3LL * q - 1) return "case_v";
    if (cmp_iii_threshold(sz, q) > 0) {
      std::string sub = classify_iv(pl, D.points, D.lines);
      if (sub == "a") return "case_iv_a";
      if (sub == "b") return "case_iv_b";
      Plane dp = pl.dual();
      if (!classify_iv(dp, D.lines, D.points).empty()) return "case_iv_c";
    }
    return "unclassified";
  }
  if (sz >= 2LL * q + 2 * sq + 2) return "nonprimal_vi";
  return "unclassified";
}

AnalysisReport analyze(const Plane& pl, const Candidate& D) {
  AnalysisReport r;
  int q = pl.q();
  r.spectrum = secant_spectrum(pl, D.points);
  r.k = r.spectrum.k_max;
  r.c = max_concurrency(pl, D.lines);
  r.blocking = is_blocking(pl, D.points);
  r.covering = is_covering(pl, D.lines);
  r.dominating = is_dominating(pl, D);
  r.primal = is_primal(pl, D);
  int k_eff = std::max(r.k, 1);
  r.weight = weight(pl, D.points, k_eff);
  r.bound_blocked = D.points.empty() ? 0 : bound_blocked_lines(int(D.points.size()), q);
  r.bound_cover_value =
      (r.c >= 1 && r.c <= int(D.lines.size())) ? bound_cover(r.c, int(D.lines.size()), q) : 0;
  r.bound_lbweird_value = bound_lbweird(int(D.points.size()), k_eff, D.size(), q);
  if (r.dominating) {
    MinqqBound b = bound_minqq(pl, D);
    r.bound_minqq_size = b.size_bound;
    r.bound_minqq_gamma = b.gamma_bound;
    r.minimal = is_minimal(pl, D);
    r.stable = r.minimal && is_stable(pl, D);
    if (r.minimal) r.classification = classify(pl, D);
  }
  return r;
}

Candidate candidate_from_json(const std::string& text, const Plane& pl) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", e.what());
  }
  if (!j.is_object() || !j.contains("points") || !j.contains("lines"))
    fail("ParseError", "candidate document must have points and lines");
  Candidate D;
  auto read_ids = [&](const char* key, std::vector<int>& out) {
    BitRow seen(pl.n());
    for (const auto& v : j[key]) {
      int id = v.get<int>();
      if (id < 0 || id >= pl.n()) fail("ParseError", std::string(key) + " id out of range");
      if (seen.test(id)) fail("ParseError", std::string("duplicate id in ") + key);
      seen.set(id);
      out.push_back(id);
    }
    std::sort(out.begin(), out.end());
  };
  read_ids("points", D.points);
  read_ids("lines", D.lines);
  return D;
}

std::string candidate_to_json(const Candidate& D) {
  nlohmann::ordered_json j;
  auto pts = D.points, lns = D.lines;
  std::sort(pts.begin(), pts.end());
  std::sort(lns.begin(), lns.end());
  j["points"] = pts;
  j["lines"] = lns;
  return j.dump();
}

std::string report_to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["flags"] = {{"dominating", r.dominating}, {"blocking", r.blocking},
                {"covering", r.covering},     {"minimal", r.minimal},
                {"stable", r.stable},         {"primal", r.primal}};
  j["k"] = r.k;
  j["c"] = r.c;
  nlohmann::ordered_json spec = nlohmann::ordered_json::object();
  for (const auto& [m, cnt] : r.spectrum.histogram) spec[std::to_string(m)] = cnt;
  j["spectrum"] = std::move(spec);
  j["weight"] = r.weight;
  j["bounds"] = {{"blocked_lines", r.bound_blocked},
                 {"cover", r.bound_cover_value},
                 {"minqq_size", r.bound_minqq_size},
                 {"minqq_gamma", r.bound_minqq_gamma},
                 {"lbweird", r.bound_lbweird_value}};
  j["classification"] = r.classification;
  return j.dump();
}

}  // namespace planedom::sets
