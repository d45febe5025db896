#include "planedom/solver.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "planedom/constructions.hpp"
#include "planedom/errors.hpp"

namespace planedom::solver {

namespace {

using Clock = std::chrono::steady_clock;

void require_valid(const Plane& pl) {
  if (!validate_axioms(pl).ok())
    fail("InvalidPlane", "plane fails the projective-plane axioms");
}

// Bipartite vertex universe: points 0..n-1, lines n..2n-1.
struct Instance {
  const Plane& pl;
  int n;
  std::vector<BitRow> nbhd;  // closed neighborhood of each vertex, 2n bits
  int cover_cap;             // max vertices covered by one pick: q+2

  explicit Instance(const Plane& plane) : pl(plane), n(plane.n()) {
    nbhd.assign(2 * n, BitRow(2 * n));
    for (PointId p = 0; p < n; ++p) {
      nbhd[p].set(p);
      for (LineId l : pl.lines_through(p)) nbhd[p].set(n + l);
    }
    for (LineId l = 0; l < n; ++l) {
      nbhd[n + l].set(n + l);
      for (PointId p : pl.points_on(l)) nbhd[n + l].set(p);
    }
    cover_cap = pl.q() + 2;
  }

  Candidate to_candidate(const std::vector<int>& vertices) const {
    Candidate D;
    for (int v : vertices)
      (v < n ? D.points : D.lines).push_back(v < n ? v : v - n);
    std::sort(D.points.begin(), D.points.end());
    std::sort(D.lines.begin(), D.lines.end());
    return D;
  }
};

struct CoverSearch {
  const Instance& inst;
  long long nodes = 0;
  long long budget_check_mask = 0xFFF;
  Clock::time_point deadline;
  bool has_deadline = false;
  bool timed_out = false;

  explicit CoverSearch(const Instance& i) : inst(i) {}

  void set_budget(double seconds) {
    if (seconds > 0) {
      has_deadline = true;
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(seconds));
    }
  }

  bool out_of_time() {
    if (!has_deadline) return false;
    if ((nodes & budget_check_mask) == 0 && Clock::now() > deadline) timed_out = true;
    return timed_out;
  }

  // DFS for any cover of size <= limit extending `chosen`; fills `found`
  // with the first solution (children in ascending vertex id).
  bool find_cover(BitRow& uncovered, std::vector<int>& chosen, int limit,
                  std::vector<int>& found) {
    ++nodes;
    if (out_of_time()) return false;
    int u = uncovered.first();
    if (u < 0) {
      found = chosen;
      return true;
    }
    int remaining = limit - int(chosen.size());
    if (remaining <= 0) return false;
    if ((long long)remaining * inst.cover_cap < uncovered.count()) return false;
    for (int v = inst.nbhd[u].first(); v >= 0; v = inst.nbhd[u].next(v)) {
      BitRow newly = inst.nbhd[v] & uncovered;
      uncovered.subtract(newly);
      chosen.push_back(v);
      if (find_cover(uncovered, chosen, limit, found)) {
        chosen.pop_back();
        uncovered |= newly;
        return true;
      }
      chosen.pop_back();
      uncovered |= newly;
      if (timed_out) return false;
    }
    return false;
  }

  // Enumerates every cover of size <= limit that is built by resolving
  // uncovered vertices one at a time (reaches every minimal cover).
  void enumerate_covers(BitRow& uncovered, std::vector<int>& chosen, int limit,
                        std::set<std::vector<int>>& out) {
    ++nodes;
    int u = uncovered.first();
    if (u < 0) {
      std::vector<int> key = chosen;
      std::sort(key.begin(), key.end());
      out.insert(std::move(key));
      return;
    }
    int remaining = limit - int(chosen.size());
    if (remaining <= 0) return;
    if ((long long)remaining * inst.cover_cap < uncovered.count()) return;
    for (int v = inst.nbhd[u].first(); v >= 0; v = inst.nbhd[u].next(v)) {
      BitRow newly = inst.nbhd[v] & uncovered;
      uncovered.subtract(newly);
      chosen.push_back(v);
      enumerate_covers(uncovered, chosen, limit, out);
      chosen.pop_back();
      uncovered |= newly;
    }
  }
};

Candidate canonical_family_i(const Plane& pl) {
  LineId l = 0;
  PointId P = pl.points_on(l).front();
  return constructions::family_i(pl, l, P);
}

std::vector<int> candidate_vertices(const Plane& pl, const Candidate& D) {
  std::vector<int> vs;
  for (PointId p : D.points) vs.push_back(p);
  for (LineId l : D.lines) vs.push_back(pl.n() + l);
  std::sort(vs.begin(), vs.end());
  return vs;
}

}  // namespace

SearchResult min_dominating(const Plane& pl, double budget_seconds) {
  require_valid(pl);
  Instance inst(pl);
  int n = pl.n(), q = pl.q();

  SearchResult res;
  res.lower_bound = 2 * q;  // bound_minqq combined over both sides
  Candidate incumbent = canonical_family_i(pl);
  int ub = incumbent.size();  // 2q

  CoverSearch search(inst);
  search.set_budget(budget_seconds);

  // Exhaust everything below the incumbent.
  while (ub > res.lower_bound) {
    BitRow uncovered(2 * n);
    for (int v = 0; v < 2 * n; ++v) uncovered.set(v);
    std::vector<int> chosen, found;
    if (search.find_cover(uncovered, chosen, ub - 1, found)) {
      incumbent = inst.to_candidate(found);
      ub = incumbent.size();
    } else {
      break;
    }
  }
  bool exhausted = !search.timed_out;
  if (ub > res.lower_bound && exhausted) res.lower_bound = ub;

  if (exhausted) {
    // Canonical witness: lexicographically least optimum, built greedily
    // with a completion check per vertex.
    std::vector<int> prefix;
    BitRow uncovered(2 * n);
    for (int v = 0; v < 2 * n; ++v) uncovered.set(v);
    for (int v = 0; v < 2 * n && int(prefix.size()) < ub; ++v) {
      BitRow newly = inst.nbhd[v] & uncovered;
      if (newly.none()) continue;  // v would be redundant, never lex-minimal
      uncovered.subtract(newly);
      prefix.push_back(v);
      std::vector<int> found;
      BitRow u2 = uncovered;
      std::vector<int> chosen = prefix;
      if (!search.find_cover(u2, chosen, ub, found)) {
        prefix.pop_back();
        uncovered |= newly;
      }
      if (uncovered.none()) break;
    }
    if (uncovered.none() && int(prefix.size()) <= ub)
      incumbent = inst.to_candidate(prefix);
  }

  res.optimum = ub;
  res.witness = incumbent;
  res.nodes_expanded = search.nodes;
  res.proof = exhausted ? Proof::exhausted : Proof::bound_met;
  return res;
}

std::vector<Candidate> enumerate_minimal_dominating(const Plane& pl, int max_size) {
  require_valid(pl);
  int q = pl.q();
  if (!(q <= 3 || (q == 4 && max_size <= 2 * q + 2)))
    fail("TooLarge", "enumeration guard: q <= 3, or q = 4 with max_size <= 2q+2");

  Instance inst(pl);
  int n = pl.n();
  CoverSearch search(inst);
  BitRow uncovered(2 * n);
  for (int v = 0; v < 2 * n; ++v) uncovered.set(v);
  std::vector<int> chosen;
  std::set<std::vector<int>> covers;
  search.enumerate_covers(uncovered, chosen, max_size, covers);

  std::vector<Candidate> out;
  for (const auto& vs : covers) {
    Candidate D = inst.to_candidate(vs);
    if (sets::is_minimal(pl, D)) out.push_back(std::move(D));
  }
  std::sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) {
    return candidate_vertices(pl, a) < candidate_vertices(pl, b);
  });
  return out;
}

std::optional<SearchResult> min_blocking(const Plane& pl, bool nontrivial) {
  require_valid(pl);
  int n = pl.n(), q = pl.q();

  // line_count[l]: chosen points on l; blocking iff all counts >= 1.
  std::vector<int> line_count(n, 0);
  std::vector<PointId> chosen;
  long long nodes = 0;

  // DFS for a blocking set of size <= limit; branches on the lowest
  // unblocked line, points in ascending id. Returns first solution.
  std::function<bool(int)> dfs = [&](int limit) -> bool {
    ++nodes;
    LineId target = -1;
    int unblocked = 0;
    for (LineId l = 0; l < n; ++l)
      if (line_count[l] == 0) {
        if (target < 0) target = l;
        ++unblocked;
      }
    if (target < 0) return true;
    int remaining = limit - int(chosen.size());
    if (remaining <= 0) return false;
    if ((long long)remaining * (q + 1) < unblocked) return false;
    for (PointId p : pl.points_on(target)) {
      if (std::find(chosen.begin(), chosen.end(), p) != chosen.end()) continue;
      bool makes_trivial = false;
      for (LineId l : pl.lines_through(p))
        if (nontrivial && line_count[l] == q) makes_trivial = true;
      if (makes_trivial) continue;
      for (LineId l : pl.lines_through(p)) ++line_count[l];
      chosen.push_back(p);
      if (dfs(limit)) return true;
      chosen.pop_back();
      for (LineId l : pl.lines_through(p)) --line_count[l];
    }
    return false;
  };

  for (int s = q + 1; s <= n; ++s) {
    if (dfs(s)) {
      SearchResult res;
      res.optimum = s;
      std::sort(chosen.begin(), chosen.end());
      res.witness.points = chosen;
      res.nodes_expanded = nodes;
      res.proof = Proof::exhausted;
      res.lower_bound = s;
      return res;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<PointId>> extend_to_blocking(const Plane& pl,
                                                       const std::vector<PointId>& S, int t) {
  if (t > 4 || t < 0) fail("BadParameter", "extension cap is 0 <= t <= 4");
  int n = pl.n();
  BitRow s = sets::to_bitrow(S, n);
  std::vector<LineId> skew;
  for (LineId l = 0; l < n; ++l)
    if (!pl.line_row(l).intersects(s)) skew.push_back(l);
  if (skew.empty()) return std::vector<PointId>{};

  // Candidate points: those on some skew line (others change nothing).
  BitRow cand_bits(n);
  for (LineId l : skew) cand_bits |= pl.line_row(l);
  cand_bits.subtract(s);
  std::vector<PointId> cands = cand_bits.to_indices();

  std::vector<PointId> pick;
  std::function<bool(int, size_t)> dfs = [&](int size, size_t start) -> bool {
    if (int(pick.size()) == size) {
      BitRow ext = s;
      for (PointId p : pick) ext.set(p);
      for (LineId l : skew)
        if (!pl.line_row(l).intersects(ext)) return false;
      return true;
    }
    for (size_t i = start; i < cands.size(); ++i) {
      pick.push_back(cands[i]);
      if (dfs(size, i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= t; ++size)
    if (dfs(size, 0)) return pick;
  return std::nullopt;
}

}  // namespace planedom::solver
