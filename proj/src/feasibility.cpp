#include "planedom/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <nlohmann/json.hpp>

#include "planedom/errors.hpp"

namespace planedom::feas {

namespace {

int isqrt_floor(int q) {
  int s = int(std::sqrt(double(q)));
  while (s * s > q) --s;
  while ((s + 1) * (s + 1) <= q) ++s;
  return s;
}

bool integral(const Rat& r) { return r.denominator() == 1; }

Rat choose2(const Rat& z) { return z * (z - 1) / 2; }

}  // namespace

Rat base_alpha0(int q, int k, int beta0) {
  if (k < 3) fail("BadParameter", "point types require k >= 3");
  Rat a0(q + k - 2 - (long long)beta0 * (k - 2), k - 1);
  // rational-vs-integer comparisons recurse under C++20 with this boost
  // version, so every comparison below promotes the integer side first
  if (a0 < Rat(0))
    fail("NoBaseType", "no nonnegative base type for beta0 = " + std::to_string(beta0));
  return a0;
}

std::vector<PointTypeBase> point_types(int q, int k) {
  if (k < 3) fail("BadParameter", "point types require k >= 3");
  std::vector<PointTypeBase> out;
  long long beta_cap = (q + k - 2) / (k - 2);
  for (int beta0 = 0; beta0 <= beta_cap; ++beta0) {
    long long num = q + k - 2 - (long long)beta0 * (k - 2);
    if (num < 0) break;
    if (num % (k - 1) != 0) continue;
    out.push_back({beta0, num / (k - 1)});
  }
  return out;
}

Counts counts(int q, int k, int beta0, int b) {
  Rat a0 = base_alpha0(q, k, beta0);
  long long a = (long long)q + k - 1 - b;
  Counts c;
  c.N = (a * a0 + b * (a0 - k + 2)) / k;
  c.N_prime = (Rat(a) * beta0 + Rat(b) * (beta0 + k - 1)) / (k - 1);
  c.M = (long long)q * q - k + 2;
  c.sum_p = c.N * (q + 1 - k) + c.N_prime * (q + 2 - k);
  c.sum_choose2 =
      choose2(c.N + c.N_prime) - a * choose2(a0 + beta0) - b * choose2(a0 + beta0 + 1);
  return c;
}

Rat F(int q, int k, int beta0, int b) {
  Counts c = counts(q, k, beta0, b);
  return 2 * c.sum_choose2 - 2 * c.sum_p + 2 * c.M;
}

FeasibilityRecord make_record(int q, int k, int beta0, int b) {
  FeasibilityRecord rec;
  rec.q = q;
  rec.k = k;
  rec.beta0 = beta0;
  rec.b = b;
  rec.a = (long long)q + k - 1 - b;
  rec.alpha0 = base_alpha0(q, k, beta0);
  rec.counts = counts(q, k, beta0, b);
  rec.F = 2 * rec.counts.sum_choose2 - 2 * rec.counts.sum_p + 2 * rec.counts.M;
  rec.feasible = rec.F == Rat(0) && integral(rec.alpha0) && integral(rec.counts.N) &&
                 integral(rec.counts.N_prime) && rec.counts.N >= Rat(0) &&
                 rec.counts.N_prime >= Rat(0) && rec.alpha0 >= Rat(0) && b >= 0 &&
                 b <= q + k - 1 && rec.a >= 0 &&
                 (b == 0 || rec.alpha0 - (k - 2) >= Rat(0));
  if (rec.feasible) rec.case_label = case_classify(rec);
  return rec;
}

std::optional<std::string> case_classify(const FeasibilityRecord& rec) {
  if (!integral(rec.alpha0) || !integral(rec.counts.N_prime)) return std::nullopt;
  long long a0 = rec.alpha0.numerator();
  long long Np = rec.counts.N_prime.numerator();
  long long q = rec.q, k = rec.k, b = rec.b;
  int s = isqrt_floor(rec.q);

  if (rec.beta0 == 1 && a0 == k - 1 && (long long)s * s == q && k == s + 1 &&
      (2 * b) % k == 0 && Np == b + k)
    return "I.a";
  if (rec.beta0 == 1 && a0 == k && k * (k - 1) == q && (2 * b) % k == 0 && Np == b + k + 1)
    return "I.b";
  if (rec.beta0 == 1 && a0 == k + 1 && k * k - 1 == q && ((2 * b - 2) % k + k) % k == 0 &&
      Np == b + k + 2)
    return "I.c";
  if (rec.beta0 == 0 && a0 == k && k * k - 2 * k + 2 == q && (2 * b) % k == 0 && Np == b)
    return "II.a";
  if (rec.beta0 == 0 && a0 == k + 1 && k * k - k + 1 == q && ((2 * b - 2) % k + k) % k == 0 &&
      Np == b)
    return "II.b";
  return std::nullopt;
}

bool combinatorial_exclusion(const FeasibilityRecord& rec) {
  if (!rec.case_label || (*rec.case_label != "I.a" && *rec.case_label != "II.a") || rec.b < 2)
    fail("NotApplicable", "exclusion applies to I.a/II.a records with b >= 2");
  // Two second-type points lie on beta0+k-1 (k-1)-secants each and share
  // at most one line, so they cover at least 2(beta0+k-1)-1 together.
  long long covered = 2LL * (rec.beta0 + rec.k - 1) - 1;
  return Rat(covered) > rec.counts.N_prime;
}

std::vector<FeasibilityRecord> scan(int q_min, int q_max, bool include_square_k,
                                    int max_threads) {
  q_min = std::max(q_min, 4);
  q_max = std::min(q_max, 200);
  if (q_min > q_max) return {};

  int nq = q_max - q_min + 1;
  std::vector<std::vector<FeasibilityRecord>> per_q(nq);

  auto scan_one = [&](int q) {
    std::vector<FeasibilityRecord>& out = per_q[q - q_min];
    int s = isqrt_floor(q);
    std::vector<int> ks = {s + 1};
    if (include_square_k && s * s == q && s >= 3) ks.push_back(s);
    std::sort(ks.begin(), ks.end());
    for (int k : ks) {
      if (k < 3) continue;
      long long beta_cap = (q + k - 2) / (k - 2);
      for (int beta0 = 0; beta0 <= beta_cap; ++beta0) {
        long long num = q + k - 2 - (long long)beta0 * (k - 2);
        if (num < 0) break;
        if (num % (k - 1) != 0) continue;  // integral base type required
        for (int b = 0; b <= q + k - 1; ++b) {
          FeasibilityRecord rec = make_record(q, k, beta0, b);
          if (rec.feasible) out.push_back(std::move(rec));
        }
      }
    }
  };

  unsigned workers = max_threads > 0 ? unsigned(max_threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, unsigned(nq));
  if (workers <= 1) {
    for (int q = q_min; q <= q_max; ++q) scan_one(q);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int q = q_min + int(w); q <= q_max; q += int(workers)) scan_one(q);
      });
    for (auto& t : pool) t.join();
  }

  std::vector<FeasibilityRecord> out;
  for (auto& v : per_q)
    for (auto& rec : v) out.push_back(std::move(rec));
  return out;
}

std::string record_to_json(const FeasibilityRecord& rec) {
  nlohmann::ordered_json j;
  j["q"] = rec.q;
  j["k"] = rec.k;
  j["beta0"] = rec.beta0;
  j["b"] = rec.b;
  j["a"] = rec.a;
  j["alpha0"] = rec.alpha0.numerator() / rec.alpha0.denominator();
  j["N"] = rec.counts.N.numerator() / rec.counts.N.denominator();
  j["N_prime"] = rec.counts.N_prime.numerator() / rec.counts.N_prime.denominator();
  j["M"] = rec.counts.M;
  j["F"] = rec.F.numerator() / rec.F.denominator();
  j["feasible"] = rec.feasible;
  if (rec.case_label)
    j["case"] = *rec.case_label;
  else
    j["case"] = nullptr;
  return j.dump();
}

}  // namespace planedom::feas
