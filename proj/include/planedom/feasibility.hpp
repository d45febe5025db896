#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace planedom::feas {

using Rat = boost::rational<long long>;

/// A base point type (alpha0, beta0) solving
/// alpha0(k-1) + beta0(k-2) + 1 = q + k - 1 in nonnegative integers.
/// The second realized type is (alpha0-(k-2), beta0+(k-1)).
struct PointTypeBase {
  int beta0 = 0;
  long long alpha0 = 0;
};

/// All nonnegative integer base types for (q, k). Errors: BadParameter
/// if k < 3 (the k-2 coefficient degenerates).
std::vector<PointTypeBase> point_types(int q, int k);

/// alpha0 as an exact rational (it need not be integral; real-valued
/// evaluation of F uses it as is). Errors: NoBaseType if alpha0 < 0.
Rat base_alpha0(int q, int k, int beta0);

struct Counts {
  Rat N;                  // number of k-secants
  Rat N_prime;            // number of (k-1)-secants
  long long M = 0;        // exterior points: q^2 - k + 2
  Rat sum_p;              // sum of long-secant counts over exterior points
  Rat sum_choose2;        // sum of C(p_i, 2) over exterior points
};

/// The double-counting values for (q, k, beta0, b) with a = q+k-1-b.
/// Errors: NoBaseType (via base_alpha0).
Counts counts(int q, int k, int beta0, int b);

/// F = 2*sum_choose2 - 2*sum_p + 2M, exact. Errors: NoBaseType.
Rat F(int q, int k, int beta0, int b);

struct FeasibilityRecord {
  int q = 0, k = 0, beta0 = 0, b = 0;
  long long a = 0;
  Rat alpha0;
  Counts counts;
  Rat F;
  bool feasible = false;
  std::optional<std::string> case_label;
};

/// Builds the record and decides feasibility: F = 0, alpha0/N/N' integral
/// and nonnegative, 0 <= b <= q+k-1, and the second type nonnegative when
/// b > 0. Errors: NoBaseType.
FeasibilityRecord make_record(int q, int k, int beta0, int b);

/// Case label per the (I.a)..(II.b) table: alpha0 pattern, q-k relation,
/// divisibility and N' identity must all hold exactly; nullopt otherwise.
std::optional<std::string> case_classify(const FeasibilityRecord& rec);

/// Excludes a labeled record by counting the (k-1)-secants two points of
/// the second type cover: each lies on beta0+k-1 of them and two points
/// share at most one, so together they cover at least 2(beta0+k-1)-1;
/// excluded iff that exceeds N'. Errors: NotApplicable unless the label
/// is I.a or II.a and b >= 2.
bool combinatorial_exclusion(const FeasibilityRecord& rec);

/// All feasible records for integer q in [q_min, q_max] (clamped to
/// [4, 200]), k = floor(sqrt(q)) + 1, every admissible beta0 and b.
/// include_square_k additionally scans k = sqrt(q) at perfect squares.
/// Deterministic order by (q, k, beta0, b). Parallel over q, capped by
/// max_threads (0: hardware concurrency).
std::vector<FeasibilityRecord> scan(int q_min, int q_max, bool include_square_k = false,
                                    int max_threads = 0);

std::string record_to_json(const FeasibilityRecord& rec);

}  // namespace planedom::feas
