#pragma once

#include <vector>

namespace planedom::gf {

/// A field element is its integer representative in [0, q): the base-p
/// encoding of its coefficient vector over GF(p).
using Element = int;

/// Arithmetic context for GF(p^h). Immutable after construction; all
/// operations are pure table lookups, safe for concurrent reads.
class FieldSpec {
public:
  int p() const { return p_; }
  int h() const { return h_; }
  int q() const { return q_; }

  /// Coefficients c0..c_{h-1} of the monic modulus x^h + c_{h-1}x^{h-1} + ... + c0.
  const std::vector<int>& modulus() const { return modulus_; }

  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element sub(Element a, Element b) const { return add_[a * q_ + neg_[b]]; }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element inv(Element a) const;          // DivisionByZero on a == 0
  Element pow(Element a, long long e) const;

  /// All q elements in ascending representative order: 0, 1, ...
  std::vector<Element> elements() const;

private:
  friend FieldSpec field_new(int p, int h);
  FieldSpec() = default;

  int p_ = 0, h_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<Element> add_, mul_, neg_, inv_;
};

/// Builds GF(p^h) with the deterministic built-in modulus for (p, h):
/// the lexicographically smallest monic irreducible polynomial of degree h
/// over GF(p). Supports every prime power q = p^h <= 169.
/// Errors: NotPrime if p is composite; Unsupported if (p, h) is outside
/// the modulus table.
FieldSpec field_new(int p, int h);

bool is_prime(int n);

}  // namespace planedom::gf
