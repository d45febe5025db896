#include "planedom/gf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "planedom/errors.hpp"

namespace planedom::gf {

namespace {

constexpr int kMaxOrder = 169;

// Lexicographically smallest monic irreducible modulus per (p, h), h >= 2,
// as coefficients c0..c_{h-1}. Covers all prime powers q = p^h <= 169.
const std::map<std::pair<int, int>, std::vector<int>>& modulus_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1}},                 // x^2 + x + 1
      {{2, 3}, {1, 1, 0}},              // x^3 + x + 1
      {{2, 4}, {1, 1, 0, 0}},           // x^4 + x + 1
      {{2, 5}, {1, 0, 1, 0, 0}},        // x^5 + x^2 + 1
      {{2, 6}, {1, 1, 0, 0, 0, 0}},     // x^6 + x + 1
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0}},  // x^7 + x + 1
      {{3, 2}, {1, 0}},                 // x^2 + 1
      {{3, 3}, {1, 2, 0}},              // x^3 + 2x + 1
      {{3, 4}, {2, 1, 0, 0}},           // x^4 + x + 2
      {{5, 2}, {2, 0}},                 // x^2 + 2
      {{5, 3}, {1, 1, 0}},              // x^3 + x + 1
      {{7, 2}, {1, 0}},                 // x^2 + 1
      {{11, 2}, {1, 0}},                // x^2 + 1
      {{13, 2}, {2, 0}},                // x^2 + 2
  };
  return table;
}

// Digits base p, low first, length h.
std::vector<int> digits(int rep, int p, int h) {
  std::vector<int> d(h);
  for (int i = 0; i < h; ++i) {
    d[i] = rep % p;
    rep /= p;
  }
  return d;
}

int encode(const std::vector<int>& d, int p) {
  int rep = 0;
  for (int i = int(d.size()) - 1; i >= 0; --i) rep = rep * p + d[i];
  return rep;
}

// Product of two coefficient vectors reduced modulo the monic modulus.
int poly_mul_mod(int a, int b, int p, int h, const std::vector<int>& mod) {
  std::vector<int> da = digits(a, p, h), db = digits(b, p, h);
  std::vector<int> prod(2 * h - 1, 0);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (int d = 2 * h - 2; d >= h; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^h == -mod, so c * x^d folds down onto degrees d-h .. d-1.
    for (int i = 0; i < h; ++i)
      prod[d - h + i] = ((prod[d - h + i] - c * mod[i]) % p + p) % p;
  }
  prod.resize(h);
  return encode(prod, p);
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec field_new(int p, int h) {
  if (!is_prime(p)) fail("NotPrime", "p = " + std::to_string(p) + " is not prime");
  if (h < 1) fail("Unsupported", "exponent must be positive");
  long long q = 1;
  for (int i = 0; i < h; ++i) {
    q *= p;
    if (q > kMaxOrder)
      fail("Unsupported", "q = p^h exceeds the supported cap " + std::to_string(kMaxOrder));
  }

  FieldSpec f;
  f.p_ = p;
  f.h_ = h;
  f.q_ = int(q);
  if (h == 1) {
    f.modulus_ = {0};  // x
  } else {
    auto it = modulus_table().find({p, h});
    if (it == modulus_table().end())
      fail("Unsupported", "(p, h) = (" + std::to_string(p) + ", " + std::to_string(h) +
                              ") missing from the modulus table");
    f.modulus_ = it->second;
  }

  int n = f.q_;
  f.add_.resize(n * n);
  f.mul_.resize(n * n);
  f.neg_.resize(n);
  f.inv_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    std::vector<int> da = digits(a, p, h);
    std::vector<int> dn(h);
    for (int i = 0; i < h; ++i) dn[i] = (p - da[i]) % p;
    f.neg_[a] = encode(dn, p);
    for (int b = 0; b < n; ++b) {
      std::vector<int> db = digits(b, p, h), ds(h);
      for (int i = 0; i < h; ++i) ds[i] = (da[i] + db[i]) % p;
      f.add_[a * n + b] = encode(ds, p);
      f.mul_[a * n + b] = (h == 1) ? (a * b) % p : poly_mul_mod(a, b, p, h, f.modulus_);
    }
  }
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (f.mul_[a * n + b] == 1) {
        f.inv_[a] = b;
        break;
      }
  return f;
}

Element FieldSpec::inv(Element a) const {
  if (a == 0) fail("DivisionByZero", "inverse of zero");
  return inv_[a];
}

Element FieldSpec::pow(Element a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  Element r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::vector<Element> FieldSpec::elements() const {
  std::vector<Element> out(q_);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace planedom::gf
