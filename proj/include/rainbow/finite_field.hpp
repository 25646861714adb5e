#pragma once
// Arithmetic in GF(q^t) for prime q, as polynomials over Z_q reduced modulo a monic
// irreducible polynomial of degree t. Elements are encoded as base-q integers
// (coefficient of x^i is digit i).

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

inline bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) out.push_back(m);
  return out;
}

class PrimeExtensionField {
 public:
  static constexpr std::int64_t kMaxOrder = std::int64_t{1} << 24;

  PrimeExtensionField(int q, int t) : q_(q), t_(t) {
    if (!is_prime(q)) throw UsageError("field characteristic must be prime, got " + std::to_string(q));
    if (t < 1) throw UsageError("extension degree must be >= 1");
    order_ = 1;
    for (int i = 0; i < t; ++i) {
      order_ *= q;
      if (order_ > kMaxOrder) throw BudgetError("field order q^t exceeds 2^24");
    }
    modulus_ = find_irreducible();
  }

  int characteristic() const noexcept { return q_; }
  int degree() const noexcept { return t_; }
  std::int64_t order() const noexcept { return order_; }
  /// Low-to-high coefficients of the monic reduction polynomial (size t+1).
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    auto pa = decode(a), pb = decode(b);
    for (int i = 0; i < t_; ++i) pa[i] = (pa[i] + pb[i]) % q_;
    return encode(pa);
  }

  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    auto pa = decode(a), pb = decode(b);
    std::vector<std::int64_t> prod(2 * t_ - 1, 0);
    for (int i = 0; i < t_; ++i)
      if (pa[i])
        for (int j = 0; j < t_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % q_;
    for (int d = 2 * t_ - 2; d >= t_; --d) {
      const std::int64_t c = prod[d];
      if (!c) continue;
      for (int i = 0; i <= t_; ++i)
        prod[d - t_ + i] = ((prod[d - t_ + i] - c * modulus_[i]) % q_ + q_) % q_;
    }
    return encode(std::vector<std::int64_t>(prod.begin(), prod.begin() + t_));
  }

  std::int64_t pow(std::int64_t a, std::int64_t e) const {
    std::int64_t acc = 1;
    while (e > 0) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }

  bool is_primitive(std::int64_t g) const {
    if (g == 0) return false;
    const std::int64_t group = order_ - 1;
    for (std::int64_t p : prime_factors(group))
      if (pow(g, group / p) == 1) return false;
    return true;
  }

  /// Smallest (by encoding) multiplicative generator.
  std::int64_t primitive_element() const {
    for (std::int64_t g = 1; g < order_; ++g)
      if (is_primitive(g)) return g;
    throw InternalError("no primitive element found");
  }

  /// Encoding of the polynomial x, i.e. the class of x modulo the reduction polynomial.
  std::int64_t x() const { return t_ == 1 ? (q_ - modulus_[0]) % q_ : q_; }

 private:
  std::vector<std::int64_t> decode(std::int64_t a) const {
    std::vector<std::int64_t> p(t_);
    for (int i = 0; i < t_; ++i, a /= q_) p[i] = a % q_;
    return p;
  }

  std::int64_t encode(const std::vector<std::int64_t>& p) const {
    std::int64_t a = 0;
    for (int i = t_ - 1; i >= 0; --i) a = a * q_ + p[i];
    return a;
  }

  // Remainder of `num` modulo monic `den` (both low-to-high), in place.
  void reduce(std::vector<int>& num, const std::vector<int>& den) const {
    const int dd = static_cast<int>(den.size()) - 1;
    for (int d = static_cast<int>(num.size()) - 1; d >= dd; --d) {
      const int c = num[d];
      if (!c) continue;
      for (int i = 0; i <= dd; ++i) num[d - dd + i] = ((num[d - dd + i] - c * den[i]) % q_ + q_) % q_;
    }
  }

  bool divisible_by_lower_degree(const std::vector<int>& f) const {
    for (int deg = 1; deg <= t_ / 2; ++deg) {
      std::int64_t count = 1;
      for (int i = 0; i < deg; ++i) count *= q_;
      for (std::int64_t code = 0; code < count; ++code) {
        std::vector<int> g(deg + 1, 0);
        std::int64_t c = code;
        for (int i = 0; i < deg; ++i, c /= q_) g[i] = static_cast<int>(c % q_);
        g[deg] = 1;
        std::vector<int> rem = f;
        reduce(rem, g);
        bool zero = true;
        for (int i = 0; i < deg; ++i) zero = zero && rem[i] == 0;
        if (zero) return true;
      }
    }
    return false;
  }

  // Monic degree-t irreducible with the smallest coefficient code (low coefficient = low digit).
  std::vector<int> find_irreducible() const {
    for (std::int64_t code = 0; code < order_; ++code) {
      std::vector<int> f(t_ + 1, 0);
      std::int64_t c = code;
      for (int i = 0; i < t_; ++i, c /= q_) f[i] = static_cast<int>(c % q_);
      f[t_] = 1;
      if (!divisible_by_lower_degree(f)) return f;
    }
    throw InternalError("no irreducible polynomial found");
  }

  int q_;
  int t_;
  std::int64_t order_ = 1;
  std::vector<int> modulus_;
};

}  // namespace rainbow
