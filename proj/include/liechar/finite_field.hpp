#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "liechar/cyclotomic.hpp"

namespace liechar {

struct FiniteFieldElement {
  int p = 0;
  int k = 0;
  std::vector<int> coordinates;  // coefficients of 1, x, ..., x^{k-1}
  bool operator==(const FiniteFieldElement&) const = default;
};

bool is_prime(std::int64_t n);
// q = p^k; throws unless q is a prime power >= 2.
std::pair<int, int> prime_power(std::int64_t q);

// F_{p^k}. Elements are integer codes sum a_i p^i for the polynomial basis.
class FiniteField {
 public:
  static std::shared_ptr<const FiniteField> get(int p, int k);
  static std::shared_ptr<const FiniteField> of_order(std::int64_t q);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  // Monic defining polynomial, constant term first, length k + 1.
  const std::vector<int>& defining_polynomial() const { return poly_; }
  int generator() const { return exp_[1 % (q_ - 1)]; }

  int add(int a, int b) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const;
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, std::int64_t e) const;
  // generator^j
  int exp(std::int64_t j) const { return exp_[static_cast<std::size_t>(mod_floor(j, q_ - 1))]; }
  // log base the stored generator; a must be nonzero.
  int log(int a) const;
  // Absolute trace to F_p, as an integer in [0, p).
  int trace(int a) const;
  int from_integer(std::int64_t n) const { return static_cast<int>(mod_floor(n, p_)); }

  FiniteFieldElement element(int code) const;
  int code(const FiniteFieldElement& x) const;

 private:
  FiniteField(int p, int k);

  int p_, k_, q_;
  std::vector<int> poly_;
  std::vector<int> exp_;  // length 2(q-1)
  std::vector<int> log_;
  std::vector<int> neg_;
  std::vector<int> add_table_;  // dense when q is small
};

// x -> zeta_{q-1}^{log x}, lifted to the target conductor.
CyclotomicNumber multiplicative_embedding(const FiniteField& field, int x, int target_conductor);
// Least k >= 0 with base^k = x; base must generate the multiplicative group.
std::int64_t discrete_log(const FiniteField& field, int x, int base);

// Embedding of F_{p^a} into F_{p^b}, a | b.
class FieldEmbedding {
 public:
  FieldEmbedding(std::shared_ptr<const FiniteField> small, std::shared_ptr<const FiniteField> big);

  const FiniteField& small() const { return *small_; }
  const FiniteField& big() const { return *big_; }
  int image(int small_code) const { return image_[static_cast<std::size_t>(small_code)]; }
  // -1 if not in the image.
  int preimage(int big_code) const;

 private:
  std::shared_ptr<const FiniteField> small_, big_;
  std::vector<int> image_;
  std::vector<int> preimage_;
};

}  // namespace liechar
