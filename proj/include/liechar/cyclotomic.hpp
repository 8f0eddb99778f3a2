#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liechar/rational.hpp"

namespace liechar {

using SparseIntVector = std::vector<std::pair<int, std::int64_t>>;

std::int64_t euler_phi(std::int64_t n);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

// Dense integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

// Shared per-conductor data: Phi_e and the reduced form of every power of zeta_e.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int conductor);

  int conductor() const { return conductor_; }
  int degree() const { return degree_; }
  const std::vector<std::int64_t>& minimal_polynomial() const { return *phi_; }
  // zeta_e^k in the power basis, k taken mod e.
  const SparseIntVector& power(std::int64_t k) const;

 private:
  explicit CyclotomicField(int conductor);

  int conductor_;
  int degree_;
  const std::vector<std::int64_t>* phi_;
  std::vector<SparseIntVector> powers_;
};

class CyclotomicNumber {
 public:
  CyclotomicNumber();
  CyclotomicNumber(long value);  // NOLINT(google-explicit-constructor)
  explicit CyclotomicNumber(const Rational& value, int conductor = 1);
  CyclotomicNumber(int conductor, std::vector<Rational> coefficients);

  static CyclotomicNumber root_of_unity(int n, std::int64_t k);
  // Sum of c * zeta_e^k over the given terms (exponents arbitrary integers).
  static CyclotomicNumber from_powers(int e, std::span<const std::pair<std::int64_t, Rational>> terms);
  static CyclotomicNumber from_integer_powers(int e, std::span<const std::pair<std::int64_t, std::int64_t>> terms);
  // coefficients[k] is the coefficient of zeta_e^k for k in [0, e).
  static CyclotomicNumber from_exponent_vector(int e, std::span<const std::int64_t> coefficients);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  CyclotomicNumber lifted(int e) const;
  CyclotomicNumber conj() const;
  // zeta_e -> zeta_e^a with gcd(a, e) = 1.
  CyclotomicNumber galois(std::int64_t a) const;

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;
  // Integral coefficients as sparse int64 terms, if they all fit.
  bool integral_terms(SparseIntVector& out) const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& b);
  CyclotomicNumber& operator-=(const CyclotomicNumber& b);
  CyclotomicNumber& operator*=(const CyclotomicNumber& b);
  CyclotomicNumber& operator*=(const Rational& r);
  CyclotomicNumber operator-() const;

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& r) { return a *= r; }
  friend CyclotomicNumber operator*(const Rational& r, CyclotomicNumber a) { return a *= r; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

  // Total order on canonical forms at a common conductor; used for deterministic sorting.
  static int compare(const CyclotomicNumber& a, const CyclotomicNumber& b);

  std::string to_string() const;

 private:
  void reduce_dense(std::vector<Rational>& wide);

  int conductor_;
  std::vector<Rational> coeffs_;
};

// Exact accumulator for sums of w * a * conj(b) or w * a * b over a fixed conductor.
// Integral inputs take a 128-bit path; anything else falls back to rationals.
class CyclotomicAccumulator {
 public:
  explicit CyclotomicAccumulator(int conductor);

  void add(const CyclotomicNumber& a, std::int64_t weight);
  // weight * zeta^k
  void add_root(std::int64_t k, std::int64_t weight) {
    fast_[static_cast<std::size_t>(mod_floor(k, conductor_))] += weight;
  }
  void add_product(const CyclotomicNumber& a, const CyclotomicNumber& b, std::int64_t weight,
                   bool conjugate_b);
  CyclotomicNumber result(const Rational& scale = Rational(1)) const;

 private:
  void spill();

  int conductor_;
  std::vector<__int128> fast_;
  std::vector<Rational> slow_;
  bool slow_used_ = false;
  SparseIntVector ta_, tb_;
};

}  // namespace liechar
