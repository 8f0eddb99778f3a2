#include "liechar/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "liechar/errors.hpp"

namespace liechar {

namespace {

constexpr std::int64_t kSmallLimit = std::int64_t(1) << 31;
constexpr std::int64_t kWeightLimit = std::int64_t(1) << 40;

Integer from_int128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 a = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  auto hi = static_cast<std::uint64_t>(a >> 64);
  auto lo = static_cast<std::uint64_t>(a);
  Integer r = hi;
  r <<= 64;
  r += Integer(static_cast<unsigned long>(lo));
  if (neg) r = -r;
  return r;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw InvalidArgument("malformed rational: " + s);
  r.canonicalize();
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<std::int64_t>>> cache;
  if (n < 1) throw InvalidArgument("cyclotomic polynomial index must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    int dd = static_cast<int>(div.size()) - 1;
    int dn = static_cast<int>(num.size()) - 1;
    std::vector<std::int64_t> quo(dn - dd + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
      std::int64_t c = num[k + dd];
      quo[k] = c;
      if (c == 0) continue;
      for (int i = 0; i <= dd; ++i) num[k + i] -= c * div[i];
    }
    num = std::move(quo);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<std::vector<std::int64_t>>(std::move(num));
  return *slot;
}

CyclotomicField::CyclotomicField(int conductor)
    : conductor_(conductor), degree_(static_cast<int>(euler_phi(conductor))) {
  phi_ = &cyclotomic_polynomial(conductor);
  const auto& phi = *phi_;
  powers_.resize(conductor_);
  std::vector<std::int64_t> cur(degree_, 0);
  cur[0] = 1;
  for (int k = 0; k < conductor_; ++k) {
    if (degree_ == 1) {
      // x = -phi[0]
      std::int64_t v = 1;
      for (int j = 0; j < k; ++j) v *= -phi[0];
      powers_[k] = {{0, v}};
      continue;
    }
    auto& out = powers_[k];
    for (int i = 0; i < degree_; ++i)
      if (cur[i] != 0) out.emplace_back(i, cur[i]);
    std::int64_t top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1] - top * phi[i];
    cur[0] = -top * phi[0];
  }
}

const CyclotomicField& CyclotomicField::get(int conductor) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  if (conductor < 1) throw InvalidArgument("conductor must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[conductor];
  if (!slot) slot.reset(new CyclotomicField(conductor));
  return *slot;
}

const SparseIntVector& CyclotomicField::power(std::int64_t k) const {
  return powers_[static_cast<std::size_t>(mod_floor(k, conductor_))];
}

CyclotomicNumber::CyclotomicNumber() : conductor_(1), coeffs_(1) {}

CyclotomicNumber::CyclotomicNumber(long value) : conductor_(1), coeffs_{Rational(value)} {}

CyclotomicNumber::CyclotomicNumber(const Rational& value, int conductor)
    : conductor_(conductor), coeffs_(CyclotomicField::get(conductor).degree()) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

CyclotomicNumber::CyclotomicNumber(int conductor, std::vector<Rational> coefficients)
    : conductor_(conductor) {
  const auto& field = CyclotomicField::get(conductor);
  if (static_cast<int>(coefficients.size()) == field.degree()) {
    coeffs_ = std::move(coefficients);
    for (auto& c : coeffs_) c.canonicalize();
  } else {
    coeffs_.assign(field.degree(), Rational(0));
    reduce_dense(coefficients);
  }
}

void CyclotomicNumber::reduce_dense(std::vector<Rational>& wide) {
  const auto& field = CyclotomicField::get(conductor_);
  int phi = field.degree();
  coeffs_.assign(phi, Rational(0));
  for (std::size_t k = 0; k < wide.size(); ++k) {
    if (sgn(wide[k]) == 0) continue;
    if (static_cast<int>(k) < phi) {
      coeffs_[k] += wide[k];
      continue;
    }
    for (const auto& [i, c] : field.power(static_cast<std::int64_t>(k))) coeffs_[i] += wide[k] * c;
  }
}

CyclotomicNumber CyclotomicNumber::root_of_unity(int n, std::int64_t k) {
  const auto& field = CyclotomicField::get(n);
  CyclotomicNumber r;
  r.conductor_ = n;
  r.coeffs_.assign(field.degree(), Rational(0));
  for (const auto& [i, c] : field.power(k)) r.coeffs_[i] = c;
  return r;
}

CyclotomicNumber CyclotomicNumber::from_powers(int e, std::span<const std::pair<std::int64_t, Rational>> terms) {
  const auto& field = CyclotomicField::get(e);
  CyclotomicNumber r;
  r.conductor_ = e;
  r.coeffs_.assign(field.degree(), Rational(0));
  for (const auto& [k, c0] : terms) {
    Rational c = c0;
    c.canonicalize();
    for (const auto& [i, v] : field.power(k)) r.coeffs_[i] += c * v;
  }
  return r;
}

CyclotomicNumber CyclotomicNumber::from_integer_powers(int e,
                                                       std::span<const std::pair<std::int64_t, std::int64_t>> terms) {
  const auto& field = CyclotomicField::get(e);
  std::vector<__int128> acc(field.degree(), 0);
  for (const auto& [k, c] : terms)
    for (const auto& [i, v] : field.power(k)) acc[i] += static_cast<__int128>(c) * v;
  CyclotomicNumber r;
  r.conductor_ = e;
  r.coeffs_.resize(field.degree());
  for (int i = 0; i < field.degree(); ++i) r.coeffs_[i] = Rational(from_int128(acc[i]));
  return r;
}

CyclotomicNumber CyclotomicNumber::from_exponent_vector(int e, std::span<const std::int64_t> coefficients) {
  const auto& field = CyclotomicField::get(e);
  std::vector<__int128> acc(field.degree(), 0);
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k] == 0) continue;
    for (const auto& [i, v] : field.power(static_cast<std::int64_t>(k)))
      acc[i] += static_cast<__int128>(coefficients[k]) * v;
  }
  CyclotomicNumber r;
  r.conductor_ = e;
  r.coeffs_.resize(field.degree());
  for (int i = 0; i < field.degree(); ++i) r.coeffs_[i] = Rational(from_int128(acc[i]));
  return r;
}

CyclotomicNumber CyclotomicNumber::lifted(int e) const {
  if (e == conductor_) return *this;
  if (e % conductor_ != 0) throw InvalidArgument("cannot lift conductor " + std::to_string(conductor_) + " to " +
                                                 std::to_string(e));
  const auto& field = CyclotomicField::get(e);
  std::int64_t step = e / conductor_;
  CyclotomicNumber r;
  r.conductor_ = e;
  r.coeffs_.assign(field.degree(), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    for (const auto& [i, v] : field.power(static_cast<std::int64_t>(j) * step)) r.coeffs_[i] += coeffs_[j] * v;
  }
  return r;
}

CyclotomicNumber CyclotomicNumber::conj() const { return galois(-1); }

CyclotomicNumber CyclotomicNumber::galois(std::int64_t a) const {
  if (gcd64(mod_floor(a, conductor_), conductor_) != 1 && conductor_ > 1)
    throw InvalidArgument("Galois exponent not coprime to conductor");
  const auto& field = CyclotomicField::get(conductor_);
  CyclotomicNumber r;
  r.conductor_ = conductor_;
  r.coeffs_.assign(field.degree(), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    for (const auto& [i, v] : field.power(static_cast<std::int64_t>(j) * a)) r.coeffs_[i] += coeffs_[j] * v;
  }
  return r;
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool CyclotomicNumber::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw InvalidArgument("cyclotomic value is not rational: " + to_string());
  return coeffs_[0];
}

bool CyclotomicNumber::integral_terms(SparseIntVector& out) const {
  out.clear();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return false;
    long v = c.get_num().get_si();
    if (v >= kSmallLimit || v <= -kSmallLimit) return false;
    out.emplace_back(static_cast<int>(i), v);
  }
  return true;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& b) {
  if (b.conductor_ == conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
  }
  int e = static_cast<int>(lcm64(conductor_, b.conductor_));
  if (e != conductor_) *this = lifted(e);
  CyclotomicNumber bb = b.lifted(e);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += bb.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& b) { return *this += -b; }

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& b) { return *this = *this * b; }

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& r0) {
  Rational r = r0;
  r.canonicalize();
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  int e = static_cast<int>(lcm64(a.conductor_, b.conductor_));
  if (a.conductor_ != e) return a.lifted(e) * b;
  if (b.conductor_ != e) return a * b.lifted(e);
  if (b.conductor_ == 1 || b.is_rational()) {
    CyclotomicNumber r = a;
    return r *= b.coeffs_[0];
  }
  if (a.is_rational()) {
    CyclotomicNumber r = b;
    return r *= a.coeffs_[0];
  }
  const auto& field = CyclotomicField::get(e);
  int phi = field.degree();
  SparseIntVector ta, tb;
  if (a.integral_terms(ta) && b.integral_terms(tb)) {
    std::vector<__int128> wide(2 * phi, 0);
    for (const auto& [i, x] : ta)
      for (const auto& [j, y] : tb) wide[i + j] += static_cast<__int128>(x) * y;
    std::vector<__int128> red(phi, 0);
    for (int k = 0; k < 2 * phi; ++k) {
      if (wide[k] == 0) continue;
      if (k < phi) {
        red[k] += wide[k];
        continue;
      }
      for (const auto& [i, v] : field.power(k)) red[i] += wide[k] * v;
    }
    CyclotomicNumber r;
    r.conductor_ = e;
    r.coeffs_.resize(phi);
    for (int i = 0; i < phi; ++i) r.coeffs_[i] = Rational(from_int128(red[i]));
    return r;
  }
  std::vector<Rational> wide(2 * phi);
  for (int i = 0; i < phi; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      wide[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  CyclotomicNumber r;
  r.conductor_ = e;
  r.reduce_dense(wide);
  return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  int e = static_cast<int>(lcm64(a.conductor_, b.conductor_));
  return a.lifted(e).coeffs_ == b.lifted(e).coeffs_;
}

int CyclotomicNumber::compare(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor_ != b.conductor_) {
    int e = static_cast<int>(lcm64(a.conductor_, b.conductor_));
    return compare(a.lifted(e), b.lifted(e));
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << conductor_;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CyclotomicAccumulator::CyclotomicAccumulator(int conductor)
    : conductor_(conductor), fast_(static_cast<std::size_t>(conductor), 0) {}

void CyclotomicAccumulator::spill() {
  if (!slow_used_) {
    slow_.assign(static_cast<std::size_t>(conductor_), Rational(0));
    slow_used_ = true;
  }
}

void CyclotomicAccumulator::add(const CyclotomicNumber& a0, std::int64_t weight) {
  if (conductor_ % a0.conductor() == 0 && a0.integral_terms(ta_) && weight < kWeightLimit && weight > -kWeightLimit) {
    const int step = conductor_ / a0.conductor();
    for (const auto& [i, x] : ta_) fast_[static_cast<std::size_t>(i * step)] += static_cast<__int128>(x) * weight;
    return;
  }
  const CyclotomicNumber& a = a0.conductor() == conductor_ ? a0 : a0.lifted(conductor_);
  spill();
  const auto& c = a.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) slow_[i] += c[i] * Rational(static_cast<long>(weight));
}

void CyclotomicAccumulator::add_product(const CyclotomicNumber& a0, const CyclotomicNumber& b0, std::int64_t weight,
                                        bool conjugate_b) {
  const int e = conductor_;
  if (e % a0.conductor() == 0 && e % b0.conductor() == 0 && a0.integral_terms(ta_) && b0.integral_terms(tb_) &&
      weight < kWeightLimit && weight > -kWeightLimit) {
    const int sa = e / a0.conductor(), sb = e / b0.conductor();
    for (const auto& [i0, x] : ta_) {
      const int i = i0 * sa;
      __int128 wx = static_cast<__int128>(x) * weight;
      for (const auto& [j0, y] : tb_) {
        const int j = j0 * sb;
        int k = conjugate_b ? (i - j < 0 ? i - j + e : i - j) : (i + j >= e ? i + j - e : i + j);
        fast_[k] += wx * y;
      }
    }
    return;
  }
  const CyclotomicNumber& a = a0.conductor() == conductor_ ? a0 : a0.lifted(conductor_);
  const CyclotomicNumber& b = b0.conductor() == conductor_ ? b0 : b0.lifted(conductor_);
  spill();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  Rational w(static_cast<long>(weight));
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (sgn(ca[i]) == 0) continue;
    Rational wx = ca[i] * w;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (sgn(cb[j]) == 0) continue;
      int ii = static_cast<int>(i), jj = static_cast<int>(j);
      int k = conjugate_b ? static_cast<int>(mod_floor(ii - jj, e)) : (ii + jj) % e;
      slow_[k] += wx * cb[j];
    }
  }
}

CyclotomicNumber CyclotomicAccumulator::result(const Rational& scale) const {
  const auto& field = CyclotomicField::get(conductor_);
  int phi = field.degree();
  std::vector<__int128> red(phi, 0);
  for (int k = 0; k < conductor_; ++k) {
    if (fast_[k] == 0) continue;
    for (const auto& [i, v] : field.power(k)) red[i] += fast_[k] * v;
  }
  std::vector<Rational> coeffs(phi);
  for (int i = 0; i < phi; ++i) coeffs[i] = Rational(from_int128(red[i]));
  if (slow_used_) {
    for (int k = 0; k < conductor_; ++k) {
      if (sgn(slow_[k]) == 0) continue;
      for (const auto& [i, v] : field.power(k)) coeffs[i] += slow_[k] * v;
    }
  }
  for (auto& c : coeffs) c *= scale;
  return CyclotomicNumber(conductor_, std::move(coeffs));
}

}  // namespace liechar
