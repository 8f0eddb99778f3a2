#include "liechar/finite_field.hpp"

#include <map>
#include <mutex>

#include "liechar/errors.hpp"

namespace liechar {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> prime_power(std::int64_t q) {
  if (q < 2) throw InvalidArgument("field order must be a prime power >= 2, got " + std::to_string(q));
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  std::int64_t m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) throw InvalidArgument("field order must be a prime power, got " + std::to_string(q));
  return {static_cast<int>(p), k};
}

namespace {

// Multiply a digit vector by x modulo the monic polynomial poly (constant term first).
void times_x(std::vector<int>& v, const std::vector<int>& poly, int p) {
  int k = static_cast<int>(v.size());
  int top = v[k - 1];
  for (int i = k - 1; i > 0; --i) v[i] = ((v[i - 1] - top * poly[i]) % p + p) % p;
  v[0] = ((-top * poly[0]) % p + p) % p;
}

int digits_to_code(const std::vector<int>& v, int p) {
  int c = 0;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) c = c * p + v[i];
  return c;
}

}  // namespace

FiniteField::FiniteField(int p, int k) : p_(p), k_(k), q_(1) {
  if (!is_prime(p) || k < 1) throw InvalidArgument("invalid field parameters");
  for (int i = 0; i < k; ++i) q_ *= p;
  if (q_ > (1 << 24)) throw UnsupportedSpec("field too large: " + std::to_string(q_));
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, -1);

  // Candidate lower coefficients (a_{k-1}, ..., a_0) read as a base-p number, smallest first.
  for (int c = 0; c < q_; ++c) {
    std::vector<int> poly(k + 1);
    int t = c;
    for (int i = 0; i < k; ++i) {
      poly[i] = t % p;
      t /= p;
    }
    poly[k] = 1;
    if (poly[0] == 0) continue;
    std::vector<int> v(k, 0);
    if (k == 1) {
      v[0] = (p - poly[0]) % p;
    } else {
      v[1] = 1;
    }
    std::vector<int> cur(k, 0);
    cur[0] = 1;
    std::vector<int> seen(q_, 0);
    bool ok = true;
    for (int j = 0; j < q_ - 1; ++j) {
      int code = digits_to_code(cur, p);
      if (code == 0 || seen[code] || (j > 0 && code == 1)) {
        ok = false;
        break;
      }
      seen[code] = 1;
      exp_[j] = code;
      if (k == 1) {
        cur[0] = (cur[0] * v[0]) % p;
      } else {
        times_x(cur, poly, p);
      }
    }
    if (!ok || digits_to_code(cur, p) != 1) continue;
    poly_ = poly;
    break;
  }
  if (poly_.empty()) throw InconsistentData("no primitive polynomial found");
  for (int j = 0; j < q_ - 1; ++j) {
    exp_[j + q_ - 1] = exp_[j];
    log_[exp_[j]] = j;
  }
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    int r = 0, m = 1, t = a;
    for (int i = 0; i < k_; ++i) {
      int d = t % p_;
      t /= p_;
      r += ((p_ - d) % p_) * m;
      m *= p_;
    }
    neg_[a] = r;
  }
  if (p_ != 2 && q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        int r = 0, m = 1, x = a, y = b;
        for (int i = 0; i < k_; ++i) {
          r += ((x % p_ + y % p_) % p_) * m;
          x /= p_;
          y /= p_;
          m *= p_;
        }
        add_table_[static_cast<std::size_t>(a) * q_ + b] = r;
      }
  }
}

std::shared_ptr<const FiniteField> FiniteField::get(int p, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot.reset(new FiniteField(p, k));
  return slot;
}

std::shared_ptr<const FiniteField> FiniteField::of_order(std::int64_t q) {
  auto [p, k] = prime_power(q);
  return get(p, k);
}

int FiniteField::add(int a, int b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  int r = 0, m = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * m;
    a /= p_;
    b /= p_;
    m *= p_;
  }
  return r;
}

int FiniteField::neg(int a) const { return neg_[a]; }

int FiniteField::inv(int a) const {
  if (a == 0) throw InvalidArgument("inverse of zero in F_" + std::to_string(q_));
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int FiniteField::pow(int a, std::int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw InvalidArgument("negative power of zero");
    return 0;
  }
  return exp(static_cast<std::int64_t>(log_[a]) * mod_floor(e, q_ - 1));
}

int FiniteField::log(int a) const {
  if (a <= 0 || a >= q_) throw InvalidArgument("logarithm of zero or invalid element");
  return log_[a];
}

int FiniteField::trace(int a) const {
  int t = 0;
  int x = a;
  for (int i = 0; i < k_; ++i) {
    t = add(t, x);
    x = pow(x, p_);
  }
  if (t >= p_) throw InconsistentData("trace outside prime field");
  return t;
}

FiniteFieldElement FiniteField::element(int code) const {
  if (code < 0 || code >= q_) throw InvalidArgument("field element code out of range");
  FiniteFieldElement e{p_, k_, std::vector<int>(k_)};
  for (int i = 0; i < k_; ++i) {
    e.coordinates[i] = code % p_;
    code /= p_;
  }
  return e;
}

int FiniteField::code(const FiniteFieldElement& x) const {
  if (x.p != p_ || x.k != k_ || static_cast<int>(x.coordinates.size()) != k_)
    throw InvalidArgument("element belongs to a different field");
  int c = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    if (x.coordinates[i] < 0 || x.coordinates[i] >= p_) throw InvalidArgument("coordinate out of range");
    c = c * p_ + x.coordinates[i];
  }
  return c;
}

CyclotomicNumber multiplicative_embedding(const FiniteField& field, int x, int target_conductor) {
  if (x == 0) throw InvalidArgument("multiplicative_embedding of zero");
  int m = field.order() - 1;
  if (target_conductor % m != 0)
    throw InvalidArgument("target conductor " + std::to_string(target_conductor) + " not divisible by " +
                          std::to_string(m));
  return CyclotomicNumber::root_of_unity(target_conductor,
                                         static_cast<std::int64_t>(field.log(x)) * (target_conductor / m));
}

std::int64_t discrete_log(const FiniteField& field, int x, int base) {
  if (x == 0) throw InvalidArgument("discrete_log of zero");
  std::int64_t m = field.order() - 1;
  std::int64_t lb = field.log(base);
  if (gcd64(lb, m) != 1 && m > 1) throw InvalidArgument("base does not generate the multiplicative group");
  if (m == 1) return 0;
  // inverse of lb mod m
  std::int64_t a = lb, b = m, u = 1, v = 0;
  while (b != 0) {
    std::int64_t t = a / b;
    a -= t * b;
    std::swap(a, b);
    u -= t * v;
    std::swap(u, v);
  }
  return mod_floor(static_cast<std::int64_t>(field.log(x)) * mod_floor(u, m), m);
}

FieldEmbedding::FieldEmbedding(std::shared_ptr<const FiniteField> small, std::shared_ptr<const FiniteField> big)
    : small_(std::move(small)), big_(std::move(big)) {
  if (small_->characteristic() != big_->characteristic() || big_->degree() % small_->degree() != 0)
    throw InvalidArgument("no embedding between these fields");
  const auto& poly = small_->defining_polynomial();
  int root = -1;
  for (int y = 1; y < big_->order() && root < 0; ++y) {
    int v = 0;
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i) v = big_->add(big_->mul(v, y), poly[i]);
    if (v == 0) root = y;
  }
  if (root < 0) throw InconsistentData("defining polynomial has no root in the extension");
  image_.assign(small_->order(), 0);
  preimage_.assign(big_->order(), -1);
  preimage_[0] = 0;
  int cur = 1;
  for (int j = 0; j < small_->order() - 1; ++j) {
    int s = small_->exp(j);
    image_[s] = cur;
    preimage_[cur] = s;
    cur = big_->mul(cur, root);
  }
}

int FieldEmbedding::preimage(int big_code) const { return preimage_[static_cast<std::size_t>(big_code)]; }

}  // namespace liechar
