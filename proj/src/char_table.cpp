#include "liechar/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "liechar/errors.hpp"
#include "liechar/finite_field.hpp"

namespace liechar {

ClassFunction::ClassFunction(std::shared_ptr<const ConjugacyData> classes, std::vector<CyclotomicNumber> values)
    : classes_(std::move(classes)), values_(std::move(values)) {
  if (!classes_) throw InvalidArgument("class function without a group");
  if (static_cast<int>(values_.size()) != classes_->class_count())
    throw InvalidArgument("class function has " + std::to_string(values_.size()) + " values for " +
                          std::to_string(classes_->class_count()) + " classes");
}

ClassFunction ClassFunction::zero(std::shared_ptr<const ConjugacyData> classes) {
  std::vector<CyclotomicNumber> v(static_cast<std::size_t>(classes->class_count()));
  return ClassFunction(std::move(classes), std::move(v));
}

ClassFunction ClassFunction::trivial(std::shared_ptr<const ConjugacyData> classes) {
  std::vector<CyclotomicNumber> v(static_cast<std::size_t>(classes->class_count()), CyclotomicNumber(1));
  return ClassFunction(std::move(classes), std::move(v));
}

ClassFunction ClassFunction::regular(std::shared_ptr<const ConjugacyData> classes) {
  std::vector<CyclotomicNumber> v(static_cast<std::size_t>(classes->class_count()));
  v[0] = CyclotomicNumber(static_cast<long>(classes->group_order));
  return ClassFunction(std::move(classes), std::move(v));
}

bool ClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const CyclotomicNumber& x) { return x.is_zero(); });
}

void ClassFunction::require_same(const ClassFunction& b) const {
  if (classes_ != b.classes_)
    throw InvalidArgument("class functions on different groups: " + (classes_ ? classes_->name() : "?") + " vs " +
                          (b.classes_ ? b.classes_->name() : "?"));
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& b) {
  require_same(b);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += b.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& b) {
  require_same(b);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= b.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const CyclotomicNumber& c) {
  for (auto& v : values_) v = v * c;
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  a.require_same(b);
  ClassFunction r = a;
  for (std::size_t i = 0; i < r.values_.size(); ++i) r.values_[i] = a.values_[i] * b.values_[i];
  return r;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.classes_ == b.classes_ && a.values_ == b.values_;
}

namespace {

int common_conductor(const std::vector<CyclotomicNumber>& a, const std::vector<CyclotomicNumber>& b) {
  std::int64_t e = 1;
  for (const auto& x : a) e = lcm64(e, x.conductor());
  for (const auto& x : b) e = lcm64(e, x.conductor());
  return static_cast<int>(e);
}

}  // namespace

CyclotomicNumber inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.classes_ptr() != g.classes_ptr())
    throw InvalidArgument("inner product of class functions on different groups");
  const auto& c = f.classes();
  CyclotomicAccumulator acc(common_conductor(f.values(), g.values()));
  for (int k = 0; k < c.class_count(); ++k)
    acc.add_product(f[k], g[k], static_cast<std::int64_t>(c.sizes[static_cast<std::size_t>(k)]), true);
  return acc.result(Rational(1, static_cast<unsigned long>(c.group_order)));
}

ClassFunction dual_character(const ClassFunction& f) {
  const auto& c = f.classes();
  std::vector<CyclotomicNumber> v(static_cast<std::size_t>(c.class_count()));
  for (int k = 0; k < c.class_count(); ++k) v[static_cast<std::size_t>(k)] = f[c.inverse_class[static_cast<std::size_t>(k)]];
  return ClassFunction(f.classes_ptr(), std::move(v));
}

ClassFunction twist_by_automorphism(const ClassFunction& f, const GroupAutomorphism& sigma) {
  if (f.classes_ptr() != sigma.classes_ptr()) throw InvalidArgument("automorphism of a different group");
  std::vector<CyclotomicNumber> v(static_cast<std::size_t>(f.size()));
  for (int k = 0; k < f.size(); ++k) v[static_cast<std::size_t>(sigma.apply_class(k))] = f[k];
  return ClassFunction(f.classes_ptr(), std::move(v));
}

ClassFunction induce(const SubgroupFunction& psi) {
  const auto& c = *psi.ambient;
  if (psi.elements.size() != psi.values.size()) throw InvalidArgument("subgroup function length mismatch");
  if (psi.elements.empty() || c.group_order % psi.elements.size() != 0)
    throw InvalidArgument("subgroup order does not divide the group order");
  int r = c.class_count();
  std::vector<std::vector<CyclotomicNumber>> bucket(static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < psi.elements.size(); ++i)
    bucket[static_cast<std::size_t>(c.class_of_element(psi.elements[i]))].push_back(psi.values[i]);
  std::int64_t e = 1;
  for (const auto& x : psi.values) e = lcm64(e, x.conductor());
  std::vector<CyclotomicNumber> v(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    if (bucket[static_cast<std::size_t>(k)].empty()) continue;
    CyclotomicAccumulator acc(static_cast<int>(e));
    for (const auto& x : bucket[static_cast<std::size_t>(k)]) acc.add(x, 1);
    v[static_cast<std::size_t>(k)] = acc.result(Rational(static_cast<long>(c.centralizer_order(k)),
                                                         static_cast<unsigned long>(psi.elements.size())));
  }
  return ClassFunction(psi.ambient, std::move(v));
}

SubgroupFunction restrict_to(const ClassFunction& f, const std::vector<ElementId>& elements) {
  SubgroupFunction s{f.classes_ptr(), elements, {}};
  s.values.reserve(elements.size());
  for (ElementId x : elements) s.values.push_back(f[f.classes().class_of_element(x)]);
  return s;
}

CyclotomicNumber subgroup_inner_product(const SubgroupFunction& a, const SubgroupFunction& b) {
  if (a.ambient != b.ambient || a.elements != b.elements)
    throw InvalidArgument("subgroup functions on different subgroups");
  CyclotomicAccumulator acc(common_conductor(a.values, b.values));
  for (std::size_t i = 0; i < a.values.size(); ++i) acc.add_product(a.values[i], b.values[i], 1, true);
  return acc.result(Rational(1, static_cast<unsigned long>(a.elements.size())));
}

CharacterTable::CharacterTable(std::shared_ptr<const ConjugacyData> classes, std::vector<ClassFunction> irreducibles,
                               std::int64_t modulus)
    : classes_(std::move(classes)), irr_(std::move(irreducibles)), modulus_(modulus) {
  for (const auto& x : irr_)
    if (x.classes_ptr() != classes_) throw InvalidArgument("irreducible on a different group");
  dual_.resize(irr_.size());
  for (std::size_t i = 0; i < irr_.size(); ++i) {
    dual_[i] = index_of(dual_character(irr_[i]));
    if (dual_[i] < 0) throw InconsistentData("dual of an irreducible is missing from the table");
  }
}

std::vector<long> CharacterTable::degrees() const {
  std::vector<long> d;
  for (const auto& x : irr_) d.push_back(x.degree().rational_value().get_num().get_si());
  return d;
}

int CharacterTable::index_of(const ClassFunction& f) const {
  for (std::size_t i = 0; i < irr_.size(); ++i)
    if (irr_[i] == f) return static_cast<int>(i);
  return -1;
}

std::vector<long> CharacterTable::decompose(const ClassFunction& f) const {
  std::vector<long> m;
  for (const auto& x : irr_) {
    CyclotomicNumber ip = inner_product(f, x);
    if (!ip.is_rational() || ip.rational_value().get_den() != 1)
      throw InconsistentData("class function is not a virtual character: <f, chi> = " + ip.to_string());
    m.push_back(ip.rational_value().get_num().get_si());
  }
  return m;
}

std::vector<int> CharacterTable::twist_permutation(const GroupAutomorphism& sigma) const {
  std::vector<int> perm;
  for (const auto& x : irr_) {
    int j = index_of(twist_by_automorphism(x, sigma));
    if (j < 0) throw InconsistentData("twist of an irreducible by " + sigma.name() + " is not irreducible");
    perm.push_back(j);
  }
  return perm;
}

void CharacterTable::verify_orthogonality() const {
  const auto& c = *classes_;
  int r = c.class_count();
  if (size() != r) throw InconsistentData("table has " + std::to_string(size()) + " rows for " + std::to_string(r) + " classes");
  for (int i = 0; i < size(); ++i)
    for (int j = i; j < size(); ++j) {
      CyclotomicNumber ip = inner_product(irr_[static_cast<std::size_t>(i)], irr_[static_cast<std::size_t>(j)]);
      if (ip != CyclotomicNumber(i == j ? 1 : 0))
        throw InconsistentData("row orthogonality fails for rows " + std::to_string(i) + ", " + std::to_string(j) +
                               ": " + ip.to_string());
    }
  std::int64_t e = classes_->exponent;
  for (int a = 0; a < r; ++a)
    for (int b = a; b < r; ++b) {
      CyclotomicAccumulator acc(static_cast<int>(e));
      for (const auto& x : irr_) acc.add_product(x[a], x[b], 1, true);
      CyclotomicNumber s = acc.result();
      CyclotomicNumber expect(a == b ? static_cast<long>(c.centralizer_order(a)) : 0L);
      if (s != expect)
        throw InconsistentData("column orthogonality fails for classes " + std::to_string(a) + ", " +
                               std::to_string(b) + ": " + s.to_string());
    }
  Integer sum = 0;
  for (long d : degrees()) sum += Integer(d) * d;
  if (sum != Integer(static_cast<unsigned long>(c.group_order)))
    throw InconsistentData("sum of squared degrees is " + sum.get_str());
}

std::int64_t splitting_prime(std::int64_t e, std::int64_t lower, std::int64_t bound) {
  std::int64_t l = lower + 1 + mod_floor(-lower, e);
  for (; l < bound; l += e)
    if (is_prime(l)) return l;
  throw PreconditionFailed("no prime l = 1 mod " + std::to_string(e) + " with " + std::to_string(lower) +
                           " < l < " + std::to_string(bound));
}

namespace {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // constant term first, no trailing zeros

class ModArith {
 public:
  explicit ModArith(u64 p) : p_(p) {}
  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return a * b % p_; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p_ == 0) throw InconsistentData("inverse of zero modulo l");
    return pow(a, p_ - 2);
  }
  u64 from(std::int64_t x) const { return static_cast<u64>(mod_floor(x, static_cast<std::int64_t>(p_))); }

  void trim(Poly& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i])
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    return rem(r, m);
  }
  Poly rem(Poly a, const Poly& m) const {
    trim(a);
    u64 lead_inv = inv(m.back());
    while (a.size() >= m.size()) {
      u64 c = mul(a.back(), lead_inv);
      std::size_t shift = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = sub(a[shift + i], mul(c, m[i]));
      trim(a);
    }
    return a;
  }
  Poly powmod(Poly base, u64 e, const Poly& m) const {
    Poly r{1};
    r = rem(r, m);
    base = rem(base, m);
    while (e) {
      if (e & 1) r = mulmod(r, base, m);
      base = mulmod(base, base, m);
      e >>= 1;
    }
    return r;
  }
  Poly gcd(Poly a, Poly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Poly t = rem(a, b);
      a = std::move(b);
      b = std::move(t);
    }
    if (!a.empty()) {
      u64 li = inv(a.back());
      for (auto& x : a) x = mul(x, li);
    }
    return a;
  }

  // Distinct roots of f, all of which are assumed to lie in F_p.
  std::vector<u64> roots(Poly f) const {
    trim(f);
    std::vector<u64> out;
    if (f.size() <= 1) return out;
    Poly xp = powmod(Poly{0, 1}, p_, f);
    xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
    xp[1] = sub(xp[1], 1);
    Poly g = gcd(f, xp);
    split(g, out, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void split(const Poly& g, std::vector<u64>& out, u64 shift) const {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
      out.push_back(mul(p_ - g[0], inv(g[1])));
      return;
    }
    for (u64 a = shift + 1;; ++a) {
      Poly h = powmod(Poly{a % p_, 1}, (p_ - 1) / 2, g);
      h.resize(std::max<std::size_t>(h.size(), 1), 0);
      h[0] = sub(h[0], 1);
      Poly d = gcd(g, h);
      if (d.size() > 1 && d.size() < g.size()) {
        split(d, out, a);
        // g / d
        Poly quotient;
        {
          Poly rest = g;
          Poly q(g.size() - d.size() + 1, 0);
          u64 li = inv(d.back());
          while (rest.size() >= d.size()) {
            u64 c = mul(rest.back(), li);
            std::size_t s = rest.size() - d.size();
            q[s] = c;
            for (std::size_t i = 0; i < d.size(); ++i) rest[s + i] = sub(rest[s + i], mul(c, d[i]));
            trim(rest);
            if (rest.size() < d.size()) break;
          }
          quotient = q;
        }
        trim(quotient);
        split(quotient, out, a);
        return;
      }
      if (a > shift + 200) throw InconsistentData("root splitting failed to separate roots");
    }
  }

  u64 p_;
};

using Mat = std::vector<std::vector<u64>>;

// Hessenberg reduction followed by the standard recurrence.
Poly characteristic_polynomial(const ModArith& F, Mat h) {
  int n = static_cast<int>(h.size());
  for (int m = 1; m + 1 < n; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i)
      if (h[i][m - 1] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (int i = 0; i < n; ++i) std::swap(h[i][piv], h[i][m]);
    }
    u64 inv = F.inv(h[m][m - 1]);
    for (int i = m + 1; i < n; ++i) {
      if (h[i][m - 1] == 0) continue;
      u64 u = F.mul(h[i][m - 1], inv);
      for (int j = 0; j < n; ++j) h[i][j] = F.sub(h[i][j], F.mul(u, h[m][j]));
      for (int j = 0; j < n; ++j) h[j][m] = F.add(h[j][m], F.mul(u, h[j][i]));
    }
  }
  std::vector<Poly> p(static_cast<std::size_t>(n) + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    Poly cur(static_cast<std::size_t>(m) + 1, 0);
    const Poly& prev = p[m - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = F.add(cur[i + 1], prev[i]);
      cur[i] = F.sub(cur[i], F.mul(h[m - 1][m - 1], prev[i]));
    }
    u64 t = 1;
    for (int i = m - 1; i >= 1; --i) {
      t = F.mul(t, h[i][i - 1]);
      u64 coef = F.mul(t, h[i - 1][m - 1]);
      const Poly& pi = p[i - 1];
      for (std::size_t k = 0; k < pi.size(); ++k) cur[k] = F.sub(cur[k], F.mul(coef, pi[k]));
    }
    p[m] = cur;
  }
  return p[n];
}

// Basis of the right null space of a (rows x cols) matrix.
Mat null_space(const ModArith& F, Mat a, int cols) {
  int rows = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    u64 inv = F.inv(a[r][c]);
    for (auto& x : a[r]) x = F.mul(x, inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  Mat basis;
  for (int fcol = 0; fcol < cols; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<u64> v(static_cast<std::size_t>(cols), 0);
    v[fcol] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = F.sub(0, a[i][fcol]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Row-reduce a basis (rows are vectors) and return pivot columns.
std::vector<int> row_reduce(const ModArith& F, Mat& b, int cols) {
  std::vector<int> pivots;
  int r = 0;
  int rows = static_cast<int>(b.size());
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (b[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(b[piv], b[r]);
    u64 inv = F.inv(b[r][c]);
    for (auto& x : b[r]) x = F.mul(x, inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || b[i][c] == 0) continue;
      u64 f = b[i][c];
      for (int j = 0; j < cols; ++j) b[i][j] = F.sub(b[i][j], F.mul(f, b[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  if (r != rows) throw InconsistentData("dependent basis in eigenspace splitting");
  return pivots;
}

u64 primitive_root(const ModArith& F) {
  u64 p = F.p();
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 f : factors)
      if (F.pow(g, (p - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

}  // namespace

CharacterTable character_table(std::shared_ptr<const ConjugacyData> classes) {
  const ConjugacyData& c = *classes;
  const GroupRealization& g = *c.group;
  const int r = c.class_count();
  const std::int64_t order = static_cast<std::int64_t>(c.group_order);
  const std::int64_t e = c.exponent;
  const std::int64_t ell = splitting_prime(e, 2 * order);
  ModArith F(static_cast<u64>(ell));

  // a[j][i][k] = #{x in C_i : x^{-1} z_k in C_j}, the class multiplication coefficients
  std::vector<std::uint32_t> a(static_cast<std::size_t>(r) * r * r, 0);
  auto at = [r](int j, int i, int k) { return (static_cast<std::size_t>(j) * r + i) * r + k; };
  for (int k = 0; k < r; ++k) {
    ElementId z = c.representatives[static_cast<std::size_t>(k)];
    for (std::size_t x = 0; x < g.order(); ++x) {
      int i = c.class_of[x];
      int j = c.class_of_element(g.mul(g.inverse(static_cast<ElementId>(x)), z));
      ++a[at(j, i, k)];
    }
  }

  // Common right eigenvectors v of all A_j with (A_j)_{ik} = a[j][i][k].
  std::vector<Mat> pending{Mat()};
  for (int i = 0; i < r; ++i) {
    std::vector<u64> v(static_cast<std::size_t>(r), 0);
    v[i] = 1;
    pending[0].push_back(v);
  }
  std::vector<std::vector<u64>> eigen;
  while (!pending.empty()) {
    Mat basis = std::move(pending.back());
    pending.pop_back();
    int d = static_cast<int>(basis.size());
    if (d == 1) {
      eigen.push_back(basis[0]);
      continue;
    }
    auto pivots = row_reduce(F, basis, r);
    bool split = false;
    for (int j = 1; j < r && !split; ++j) {
      // restricted matrix: A_j b_t = sum_s R[s][t] b_s, coordinates read off pivot columns
      Mat rm(static_cast<std::size_t>(d), std::vector<u64>(static_cast<std::size_t>(d), 0));
      for (int t = 0; t < d; ++t) {
        for (int s = 0; s < d; ++s) {
          int i = pivots[s];
          u64 acc = 0;
          for (int k = 0; k < r; ++k)
            if (basis[t][k]) acc = (acc + static_cast<u64>(a[at(j, i, k)]) % F.p() * basis[t][k]) % F.p();
          rm[s][t] = acc;
        }
      }
      auto roots = F.roots(characteristic_polynomial(F, rm));
      if (roots.size() < 2) continue;
      split = true;
      int covered = 0;
      for (u64 lam : roots) {
        Mat shifted = rm;
        for (int s = 0; s < d; ++s) shifted[s][s] = F.sub(shifted[s][s], lam);
        Mat ker = null_space(F, shifted, d);
        Mat sub;
        for (const auto& coords : ker) {
          std::vector<u64> v(static_cast<std::size_t>(r), 0);
          for (int t = 0; t < d; ++t)
            if (coords[t])
              for (int k = 0; k < r; ++k) v[k] = F.add(v[k], F.mul(coords[t], basis[t][k]));
          sub.push_back(std::move(v));
        }
        covered += static_cast<int>(sub.size());
        pending.push_back(std::move(sub));
      }
      if (covered != d) throw InconsistentData("class matrix is not diagonalizable modulo l");
    }
    if (!split) throw InconsistentData("class matrices fail to separate an eigenspace of dimension " + std::to_string(d));
  }
  if (static_cast<int>(eigen.size()) != r) throw InconsistentData("wrong number of eigenvectors");

  u64 z = F.pow(primitive_root(F), static_cast<u64>((ell - 1) / e));
  std::vector<ClassFunction> irr;
  for (auto& v : eigen) {
    // normalize so the identity class coordinate is 1
    u64 n0 = F.inv(v[0]);
    for (auto& x : v) x = F.mul(x, n0);
    u64 s = 0;
    for (int i = 0; i < r; ++i)
      s = F.add(s, F.mul(F.mul(v[i], v[c.inverse_class[i]]), F.inv(static_cast<u64>(c.sizes[i]) % F.p())));
    u64 d2 = F.mul(static_cast<u64>(order) % F.p(), F.inv(s));
    auto d = static_cast<u64>(std::llround(std::sqrt(static_cast<double>(d2))));
    while (d * d > d2) --d;
    while ((d + 1) * (d + 1) <= d2) ++d;
    if (d * d != d2 || d == 0) throw InconsistentData("degree is not an integer square root");
    std::vector<u64> chi(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) chi[i] = F.mul(F.mul(v[i], d), F.inv(static_cast<u64>(c.sizes[i]) % F.p()));
    std::vector<CyclotomicNumber> values(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      int o = c.orders[i];
      u64 zo = F.pow(z, static_cast<u64>(e / o));
      u64 zo_inv = F.inv(zo);
      u64 o_inv = F.inv(static_cast<u64>(o));
      std::vector<std::pair<std::int64_t, std::int64_t>> terms;
      for (int k = 0; k < o; ++k) {
        u64 acc = 0;
        u64 step = F.pow(zo_inv, static_cast<u64>(k));
        u64 w = 1;
        for (int m = 0; m < o; ++m) {
          acc = F.add(acc, F.mul(chi[c.power_maps[i][m]], w));
          w = F.mul(w, step);
        }
        u64 mult = F.mul(acc, o_inv);
        if (mult > d) throw InconsistentData("eigenvalue multiplicity out of range while lifting");
        if (mult) terms.emplace_back(k, static_cast<std::int64_t>(mult));
      }
      values[i] = CyclotomicNumber::from_integer_powers(o, terms);
    }
    if (values[0] != CyclotomicNumber(static_cast<long>(d))) throw InconsistentData("lifted degree mismatch");
    irr.emplace_back(classes, std::move(values));
  }
  std::sort(irr.begin(), irr.end(), [](const ClassFunction& x, const ClassFunction& y) {
    int cd = CyclotomicNumber::compare(x.degree(), y.degree());
    if (cd != 0) return cd < 0;
    for (int k = 1; k < x.size(); ++k) {
      int cv = CyclotomicNumber::compare(x[k], y[k]);
      if (cv != 0) return cv < 0;
    }
    return false;
  });
  CharacterTable table(classes, std::move(irr), ell);
  table.verify_orthogonality();
  return table;
}

std::vector<std::uint64_t> twisted_square_counts(const GroupAutomorphism& iota) {
  if (!iota.is_involution()) throw InvalidArgument(iota.name() + " is not an involution");
  const auto& c = iota.classes();
  const auto& g = *c.group;
  std::vector<std::uint64_t> n(static_cast<std::size_t>(c.class_count()), 0);
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto id = static_cast<ElementId>(x);
    ++n[static_cast<std::size_t>(c.class_of_element(g.mul(id, iota.apply(id))))];
  }
  return n;
}

CyclotomicNumber twisted_fs_indicator(const ClassFunction& chi, const std::vector<std::uint64_t>& square_counts) {
  const auto& c = chi.classes();
  std::int64_t e = 1;
  for (const auto& v : chi.values()) e = lcm64(e, v.conductor());
  CyclotomicAccumulator acc(static_cast<int>(e));
  for (int k = 0; k < c.class_count(); ++k)
    if (square_counts[static_cast<std::size_t>(k)]) acc.add(chi[k], static_cast<std::int64_t>(square_counts[static_cast<std::size_t>(k)]));
  return acc.result(Rational(1, static_cast<unsigned long>(c.group_order)));
}

CyclotomicNumber twisted_fs_indicator(const ClassFunction& chi, const GroupAutomorphism& iota) {
  if (chi.classes_ptr() != iota.classes_ptr()) throw InvalidArgument("automorphism of a different group");
  return twisted_fs_indicator(chi, twisted_square_counts(iota));
}

}  // namespace liechar
