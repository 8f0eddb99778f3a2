#include "liechar/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

#include "liechar/errors.hpp"
#include "liechar/integer_matrix.hpp"

namespace liechar {

GroupSpec GroupSpec::parse(std::string_view text) {
  GroupSpec s;
  std::string_view rest;
  if (text.rfind("GL", 0) == 0) {
    s.family = Family::GL;
    rest = text.substr(2);
  } else if (text.rfind("SL", 0) == 0) {
    s.family = Family::SL;
    rest = text.substr(2);
  } else {
    throw UnsupportedSpec("group spec must start with GL or SL: '" + std::string(text) + "'");
  }
  if (rest.size() < 4 || rest[0] < '0' || rest[0] > '9' || rest[1] != '(' || rest.back() != ')')
    throw UnsupportedSpec("malformed group spec '" + std::string(text) + "', expected e.g. GL2(3)");
  s.n = rest[0] - '0';
  if (s.n < 1 || s.n > 3) throw UnsupportedSpec("rank must be 1, 2 or 3 in '" + std::string(text) + "'");
  auto digits = rest.substr(2, rest.size() - 3);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), s.q);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw UnsupportedSpec("malformed field order in '" + std::string(text) + "'");
  try {
    prime_power(s.q);
  } catch (const InvalidArgument&) {
    throw UnsupportedSpec("field order is not a prime power in '" + std::string(text) + "'");
  }
  if (s.q > 255) throw UnsupportedSpec("field order above 255 is not supported: '" + std::string(text) + "'");
  return s;
}

std::string GroupSpec::to_string() const {
  return std::string(family == Family::GL ? "GL" : "SL") + std::to_string(n) + "(" + std::to_string(q) + ")";
}

std::uint64_t GroupSpec::order() const {
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= static_cast<std::uint64_t>(q);
  std::uint64_t o = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    o *= qn - qi;
    qi *= static_cast<std::uint64_t>(q);
  }
  if (family == Family::SL) o /= static_cast<std::uint64_t>(q - 1);
  return o;
}

MatrixAlgebra::MatrixAlgebra(std::shared_ptr<const FiniteField> field, int n)
    : field_(std::move(field)), n_(n), q_(field_->order()) {
  if (n < 1 || n > 3) throw UnsupportedSpec("matrix size must be 1..3");
  if (q_ > 256) throw UnsupportedSpec("matrix entries limited to fields of order <= 256");
  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint8_t>(field_->add(a, b));
      mul_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint8_t>(field_->mul(a, b));
    }
}

Matrix MatrixAlgebra::identity() const { return scalar(1); }

Matrix MatrixAlgebra::scalar(int c) const {
  Matrix m;
  for (int i = 0; i < n_; ++i) m.set(i, i, c);
  return m;
}

Matrix MatrixAlgebra::diagonal(const std::vector<int>& d) const {
  if (static_cast<int>(d.size()) != n_) throw InvalidArgument("diagonal has wrong length");
  Matrix m;
  for (int i = 0; i < n_; ++i) m.set(i, i, d[i]);
  return m;
}

Matrix MatrixAlgebra::elementary(int i, int j, int c) const {
  Matrix m = identity();
  m.set(i, j, i == j ? c : field_->add(m.at(i, j), c));
  return m;
}

Matrix MatrixAlgebra::mul(const Matrix& x, const Matrix& y) const {
  Matrix r;
  const std::uint8_t* A = add_.data();
  const std::uint8_t* M = mul_.data();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int s = 0;
      for (int k = 0; k < n_; ++k) s = A[s * q_ + M[x.at(i, k) * q_ + y.at(k, j)]];
      r.set(i, j, s);
    }
  return r;
}

Matrix MatrixAlgebra::add(const Matrix& x, const Matrix& y) const {
  Matrix r;
  for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = add_[static_cast<std::size_t>(x.a[k]) * q_ + y.a[k]];
  return r;
}

Matrix MatrixAlgebra::sub(const Matrix& x, const Matrix& y) const {
  Matrix r;
  for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = static_cast<std::uint8_t>(field_->sub(x.a[k], y.a[k]));
  return r;
}

Matrix MatrixAlgebra::scale(const Matrix& x, int c) const {
  Matrix r;
  for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = mul_[static_cast<std::size_t>(x.a[k]) * q_ + c];
  return r;
}

Matrix MatrixAlgebra::transpose(const Matrix& x) const {
  Matrix r;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.set(i, j, x.at(j, i));
  return r;
}

Matrix MatrixAlgebra::power(const Matrix& x, std::int64_t e) const {
  Matrix base = x;
  if (e < 0) {
    base = inverse(x);
    e = -e;
  }
  Matrix r = identity();
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Matrix MatrixAlgebra::inverse(const Matrix& x) const {
  const FiniteField& f = *field_;
  int a[3][6] = {};
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) a[i][j] = x.at(i, j);
    a[i][n_ + i] = 1;
  }
  for (int c = 0; c < n_; ++c) {
    int r = c;
    while (r < n_ && a[r][c] == 0) ++r;
    if (r == n_) throw InvalidArgument("singular matrix has no inverse");
    if (r != c)
      for (int j = 0; j < 2 * n_; ++j) std::swap(a[r][j], a[c][j]);
    int inv = f.inv(a[c][c]);
    for (int j = 0; j < 2 * n_; ++j) a[c][j] = f.mul(a[c][j], inv);
    for (int i = 0; i < n_; ++i) {
      if (i == c || a[i][c] == 0) continue;
      int factor = a[i][c];
      for (int j = 0; j < 2 * n_; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[c][j]));
    }
  }
  Matrix r;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.set(i, j, a[i][n_ + j]);
  return r;
}

int MatrixAlgebra::det(const Matrix& x) const {
  const FiniteField& f = *field_;
  auto m = [&](int i, int j) { return x.at(i, j); };
  if (n_ == 1) return m(0, 0);
  if (n_ == 2) return f.sub(f.mul(m(0, 0), m(1, 1)), f.mul(m(0, 1), m(1, 0)));
  int t1 = f.mul(m(0, 0), f.sub(f.mul(m(1, 1), m(2, 2)), f.mul(m(1, 2), m(2, 1))));
  int t2 = f.mul(m(0, 1), f.sub(f.mul(m(1, 0), m(2, 2)), f.mul(m(1, 2), m(2, 0))));
  int t3 = f.mul(m(0, 2), f.sub(f.mul(m(1, 0), m(2, 1)), f.mul(m(1, 1), m(2, 0))));
  return f.add(f.sub(t1, t2), t3);
}

int MatrixAlgebra::rank(const Matrix& x) const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rows[i][j] = x.at(i, j);
  return rank_rows(std::move(rows));
}

int MatrixAlgebra::rank_rows(std::vector<std::vector<int>> rows) const {
  const FiniteField& f = *field_;
  int rk = 0;
  int nr = static_cast<int>(rows.size());
  for (int c = 0; c < n_ && rk < nr; ++c) {
    int r = rk;
    while (r < nr && rows[r][c] == 0) ++r;
    if (r == nr) continue;
    std::swap(rows[r], rows[rk]);
    int inv = f.inv(rows[rk][c]);
    for (int i = rk + 1; i < nr; ++i) {
      if (rows[i][c] == 0) continue;
      int factor = f.mul(rows[i][c], inv);
      for (int j = c; j < n_; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[rk][j]));
    }
    ++rk;
  }
  return rk;
}

Matrix MatrixAlgebra::evaluate(const std::vector<int>& poly, const Matrix& x) const {
  Matrix r;
  for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i) r = add(mul(r, x), scalar(poly[i]));
  return r;
}

std::uint64_t MatrixAlgebra::code(const Matrix& x) const {
  std::uint64_t c = 0;
  for (int i = n_ - 1; i >= 0; --i)
    for (int j = n_ - 1; j >= 0; --j) c = c * static_cast<std::uint64_t>(q_) + x.at(i, j);
  return c;
}

Matrix MatrixAlgebra::from_code(std::uint64_t c) const {
  Matrix m;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      m.set(i, j, static_cast<int>(c % static_cast<std::uint64_t>(q_)));
      c /= static_cast<std::uint64_t>(q_);
    }
  return m;
}

std::string MatrixAlgebra::to_string(const Matrix& x) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << x.at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<Matrix> Pinning::generators(const MatrixAlgebra& alg) const {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    out.push_back(alg.elementary(static_cast<int>(i), static_cast<int>(i) + 1, coefficients[i]));
  return out;
}

GroupRealization::GroupRealization(const GroupSpec& spec, std::shared_ptr<const FiniteField> field)
    : spec_(spec), algebra_(std::move(field), spec.n) {}

std::shared_ptr<const GroupRealization> GroupRealization::build(const GroupSpec& spec, std::uint64_t budget) {
  std::uint64_t need = spec.order();
  if (need > budget) throw BudgetExceeded(need, budget);
  std::shared_ptr<GroupRealization> g(new GroupRealization(spec, FiniteField::of_order(spec.q)));
  const MatrixAlgebra& alg = g->algebra_;
  const FiniteField& f = alg.field();
  int n = spec.n, q = spec.q;
  std::uint64_t space = 1;
  for (int i = 0; i < n * n; ++i) space *= static_cast<std::uint64_t>(q);
  if (space > (std::uint64_t(1) << 28)) throw BudgetExceeded(space, std::uint64_t(1) << 28);
  g->dense_index_.assign(space, -1);
  g->elements_.reserve(need);
  for (std::uint64_t c = 0; c < space; ++c) {
    Matrix m = alg.from_code(c);
    int d = alg.det(m);
    if (d == 0 || (spec.family == Family::SL && d != 1)) continue;
    g->dense_index_[c] = static_cast<ElementId>(g->elements_.size());
    g->elements_.push_back(m);
  }
  if (g->elements_.size() != need) throw InconsistentData("enumerated group order differs from the formula");
  g->identity_ = g->find(alg.identity());
  g->inverse_.resize(g->elements_.size());
  for (std::size_t i = 0; i < g->elements_.size(); ++i) g->inverse_[i] = g->find(alg.inverse(g->elements_[i]));
  for (std::size_t i = 0; i < g->elements_.size(); ++i) {
    const Matrix& m = g->elements_[i];
    auto id = static_cast<ElementId>(i);
    if (g->in_borel(m)) g->borel_.push_back(id);
    if (g->in_split_torus(m)) g->torus_.push_back(id);
    if (g->in_unipotent(m)) g->unipotent_.push_back(id);
  }
  if (g->borel_.size() != g->torus_.size() * g->unipotent_.size())
    throw InconsistentData("|B| != |T||U|");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int basis = 1;
      for (int b = 0; b < f.degree(); ++b) {
        g->generators_.push_back(alg.elementary(i, j, basis));
        basis *= f.characteristic();
      }
    }
  if (spec.family == Family::GL && q > 2) {
    std::vector<int> d(static_cast<std::size_t>(n), 1);
    d[0] = f.generator();
    g->generators_.push_back(alg.diagonal(d));
  }
  g->pinning_.coefficients.assign(static_cast<std::size_t>(n - 1), 1);
  g->validate_pinning(g->pinning_);
  return g;
}

ElementId GroupRealization::find(const Matrix& m) const {
  std::uint64_t c = algebra_.code(m);
  if (c >= dense_index_.size()) return -1;
  return dense_index_[c];
}

ElementId GroupRealization::mul(ElementId x, ElementId y) const {
  return find(algebra_.mul(element(x), element(y)));
}

ElementId GroupRealization::power(ElementId x, std::int64_t e) const {
  return find(algebra_.power(element(x), e));
}

int GroupRealization::element_order(ElementId x) const {
  Matrix m = element(x);
  Matrix cur = m;
  Matrix id = algebra_.identity();
  int o = 1;
  while (!(cur == id)) {
    cur = algebra_.mul(cur, m);
    ++o;
  }
  return o;
}

bool GroupRealization::in_borel(const Matrix& m) const {
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < i; ++j)
      if (m.at(i, j) != 0) return false;
  return find(m) >= 0;
}

bool GroupRealization::in_unipotent(const Matrix& m) const {
  for (int i = 0; i < n(); ++i)
    if (m.at(i, i) != 1) return false;
  return in_borel(m);
}

bool GroupRealization::in_split_torus(const Matrix& m) const {
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j)
      if (i != j && m.at(i, j) != 0) return false;
  return find(m) >= 0;
}

void GroupRealization::validate_pinning(const Pinning& p) const {
  const FiniteField& f = field();
  if (static_cast<int>(p.coefficients.size()) != n() - 1)
    throw InvalidArgument("pinning must have one generator per simple root");
  for (int c : p.coefficients)
    if (c <= 0 || c >= q()) throw InvalidArgument("pinning coefficient must be a nonzero field element");
  auto gens = p.generators(algebra_);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!in_unipotent(gens[i])) throw InvalidArgument("pinning generator outside U");
    for (ElementId t : torus_) {
      const Matrix& tm = element(t);
      int alpha = f.div(tm.at(static_cast<int>(i), static_cast<int>(i)),
                        tm.at(static_cast<int>(i) + 1, static_cast<int>(i) + 1));
      Matrix lhs = algebra_.mul(algebra_.mul(tm, gens[i]), element(inverse(t)));
      Matrix rhs = algebra_.elementary(static_cast<int>(i), static_cast<int>(i) + 1,
                                       f.mul(alpha, p.coefficients[i]));
      if (!(lhs == rhs)) throw InvalidArgument("pinning generator violates the root-subgroup relation with T0");
    }
  }
}

int ConjugacyData::power_class(int c, std::int64_t m) const {
  int o = orders[static_cast<std::size_t>(c)];
  return power_maps[static_cast<std::size_t>(c)][static_cast<std::size_t>(mod_floor(m, o))];
}

std::string ConjugacyData::canonical_text() const {
  std::ostringstream os;
  os << name() << ";" << group_order << ";" << exponent << ";";
  for (int c = 0; c < class_count(); ++c) {
    os << group->algebra().code(group->element(representatives[c])) << ":" << sizes[c] << ":" << orders[c] << ":";
    for (int x : power_maps[c]) os << x << ",";
    os << ";";
  }
  return os.str();
}

std::shared_ptr<const ConjugacyData> conjugacy_classes(std::shared_ptr<const GroupRealization> g) {
  auto data = std::make_shared<ConjugacyData>();
  data->group = g;
  data->group_order = g->order();
  const auto& alg = g->algebra();
  std::vector<Matrix> gens = g->generators();
  std::vector<Matrix> gens_inv;
  for (const auto& x : gens) gens_inv.push_back(alg.inverse(x));
  std::vector<int> raw(g->order(), -1);
  std::vector<ElementId> reps;
  std::vector<std::uint64_t> sizes;
  std::deque<ElementId> queue;
  for (std::size_t s = 0; s < g->order(); ++s) {
    if (raw[s] >= 0) continue;
    int cls = static_cast<int>(reps.size());
    reps.push_back(static_cast<ElementId>(s));
    raw[s] = cls;
    std::uint64_t count = 1;
    queue.push_back(static_cast<ElementId>(s));
    while (!queue.empty()) {
      ElementId x = queue.front();
      queue.pop_front();
      const Matrix& m = g->element(x);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        ElementId y = g->find(alg.mul(alg.mul(gens[k], m), gens_inv[k]));
        if (raw[static_cast<std::size_t>(y)] >= 0) continue;
        raw[static_cast<std::size_t>(y)] = cls;
        ++count;
        queue.push_back(y);
      }
    }
    sizes.push_back(count);
  }
  // identity class first, the rest in order of their smallest element
  int id_class = raw[static_cast<std::size_t>(g->identity())];
  std::vector<int> relabel(reps.size());
  relabel[static_cast<std::size_t>(id_class)] = 0;
  int next = 1;
  for (int c = 0; c < static_cast<int>(reps.size()); ++c)
    if (c != id_class) relabel[static_cast<std::size_t>(c)] = next++;
  data->representatives.resize(reps.size());
  data->sizes.resize(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    data->representatives[static_cast<std::size_t>(relabel[c])] = reps[c];
    data->sizes[static_cast<std::size_t>(relabel[c])] = sizes[c];
  }
  data->class_of.resize(raw.size());
  for (std::size_t x = 0; x < raw.size(); ++x) data->class_of[x] = relabel[static_cast<std::size_t>(raw[x])];
  std::uint64_t total = 0;
  for (auto s : data->sizes) {
    if (data->group_order % s != 0) throw InconsistentData("class size does not divide the group order");
    total += s;
  }
  if (total != data->group_order) throw InconsistentData("class sizes do not sum to the group order");
  int r = data->class_count();
  data->orders.resize(r);
  data->power_maps.resize(r);
  data->inverse_class.resize(r);
  std::int64_t e = 1;
  for (int c = 0; c < r; ++c) {
    const Matrix& m = g->element(data->representatives[c]);
    Matrix cur = alg.identity();
    auto& pm = data->power_maps[c];
    do {
      pm.push_back(data->class_of[static_cast<std::size_t>(g->find(cur))]);
      cur = alg.mul(cur, m);
    } while (!(cur == alg.identity()));
    data->orders[c] = static_cast<int>(pm.size());
    e = lcm64(e, data->orders[c]);
    data->inverse_class[c] = data->class_of[static_cast<std::size_t>(g->inverse(data->representatives[c]))];
  }
  data->exponent = static_cast<int>(e);
  return data;
}

GroupAutomorphism::GroupAutomorphism(std::shared_ptr<const ConjugacyData> classes, std::string name,
                                     LabelAction dual_action, Formula formula)
    : classes_(std::move(classes)), name_(std::move(name)), dual_action_(dual_action), formula_(std::move(formula)) {
  const GroupRealization& g = *classes_->group;
  const auto& alg = g.algebra();
  image_.resize(g.order());
  std::vector<char> hit(g.order(), 0);
  for (std::size_t x = 0; x < g.order(); ++x) {
    ElementId y = g.find(formula_(g.element(static_cast<ElementId>(x))));
    if (y < 0) throw InvalidArgument(name_ + ": formula leaves the group");
    if (hit[static_cast<std::size_t>(y)]) throw InvalidArgument(name_ + ": formula is not injective");
    hit[static_cast<std::size_t>(y)] = 1;
    image_[x] = y;
  }
  // multiplicativity on generator * x for all x, which determines the whole map
  for (const auto& s : g.generators()) {
    ElementId sid = g.find(s);
    const Matrix& simg = g.element(image_[static_cast<std::size_t>(sid)]);
    for (std::size_t x = 0; x < g.order(); ++x) {
      ElementId sx = g.find(alg.mul(s, g.element(static_cast<ElementId>(x))));
      if (!(g.element(image_[static_cast<std::size_t>(sx)]) == alg.mul(simg, g.element(image_[x]))))
        throw InvalidArgument(name_ + ": formula is not a homomorphism");
    }
  }
  class_perm_.resize(static_cast<std::size_t>(classes_->class_count()));
  for (int c = 0; c < classes_->class_count(); ++c) {
    int d = classes_->class_of_element(image_[static_cast<std::size_t>(classes_->representatives[c])]);
    if (classes_->sizes[c] != classes_->sizes[d] || classes_->orders[c] != classes_->orders[d])
      throw InconsistentData(name_ + ": class permutation does not preserve sizes and orders");
    class_perm_[static_cast<std::size_t>(c)] = d;
  }
}

bool GroupAutomorphism::is_involution() const {
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (image_[static_cast<std::size_t>(image_[x])] != static_cast<ElementId>(x)) return false;
  return true;
}

bool GroupAutomorphism::is_identity() const {
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (image_[x] != static_cast<ElementId>(x)) return false;
  return true;
}

GroupAutomorphism GroupAutomorphism::inverse() const {
  GroupAutomorphism r;
  r.classes_ = classes_;
  r.name_ = name_ + "^-1";
  r.dual_action_ = dual_action_;
  r.image_.resize(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) r.image_[static_cast<std::size_t>(image_[x])] = static_cast<ElementId>(x);
  r.class_perm_.resize(class_perm_.size());
  for (std::size_t c = 0; c < class_perm_.size(); ++c) r.class_perm_[static_cast<std::size_t>(class_perm_[c])] = static_cast<int>(c);
  auto classes = classes_;
  auto table = r.image_;
  r.formula_ = [classes, table](const Matrix& m) {
    const auto& g = *classes->group;
    ElementId id = g.find(m);
    if (id < 0) throw InvalidArgument("inverse automorphism applied outside the group");
    return g.element(table[static_cast<std::size_t>(id)]);
  };
  return r;
}

GroupAutomorphism GroupAutomorphism::compose(const GroupAutomorphism& a, const GroupAutomorphism& b) {
  if (a.classes_ != b.classes_) throw InvalidArgument("composition of automorphisms of different groups");
  GroupAutomorphism r;
  r.classes_ = a.classes_;
  r.name_ = a.name_ + " o " + b.name_;
  r.dual_action_ = (a.dual_action_ == b.dual_action_) ? LabelAction::Identity : LabelAction::Inversion;
  r.image_.resize(a.image_.size());
  for (std::size_t x = 0; x < a.image_.size(); ++x) r.image_[x] = a.image_[static_cast<std::size_t>(b.image_[x])];
  r.class_perm_.resize(a.class_perm_.size());
  for (std::size_t c = 0; c < a.class_perm_.size(); ++c)
    r.class_perm_[c] = a.class_perm_[static_cast<std::size_t>(b.class_perm_[c])];
  auto fa = a.formula_, fb = b.formula_;
  r.formula_ = [fa, fb](const Matrix& m) { return fa(fb(m)); };
  return r;
}

GroupAutomorphism identity_automorphism(std::shared_ptr<const ConjugacyData> classes) {
  return GroupAutomorphism(std::move(classes), "id", LabelAction::Identity, [](const Matrix& m) { return m; });
}

GroupAutomorphism conjugation_automorphism(std::shared_ptr<const ConjugacyData> classes, const Matrix& g,
                                           std::string name) {
  const auto& alg = classes->group->algebra();
  Matrix gi = alg.inverse(g);
  auto algp = std::make_shared<MatrixAlgebra>(alg);
  return GroupAutomorphism(std::move(classes), std::move(name), LabelAction::Identity,
                           [algp, g, gi](const Matrix& m) { return algp->mul(algp->mul(g, m), gi); });
}

Matrix pinning_transport(const MatrixAlgebra& alg, const Pinning& pinning) {
  int n = alg.n();
  std::vector<int> d(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) d[i] = alg.field().mul(pinning.coefficients[i], d[i + 1]);
  return alg.diagonal(d);
}

namespace {

// Antidiagonal J with signs chosen so that g -> J (g^t)^{-1} J^{-1} maps x_i(1) to x_{n-2-i}(1).
Matrix chevalley_lift(const MatrixAlgebra& alg) {
  const FiniteField& f = alg.field();
  int n = alg.n();
  for (int mask = 0; mask < (1 << n); ++mask) {
    Matrix j;
    for (int i = 0; i < n; ++i) j.set(i, n - 1 - i, (mask >> i) & 1 ? f.neg(1) : 1);
    Matrix ji = alg.inverse(j);
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) {
      Matrix x = alg.elementary(i, i + 1, 1);
      Matrix img = alg.mul(alg.mul(j, alg.transpose(alg.inverse(x))), ji);
      ok = img == alg.elementary(n - 2 - i, n - 1 - i, 1);
    }
    if (ok) return j;
  }
  throw InconsistentData("no antidiagonal lift of w0 fixes the standard pinning");
}

}  // namespace

GroupAutomorphism chevalley_involution(std::shared_ptr<const ConjugacyData> classes, const Pinning& pinning) {
  const GroupRealization& g = *classes->group;
  g.validate_pinning(pinning);
  auto alg = std::make_shared<MatrixAlgebra>(g.algebra());
  Matrix j = chevalley_lift(*alg), ji = alg->inverse(j);
  Matrix d = pinning_transport(*alg, pinning), di = alg->inverse(d);
  GroupAutomorphism c(classes, "c", LabelAction::Inversion, [alg, j, ji, d, di](const Matrix& m) {
    Matrix x = alg->mul(alg->mul(di, m), d);
    x = alg->mul(alg->mul(j, alg->transpose(alg->inverse(x))), ji);
    return alg->mul(alg->mul(d, x), di);
  });
  auto gens = pinning.generators(*alg);
  int n = g.n();
  for (int i = 0; i + 1 < n; ++i)
    if (!(c.apply_matrix(gens[i]) == gens[static_cast<std::size_t>(n - 2 - i)]))
      throw InconsistentData("Chevalley involution does not fix the pinning");
  if (!c.is_involution()) throw InconsistentData("Chevalley involution is not an involution");
  return c;
}

GroupAutomorphism duality_involution(std::shared_ptr<const ConjugacyData> classes, const Pinning& pinning) {
  const GroupRealization& g = *classes->group;
  g.validate_pinning(pinning);
  auto alg = std::make_shared<MatrixAlgebra>(g.algebra());
  const FiniteField& f = alg->field();
  int n = g.n();
  Matrix j = chevalley_lift(*alg), ji = alg->inverse(j);
  Matrix d = pinning_transport(*alg, pinning), di = alg->inverse(d);
  std::vector<int> tv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tv[i] = i % 2 == 0 ? 1 : f.neg(1);
  Matrix t = alg->diagonal(tv), ti = alg->inverse(t);
  for (int i = 0; i + 1 < n; ++i)
    if (f.div(t.at(i, i), t.at(i + 1, i + 1)) != f.neg(1)) throw InconsistentData("alpha(t) != -1");
  GroupAutomorphism iota(classes, "iota", LabelAction::Inversion, [alg, j, ji, d, di, t, ti](const Matrix& m) {
    Matrix x = alg->mul(alg->mul(di, m), d);
    x = alg->mul(alg->mul(j, alg->transpose(alg->inverse(x))), ji);
    x = alg->mul(alg->mul(t, x), ti);
    return alg->mul(alg->mul(d, x), di);
  });
  if (!iota.is_involution()) throw InconsistentData("duality involution is not an involution");
  return iota;
}

std::vector<GroupAutomorphism> adjoint_action_representatives(std::shared_ptr<const ConjugacyData> classes) {
  const GroupRealization& g = *classes->group;
  std::vector<GroupAutomorphism> out;
  out.push_back(identity_automorphism(classes));
  if (g.spec().family == Family::GL) return out;
  const FiniteField& f = g.field();
  int d = static_cast<int>(gcd64(g.n(), g.q() - 1));
  for (int k = 1; k < d; ++k) {
    std::vector<int> diag(static_cast<std::size_t>(g.n()), 1);
    diag[0] = f.exp(k);
    out.push_back(conjugation_automorphism(classes, g.algebra().diagonal(diag),
                                           "ad(diag(g^" + std::to_string(k) + ",1..))"));
  }
  return out;
}

std::string TorusClass::label() const {
  std::string s = "w[";
  for (std::size_t i = 0; i < cycle_type.size(); ++i) s += (i ? "," : "") + std::to_string(cycle_type[i]);
  return s + "]";
}

std::uint64_t torus_order_from_lattice(Family family, int n, int q, const std::vector<int>& w) {
  IntegerMatrix p(n, n);
  for (int i = 0; i < n; ++i) p(w[i], i) = 1;
  IntegerMatrix act;
  if (family == Family::GL) {
    act = p;
  } else {
    // basis b_i = e_i - e_{i+1} of the sum-zero coroot lattice
    act = IntegerMatrix(n - 1, n - 1);
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<long> v(static_cast<std::size_t>(n), 0);
      v[w[i]] += 1;
      v[w[i + 1]] -= 1;
      long partial = 0;
      for (int k = 0; k + 1 < n; ++k) {
        partial += v[k];
        act(k, i) = partial;
      }
    }
  }
  int m = act.rows();
  IntegerMatrix qa(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) qa(i, j) = act(i, j) * q - (i == j ? 1 : 0);
  Integer d = abs(qa.determinant());
  return d.get_ui();
}

std::vector<TorusClass> maximal_tori(const GroupRealization& g) {
  int n = g.n(), q = g.q();
  std::vector<std::vector<int>> parts;
  std::function<void(int, int, std::vector<int>&)> rec = [&](int rest, int maxp, std::vector<int>& cur) {
    if (rest == 0) {
      parts.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxp); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k, cur);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  rec(n, n, cur);
  std::sort(parts.begin(), parts.end());
  std::vector<TorusClass> out;
  for (const auto& mu : parts) {
    TorusClass t;
    t.cycle_type = mu;
    t.determinant_one = g.spec().family == Family::SL;
    int start = 0;
    t.weyl_representative.resize(static_cast<std::size_t>(n));
    std::uint64_t ord = 1;
    for (int d : mu) {
      for (int k = 0; k < d; ++k) t.weyl_representative[start + k] = start + (k + 1) % d;
      start += d;
      std::int64_t qd = 1;
      for (int k = 0; k < d; ++k) qd *= q;
      t.factor_orders.push_back(qd - 1);
      ord *= static_cast<std::uint64_t>(qd - 1);
    }
    if (t.determinant_one) ord /= static_cast<std::uint64_t>(q - 1);
    t.order = ord;
    t.f_rank = static_cast<int>(mu.size()) - (t.determinant_one ? 1 : 0);
    if (torus_order_from_lattice(g.spec().family, n, q, t.weyl_representative) != t.order)
      throw InconsistentData("torus order disagrees with |det(qw - 1)|");
    out.push_back(std::move(t));
  }
  return out;
}

SplittingField::SplittingField(std::shared_ptr<const FiniteField> base, int n)
    : embedding_(base, FiniteField::get(base->characteristic(), base->degree() * [n] {
                   int l = 1;
                   for (int i = 1; i <= n; ++i) l = static_cast<int>(lcm64(l, i));
                   return l;
                 }())),
      degree_(1) {
  for (int i = 1; i <= n; ++i) degree_ = static_cast<int>(lcm64(degree_, i));
}

std::int64_t SplittingField::subfield_step(int d) const {
  if (degree_ % d != 0) throw InvalidArgument("subfield degree does not divide the splitting degree");
  std::int64_t qd = 1;
  for (int i = 0; i < d; ++i) qd *= base().order();
  return big_unit_order() / (qd - 1);
}

std::vector<std::int64_t> SplittingField::frobenius_orbit(std::int64_t exponent) const {
  std::int64_t m = big_unit_order();
  std::vector<std::int64_t> orbit;
  std::int64_t x = mod_floor(exponent, m);
  do {
    orbit.push_back(x);
    x = static_cast<std::int64_t>((static_cast<__int128>(x) * base().order()) % m);
  } while (x != orbit.front());
  return orbit;
}

std::vector<int> SplittingField::minimal_polynomial(std::int64_t exponent) const {
  const FiniteField& F = big();
  std::vector<int> poly{1};
  for (std::int64_t e : frobenius_orbit(exponent)) {
    int root = F.exp(e);
    std::vector<int> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = F.add(next[i + 1], poly[i]);
      next[i] = F.sub(next[i], F.mul(root, poly[i]));
    }
    poly = std::move(next);
  }
  std::vector<int> out;
  for (int c : poly) {
    int b = embedding_.preimage(c);
    if (b < 0) throw InconsistentData("minimal polynomial not defined over the base field");
    out.push_back(b);
  }
  return out;
}

std::vector<std::int64_t> SplittingField::eigenvalue_exponents(const MatrixAlgebra& alg, const Matrix& m) const {
  const FiniteField& f = alg.field();
  const FiniteField& F = big();
  int n = alg.n();
  // characteristic polynomial from principal minors
  std::vector<int> cp(static_cast<std::size_t>(n) + 1, 0);
  cp[n] = 1;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    int k = static_cast<int>(idx.size());
    int det;
    if (k == 1) {
      det = m.at(idx[0], idx[0]);
    } else if (k == 2) {
      det = f.sub(f.mul(m.at(idx[0], idx[0]), m.at(idx[1], idx[1])), f.mul(m.at(idx[0], idx[1]), m.at(idx[1], idx[0])));
    } else {
      det = alg.det(m);
    }
    if (k % 2 == 1) det = f.neg(det);
    cp[n - k] = f.add(cp[n - k], det);
  }
  std::vector<int> poly;
  for (int c : cp) poly.push_back(embedding_.image(c));
  std::vector<std::int64_t> out;
  for (int y = 1; y < F.order() && static_cast<int>(poly.size()) > 1; ++y) {
    for (;;) {
      // synthetic division by (x - y)
      int deg = static_cast<int>(poly.size()) - 1;
      std::vector<int> quo(static_cast<std::size_t>(deg));
      int acc = poly[deg];
      for (int i = deg - 1; i >= 0; --i) {
        quo[i] = acc;
        acc = F.add(poly[i], F.mul(acc, y));
      }
      if (acc != 0) break;
      out.push_back(F.log(y));
      poly = std::move(quo);
      if (poly.size() == 1) break;
    }
  }
  if (static_cast<int>(out.size()) != n) throw InconsistentData("characteristic polynomial does not split");
  std::sort(out.begin(), out.end());
  return out;
}

ElementId TorusEmbedding::element(const GroupRealization& g, const std::vector<std::int64_t>& exponents) const {
  const auto& alg = g.algebra();
  Matrix m = alg.identity();
  for (std::size_t i = 0; i < factor_generators.size(); ++i)
    m = alg.mul(m, alg.power(factor_generators[i], exponents[i]));
  return g.find(m);
}

TorusEmbedding embed_torus(const GroupRealization& g, const SplittingField& f, const TorusClass& t) {
  const auto& alg = g.algebra();
  const FiniteField& fq = alg.field();
  TorusEmbedding e;
  e.torus = t;
  int offset = 0;
  for (int d : t.cycle_type) {
    std::int64_t step = f.subfield_step(d);
    auto poly = f.minimal_polynomial(step);
    if (static_cast<int>(poly.size()) != d + 1)
      throw InconsistentData("subfield generator has the wrong degree");
    Matrix m = alg.identity();
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m.set(offset + r, offset + c, 0);
    for (int k = 0; k + 1 < d; ++k) m.set(offset + k + 1, offset + k, 1);
    for (int k = 0; k < d; ++k) m.set(offset + k, offset + d - 1, fq.neg(poly[k]));
    e.factor_steps.push_back(step);
    e.block_offsets.push_back(offset);
    e.factor_generators.push_back(m);
    offset += d;
  }
  return e;
}

}  // namespace liechar
