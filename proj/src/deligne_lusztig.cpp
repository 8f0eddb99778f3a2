#include "liechar/deligne_lusztig.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "liechar/errors.hpp"

namespace liechar {

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

TableProvider& table_provider() {
  static TableProvider p;
  return p;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::shared_ptr<const ConjugacyData> cached_classes(const GroupSpec& spec, std::uint64_t budget) {
  if (spec.order() > budget) throw BudgetExceeded(spec.order(), budget);
  static std::map<GroupSpec, std::shared_ptr<const ConjugacyData>> cache;
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = cache.find(spec);
    if (it != cache.end()) return it->second;
  }
  auto c = conjugacy_classes(GroupRealization::build(spec, budget));
  std::lock_guard<std::mutex> lock(registry_mutex());
  return cache.emplace(spec, c).first->second;
}

void set_table_provider(TableProvider provider) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  table_provider() = std::move(provider);
}

std::shared_ptr<const CharacterTable> cached_table(const GroupSpec& spec, std::uint64_t budget) {
  auto classes = cached_classes(spec, budget);
  static std::map<GroupSpec, std::shared_ptr<const CharacterTable>> cache;
  TableProvider provider;
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = cache.find(spec);
    if (it != cache.end()) return it->second;
    provider = table_provider();
  }
  auto t = provider ? provider(classes) : std::make_shared<const CharacterTable>(character_table(classes));
  if (t->classes_ptr() != classes) throw InconsistentData("table provider returned a table for other class data");
  std::lock_guard<std::mutex> lock(registry_mutex());
  return cache.emplace(spec, t).first->second;
}

int SemisimpleClassLabel::rank() const {
  int r = 0;
  for (const auto& o : orbits) r += o.size() * o.multiplicity;
  return r;
}

void SemisimpleClassLabel::normalize() {
  for (auto& o : orbits) std::sort(o.exponents.begin(), o.exponents.end());
  std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) { return a.exponents < b.exponents; });
  std::vector<Orbit> merged;
  for (auto& o : orbits) {
    if (!merged.empty() && merged.back().exponents == o.exponents)
      merged.back().multiplicity += o.multiplicity;
    else
      merged.push_back(o);
  }
  orbits = std::move(merged);
}

SemisimpleClassLabel SemisimpleClassLabel::inverse() const {
  SemisimpleClassLabel r = *this;
  for (auto& o : r.orbits)
    for (auto& x : o.exponents) x = mod_floor(-x, modulus);
  r.normalize();
  return r;
}

SemisimpleClassLabel SemisimpleClassLabel::scaled(std::int64_t shift) const {
  SemisimpleClassLabel r = *this;
  for (auto& o : r.orbits)
    for (auto& x : o.exponents) x = mod_floor(x + shift, modulus);
  r.normalize();
  return r;
}

int SemisimpleClassLabel::orbit_index(std::int64_t x) const {
  x = mod_floor(x, modulus);
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (std::binary_search(orbits[i].exponents.begin(), orbits[i].exponents.end(), x)) return static_cast<int>(i);
  return -1;
}

std::string SemisimpleClassLabel::canonical() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (i) os << "+";
    os << "{";
    for (std::size_t j = 0; j < orbits[i].exponents.size(); ++j) os << (j ? "," : "") << orbits[i].exponents[j];
    os << "}^" << orbits[i].multiplicity;
  }
  os << " mod " << modulus;
  return os.str();
}

std::vector<SemisimpleClassLabel> enumerate_semisimple_labels(const SplittingField& f, int n) {
  const std::int64_t m = f.big_unit_order();
  std::vector<std::vector<std::int64_t>> orbits;
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (std::int64_t x = 0; x < m; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    auto orbit = f.frobenius_orbit(x);
    for (auto y : orbit) seen[static_cast<std::size_t>(y)] = 1;
    if (static_cast<int>(orbit.size()) > n) continue;
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(orbit);
  }
  std::vector<SemisimpleClassLabel> out;
  SemisimpleClassLabel cur;
  cur.modulus = m;
  cur.q = f.base().order();
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int rest) {
    if (rest == 0) {
      SemisimpleClassLabel l = cur;
      l.normalize();
      out.push_back(l);
      return;
    }
    for (std::size_t i = start; i < orbits.size(); ++i) {
      int e = static_cast<int>(orbits[i].size());
      if (e > rest) continue;
      cur.orbits.push_back({orbits[i], 1});
      rec(i, rest - e);
      cur.orbits.pop_back();
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

int epsilon_sign(int f_rank) { return f_rank % 2 == 0 ? 1 : -1; }

std::string tuple_string(const PartitionTuple& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + partition_string(t[i]);
  return s + "]";
}

std::shared_ptr<const GLContext> GLContext::get(const GroupSpec& spec, std::uint64_t budget, std::int64_t twist) {
  if (spec.family != Family::GL) throw UnsupportedSpec("Deligne-Lusztig data are built for GL_n only, got " + spec.to_string());
  if (spec.order() > budget) throw BudgetExceeded(spec.order(), budget);
  static std::map<std::pair<GroupSpec, std::int64_t>, std::shared_ptr<const GLContext>> cache;
  auto key = std::make_pair(spec, twist);
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::shared_ptr<const GLContext> ctx(new GLContext(spec, budget, twist));
  std::lock_guard<std::mutex> lock(registry_mutex());
  return cache.emplace(key, ctx).first->second;
}

GLContext::GLContext(const GroupSpec& spec, std::uint64_t budget, std::int64_t twist)
    : spec_(spec), twist_(twist), budget_(budget) {
  classes_ = cached_classes(spec, budget);
  table_ = cached_table(spec, budget);
  field_ = std::make_shared<SplittingField>(classes_->group->algebra().field_ptr(), spec.n);
  if (gcd64(mod_floor(twist, field_->big_unit_order()), field_->big_unit_order()) != 1)
    throw InvalidArgument("embedding twist must be a unit modulo Q - 1");
  tori_ = maximal_tori(*classes_->group);
  for (const auto& t : tori_) embeddings_.push_back(embed_torus(*classes_->group, *field_, t));
  build_class_data();
  build_unipotents();
  build_torus_data();
  build_series();
}

void GLContext::build_class_data() {
  const auto& c = *classes_;
  const auto& g = *c.group;
  const auto& alg = g.algebra();
  const auto& f = *field_;
  const int p = g.field().characteristic();
  const int n = spec_.n;
  for (int k = 0; k < c.class_count(); ++k) {
    ElementId x = c.representatives[static_cast<std::size_t>(k)];
    int o = c.orders[static_cast<std::size_t>(k)];
    int op = 1;
    while ((o / op) % p == 0) op *= p;
    int os = o / op;
    std::int64_t a = 0;
    for (std::int64_t t = 0; t < os; ++t)
      if ((t * op) % os == 1 % os) {
        a = t * op;
        break;
      }
    Matrix s = alg.power(g.element(x), a);
    Matrix u = alg.power(g.element(x), mod_floor(1 - a, o));
    if (!(alg.mul(s, u) == g.element(x)) || !(alg.mul(s, u) == alg.mul(u, s)))
      throw InconsistentData("Jordan decomposition failed");
    ClassDatum d;
    d.eigenvalues = f.eigenvalue_exponents(alg, s);
    d.label.modulus = f.big_unit_order();
    d.label.q = spec_.q;
    std::vector<char> used(d.eigenvalues.size(), 0);
    for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
      if (used[i]) continue;
      auto orbit = f.frobenius_orbit(d.eigenvalues[i]);
      std::sort(orbit.begin(), orbit.end());
      int count = 0;
      for (std::size_t j = 0; j < d.eigenvalues.size(); ++j)
        if (!used[j] && std::binary_search(orbit.begin(), orbit.end(), d.eigenvalues[j])) {
          used[j] = 1;
          ++count;
        }
      if (count % static_cast<int>(orbit.size()) != 0) throw InconsistentData("eigenvalues not Frobenius-stable");
      d.label.orbits.push_back({orbit, count / static_cast<int>(orbit.size())});
    }
    d.label.normalize();
    Matrix um = alg.sub(u, alg.identity());
    for (const auto& orb : d.label.orbits) {
      auto poly = f.minimal_polynomial(orb.exponents.front());
      Matrix fs = alg.evaluate(poly, s);
      int e = orb.size();
      int total = e * orb.multiplicity;
      std::vector<int> dims{0};
      Matrix pw = alg.identity();
      for (int step = 1; step <= total; ++step) {
        pw = alg.mul(pw, um);
        std::vector<std::vector<int>> rows;
        for (int i = 0; i < n; ++i) {
          std::vector<int> r1, r2;
          for (int j = 0; j < n; ++j) {
            r1.push_back(fs.at(i, j));
            r2.push_back(pw.at(i, j));
          }
          rows.push_back(r1);
          rows.push_back(r2);
        }
        dims.push_back(n - alg.rank_rows(rows));
      }
      if (dims.back() != total) throw InconsistentData("generalized eigenspace has the wrong dimension");
      Partition conj;
      for (int step = 1; step <= total; ++step) {
        int blocks = dims[step] - dims[step - 1];
        if (blocks % e != 0) throw InconsistentData("Jordan type not defined over F_{q^e}");
        if (blocks) conj.push_back(blocks / e);
      }
      d.unipotent_types.push_back(conjugate_partition(conj));
    }
    class_data_.push_back(std::move(d));
  }
}

void GLContext::build_unipotents() {
  const auto& g = *classes_->group;
  const auto& alg = g.algebra();
  const int n = spec_.n;
  for (const auto& lambda : partitions(n)) {
    Matrix m = alg.identity();
    int pos = 0;
    for (int part : lambda) {
      for (int i = 0; i + 1 < part; ++i) m.set(pos + i, pos + i + 1, 1);
      pos += part;
    }
    ElementId id = g.find(m);
    int cls = classes_->class_of_element(id);
    if (class_data_[static_cast<std::size_t>(cls)].unipotent_types != PartitionTuple{lambda})
      throw InconsistentData("Jordan type of " + partition_string(lambda) + " misread");
    unipotent_classes_[lambda] = cls;
  }
  SubgroupFunction one{classes_, g.borel(), std::vector<CyclotomicNumber>(g.borel().size(), CyclotomicNumber(1))};
  auto mult = table_->decompose(induce(one));
  auto degrees = table_->degrees();
  for (const auto& lambda : partitions(n)) {
    Integer deg = unipotent_degree(lambda, spec_.q);
    long dim = sn_character(lambda, Partition(static_cast<std::size_t>(n), 1));
    int found = -1;
    for (int i = 0; i < table_->size(); ++i)
      if (mult[static_cast<std::size_t>(i)] != 0 && Integer(degrees[static_cast<std::size_t>(i)]) == deg) {
        if (found >= 0) throw InconsistentData("unipotent degree collision for " + partition_string(lambda));
        found = i;
      }
    if (found < 0) throw InconsistentData("no unipotent constituent of degree " + deg.get_str());
    if (mult[static_cast<std::size_t>(found)] != dim)
      throw InconsistentData("unipotent multiplicity in Ind_B(1) differs from chi^lambda(1)");
    unipotent_[lambda] = found;
  }
  long constituents = 0;
  for (long m : mult) constituents += m != 0;
  if (constituents != static_cast<long>(unipotent_.size())) throw InconsistentData("extra constituents in Ind_B(1)");
}

int GLContext::unipotent_class(const Partition& lambda) const {
  auto it = unipotent_classes_.find(lambda);
  if (it == unipotent_classes_.end()) throw InvalidArgument("no unipotent class " + partition_string(lambda));
  return it->second;
}

long GLContext::green_function(const Partition& mu, const Partition& lambda) const {
  int cls = unipotent_class(lambda);
  long total = 0;
  for (const auto& [nu, idx] : unipotent_) {
    const CyclotomicNumber& v = (*table_)[idx][cls];
    if (!v.is_rational()) throw InconsistentData("unipotent character value is irrational on a unipotent class");
    Rational r = v.rational_value();
    if (r.get_den() != 1) throw InconsistentData("unipotent character value is not an integer");
    total += sn_character(nu, mu) * r.get_num().get_si();
  }
  return total;
}

long factor_green_function(int m, int q, int e, const Partition& mu, const Partition& lambda, std::uint64_t budget) {
  if (m == 1) return 1;
  std::int64_t qe = ipow(q, e);
  if (qe > 255) throw UnsupportedSpec("centralizer factor GL" + std::to_string(m) + "(" + std::to_string(qe) + ") is out of range");
  auto ctx = GLContext::get(GroupSpec{Family::GL, m, static_cast<int>(qe)}, budget);
  return ctx->green_function(mu, lambda);
}

void GLContext::build_torus_data() {
  const auto& f = *field_;
  const std::int64_t M = f.big_unit_order();
  const int q = spec_.q;
  torus_elements_.resize(tori_.size());
  std::set<TorusCharacter> chars;
  for (std::size_t ti = 0; ti < tori_.size(); ++ti) {
    const auto& t = tori_[ti];
    const auto& emb = embeddings_[ti];
    std::size_t blocks = t.cycle_type.size();
    std::vector<std::int64_t> j(blocks, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
      if (b == blocks) {
        TorusElement el;
        el.j = j;
        for (std::size_t i = 0; i < blocks; ++i) {
          std::int64_t x = mod_floor(emb.factor_steps[i] * j[i], M);
          std::int64_t y = x;
          for (int r = 0; r < t.cycle_type[i]; ++r) {
            el.eigenvalues.push_back(y);
            y = mod_floor(y * q, M);
          }
          auto orbit = f.frobenius_orbit(x);
          el.block_orbit.push_back(*std::min_element(orbit.begin(), orbit.end()));
          el.block_orbit_size.push_back(static_cast<int>(orbit.size()));
        }
        std::sort(el.eigenvalues.begin(), el.eigenvalues.end());
        torus_elements_[ti].push_back(std::move(el));
        chars.insert(normal_form(TorusCharacter{static_cast<int>(ti), j}));
        return;
      }
      for (std::int64_t v = 0; v < t.factor_orders[b]; ++v) {
        j[b] = v;
        rec(b + 1);
      }
    };
    rec(0);
  }
  characters_.assign(chars.begin(), chars.end());
}

TorusCharacter GLContext::normal_form(TorusCharacter theta) const {
  const auto& t = tori_.at(static_cast<std::size_t>(theta.torus));
  if (theta.k.size() != t.cycle_type.size()) throw InvalidArgument("torus character has the wrong length");
  for (std::size_t i = 0; i < theta.k.size(); ++i) {
    std::int64_t m = t.factor_orders[i];
    std::int64_t x = mod_floor(theta.k[i], m), best = x;
    for (int r = 1; r < t.cycle_type[i]; ++r) {
      x = mod_floor(x * spec_.q, m);
      best = std::min(best, x);
    }
    theta.k[i] = best;
  }
  std::size_t start = 0;
  while (start < theta.k.size()) {
    std::size_t end = start;
    while (end < theta.k.size() && t.cycle_type[end] == t.cycle_type[start]) ++end;
    std::sort(theta.k.begin() + static_cast<std::ptrdiff_t>(start), theta.k.begin() + static_cast<std::ptrdiff_t>(end));
    start = end;
  }
  return theta;
}

SemisimpleClassLabel GLContext::classify_pair(const TorusCharacter& theta) const {
  const auto& t = tori_.at(static_cast<std::size_t>(theta.torus));
  const auto& emb = embeddings_[static_cast<std::size_t>(theta.torus)];
  const std::int64_t M = field_->big_unit_order();
  SemisimpleClassLabel l;
  l.modulus = M;
  l.q = spec_.q;
  for (std::size_t i = 0; i < theta.k.size(); ++i) {
    std::int64_t y = mod_floor(static_cast<std::int64_t>(static_cast<__int128>(twist_) * theta.k[i] % M * emb.factor_steps[i] % M), M);
    auto orbit = field_->frobenius_orbit(y);
    int e = static_cast<int>(orbit.size());
    l.orbits.push_back({orbit, t.cycle_type[i] / e});
  }
  l.normalize();
  return l;
}

PartitionTuple GLContext::centralizer_torus_type(const TorusCharacter& theta) const {
  const auto& t = tori_.at(static_cast<std::size_t>(theta.torus));
  const auto& emb = embeddings_[static_cast<std::size_t>(theta.torus)];
  const std::int64_t M = field_->big_unit_order();
  SemisimpleClassLabel l = classify_pair(theta);
  PartitionTuple tau(l.orbits.size());
  for (std::size_t i = 0; i < theta.k.size(); ++i) {
    std::int64_t y = mod_floor(static_cast<std::int64_t>(static_cast<__int128>(twist_) * theta.k[i] % M * emb.factor_steps[i] % M), M);
    int o = l.orbit_index(y);
    tau[static_cast<std::size_t>(o)].push_back(t.cycle_type[i] / l.orbits[static_cast<std::size_t>(o)].size());
  }
  for (auto& part : tau) std::sort(part.rbegin(), part.rend());
  return tau;
}

CyclotomicNumber GLContext::torus_value(const TorusCharacter& theta, const std::vector<std::int64_t>& j) const {
  const auto& t = tori_.at(static_cast<std::size_t>(theta.torus));
  std::int64_t L = 1;
  for (auto m : t.factor_orders) L = lcm64(L, m);
  std::int64_t x = 0;
  for (std::size_t i = 0; i < j.size(); ++i) x = mod_floor(x + theta.k[i] * j[i] % t.factor_orders[i] * (L / t.factor_orders[i]), L);
  return CyclotomicNumber::root_of_unity(static_cast<int>(L), x);
}

ClassFunction GLContext::compute_dl(const TorusCharacter& theta) const {
  const auto& t = tori_.at(static_cast<std::size_t>(theta.torus));
  std::int64_t L = 1;
  for (auto m : t.factor_orders) L = lcm64(L, m);
  const auto& elems = torus_elements_[static_cast<std::size_t>(theta.torus)];
  std::vector<CyclotomicNumber> values;
  for (int c = 0; c < classes_->class_count(); ++c) {
    const ClassDatum& d = class_data_[static_cast<std::size_t>(c)];
    CyclotomicAccumulator acc(static_cast<int>(L));
    for (const auto& el : elems) {
      if (el.eigenvalues != d.eigenvalues) continue;
      PartitionTuple mu(d.label.orbits.size());
      for (std::size_t b = 0; b < el.j.size(); ++b) {
        int o = d.label.orbit_index(el.block_orbit[b]);
        if (o < 0) throw InconsistentData("torus eigenvalue outside the class label");
        mu[static_cast<std::size_t>(o)].push_back(t.cycle_type[b] / el.block_orbit_size[b]);
      }
      std::int64_t weight = 1;
      for (std::size_t o = 0; o < mu.size(); ++o) {
        std::sort(mu[o].rbegin(), mu[o].rend());
        const auto& orb = d.label.orbits[o];
        if (orb.multiplicity == 1) continue;
        if (orb.size() == 1 && orb.multiplicity == spec_.n)
          weight *= green_function(mu[o], d.unipotent_types[o]);
        else
          weight *= factor_green_function(orb.multiplicity, spec_.q, orb.size(), mu[o], d.unipotent_types[o], budget_);
      }
      if (weight == 0) continue;
      std::int64_t x = 0;
      for (std::size_t b = 0; b < el.j.size(); ++b)
        x = mod_floor(x + theta.k[b] * el.j[b] % t.factor_orders[b] * (L / t.factor_orders[b]), L);
      acc.add_root(x, weight);
    }
    values.push_back(acc.result());
  }
  return ClassFunction(classes_, std::move(values));
}

const ClassFunction& GLContext::dl_character(const TorusCharacter& theta0) const {
  TorusCharacter theta = normal_form(theta0);
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = dl_cache_.find(theta);
    if (it != dl_cache_.end()) return it->second;
  }
  ClassFunction r = compute_dl(theta);
  std::lock_guard<std::mutex> lock(registry_mutex());
  return dl_cache_.emplace(theta, std::move(r)).first->second;
}

long GLContext::exclusion_count(const TorusCharacter& a, const TorusCharacter& b) const {
  if (a.torus != b.torus) return 0;
  const auto& t = tori_.at(static_cast<std::size_t>(a.torus));
  std::size_t blocks = t.cycle_type.size();
  std::vector<int> perm(blocks);
  for (std::size_t i = 0; i < blocks; ++i) perm[i] = static_cast<int>(i);
  long total = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < blocks && ok; ++i) ok = t.cycle_type[i] == t.cycle_type[static_cast<std::size_t>(perm[i])];
    if (!ok) continue;
    long prod = 1;
    for (std::size_t i = 0; i < blocks; ++i) {
      std::int64_t m = t.factor_orders[i];
      std::int64_t x = mod_floor(b.k[static_cast<std::size_t>(perm[i])], m);
      long hits = 0;
      for (int r = 0; r < t.cycle_type[i]; ++r) {
        if (x == mod_floor(a.k[i], m)) ++hits;
        x = mod_floor(x * spec_.q, m);
      }
      prod *= hits;
    }
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

void GLContext::build_series() {
  std::map<SemisimpleClassLabel, std::vector<TorusCharacter>> by_label;
  for (const auto& theta : characters_) by_label[classify_pair(theta)].push_back(theta);
  membership_.assign(static_cast<std::size_t>(table_->size()), 0);
  series_of_.assign(static_cast<std::size_t>(table_->size()), -1);
  for (auto& [label, pairs] : by_label) {
    LusztigSeries s{label, {}, pairs};
    std::set<int> members;
    for (const auto& theta : pairs) {
      auto mult = table_->decompose(dl_character(theta));
      for (std::size_t i = 0; i < mult.size(); ++i)
        if (mult[i] != 0) members.insert(static_cast<int>(i));
    }
    s.members.assign(members.begin(), members.end());
    for (int i : s.members) {
      ++membership_[static_cast<std::size_t>(i)];
      if (series_of_[static_cast<std::size_t>(i)] < 0) series_of_[static_cast<std::size_t>(i)] = static_cast<int>(series_.size());
    }
    series_.push_back(std::move(s));
  }
}

int GLContext::series_index(const SemisimpleClassLabel& label) const {
  for (std::size_t i = 0; i < series_.size(); ++i)
    if (series_[i].label == label) return static_cast<int>(i);
  return -1;
}

ClassFunction GLContext::central_linear_character(std::int64_t c) const {
  const auto& g = *classes_->group;
  const auto& f = g.field();
  std::vector<CyclotomicNumber> v;
  for (int k = 0; k < classes_->class_count(); ++k) {
    int d = g.algebra().det(g.element(classes_->representatives[static_cast<std::size_t>(k)]));
    v.push_back(CyclotomicNumber::root_of_unity(spec_.q - 1, c * f.log(d)));
  }
  return ClassFunction(classes_, std::move(v));
}

std::int64_t GLContext::central_shift(std::int64_t c) const {
  const std::int64_t M = field_->big_unit_order();
  // det of a torus factor generator is G^step; read it in the base generator
  std::int64_t b = field_->base().log(field_->embedding().preimage(field_->big().exp(scalar_step())));
  return mod_floor(static_cast<std::int64_t>(static_cast<__int128>(twist_) * c % M * b % M * scalar_step() % M), M);
}

std::shared_ptr<const SLContext> SLContext::get(const GroupSpec& spec, std::uint64_t budget, std::int64_t twist) {
  if (spec.family != Family::SL) throw InvalidArgument("SLContext needs an SL spec");
  static std::map<std::pair<GroupSpec, std::int64_t>, std::shared_ptr<const SLContext>> cache;
  auto key = std::make_pair(spec, twist);
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::shared_ptr<const SLContext> ctx(new SLContext(spec, budget, twist));
  std::lock_guard<std::mutex> lock(registry_mutex());
  return cache.emplace(key, ctx).first->second;
}

SLContext::SLContext(const GroupSpec& spec, std::uint64_t budget, std::int64_t twist) : spec_(spec) {
  gl_ = GLContext::get(spec.with_family(Family::GL), budget, twist);
  classes_ = cached_classes(spec, budget);
  table_ = cached_table(spec, budget);
  const auto& sg = *classes_->group;
  const auto& gg = *gl_->classes()->group;
  for (int c = 0; c < classes_->class_count(); ++c) {
    ElementId x = gg.find(sg.element(classes_->representatives[static_cast<std::size_t>(c)]));
    if (x < 0) throw InconsistentData("SL element missing from GL");
    gl_class_.push_back(gl_->classes()->class_of_element(x));
  }
  const auto& gt = gl_->table();
  for (int i = 0; i < gt.size(); ++i) {
    auto m = table_->decompose(restrict_from_gl(gt[i]));
    for (long x : m)
      if (x < 0 || x > 1) throw InconsistentData("restriction from GL is not multiplicity-free");
    restriction_.push_back(m);
  }
  std::map<SemisimpleClassLabel, std::vector<int>> by_class;
  for (std::size_t s = 0; s < gl_->series().size(); ++s)
    by_class[scalar_class(gl_->series()[s].label)].push_back(static_cast<int>(s));
  membership_.assign(static_cast<std::size_t>(table_->size()), 0);
  series_of_.assign(static_cast<std::size_t>(table_->size()), -1);
  for (auto& [label, gls] : by_class) {
    SLSeries s{label, gls, {}};
    std::set<int> members;
    for (int gs : gls)
      for (int i : gl_->series()[static_cast<std::size_t>(gs)].members)
        for (int j = 0; j < table_->size(); ++j)
          if (restriction_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) members.insert(j);
    s.members.assign(members.begin(), members.end());
    for (int j : s.members) {
      ++membership_[static_cast<std::size_t>(j)];
      if (series_of_[static_cast<std::size_t>(j)] < 0) series_of_[static_cast<std::size_t>(j)] = static_cast<int>(series_.size());
    }
    series_.push_back(std::move(s));
  }
}

ClassFunction SLContext::restrict_from_gl(const ClassFunction& f) const {
  if (f.classes_ptr() != gl_->classes()) throw InvalidArgument("restriction of a function on another group");
  std::vector<CyclotomicNumber> v;
  for (int c = 0; c < classes_->class_count(); ++c) v.push_back(f[gl_class_[static_cast<std::size_t>(c)]]);
  return ClassFunction(classes_, std::move(v));
}

std::vector<std::int64_t> SLContext::scalar_stabilizer(const SemisimpleClassLabel& gl_label) const {
  std::vector<std::int64_t> out;
  for (std::int64_t c = 0; c < spec_.q - 1; ++c)
    if (gl_label.scaled(gl_->central_shift(c)) == gl_label) out.push_back(c);
  return out;
}

SemisimpleClassLabel SLContext::scalar_class(const SemisimpleClassLabel& gl_label) const {
  SemisimpleClassLabel best = gl_label;
  for (std::int64_t c = 1; c < spec_.q - 1; ++c) best = std::min(best, gl_label.scaled(gl_->central_shift(c)));
  return best;
}

}  // namespace liechar
