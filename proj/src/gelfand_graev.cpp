#include "liechar/gelfand_graev.hpp"

#include <algorithm>
#include <set>

#include "liechar/errors.hpp"

namespace liechar {

namespace {

long integer_degree(const ClassFunction& f) {
  if (!f.degree().is_rational() || f.degree().rational_value().get_den() != 1) throw InconsistentData("degree is not an integer");
  return f.degree().rational_value().get_num().get_si();
}

}  // namespace

WhittakerDatum::WhittakerDatum(std::shared_ptr<const ConjugacyData> classes, std::vector<int> functional)
    : classes_(std::move(classes)), functional_(std::move(functional)) {
  const auto& g = *classes_->group;
  const auto& f = g.field();
  if (static_cast<int>(functional_.size()) != g.n() - 1) throw InvalidArgument("functional needs one entry per simple root");
  for (int a : functional_)
    if (a <= 0 || a >= f.order()) throw InvalidArgument("degenerate or invalid Whittaker functional");
  const int p = f.characteristic();
  for (ElementId u : g.unipotent()) {
    const Matrix& m = g.element(u);
    int x = 0;
    for (int i = 0; i + 1 < g.n(); ++i) x = f.add(x, f.mul(functional_[static_cast<std::size_t>(i)], m.at(i, i + 1)));
    values_.push_back(CyclotomicNumber::root_of_unity(p, f.trace(x)));
  }
  // certificate: homomorphism on U and nontrivial on every simple root group
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < g.unipotent().size(); ++i) index[static_cast<std::size_t>(g.unipotent()[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < g.unipotent().size(); ++i)
    for (std::size_t j = 0; j < g.unipotent().size(); ++j) {
      int k = index[static_cast<std::size_t>(g.mul(g.unipotent()[i], g.unipotent()[j]))];
      if (k < 0 || !(values_[i] * values_[j] == values_[static_cast<std::size_t>(k)]))
        throw InconsistentData("Whittaker character is not a homomorphism");
    }
  for (int r = 0; r + 1 < g.n(); ++r) {
    bool nontrivial = false;
    for (int c = 1; c < f.order() && !nontrivial; ++c) {
      int k = index[static_cast<std::size_t>(g.find(g.algebra().elementary(r, r + 1, c)))];
      nontrivial = !(values_[static_cast<std::size_t>(k)] == CyclotomicNumber(1));
    }
    if (!nontrivial) throw InvalidArgument("Whittaker character is trivial on a simple root group");
  }
}

WhittakerDatum WhittakerDatum::inverse() const {
  const auto& f = classes_->group->field();
  std::vector<int> a;
  for (int x : functional_) a.push_back(f.neg(x));
  return WhittakerDatum(classes_, a);
}

Pinning WhittakerDatum::pinning() const {
  const auto& f = classes_->group->field();
  int kappa = 1;
  while (kappa < f.order() && f.trace(kappa) != 1) ++kappa;
  if (kappa == f.order()) throw InconsistentData("no element of trace 1");
  // a_i c_i = kappa for every i, so psi restricts to the same additive character on each root group
  Pinning p;
  for (int a : functional_) p.coefficients.push_back(f.div(kappa, a));
  return p;
}

std::string WhittakerDatum::descriptor() const {
  std::string s = "psi(";
  for (std::size_t i = 0; i < functional_.size(); ++i) s += (i ? "," : "") + std::to_string(functional_[i]);
  return s + ")";
}

std::vector<std::vector<int>> nondegenerate_functionals(const GroupRealization& g) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i + 1 < g.n(); ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& a : out)
      for (int c = 1; c < g.q(); ++c) {
        auto b = a;
        b.push_back(c);
        next.push_back(b);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<int> torus_orbit_representative(const GroupRealization& g, const std::vector<int>& a) {
  const auto& f = g.field();
  std::vector<int> best = a;
  for (ElementId t : g.split_torus()) {
    const Matrix& m = g.element(t);
    std::vector<int> b;
    // (t.psi)(u) = psi(t^-1 u t) scales a_i by t_{i+1} / t_i
    for (std::size_t i = 0; i < a.size(); ++i)
      b.push_back(f.mul(a[i], f.div(m.at(static_cast<int>(i) + 1, static_cast<int>(i) + 1), m.at(static_cast<int>(i), static_cast<int>(i)))));
    best = std::min(best, b);
  }
  return best;
}

std::vector<WhittakerDatum> whittaker_data(std::shared_ptr<const ConjugacyData> classes) {
  std::set<std::vector<int>> reps;
  for (const auto& a : nondegenerate_functionals(*classes->group)) reps.insert(torus_orbit_representative(*classes->group, a));
  std::vector<WhittakerDatum> out;
  for (const auto& a : reps) out.emplace_back(classes, a);
  return out;
}

ClassFunction gelfand_graev(const WhittakerDatum& psi) {
  const auto& g = *psi.classes()->group;
  return induce(SubgroupFunction{psi.classes(), g.unipotent(), psi.values()});
}

GenericDecomposition decompose_gelfand_graev(const WhittakerDatum& psi, const CharacterTable& table,
                                             const std::vector<std::vector<int>>& series) {
  if (table.classes_ptr() != psi.classes()) throw InvalidArgument("table of another group");
  GenericDecomposition d;
  d.gamma = gelfand_graev(psi);
  d.multiplicities = table.decompose(d.gamma);
  for (long m : d.multiplicities)
    if (m < 0 || m > 1) throw InconsistentData("Gelfand-Graev character is not multiplicity-free");
  for (const auto& members : series) {
    int found = -1;
    for (int i : members)
      if (d.multiplicities[static_cast<std::size_t>(i)]) {
        if (found >= 0) throw InconsistentData("two generic constituents in one series");
        found = i;
      }
    if (found < 0) throw InconsistentData("series without a generic constituent");
    d.generic.push_back(found);
  }
  return d;
}

int generic_constituent(const GenericDecomposition& d, int series) { return d.generic.at(static_cast<std::size_t>(series)); }

std::vector<CheckItem> verify_generic_duality(const GroupSpec& spec, std::uint64_t budget) {
  std::shared_ptr<const ConjugacyData> classes;
  const CharacterTable* table = nullptr;
  std::vector<std::vector<int>> series;
  std::vector<std::string> labels;
  std::shared_ptr<const GLContext> gl;
  std::shared_ptr<const SLContext> sl;
  if (spec.family == Family::GL) {
    gl = GLContext::get(spec, budget);
    classes = gl->classes();
    table = &gl->table();
    for (const auto& s : gl->series()) {
      series.push_back(s.members);
      labels.push_back(s.label.canonical());
    }
  } else {
    sl = SLContext::get(spec, budget);
    classes = sl->classes();
    table = &sl->table();
    for (const auto& s : sl->series()) {
      series.push_back(s.members);
      labels.push_back(s.label.canonical());
    }
  }
  const auto& g = *classes->group;
  std::vector<CheckItem> items;
  for (const auto& psi : whittaker_data(classes)) {
    const std::string name = psi.descriptor();
    auto iota = duality_involution(classes, psi.pinning());
    ClassFunction gamma = gelfand_graev(psi);
    ClassFunction lhs = twist_by_automorphism(gamma, iota);
    ClassFunction rhs = gelfand_graev(psi.inverse());
    items.push_back({name + " Gamma o iota = Gamma_psi^-1", lhs == rhs, "", "", lhs == rhs ? "" : "class functions differ"});
    long degree = integer_degree(gamma);
    long expected = static_cast<long>(g.order() / g.unipotent().size());
    items.push_back({name + " degree", degree == expected, std::to_string(degree), std::to_string(expected), ""});
    for (const auto& a : nondegenerate_functionals(g))
      if (torus_orbit_representative(g, a) == psi.functional() && a != psi.functional()) {
        WhittakerDatum other(classes, a);
        items.push_back({name + " orbit member " + other.descriptor(), gelfand_graev(other) == gamma, "", "", ""});
      }
    GenericDecomposition d;
    try {
      d = decompose_gelfand_graev(psi, *table, series);
    } catch (const InconsistentData& err) {
      items.push_back({name + " generic constituents", false, "", "", err.what()});
      continue;
    }
    long total = 0;
    for (std::size_t i = 0; i < d.multiplicities.size(); ++i) total += d.multiplicities[i] * table->degrees()[i];
    items.push_back({name + " multiplicity-free, one generic per series", total == expected, std::to_string(total),
                     std::to_string(expected), std::to_string(d.generic.size()) + " series"});
    auto perm = table->twist_permutation(iota);
    for (std::size_t s = 0; s < series.size(); ++s) {
      int gen = d.generic[s];
      int a = perm[static_cast<std::size_t>(gen)], b = table->dual_index(gen);
      items.push_back({name + " " + labels[s] + " chi_" + std::to_string(gen), a == b, "chi_" + std::to_string(a),
                       "chi_" + std::to_string(b), "gamma o iota vs gamma^vee"});
    }
  }
  return items;
}

}  // namespace liechar
