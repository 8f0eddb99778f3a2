#include "liechar/jordan.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "liechar/errors.hpp"
#include "liechar/root_datum.hpp"

namespace liechar {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::string vector_string(const std::vector<long>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::vector<PartitionTuple> tuple_product(const std::vector<int>& sizes) {
  std::vector<PartitionTuple> out{PartitionTuple{}};
  for (int m : sizes) {
    std::vector<PartitionTuple> next;
    for (const auto& t : out)
      for (const auto& p : partitions(m)) {
        auto u = t;
        u.push_back(p);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

long to_long(const CyclotomicNumber& x) {
  if (!x.is_rational() || x.rational_value().get_den() != 1) throw InconsistentData("multiplicity is not an integer: " + x.to_string());
  return x.rational_value().get_num().get_si();
}

std::string irr_name(int i) { return "chi_" + std::to_string(i); }

TupleOrbit orbit_of(const DualCentralizer& h, const PartitionTuple& u) {
  std::set<PartitionTuple> s;
  for (std::size_t i = 0; i < h.component_group.size(); ++i) s.insert(h.act(i, u));
  return TupleOrbit(s.begin(), s.end());
}

TupleOrbit transport_orbit(const SemisimpleClassLabel& from, const TupleOrbit& o, const SemisimpleClassLabel& to,
                           const std::function<std::int64_t(std::int64_t)>& map) {
  std::set<PartitionTuple> s;
  for (const auto& u : o) s.insert(transport_tuple(from, u, to, map));
  return TupleOrbit(s.begin(), s.end());
}

}  // namespace

PartitionTuple DualCentralizer::act(std::size_t i, const PartitionTuple& u) const {
  const auto& perm = component_action.at(i);
  PartitionTuple r(u.size());
  for (std::size_t o = 0; o < u.size(); ++o) r[static_cast<std::size_t>(perm[o])] = u[o];
  return r;
}

DualCentralizer dual_centralizer(const GLContext& gl, const SemisimpleClassLabel& s) {
  if (s.rank() != gl.n()) throw InvalidArgument("label rank differs from the group rank");
  DualCentralizer h;
  h.label = s;
  int total = 0;
  std::vector<int> sizes;
  for (const auto& o : s.orbits) {
    h.factors.push_back({o.multiplicity, o.size(), o.exponents.front()});
    total += o.multiplicity;
    sizes.push_back(o.multiplicity);
  }
  h.epsilon_h = epsilon_sign(total);
  h.torus_types = tuple_product(sizes);
  h.unipotents = h.torus_types;
  std::vector<int> id(s.orbits.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  h.component_action = {id};
  return h;
}

DualCentralizer dual_centralizer(const SLContext& sl, const SemisimpleClassLabel& gl_label) {
  DualCentralizer h = dual_centralizer(sl.gl(), gl_label);
  h.component_group = sl.scalar_stabilizer(gl_label);
  h.component_action.clear();
  for (std::int64_t c : h.component_group) {
    std::int64_t shift = sl.gl().central_shift(c);
    std::vector<int> perm;
    for (const auto& o : gl_label.orbits) {
      int j = gl_label.orbit_index(o.exponents.front() + shift);
      if (j < 0) throw InconsistentData("scalar in the stabilizer moves the label");
      perm.push_back(j);
    }
    h.component_action.push_back(perm);
  }
  return h;
}

long unipotent_multiplicity(const DualCentralizer& h, const PartitionTuple& tau, const PartitionTuple& lambda,
                            std::uint64_t budget) {
  if (tau.size() != h.factors.size() || lambda.size() != h.factors.size())
    throw InvalidArgument("partition tuple does not match the centralizer");
  long prod = 1;
  for (std::size_t o = 0; o < h.factors.size(); ++o) {
    const auto& f = h.factors[o];
    long expected = sn_character(lambda[o], tau[o]);
    if (f.multiplicity == 1) {
      prod *= expected;
      continue;
    }
    std::int64_t qd = 1;
    for (int i = 0; i < f.degree; ++i) qd *= h.label.q;
    if (qd > 255) throw UnsupportedSpec("centralizer factor over F_" + std::to_string(qd) + " is out of range");
    auto ctx = GLContext::get(GroupSpec{Family::GL, f.multiplicity, static_cast<int>(qd)}, budget);
    int torus = -1;
    for (std::size_t t = 0; t < ctx->tori().size(); ++t)
      if (Partition(ctx->tori()[t].cycle_type.begin(), ctx->tori()[t].cycle_type.end()) == tau[o]) torus = static_cast<int>(t);
    if (torus < 0) throw InvalidArgument("no torus of type " + partition_string(tau[o]));
    TorusCharacter one{torus, std::vector<std::int64_t>(tau[o].size(), 0)};
    long m = to_long(inner_product(ctx->dl_character(one), ctx->table()[ctx->unipotent_characters().at(lambda[o])]));
    if (m != expected) throw InconsistentData("factor multiplicity differs from the symmetric group value");
    prod *= m;
  }
  return prod;
}

CyclotomicNumber frobenius_eigenvalue(const DualCentralizer& h, const PartitionTuple& u) {
  if (u.size() != h.factors.size()) throw InvalidArgument("partition tuple does not match the centralizer");
  for (std::size_t o = 0; o < u.size(); ++o)
    if (partition_size(u[o]) != h.factors[o].multiplicity) throw InvalidArgument("partition tuple does not match the centralizer");
  // every unipotent character of a GL factor lies in the principal series
  return CyclotomicNumber(1);
}

const PartitionTuple& JordanBijection::image(int irr) const {
  for (const auto& e : entries)
    if (e.irr == irr) return e.unipotent;
  throw InvalidArgument(irr_name(irr) + " is not in this series");
}

const JordanBijection& jordan_bijection(const GLContext& gl, int series) {
  static std::map<std::pair<const GLContext*, int>, JordanBijection> cache;
  auto key = std::make_pair(&gl, series);
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const auto& ser = gl.series().at(static_cast<std::size_t>(series));
  JordanBijection jb;
  jb.series = series;
  jb.centralizer = dual_centralizer(gl, ser.label);
  jb.sign = gl.epsilon_group() * jb.centralizer.epsilon_h;
  const auto& h = jb.centralizer;
  std::vector<std::vector<long>> g_vectors(ser.members.size());
  for (const auto& tau : h.torus_types) {
    std::vector<TorusCharacter> pairs;
    for (const auto& theta : ser.pairs)
      if (gl.centralizer_torus_type(theta) == tau) pairs.push_back(theta);
    if (pairs.empty()) throw InconsistentData("no torus character of type " + tuple_string(tau) + " over " + ser.label.canonical());
    std::vector<long> first;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto mult = gl.table().decompose(gl.dl_character(pairs[p]));
      std::vector<long> v;
      for (int m : ser.members) v.push_back(mult[static_cast<std::size_t>(m)]);
      if (p == 0)
        first = v;
      else if (v != first)
        throw InconsistentData("torus characters of one type give different multiplicities");
    }
    for (std::size_t i = 0; i < first.size(); ++i) g_vectors[i].push_back(first[i]);
    jb.pairs.push_back(std::move(pairs));
  }
  std::vector<std::vector<long>> h_vectors;
  for (const auto& u : h.unipotents) {
    std::vector<long> v;
    for (const auto& tau : h.torus_types) v.push_back(unipotent_multiplicity(h, tau, u));
    h_vectors.push_back(v);
  }
  if (h.unipotents.size() != ser.members.size())
    throw InconsistentData("series " + ser.label.canonical() + " has " + std::to_string(ser.members.size()) +
                           " members but the centralizer has " + std::to_string(h.unipotents.size()) + " unipotents");
  std::vector<char> used(h.unipotents.size(), 0);
  for (std::size_t i = 0; i < ser.members.size(); ++i) {
    int match = -1;
    for (std::size_t u = 0; u < h.unipotents.size(); ++u) {
      bool eq = true;
      for (std::size_t t = 0; t < h.torus_types.size(); ++t) eq = eq && g_vectors[i][t] == jb.sign * h_vectors[u][t];
      if (!eq) continue;
      if (match >= 0) throw InconsistentData("ambiguous Jordan match for " + irr_name(ser.members[i]));
      match = static_cast<int>(u);
    }
    if (match < 0) throw InconsistentData("no Jordan match for " + irr_name(ser.members[i]) + " with vector " + vector_string(g_vectors[i]));
    if (used[static_cast<std::size_t>(match)]) throw InconsistentData("Jordan map is not injective");
    used[static_cast<std::size_t>(match)] = 1;
    jb.entries.push_back({ser.members[i], h.unipotents[static_cast<std::size_t>(match)], g_vectors[i],
                          h_vectors[static_cast<std::size_t>(match)]});
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache.emplace(key, std::move(jb)).first->second;
}

PartitionTuple transport_tuple(const SemisimpleClassLabel& from, const PartitionTuple& t, const SemisimpleClassLabel& to,
                               const std::function<std::int64_t(std::int64_t)>& map) {
  if (from.orbits.size() != to.orbits.size() || t.size() != from.orbits.size())
    throw InvalidArgument("labels have different orbit counts");
  PartitionTuple r(t.size());
  std::vector<char> hit(t.size(), 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    int j = to.orbit_index(map(from.orbits[i].exponents.front()));
    if (j < 0 || hit[static_cast<std::size_t>(j)]) throw InvalidArgument("orbit map does not carry " + from.canonical() + " to " + to.canonical());
    hit[static_cast<std::size_t>(j)] = 1;
    r[static_cast<std::size_t>(j)] = t[i];
  }
  return r;
}

std::vector<CheckItem> verify_jordan_witnesses(const GLContext& gl) {
  std::vector<CheckItem> items;
  for (std::size_t s = 0; s < gl.series().size(); ++s) {
    const auto& label = gl.series()[s].label;
    try {
      const auto& jb = jordan_bijection(gl, static_cast<int>(s));
      for (const auto& e : jb.entries) {
        std::vector<long> rhs;
        for (long x : e.h_vector) rhs.push_back(jb.sign * x);
        std::size_t pairs = 0;
        for (const auto& p : jb.pairs) pairs += p.size();
        items.push_back({label.canonical() + " " + irr_name(e.irr), e.g_vector == rhs, vector_string(e.g_vector),
                         vector_string(rhs),
                         "u = " + tuple_string(e.unipotent) + ", sign " + std::to_string(jb.sign) + ", " +
                             std::to_string(pairs) + " torus characters"});
      }
    } catch (const InconsistentData& err) {
      items.push_back({label.canonical(), false, "", "", err.what()});
    }
  }
  return items;
}

namespace {

// rho lies in series s, image rho2 must lie in series s2 with J(rho2) = transport(J(rho)).
void compare_gl(const GLContext& gl, int s, int rho, int s2, int rho2, const std::function<std::int64_t(std::int64_t)>& map,
                const std::string& what, std::vector<CheckItem>& items) {
  const auto& ser = gl.series()[static_cast<std::size_t>(s)];
  std::string subject = what + " " + ser.label.canonical() + " " + irr_name(rho);
  try {
    if (s2 < 0) throw InconsistentData("image label has no series");
    const auto& target = gl.series()[static_cast<std::size_t>(s2)];
    if (rho2 < 0 || gl.series_of(rho2) != s2) {
      items.push_back({subject, false, "series " + target.label.canonical(),
                       rho2 < 0 ? "not irreducible" : "series " + gl.series()[static_cast<std::size_t>(gl.series_of(rho2))].label.canonical(), ""});
      return;
    }
    PartitionTuple lhs = jordan_bijection(gl, s2).image(rho2);
    PartitionTuple rhs = transport_tuple(ser.label, jordan_bijection(gl, s).image(rho), target.label, map);
    items.push_back({subject, lhs == rhs, tuple_string(lhs), tuple_string(rhs), irr_name(rho2)});
  } catch (const Error& err) {
    items.push_back({subject, false, "", "", err.what()});
  }
}

std::function<std::int64_t(std::int64_t)> label_map(LabelAction a, std::int64_t modulus) {
  if (a == LabelAction::Inversion) return [modulus](std::int64_t x) { return mod_floor(-x, modulus); };
  return [](std::int64_t x) { return x; };
}

}  // namespace

std::vector<CheckItem> verify_tensor_equivariance(const GLContext& gl) {
  std::vector<CheckItem> items;
  const auto& t = gl.table();
  for (std::int64_t c = 0; c < gl.q() - 1; ++c) {
    ClassFunction z = gl.central_linear_character(c);
    std::int64_t shift = gl.central_shift(c);
    for (std::size_t s = 0; s < gl.series().size(); ++s) {
      int s2 = gl.series_index(gl.series()[s].label.scaled(shift));
      for (int rho : gl.series()[s].members)
        compare_gl(gl, static_cast<int>(s), rho, s2, t.index_of(t[rho] * z), [shift](std::int64_t x) { return x + shift; },
                   "z^" + std::to_string(c), items);
    }
  }
  return items;
}

std::vector<CheckItem> verify_dual_equivariance(const GLContext& gl) {
  std::vector<CheckItem> items;
  auto inv = label_map(LabelAction::Inversion, gl.splitting_field().big_unit_order());
  for (std::size_t s = 0; s < gl.series().size(); ++s) {
    int s2 = gl.series_index(gl.series()[s].label.inverse());
    for (int rho : gl.series()[s].members) compare_gl(gl, static_cast<int>(s), rho, s2, gl.table().dual_index(rho), inv, "dual", items);
  }
  return items;
}

std::vector<CheckItem> verify_automorphism_equivariance(const GLContext& gl, const GroupAutomorphism& sigma) {
  if (sigma.classes_ptr() != gl.classes()) throw InvalidArgument("automorphism of another group");
  std::vector<CheckItem> items;
  auto perm = gl.table().twist_permutation(sigma);
  auto map = label_map(sigma.dual_action(), gl.splitting_field().big_unit_order());
  for (std::size_t s = 0; s < gl.series().size(); ++s) {
    const auto& label = gl.series()[s].label;
    int s2 = gl.series_index(sigma.dual_action() == LabelAction::Inversion ? label.inverse() : label);
    for (int rho : gl.series()[s].members)
      compare_gl(gl, static_cast<int>(s), rho, s2, perm[static_cast<std::size_t>(rho)], map, sigma.name(), items);
  }
  return items;
}

std::string orbit_string(const TupleOrbit& o) {
  std::string s = "{";
  for (std::size_t i = 0; i < o.size(); ++i) s += (i ? "," : "") + tuple_string(o[i]);
  return s + "}";
}

namespace {

DisconnectedJordanMap build_disconnected(const SLContext& sl, int series) {
  const auto& gl = sl.gl();
  const auto& sser = sl.series().at(static_cast<std::size_t>(series));
  DisconnectedJordanMap d;
  d.sl_series = series;
  d.gl_series = gl.series_index(sser.label);
  if (d.gl_series < 0) throw InconsistentData("no GL series over " + sser.label.canonical());
  d.centralizer = dual_centralizer(sl, sser.label);
  d.members = sser.members;
  const auto& h = d.centralizer;
  const auto& jb = jordan_bijection(gl, d.gl_series);
  const auto& glser = gl.series()[static_cast<std::size_t>(d.gl_series)];
  const std::string where = sser.label.canonical();

  std::set<TupleOrbit> orbits;
  for (const auto& u : h.unipotents) orbits.insert(orbit_of(h, u));
  d.orbits.assign(orbits.begin(), orbits.end());

  bool well_defined = true;
  for (int rho : d.members) {
    std::set<TupleOrbit> images;
    for (int chi : glser.members)
      if (sl.restriction()[static_cast<std::size_t>(chi)][static_cast<std::size_t>(rho)] != 0) {
        d.lifts[rho].push_back(chi);
        images.insert(orbit_of(h, jb.image(chi)));
      }
    if (images.size() != 1) {
      well_defined = false;
      d.checks.push_back({where + " " + irr_name(rho) + " well-defined", false, std::to_string(images.size()) + " orbits", "1 orbit",
                          "lifts in E(GL, s') give different orbits"});
      continue;
    }
    d.image[rho] = *images.begin();
  }
  if (well_defined) d.checks.push_back({where + " well-defined", true, "1", "1", std::to_string(d.members.size()) + " members"});

  for (const auto& o : d.orbits) {
    std::vector<int> fiber;
    for (const auto& [rho, img] : d.image)
      if (img == o) fiber.push_back(rho);
    d.fibers.push_back(fiber);
  }

  std::vector<std::vector<int>> perms;
  for (const auto& a : adjoint_action_representatives(sl.classes())) perms.push_back(sl.table().twist_permutation(a));
  std::set<int> done;
  for (int rho : d.members) {
    if (done.count(rho)) continue;
    std::set<int> orbit{rho};
    std::vector<int> stack{rho};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& p : perms) {
        int y = p[static_cast<std::size_t>(x)];
        if (orbit.insert(y).second) stack.push_back(y);
      }
    }
    for (int x : orbit) done.insert(x);
    d.adjoint_orbits.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(d.adjoint_orbits.begin(), d.adjoint_orbits.end());

  auto fiber_set = d.fibers;
  std::sort(fiber_set.begin(), fiber_set.end());
  auto fiber_text = [](const std::vector<std::vector<int>>& v) {
    std::string s;
    for (const auto& f : v) {
      s += "[";
      for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
      s += "]";
    }
    return s;
  };
  d.checks.push_back({where + " fibers are adjoint orbits", fiber_set == d.adjoint_orbits, fiber_text(fiber_set),
                      fiber_text(d.adjoint_orbits), ""});

  for (std::size_t i = 0; i < d.orbits.size(); ++i) {
    long stab = static_cast<long>(h.component_group.size() / d.orbits[i].size());
    d.checks.push_back({where + " fiber over " + orbit_string(d.orbits[i]), static_cast<long>(d.fibers[i].size()) == stab,
                        std::to_string(d.fibers[i].size()), std::to_string(stab), "|Gamma| = stabilizer order"});
  }

  // eps_G eps_H0 for SL_n and PGL_n agrees with the GL sign: both ranks drop by one
  for (std::size_t t = 0; t < h.torus_types.size(); ++t) {
    const auto& tau = h.torus_types[t];
    for (const auto& theta : jb.pairs[t]) {
      auto mult = sl.table().decompose(sl.restrict_from_gl(gl.dl_character(theta)));
      for (const auto& [rho, img] : d.image) {
        long rhs = 0;
        for (const auto& u : img) rhs += unipotent_multiplicity(h, tau, u);
        rhs *= jb.sign;
        long lhs = mult[static_cast<std::size_t>(rho)];
        d.checks.push_back({where + " " + tuple_string(tau) + " " + irr_name(rho) + " sum identity", lhs == rhs,
                            std::to_string(lhs), std::to_string(rhs), ""});
      }
    }
  }
  return d;
}

}  // namespace

DisconnectedJordanMap disconnected_jordan(const SLContext& sl, int series, bool enforce) {
  static std::map<std::pair<const SLContext*, int>, DisconnectedJordanMap> cache;
  auto key = std::make_pair(&sl, series);
  DisconnectedJordanMap d;
  bool found = false;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(key);
    if (it != cache.end()) {
      d = it->second;
      found = true;
    }
  }
  if (!found) {
    d = build_disconnected(sl, series);
    std::lock_guard<std::mutex> lock(cache_mutex());
    cache.emplace(key, d);
  }
  if (enforce)
    for (const auto& c : d.checks)
      if (!c.pass) throw InconsistentData("disconnected Jordan property failed: " + c.subject + ": " + c.lhs + " vs " + c.rhs);
  return d;
}

std::vector<CheckItem> verify_disconnected_jordan(const SLContext& sl) {
  std::vector<CheckItem> items;
  for (std::size_t s = 0; s < sl.series().size(); ++s) {
    try {
      auto d = disconnected_jordan(sl, static_cast<int>(s), false);
      items.insert(items.end(), d.checks.begin(), d.checks.end());
    } catch (const Error& err) {
      items.push_back({sl.series()[s].label.canonical(), false, "", "", err.what()});
    }
  }
  return items;
}

namespace {

std::vector<CheckItem> compare_sl(const SLContext& sl, const std::vector<int>& perm, LabelAction action, const std::string& what) {
  const auto& gl = sl.gl();
  const std::int64_t M = gl.splitting_field().big_unit_order();
  std::vector<CheckItem> items;
  for (std::size_t s = 0; s < sl.series().size(); ++s) {
    const auto& label = sl.series()[s].label;
    SemisimpleClassLabel moved = action == LabelAction::Inversion ? label.inverse() : label;
    SemisimpleClassLabel target = sl.scalar_class(moved);
    std::int64_t shift = -1;
    for (std::int64_t c = 0; c < gl.q() - 1 && shift < 0; ++c)
      if (moved.scaled(gl.central_shift(c)) == target) shift = gl.central_shift(c);
    auto base = label_map(action, M);
    auto map = [base, shift](std::int64_t x) { return base(x) + shift; };
    int s2 = -1;
    for (std::size_t k = 0; k < sl.series().size(); ++k)
      if (sl.series()[k].label == target) s2 = static_cast<int>(k);
    for (int rho : sl.series()[s].members) {
      int rho2 = perm[static_cast<std::size_t>(rho)];
      std::string subject = what + " " + label.canonical() + " " + irr_name(rho);
      try {
        if (s2 < 0 || sl.series_of(rho2) != s2) {
          items.push_back({subject, false, "series " + target.canonical(),
                           "series " + sl.series()[static_cast<std::size_t>(sl.series_of(rho2))].label.canonical(), ""});
          continue;
        }
        TupleOrbit lhs = disconnected_jordan(sl, s2).image.at(rho2);
        TupleOrbit rhs = transport_orbit(label, disconnected_jordan(sl, static_cast<int>(s)).image.at(rho), target, map);
        items.push_back({subject, lhs == rhs, orbit_string(lhs), orbit_string(rhs), irr_name(rho2)});
      } catch (const Error& err) {
        items.push_back({subject, false, "", "", err.what()});
      }
    }
  }
  return items;
}

}  // namespace

std::vector<CheckItem> verify_dual_equivariance(const SLContext& sl) {
  std::vector<int> perm;
  for (int i = 0; i < sl.table().size(); ++i) perm.push_back(sl.table().dual_index(i));
  return compare_sl(sl, perm, LabelAction::Inversion, "dual");
}

std::vector<CheckItem> verify_automorphism_equivariance(const SLContext& sl, const GroupAutomorphism& sigma) {
  if (sigma.classes_ptr() != sl.classes()) throw InvalidArgument("automorphism of another group");
  return compare_sl(sl, sl.table().twist_permutation(sigma), sigma.dual_action(), sigma.name());
}

bool two_h1_vanishes(const GroupSpec& spec) {
  std::string name = (spec.family == Family::GL ? "GL" : "SL") + std::to_string(spec.n);
  auto r = BasedRootDatum::named(name);
  return h1_frobenius(center_component_group(r, FrobeniusDatum::split(r, spec.q))).two_h1_vanishes;
}

std::vector<CheckItem> verify_main_theorem(const GroupSpec& spec, std::uint64_t budget) {
  if (!two_h1_vanishes(spec))
    throw PreconditionFailed("2 H^1(F, Z(G)) is nonzero for " + spec.to_string() + "; the pinned involution need not be dualizing");
  std::shared_ptr<const SLContext> sl;
  std::shared_ptr<const GLContext> gl;
  std::shared_ptr<const ConjugacyData> classes;
  if (spec.family == Family::GL) {
    gl = GLContext::get(spec, budget);
    classes = gl->classes();
  } else {
    sl = SLContext::get(spec, budget);
    classes = sl->classes();
  }
  const auto& table = gl ? gl->table() : sl->table();
  auto iota = duality_involution(classes, classes->group->standard_pinning());
  std::vector<CheckItem> items;
  for (int i = 0; i < table.size(); ++i) {
    bool dualizes = twist_by_automorphism(table[i], iota) == table[table.dual_index(i)];
    CyclotomicNumber omega;
    std::string u;
    if (gl) {
      const auto& jb = jordan_bijection(*gl, gl->series_of(i));
      omega = frobenius_eigenvalue(jb.centralizer, jb.image(i));
      u = tuple_string(jb.image(i));
    } else {
      auto d = disconnected_jordan(*sl, sl->series_of(i));
      const auto& orbit = d.image.at(i);
      omega = frobenius_eigenvalue(d.centralizer, orbit.front());
      u = orbit_string(orbit);
    }
    bool sign = omega == CyclotomicNumber(1) || omega == CyclotomicNumber(-1);
    items.push_back({irr_name(i), dualizes && sign, std::string("rho o iota = rho^vee: ") + (dualizes ? "true" : "false"),
                     "omega = " + omega.to_string(), "u = " + u});
  }
  return items;
}

std::vector<CheckItem> verify_rigidity(const SLContext& sl) {
  if (sl.spec().n != 2) throw UnsupportedSpec("rigidity check runs on SL_2 only");
  const auto& classes = sl.classes();
  const auto& g = *classes->group;
  const auto& f = g.field();
  const auto& t = sl.table();
  const int q = sl.spec().q;
  std::vector<std::set<std::int64_t>> hc(static_cast<std::size_t>(t.size()));
  for (std::int64_t k = 0; k < q - 1; ++k) {
    std::vector<CyclotomicNumber> v;
    for (ElementId b : g.borel()) v.push_back(CyclotomicNumber::root_of_unity(q - 1, k * f.log(g.element(b).at(0, 0))));
    auto mult = t.decompose(induce(SubgroupFunction{classes, g.borel(), v}));
    for (std::size_t i = 0; i < mult.size(); ++i)
      if (mult[i]) hc[i].insert(std::min(k, mod_floor(-k, q - 1)));
  }
  for (int i = 0; i < t.size(); ++i)
    if (hc[static_cast<std::size_t>(i)].empty()) hc[static_cast<std::size_t>(i)].insert(-1 - i);
  auto iota = duality_involution(classes, g.standard_pinning());
  std::vector<GroupAutomorphism> reps{identity_automorphism(classes)};
  for (auto& a : adjoint_action_representatives(classes)) reps.push_back(a);
  auto iperm = t.twist_permutation(iota);
  std::vector<CheckItem> items;
  for (int i = 0; i < t.size(); ++i) {
    int dual = t.dual_index(i);
    int image = iperm[static_cast<std::size_t>(i)];
    bool same_series = hc[static_cast<std::size_t>(image)] == hc[static_cast<std::size_t>(dual)];
    for (const auto& a : reps) {
      int twisted = t.twist_permutation(a)[static_cast<std::size_t>(dual)];
      bool premise = image == twisted;
      bool ok = !premise || image == dual;
      items.push_back({irr_name(i) + " " + a.name(), ok && same_series,
                       premise ? "rho o iota = rho^vee o " + a.name() : "premise false", image == dual ? "rho o iota = rho^vee" : "rho o iota != rho^vee",
                       same_series ? "" : "rho o iota leaves the Harish-Chandra series of rho^vee"});
    }
  }
  return items;
}

std::vector<CheckItem> verify_torus_lemma(const GroupSpec& spec, std::uint64_t budget) {
  std::shared_ptr<const GLContext> gl;
  std::shared_ptr<const ConjugacyData> classes;
  if (spec.family == Family::GL) {
    gl = GLContext::get(spec, budget);
    classes = gl->classes();
  } else {
    gl = GLContext::get(spec.with_family(Family::GL), budget);
    classes = cached_classes(spec, budget);
  }
  const auto& g = *classes->group;
  auto iota = duality_involution(classes, g.standard_pinning());
  std::vector<CheckItem> items;
  for (std::size_t ti = 0; ti < gl->tori().size(); ++ti) {
    const auto& torus = gl->tori()[ti];
    const auto& emb = gl->torus_embedding(static_cast<int>(ti));
    std::vector<std::pair<ElementId, std::vector<std::int64_t>>> members;
    std::vector<std::int64_t> j(torus.factor_orders.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
      if (b == j.size()) {
        ElementId id = emb.element(g, j);
        if (id >= 0) members.emplace_back(id, j);
        return;
      }
      for (std::int64_t v = 0; v < torus.factor_orders[b]; ++v) {
        j[b] = v;
        rec(b + 1);
      }
    };
    rec(0);
    std::map<ElementId, std::size_t> index;
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i].first] = i;
    // the g with g iota(T) g^-1 = T, as maps on T
    std::vector<std::vector<std::size_t>> moves;
    for (std::size_t x = 0; x < g.order(); ++x) {
      ElementId gx = static_cast<ElementId>(x), gi = g.inverse(gx);
      std::vector<std::size_t> m;
      for (const auto& [id, exps] : members) {
        auto it = index.find(g.mul(g.mul(gx, iota.apply(id)), gi));
        if (it == index.end()) break;
        m.push_back(it->second);
      }
      if (m.size() == members.size()) moves.push_back(std::move(m));
    }
    std::int64_t L = 1;
    for (auto o : torus.factor_orders) L = lcm64(L, o);
    for (const auto& theta : gl->torus_characters()) {
      if (theta.torus != static_cast<int>(ti)) continue;
      std::vector<std::int64_t> x;
      for (const auto& [id, exps] : members) {
        std::int64_t e = 0;
        for (std::size_t b = 0; b < exps.size(); ++b)
          e = mod_floor(e + theta.k[b] * exps[b] % torus.factor_orders[b] * (L / torus.factor_orders[b]), L);
        x.push_back(e);
      }
      bool found = false;
      for (const auto& m : moves) {
        bool ok = true;
        for (std::size_t i = 0; i < members.size() && ok; ++i) ok = x[m[i]] == mod_floor(-x[i], L);
        if (ok) {
          found = true;
          break;
        }
      }
      TorusCharacter inv{theta.torus, theta.k};
      for (auto& k : inv.k) k = -k;
      SemisimpleClassLabel a = gl->classify_pair(gl->normal_form(inv)), b = gl->classify_pair(theta).inverse();
      std::ostringstream subject;
      subject << torus.label() << " k=(";
      for (std::size_t i = 0; i < theta.k.size(); ++i) subject << (i ? "," : "") << theta.k[i];
      subject << ")";
      items.push_back({subject.str(), found && a == b, found ? "conjugating element found" : "no conjugating element",
                       a.canonical() + " = " + b.canonical(), std::to_string(moves.size()) + " candidates"});
    }
  }
  return items;
}

}  // namespace liechar
