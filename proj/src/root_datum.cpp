#include "liechar/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "liechar/errors.hpp"

namespace liechar {

namespace {

std::vector<Integer> to_integers(const LatticeVector& v) { return {v.begin(), v.end()}; }

LatticeVector to_lattice(const std::vector<Integer>& v) {
  LatticeVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.get_si());
  return r;
}

std::string key_of(const IntegerMatrix& m) { return m.to_string(); }

IntegerMatrix negate(const IntegerMatrix& m) { return IntegerMatrix(m.rows(), m.cols()) - m; }

IntegerMatrix cartan_a(int n) {
  IntegerMatrix c(n, n);
  for (int i = 0; i < n; ++i) {
    c(i, i) = 2;
    if (i + 1 < n) c(i, i + 1) = c(i + 1, i) = -1;
  }
  return c;
}

}  // namespace

long BasedRootDatum::pairing(const LatticeVector& x, const LatticeVector& y) {
  if (x.size() != y.size()) throw InvalidArgument("pairing of vectors of different rank");
  long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

BasedRootDatum BasedRootDatum::from_simple(std::string name, int rank, const std::vector<LatticeVector>& simple_roots,
                                           const std::vector<LatticeVector>& simple_coroots) {
  if (simple_roots.size() != simple_coroots.size()) throw InvalidArgument("simple roots and coroots differ in count");
  int s = static_cast<int>(simple_roots.size());
  struct Entry {
    LatticeVector root, coroot;
    std::vector<long> coords;
  };
  std::vector<Entry> found;
  std::map<LatticeVector, int> seen;
  std::deque<int> queue;
  for (int i = 0; i < s; ++i) {
    if (static_cast<int>(simple_roots[i].size()) != rank || static_cast<int>(simple_coroots[i].size()) != rank)
      throw InvalidArgument("simple (co)root has wrong rank");
    std::vector<long> c(s, 0);
    c[i] = 1;
    seen[simple_roots[i]] = static_cast<int>(found.size());
    queue.push_back(static_cast<int>(found.size()));
    found.push_back({simple_roots[i], simple_coroots[i], c});
  }
  while (!queue.empty()) {
    Entry cur = found[static_cast<std::size_t>(queue.front())];
    queue.pop_front();
    for (int i = 0; i < s; ++i) {
      long a = pairing(cur.root, simple_coroots[i]);
      long b = pairing(simple_roots[i], cur.coroot);
      Entry nxt = cur;
      for (int k = 0; k < rank; ++k) {
        nxt.root[k] -= a * simple_roots[i][k];
        nxt.coroot[k] -= b * simple_coroots[i][k];
      }
      nxt.coords[i] -= a;
      if (seen.count(nxt.root)) continue;
      if (found.size() > 10000) throw InvalidArgument("root system does not close; not a finite root datum");
      seen[nxt.root] = static_cast<int>(found.size());
      queue.push_back(static_cast<int>(found.size()));
      found.push_back(nxt);
    }
  }
  auto height = [](const Entry& e) { return std::accumulate(e.coords.begin(), e.coords.end(), 0L); };
  std::sort(found.begin(), found.end(), [&](const Entry& x, const Entry& y) {
    long hx = height(x), hy = height(y);
    bool px = hx > 0, py = hy > 0;
    if (px != py) return px;
    long ax = px ? hx : -hx, ay = py ? hy : -hy;
    if (ax != ay) return ax < ay;
    return x.coords > y.coords;
  });
  BasedRootDatum r;
  r.name = std::move(name);
  r.rank = rank;
  for (auto& e : found) {
    r.roots.push_back(e.root);
    r.coroots.push_back(e.coroot);
    r.simple_coordinates.push_back(e.coords);
  }
  for (int i = 0; i < s; ++i) r.simple.push_back(r.root_index(simple_roots[i]));
  r.validate();
  return r;
}

BasedRootDatum BasedRootDatum::named(std::string_view name) {
  auto rank_of = [&](std::string_view prefix) -> int {
    if (name.substr(0, prefix.size()) != prefix || name.size() != prefix.size() + 1) return -1;
    char c = name[prefix.size()];
    if (c < '1' || c > '9') return -1;
    return c - '0';
  };
  int n;
  if (name.substr(0, 3) == "PGL" && (n = rank_of("PGL")) >= 2 && n <= 3) {
    IntegerMatrix c = cartan_a(n - 1);
    std::vector<LatticeVector> roots, coroots;
    for (int i = 0; i < n - 1; ++i) {
      LatticeVector a(n - 1, 0), b(n - 1, 0);
      a[i] = 1;
      for (int j = 0; j < n - 1; ++j) b[j] = c(i, j).get_si();
      roots.push_back(a);
      coroots.push_back(b);
    }
    return from_simple(std::string(name), n - 1, roots, coroots);
  }
  if ((n = rank_of("GL")) >= 1 && n <= 3) {
    std::vector<LatticeVector> roots;
    for (int i = 0; i + 1 < n; ++i) {
      LatticeVector a(n, 0);
      a[i] = 1;
      a[i + 1] = -1;
      roots.push_back(a);
    }
    return from_simple(std::string(name), n, roots, roots);
  }
  if ((n = rank_of("SL")) >= 2 && n <= 3) {
    IntegerMatrix c = cartan_a(n - 1);
    std::vector<LatticeVector> roots, coroots;
    for (int i = 0; i < n - 1; ++i) {
      LatticeVector a(n - 1, 0), b(n - 1, 0);
      for (int j = 0; j < n - 1; ++j) a[j] = c(i, j).get_si();
      b[i] = 1;
      roots.push_back(a);
      coroots.push_back(b);
    }
    return from_simple(std::string(name), n - 1, roots, coroots);
  }
  throw UnsupportedSpec("unknown root datum name: " + std::string(name));
}

int BasedRootDatum::root_index(const LatticeVector& v) const {
  auto it = std::find(roots.begin(), roots.end(), v);
  return it == roots.end() ? -1 : static_cast<int>(it - roots.begin());
}

int BasedRootDatum::coroot_index(const LatticeVector& v) const {
  auto it = std::find(coroots.begin(), coroots.end(), v);
  return it == coroots.end() ? -1 : static_cast<int>(it - coroots.begin());
}

bool BasedRootDatum::is_positive(int i) const {
  const auto& c = simple_coordinates[static_cast<std::size_t>(i)];
  return std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
}

int BasedRootDatum::positive_root_count() const {
  int n = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) n += is_positive(static_cast<int>(i));
  return n;
}

void BasedRootDatum::validate() const {
  if (roots.size() != coroots.size() || roots.size() != simple_coordinates.size())
    throw InconsistentData("root datum arrays differ in length");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (pairing(roots[i], coroots[i]) != 2) throw InconsistentData("<alpha, alpha^vee> != 2 in " + name);
    const auto& c = simple_coordinates[i];
    bool nonneg = std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](long x) { return x <= 0; });
    if (!nonneg && !nonpos) throw InconsistentData("simple roots do not form a base of " + name);
    LatticeVector sum(static_cast<std::size_t>(rank), 0);
    for (std::size_t j = 0; j < simple.size(); ++j)
      for (int k = 0; k < rank; ++k) sum[k] += c[j] * roots[static_cast<std::size_t>(simple[j])][k];
    if (sum != roots[i]) throw InconsistentData("root coordinates are inconsistent in " + name);
    for (std::size_t j = 0; j < roots.size(); ++j) {
      long a = pairing(roots[j], coroots[i]);
      long b = pairing(roots[i], coroots[j]);
      LatticeVector x = roots[j], y = coroots[j];
      for (int k = 0; k < rank; ++k) {
        x[k] -= a * roots[i][k];
        y[k] -= b * coroots[i][k];
      }
      int idx = root_index(x);
      if (idx < 0 || coroots[static_cast<std::size_t>(idx)] != y)
        throw InconsistentData("reflections do not preserve the root datum " + name);
    }
  }
}

bool BasedRootDatum::same_datum(const BasedRootDatum& other) const {
  if (rank != other.rank) return false;
  std::set<std::pair<LatticeVector, LatticeVector>> a, b;
  for (std::size_t i = 0; i < roots.size(); ++i) a.insert({roots[i], coroots[i]});
  for (std::size_t i = 0; i < other.roots.size(); ++i) b.insert({other.roots[i], other.coroots[i]});
  if (a != b) return false;
  std::set<LatticeVector> sa, sb;
  for (int i : simple) sa.insert(roots[static_cast<std::size_t>(i)]);
  for (int i : other.simple) sb.insert(other.roots[static_cast<std::size_t>(i)]);
  return sa == sb;
}

BasedRootDatum dual_datum(const BasedRootDatum& r) {
  std::string name = r.name;
  if (name.rfind("PGL", 0) == 0) {
    name = name.substr(1);
    name[0] = 'S';
  } else if (name.rfind("SL", 0) == 0) {
    name = "PGL" + name.substr(2);
  } else if (name.rfind("GL", 0) != 0) {
    name += "^vee";
  }
  std::vector<LatticeVector> sr, sc;
  for (int i : r.simple) {
    sr.push_back(r.coroots[static_cast<std::size_t>(i)]);
    sc.push_back(r.roots[static_cast<std::size_t>(i)]);
  }
  return BasedRootDatum::from_simple(name, r.rank, sr, sc);
}

WeylGroup weyl_group(const BasedRootDatum& r) {
  WeylGroup w;
  for (int i : r.simple) {
    IntegerMatrix s = IntegerMatrix::identity(r.rank);
    const auto& a = r.roots[static_cast<std::size_t>(i)];
    const auto& b = r.coroots[static_cast<std::size_t>(i)];
    for (int x = 0; x < r.rank; ++x)
      for (int y = 0; y < r.rank; ++y) s(x, y) -= a[x] * b[y];
    w.simple_reflections.push_back(s);
  }
  std::map<std::string, int> seen;
  w.elements.push_back(IntegerMatrix::identity(r.rank));
  w.lengths.push_back(0);
  seen[key_of(w.elements[0])] = 0;
  for (std::size_t head = 0; head < w.elements.size(); ++head) {
    for (const auto& s : w.simple_reflections) {
      IntegerMatrix nxt = w.elements[head] * s;
      auto k = key_of(nxt);
      if (seen.count(k)) continue;
      seen[k] = static_cast<int>(w.elements.size());
      w.lengths.push_back(w.lengths[head] + 1);
      w.elements.push_back(std::move(nxt));
    }
  }
  int found = -1;
  for (std::size_t e = 0; e < w.elements.size(); ++e) {
    bool all_negative = true;
    for (int i : r.simple) {
      auto img = to_lattice(w.elements[e].apply(to_integers(r.roots[static_cast<std::size_t>(i)])));
      int idx = r.root_index(img);
      if (idx < 0) throw InconsistentData("Weyl element does not preserve roots");
      if (r.is_positive(idx)) all_negative = false;
    }
    if (all_negative) {
      if (found >= 0) throw InconsistentData("longest element not unique");
      found = static_cast<int>(e);
    }
  }
  if (found < 0) throw InconsistentData("no longest element");
  w.longest = found;
  if (w.lengths[static_cast<std::size_t>(found)] != r.positive_root_count())
    throw InconsistentData("length of w0 differs from the number of positive roots");
  return w;
}

PinnedAutomorphism make_pinned_automorphism(const BasedRootDatum& r, const IntegerMatrix& m) {
  if (m.rows() != r.rank || m.cols() != r.rank) throw InvalidArgument("lattice map has wrong size");
  IntegerMatrix dual = m.unimodular_inverse().transpose();
  PinnedAutomorphism a{m, {}};
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    int j = r.root_index(to_lattice(m.apply(to_integers(r.roots[i]))));
    if (j < 0) throw InvalidArgument("lattice map does not preserve roots");
    if (to_lattice(dual.apply(to_integers(r.coroots[i]))) != r.coroots[static_cast<std::size_t>(j)])
      throw InvalidArgument("lattice map does not preserve the root-coroot bijection");
  }
  for (int i : r.simple) {
    int j = r.root_index(to_lattice(m.apply(to_integers(r.roots[static_cast<std::size_t>(i)]))));
    auto it = std::find(r.simple.begin(), r.simple.end(), j);
    if (it == r.simple.end()) throw InvalidArgument("lattice map does not preserve the simple roots");
    a.simple_permutation.push_back(static_cast<int>(it - r.simple.begin()));
  }
  return a;
}

PinnedAutomorphism identity_automorphism(const BasedRootDatum& r) {
  return make_pinned_automorphism(r, IntegerMatrix::identity(r.rank));
}

PinnedAutomorphism chevalley_datum_involution(const BasedRootDatum& r) {
  auto w = weyl_group(r);
  auto a = make_pinned_automorphism(r, negate(w.w0()));
  if (a.lattice_map * a.lattice_map != IntegerMatrix::identity(r.rank))
    throw InconsistentData("-w0 is not an involution");
  return a;
}

PinnedAutomorphism dual_automorphism(const BasedRootDatum& r, const PinnedAutomorphism& sigma) {
  make_pinned_automorphism(r, sigma.lattice_map);
  return make_pinned_automorphism(dual_datum(r), sigma.lattice_map.unimodular_inverse().transpose());
}

FrobeniusDatum FrobeniusDatum::split(const BasedRootDatum& r, long q) {
  if (q < 2) throw InvalidArgument("q must be at least 2");
  return {q, identity_automorphism(r)};
}

long CenterComponentGroup::order() const {
  long o = 1;
  for (long d : divisors) o *= d;
  return o;
}

CenterComponentGroup center_component_group(const BasedRootDatum& r, const FrobeniusDatum& f) {
  int s = r.semisimple_rank();
  CenterComponentGroup z;
  if (s == 0) {
    z.frobenius_action = IntegerMatrix(0, 0);
    return z;
  }
  IntegerMatrix m(r.rank, s);
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < r.rank; ++i) m(i, j) = r.roots[static_cast<std::size_t>(r.simple[j])][i];
  auto snf = smith_normal_form(m);
  std::vector<int> torsion;
  for (int i = 0; i < static_cast<int>(snf.diagonal.size()); ++i)
    if (snf.diagonal[i] > 1) torsion.push_back(i);
  IntegerMatrix action = f.automorphism.lattice_map;
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < r.rank; ++j) action(i, j) *= f.q;
  IntegerMatrix moved = snf.left * action * snf.left.unimodular_inverse();
  int t = static_cast<int>(torsion.size());
  z.frobenius_action = IntegerMatrix(t, t);
  for (int a = 0; a < t; ++a) {
    long d = snf.diagonal[torsion[a]].get_si();
    z.divisors.push_back(d);
    for (int b = 0; b < t; ++b) {
      Integer v = moved(torsion[a], torsion[b]) % d;
      if (v < 0) v += d;
      z.frobenius_action(a, b) = v;
    }
  }
  return z;
}

FrobeniusCohomology h1_frobenius(const CenterComponentGroup& z) {
  FrobeniusCohomology h;
  int k = static_cast<int>(z.divisors.size());
  if (k == 0) return h;
  IntegerMatrix rel(k, 2 * k);
  for (int i = 0; i < k; ++i) {
    rel(i, i) = z.divisors[i];
    for (int j = 0; j < k; ++j) rel(i, k + j) = z.frobenius_action(i, j) - (i == j ? 1 : 0);
  }
  auto snf = smith_normal_form(rel);
  for (const auto& d : snf.diagonal) {
    if (d == 0) throw InconsistentData("coinvariants of a finite group must be finite");
    if (d > 1) {
      h.invariant_factors.push_back(d.get_si());
      h.order *= d.get_si();
      if (d != 2) h.two_h1_vanishes = false;
    }
  }
  return h;
}

}  // namespace liechar
