#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "liechar/errors.hpp"
#include "liechar/group.hpp"

using namespace liechar;

namespace {

// Conjugacy classes by brute force over all pairs.
int brute_class_count(const GroupRealization& g) {
  std::vector<int> seen(g.order(), 0);
  int count = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++count;
    for (std::size_t y = 0; y < g.order(); ++y) {
      auto c = g.mul(g.mul(static_cast<ElementId>(y), static_cast<ElementId>(x)), g.inverse(static_cast<ElementId>(y)));
      seen[static_cast<std::size_t>(c)] = 1;
    }
  }
  return count;
}

std::shared_ptr<const ConjugacyData> classes_of(const char* spec) {
  return conjugacy_classes(GroupRealization::build(GroupSpec::parse(spec)));
}

}  // namespace

TEST_CASE("group specs") {
  auto s = GroupSpec::parse("SL3(4)");
  CHECK(s.family == Family::SL);
  CHECK(s.n == 3);
  CHECK(s.q == 4);
  CHECK(s.to_string() == "SL3(4)");
  CHECK(GroupSpec::parse("GL2(3)").order() == 48);
  CHECK(GroupSpec::parse("SL2(5)").order() == 120);
  CHECK(GroupSpec::parse("GL3(2)").order() == 168);
  CHECK(GroupSpec::parse("SL3(4)").order() == 60480);
  CHECK_THROWS_AS(GroupSpec::parse("SP4(3)"), UnsupportedSpec);
  CHECK_THROWS_AS(GroupSpec::parse("GL2(6)"), UnsupportedSpec);
  CHECK_THROWS_AS(GroupSpec::parse("GL4(2)"), UnsupportedSpec);
  CHECK_THROWS_AS(GroupSpec::parse("GL2(3"), UnsupportedSpec);
  CHECK_THROWS_AS(GroupRealization::build(GroupSpec::parse("GL3(5)")), BudgetExceeded);
  CHECK_THROWS_AS(GroupRealization::build(GroupSpec::parse("GL2(3)"), 10), BudgetExceeded);
}

TEST_CASE("matrix algebra") {
  MatrixAlgebra alg(FiniteField::of_order(4), 3);
  Matrix m = alg.identity();
  m.set(0, 1, 2);
  m.set(2, 0, 3);
  m.set(1, 1, 2);
  CHECK(alg.mul(m, alg.inverse(m)) == alg.identity());
  CHECK(alg.det(alg.mul(m, m)) == alg.field().mul(alg.det(m), alg.det(m)));
  CHECK(alg.from_code(alg.code(m)) == m);
  CHECK(alg.rank(alg.sub(alg.identity(), alg.identity())) == 0);
  CHECK(alg.rank(m) == 3);
}

TEST_CASE("group realizations") {
  for (auto [spec, order, classes] : std::vector<std::tuple<const char*, std::size_t, int>>{
           {"GL2(3)", 48, 8}, {"SL2(3)", 24, 7}, {"SL2(5)", 120, 9}, {"GL3(2)", 168, 6}, {"GL2(2)", 6, 3},
           {"GL1(5)", 4, 4}}) {
    auto g = GroupRealization::build(GroupSpec::parse(spec));
    CHECK(g->order() == order);
    auto c = conjugacy_classes(g);
    CHECK(c->class_count() == classes);
    CHECK(brute_class_count(*g) == classes);
    CHECK(c->representatives[0] == g->identity());
    CHECK(g->borel().size() == g->split_torus().size() * g->unipotent().size());
    for (int k = 0; k < c->class_count(); ++k) {
      CHECK(c->orders[k] == g->element_order(c->representatives[k]));
      CHECK(c->power_class(k, -1) == c->inverse_class[k]);
      CHECK(c->power_class(k, 1) == k);
    }
  }
  auto sl34 = GroupRealization::build(GroupSpec::parse("SL3(4)"));
  CHECK(sl34->order() == 60480);
}

TEST_CASE("involutions") {
  for (auto spec : {"GL2(3)", "SL2(3)", "SL2(5)", "GL3(2)", "SL3(2)", "GL2(4)"}) {
    auto c = classes_of(spec);
    const auto& g = *c->group;
    auto iota = duality_involution(c, g.standard_pinning());
    auto chev = chevalley_involution(c, g.standard_pinning());
    CHECK(iota.is_involution());
    CHECK(chev.is_involution());
    CHECK(iota.dual_action() == LabelAction::Inversion);
    // iota and c commute, differing by an inner automorphism by a torus element
    auto ic = GroupAutomorphism::compose(iota, chev);
    auto ci = GroupAutomorphism::compose(chev, iota);
    for (std::size_t x = 0; x < g.order(); ++x) CHECK(ic.apply(static_cast<ElementId>(x)) == ci.apply(static_cast<ElementId>(x)));
    std::vector<int> tv(static_cast<std::size_t>(g.n()), 1);
    if (g.n() > 1) tv[1] = g.field().neg(1);
    Matrix t = g.algebra().diagonal(tv), ti = g.algebra().inverse(t);
    for (std::size_t x = 0; x < g.order(); ++x) {
      const Matrix& m = g.element(static_cast<ElementId>(x));
      CHECK(g.element(ic.apply(static_cast<ElementId>(x))) == g.algebra().mul(g.algebra().mul(t, m), ti));
    }
    if (g.spec().family == Family::GL)
      for (int k = 0; k < c->class_count(); ++k) CHECK(ic.apply_class(k) == k);
    // c on the torus: t -> w0(t)^{-1}
    const auto& alg = g.algebra();
    const auto& f = g.field();
    for (ElementId t : g.split_torus()) {
      Matrix m = g.element(t), expect;
      for (int i = 0; i < g.n(); ++i) expect.set(i, i, f.inv(m.at(g.n() - 1 - i, g.n() - 1 - i)));
      CHECK(chev.apply_matrix(m) == expect);
      CHECK(iota.apply_matrix(m) == expect);
    }
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(g.n()); ++i) {
      Matrix x = alg.elementary(static_cast<int>(i), static_cast<int>(i) + 1, 1);
      Matrix y = alg.elementary(g.n() - 2 - static_cast<int>(i), g.n() - 1 - static_cast<int>(i), f.neg(1));
      CHECK(iota.apply_matrix(x) == y);
    }
  }
}

TEST_CASE("transported pinnings") {
  auto c = classes_of("GL3(4)");
  const auto& g = *c->group;
  Pinning p{{2, 3}};
  auto chev = chevalley_involution(c, p);
  auto gens = p.generators(g.algebra());
  CHECK(chev.apply_matrix(gens[0]) == gens[1]);
  auto iota = duality_involution(c, p);
  CHECK(iota.is_involution());
  CHECK_THROWS_AS(g.validate_pinning(Pinning{{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(g.validate_pinning(Pinning{{1}}), InvalidArgument);
}

TEST_CASE("adjoint action representatives") {
  CHECK(adjoint_action_representatives(classes_of("GL2(3)")).size() == 1);
  CHECK(adjoint_action_representatives(classes_of("SL2(3)")).size() == 2);
  CHECK(adjoint_action_representatives(classes_of("SL2(5)")).size() == 2);
  CHECK(adjoint_action_representatives(classes_of("SL3(2)")).size() == 1);
  auto sl34 = classes_of("SL3(4)");
  auto reps = adjoint_action_representatives(sl34);
  CHECK(reps.size() == 3);
  // the outer diagonal automorphisms are not inner: they move some class
  int moved = 0;
  for (int k = 0; k < sl34->class_count(); ++k) moved += reps[1].apply_class(k) != k;
  CHECK(moved > 0);
  auto sl25 = classes_of("SL2(5)");
  auto r25 = adjoint_action_representatives(sl25);
  std::set<int> moved25;
  for (int k = 0; k < sl25->class_count(); ++k)
    if (r25[1].apply_class(k) != k) moved25.insert(k);
  CHECK(moved25.size() == 4);  // the two pairs of unipotent classes
}

TEST_CASE("maximal tori") {
  auto g = GroupRealization::build(GroupSpec::parse("GL3(2)"));
  auto tori = maximal_tori(*g);
  REQUIRE(tori.size() == 3);
  CHECK(tori[0].order == 1);
  CHECK(tori[1].order == 3);
  CHECK(tori[2].order == 7);
  auto s = GroupRealization::build(GroupSpec::parse("SL3(4)"));
  auto st = maximal_tori(*s);
  CHECK(st[0].order == 9);
  CHECK(st[1].order == 15);
  CHECK(st[2].order == 21);
  CHECK(st[2].f_rank == 0);
}

TEST_CASE("torus embeddings") {
  for (auto spec : {"GL2(3)", "GL3(2)", "SL2(5)", "SL3(2)", "GL2(4)"}) {
    auto g = GroupRealization::build(GroupSpec::parse(spec));
    SplittingField sf(g->algebra().field_ptr(), g->n());
    MatrixAlgebra gl(g->algebra().field_ptr(), g->n());
    for (const auto& t : maximal_tori(*g)) {
      auto e = embed_torus(*g, sf, t);
      std::set<ElementId> members;
      std::vector<std::int64_t> ex(t.cycle_type.size(), 0);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == ex.size()) {
          ElementId id = e.element(*g, ex);
          if (id >= 0) members.insert(id);
          return;
        }
        for (std::int64_t j = 0; j < t.factor_orders[i]; ++j) {
          ex[i] = j;
          rec(i + 1);
        }
      };
      rec(0);
      CHECK(members.size() == t.order);
      for (std::size_t i = 0; i < e.factor_generators.size(); ++i) {
        const Matrix& m = e.factor_generators[i];
        CHECK(gl.power(m, t.factor_orders[i]) == gl.identity());
        std::vector<std::int64_t> expect;
        for (auto y : sf.frobenius_orbit(e.factor_steps[i])) expect.push_back(y);
        for (int k = 0; k < g->n() - t.cycle_type[i]; ++k) expect.push_back(0);
        std::sort(expect.begin(), expect.end());
        CHECK(sf.eigenvalue_exponents(gl, m) == expect);
      }
      for (ElementId a : members)
        for (ElementId b : members) CHECK(g->mul(a, b) == g->mul(b, a));
    }
  }
}

TEST_CASE("torus orders from the lattice") {
  CHECK(torus_order_from_lattice(Family::GL, 2, 3, {1, 0}) == 8);
  CHECK(torus_order_from_lattice(Family::SL, 2, 3, {1, 0}) == 4);
  CHECK(torus_order_from_lattice(Family::SL, 3, 4, {1, 2, 0}) == 21);
  CHECK(torus_order_from_lattice(Family::SL, 3, 4, {0, 1, 2}) == 9);
}
