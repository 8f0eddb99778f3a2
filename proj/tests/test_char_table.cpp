#include <algorithm>
#include <complex>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "liechar/char_table.hpp"
#include "liechar/errors.hpp"

using namespace liechar;

namespace {

std::complex<double> numeric(const CyclotomicNumber& x) {
  std::complex<double> s = 0;
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < x.coefficients().size(); ++i)
    s += x.coefficients()[i].get_d() * std::polar(1.0, 2 * pi * static_cast<double>(i) / x.conductor());
  return s;
}

std::shared_ptr<const ConjugacyData> classes_of(const char* spec) {
  return conjugacy_classes(GroupRealization::build(GroupSpec::parse(spec)));
}

// Brute-force class structure constants: a[i][j][k] = #{(x, y) in C_i x C_j : xy = z_k}.
std::vector<std::vector<std::vector<long>>> structure_constants(const ConjugacyData& c) {
  const auto& g = *c.group;
  int r = c.class_count();
  std::vector<std::vector<std::vector<long>>> a(r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      ElementId z = g.mul(static_cast<ElementId>(x), static_cast<ElementId>(y));
      int k = c.class_of_element(z);
      if (c.representatives[k] == z) ++a[c.class_of[x]][c.class_of[y]][k];
    }
  return a;
}

std::multiset<long> degree_multiset(const CharacterTable& t) {
  auto d = t.degrees();
  return {d.begin(), d.end()};
}

}  // namespace

TEST_CASE("splitting prime") {
  CHECK(splitting_prime(12, 48) == 61);
  CHECK(splitting_prime(4, 100) == 101);
  CHECK_THROWS_AS(splitting_prime(1000, 10, 1000), PreconditionFailed);
}

TEST_CASE("small character tables") {
  auto t1 = character_table(classes_of("GL1(2)"));
  CHECK(t1.size() == 1);
  CHECK(t1[0] == ClassFunction::trivial(t1.classes_ptr()));

  auto sl23 = character_table(classes_of("SL2(3)"));
  CHECK(degree_multiset(sl23) == std::multiset<long>{1, 1, 1, 2, 2, 2, 3});

  auto gl23 = character_table(classes_of("GL2(3)"));
  CHECK(gl23.size() == 8);
  CHECK(degree_multiset(gl23) == std::multiset<long>{1, 1, 2, 2, 2, 3, 3, 4});
  CHECK(gl23.index_of(ClassFunction::trivial(gl23.classes_ptr())) >= 0);

  auto s3 = character_table(classes_of("GL2(2)"));
  CHECK(degree_multiset(s3) == std::multiset<long>{1, 1, 2});
}

TEST_CASE("tables satisfy the class algebra oracle") {
  for (auto spec : {"GL2(3)", "SL2(3)", "SL2(5)", "GL2(4)"}) {
    auto c = classes_of(spec);
    auto t = character_table(c);
    CHECK_NOTHROW(t.verify_orthogonality());
    auto a = structure_constants(*c);
    int r = c->class_count();
    for (const auto& chi : t.irreducibles()) {
      double d = numeric(chi.degree()).real();
      std::vector<std::complex<double>> w(r);
      for (int i = 0; i < r; ++i) w[i] = static_cast<double>(c->sizes[i]) * numeric(chi[i]) / d;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          std::complex<double> s = 0;
          for (int k = 0; k < r; ++k) s += static_cast<double>(a[i][j][k]) * w[k];
          CHECK(std::abs(s - w[i] * w[j]) < 1e-6);
        }
    }
  }
}

TEST_CASE("rank three tables") {
  auto gl32 = character_table(classes_of("GL3(2)"));
  CHECK(degree_multiset(gl32) == std::multiset<long>{1, 3, 3, 6, 7, 8});
  auto sl32 = character_table(classes_of("SL3(2)"));
  CHECK(degree_multiset(sl32) == degree_multiset(gl32));
  auto gl33 = character_table(classes_of("GL2(5)"));
  CHECK(gl33.size() == 24);
}

TEST_CASE("inner products, duals and twists") {
  auto c = classes_of("GL2(3)");
  auto t = character_table(c);
  const auto& g = *c->group;
  CHECK(inner_product(ClassFunction::regular(c), ClassFunction::trivial(c)) == CyclotomicNumber(1));
  for (const auto& chi : t.irreducibles()) {
    CHECK(inner_product(chi, chi) == CyclotomicNumber(1));
    CHECK(dual_character(dual_character(chi)) == chi);
    CHECK(twist_by_automorphism(chi, identity_automorphism(c)) == chi);
    Matrix x = g.element(static_cast<ElementId>(17));
    CHECK(twist_by_automorphism(chi, conjugation_automorphism(c, x, "ad")) == chi);
  }
  for (int i = 0; i < t.size(); ++i)
    if (t.degrees()[i] == 3) CHECK(t.dual_index(i) == i);
  CHECK(t.decompose(ClassFunction::regular(c)) == std::vector<long>{1, 1, 2, 2, 2, 3, 3, 4});
  auto other = classes_of("GL2(3)");
  CHECK_THROWS_AS(inner_product(t[0], ClassFunction::trivial(other)), InvalidArgument);
  // dual commutes with twisting
  auto iota = duality_involution(c, g.standard_pinning());
  for (const auto& chi : t.irreducibles())
    CHECK(dual_character(twist_by_automorphism(chi, iota)) == twist_by_automorphism(dual_character(chi), iota));
}

TEST_CASE("twisting linear characters of SL2(3)") {
  auto c = classes_of("SL2(3)");
  auto t = character_table(c);
  const auto& g = *c->group;
  auto ad = conjugation_automorphism(c, g.algebra().diagonal({1, g.field().neg(1)}), "ad(diag(1,-1))");
  auto perm = t.twist_permutation(ad);
  // u -> u^{-1} under ad(diag(1,-1)), and the linear characters factor through the unipotent image
  for (int i = 0; i < 3; ++i) {
    CHECK(t.degrees()[i] == 1);
    CHECK(perm[i] == t.dual_index(i));
  }
  int triv = t.index_of(ClassFunction::trivial(c));
  REQUIRE(triv >= 0);
  for (int i = 0; i < 3; ++i) CHECK((perm[i] == i) == (i == triv));
}

TEST_CASE("induction and restriction") {
  auto c = classes_of("GL2(3)");
  auto t = character_table(c);
  const auto& g = *c->group;
  auto one = [](std::size_t n) { return std::vector<CyclotomicNumber>(n, CyclotomicNumber(1)); };
  auto ind_b = induce(SubgroupFunction{c, g.borel(), one(g.borel().size())});
  CHECK(ind_b.degree() == CyclotomicNumber(4));
  auto ind_u1 = induce(SubgroupFunction{c, g.unipotent(), one(g.unipotent().size())});
  CHECK(inner_product(ind_u1, ClassFunction::trivial(c)) == CyclotomicNumber(1));
  // nontrivial character of U = F_3
  SubgroupFunction psi{c, g.unipotent(), {}};
  for (ElementId u : g.unipotent()) psi.values.push_back(CyclotomicNumber::root_of_unity(3, g.element(u).at(0, 1)));
  auto gamma = induce(psi);
  CHECK(gamma.degree() == CyclotomicNumber(16));
  // Frobenius reciprocity on 20 random pairs of class functions of B
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& a = t[static_cast<int>(rng() % 8)];
    const auto& b = t[static_cast<int>(rng() % 8)];
    const auto& chi = t[static_cast<int>(rng() % 8)];
    auto ra = restrict_to(a, g.borel()), rb = restrict_to(b, g.borel());
    SubgroupFunction phi{c, g.borel(), {}};
    for (std::size_t i = 0; i < ra.values.size(); ++i) phi.values.push_back(ra.values[i] * rb.values[i].conj());
    CHECK(inner_product(induce(phi), chi) == subgroup_inner_product(phi, restrict_to(chi, g.borel())));
  }
}

TEST_CASE("twisted Frobenius-Schur indicators") {
  auto c = classes_of("GL2(3)");
  auto t = character_table(c);
  auto iota = duality_involution(c, c->group->standard_pinning());
  for (const auto& chi : t.irreducibles()) CHECK(twisted_fs_indicator(chi, iota) == CyclotomicNumber(1));

  for (auto spec : {"GL2(3)", "SL2(3)"}) {
    auto cc = classes_of(spec);
    auto tt = character_table(cc);
    const auto& g = *cc->group;
    auto io = duality_involution(cc, g.standard_pinning());
    CyclotomicNumber s = 0;
    for (const auto& chi : tt.irreducibles()) s += twisted_fs_indicator(chi, io) * chi.degree();
    long count = 0;
    for (std::size_t x = 0; x < g.order(); ++x)
      count += io.apply(static_cast<ElementId>(x)) == g.inverse(static_cast<ElementId>(x));
    CHECK(s == CyclotomicNumber(count));
  }

  // SL2(5), iota = ad(diag(1,-1)): double loop with explicit matrices
  auto c5 = classes_of("SL2(5)");
  auto t5 = character_table(c5);
  const auto& g5 = *c5->group;
  const auto& alg = g5.algebra();
  Matrix tm = alg.diagonal({1, 4}), ti = alg.inverse(tm);
  auto ad = conjugation_automorphism(c5, tm, "ad(diag(1,-1))");
  auto io5 = duality_involution(c5, g5.standard_pinning());
  for (const auto& chi : t5.irreducibles()) {
    CyclotomicNumber s = 0;
    for (std::size_t x = 0; x < g5.order(); ++x) {
      const Matrix& m = g5.element(static_cast<ElementId>(x));
      Matrix prod = alg.mul(m, alg.mul(alg.mul(tm, m), ti));
      s += chi[c5->class_of_element(g5.find(prod))];
    }
    s *= Rational(1, 120);
    CHECK(twisted_fs_indicator(chi, ad) == s);
    CHECK(twisted_fs_indicator(chi, io5) == s);
    CHECK((s == CyclotomicNumber(1) || s == CyclotomicNumber(-1)));
  }
  // a non-involution is refused
  auto g5c = conjugation_automorphism(c5, g5.element(static_cast<ElementId>(3)), "ad(x)");
  if (!g5c.is_involution()) CHECK_THROWS_AS(twisted_fs_indicator(t5[1], g5c), InvalidArgument);
  // chi o iota != chi^vee forces 0: the identity on a group with non-real characters
  auto c3 = classes_of("SL2(3)");
  auto t3 = character_table(c3);
  CHECK(twisted_fs_indicator(t3[1], identity_automorphism(c3)) == CyclotomicNumber(0));
}
