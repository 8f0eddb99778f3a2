#include <set>

#include "doctest.h"
#include "liechar/errors.hpp"
#include "liechar/gelfand_graev.hpp"

using namespace liechar;

namespace {

// T-orbits on nondegenerate characters, acting on value vectors by conjugation.
std::size_t brute_orbit_count(const std::shared_ptr<const ConjugacyData>& classes) {
  const auto& g = *classes->group;
  std::map<ElementId, std::size_t> pos;
  for (std::size_t i = 0; i < g.unipotent().size(); ++i) pos[g.unipotent()[i]] = i;
  std::set<std::set<std::string>> orbits;
  for (const auto& a : nondegenerate_functionals(g)) {
    WhittakerDatum psi(classes, a);
    std::set<std::string> orbit;
    for (ElementId t : g.split_torus()) {
      std::string key;
      for (ElementId u : g.unipotent()) key += psi.values()[pos.at(g.mul(g.mul(g.inverse(t), u), t))].to_string() + ";";
      orbit.insert(key);
    }
    orbits.insert(orbit);
  }
  return orbits.size();
}

bool all_pass(const std::vector<CheckItem>& items) {
  for (const auto& i : items)
    if (!i.pass) {
      MESSAGE(i.subject << ": " << i.lhs << " vs " << i.rhs << " " << i.note);
      return false;
    }
  return !items.empty();
}

}  // namespace

TEST_CASE("Whittaker data") {
  for (auto [s, n] : std::vector<std::pair<const char*, std::size_t>>{{"GL2(3)", 1}, {"SL2(3)", 2}, {"SL2(5)", 2}, {"GL3(2)", 1}, {"GL2(4)", 1}, {"SL3(4)", 3}}) {
    CAPTURE(s);
    auto classes = cached_classes(GroupSpec::parse(s));
    auto data = whittaker_data(classes);
    CHECK(data.size() == n);
    CHECK(brute_orbit_count(classes) == n);
    std::size_t expected = 1;
    for (int i = 1; i < classes->group->n(); ++i) expected *= static_cast<std::size_t>(classes->group->q() - 1);
    CHECK(nondegenerate_functionals(*classes->group).size() == expected);
  }
  auto classes = cached_classes(GroupSpec::parse("GL2(3)"));
  CHECK_THROWS_AS(WhittakerDatum(classes, {0}), InvalidArgument);
  CHECK_THROWS_AS(WhittakerDatum(classes, {1, 1}), InvalidArgument);
}

TEST_CASE("pinning attached to a Whittaker datum") {
  for (const char* s : {"GL2(3)", "GL2(4)", "SL3(4)", "GL3(2)"}) {
    auto classes = cached_classes(GroupSpec::parse(s));
    const auto& g = *classes->group;
    for (const auto& psi : whittaker_data(classes)) {
      auto pin = psi.pinning();
      g.validate_pinning(pin);
      for (int i = 0; i + 1 < g.n(); ++i) {
        ElementId x = g.find(g.algebra().elementary(i, i + 1, pin.coefficients[static_cast<std::size_t>(i)]));
        std::size_t k = 0;
        while (g.unipotent()[k] != x) ++k;
        CHECK(psi.values()[k] == CyclotomicNumber::root_of_unity(g.field().characteristic(), 1));
      }
    }
  }
}

TEST_CASE("Gelfand-Graev characters of GL_2(3) and SL_2(3)") {
  auto gl = GLContext::get(GroupSpec::parse("GL2(3)"));
  auto psi = whittaker_data(gl->classes()).front();
  ClassFunction gamma = gelfand_graev(psi);
  CHECK(gamma.degree() == CyclotomicNumber(16));
  std::vector<std::vector<int>> series;
  for (const auto& s : gl->series()) series.push_back(s.members);
  auto d = decompose_gelfand_graev(psi, gl->table(), series);
  long constituents = 0;
  for (long m : d.multiplicities) constituents += m;
  CHECK(constituents == 6);
  int triv = gl->table().index_of(ClassFunction::trivial(gl->classes()));
  int st = gl->unipotent_characters().at({1, 1});
  CHECK(inner_product(gamma, gl->table()[st]) == CyclotomicNumber(1));
  CHECK(inner_product(gamma, gl->table()[triv]) == CyclotomicNumber(0));
  int s1 = gl->series_of(triv);
  CHECK(generic_constituent(d, s1) == st);
  for (std::size_t s = 0; s < gl->series().size(); ++s) {
    const auto& l = gl->series()[s].label;
    long deg = gl->table().degrees()[static_cast<std::size_t>(generic_constituent(d, static_cast<int>(s)))];
    if (l.orbits.size() == 2) CHECK(deg == 4);
    if (l.orbits.size() == 1 && l.orbits[0].size() == 2) CHECK(deg == 2);
  }
  CHECK(gelfand_graev(psi.inverse()) == gamma);

  auto sl = SLContext::get(GroupSpec::parse("SL2(3)"));
  for (const auto& p : whittaker_data(sl->classes())) CHECK(gelfand_graev(p).degree() == CyclotomicNumber(8));
  auto data = whittaker_data(sl->classes());
  CHECK(gelfand_graev(data[0]) != gelfand_graev(data[1]));
  CHECK_THROWS_AS(decompose_gelfand_graev(data[0], gl->table(), {}), InvalidArgument);
}

TEST_CASE("generic duality") {
  for (const char* s : {"GL2(3)", "SL2(3)", "SL2(5)", "GL3(2)", "GL2(4)", "SL3(4)"}) {
    CAPTURE(s);
    CHECK(all_pass(verify_generic_duality(GroupSpec::parse(s))));
  }
  CHECK_FALSE(two_h1_vanishes(GroupSpec::parse("SL3(4)")));
}
