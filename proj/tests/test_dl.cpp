#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "liechar/deligne_lusztig.hpp"
#include "liechar/errors.hpp"

using namespace liechar;

namespace {

long as_long(const CyclotomicNumber& x) {
  REQUIRE(x.is_rational());
  Rational r = x.rational_value();
  REQUIRE(r.get_den() == 1);
  return r.get_num().get_si();
}

int torus_index(const GLContext& ctx, const std::vector<int>& cycle_type) {
  for (std::size_t i = 0; i < ctx.tori().size(); ++i)
    if (ctx.tori()[i].cycle_type == cycle_type) return static_cast<int>(i);
  FAIL("no torus");
  return -1;
}

TorusCharacter trivial_character(const GLContext& ctx, int torus) {
  return TorusCharacter{torus, std::vector<std::int64_t>(ctx.tori()[static_cast<std::size_t>(torus)].cycle_type.size(), 0)};
}

ClassFunction unipotent(const GLContext& ctx, const Partition& lambda) {
  return ctx.table()[ctx.unipotent_characters().at(lambda)];
}

}  // namespace

TEST_CASE("partitions and symmetric group characters") {
  CHECK(partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(6).size() == 11);
  CHECK(conjugate_partition({3, 1}) == Partition{2, 1, 1});
  CHECK(partition_n({2, 1}) == 1);
  CHECK(centralizer_size({2, 1}) == 2);
  CHECK(sn_character({2, 1}, {1, 1, 1}) == 2);
  CHECK(sn_character({2, 1}, {2, 1}) == 0);
  CHECK(sn_character({2, 1}, {3}) == -1);
  CHECK(sn_character({1, 1, 1}, {2, 1}) == -1);
  for (int n = 1; n <= 5; ++n) {
    auto ps = partitions(n);
    for (const auto& a : ps) {
      Integer dim = 1;
      for (int i = 2; i <= n; ++i) dim *= i;
      for (int h : hook_lengths(a)) dim /= h;
      CHECK(sn_character(a, Partition(static_cast<std::size_t>(n), 1)) == dim.get_si());
      for (const auto& b : ps) {
        Rational s = 0;
        for (const auto& mu : ps)
          s += Rational(sn_character(a, mu) * sn_character(b, mu)) / Rational(centralizer_size(mu));
        CHECK(s == (a == b ? 1 : 0));
      }
    }
  }
  CHECK(cycle_type({1, 2, 0, 3}) == Partition{3, 1});
  CHECK(partition_string({2, 1}) == "(2,1)");
}

TEST_CASE("unipotent degrees") {
  for (long q : {2, 3, 4, 5}) {
    CHECK(unipotent_degree({3}, q) == 1);
    CHECK(unipotent_degree({2, 1}, q) == q * (q + 1));
    CHECK(unipotent_degree({1, 1, 1}, q) == q * q * q);
    CHECK(unipotent_degree({1, 1}, q) == q);
  }
  CHECK(epsilon_sign(2) == 1);
  CHECK(epsilon_sign(3) == -1);
}

TEST_CASE("unipotent characters are the constituents of Ind_B(1)") {
  auto gl23 = GLContext::get(GroupSpec::parse("GL2(3)"));
  CHECK(gl23->unipotent_characters().size() == 2);
  CHECK(unipotent(*gl23, {2}) == ClassFunction::trivial(gl23->classes()));
  CHECK(as_long(unipotent(*gl23, {1, 1}).degree()) == 3);

  auto gl32 = GLContext::get(GroupSpec::parse("GL3(2)"));
  std::multiset<long> d;
  for (const auto& [lambda, idx] : gl32->unipotent_characters()) d.insert(gl32->table().degrees()[static_cast<std::size_t>(idx)]);
  CHECK(d == std::multiset<long>{1, 6, 8});
}

TEST_CASE("Green functions of GL2 and GL3") {
  for (const char* s : {"GL2(2)", "GL2(3)", "GL2(4)", "GL2(5)"}) {
    auto ctx = GLContext::get(GroupSpec::parse(s));
    long q = ctx->q();
    CHECK(ctx->green_function({1, 1}, {1, 1}) == q + 1);
    CHECK(ctx->green_function({1, 1}, {2}) == 1);
    CHECK(ctx->green_function({2}, {1, 1}) == 1 - q);
    CHECK(ctx->green_function({2}, {2}) == 1);
  }
  for (const char* s : {"GL3(2)", "GL3(3)"}) {
    auto ctx = GLContext::get(GroupSpec::parse(s));
    long q = ctx->q();
    const Partition one{1, 1, 1}, sub{2, 1}, reg{3};
    CHECK(ctx->green_function(one, one) == (q + 1) * (q * q + q + 1));
    CHECK(ctx->green_function(one, sub) == 2 * q + 1);
    CHECK(ctx->green_function(one, reg) == 1);
    CHECK(ctx->green_function(sub, one) == (1 - q) * (1 + q + q * q));
    CHECK(ctx->green_function(sub, sub) == 1);
    CHECK(ctx->green_function(sub, reg) == 1);
    CHECK(ctx->green_function(reg, one) == (1 - q) * (1 - q * q));
    CHECK(ctx->green_function(reg, sub) == 1 - q);
    CHECK(ctx->green_function(reg, reg) == 1);
  }
}

TEST_CASE("class data: labels and Jordan types") {
  auto ctx = GLContext::get(GroupSpec::parse("GL3(3)"));
  const auto& c = *ctx->classes();
  std::set<SemisimpleClassLabel> labels;
  for (int k = 0; k < c.class_count(); ++k) {
    const auto& d = ctx->class_datum(k);
    CHECK(d.label.rank() == 3);
    CHECK(d.unipotent_types.size() == d.label.orbits.size());
    for (std::size_t o = 0; o < d.label.orbits.size(); ++o)
      CHECK(partition_size(d.unipotent_types[o]) == d.label.orbits[o].multiplicity);
    labels.insert(d.label);
  }
  auto all = enumerate_semisimple_labels(ctx->splitting_field(), 3);
  CHECK(labels.size() == all.size());
  CHECK(static_cast<long>(all.size()) == 27 - 9);
  CHECK(ctx->class_datum(0).unipotent_types == PartitionTuple{{1, 1, 1}});
}

TEST_CASE("semisimple label enumeration counts q^n - q^(n-1)") {
  for (const char* s : {"GL1(5)", "GL2(2)", "GL2(3)", "GL2(4)", "GL3(2)", "GL3(3)"}) {
    auto spec = GroupSpec::parse(s);
    SplittingField f(FiniteField::of_order(spec.q), spec.n);
    long expected = 1, prev = 1;
    for (int i = 0; i < spec.n; ++i) expected *= spec.q;
    for (int i = 0; i + 1 < spec.n; ++i) prev *= spec.q;
    CHECK(static_cast<long>(enumerate_semisimple_labels(f, spec.n).size()) == expected - prev);
  }
}

TEST_CASE("label operations") {
  auto ctx = GLContext::get(GroupSpec::parse("GL2(3)"));
  for (const auto& l : enumerate_semisimple_labels(ctx->splitting_field(), 2)) {
    CHECK(l.inverse().inverse() == l);
    CHECK(l.scaled(0) == l);
    CHECK(l.scaled(ctx->scalar_step()).scaled(ctx->scalar_step()) == l.scaled(2 * ctx->scalar_step()));
    CHECK(l.rank() == 2);
    CHECK(!l.canonical().empty());
  }
}

TEST_CASE("split and Coxeter tori with trivial character") {
  for (const char* s : {"GL2(3)", "GL2(4)", "GL3(2)"}) {
    auto ctx = GLContext::get(GroupSpec::parse(s));
    const int n = ctx->n();
    const auto& g = *ctx->classes()->group;
    SubgroupFunction one{ctx->classes(), g.borel(), std::vector<CyclotomicNumber>(g.borel().size(), CyclotomicNumber(1))};
    int split = torus_index(*ctx, std::vector<int>(static_cast<std::size_t>(n), 1));
    CHECK(ctx->dl_character(trivial_character(*ctx, split)) == induce(one));
    for (std::size_t t = 0; t < ctx->tori().size(); ++t) {
      ClassFunction expected = ClassFunction::zero(ctx->classes());
      for (const auto& [lambda, idx] : ctx->unipotent_characters())
        expected += ctx->table()[idx] * CyclotomicNumber(sn_character(lambda, ctx->tori()[t].cycle_type));
      CHECK(ctx->dl_character(trivial_character(*ctx, static_cast<int>(t))) == expected);
    }
    if (n == 2) {
      int cox = torus_index(*ctx, {2});
      CHECK(ctx->dl_character(trivial_character(*ctx, cox)) ==
            ClassFunction::trivial(ctx->classes()) - unipotent(*ctx, {1, 1}));
    }
  }
}

TEST_CASE("Deligne-Lusztig orthogonality matches the Weyl count") {
  for (const char* s : {"GL2(3)", "GL2(4)", "GL3(2)"}) {
    auto ctx = GLContext::get(GroupSpec::parse(s));
    const auto& chars = ctx->torus_characters();
    for (const auto& a : chars)
      for (const auto& b : chars) {
        CyclotomicNumber ip = inner_product(ctx->dl_character(a), ctx->dl_character(b));
        CHECK(ip == CyclotomicNumber(ctx->exclusion_count(a, b)));
      }
  }
  auto ctx = GLContext::get(GroupSpec::parse("GL3(3)"));
  const auto& chars = ctx->torus_characters();
  for (std::size_t i = 0; i < chars.size(); i += 7)
    for (std::size_t j = i; j < chars.size(); j += 11)
      CHECK(inner_product(ctx->dl_character(chars[i]), ctx->dl_character(chars[j])) ==
            CyclotomicNumber(ctx->exclusion_count(chars[i], chars[j])));
}

TEST_CASE("degree identity") {
  for (const char* s : {"GL2(3)", "GL2(5)", "GL3(2)", "GL3(3)"}) {
    auto ctx = GLContext::get(GroupSpec::parse(s));
    std::uint64_t pprime = ctx->classes()->group_order;
    while (pprime % static_cast<std::uint64_t>(ctx->classes()->group->field().characteristic()) == 0)
      pprime /= static_cast<std::uint64_t>(ctx->classes()->group->field().characteristic());
    for (const auto& theta : ctx->torus_characters()) {
      long sign = ctx->epsilon_group() * ctx->epsilon_torus(theta.torus);
      long expected = sign * static_cast<long>(pprime / ctx->tori()[static_cast<std::size_t>(theta.torus)].order);
      CHECK(as_long(ctx->dl_character(theta).degree()) == expected);
    }
  }
}

TEST_CASE("normal forms and torus values") {
  auto ctx = GLContext::get(GroupSpec::parse("GL3(3)"));
  int t21 = torus_index(*ctx, {2, 1});
  CHECK(ctx->normal_form({t21, {3, 1}}) == ctx->normal_form({t21, {9, 1}}));
  CHECK(ctx->normal_form({t21, {3, 1}}) != ctx->normal_form({t21, {3, 0}}));
  int split = torus_index(*ctx, {1, 1, 1});
  CHECK(ctx->normal_form({split, {1, 0, 1}}) == TorusCharacter{split, {0, 1, 1}});
  CHECK(ctx->classify_pair({split, {1, 0, 1}}) == ctx->classify_pair({split, {1, 1, 0}}));
  CHECK(ctx->torus_value({t21, {2, 1}}, {1, 0}) == CyclotomicNumber::root_of_unity(8, 2));
  CHECK(ctx->torus_value({t21, {2, 1}}, {0, 1}) == CyclotomicNumber::root_of_unity(2, 1));
  CHECK(ctx->centralizer_torus_type(trivial_character(*ctx, t21)) == PartitionTuple{{2, 1}});
  CHECK(ctx->exclusion_count({0, {0, 0, 0}}, {t21, {0, 0}}) == 0);
}

TEST_CASE("Lusztig series of GL_n partition the irreducibles") {
  for (const char* s : {"GL2(3)", "GL2(4)", "GL2(5)", "GL3(2)", "GL3(3)"}) {
    CAPTURE(s);
    auto ctx = GLContext::get(GroupSpec::parse(s));
    auto labels = enumerate_semisimple_labels(ctx->splitting_field(), ctx->n());
    CHECK(ctx->series().size() == labels.size());
    std::vector<int> seen(static_cast<std::size_t>(ctx->table().size()), 0);
    for (const auto& ser : ctx->series())
      for (int i : ser.members) ++seen[static_cast<std::size_t>(i)];
    for (int i = 0; i < ctx->table().size(); ++i) {
      CHECK(seen[static_cast<std::size_t>(i)] == 1);
      CHECK(ctx->membership_count(i) == 1);
      CHECK(ctx->series_of(i) >= 0);
    }
    for (std::size_t k = 0; k < ctx->series().size(); ++k)
      CHECK(ctx->series_index(ctx->series()[k].label) == static_cast<int>(k));
  }
  auto ctx = GLContext::get(GroupSpec::parse("GL2(3)"));
  std::multiset<std::size_t> sizes;
  for (const auto& ser : ctx->series()) sizes.insert(ser.members.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 1, 2, 2});
}

TEST_CASE("central characters shift series") {
  for (const char* s : {"GL2(3)", "GL2(5)", "GL3(3)"}) {
    auto ctx = GLContext::get(GroupSpec::parse(s));
    const auto& t = ctx->table();
    for (std::int64_t c = 0; c < ctx->q() - 1; ++c) {
      ClassFunction z = ctx->central_linear_character(c);
      CHECK(t.index_of(z) >= 0);
      for (const auto& ser : ctx->series()) {
        int target = ctx->series_index(ser.label.scaled(ctx->central_shift(c)));
        REQUIRE(target >= 0);
        std::set<int> image;
        for (int i : ser.members) image.insert(t.index_of(t[i] * z));
        const auto& m = ctx->series()[static_cast<std::size_t>(target)].members;
        CHECK(image == std::set<int>(m.begin(), m.end()));
      }
    }
  }
}

TEST_CASE("dual characters lie in the inverse series") {
  auto ctx = GLContext::get(GroupSpec::parse("GL3(3)"));
  for (const auto& ser : ctx->series()) {
    int target = ctx->series_index(ser.label.inverse());
    REQUIRE(target >= 0);
    for (int i : ser.members) CHECK(ctx->series_of(ctx->table().dual_index(i)) == target);
  }
}

TEST_CASE("embedding twist: u = -1 maps each series to the inverse label") {
  for (const char* s : {"GL2(5)", "GL3(3)"}) {
    auto a = GLContext::get(GroupSpec::parse(s));
    auto b = GLContext::get(GroupSpec::parse(s), kDefaultBudget, -1);
    CHECK(b->twist() == -1);
    CHECK(&a->table() == &b->table());
    for (const auto& ser : b->series()) {
      int k = a->series_index(ser.label.inverse());
      REQUIRE(k >= 0);
      CHECK(a->series()[static_cast<std::size_t>(k)].members == ser.members);
    }
  }
  CHECK_THROWS_AS(GLContext::get(GroupSpec::parse("GL2(3)"), kDefaultBudget, 2), InvalidArgument);
}

TEST_CASE("GL context errors") {
  CHECK_THROWS_AS(GLContext::get(GroupSpec::parse("SL2(3)")), UnsupportedSpec);
  CHECK_THROWS_AS(GLContext::get(GroupSpec::parse("GL3(5)"), 1000), BudgetExceeded);
  CHECK_THROWS_AS(factor_green_function(2, 16, 2, {1, 1}, {1, 1}, kDefaultBudget), UnsupportedSpec);
  CHECK(factor_green_function(1, 3, 2, {1}, {1}, kDefaultBudget) == 1);
  CHECK(factor_green_function(2, 2, 2, {2}, {1, 1}, kDefaultBudget) == -3);
}

TEST_CASE("SL series by restriction") {
  auto sl = SLContext::get(GroupSpec::parse("SL2(3)"));
  const auto& gl = sl->gl();
  int st = gl.unipotent_characters().at({1, 1});
  CHECK(sl->table().index_of(sl->restrict_from_gl(gl.table()[st])) >= 0);
  for (const char* s : {"SL2(3)", "SL2(5)", "SL3(2)", "SL3(3)"}) {
    CAPTURE(s);
    auto ctx = SLContext::get(GroupSpec::parse(s));
    std::vector<int> seen(static_cast<std::size_t>(ctx->table().size()), 0);
    for (const auto& ser : ctx->series())
      for (int i : ser.members) ++seen[static_cast<std::size_t>(i)];
    for (int i = 0; i < ctx->table().size(); ++i) {
      CHECK(seen[static_cast<std::size_t>(i)] == 1);
      CHECK(ctx->membership_count(i) == 1);
    }
    for (std::size_t i = 0; i < ctx->restriction().size(); ++i) {
      long total = 0;
      for (std::size_t j = 0; j < ctx->restriction()[i].size(); ++j)
        total += ctx->restriction()[i][j] * ctx->table().degrees()[j];
      CHECK(total == ctx->gl().table().degrees()[i]);
    }
  }
  auto sl25 = SLContext::get(GroupSpec::parse("SL2(5)"));
  std::multiset<std::size_t> sizes;
  for (const auto& ser : sl25->series()) sizes.insert(ser.members.size());
  CHECK(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) == 9);
  for (const auto& ser : sl25->series()) {
    auto stab = sl25->scalar_stabilizer(ser.label);
    CHECK(!stab.empty());
    CHECK(stab.front() == 0);
  }
}
