#include <fstream>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "liechar/deligne_lusztig.hpp"
#include "liechar/errors.hpp"
#include "liechar/verifier.hpp"

using namespace liechar;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("liechar-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(p);
  return p;
}

std::size_t table_rows(const std::string& markdown) {
  std::istringstream in(markdown);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line))
    if (line.size() > 2 && line[0] == '|' && std::isdigit(static_cast<unsigned char>(line[2]))) ++n;
  return n;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cyclotomic and field element serialization") {
  std::vector<CyclotomicNumber> xs{CyclotomicNumber(0), CyclotomicNumber(-7), CyclotomicNumber(Rational(3, 4)),
                                   CyclotomicNumber::root_of_unity(5, 2), CyclotomicNumber::root_of_unity(12, 1) * Rational(-2, 3) +
                                                                              CyclotomicNumber::root_of_unity(8, 3)};
  for (const auto& x : xs) {
    auto j = cyclotomic_to_json(x);
    CHECK(cyclotomic_from_json(j) == x);
    CHECK(cyclotomic_to_json(cyclotomic_from_json(j)) == j);
    for (const auto& c : j.at("coefficients")) CHECK(c.get<std::string>().find('/') != std::string::npos);
  }
  CHECK(cyclotomic_to_json(CyclotomicNumber(Rational(3, 4))).at("coefficients")[0] == "3/4");
  CHECK_THROWS(cyclotomic_from_json(nlohmann::json{{"conductor", 1}, {"coefficients", {"x/y"}}}));

  auto f = FiniteField::of_order(9);
  for (int c = 0; c < f->order(); ++c) {
    auto j = field_element_to_json(f->element(c));
    CHECK(j.at("p") == 3);
    CHECK(j.at("k") == 2);
    CHECK(f->code(field_element_from_json(j)) == c);
  }
  CHECK_THROWS_AS(field_element_from_json(nlohmann::json{{"p", 3}, {"k", 2}, {"coordinates", {1}}}), InvalidArgument);
  CHECK_THROWS_AS(field_element_from_json(nlohmann::json{{"p", 3}, {"k", 1}, {"coordinates", {3}}}), InvalidArgument);
}

TEST_CASE("table serialization") {
  auto classes = cached_classes(GroupSpec::parse("SL2(3)"));
  auto table = cached_table(GroupSpec::parse("SL2(3)"));
  std::string payload = serialize_table(*table);
  CharacterTable back = deserialize_table(payload, classes);
  CHECK(back.irreducibles() == table->irreducibles());
  CHECK(serialize_table(back) == payload);
  back.verify_orthogonality();
  CHECK_THROWS_AS(deserialize_table(payload, cached_classes(GroupSpec::parse("GL2(3)"))), InvalidArgument);
}

TEST_CASE("report emission") {
  CheckReport empty;
  empty.check = "dualizing";
  empty.group = "GL2(3)";
  auto j = nlohmann::json::parse(emit_report(empty, ReportFormat::Json));
  CHECK(j.at("schema") == kReportSchema);
  CHECK(j.at("items").empty());
  CHECK(j.at("summary").at("items") == 0);
  CHECK_FALSE(j.contains("seconds"));
  std::string md = emit_report(empty, ReportFormat::Markdown);
  CHECK(table_rows(md) == 0);
  CHECK(md.find("| # | item |") != std::string::npos);

  RunOptions timed;
  timed.timing = true;
  std::vector<CheckReport> reports{empty, run_check("generic", GroupSpec::parse("GL2(3)")),
                                   run_check("center-h1", GroupSpec::parse("SL3(4)"), timed),
                                   run_check("fs-indicator", GroupSpec::parse("SL2(3)"))};
  reports[0].items.push_back({"a | b", false, "x\ny", "z", "note"});
  for (const auto& r : reports) {
    std::string once = emit_report(r, ReportFormat::Json);
    std::string twice = emit_report(parse_report(once), ReportFormat::Json);
    CHECK(once == twice);
    CHECK(emit_report(parse_report(once), ReportFormat::Markdown) == emit_report(r, ReportFormat::Markdown));
  }
  std::string all = emit_reports(reports, ReportFormat::Json);
  CHECK(emit_reports(parse_reports(all), ReportFormat::Json) == all);
  CHECK(emit_report(reports[0], ReportFormat::Markdown).find("a \\| b") != std::string::npos);
  CHECK(reports[2].seconds.has_value());

  CHECK_THROWS_AS(parse_report("{"), InvalidArgument);
  auto bad = report_to_json(reports[1]);
  bad["schema"] = "other/0";
  CHECK_THROWS_AS(report_from_json(bad), InvalidArgument);
  auto miscount = report_to_json(reports[1]);
  miscount["summary"]["items"] = 0;
  CHECK_THROWS_AS(report_from_json(miscount), InvalidArgument);
}

TEST_CASE("dualizing report for SL_2(5) has one row per class") {
  auto r = run_check("dualizing", GroupSpec::parse("SL2(5)"));
  CHECK(r.items.size() == 9);
  CHECK(table_rows(emit_report(r, ReportFormat::Markdown)) == static_cast<std::size_t>(cached_classes(GroupSpec::parse("SL2(5)"))->class_count()));
  CHECK(r.status == ReportStatus::Pass);
}

TEST_CASE("run_check examples") {
  auto d = run_check("dualizing", GroupSpec::parse("GL2(3)"));
  CHECK(d.items.size() == 8);
  CHECK(d.passed() == 8);

  auto h = run_check("center-h1", GroupSpec::parse("SL3(4)"));
  CHECK(h.status == ReportStatus::Pass);
  CHECK(h.data.at("invariant_factors") == nlohmann::json::array({3}));
  CHECK(h.data.at("two_h1_vanishes") == false);

  auto fs = run_check("fs-indicator", GroupSpec::parse("GL2(3)"));
  CHECK(fs.items.size() == 8);
  for (const auto& v : fs.data.at("indicators")) CHECK(cyclotomic_from_json(v) == CyclotomicNumber(1));
  CHECK(fs.status == ReportStatus::Pass);

  // |H^1| for SL_n is the number of n-th roots of unity in F_q
  for (int n = 2; n <= 3; ++n)
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
      GroupSpec g{Family::SL, n, q};
      auto r = run_check("center-h1", g);
      CHECK(r.status == ReportStatus::Pass);
      CHECK(r.data.at("order") == std::gcd(n, q - 1));
      auto rg = run_check("center-h1", g.with_family(Family::GL));
      CHECK(rg.data.at("order") == 1);
      CHECK(rg.data.at("two_h1_vanishes") == true);
    }

  auto g = run_check("generic", GroupSpec::parse("SL2(5)"));
  CHECK(g.data.at("whittaker_data").size() == 2);
  for (const auto& w : g.data.at("whittaker_data"))
    for (const auto& e : w.at("functional")) CHECK(field_element_from_json(e).p == 5);
}

TEST_CASE("run_check errors") {
  CHECK_THROWS_AS(run_check("nonsense", GroupSpec::parse("GL2(3)")), UnknownCheck);
  CHECK_THROWS_AS(run_check("dl-orthogonality", GroupSpec::parse("SL2(3)")), UnsupportedSpec);
  CHECK_THROWS_AS(run_check("disconnected-jordan", GroupSpec::parse("GL2(3)")), UnsupportedSpec);
  RunOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(run_check("dualizing", GroupSpec::parse("GL2(3)"), tiny), BudgetExceeded);
  CHECK_THROWS_AS(run_check("dualizing", GroupSpec::parse("SL3(4)")), PreconditionFailed);
  CHECK(check_names().size() == 10);
}

TEST_CASE("run_all skips inapplicable checks") {
  auto reports = run_all(GroupSpec::parse("SL2(3)"));
  REQUIRE(reports.size() == check_names().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CAPTURE(reports[i].check);
    CHECK(reports[i].check == check_names()[i]);
    if (reports[i].check == "dl-orthogonality") {
      CHECK(reports[i].status == ReportStatus::Skipped);
      CHECK_FALSE(reports[i].reason.empty());
    } else {
      CHECK(reports[i].status == ReportStatus::Pass);
    }
  }
}

TEST_CASE("determinism") {
  for (const char* name : {"jordan-auto", "series-partition", "disconnected-jordan"}) {
    auto a = emit_report(run_check(name, GroupSpec::parse("SL2(5)")), ReportFormat::Json);
    auto b = emit_report(run_check(name, GroupSpec::parse("SL2(5)")), ReportFormat::Json);
    CHECK(a == b);
  }
}

TEST_CASE("table cache") {
  auto dir = fresh_dir("cache");
  int calls = 0;
  auto producer = [&] {
    ++calls;
    return std::string("payload-") + std::to_string(calls);
  };
  const std::string key = TableCache::key(GroupSpec::parse("GL2(3)"));
  CHECK(key.size() == 64);
  CHECK(key != TableCache::key(GroupSpec::parse("SL2(3)")));
  {
    TableCache cache(dir);
    CHECK(cache.get_or_compute(key, producer) == "payload-1");
    CHECK(cache.get_or_compute(key, producer) == "payload-1");
    CHECK(cache.hits() == 1);
    CHECK(cache.misses() == 1);
  }
  const auto file = dir / (key + ".json");
  REQUIRE(std::filesystem::exists(file));
  {
    TableCache cache(dir);
    CHECK(cache.get_or_compute(key, producer) == "payload-1");
    CHECK(calls == 1);
  }
  // tamper with the payload but not its digest
  std::string text = slurp(file);
  text.replace(text.find("payload-1"), 9, "payload-X");
  std::ofstream(file) << text;
  {
    TableCache cache(dir);
    CHECK(cache.get_or_compute(key, producer) == "payload-2");
    CHECK(cache.warnings().size() == 1);
    CHECK(cache.misses() == 1);
  }
  std::ofstream(file) << "not json";
  {
    TableCache cache(dir);
    CHECK(cache.get_or_compute(key, producer) == "payload-3");
    CHECK(cache.warnings().size() == 1);
  }
  {
    TableCache cache(dir);
    CHECK(cache.get_or_compute(key, producer, [](const std::string&) { return false; }) == "payload-4");
    CHECK(cache.warnings().size() == 1);
    CHECK(cache.get_or_compute(key, producer) == "payload-4");
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("character tables through the cache") {
  auto dir = fresh_dir("tables");
  const GroupSpec spec = GroupSpec::parse("GL2(7)");
  std::string cold;
  {
    TableCache cache(dir);
    use_table_cache(&cache);
    auto table = cached_table(spec);
    use_table_cache(nullptr);
    CHECK(cache.misses() == 1);
    cold = serialize_table(*table);
    CHECK(table->size() == 48);
  }
  {
    TableCache cache(dir);
    std::string warm = cache.get_or_compute(TableCache::key(spec), [] { return std::string("recomputed"); });
    CHECK(warm == cold);
    CHECK(cache.hits() == 1);
    CharacterTable t = deserialize_table(warm, cached_classes(spec));
    CHECK(serialize_table(t) == cold);
  }
  std::filesystem::remove_all(dir);
}
