#include "liechar/verifier.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "liechar/gelfand_graev.hpp"
#include "liechar/partitions.hpp"
#include "liechar/root_datum.hpp"

namespace liechar {

using nlohmann::json;

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::string status_name(ReportStatus s) {
  switch (s) {
    case ReportStatus::Pass: return "pass";
    case ReportStatus::Fail: return "fail";
    case ReportStatus::Skipped: return "skipped";
  }
  return "fail";
}

ReportStatus parse_status(const std::string& s) {
  if (s == "pass") return ReportStatus::Pass;
  if (s == "fail") return ReportStatus::Fail;
  if (s == "skipped") return ReportStatus::Skipped;
  throw InvalidArgument("unknown report status: " + s);
}

std::string root_datum_name(const GroupSpec& spec) {
  return (spec.family == Family::GL ? "GL" : "SL") + std::to_string(spec.n);
}

std::string cyclo_string(const CyclotomicNumber& x) { return x.to_string(); }

std::string sizes_string(std::vector<std::size_t> sizes) {
  std::sort(sizes.rbegin(), sizes.rend());
  std::string s = "{";
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
  return s + "}";
}

void append(std::vector<CheckItem>& to, std::vector<CheckItem> from, const std::string& prefix = "") {
  for (auto& i : from) {
    if (!prefix.empty()) i.subject = prefix + ": " + i.subject;
    to.push_back(std::move(i));
  }
}

// Coinvariants of the finite module by brute force: |M| / |(F - 1)M| and whether 2M lies in (F - 1)M.
std::pair<long, bool> enumerate_coinvariants(const CenterComponentGroup& z) {
  const std::size_t r = z.divisors.size();
  long total = 1;
  for (long d : z.divisors) total *= d;
  auto decode = [&](long code) {
    std::vector<long> x(r);
    for (std::size_t i = 0; i < r; ++i) {
      x[i] = code % z.divisors[i];
      code /= z.divisors[i];
    }
    return x;
  };
  auto encode = [&](const std::vector<long>& x) {
    long code = 0;
    for (std::size_t i = r; i-- > 0;) code = code * z.divisors[i] + x[i];
    return code;
  };
  std::set<long> image;
  for (long code = 0; code < total; ++code) {
    auto x = decode(code);
    std::vector<long> y(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        y[j] += x[i] * z.frobenius_action(static_cast<int>(i), static_cast<int>(j)).get_si();
    for (std::size_t j = 0; j < r; ++j) y[j] = mod_floor(y[j] - x[j], z.divisors[j]);
    image.insert(encode(y));
  }
  bool two_kills = true;
  for (long code = 0; code < total && two_kills; ++code) {
    auto x = decode(code);
    for (std::size_t i = 0; i < r; ++i) x[i] = mod_floor(2 * x[i], z.divisors[i]);
    two_kills = image.count(encode(x)) > 0;
  }
  return {total / static_cast<long>(image.size()), two_kills};
}

std::string group_string(const std::vector<long>& factors) {
  if (factors.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " x " : "") + ("Z/" + std::to_string(factors[i]));
  return s;
}

CheckReport check_center_h1(const GroupSpec& spec) {
  CheckReport r;
  auto datum = BasedRootDatum::named(root_datum_name(spec));
  auto z = center_component_group(datum, FrobeniusDatum::split(datum, spec.q));
  auto h = h1_frobenius(z);
  auto [order, two_kills] = enumerate_coinvariants(z);
  const std::string group = group_string(h.invariant_factors);
  r.items.push_back({"|H^1(F, Z)| by Smith form vs coinvariant enumeration", h.order == order, std::to_string(h.order),
                     std::to_string(order), "H^1 = " + group});
  r.items.push_back({"2 H^1 = 0", h.two_h1_vanishes == two_kills, h.two_h1_vanishes ? "true" : "false",
                     two_kills ? "true" : "false", "predicate " + std::string(h.two_h1_vanishes ? "true" : "false")});
  if (spec.family == Family::SL) {
    auto field = FiniteField::of_order(spec.q);
    long scalars = 0;
    for (int c = 1; c < field->order(); ++c)
      if (field->pow(c, spec.n) == 1) ++scalars;
    r.items.push_back({"|Z(G)^F| equals |H^1|", scalars == h.order, std::to_string(scalars), std::to_string(h.order),
                       "scalar matrices of determinant 1"});
  }
  r.data = {{"invariant_factors", h.invariant_factors}, {"order", h.order}, {"two_h1_vanishes", h.two_h1_vanishes}};
  return r;
}

CheckReport check_series_partition(const GroupSpec& spec, std::uint64_t budget) {
  CheckReport r;
  if (spec.family == Family::GL) {
    auto gl = GLContext::get(spec, budget);
    for (int i = 0; i < gl->table().size(); ++i)
      r.items.push_back({"chi_" + std::to_string(i) + " lies in exactly one series", gl->membership_count(i) == 1,
                         std::to_string(gl->membership_count(i)), "1", ""});
    auto labels = enumerate_semisimple_labels(gl->splitting_field(), gl->n());
    std::vector<std::size_t> sizes;
    std::size_t covered = 0;
    for (const auto& s : gl->series()) {
      sizes.push_back(s.members.size());
      covered += s.members.size();
    }
    r.items.push_back({"series count equals semisimple class count", gl->series().size() == labels.size(),
                       std::to_string(gl->series().size()), std::to_string(labels.size()), "sizes " + sizes_string(sizes)});
    r.items.push_back({"series sizes sum to |Irr|", covered == static_cast<std::size_t>(gl->table().size()),
                       std::to_string(covered), std::to_string(gl->table().size()), ""});
    int triv = gl->table().index_of(ClassFunction::trivial(gl->classes()));
    std::size_t unipotent = gl->series()[static_cast<std::size_t>(gl->series_of(triv))].members.size();
    std::size_t p = partitions(gl->n()).size();
    r.items.push_back({"|E(G,1)| = p(n)", unipotent == p, std::to_string(unipotent), std::to_string(p), ""});
  } else {
    auto sl = SLContext::get(spec, budget);
    for (int i = 0; i < sl->table().size(); ++i)
      r.items.push_back({"chi_" + std::to_string(i) + " lies in exactly one series", sl->membership_count(i) == 1,
                         std::to_string(sl->membership_count(i)), "1", ""});
    std::set<SemisimpleClassLabel> classes;
    for (const auto& l : enumerate_semisimple_labels(sl->gl().splitting_field(), spec.n)) classes.insert(sl->scalar_class(l));
    std::vector<std::size_t> sizes;
    std::size_t covered = 0;
    for (const auto& s : sl->series()) {
      sizes.push_back(s.members.size());
      covered += s.members.size();
    }
    r.items.push_back({"series count equals dual semisimple class count", sl->series().size() == classes.size(),
                       std::to_string(sl->series().size()), std::to_string(classes.size()), "sizes " + sizes_string(sizes)});
    r.items.push_back({"series sizes sum to |Irr|", covered == static_cast<std::size_t>(sl->table().size()),
                       std::to_string(covered), std::to_string(sl->table().size()), ""});
  }
  return r;
}

CheckReport check_dl_orthogonality(const GroupSpec& spec, std::uint64_t budget) {
  if (spec.family != Family::GL) throw UnsupportedSpec("dl-orthogonality is implemented for GL_n only");
  CheckReport r;
  auto gl = GLContext::get(spec, budget);
  const auto& chars = gl->torus_characters();
  const auto& table = gl->table();
  std::vector<std::vector<long>> mult;
  for (const auto& theta : chars) mult.push_back(table.decompose(gl->dl_character(theta)));
  std::uint64_t pprime = gl->classes()->group_order;
  const auto p = static_cast<std::uint64_t>(gl->classes()->group->field().characteristic());
  while (pprime % p == 0) pprime /= p;
  auto name = [&](const TorusCharacter& t) {
    std::string s = "R(T" + std::to_string(t.torus) + ", theta(";
    for (std::size_t i = 0; i < t.k.size(); ++i) s += (i ? "," : "") + std::to_string(t.k[i]);
    return s + "))";
  };
  for (std::size_t a = 0; a < chars.size(); ++a) {
    CheckItem item{name(chars[a]) + " inner products against all pairs", true, "", "", std::to_string(chars.size()) + " pairs"};
    for (std::size_t b = 0; b < chars.size() && item.pass; ++b) {
      long ip = 0;
      for (std::size_t i = 0; i < mult[a].size(); ++i) ip += mult[a][i] * mult[b][i];
      long expected = gl->exclusion_count(chars[a], chars[b]);
      if (ip != expected) {
        item.pass = false;
        item.lhs = std::to_string(ip);
        item.rhs = std::to_string(expected);
        item.note = "against " + name(chars[b]);
      }
    }
    if (item.pass) item.lhs = item.rhs = "exclusion counts";
    r.items.push_back(item);
    const CyclotomicNumber degree = gl->dl_character(chars[a]).degree();
    long expected = gl->epsilon_group() * gl->epsilon_torus(chars[a].torus) *
                    static_cast<long>(pprime / gl->tori()[static_cast<std::size_t>(chars[a].torus)].order);
    r.items.push_back({name(chars[a]) + " degree", degree == CyclotomicNumber(expected), cyclo_string(degree),
                       std::to_string(expected), "eps_G eps_T |G|_p' / |T|"});
  }
  return r;
}

CheckReport check_dualizing(const GroupSpec& spec, std::uint64_t budget) {
  CheckReport r;
  r.items = verify_main_theorem(spec, budget);
  return r;
}

CheckReport check_fs_indicator(const GroupSpec& spec, std::uint64_t budget) {
  CheckReport r;
  std::shared_ptr<const GLContext> gl;
  std::shared_ptr<const SLContext> sl;
  if (spec.family == Family::GL) gl = GLContext::get(spec, budget);
  else sl = SLContext::get(spec, budget);
  const CharacterTable* table = gl ? &gl->table() : &sl->table();
  auto classes = table->classes_ptr();
  auto iota = duality_involution(classes, classes->group->standard_pinning());
  auto counts = twisted_square_counts(iota);
  json values = json::array();
  for (int i = 0; i < table->size(); ++i) {
    CyclotomicNumber e = twisted_fs_indicator((*table)[i], counts);
    bool sign = e == CyclotomicNumber(1) || e == CyclotomicNumber(-1);
    bool dualizes = twist_by_automorphism((*table)[i], iota) == (*table)[table->dual_index(i)];
    values.push_back(cyclotomic_to_json(e));
    // the twisted indicator is nonzero exactly when chi o iota = chi^vee
    if (spec.family == Family::GL) {
      r.items.push_back({"eps(chi_" + std::to_string(i) + ")", e == CyclotomicNumber(1), cyclo_string(e), "1", ""});
    } else {
      r.items.push_back({"eps(chi_" + std::to_string(i) + ") in {1, -1} iff chi o iota = chi^vee", sign == dualizes,
                         cyclo_string(e), dualizes ? "+-1" : "0", dualizes ? "chi o iota = chi^vee" : "chi o iota != chi^vee"});
    }
  }
  r.data = {{"indicators", values}};
  return r;
}

CheckReport check_torus_lemma(const GroupSpec& spec, std::uint64_t budget) {
  CheckReport r;
  r.items = verify_torus_lemma(spec, budget);
  return r;
}

CheckReport check_generic(const GroupSpec& spec, std::uint64_t budget) {
  CheckReport r;
  r.items = verify_generic_duality(spec, budget);
  auto classes = cached_classes(spec, budget);
  const auto& field = classes->group->field();
  json data = json::array();
  for (const auto& psi : whittaker_data(classes)) {
    json functional = json::array();
    for (int a : psi.functional()) functional.push_back(field_element_to_json(field.element(a)));
    json pinning = json::array();
    for (int c : psi.pinning().coefficients) pinning.push_back(field_element_to_json(field.element(c)));
    data.push_back({{"descriptor", psi.descriptor()}, {"functional", functional}, {"pinning", pinning}});
  }
  r.data = {{"whittaker_data", data}};
  return r;
}

CheckReport check_jordan_dual(const GroupSpec& spec, std::uint64_t budget) {
  CheckReport r;
  if (spec.family == Family::GL) {
    auto gl = GLContext::get(spec, budget);
    append(r.items, verify_jordan_witnesses(*gl), "witness");
    append(r.items, verify_tensor_equivariance(*gl), "tensor");
    append(r.items, verify_dual_equivariance(*gl), "dual");
  } else {
    append(r.items, verify_dual_equivariance(*SLContext::get(spec, budget)), "dual");
  }
  return r;
}

CheckReport check_jordan_auto(const GroupSpec& spec, std::uint64_t budget) {
  CheckReport r;
  auto classes = cached_classes(spec, budget);
  const auto& pin = classes->group->standard_pinning();
  std::vector<GroupAutomorphism> autos{identity_automorphism(classes), duality_involution(classes, pin),
                                       chevalley_involution(classes, pin)};
  if (spec.family == Family::GL) {
    auto gl = GLContext::get(spec, budget);
    for (const auto& s : autos) append(r.items, verify_automorphism_equivariance(*gl, s), s.name());
  } else {
    auto sl = SLContext::get(spec, budget);
    for (const auto& a : adjoint_action_representatives(classes))
      if (!a.is_identity()) autos.push_back(a);
    for (const auto& s : autos) append(r.items, verify_automorphism_equivariance(*sl, s), s.name());
    if (spec.n == 2) append(r.items, verify_rigidity(*sl), "rigidity");
  }
  return r;
}

CheckReport check_disconnected_jordan(const GroupSpec& spec, std::uint64_t budget) {
  if (spec.family != Family::SL) throw UnsupportedSpec(spec.to_string() + " has connected center");
  CheckReport r;
  r.items = verify_disconnected_jordan(*SLContext::get(spec, budget));
  return r;
}

using CheckFn = CheckReport (*)(const GroupSpec&, std::uint64_t);

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> m{
      {"center-h1", [](const GroupSpec& s, std::uint64_t) { return check_center_h1(s); }},
      {"series-partition", check_series_partition},
      {"dl-orthogonality", check_dl_orthogonality},
      {"dualizing", check_dualizing},
      {"fs-indicator", check_fs_indicator},
      {"torus-lemma", check_torus_lemma},
      {"generic", check_generic},
      {"jordan-dual", check_jordan_dual},
      {"jordan-auto", check_jordan_auto},
      {"disconnected-jordan", check_disconnected_jordan},
  };
  return m;
}

std::string markdown_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string markdown(const CheckReport& r) {
  std::ostringstream out;
  out << "## " << r.check << " on " << r.group << ": ";
  if (r.status == ReportStatus::Skipped) {
    out << "SKIPPED\n\n" << markdown_cell(r.reason) << "\n";
    return out.str();
  }
  out << (r.status == ReportStatus::Pass ? "PASS" : "FAIL") << " (" << r.passed() << "/" << r.items.size() << ")\n\n";
  out << "| # | item | result | lhs | rhs | note |\n|---|---|---|---|---|---|\n";
  for (std::size_t i = 0; i < r.items.size(); ++i) {
    const auto& it = r.items[i];
    out << "| " << i + 1 << " | " << markdown_cell(it.subject) << " | " << (it.pass ? "pass" : "FAIL") << " | "
        << markdown_cell(it.lhs) << " | " << markdown_cell(it.rhs) << " | " << markdown_cell(it.note) << " |\n";
  }
  if (r.seconds) out << "\n" << *r.seconds << " s\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

std::size_t CheckReport::passed() const {
  std::size_t n = 0;
  for (const auto& i : items) n += i.pass ? 1 : 0;
  return n;
}

std::size_t CheckReport::failed() const { return items.size() - passed(); }

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) throw Error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (unsigned int i = 0; i < len; ++i) {
    s += hex[digest[i] >> 4];
    s += hex[digest[i] & 15];
  }
  return s;
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::string TableCache::key(const GroupSpec& spec) {
  return sha256_hex(json{{"spec", spec.to_string()}, {"algorithm", kAlgorithmVersion}}.dump());
}

std::string TableCache::get_or_compute(const std::string& key, const std::function<std::string()>& producer,
                                       const std::function<bool(const std::string&)>& validate) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  const auto path = dir_ / (key + ".json");
  if (std::filesystem::exists(path)) {
    std::string problem;
    try {
      json entry = json::parse(read_file(path));
      std::string payload = entry.at("payload").get<std::string>();
      if (entry.at("key").get<std::string>() != key) problem = "key mismatch";
      else if (entry.at("payload_sha256").get<std::string>() != sha256_hex(payload)) problem = "digest mismatch";
      else if (validate && !validate(payload)) problem = "payload rejected";
      if (problem.empty()) {
        ++hits_;
        return payload;
      }
    } catch (const std::exception& e) {
      problem = std::string("unreadable entry (") + e.what() + ")";
    }
    warnings_.push_back("cache entry " + path.string() + ": " + problem + "; recomputing");
    std::filesystem::remove(path);
  }
  ++misses_;
  std::string payload = producer();
  json entry{{"key", key}, {"algorithm", kAlgorithmVersion}, {"payload", payload}, {"payload_sha256", sha256_hex(payload)}};
  const auto tmp = dir_ / (key + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << entry.dump() << "\n";
    if (!out) throw Error("cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
  return payload;
}

json cyclotomic_to_json(const CyclotomicNumber& x) {
  json coeffs = json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back(rational_to_string(c));
  return {{"conductor", x.conductor()}, {"coefficients", coeffs}};
}

CyclotomicNumber cyclotomic_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(rational_from_string(c.get<std::string>()));
  return CyclotomicNumber(j.at("conductor").get<int>(), coeffs);
}

json field_element_to_json(const FiniteFieldElement& x) { return {{"p", x.p}, {"k", x.k}, {"coordinates", x.coordinates}}; }

FiniteFieldElement field_element_from_json(const json& j) {
  FiniteFieldElement x;
  x.p = j.at("p").get<int>();
  x.k = j.at("k").get<int>();
  x.coordinates = j.at("coordinates").get<std::vector<int>>();
  if (x.p < 2 || x.k < 1 || static_cast<int>(x.coordinates.size()) != x.k) throw InvalidArgument("malformed field element");
  for (int c : x.coordinates)
    if (c < 0 || c >= x.p) throw InvalidArgument("field coordinate out of range");
  return x;
}

std::string serialize_table(const CharacterTable& t) {
  json rows = json::array();
  for (const auto& chi : t.irreducibles()) {
    json row = json::array();
    for (const auto& v : chi.values()) row.push_back(cyclotomic_to_json(v));
    rows.push_back(row);
  }
  return json{{"group", t.classes().name()},
              {"class_digest", sha256_hex(t.classes().canonical_text())},
              {"modulus", t.modulus()},
              {"rows", rows}}
      .dump();
}

CharacterTable deserialize_table(const std::string& payload, std::shared_ptr<const ConjugacyData> classes) {
  json j = json::parse(payload);
  if (j.at("class_digest").get<std::string>() != sha256_hex(classes->canonical_text()))
    throw InvalidArgument("table was computed for different class data");
  std::vector<ClassFunction> irr;
  for (const auto& row : j.at("rows")) {
    std::vector<CyclotomicNumber> values;
    for (const auto& v : row) values.push_back(cyclotomic_from_json(v));
    if (static_cast<int>(values.size()) != classes->class_count()) throw InvalidArgument("table row has the wrong length");
    irr.emplace_back(classes, std::move(values));
  }
  return CharacterTable(classes, std::move(irr), j.at("modulus").get<std::int64_t>());
}

void use_table_cache(TableCache* cache) {
  if (!cache) {
    set_table_provider({});
    return;
  }
  set_table_provider([cache](const std::shared_ptr<const ConjugacyData>& classes) {
    std::shared_ptr<const CharacterTable> table;
    auto validate = [&](const std::string& payload) {
      try {
        table = std::make_shared<const CharacterTable>(deserialize_table(payload, classes));
        return true;
      } catch (const std::exception&) {
        return false;
      }
    };
    std::string payload =
        cache->get_or_compute(TableCache::key(classes->group->spec()), [&] { return serialize_table(character_table(classes)); }, validate);
    if (!table) table = std::make_shared<const CharacterTable>(deserialize_table(payload, classes));
    return table;
  });
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"center-h1", "series-partition", "dl-orthogonality", "dualizing", "fs-indicator",
                                              "torus-lemma", "generic", "jordan-dual", "jordan-auto", "disconnected-jordan"};
  return names;
}

CheckReport run_check(const std::string& name, const GroupSpec& spec, const RunOptions& options) {
  auto it = registry().find(name);
  if (it == registry().end()) throw UnknownCheck(name);
  auto start = std::chrono::steady_clock::now();
  CheckReport r = it->second(spec, options.budget);
  r.check = name;
  r.group = spec.to_string();
  r.status = r.failed() == 0 ? ReportStatus::Pass : ReportStatus::Fail;
  if (options.timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckReport> run_all(const GroupSpec& spec, const RunOptions& options) {
  std::vector<CheckReport> out;
  for (const auto& name : check_names()) {
    try {
      out.push_back(run_check(name, spec, options));
    } catch (const UnsupportedSpec& e) {
      out.push_back({kReportSchema, name, spec.to_string(), ReportStatus::Skipped, e.what(), {}, nullptr, std::nullopt});
    } catch (const PreconditionFailed& e) {
      out.push_back({kReportSchema, name, spec.to_string(), ReportStatus::Skipped, e.what(), {}, nullptr, std::nullopt});
    }
  }
  return out;
}

json report_to_json(const CheckReport& r) {
  json items = json::array();
  for (const auto& i : r.items)
    items.push_back({{"subject", i.subject}, {"pass", i.pass}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"note", i.note}});
  json j{{"schema", r.schema},
         {"check", r.check},
         {"group", r.group},
         {"status", status_name(r.status)},
         {"reason", r.reason},
         {"summary", {{"items", r.items.size()}, {"passed", r.passed()}, {"failed", r.failed()}}},
         {"items", items}};
  if (!r.data.is_null()) j["data"] = r.data;
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

CheckReport report_from_json(const json& j) {
  CheckReport r;
  r.schema = j.at("schema").get<std::string>();
  if (r.schema != kReportSchema) throw InvalidArgument("unsupported report schema: " + r.schema);
  r.check = j.at("check").get<std::string>();
  r.group = j.at("group").get<std::string>();
  r.status = parse_status(j.at("status").get<std::string>());
  r.reason = j.value("reason", "");
  for (const auto& i : j.at("items"))
    r.items.push_back({i.at("subject").get<std::string>(), i.at("pass").get<bool>(), i.value("lhs", ""), i.value("rhs", ""),
                       i.value("note", "")});
  if (j.contains("data")) r.data = j.at("data");
  if (j.contains("seconds")) r.seconds = j.at("seconds").get<double>();
  if (j.contains("summary") && j.at("summary").at("items").get<std::size_t>() != r.items.size())
    throw InvalidArgument("report summary does not match its items");
  return r;
}

std::string emit_report(const CheckReport& r, ReportFormat format) {
  if (format == ReportFormat::Markdown) return markdown(r);
  return report_to_json(r).dump(2) + "\n";
}

std::string emit_reports(const std::vector<CheckReport>& reports, ReportFormat format) {
  if (format == ReportFormat::Markdown) {
    std::string s;
    for (std::size_t i = 0; i < reports.size(); ++i) s += (i ? "\n" : "") + markdown(reports[i]);
    return s;
  }
  json list = json::array();
  for (const auto& r : reports) list.push_back(report_to_json(r));
  return json{{"schema", kReportSchema}, {"reports", list}}.dump(2) + "\n";
}

CheckReport parse_report(const std::string& json_text) {
  try {
    return report_from_json(json::parse(json_text));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

std::vector<CheckReport> parse_reports(const std::string& json_text) {
  try {
    json j = json::parse(json_text);
    if (j.at("schema").get<std::string>() != kReportSchema) throw InvalidArgument("unsupported report schema");
    std::vector<CheckReport> out;
    for (const auto& r : j.at("reports")) out.push_back(report_from_json(r));
    return out;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed report list: ") + e.what());
  }
}

}  // namespace liechar
