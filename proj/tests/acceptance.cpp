#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "liechar/deligne_lusztig.hpp"
#include "liechar/jordan.hpp"
#include "liechar/partitions.hpp"
#include "liechar/verifier.hpp"

using namespace liechar;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

GroupSpec G(const char* s) { return GroupSpec::parse(s); }

bool report_ok(const CheckReport& r, Outcome& o) {
  if (r.status == ReportStatus::Pass && !r.items.empty()) return true;
  for (const auto& i : r.items)
    if (!i.pass) {
      o.require(false, r.check + " " + r.group + ": " + i.subject + " [" + i.lhs + " vs " + i.rhs + "]");
      return false;
    }
  o.require(false, r.check + " " + r.group + ": no items");
  return false;
}

void table_integrity(Outcome& o) {
  for (const char* s : {"GL2(3)", "SL2(3)", "SL2(5)", "GL3(2)", "SL3(2)", "SL3(4)"}) {
    auto start = std::chrono::steady_clock::now();
    auto classes = cached_classes(G(s));
    auto table = cached_table(G(s));
    try {
      table->verify_orthogonality();
    } catch (const std::exception& e) {
      o.require(false, std::string(s) + ": " + e.what());
    }
    std::uint64_t squares = 0;
    for (long d : table->degrees()) squares += static_cast<std::uint64_t>(d * d);
    o.require(squares == classes->group_order, std::string(s) + ": sum of squared degrees");
    o.require(table->size() == classes->class_count(), std::string(s) + ": table is not square");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 60, std::string(s) + ": took " + std::to_string(secs) + " s");
  }
}

void dualizing(Outcome& o) {
  for (auto [s, n] : std::vector<std::pair<const char*, std::size_t>>{{"GL2(3)", 8}, {"SL2(3)", 7}, {"SL2(5)", 9}, {"GL3(2)", 6}, {"SL3(2)", 6}}) {
    auto r = run_check("dualizing", G(s));
    report_ok(r, o);
    o.require(r.items.size() == n, std::string(s) + ": " + std::to_string(r.items.size()) + " irreducibles");
  }
}

void generic(Outcome& o) {
  for (const char* s : {"GL2(3)", "SL2(5)", "SL3(4)"}) report_ok(run_check("generic", G(s)), o);
  o.require(!two_h1_vanishes(G("SL3(4)")), "SL3(4) predicate should be false");
}

void series_partition(Outcome& o) {
  for (const char* s : {"GL2(3)", "GL2(4)", "GL3(2)", "GL3(3)", "SL2(3)", "SL2(5)", "SL3(2)"}) report_ok(run_check("series-partition", G(s)), o);
  auto gl = GLContext::get(G("GL2(3)"));
  std::multiset<std::size_t> sizes;
  for (const auto& s : gl->series()) sizes.insert(s.members.size());
  o.require(sizes == std::multiset<std::size_t>{2, 2, 1, 1, 1, 1}, "GL2(3) series sizes");
  for (const char* s : {"GL2(3)", "GL3(2)"}) {
    auto ctx = GLContext::get(G(s));
    o.require(ctx->unipotent_characters().size() == partitions(ctx->n()).size(), std::string(s) + ": |E(G,1)|");
  }
}

void dl_invariants(Outcome& o) {
  for (const char* s : {"GL2(3)", "GL3(2)"}) report_ok(run_check("dl-orthogonality", G(s)), o);
}

void jordan_witness(Outcome& o) {
  for (const char* s : {"GL2(3)", "GL3(2)"}) {
    auto gl = GLContext::get(G(s));
    auto items = verify_jordan_witnesses(*gl);
    CheckReport r;
    r.check = "witness";
    r.group = s;
    r.items = items;
    r.status = r.failed() ? ReportStatus::Fail : ReportStatus::Pass;
    report_ok(r, o);
    o.require(items.size() == static_cast<std::size_t>(gl->table().size()), std::string(s) + ": one witness per irreducible");
  }
}

void equivariance(Outcome& o) {
  for (const char* s : {"GL2(3)", "GL3(2)"}) {
    report_ok(run_check("jordan-dual", G(s)), o);
    report_ok(run_check("jordan-auto", G(s)), o);
  }
  // the pinned diagram flip of GL_3 is the Chevalley involution
  auto gl = GLContext::get(G("GL3(2)"));
  auto flip = chevalley_involution(gl->classes(), gl->classes()->group->standard_pinning());
  CheckReport r;
  r.check = "flip";
  r.group = "GL3(2)";
  r.items = verify_automorphism_equivariance(*gl, flip);
  r.status = r.failed() ? ReportStatus::Fail : ReportStatus::Pass;
  report_ok(r, o);
  o.require(flip.is_involution() && !flip.is_identity(), "diagram flip is a nontrivial involution");
}

void disconnected(Outcome& o) {
  for (const char* s : {"SL2(3)", "SL2(5)", "SL3(2)"}) report_ok(run_check("disconnected-jordan", G(s)), o);
  auto sl = SLContext::get(G("SL2(5)"));
  auto degrees = sl->table().degrees();
  std::vector<std::vector<long>> big;
  for (std::size_t k = 0; k < sl->series().size(); ++k) {
    auto d = disconnected_jordan(*sl, static_cast<int>(k));
    for (const auto& f : d.fibers)
      if (f.size() > 1) {
        std::vector<long> deg;
        for (int i : f) deg.push_back(degrees[static_cast<std::size_t>(i)]);
        big.push_back(deg);
      }
  }
  bool pair_of_twos = false;
  for (const auto& d : big) pair_of_twos = pair_of_twos || d == std::vector<long>{2, 2};
  o.require(pair_of_twos, "SL2(5): no size-2 fiber on the two degree-2 characters");
  o.detail << (o.pass ? "" : "; ") << "SL2(5) fibers of size > 1:";
  for (const auto& d : big) {
    o.detail << " {";
    for (std::size_t i = 0; i < d.size(); ++i) o.detail << (i ? "," : "") << d[i];
    o.detail << "}";
  }
}

void biconditional(Outcome& o) {
  int groups = 0;
  for (const char* s : {"GL2(2)", "GL2(3)", "GL2(4)", "GL2(5)", "GL3(2)", "GL3(3)", "SL2(3)", "SL2(4)", "SL2(5)", "SL3(2)", "SL3(3)", "SL3(4)"}) {
    if (!two_h1_vanishes(G(s))) continue;
    report_ok(run_check("dualizing", G(s)), o);
    ++groups;
  }
  o.detail << (o.pass ? "" : "; ") << groups << " groups with 2H^1 = 0";
}

void signs(Outcome& o) {
  auto gl = run_check("fs-indicator", G("GL2(3)"));
  report_ok(gl, o);
  for (const auto& v : gl.data.at("indicators")) o.require(cyclotomic_from_json(v) == CyclotomicNumber(1), "GL2(3): indicator not +1");
  for (const char* s : {"GL2(3)", "SL2(3)", "SL2(5)", "GL3(2)", "SL3(2)"}) {
    if (run_check("dualizing", G(s)).status != ReportStatus::Pass) continue;
    auto r = run_check("fs-indicator", G(s));
    report_ok(r, o);
    for (const auto& v : r.data.at("indicators")) {
      auto e = cyclotomic_from_json(v);
      o.require(e == CyclotomicNumber(1) || e == CyclotomicNumber(-1), std::string(s) + ": indicator " + e.to_string());
    }
  }
}

void cohomology(Outcome& o) {
  for (int n = 1; n <= 3; ++n)
    for (int q : {2, 3, 4, 5, 7}) {
      GroupSpec g{Family::GL, n, q};
      auto r = run_check("center-h1", g);
      report_ok(r, o);
      o.require(r.data.at("two_h1_vanishes") == true, g.to_string() + ": predicate should be true");
    }
  for (auto [s, expected] : std::vector<std::pair<const char*, bool>>{{"SL2(3)", true}, {"SL2(5)", true}, {"SL3(4)", false}}) {
    auto r = run_check("center-h1", G(s));
    report_ok(r, o);
    o.require(r.data.at("two_h1_vanishes") == expected, std::string(s) + ": predicate mismatch");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"table integrity", table_integrity},
      {"dualizing involution", dualizing},
      {"generic duality", generic},
      {"series partition", series_partition},
      {"Deligne-Lusztig invariants", dl_invariants},
      {"Jordan witness identity", jordan_witness},
      {"Jordan equivariance", equivariance},
      {"disconnected-center Jordan map", disconnected},
      {"dualizing iff Frobenius eigenvalue is a sign", biconditional},
      {"twisted Frobenius-Schur signs", signs},
      {"cohomology predicate", cohomology},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first;
    std::string d = o.detail.str();
    if (!d.empty()) std::cout << " (" << d << ")";
    std::cout << " [" << static_cast<long>(secs * 1000) << " ms]\n";
  }
  return failures == 0 ? 0 : 1;
}
