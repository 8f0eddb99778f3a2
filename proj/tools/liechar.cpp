#include <cstdlib>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "liechar/verifier.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUnknownCheck = 2, kUnsupported = 3, kBudget = 4, kUsage = 5, kPrecondition = 6 };

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("LIECHAR_CACHE_DIR")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return std::filesystem::path(xdg) / "liechar";
  if (const char* home = std::getenv("HOME")) return std::filesystem::path(home) / ".cache" / "liechar";
  return ".liechar-cache";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of duality and Jordan decomposition properties for GL_n(q) and SL_n(q)"};
  app.require_subcommand(1);

  std::string check, group, format = "json", cache_dir;
  bool no_cache = false, timing = false;
  std::uint64_t budget = liechar::kDefaultBudget;

  auto* verify = app.add_subcommand("verify", "Run one check, or all of them, on a group");
  verify->add_option("check", check, "check name or 'all'")->required();
  verify->add_option("--group", group, "group spec such as GL2(3) or SL3(4)")->required();
  verify->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "markdown"}));
  verify->add_option("--cache-dir", cache_dir, "table cache directory");
  verify->add_flag("--no-cache", no_cache, "always recompute tables");
  verify->add_option("--budget", budget, "maximum group order to enumerate");
  verify->add_flag("--timing", timing, "record wall-clock seconds in the report");

  auto* list = app.add_subcommand("list", "Print the available checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (list->parsed()) {
    for (const auto& n : liechar::check_names()) std::cout << n << "\n";
    return kPass;
  }

  std::unique_ptr<liechar::TableCache> cache;
  try {
    if (check != "all") {
      bool known = false;
      for (const auto& n : liechar::check_names()) known = known || n == check;
      if (!known) throw liechar::UnknownCheck(check);
    }
    auto spec = liechar::GroupSpec::parse(group);
    if (!no_cache) {
      cache = std::make_unique<liechar::TableCache>(cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir));
      liechar::use_table_cache(cache.get());
    }
    liechar::RunOptions options{budget, timing};
    auto fmt = format == "markdown" ? liechar::ReportFormat::Markdown : liechar::ReportFormat::Json;
    bool ok = true;
    if (check == "all") {
      auto reports = liechar::run_all(spec, options);
      for (const auto& r : reports) ok = ok && r.status != liechar::ReportStatus::Fail;
      std::cout << liechar::emit_reports(reports, fmt);
    } else {
      auto r = liechar::run_check(check, spec, options);
      ok = r.status == liechar::ReportStatus::Pass;
      std::cout << liechar::emit_report(r, fmt);
    }
    if (cache)
      for (const auto& w : cache->warnings()) std::cerr << "warning: " << w << "\n";
    liechar::use_table_cache(nullptr);
    return ok ? kPass : kFail;
  } catch (const liechar::UnknownCheck& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknownCheck;
  } catch (const liechar::UnsupportedSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const liechar::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const liechar::PreconditionFailed& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kPrecondition;
  } catch (const liechar::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
}
