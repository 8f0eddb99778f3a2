#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "liechar/errors.hpp"
#include "liechar/jordan.hpp"

namespace liechar {

inline constexpr const char* kReportSchema = "liechar-report/1";
inline constexpr const char* kAlgorithmVersion = "liechar-1";

class UnknownCheck : public Error {
 public:
  explicit UnknownCheck(const std::string& name) : Error("unknown check: " + name) {}
};

enum class ReportStatus { Pass, Fail, Skipped };

struct CheckReport {
  std::string schema = kReportSchema;
  std::string check;
  std::string group;
  ReportStatus status = ReportStatus::Pass;
  std::string reason;  // why a check was skipped
  std::vector<CheckItem> items;
  nlohmann::json data;  // structured witnesses, null when absent
  std::optional<double> seconds;

  std::size_t passed() const;
  std::size_t failed() const;
};

enum class ReportFormat { Json, Markdown };

// Persistent store of serialized tables, one file per digest of {group spec, algorithm version}.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  static std::string key(const GroupSpec& spec);
  // Returns the stored payload after digest verification, or computes, stores and returns it.
  // A corrupt entry, or one the validator rejects, is discarded with a warning and recomputed.
  std::string get_or_compute(const std::string& key, const std::function<std::string()>& producer,
                             const std::function<bool(const std::string&)>& validate = {});
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::filesystem::path dir_;
  std::size_t hits_ = 0, misses_ = 0;
  std::vector<std::string> warnings_;
};

struct RunOptions {
  std::uint64_t budget = kDefaultBudget;
  bool timing = false;
};

const std::vector<std::string>& check_names();
// Throws UnknownCheck, UnsupportedSpec, BudgetExceeded, PreconditionFailed.
CheckReport run_check(const std::string& name, const GroupSpec& spec, const RunOptions& options = {});
// Every check in dependency order; inapplicable ones are reported as skipped.
std::vector<CheckReport> run_all(const GroupSpec& spec, const RunOptions& options = {});

nlohmann::json report_to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::json& j);
std::string emit_report(const CheckReport& r, ReportFormat format);
std::string emit_reports(const std::vector<CheckReport>& reports, ReportFormat format);
CheckReport parse_report(const std::string& json_text);
std::vector<CheckReport> parse_reports(const std::string& json_text);

nlohmann::json cyclotomic_to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclotomic_from_json(const nlohmann::json& j);
nlohmann::json field_element_to_json(const FiniteFieldElement& x);
FiniteFieldElement field_element_from_json(const nlohmann::json& j);

std::string serialize_table(const CharacterTable& t);
// Rejects payloads whose class digest differs from the given classes.
CharacterTable deserialize_table(const std::string& payload, std::shared_ptr<const ConjugacyData> classes);

std::string sha256_hex(const std::string& data);

// Routes table computation through the cache; nullptr restores direct computation.
void use_table_cache(TableCache* cache);

}  // namespace liechar
