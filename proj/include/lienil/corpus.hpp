#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lienil/report.hpp"

namespace lienil {

/// One group per UTF-8 JSON document. Cycles use 1-based points; matrices
/// are row-major residue lists.
struct GroupSpec {
  std::string name;
  std::string kind;  // "perm" | "matrix" | "product" | "family"

  // perm
  int degree = 0;
  std::vector<std::vector<std::vector<int>>> perm_gens;  // generator -> cycles

  // matrix
  int dim = 0;
  int mat_p = 0;
  std::vector<std::vector<int>> matrix_gens;  // generator -> row-major entries

  // product
  std::vector<GroupSpec> factors;

  // family
  std::string family;
  std::vector<long> params;

  std::optional<int> p;  // analysis characteristic; inferred when absent

  struct Expected {
    std::optional<long> tL, tU;
    std::optional<int> cl;
    std::optional<std::string> gprime_type;
    bool operator==(const Expected&) const = default;
  };
  std::optional<Expected> expected;

  bool operator==(const GroupSpec&) const = default;
};

GroupSpec parse_spec(const std::string& text);
std::string serialize_spec(const GroupSpec& s);

/// Canonical generators for the built-in witness families.
GroupSpec family_spec(const std::string& name, std::span<const long> params);

GroupTable build_spec(const GroupSpec& s, int element_cap = kDefaultElementCap);
int spec_characteristic(const GroupSpec& s, const GroupTable& g);

struct VerifyResult {
  int violations = 0;
  std::vector<std::string> findings;  // violations first, then coverage notes
  std::string text() const;
};

/// Batch driver for survey/verify. Entries are processed in name order and
/// reports merged deterministically, independent of the job count.
class Corpus {
 public:
  void add_file(const std::string& path);
  void add_spec(GroupSpec spec, std::string source = "");
  void run(int jobs, const AnalyzeOptions& opt);

  std::string reports_text() const;
  std::string reports_json() const;
  VerifyResult verify() const;

  struct Entry {
    GroupSpec spec;
    std::string source;
    bool analyzed = false;
    AnalysisReport report;
    std::string error;
  };
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

}  // namespace lienil
