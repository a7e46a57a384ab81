#pragma once

// The check catalog: every claim is recorded with its expected and computed
// value, and witnesses are stored in a form that can be re-substituted later
// from the JSON report alone.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lol/cohom.hpp"
#include "lol/poly.hpp"

namespace lol::verify {

using json = nlohmann::json;

enum class Status { Pass, Fail, Skipped };
const char* status_name(Status s);

// Collects the claims of one check. A check passes when every claim holds and
// no exception escaped.
class Recorder {
 public:
  bool expect(const std::string& claim, bool ok, json detail = nullptr);
  bool expect_eq(const std::string& claim, const json& expected, const json& actual);
  // Norm and commutator identities are counted separately for reporting.
  bool identity(const std::string& claim, const Mat& expected, const Mat& actual);
  void witness(json w);
  void note(const std::string& key, json value);
  void fail(const std::string& why);

  bool passed() const { return failures_ == 0; }
  int claims() const { return static_cast<int>(claims_.size()); }
  int identities() const { return identities_; }
  json evidence() const;

 private:
  std::vector<json> claims_;
  std::vector<json> witnesses_;
  json notes_ = json::object();
  int failures_ = 0;
  int identities_ = 0;
};

// Witness encodings. Matrices are stored in the text format with their ring.
json mat_json(const Mat& m);
Mat mat_from_json(const json& j);
json bicyclic_witness(const BicyclicSpec& z, Variant v, const BicyclicTriple& x, const ObstructionResult& r);
json norm_witness(const Mat& g, const Mat& m, const Mat& result);
json commutator_witness(const Mat& a, const Mat& b, const Mat& result);
json conjugate_witness(const Mat& g, const Mat& a, const Mat& result);
json power_witness(const Mat& m, std::int64_t k, const Mat& result);
json order_witness(const std::vector<Mat>& gens, std::size_t order);

// Re-substitutes one witness; returns an explanation when it does not hold.
std::optional<std::string> reverify_witness(const json& w);

struct CheckSpec {
  std::string id;
  std::string anchor;   // lemma label and case
  std::string summary;  // what is checked, in one line
  bool heavy = false;   // skipped unless heavy checks are requested
  std::function<void(Recorder&)> run;
};

struct CheckReport {
  std::string id;
  std::string anchor;
  Status status = Status::Fail;
  json evidence;
  double ms = 0;
  int claims = 0;
  int identities = 0;
};

json report_json(const CheckReport& r, bool with_timing = true);

const std::vector<CheckSpec>& catalog();

struct RunOptions {
  std::string filter;  // glob on ids; empty runs everything
  bool heavy = false;
  int jobs = 1;
};

// Throws UnknownCheck when a filter without wildcards names no check.
std::vector<CheckReport> run_checks(const RunOptions& opts);
CheckReport run_check(const CheckSpec& spec, bool heavy);
int exit_code(const std::vector<CheckReport>& reports);
json reports_json(const std::vector<CheckReport>& reports, bool with_timing = true);
std::string markdown_digest(const std::vector<CheckReport>& reports);
// Reloads a saved report and re-substitutes every witness of every passing check.
std::vector<std::string> reverify_report(const json& report);

// Grouped suites.
CheckReport norm_vanishing_suite();
CheckReport jordan_block_ingredients();
CheckReport section5_suite();
CheckReport class_coverage_audit(bool census = false);

struct SplittingCase {
  std::string name;
  Ring ring;                    // Z/p^2 or Z
  std::vector<Mat> sources;     // generators over F_p
  std::vector<Mat> lifts;       // their images over ring
  std::size_t expected_order = 0;
  bool check_u3_relations = false;
};
// Closure of the lifts, bijection onto the closure of the sources, and the
// commutator relations when asked. Throws RelationFailure on a broken relation.
void splitting_check(Recorder& rec, const SplittingCase& c);
std::vector<SplittingCase> splitting_cases();

// Invariant-factor signature of a 5x5 matrix over F_2.
struct ClassSignature {
  std::vector<Poly> invariant_factors;
  unsigned trace = 0;
  bool operator==(const ClassSignature& o) const {
    return invariant_factors == o.invariant_factors && trace == o.trace;
  }
  bool operator<(const ClassSignature& o) const;
  std::string to_string() const;
};
ClassSignature signature(const Mat& a);
// Every divisibility chain of monic polynomials over F_2 with degree sum n.
std::vector<ClassSignature> all_signatures(int n);
Mat rational_form(const ClassSignature& s);

// Checks grouped by where they come from; the catalog concatenates them.
void add_field_checks(std::vector<CheckSpec>& out);
void add_bicyclic_checks(std::vector<CheckSpec>& out);
void add_projection_checks(std::vector<CheckSpec>& out);
void add_jordan_checks(std::vector<CheckSpec>& out);
void add_other_checks(std::vector<CheckSpec>& out);
void add_audit_checks(std::vector<CheckSpec>& out);

}  // namespace lol::verify
