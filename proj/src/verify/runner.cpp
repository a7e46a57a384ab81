#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "lol/verify.hpp"

namespace lol::verify {

json report_json(const CheckReport& r, bool with_timing) {
  json j = {{"id", r.id}, {"anchor", r.anchor}, {"status", status_name(r.status)}, {"evidence", r.evidence}};
  j["ms"] = with_timing ? json(std::round(r.ms * 1000) / 1000) : json(0);
  return j;
}

CheckReport run_check(const CheckSpec& spec, bool heavy) {
  CheckReport r{spec.id, spec.anchor};
  if (spec.heavy && !heavy) {
    r.status = Status::Skipped;
    r.evidence = {{"reason", "heavy check; pass --heavy"}};
    return r;
  }
  Recorder rec;
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.run(rec);
  } catch (const std::exception& e) {
    rec.fail(std::string("exception: ") + e.what());
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.status = rec.passed() ? Status::Pass : Status::Fail;
  r.evidence = rec.evidence();
  r.claims = rec.claims();
  r.identities = rec.identities();
  return r;
}

std::vector<CheckReport> run_checks(const RunOptions& opts) {
  std::vector<const CheckSpec*> chosen;
  for (const auto& c : catalog())
    if (opts.filter.empty() || fnmatch(opts.filter.c_str(), c.id.c_str(), 0) == 0) chosen.push_back(&c);
  if (chosen.empty() && opts.filter.find_first_of("*?[") == std::string::npos)
    throw Error(ErrorCode::UnknownCheck, opts.filter);

  std::vector<CheckReport> out(chosen.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < chosen.size();) out[i] = run_check(*chosen[i], opts.heavy);
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < std::max(opts.jobs, 1); ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
  return out;
}

int exit_code(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == Status::Fail; })
             ? 1
             : 0;
}

json reports_json(const std::vector<CheckReport>& reports, bool with_timing) {
  json checks = json::array();
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    checks.push_back(report_json(r, with_timing));
    (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : skipped)++;
  }
  return {{"checks", checks}, {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
}

std::string markdown_digest(const std::vector<CheckReport>& reports) {
  std::ostringstream md;
  const json j = reports_json(reports);
  md << "# Verification digest\n\n"
     << j["summary"]["pass"] << " passed, " << j["summary"]["fail"] << " failed, " << j["summary"]["skipped"]
     << " skipped.\n\n| id | anchor | status | claims | identities | ms |\n|---|---|---|---|---|---|\n";
  for (const auto& r : reports)
    md << "| " << r.id << " | " << r.anchor << " | " << status_name(r.status) << " | " << r.claims << " | "
       << r.identities << " | " << static_cast<long long>(r.ms) << " |\n";
  bool header = false;
  for (const auto& r : reports) {
    if (r.status != Status::Fail) continue;
    if (!header) md << "\n## Failures\n";
    header = true;
    md << "\n### " << r.id << "\n";
    for (const auto& c : r.evidence.value("claims", json::array()))
      if (!c.value("ok", true)) md << "- " << c.value("claim", "") << "\n";
  }
  return md.str();
}

std::vector<std::string> reverify_report(const json& report) {
  std::vector<std::string> problems;
  for (const auto& c : report.at("checks")) {
    if (c.at("status") != "pass") continue;
    for (const auto& w : c.at("evidence").value("witnesses", json::array()))
      if (auto why = reverify_witness(w)) problems.push_back(c.at("id").get<std::string>() + ": " + *why);
  }
  return problems;
}

namespace {

const CheckSpec& find(const std::string& id) {
  for (const auto& c : catalog())
    if (c.id == id) return c;
  throw Error(ErrorCode::UnknownCheck, id);
}

CheckReport merged(const std::string& id, const std::string& anchor, const std::vector<std::string>& parts) {
  CheckReport r{id, anchor, Status::Pass, {{"parts", json::object()}}};
  for (const auto& p : parts) {
    const CheckReport one = run_check(find(p), false);
    if (one.status != Status::Pass) r.status = Status::Fail;
    r.evidence["parts"][p] = one.evidence;
    r.ms += one.ms;
    r.claims += one.claims;
    r.identities += one.identities;
  }
  return r;
}

}  // namespace

CheckReport norm_vanishing_suite() {
  return merged("S-norm-vanishing", "lemma-jordan",
                {"C-lemma-jordan-ii", "C-lemma-jordan-iii", "C-lemma-jordan-vii", "C-lemma-jordan-viii",
                 "C-lemma-jordan-ix", "C-lemma-jordan-x", "C-lemma-jordan-xi", "C-lemma-jordan-xii",
                 "C-lemma-other-xi", "C-restriction-kills-negligible"});
}

CheckReport jordan_block_ingredients() { return run_check(find("C-lemma-jordan-block"), false); }

CheckReport section5_suite() {
  return merged("S-restriction", "restrict-k-bigger-f2",
                {"C-restrict-k-bigger-f2", "C-restriction-kills-negligible"});
}

}  // namespace lol::verify
