// Command-line front end: run the check catalog and answer single queries.

#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "lol/canonical.hpp"
#include "lol/group.hpp"
#include "lol/textio.hpp"
#include "lol/verify.hpp"

using namespace lol;
using verify::json;

namespace {

constexpr int kConfigError = 2;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ConfigError, "cannot write " + path);
  out << text;
}

Mat read_square(const Ring& r, const std::string& text, int n) {
  Mat m = parse_mat(r, text);
  if (m.rows() != m.cols() || (n > 0 && m.rows() != n))
    throw Error(ErrorCode::ConfigError, "matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  return m;
}

json jordan_json(const Mat& a) {
  const auto d = similarity_data(a);
  const auto c = canonical_form(a);
  json blocks = json::array();
  for (const auto& b : c.blocks) blocks.push_back({{"eigenvalue", b.eigenvalue}, {"size", b.size}});
  json inv = json::array();
  for (const auto& f : d.invariant_factors) inv.push_back(f.to_string());
  return {{"charpoly", d.charpoly.to_string()},
          {"minpoly", d.minpoly.to_string()},
          {"invariant_factors", inv},
          {"diagonalizable", d.diagonalizable},
          {"form", c.kind == FormKind::Jordan ? "jordan" : "frobenius"},
          {"blocks", blocks},
          {"canonical", format_mat(c.form)},
          {"conjugator", format_mat(c.conjugator)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for Witt-vector lifting obstructions of GL5(F2) stabilizers"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run the check catalog");
  std::string filter, json_path, md_path;
  bool heavy = false;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  run->add_option("--filter", filter, "glob on check ids");
  run->add_flag("--heavy", heavy, "include heavy checks");
  run->add_option("--json", json_path, "write the JSON report here");
  run->add_option("--md", md_path, "write the markdown digest here");
  run->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("list", "list check ids");

  auto* reverify = app.add_subcommand("reverify", "re-substitute every witness of a saved JSON report");
  std::string report_path;
  reverify->add_option("report", report_path)->required()->check(CLI::ExistingFile);

  auto* obstruct = app.add_subcommand("obstruct", "decide whether a bicyclic lifting obstruction vanishes");
  std::string field_spec = "2^1", rho_text, mu_text, variant = "glift";
  int n = 0;
  obstruct->add_option("--field", field_spec)->required();
  obstruct->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  obstruct->add_option("--variant", variant)->check(CLI::IsMember({"glift", "blift"}));
  obstruct->add_option("--rho", rho_text)->required();
  obstruct->add_option("--mu", mu_text)->required();

  std::string matrix_text;
  auto* centralizer = app.add_subcommand("centralizer", "stabilizer of a matrix under conjugation");
  centralizer->add_option("--field", field_spec)->required();
  centralizer->add_option("--matrix", matrix_text)->required();

  auto* jordan = app.add_subcommand("jordan", "similarity invariants and canonical form");
  jordan->add_option("--field", field_spec)->required();
  jordan->add_option("--matrix", matrix_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    max_group_order();  // rejects a malformed LOL_MAX_GROUP up front

    if (*run) {
      const auto reports = verify::run_checks({filter, heavy, jobs});
      const json j = verify::reports_json(reports);
      if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
      if (!md_path.empty()) write_file(md_path, verify::markdown_digest(reports));
      for (const auto& r : reports)
        std::cout << verify::status_name(r.status) << "  " << r.id << "  (" << static_cast<long long>(r.ms)
                  << " ms)\n";
      std::cout << j["summary"].dump() << "\n";
      return verify::exit_code(reports);
    }
    if (*list) {
      for (const auto& c : verify::catalog())
        std::cout << c.id << "\t" << c.anchor << (c.heavy ? "\theavy" : "") << "\t" << c.summary << "\n";
      return 0;
    }
    if (*reverify) {
      std::ifstream in(report_path);
      const auto problems = verify::reverify_report(json::parse(in));
      for (const auto& p : problems) std::cout << p << "\n";
      std::cout << (problems.empty() ? "all witnesses hold\n" : "");
      return problems.empty() ? 0 : 1;
    }

    const Ring ring = Ring::fq(Field::parse(field_spec));
    if (*obstruct) {
      const auto z = BicyclicSpec::make(read_square(ring, rho_text, n), read_square(ring, mu_text, n));
      const Variant v = variant == "blift" ? Variant::BLift : Variant::GLift;
      const auto triple = glift_triple(z, v);
      const auto r = bicyclic_split(z, triple, v);
      json out = {{"cocycle_valid", r.cocycle_valid}, {"splits", r.splits}};
      if (r.splits && r.u && r.v) out["witness"] = {{"u", format_mat(*r.u)}, {"v", format_mat(*r.v)}};
      if (!r.splits) out["certificate_terms"] = r.certificate.size();
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    const Mat a = read_square(ring, matrix_text, 0);
    if (*centralizer) {
      const Subgroup g = centralizer_of_matrix(a);
      json gens = json::array();
      for (const auto& x : g.generators()) gens.push_back(format_mat(x));
      std::cout << json{{"order", g.order()}, {"generators", gens}}.dump(2) << "\n";
      return 0;
    }
    std::cout << jordan_json(a).dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    const bool config = e.code() == ErrorCode::ConfigError || e.code() == ErrorCode::UnknownCheck ||
                        e.code() == ErrorCode::ParseError || e.code() == ErrorCode::DimensionMismatch;
    return config ? kConfigError : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kConfigError;
  }
}
