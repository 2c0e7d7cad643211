// rh3: scan quadratic-field pairs, build cube-norm Kummer candidates, verify
// stored tables, and emit class-group oracle scripts.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rh3/pipeline.hpp"

namespace {

// Canonical-candidate check used by `verify`: rerun the selection with the
// record's own class-group data as the structure filter and demand it lands on
// the stored (a, b). Records whose candidate sits outside the box are exempt.
bool reselects_stored_candidate(const rh3::ScanRecord& rec, const rh3::FixtureSet& fixtures,
                                long long a_max, long long b_max, std::string* why) {
  if (!rec.candidate || !rec.class_group) return true;
  if (rec.candidate->a > a_max || rec.candidate->b > b_max) return true;
  rh3::StructureFilter filter{rec.class_group->valuation3()};
  std::string note;
  auto sel = rh3::select_candidate(rec.d, a_max, b_max, &fixtures, filter, &note);
  if (sel && *sel == *rec.candidate) return true;
  if (why) {
    std::ostringstream os;
    os << "selection with the stored class data does not return (a,b)=(" << rec.candidate->a
       << "," << rec.candidate->b << ")";
    if (sel) os << "; it returns (" << sel->a << "," << sel->b << ")";
    if (!note.empty()) os << "; " << note;
    *why = os.str();
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadratic-pair sieve, cube-norm Kummer builder, and table verifier"};
  app.require_subcommand(1);

  long long from = 0, to = 0;
  long long a_max = 1000, b_max = 100;
  long long d_arg = 0;
  std::string fixtures_path, out_path, in_path;

  CLI::App* scan_cmd = app.add_subcommand("scan", "sieve a d range and report candidates");
  scan_cmd->add_option("--from", from, "lower end of the d range")->required();
  scan_cmd->add_option("--to", to, "upper end of the d range (inclusive)")->required();
  scan_cmd->add_option("--a-max", a_max, "candidate box bound for a")->capture_default_str();
  scan_cmd->add_option("--b-max", b_max, "candidate box bound for b")->capture_default_str();
  scan_cmd->add_option("--fixtures", fixtures_path,
                       "fixture table supplying class groups for known candidates");

  CLI::App* verify_cmd = app.add_subcommand("verify", "recompute and check a fixture table");
  verify_cmd->add_option("--fixtures", fixtures_path, "fixture table to verify")->required();
  verify_cmd->add_option("--a-max", a_max, "candidate box bound for a")->capture_default_str();
  verify_cmd->add_option("--b-max", b_max, "candidate box bound for b")->capture_default_str();

  CLI::App* emit_cmd =
      app.add_subcommand("emit-oracle", "write a class-group oracle script for one d");
  emit_cmd->add_option("--d", d_arg, "the d of the record")->required();
  emit_cmd->add_option("--out", out_path, "output script path")->required();
  emit_cmd->add_option("--a-max", a_max, "candidate box bound for a")->capture_default_str();
  emit_cmd->add_option("--b-max", b_max, "candidate box bound for b")->capture_default_str();
  emit_cmd->add_option("--fixtures", fixtures_path,
                       "fixture table; when given, selection prefers candidates with class data");

  CLI::App* report_cmd = app.add_subcommand("report", "reformat stored records as a report");
  report_cmd->add_option("--in", in_path, "record file (report or fixture layout)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*scan_cmd) {
      std::optional<rh3::FixtureSet> fixtures;
      if (!fixtures_path.empty()) fixtures = rh3::load_fixtures(fixtures_path);
      auto records =
          rh3::scan(from, to, a_max, b_max, fixtures ? &*fixtures : nullptr);
      std::cout << rh3::format_report(records);
      return 0;
    }

    if (*verify_cmd) {
      rh3::FixtureSet fixtures = rh3::load_fixtures(fixtures_path);
      std::vector<long long> failing;
      for (const auto& rec : fixtures.records) {
        rh3::VerificationReport rep = rh3::verify_fixture(rec);
        std::string why;
        bool canonical = reselects_stored_candidate(rec, fixtures, a_max, b_max, &why);
        bool ok = rep.pass() && canonical;
        std::cout << "d=" << rec.d << ": " << (ok ? "pass" : "FAIL");
        if (rep.n) std::cout << "  n=" << *rep.n;
        if (rep.r_minus) std::cout << " r-=" << *rep.r_minus;
        if (rep.R_minus) std::cout << " R-=" << *rep.R_minus;
        if (rep.rh) std::cout << " genus-formula=" << (*rep.rh ? "holds" : "fails");
        if (rep.bucket) std::cout << " bucket=" << *rep.bucket;
        if (!rep.in_hypothesis) std::cout << "  [outside hypothesis]";
        std::cout << "\n";
        for (const auto& m : rep.failures) std::cout << "    failure: " << m << "\n";
        if (!canonical) std::cout << "    failure: " << why << "\n";
        for (const auto& m : rep.notes) std::cout << "    note: " << m << "\n";
        if (!ok) failing.push_back(rec.d);
      }
      if (failing.empty()) {
        std::cout << "all " << fixtures.records.size() << " records verified\n";
        return 0;
      }
      std::cout << "failing d:";
      for (long long d : failing) std::cout << " " << d;
      std::cout << "\n";
      return 1;
    }

    if (*emit_cmd) {
      std::optional<rh3::FixtureSet> fixtures;
      if (!fixtures_path.empty()) fixtures = rh3::load_fixtures(fixtures_path);
      // A stored record with a polynomial wins over a fresh scan: fixture rows may
      // sit outside the sieve the scan applies.
      if (fixtures) {
        const rh3::ScanRecord* stored = fixtures->find(d_arg);
        if (stored && stored->P) {
          rh3::emit_oracle_script_file(*stored, out_path);
          std::cout << "wrote " << out_path << "\n";
          return 0;
        }
      }
      std::optional<rh3::StructureFilter> filter;
      if (fixtures && fixtures->find(d_arg) && fixtures->find(d_arg)->class_group)
        filter = rh3::StructureFilter{fixtures->find(d_arg)->class_group->valuation3()};
      auto records = rh3::scan(d_arg, d_arg, a_max, b_max,
                               fixtures ? &*fixtures : nullptr, filter);
      if (records.empty()) {
        std::cerr << "d=" << d_arg << " does not pass the sieve\n";
        return 1;
      }
      if (!records.front().P) {
        std::cerr << "d=" << d_arg << ": no candidate, nothing to emit";
        if (!records.front().note.empty()) std::cerr << " (" << records.front().note << ")";
        std::cerr << "\n";
        return 1;
      }
      rh3::emit_oracle_script_file(records.front(), out_path);
      std::cout << "wrote " << out_path << "\n";
      return 0;
    }

    if (*report_cmd) {
      auto records = rh3::parse_records_file(in_path);
      std::cout << rh3::format_report(records);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
