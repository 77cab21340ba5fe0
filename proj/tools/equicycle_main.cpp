// Command-line front end: construct certificates, verify them, and inspect
// the difference ledger of rotational certificates.
//
// Exit codes are part of the contract:
//   0  success / verification PASS
//   1  verification FAIL
//   2  usage or parse problem (bad flags, malformed certificate, bad (l, v))
//   3  search budget exhausted before a verified result existed

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "equicycle/assembly.hpp"
#include "equicycle/certificate.hpp"
#include "equicycle/differences.hpp"
#include "equicycle/errors.hpp"
#include "equicycle/verifier.hpp"

namespace {

using namespace equicycle;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parameter_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CycleSystem load_certificate(const std::string& path) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return from_json(text);
  return from_text(text);
}

int run_construct(long ell, long v, std::uint64_t seed,
                  const std::string& out_path, const std::string& format) {
  CycleSystem system = construct(ell, v, seed);
  std::string payload =
      format == "structured" ? to_json(system) : to_text(system);
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw parameter_error("cannot write " + out_path);
    out << payload;
  }
  auto [red, blue] = system.colouring.class_sizes();
  std::cerr << "constructed ell=" << ell << " v=" << v << " route="
            << system.provenance.route << " cycles=" << system.cycles.size()
            << " red=" << red << " blue=" << blue << "\n";
  return 0;
}

int run_verify(const std::string& path, const std::string& format) {
  CycleSystem system = load_certificate(path);
  Expectations want;
  if (system.ell > 0 && system.graph.edge_count() % system.ell == 0)
    want.cycle_count = system.graph.edge_count() / system.ell;
  Verdict verdict = verify(system, want);
  if (format == "structured") {
    nlohmann::json j;
    j["pass"] = verdict.pass;
    j["checks"] = nlohmann::json::array();
    for (const CheckResult& check : verdict.checks) {
      nlohmann::json entry;
      entry["name"] = check.name;
      entry["pass"] = check.pass;
      entry["witness"] = check.witness;
      j["checks"].push_back(entry);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const CheckResult& check : verdict.checks) {
      std::cout << "check " << check.name << " "
                << (check.pass ? "PASS" : "FAIL");
      if (!check.witness.empty()) std::cout << " " << check.witness;
      std::cout << "\n";
    }
    std::cout << "verdict " << (verdict.pass ? "PASS" : "FAIL") << "\n";
  }
  return verdict.pass ? 0 : 1;
}

int run_inspect(const std::string& path, bool with_differences) {
  CycleSystem system = load_certificate(path);
  if (system.graph.kind() != GraphSpec::Kind::CompleteRotational ||
      system.provenance.base_cycles.empty())
    throw parameter_error(
        "inspect needs a rotational certificate with base lines");
  const long n = system.graph.modulus();

  if (with_differences) {
    for (const auto& [name, base] : system.provenance.base_cycles) {
      DifferenceMultiset diffs = differences(base, n);
      std::cout << "base " << name << ":";
      for (const auto& [cls, count] : diffs.counts) {
        std::cout << " " << cls.str();
        if (count > 1) std::cout << " x" << count;
      }
      if (diffs.infinity_incidences)
        std::cout << " inf x" << diffs.infinity_incidences;
      std::cout << "\n";
    }
  }

  CoverageReport report = audit_coverage(system.provenance.base_cycles, n,
                                         system.graph.with_infinity());
  for (const CoverageEntry& entry : report.entries) {
    std::cout << entry.cls.str() << "  ";
    switch (entry.status) {
      case CoverageEntry::Status::Ok: std::cout << "ok"; break;
      case CoverageEntry::Status::Missing: std::cout << "MISSING"; break;
      case CoverageEntry::Status::Duplicate: std::cout << "DUPLICATE"; break;
    }
    std::cout << "  <-";
    for (const std::string& name : entry.suppliers) std::cout << " " << name;
    std::cout << "\n";
  }
  if (system.graph.with_infinity()) {
    std::cout << "inf  " << (report.infinity_ok ? "ok" : "BAD") << "  <-";
    for (const std::string& name : report.infinity_suppliers)
      std::cout << " " << name;
    std::cout << "\n";
  }
  std::cout << "audit " << (report.pass ? "PASS" : "FAIL") << "\n";
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equitably 2-colourable odd cycle decompositions of K_v"};
  app.require_subcommand(1);

  long ell = 0, v = 0;
  std::uint64_t seed = 1;
  std::string out_path, cert_path, format = "text";
  bool with_differences = false;

  CLI::App* construct_cmd =
      app.add_subcommand("construct", "build a coloured decomposition");
  construct_cmd->add_option("--ell", ell, "cycle length (odd, >= 7)")
      ->required();
  construct_cmd->add_option("--v", v, "order of the complete graph")
      ->required();
  construct_cmd->add_option("--seed", seed, "seed for the searched pieces");
  construct_cmd->add_option("--out", out_path,
                            "write the certificate here instead of stdout");
  construct_cmd->add_option("--format", format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check a certificate against its host");
  verify_cmd->add_option("certificate", cert_path, "certificate file")
      ->required();
  verify_cmd->add_option("--format", format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  CLI::App* inspect_cmd = app.add_subcommand(
      "inspect", "print the difference ledger of a rotational certificate");
  inspect_cmd->add_option("certificate", cert_path, "certificate file")
      ->required();
  inspect_cmd->add_flag("--differences", with_differences,
                        "also print each base cycle's difference multiset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (construct_cmd->parsed())
      return run_construct(ell, v, seed, out_path, format);
    if (verify_cmd->parsed()) return run_verify(cert_path, format);
    return run_inspect(cert_path, with_differences);
  } catch (const ParseError& e) {
    std::cerr << "certificate error: " << e.what() << "\n";
    return 2;
  } catch (const parameter_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const search_budget_error& e) {
    std::cerr << "search budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
