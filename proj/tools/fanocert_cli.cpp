// fanocert: certificate-emitting front end.
//   families --dim M --out report.json
//   certify  --family family.json --samples S --seed N --prime P --out report.json
//   lemmas   --graphs-max-n N --degrees-max-m M --out report.json
// Exit codes: 0 pass, 1 fail, 2 usage error, 3 undecided.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "fanocert/reports.hpp"
#include "fanocert/version.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

void write_report(const fanocert::Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

int cmd_families(int dim, const std::string& out_path) {
  write_report(fanocert::families_report_json(dim), out_path);
  return kExitPass;
}

int cmd_certify(const std::string& family_path, const fanocert::CertifyOptions& opts,
                const std::string& out_path) {
  std::ifstream in(family_path);
  if (!in) {
    std::cerr << "fanocert: cannot open family file: " << family_path << "\n";
    return kExitUsage;
  }
  fanocert::Json input = fanocert::Json::parse(in);

  fanocert::CertificateReport report;
  if (fanocert::json_is_instance(input)) {
    report = fanocert::run_certify_instance(fanocert::instance_file_from_json(input), opts);
  } else {
    report = fanocert::run_certify_descriptor(fanocert::descriptor_from_json(input), opts);
  }
  write_report(fanocert::certificate_to_json(report), out_path);
  if (report.failed) return kExitFail;
  if (report.undecided) return kExitUndecided;
  return report.pass ? kExitPass : kExitFail;
}

int cmd_lemmas(const fanocert::LemmaSuiteOptions& opts, const std::string& out_path) {
  const fanocert::LemmaSuiteReport report = fanocert::run_lemma_suite(opts);
  write_report(fanocert::lemma_suite_report_to_json(report), out_path);
  return report.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certification toolkit for iterated Fano double covers"};
  app.set_version_flag("--version", fanocert::kToolkitVersion);
  app.require_subcommand(1);

  // families
  auto* families = app.add_subcommand("families", "Enumerate admissible families for one dimension");
  int dim = 0;
  std::string families_out;
  families->add_option("--dim", dim, "Dimension M of the families")->required()->check(CLI::Range(4, 32));
  families->add_option("--out", families_out, "Output report path (default stdout)");

  // certify
  auto* certify = app.add_subcommand("certify", "Certify a family descriptor or instance file");
  std::string family_path, certify_out;
  fanocert::CertifyOptions copts;
  certify->add_option("--family", family_path, "Family descriptor or instance JSON")->required();
  certify->add_option("--samples", copts.samples, "Sampled points per class")->check(CLI::Range(0, 1000));
  certify->add_option("--seed", copts.seed, "Base seed for sampling");
  certify->add_option("--prime", copts.prime, "Odd prime modulus for the regularity checks");
  certify->add_option("--pair-cap", copts.regularity.groebner.pair_cap,
                      "Groebner pair budget before the slice fallback");
  certify->add_option("--slice-trials", copts.regularity.slice_trials,
                      "Trials for the Monte-Carlo slice fallback (0 = report undecided)");
  certify->add_option("--out", certify_out, "Output report path (default stdout)");

  // lemmas
  auto* lemmas = app.add_subcommand("lemmas", "Run the exhaustive lemma verification suite");
  fanocert::LemmaSuiteOptions lopts;
  std::string lemmas_out;
  lemmas->add_option("--graphs-max-n", lopts.graphs_max_n, "Largest surface-graph vertex count")
      ->check(CLI::Range(1, 12));
  lemmas->add_option("--degrees-max-m", lopts.degrees_max_m, "Largest M for the degree analyses")
      ->check(CLI::Range(4, 40));
  lemmas->add_option("--degree-sum-max-m", lopts.degree_sum_max_m, "Largest M for the degree-sum inequality sweep")
      ->check(CLI::Range(4, 200));
  lemmas->add_option("--counting-max", lopts.counting_max, "Range bound for the counting inequality")
      ->check(CLI::Range(1, 1000));
  lemmas->add_flag("--corrupt-self-test", lopts.corrupt_self_test,
                   "Deliberately tighten one inequality to exercise counterexample reporting");
  lemmas->add_option("--out", lemmas_out, "Output report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kExitPass;  // --help / --version
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (families->parsed()) return cmd_families(dim, families_out);
    if (certify->parsed()) return cmd_certify(family_path, copts, certify_out);
    if (lemmas->parsed()) return cmd_lemmas(lopts, lemmas_out);
  } catch (const std::exception& e) {
    std::cerr << "fanocert: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
