// Certificate assembly: family enumeration reports, per-descriptor bound
// reports, the exhaustive lemma suite, and the full certification run that
// the CLI fronts.  Reports are plain data plus a byte-stable JSON form.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanocert/bounds.hpp"
#include "fanocert/json_io.hpp"
#include "fanocert/regularity.hpp"

namespace fanocert {

struct BoundReport {
  FamilyDescriptor desc;
  Integer deg_v;
  Rational class0_lambda_value;
  Rational class0_final;   // the correct-subvariety branch
  Rational class0_effective;  // max against the 4/deg V branch of the dichotomy
  Rational threshold;                           // 4 / deg V
  std::vector<std::pair<int, Rational>> class_e;  // (e, value) for e = 1..m
  bool pass = false;
};

BoundReport make_bound_report(const FamilyDescriptor& desc);
Json bound_report_to_json(const BoundReport& report);

struct LemmaSuiteOptions {
  int graphs_max_n = 8;
  int counting_max = 100;
  int degrees_max_m = 30;
  int degree_sum_max_m = 60;
  int tuple_max_len = 5;
  int tuple_max_entry = 8;
  // Test hook: deliberately tightens one inequality so the counterexample
  // reporting path can be exercised.
  bool corrupt_self_test = false;
};

struct LemmaSuiteReport {
  LemmaSuiteOptions options;
  long graphs_checked = 0;
  long square_bound_violations = 0;
  long tail_bound_violations = 0;
  long square_bound_equality_count = 0;
  bool equality_includes_single_vertex = false;
  long counting_checked = 0;
  long counting_violations = 0;
  bool counting_symbolic_ok = false;
  long class1_codim_checked = 0;
  long class1_codim_violations = 0;
  long class0_codim_checked = 0;
  long class0_codim_violations = 0;
  long degree_tuple_inequalityed = 0;
  long tuple_inequality_violations = 0;
  long degree_sum_checked = 0;
  long degree_sum_violations = 0;
  std::vector<std::string> counterexamples;
  bool pass = false;
};

LemmaSuiteReport run_lemma_suite(const LemmaSuiteOptions& opts = {});
Json lemma_suite_report_to_json(const LemmaSuiteReport& report);

Json regularity_report_to_json(const RegularityReport& report);

struct CertifyOptions {
  int samples = 2;          // per class
  std::uint64_t seed = 1;
  std::uint64_t prime = kDefaultPrime;
  RegularityOptions regularity;
  SampleOptions sampling;
  // The certificate embeds a compact lemma-suite run; these bounds keep it
  // quick relative to the full `lemmas` command.
  LemmaSuiteOptions lemma_suite{.graphs_max_n = 6, .counting_max = 40, .degrees_max_m = 12,
                                .degree_sum_max_m = 20};
};

struct CertificateReport {
  FamilyDescriptor desc;
  ValidationResult admissibility;
  Integer deg_v;
  bool index_ok = false;
  std::optional<BoundReport> bounds;
  std::vector<RegularityReport> regularity;
  LemmaSuiteReport lemmas;
  std::vector<std::string> assumptions;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  int samples_per_class = 0;
  bool bounds_only = false;  // no regularity sampling requested
  bool undecided = false;    // some point could not be decided
  bool failed = false;       // something failed outright (stronger than undecided)
  bool pass = false;
};

// Certification of a descriptor: bounds, seeded per-class regularity
// sampling, and the embedded lemma suite.
CertificateReport run_certify_descriptor(const FamilyDescriptor& desc, const CertifyOptions& opts);

// Certification of a concrete instance at the points listed in its file.
CertificateReport run_certify_instance(const InstanceFileFp& file, const CertifyOptions& opts);

Json certificate_to_json(const CertificateReport& report);

// Descriptor stubs for one dimension: admissibility, deg V, index check.
Json families_report_json(int M);

}  // namespace fanocert
