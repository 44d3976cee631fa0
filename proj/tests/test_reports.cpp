#include <doctest.h>

#include "fanocert/reports.hpp"
#include "test_util.hpp"

using namespace fanocert;

namespace {

FamilyDescriptor make_desc(int M, int k, std::vector<int> d, int m, std::vector<int> l) {
  FamilyDescriptor desc;
  desc.M = M;
  desc.k = k;
  desc.d = std::move(d);
  desc.m = m;
  desc.l = std::move(l);
  return desc;
}

LemmaSuiteOptions quick_lemmas() {
  LemmaSuiteOptions opts;
  opts.graphs_max_n = 4;
  opts.counting_max = 10;
  opts.degrees_max_m = 6;
  opts.degree_sum_max_m = 8;
  opts.tuple_max_len = 3;
  opts.tuple_max_entry = 5;
  return opts;
}

CertifyOptions quick_certify(int samples, std::uint64_t seed) {
  CertifyOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  opts.lemma_suite = quick_lemmas();
  return opts;
}

}  // namespace

TEST_SUITE_BEGIN("reports");

TEST_CASE("bound report") {
  const auto report = make_bound_report(make_desc(5, 1, {3}, 1, {3}));
  CHECK(report.deg_v == 6);
  CHECK(report.class0_final == make_rational(3, 5));
  CHECK(report.threshold == make_rational(2, 3));
  REQUIRE(report.class_e.size() == 1);
  CHECK(report.class_e[0].second == make_rational(2, 3));
  CHECK(report.pass);

  const Json j = bound_report_to_json(report);
  CHECK(j["degV"] == "6");
  CHECK(j["class0_final"] == "3/5");
  CHECK(j["classE"][0]["value"] == "2/3");
  CHECK(j["pass"] == true);
}

TEST_CASE("lemma suite") {
  const auto report = run_lemma_suite(quick_lemmas());
  CHECK(report.pass);
  CHECK(report.graphs_checked == 1 + 1 + 2 + 5);
  CHECK(report.square_bound_violations == 0);
  CHECK(report.counting_symbolic_ok);
  CHECK(report.equality_includes_single_vertex);
  CHECK(report.counterexamples.empty());

  auto corrupted = quick_lemmas();
  corrupted.corrupt_self_test = true;
  const auto bad = run_lemma_suite(corrupted);
  CHECK(!bad.pass);
  CHECK(bad.square_bound_violations > 0);
  CHECK(!bad.counterexamples.empty());
}

TEST_CASE("families report") {
  const Json m4 = families_report_json(4);
  CHECK(m4["count"] == 2);
  CHECK(m4["families"][0]["degV"] == "4");
  CHECK(m4["families"][0]["index_check"] == true);

  const Json m5 = families_report_json(5);
  CHECK(m5["count"] == 6);
}

TEST_CASE("certificates are byte-identical across runs") {
  const auto desc = make_desc(4, 1, {2}, 1, {3});
  const auto opts = quick_certify(1, 99);
  const auto a = run_certify_descriptor(desc, opts);
  const auto b = run_certify_descriptor(desc, opts);
  CHECK(certificate_to_json(a).dump(2) == certificate_to_json(b).dump(2));
  CHECK(a.pass);
  CHECK(!a.undecided);
  REQUIRE(a.regularity.size() == 2);  // one sample for each class 0, 1

  // A different seed changes the samples but stays a valid report.
  const auto c = run_certify_descriptor(desc, quick_certify(1, 100));
  CHECK(c.pass);
}

TEST_CASE("adding samples never perturbs earlier ones") {
  const auto desc = make_desc(4, 1, {2}, 1, {3});
  const auto one = run_certify_descriptor(desc, quick_certify(1, 7));
  const auto two = run_certify_descriptor(desc, quick_certify(2, 7));
  REQUIRE(one.regularity.size() == 2);   // classes 0 and 1, one point each
  REQUIRE(two.regularity.size() == 4);
  // Sample 0 of each class is identical in both runs.
  CHECK(regularity_report_to_json(one.regularity[0]) == regularity_report_to_json(two.regularity[0]));
  CHECK(regularity_report_to_json(one.regularity[1]) == regularity_report_to_json(two.regularity[2]));
}

TEST_CASE("bounds-only certificate") {
  const auto report = run_certify_descriptor(make_desc(5, 1, {3}, 1, {3}), quick_certify(0, 1));
  CHECK(report.bounds_only);
  CHECK(report.regularity.empty());
  CHECK(report.pass);
  const Json j = certificate_to_json(report);
  CHECK(j["contingent"] == true);
  CHECK(j["bounds"]["class0_final"] == "3/5");
  CHECK(j["schema_version"] == "1");
}

TEST_CASE("inadmissible descriptor certificate") {
  const auto report = run_certify_descriptor(make_desc(4, 1, {2}, 1, {2}), quick_certify(0, 1));
  CHECK(!report.admissibility.ok);
  CHECK(!report.pass);
  const Json j = certificate_to_json(report);
  CHECK(j["admissible"] == false);
  CHECK(j["bounds"].is_null());
}

TEST_CASE("instance certification flags the failing point") {
  // A planted-degenerate instance travels through JSON and fails with the
  // bad point identified.
  const std::uint64_t p = kDefaultPrime;
  const auto desc = make_desc(5, 1, {3}, 1, {3});
  const int n = desc.ambient_vars();

  FamilyInstance<Fp> inst;
  inst.desc = desc;
  SplitMix64 rng(9);
  CoefficientSampler<Fp> sampler;
  sampler.p = p;
  // Same construction as the regularity suite: q_{1,2} and h_{1,4} share z1.
  {
    Polynomial<Fp> f(n);
    Exponents e1(static_cast<std::size_t>(n), 0);
    e1[0] = 2;
    e1[6] = 1;
    f.add_term(e1, Fp{1, p});
    Exponents e2(static_cast<std::size_t>(n), 0);
    e2[0] = 1;
    e2[1] = 1;
    e2[2] = 1;
    f.add_term(e2, Fp{1, p});
    auto c3 = random_homogeneous<Fp>(n - 1, 3, rng, sampler);
    for (const auto& [e, c] : c3.terms()) {
      Exponents lifted(static_cast<std::size_t>(n), 0);
      for (std::size_t i = 0; i < e.size(); ++i) lifted[i + 1] = e[i];
      f.add_term(lifted, c);
    }
    inst.f.push_back(std::move(f));
  }
  {
    Polynomial<Fp> g(n);
    Exponents e0(static_cast<std::size_t>(n), 0);
    e0[0] = 6;
    g.add_term(e0, Fp{1, p});
    Exponents e4(static_cast<std::size_t>(n), 0);
    e4[0] = 2;
    e4[1] = 2;
    e4[2] = 2;
    g.add_term(e4, Fp{1, p});
    for (int j = 5; j <= 6; ++j) {
      auto w = random_homogeneous<Fp>(n - 1, static_cast<unsigned>(j), rng, sampler);
      for (const auto& [e, c] : w.terms()) {
        Exponents lifted(static_cast<std::size_t>(n), 0);
        lifted[0] = static_cast<std::uint32_t>(6 - j);
        for (std::size_t i = 0; i < e.size(); ++i) lifted[i + 1] = e[i];
        g.add_term(lifted, c);
      }
    }
    inst.g.push_back(std::move(g));
  }

  InstanceFileFp file;
  file.instance = inst;
  file.prime = p;
  file.points.push_back(std::vector<Fp>(static_cast<std::size_t>(n), Fp{0, p}));
  file.points[0][0] = Fp{1, p};

  // Round trip through the wire format first.
  const auto parsed = instance_file_from_json(instance_file_to_json(file));
  auto opts = quick_certify(0, 5);
  const auto report = run_certify_instance(parsed, opts);
  CHECK(!report.pass);
  REQUIRE(report.regularity.size() == 1);
  CHECK(report.regularity[0].status == RegularityStatus::Fail);
  CHECK(report.regularity[0].point[0] == "1");  // the failing point is in the report

  const Json j = certificate_to_json(report);
  CHECK(j["pass"] == false);
  CHECK(j["regularity"][0]["pass"] == false);
}

TEST_SUITE_END();
