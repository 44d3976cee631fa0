#include "fanocert/reports.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fanocert/version.hpp"

namespace fanocert {

BoundReport make_bound_report(const FamilyDescriptor& desc) {
  BoundReport report;
  report.desc = desc;
  report.deg_v = degree_of_V(desc);
  report.threshold = Rational(4) / Rational(report.deg_v);
  report.class0_lambda_value = class0_lambda(desc);
  report.class0_final = class0_final_bound(desc);
  // Subvarieties that are not correct at the point fall under the 4/deg V
  // branch directly, so the bound that covers both cases is the larger one.
  report.class0_effective = std::max(report.class0_final, report.threshold);
  bool ok = report.class0_final <= report.threshold;
  for (int e = 1; e <= desc.m; ++e) {
    const Rational value = classE_lambda(desc, e);
    ok = ok && value == report.threshold;
    report.class_e.emplace_back(e, value);
  }
  report.pass = ok;
  return report;
}

Json bound_report_to_json(const BoundReport& report) {
  Json j;
  j["degV"] = report.deg_v.get_str();
  j["class0_lambda"] = to_fraction_string(report.class0_lambda_value);
  j["class0_final"] = to_fraction_string(report.class0_final);
  j["class0_effective"] = to_fraction_string(report.class0_effective);
  j["threshold"] = to_fraction_string(report.threshold);
  Json class_e = Json::array();
  for (const auto& [e, value] : report.class_e) {
    class_e.push_back(Json{{"e", e}, {"value", to_fraction_string(value)}});
  }
  j["classE"] = std::move(class_e);
  j["pass"] = report.pass;
  return j;
}

namespace {

std::vector<FamilyDescriptor> descriptors_up_to(int max_m_dim) {
  std::vector<FamilyDescriptor> out;
  for (int M = 4; M <= max_m_dim; ++M) {
    auto batch = enumerate_descriptors(M);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::string descriptor_brief(const FamilyDescriptor& desc) {
  std::string s = "M=" + std::to_string(desc.M) + " k=" + std::to_string(desc.k) + " d=[";
  for (std::size_t i = 0; i < desc.d.size(); ++i)
    s += (i ? "," : "") + std::to_string(desc.d[i]);
  s += "] l=[";
  for (std::size_t i = 0; i < desc.l.size(); ++i)
    s += (i ? "," : "") + std::to_string(desc.l[i]);
  s += "]";
  return s;
}

// Non-increasing tuples with entries in [2, max_s].
void degree_tuples(int c, int max_s, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == c) {
    visit(cur);
    return;
  }
  const int hi = cur.empty() ? max_s : cur.back();
  for (int s = hi; s >= 2; --s) {
    cur.push_back(s);
    degree_tuples(c, max_s, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

LemmaSuiteReport run_lemma_suite(const LemmaSuiteOptions& opts) {
  LemmaSuiteReport rep;
  rep.options = opts;

  for (int n = 1; n <= opts.graphs_max_n; ++n) {
    for (const auto& g : enumerate_surface_graphs(n)) {
      ++rep.graphs_checked;
      const bool equality = square_bound_equality(g);
      bool square_ok = square_bound_holds(g);
      if (opts.corrupt_self_test && equality) square_ok = false;  // tightened to strict inequality
      if (equality) {
        ++rep.square_bound_equality_count;
        if (n == 1) rep.equality_includes_single_vertex = true;
      }
      if (!square_ok) {
        ++rep.square_bound_violations;
        if (rep.counterexamples.size() < 16)
          rep.counterexamples.push_back("surface graph square bound, N=" + std::to_string(n));
      }
      if (!tail_bound_holds(g)) {
        ++rep.tail_bound_violations;
        if (rep.counterexamples.size() < 16)
          rep.counterexamples.push_back("surface graph tail bound, N=" + std::to_string(n));
      }
    }
  }

  for (long sl = 1; sl <= opts.counting_max; ++sl) {
    for (long su = 0; su <= opts.counting_max; ++su) {
      ++rep.counting_checked;
      if (counting_bound(sl, su, 1) < Rational(4)) {
        ++rep.counting_violations;
        if (rep.counterexamples.size() < 16)
          rep.counterexamples.push_back("counting bound below 4 at Sigma_l=" + std::to_string(sl) +
                                        " Sigma_u=" + std::to_string(su));
      }
    }
  }
  {
    // (2a+b)^2 - 4a(a+b) == b^2 as polynomials.
    using P = Polynomial<Rational>;
    const P a = P::variable(2, 0, Rational(1));
    const P b = P::variable(2, 1, Rational(1));
    const P lhs = (a.scaled(Rational(2)) + b) * (a.scaled(Rational(2)) + b) -
                  (a * (a + b)).scaled(Rational(4));
    rep.counting_symbolic_ok = lhs == b * b;
    if (!rep.counting_symbolic_ok)
      rep.counterexamples.push_back("symbolic identity (2a+b)^2 - 4a(a+b) = b^2 failed");
  }

  for (const auto& desc : descriptors_up_to(opts.degrees_max_m)) {
    if (std::find(desc.l.begin(), desc.l.end(), 2) != desc.l.end()) {
      ++rep.class1_codim_checked;
      if (class1_minimal_branch_codim(desc) < Rational(desc.M)) {
        ++rep.class1_codim_violations;
        if (rep.counterexamples.size() < 16)
          rep.counterexamples.push_back("beta below M for " + descriptor_brief(desc));
      }
    }
    for (int s = 0; s < desc.m; ++s) {
      ++rep.class0_codim_checked;
      if (class0_codim_bound(desc, s) < Rational(desc.M + 1)) {
        ++rep.class0_codim_violations;
        if (rep.counterexamples.size() < 16)
          rep.counterexamples.push_back("class-0 beta below M+1 for " + descriptor_brief(desc));
      }
    }
  }

  {
    std::vector<int> cur;
    for (int c = 1; c <= opts.tuple_max_len; ++c) {
      degree_tuples(c, opts.tuple_max_entry, cur, [&](const std::vector<int>& s) {
        ++rep.degree_tuple_inequalityed;
        if (!degree_tuple_inequality(TupleInequality::FiveTimesSum, s) || !degree_tuple_inequality(TupleInequality::MeanSquare, s)) {
          ++rep.tuple_inequality_violations;
          if (rep.counterexamples.size() < 16)
            rep.counterexamples.push_back("degree-tuple inequality failed, c=" + std::to_string(c));
        }
      });
    }
  }

  for (int M = 4; M <= opts.degree_sum_max_m; ++M) {
    for (int k = 1; 2 * k <= M - 1; ++k) {
      ++rep.degree_sum_checked;
      if (!degree_sum_inequality_check(M, k)) {
        ++rep.degree_sum_violations;
        if (rep.counterexamples.size() < 16)
          rep.counterexamples.push_back("epsilon/zeta check failed at M=" + std::to_string(M) +
                                        " k=" + std::to_string(k));
      }
    }
  }

  rep.pass = rep.square_bound_violations == 0 && rep.tail_bound_violations == 0 &&
             rep.counting_violations == 0 && rep.counting_symbolic_ok &&
             rep.class1_codim_violations == 0 && rep.class0_codim_violations == 0 &&
             rep.tuple_inequality_violations == 0 && rep.degree_sum_violations == 0 &&
             rep.equality_includes_single_vertex;
  return rep;
}

Json lemma_suite_report_to_json(const LemmaSuiteReport& rep) {
  Json j;
  j["graphs_max_n"] = rep.options.graphs_max_n;
  j["graphs_checked"] = rep.graphs_checked;
  j["square_bound_violations"] = rep.square_bound_violations;
  j["tail_bound_violations"] = rep.tail_bound_violations;
  j["square_bound_equality_count"] = rep.square_bound_equality_count;
  j["equality_includes_single_vertex"] = rep.equality_includes_single_vertex;
  j["counting_checked"] = rep.counting_checked;
  j["counting_violations"] = rep.counting_violations;
  j["counting_symbolic_ok"] = rep.counting_symbolic_ok;
  j["class1_codim_checked"] = rep.class1_codim_checked;
  j["class1_codim_violations"] = rep.class1_codim_violations;
  j["class0_codim_checked"] = rep.class0_codim_checked;
  j["class0_codim_violations"] = rep.class0_codim_violations;
  j["degree_tuple_inequalityed"] = rep.degree_tuple_inequalityed;
  j["tuple_inequality_violations"] = rep.tuple_inequality_violations;
  j["degree_sum_max_m"] = rep.options.degree_sum_max_m;
  j["degree_sum_checked"] = rep.degree_sum_checked;
  j["degree_sum_violations"] = rep.degree_sum_violations;
  j["counterexamples"] = rep.counterexamples;
  j["pass"] = rep.pass;
  return j;
}

Json regularity_report_to_json(const RegularityReport& report) {
  Json j;
  j["point"] = report.point;
  j["class"] = report.class_e;
  j["method"] = report.method == RegularityMethod::Groebner ? "groebner" : "monte-carlo-slice";
  j["prime"] = std::to_string(report.prime);
  if (report.dimension >= -1) {
    j["dimension"] = report.dimension;
  } else {
    j["dimension"] = nullptr;
  }
  j["expected_dimension"] = report.expected_dimension;
  j["pass"] = report.pass();
  switch (report.status) {
    case RegularityStatus::Pass:
      j["status"] = "pass";
      break;
    case RegularityStatus::Fail:
      j["status"] = "fail";
      break;
    case RegularityStatus::Undecided:
      j["status"] = "undecided";
      break;
  }
  j["trials"] = report.trials;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

namespace {

const std::vector<std::string> kAssumptions = {
    "smoothness of Q and normal crossings of the branch divisors are assumed, not verified",
    "regularity is certified over F_p for the reduced instance; over the rationals it holds "
    "for random instances with overwhelming probability but is not certified",
    "for class e >= 1 the expected codimension of the regularity set is taken to equal its size",
};

CertificateReport certify_common(const FamilyDescriptor& desc, const CertifyOptions& opts) {
  CertificateReport rep;
  rep.desc = desc;
  rep.admissibility = validate_descriptor(desc);
  rep.seed = opts.seed;
  rep.prime = opts.prime;
  rep.samples_per_class = opts.samples;
  rep.assumptions = kAssumptions;
  if (!rep.admissibility.ok) {
    rep.deg_v = 0;
    rep.index_ok = false;
    rep.pass = false;
    return rep;
  }
  rep.deg_v = degree_of_V(desc);
  rep.index_ok = index_check(desc);
  rep.bounds = make_bound_report(desc);
  rep.lemmas = run_lemma_suite(opts.lemma_suite);
  return rep;
}

void finalize_certificate(CertificateReport& rep) {
  if (!rep.admissibility.ok) {
    rep.pass = false;
    rep.failed = true;
    return;
  }
  bool reg_ok = true;
  bool reg_failed = false;
  bool undecided = false;
  for (const auto& r : rep.regularity) {
    if (r.status == RegularityStatus::Undecided) undecided = true;
    if (r.status == RegularityStatus::Fail) reg_failed = true;
    if (r.status != RegularityStatus::Pass) reg_ok = false;
  }
  rep.undecided = undecided;
  rep.pass = rep.index_ok && rep.bounds && rep.bounds->pass && rep.lemmas.pass && reg_ok;
  rep.failed = !rep.index_ok || !rep.bounds || !rep.bounds->pass || !rep.lemmas.pass || reg_failed;
}

}  // namespace

CertificateReport run_certify_descriptor(const FamilyDescriptor& desc, const CertifyOptions& opts) {
  if (!is_probable_prime(opts.prime) || opts.prime < 3)
    throw std::invalid_argument("run_certify_descriptor: --prime must be an odd prime");
  CertificateReport rep = certify_common(desc, opts);
  if (!rep.admissibility.ok) return rep;

  rep.bounds_only = (opts.samples == 0);
  CoefficientSampler<Fp> sampler;
  sampler.opts = opts.sampling.poly;
  sampler.p = opts.prime;
  for (int e = 0; e <= desc.m; ++e) {
    for (int s = 0; s < opts.samples; ++s) {
      SplitMix64 rng(derive_seed(opts.seed, static_cast<std::uint64_t>(e),
                                 static_cast<std::uint64_t>(s)));
      const std::vector<Fp> point = sample_point_fp(desc.ambient_vars(), opts.prime, rng);
      const auto instance =
          sample_instance<Fp>(desc, point, e, rng.next(), sampler, opts.sampling);
      const TaylorFrame<Fp> frame = taylor_frame(instance, std::span<const Fp>(point));
      rep.regularity.push_back(is_regular(frame, opts.regularity));
    }
  }
  finalize_certificate(rep);
  return rep;
}

CertificateReport run_certify_instance(const InstanceFileFp& file, const CertifyOptions& opts) {
  if (!is_probable_prime(file.prime) || file.prime < 3)
    throw std::invalid_argument("run_certify_instance: the instance field must be an odd prime");
  CertifyOptions effective = opts;
  effective.prime = file.prime;
  CertificateReport rep = certify_common(file.instance.desc, effective);
  if (!rep.admissibility.ok) return rep;
  rep.bounds_only = file.points.empty();

  for (const auto& point : file.points) {
    RegularityReport entry;
    try {
      const TaylorFrame<Fp> frame = taylor_frame(file.instance, std::span<const Fp>(point));
      entry = is_regular(frame, opts.regularity);
    } catch (const std::exception& err) {
      entry.status = RegularityStatus::Fail;
      entry.note = err.what();
      for (const auto& c : point) entry.point.push_back(coeff_to_string(c));
      entry.prime = file.prime;
    }
    rep.regularity.push_back(std::move(entry));
  }
  finalize_certificate(rep);
  return rep;
}

Json certificate_to_json(const CertificateReport& rep) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["toolkit_version"] = kToolkitVersion;
  j["descriptor"] = descriptor_to_json(rep.desc);
  j["admissible"] = rep.admissibility.ok;
  j["violations"] = rep.admissibility.violations;
  j["degV"] = rep.deg_v.get_str();
  j["index_check"] = rep.index_ok;
  if (rep.bounds) {
    j["bounds"] = bound_report_to_json(*rep.bounds);
  } else {
    j["bounds"] = nullptr;
  }
  Json reg = Json::array();
  for (const auto& r : rep.regularity) reg.push_back(regularity_report_to_json(r));
  j["regularity"] = std::move(reg);
  j["lemma_suite"] = lemma_suite_report_to_json(rep.lemmas);
  j["assumptions"] = rep.assumptions;
  j["seed"] = rep.seed;
  j["prime"] = std::to_string(rep.prime);
  j["samples_per_class"] = rep.samples_per_class;
  j["contingent"] = rep.bounds_only;
  j["undecided"] = rep.undecided;
  j["failed"] = rep.failed;
  j["pass"] = rep.pass;
  return j;
}

Json families_report_json(int M) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["toolkit_version"] = kToolkitVersion;
  j["M"] = M;
  Json families = Json::array();
  for (const auto& desc : enumerate_descriptors(M)) {
    Json entry;
    entry["descriptor"] = descriptor_to_json(desc);
    entry["admissible"] = validate_descriptor(desc).ok;
    entry["degV"] = degree_of_V(desc).get_str();
    entry["index_check"] = index_check(desc);
    families.push_back(std::move(entry));
  }
  j["count"] = families.size();
  j["families"] = std::move(families);
  return j;
}

}  // namespace fanocert
