#include "fanocert/json_io.hpp"

#include <stdexcept>

namespace fanocert {

namespace {

template <class K>
Json polynomial_terms_to_json(const Polynomial<K>& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json term;
    term["c"] = coeff_to_string(c);
    term["e"] = e;
    terms.push_back(std::move(term));
  }
  Json out;
  out["nvars"] = f.nvars();
  out["terms"] = std::move(terms);
  return out;
}

Exponents exponents_from_json(const Json& j, int nvars) {
  Exponents e = j.get<Exponents>();
  if (static_cast<int>(e.size()) != nvars)
    throw std::invalid_argument("polynomial JSON: exponent vector length mismatch");
  return e;
}

}  // namespace

Json polynomial_to_json(const Polynomial<Rational>& f) { return polynomial_terms_to_json(f); }
Json polynomial_to_json(const Polynomial<Fp>& f) { return polynomial_terms_to_json(f); }

Polynomial<Rational> polynomial_from_json_rational(const Json& j) {
  const int nvars = j.at("nvars").get<int>();
  Polynomial<Rational> f(nvars);
  for (const auto& term : j.at("terms")) {
    f.add_term(exponents_from_json(term.at("e"), nvars),
               parse_fraction(term.at("c").get<std::string>()));
  }
  return f;
}

Polynomial<Fp> polynomial_from_json_fp(const Json& j, std::uint64_t p) {
  const int nvars = j.at("nvars").get<int>();
  Polynomial<Fp> f(nvars);
  for (const auto& term : j.at("terms")) {
    const Rational q = parse_fraction(term.at("c").get<std::string>());
    f.add_term(exponents_from_json(term.at("e"), nvars), to_fp(q, p));
  }
  return f;
}

Json descriptor_to_json(const FamilyDescriptor& desc) {
  Json j;
  j["M"] = desc.M;
  j["k"] = desc.k;
  j["d"] = desc.d;
  j["m"] = desc.m;
  j["l"] = desc.l;
  return j;
}

FamilyDescriptor descriptor_from_json(const Json& j) {
  FamilyDescriptor desc;
  desc.M = j.at("M").get<int>();
  desc.k = j.at("k").get<int>();
  desc.d = j.at("d").get<std::vector<int>>();
  desc.m = j.at("m").get<int>();
  desc.l = j.at("l").get<std::vector<int>>();
  return desc;
}

namespace {

template <class K>
Json instance_body_to_json(const FamilyInstance<K>& inst) {
  Json j;
  j["descriptor"] = descriptor_to_json(inst.desc);
  Json fs = Json::array();
  for (const auto& f : inst.f) fs.push_back(polynomial_to_json(f));
  Json gs = Json::array();
  for (const auto& g : inst.g) gs.push_back(polynomial_to_json(g));
  j["f"] = std::move(fs);
  j["g"] = std::move(gs);
  return j;
}

}  // namespace

Json instance_to_json(const FamilyInstance<Rational>& inst) {
  Json j = instance_body_to_json(inst);
  j["field"] = Json{{"type", "rational"}};
  return j;
}

Json instance_to_json(const FamilyInstance<Fp>& inst, std::uint64_t p) {
  Json j = instance_body_to_json(inst);
  j["field"] = Json{{"type", "prime"}, {"p", std::to_string(p)}};
  return j;
}

bool json_is_instance(const Json& j) { return j.contains("f") && j.contains("g"); }

InstanceFileFp instance_file_from_json(const Json& j) {
  InstanceFileFp file;
  const Json& field = j.at("field");
  if (field.at("type").get<std::string>() != "prime")
    throw std::invalid_argument("instance file: only prime-field instances can be certified");
  file.prime = std::stoull(field.at("p").get<std::string>());
  file.instance.desc = descriptor_from_json(j.at("descriptor"));
  for (const auto& f : j.at("f")) file.instance.f.push_back(polynomial_from_json_fp(f, file.prime));
  for (const auto& g : j.at("g")) file.instance.g.push_back(polynomial_from_json_fp(g, file.prime));
  if (j.contains("points")) {
    for (const auto& pt : j.at("points")) {
      std::vector<Fp> coords;
      for (const auto& c : pt) {
        coords.push_back(to_fp(parse_fraction(c.get<std::string>()), file.prime));
      }
      file.points.push_back(std::move(coords));
    }
  }
  return file;
}

Json instance_file_to_json(const InstanceFileFp& file) {
  Json j = instance_to_json(file.instance, file.prime);
  if (!file.points.empty()) {
    Json pts = Json::array();
    for (const auto& pt : file.points) {
      Json coords = Json::array();
      for (const auto& c : pt) coords.push_back(coeff_to_string(c));
      pts.push_back(std::move(coords));
    }
    j["points"] = std::move(pts);
  }
  return j;
}

Json graph_to_json(const ResolutionGraph& g) {
  Json j;
  j["n"] = g.n;
  Json arrows = Json::array();
  for (const auto& [a, b] : g.arrows) arrows.push_back(Json::array({a, b}));
  j["arrows"] = std::move(arrows);
  j["delta"] = g.delta;
  return j;
}

ResolutionGraph graph_from_json(const Json& j) {
  ResolutionGraph g;
  g.n = j.at("n").get<int>();
  for (const auto& arrow : j.at("arrows")) {
    g.arrows.emplace_back(arrow.at(0).get<int>(), arrow.at(1).get<int>());
  }
  g.delta = j.at("delta").get<std::vector<int>>();
  validate_resolution_graph(g);
  return g;
}

}  // namespace fanocert
