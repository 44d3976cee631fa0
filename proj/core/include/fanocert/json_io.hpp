// JSON forms of the core value types.  All numbers that can outgrow 64 bits
// travel as decimal strings; rationals are "num/den" strings; object keys
// are emitted sorted, so serialization is byte-stable.
#pragma once

#include <json.hpp>

#include "fanocert/family.hpp"
#include "fanocert/polynomial.hpp"
#include "fanocert/resolution_graph.hpp"

namespace fanocert {

using Json = nlohmann::json;

Json polynomial_to_json(const Polynomial<Rational>& f);
Json polynomial_to_json(const Polynomial<Fp>& f);
Polynomial<Rational> polynomial_from_json_rational(const Json& j);
Polynomial<Fp> polynomial_from_json_fp(const Json& j, std::uint64_t p);

Json descriptor_to_json(const FamilyDescriptor& desc);
FamilyDescriptor descriptor_from_json(const Json& j);

Json instance_to_json(const FamilyInstance<Rational>& inst);
Json instance_to_json(const FamilyInstance<Fp>& inst, std::uint64_t p);

// Instance files may carry explicit points to certify at (used for planted
// fixtures); each point is a coordinate vector in the chart p_0 = 1.
struct InstanceFileFp {
  FamilyInstance<Fp> instance;
  std::uint64_t prime = 0;
  std::vector<std::vector<Fp>> points;
};

bool json_is_instance(const Json& j);
InstanceFileFp instance_file_from_json(const Json& j);
Json instance_file_to_json(const InstanceFileFp& file);

Json graph_to_json(const ResolutionGraph& g);
ResolutionGraph graph_from_json(const Json& j);

}  // namespace fanocert
