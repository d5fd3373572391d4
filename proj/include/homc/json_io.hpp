#pragma once

#include <string>

#include "json.hpp"

#include "homc/complexity.hpp"
#include "homc/cover.hpp"
#include "homc/decompose.hpp"
#include "homc/invariants.hpp"
#include "homc/vertex_map.hpp"

namespace homc {

using Json = nlohmann::ordered_json;

Json to_json(const VertexMap& f);
Json to_json(const VerifyReport& r);
Json to_json(const QuasiHom& q);
Json to_json(const ComplexityResult& r);
Json to_json(const DesignPlan& p);
Json to_json(const CoverCertificate& c);

// Reads the pieces of a plan or certificate written by to_json back into a
// QuasiHom over the given source and target graphs.
QuasiHom quasi_hom_from_json(const Json& j, const Graph& source, const Graph& target,
                             bool injective);

}  // namespace homc
