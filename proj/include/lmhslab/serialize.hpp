#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lmhslab/lattice.hpp"
#include "lmhslab/lmhs.hpp"
#include "lmhslab/monodromy.hpp"
#include "lmhslab/planner.hpp"
#include "lmhslab/quartic.hpp"

namespace lmhslab {

using Json = nlohmann::ordered_json;

/// Entries become strings ("p/q" or "n") so no value is ever a float.
Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);
Json to_json(const std::vector<std::int64_t>& v);

Json lattice_json(const Lattice& l);
Json analysis_json(const IsometryAnalysis& a);
Json literal_log_json(const LiteralLog& l);
Json filtration_json(const WeightFiltration& w);
Json limit_json(const LimitInvariants& inv);
Json point_report_json(const SingularPointReport& r);
Json family_json(const FamilyReport& r);
Json graph_json(const WprGraph& g);
Json plan_json(const DegenerationPlan& p);

std::string dims_to_string(const std::vector<std::size_t>& v);  // "(1,20,1)"

}  // namespace lmhslab
