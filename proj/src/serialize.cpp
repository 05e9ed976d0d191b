#include "lmhslab/serialize.hpp"

namespace lmhslab {

namespace {

template <typename T>
Json matrix_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

Json opt_json(const std::optional<unsigned>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const IntMatrix& m) { return matrix_json(m); }
Json to_json(const RatMatrix& m) { return matrix_json(m); }

Json to_json(const std::vector<std::int64_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

std::string dims_to_string(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Json lattice_json(const Lattice& l) {
  const Signature s = l.signature();
  Json j;
  j["label"] = l.label();
  j["rank"] = l.rank();
  j["determinant"] = l.determinant().get_str();
  j["signature"] = {{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
  j["even"] = l.is_even();
  return j;
}

Json analysis_json(const IsometryAnalysis& a) {
  Json j;
  j["is_isometry"] = a.is_isometry;
  j["finite_order"] = opt_json(a.finite_order);
  j["is_quasi_unipotent"] = a.is_quasi_unipotent;
  j["base_change_order"] = opt_json(a.base_change_order);
  j["unipotent"] = a.unipotent;
  j["base_change_bound"] = a.bound;
  return j;
}

Json literal_log_json(const LiteralLog& l) {
  Json j;
  j["matrix"] = to_json(l.n);
  j["rank"] = l.rank;
  j["nilpotent"] = l.nilpotent;
  j["nilpotency_index"] = opt_json(l.nilpotency_index);
  j["square_factor"] = l.square_factor ? Json(l.square_factor->get_str()) : Json(nullptr);
  return j;
}

Json filtration_json(const WeightFiltration& w) {
  Json j;
  j["center"] = w.center();
  j["nilpotency_index"] = w.index();
  j["weights"] = w.weights();
  j["graded_dims"] = w.graded_dims();
  Json subs = Json::array();
  for (int k : w.weights()) subs.push_back(to_json(w.W(k).rows()));
  j["subspaces"] = std::move(subs);
  return j;
}

Json limit_json(const LimitInvariants& inv) {
  Json j;
  j["kulikov_type"] = to_string(inv.kulikov_type);
  j["hodge_lim"] = inv.hodge_lim;
  j["rho_initial"] = inv.rho_initial;
  j["jump"] = inv.jump;
  j["rho_limit"] = inv.rho_limit;
  return j;
}

Json point_report_json(const SingularPointReport& r) {
  Json j;
  j["point"] = point_to_string(r.point);
  j["chart"] = std::string(1, "xyzw"[r.chart]);
  j["value"] = r.value.get_str();
  Json g = Json::array();
  for (const auto& v : r.gradient) g.push_back(v.get_str());
  j["gradient"] = std::move(g);
  j["hessian"] = to_json(r.hessian);
  j["hessian_rank"] = r.hessian_rank;
  j["is_on_surface"] = r.is_on_surface;
  j["is_singular"] = r.is_singular;
  j["classification"] = to_string(r.classification);
  return j;
}

Json family_json(const FamilyReport& r) {
  Json j;
  j["height_bound"] = r.height_bound;
  Json fibers = Json::array();
  for (const auto& f : r.fibers) {
    Json x;
    x["t"] = f.t.get_str();
    x["fiber"] = f.fiber.to_string();
    x["singular_points"] = f.singular_points.size();
    x["a1_nodes"] = f.a1_nodes;
    x["degenerate"] = f.degenerate;
    x["has_a1"] = f.has_a1;
    Json pts = Json::array();
    for (const auto& p : f.singular_points) pts.push_back(point_report_json(p));
    x["points"] = std::move(pts);
    fibers.push_back(std::move(x));
  }
  j["fibers"] = std::move(fibers);
  return j;
}

Json graph_json(const WprGraph& g) {
  Json j;
  j["rho_max"] = g.rho_max;
  j["k_max"] = g.k_max;
  Json nodes = Json::array();
  for (const auto& n : g.nodes) nodes.push_back(n.label());
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"from", e.from.label()},
                     {"to", e.to.label()},
                     {"k", e.k},
                     {"recipe", to_string(e.recipe)},
                     {"exceptional", e.exceptional_ledger}});
  j["edges"] = std::move(edges);
  return j;
}

Json plan_json(const DegenerationPlan& p) {
  Json j;
  j["target_rank"] = p.target_rank;
  j["m"] = p.m;
  j["final_rho"] = p.final_rho();
  Json steps = Json::array();
  for (const auto& s : p.steps) {
    Json x;
    x["from"] = s.edge.from.label();
    x["to"] = s.edge.to.label();
    x["k"] = s.edge.k;
    x["recipe"] = to_string(s.edge.recipe);
    x["exceptional"] = s.edge.exceptional_ledger;
    if (s.cycle) x["cycles"] = Json::array({to_json(s.cycle->coords())});
    steps.push_back(std::move(x));
  }
  j["steps"] = std::move(steps);
  if (p.attachment) {
    const auto& a = *p.attachment;
    j["attachment"] = {{"lattice", a.lattice_label},   {"height_bound", a.height_bound},
                       {"requested", a.requested},     {"attached", a.attached},
                       {"complete", a.complete},       {"gram", to_json(a.gram)},
                       {"gram_is_minus_two_identity", a.gram_verified}};
  }
  return j;
}

}  // namespace lmhslab
