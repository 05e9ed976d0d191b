#include "lmhslab/report.hpp"

#include <sstream>

#include "lmhslab/claims.hpp"
#include "lmhslab/serialize.hpp"

namespace lmhslab {

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!is_scalar(x)) return false;
  return true;
}

void render_text(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_scalar(v)) {
        os << pad << k << ": " << scalar_text(v) << "\n";
      } else if (scalar_array(v)) {
        os << pad << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
        os << "]\n";
      } else {
        os << pad << k << ":\n";
        render_text(os, v, indent + 2);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& x : j) {
      if (scalar_array(x)) {
        os << pad;
        for (std::size_t i = 0; i < x.size(); ++i) os << (i ? " " : "") << scalar_text(x[i]);
        os << "\n";
      } else if (is_scalar(x)) {
        os << pad << scalar_text(x) << "\n";
      } else {
        os << pad << "-\n";
        render_text(os, x, indent + 2);
      }
    }
    return;
  }
  os << pad << scalar_text(j) << "\n";
}

std::string render(const Json& j, Format fmt) {
  if (fmt == Format::DOT) throw PreconditionError("dot output is only available for the WPR graph");
  if (fmt == Format::JSON) return j.dump(2) + "\n";
  std::ostringstream os;
  render_text(os, j, 0);
  return os.str();
}

Json null_with(const std::string& reason) { return Json{{"available", false}, {"reason", reason}}; }

// Filtration, Kulikov type and K3 bookkeeping for a certified nilpotent.
void add_lmhs(Json& out, const NilpotentOperator& n, const MonodromyRequest& req) {
  const WeightFiltration w = weight_filtration(n, req.center);
  out["weight_filtration"] = filtration_json(w);
  out["kulikov_type"] = to_string(kulikov_classify(n));
  if (w.ambient_dim() != 22) {
    out["limit_invariants"] = null_with("limiting invariants are tabulated for rank 22 only");
  } else if (kulikov_classify(n) == KulikovType::III) {
    out["limit_invariants"] = null_with("limiting Hodge numbers for type III are not tabulated");
  } else {
    const auto k = static_cast<unsigned>(rank(n.matrix()));
    out["limit_invariants"] = limit_json(limiting_invariants(w, req.rho_initial, k));
  }
}

}  // namespace

std::string lattice_info_report(const std::string& spec, Format fmt) {
  const Lattice l = parse_lattice(spec);
  Json j = lattice_json(l);
  j["blocks"] = l.block_sizes();
  return render(j, fmt);
}

std::string monodromy_report(const MonodromyRequest& req, Format fmt) {
  std::optional<Lattice> given;
  if (req.lattice_spec) given = parse_lattice(*req.lattice_spec);
  const CycleConfiguration config = parse_cycle_configuration(req.cycles_text, given);
  const IsometryCandidate t = picard_lefschetz(config, req.base_change_bound);

  Json out;
  out["lattice"] = lattice_json(config.lattice());
  Json cycles = Json::array();
  for (const auto& c : config.cycles()) cycles.push_back(to_json(c.coords()));
  out["cycles"] = std::move(cycles);
  out["pairwise_gram"] = to_json(config.pairwise_gram());
  out["mode"] = req.mode == LogMode::PAPER ? "paper" : "standard";
  out["T"] = to_json(t.matrix());
  out["analysis"] = analysis_json(t.analysis());

  if (req.mode == LogMode::PAPER) {
    const LiteralLog log = paper_log(t);
    out["N"] = literal_log_json(log);
    if (log.nilpotent) {
      add_lmhs(out, NilpotentOperator(log.n), req);
    } else {
      out["weight_filtration"] = null_with("T - I is not nilpotent");
    }
  } else if (!t.analysis().is_quasi_unipotent) {
    out["N"] = null_with("no power T^n with n <= " + std::to_string(req.base_change_bound) + " is unipotent");
  } else {
    const unsigned order = *t.analysis().base_change_order;
    const NilpotentOperator n = log_unipotent(base_change(t, order));
    Json nj;
    nj["base_change_order"] = order;
    nj["matrix"] = to_json(n.matrix());
    nj["rank"] = rank(n.matrix());
    nj["nilpotency_index"] = n.nilpotency_index();
    nj["exp_log_roundtrip"] = true;
    out["N"] = std::move(nj);
    add_lmhs(out, n, req);
  }
  return render(out, fmt);
}

std::string quartic_verify_report(const std::string& poly_text, const std::string& point_text, Format fmt) {
  const ProjectivePolynomial f = parse_poly_file(poly_text);
  Json j;
  j["polynomial"] = f.to_string();
  j["report"] = point_report_json(verify_singular_point(f, parse_point(point_text)));
  return render(j, fmt);
}

std::string quartic_scan_report(const std::string& poly_text, std::int64_t bound, Format fmt) {
  const ProjectivePolynomial f = parse_poly_file(poly_text);
  const auto pts = scan_points(f, bound);
  Json j;
  j["polynomial"] = f.to_string();
  j["height_bound"] = bound;
  j["singular_points"] = pts.size();
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(point_report_json(p));
  j["points"] = std::move(arr);
  return render(j, fmt);
}

std::string quartic_family_report(const std::string& family_text, const std::string& t_list, std::int64_t bound,
                                  Format fmt) {
  const PencilFamily fam = parse_family(family_text);
  const std::vector<Rational> ts = t_list.empty() ? std::vector<Rational>{} : parse_rational_list(t_list);
  Json j;
  j["f0"] = fam.f0.to_string();
  Json gs = Json::array();
  for (const auto& [lambda, g] : fam.perturbations) gs.push_back({{"lambda", lambda.get_str()}, {"g", g.to_string()}});
  j["perturbations"] = std::move(gs);
  j["report"] = family_json(family_report(fam, ts, bound));
  return render(j, fmt);
}

std::string wpr_graph_report(unsigned rho_max, unsigned k_max, Format fmt) {
  const WprGraph g = build_wpr_graph(rho_max, k_max);
  if (fmt == Format::DOT) return to_dot(g);
  if (fmt == Format::JSON) return graph_json(g).dump(2) + "\n";
  std::ostringstream os;
  os << "nodes: " << g.nodes.size() << "\nedges: " << g.edges.size() << "\n";
  for (const auto& e : g.edges)
    os << e.from.label() << " -> " << e.to.label() << "  k=" << e.k << " recipe=" << to_string(e.recipe) << "\n";
  return os.str();
}

std::string wpr_plan_report(unsigned target_rank, const std::optional<std::string>& attach_lattice,
                            std::int64_t bound, Format fmt) {
  DegenerationPlan plan = plan_chain(target_rank);
  if (attach_lattice) plan = attach_cycles(plan, parse_lattice(*attach_lattice), bound);
  return render(plan_json(plan), fmt);
}

std::string claims_audit_report(const std::vector<std::string>& only, bool isotropic_variant, std::int64_t bound,
                                Format fmt) {
  AuditConfig cfg;
  cfg.only = only;
  cfg.isotropic_variant = isotropic_variant;
  cfg.height_bound = bound;
  const auto records = run_audit(cfg);
  if (fmt == Format::DOT) throw PreconditionError("dot output is only available for the WPR graph");
  if (fmt == Format::TEXT) return audit_to_text(records);
  return audit_to_json(records).dump(2) + "\n";
}

}  // namespace lmhslab
