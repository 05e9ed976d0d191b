#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lmhslab {

enum class Format { JSON, TEXT, DOT };
enum class LogMode { PAPER, STANDARD };

// End-to-end workflows rendered to a string. Library exceptions propagate.

std::string lattice_info_report(const std::string& spec, Format fmt);

struct MonodromyRequest {
  std::optional<std::string> lattice_spec;
  std::string cycles_text;
  LogMode mode = LogMode::STANDARD;
  unsigned base_change_bound = 12;
  unsigned rho_initial = 1;
  int center = 2;
};
std::string monodromy_report(const MonodromyRequest& req, Format fmt);

std::string quartic_verify_report(const std::string& poly_text, const std::string& point_text, Format fmt);
std::string quartic_scan_report(const std::string& poly_text, std::int64_t bound, Format fmt);
/// family_text uses the tagged `f0:` / `g:` format.
std::string quartic_family_report(const std::string& family_text, const std::string& t_list, std::int64_t bound,
                                  Format fmt);

std::string wpr_graph_report(unsigned rho_max, unsigned k_max, Format fmt);
std::string wpr_plan_report(unsigned target_rank, const std::optional<std::string>& attach_lattice,
                            std::int64_t bound, Format fmt);

std::string claims_audit_report(const std::vector<std::string>& only, bool isotropic_variant, std::int64_t bound,
                                Format fmt);

}  // namespace lmhslab
