#include "lmhslab/lmhslab.h"

#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "lmhslab/error.hpp"
#include "lmhslab/lattice.hpp"
#include "lmhslab/quartic.hpp"
#include "lmhslab/report.hpp"

struct lmhs_lattice {
  lmhslab::Lattice lattice;
  std::string spec;
};

struct lmhs_report {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

lmhs_status fail(lmhs_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs f, translating exceptions into status codes.
template <typename F>
lmhs_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return LMHS_OK;
  } catch (const lmhslab::ParseError& e) {
    return fail(LMHS_INPUT, std::string("parse error: ") + e.what());
  } catch (const lmhslab::PreconditionError& e) {
    return fail(LMHS_INPUT, e.what());
  } catch (const lmhslab::DimensionError& e) {
    return fail(LMHS_INPUT, e.what());
  } catch (const lmhslab::ArithmeticError& e) {
    return fail(LMHS_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LMHS_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LMHS_INTERNAL, e.what());
  }
}

bool to_format(lmhs_format f, lmhslab::Format& out) {
  switch (f) {
    case LMHS_FORMAT_JSON: out = lmhslab::Format::JSON; return true;
    case LMHS_FORMAT_TEXT: out = lmhslab::Format::TEXT; return true;
    case LMHS_FORMAT_DOT: out = lmhslab::Format::DOT; return true;
  }
  return false;
}

template <typename F>
lmhs_status make_report(lmhs_format format, lmhs_report** out, F&& render) {
  if (out == nullptr) return fail(LMHS_USAGE, "output pointer is NULL");
  lmhslab::Format fmt;
  if (!to_format(format, fmt)) return fail(LMHS_USAGE, "unknown output format");
  return guarded([&] { *out = new lmhs_report{render(fmt)}; });
}

std::vector<std::string> split_ids(const char* csv) {
  std::vector<std::string> out;
  if (csv == nullptr) return out;
  std::string cur;
  for (const char* p = csv;; ++p) {
    if (*p == ',' || *p == '\0') {
      const auto a = cur.find_first_not_of(" \t");
      if (a != std::string::npos) out.push_back(cur.substr(a, cur.find_last_not_of(" \t") - a + 1));
      cur.clear();
      if (*p == '\0') break;
    } else {
      cur += *p;
    }
  }
  return out;
}

}  // namespace

extern "C" {

const char* lmhs_version(void) { return "0.1.0"; }

const char* lmhs_last_error(void) { return g_last_error.c_str(); }

void lmhs_set_thread_limit(unsigned n) { lmhslab::set_thread_limit(n); }

const char* lmhs_report_text(const lmhs_report* report) { return report ? report->text.c_str() : ""; }

size_t lmhs_report_size(const lmhs_report* report) { return report ? report->text.size() : 0; }

void lmhs_report_free(lmhs_report* report) { delete report; }

lmhs_status lmhs_lattice_parse(const char* spec, lmhs_lattice** out) {
  if (spec == nullptr || out == nullptr) return fail(LMHS_USAGE, "NULL argument");
  return guarded([&] { *out = new lmhs_lattice{lmhslab::parse_lattice(spec), spec}; });
}

void lmhs_lattice_free(lmhs_lattice* lattice) { delete lattice; }

lmhs_status lmhs_lattice_rank(const lmhs_lattice* lattice, size_t* out) {
  if (lattice == nullptr || out == nullptr) return fail(LMHS_USAGE, "NULL argument");
  *out = lattice->lattice.rank();
  return LMHS_OK;
}

lmhs_status lmhs_lattice_inner(const lmhs_lattice* lattice, const int64_t* v, const int64_t* w, size_t n,
                               int64_t* out) {
  if (lattice == nullptr || v == nullptr || w == nullptr || out == nullptr) return fail(LMHS_USAGE, "NULL argument");
  if (n != lattice->lattice.rank()) return fail(LMHS_INPUT, "vector length does not match the lattice rank");
  return guarded([&] {
    const lmhslab::LatticeVector a(lattice->lattice, std::vector<std::int64_t>(v, v + n));
    const lmhslab::LatticeVector b(lattice->lattice, std::vector<std::int64_t>(w, w + n));
    const lmhslab::Integer x = lmhslab::inner(a, b);
    if (!x.fits_slong_p()) throw lmhslab::ArithmeticError("inner product does not fit in 64 bits");
    *out = x.get_si();
  });
}

lmhs_status lmhs_lattice_info(const lmhs_lattice* lattice, lmhs_format format, lmhs_report** out) {
  if (lattice == nullptr) return fail(LMHS_USAGE, "NULL lattice");
  return make_report(format, out, [&](lmhslab::Format f) { return lmhslab::lattice_info_report(lattice->spec, f); });
}

lmhs_status lmhs_monodromy_analyze(const lmhs_lattice* lattice, const char* cycles_text, lmhs_log_mode mode,
                                   unsigned base_change_bound, unsigned rho_initial, lmhs_format format,
                                   lmhs_report** out) {
  if (cycles_text == nullptr) return fail(LMHS_USAGE, "NULL cycles text");
  if (mode != LMHS_LOG_STANDARD && mode != LMHS_LOG_PAPER) return fail(LMHS_USAGE, "unknown log mode");
  if (base_change_bound == 0) return fail(LMHS_USAGE, "base-change bound must be positive");
  lmhslab::MonodromyRequest req;
  if (lattice) req.lattice_spec = lattice->spec;
  req.cycles_text = cycles_text;
  req.mode = mode == LMHS_LOG_PAPER ? lmhslab::LogMode::PAPER : lmhslab::LogMode::STANDARD;
  req.base_change_bound = base_change_bound;
  req.rho_initial = rho_initial;
  return make_report(format, out, [&](lmhslab::Format f) { return lmhslab::monodromy_report(req, f); });
}

lmhs_status lmhs_quartic_verify(const char* poly_text, const char* point_text, lmhs_format format,
                                lmhs_report** out) {
  if (poly_text == nullptr || point_text == nullptr) return fail(LMHS_USAGE, "NULL argument");
  return make_report(format, out,
                     [&](lmhslab::Format f) { return lmhslab::quartic_verify_report(poly_text, point_text, f); });
}

lmhs_status lmhs_quartic_scan(const char* poly_text, int64_t height_bound, lmhs_format format, lmhs_report** out) {
  if (poly_text == nullptr) return fail(LMHS_USAGE, "NULL polynomial");
  if (height_bound < 1) return fail(LMHS_USAGE, "height bound must be positive");
  return make_report(format, out,
                     [&](lmhslab::Format f) { return lmhslab::quartic_scan_report(poly_text, height_bound, f); });
}

lmhs_status lmhs_quartic_family(const char* family_text, const char* t_list, int64_t height_bound,
                                lmhs_format format, lmhs_report** out) {
  if (family_text == nullptr) return fail(LMHS_USAGE, "NULL family text");
  if (height_bound < 1) return fail(LMHS_USAGE, "height bound must be positive");
  const std::string ts = t_list ? t_list : "";
  return make_report(format, out, [&](lmhslab::Format f) {
    return lmhslab::quartic_family_report(family_text, ts, height_bound, f);
  });
}

lmhs_status lmhs_wpr_graph(unsigned rho_max, unsigned k_max, lmhs_format format, lmhs_report** out) {
  return make_report(format, out, [&](lmhslab::Format f) { return lmhslab::wpr_graph_report(rho_max, k_max, f); });
}

lmhs_status lmhs_wpr_plan(unsigned target_rank, const lmhs_lattice* attach_lattice, int64_t height_bound,
                          lmhs_format format, lmhs_report** out) {
  std::optional<std::string> spec;
  if (attach_lattice) spec = attach_lattice->spec;
  return make_report(format, out, [&](lmhslab::Format f) {
    return lmhslab::wpr_plan_report(target_rank, spec, height_bound, f);
  });
}

lmhs_status lmhs_claims_audit(const char* only_ids, int isotropic_variant, int64_t height_bound, lmhs_format format,
                              lmhs_report** out) {
  if (height_bound < 1) return fail(LMHS_USAGE, "height bound must be positive");
  const auto ids = split_ids(only_ids);
  return make_report(format, out, [&](lmhslab::Format f) {
    return lmhslab::claims_audit_report(ids, isotropic_variant != 0, height_bound, f);
  });
}

}  // extern "C"
