#include <gtest/gtest.h>

#include <string>

#include "lmhslab/lmhslab.h"

namespace {

std::string take(lmhs_report* r) {
  std::string s(lmhs_report_text(r), lmhs_report_size(r));
  lmhs_report_free(r);
  return s;
}

}  // namespace

TEST(CApi, LatticeRoundTrip) {
  lmhs_lattice* l = nullptr;
  ASSERT_EQ(lmhs_lattice_parse("U+A1m", &l), LMHS_OK);
  size_t rank = 0;
  EXPECT_EQ(lmhs_lattice_rank(l, &rank), LMHS_OK);
  EXPECT_EQ(rank, 3u);
  const int64_t v[] = {1, 0, 1}, w[] = {0, 1, 1};
  int64_t ip = 0;
  EXPECT_EQ(lmhs_lattice_inner(l, v, w, 3, &ip), LMHS_OK);
  EXPECT_EQ(ip, 1 - 2);
  EXPECT_EQ(lmhs_lattice_inner(l, v, w, 2, &ip), LMHS_INPUT);
  lmhs_report* r = nullptr;
  ASSERT_EQ(lmhs_lattice_info(l, LMHS_FORMAT_JSON, &r), LMHS_OK);
  EXPECT_NE(take(r).find("\"rank\": 3"), std::string::npos);
  lmhs_lattice_free(l);
}

TEST(CApi, ErrorsAreReported) {
  lmhs_lattice* l = nullptr;
  EXPECT_EQ(lmhs_lattice_parse("U+", &l), LMHS_INPUT);
  EXPECT_EQ(l, nullptr);
  EXPECT_NE(std::string(lmhs_last_error()).find("position"), std::string::npos);
  EXPECT_EQ(lmhs_lattice_parse(nullptr, &l), LMHS_USAGE);
  lmhs_report* r = nullptr;
  EXPECT_EQ(lmhs_wpr_graph(30, 1, LMHS_FORMAT_JSON, &r), LMHS_INPUT);
  EXPECT_EQ(r, nullptr);
  EXPECT_EQ(lmhs_wpr_graph(3, 1, static_cast<lmhs_format>(9), &r), LMHS_USAGE);
  EXPECT_EQ(lmhs_claims_audit("nope", 0, 2, LMHS_FORMAT_JSON, &r), LMHS_INPUT);
  EXPECT_EQ(lmhs_quartic_scan("x^4", 0, LMHS_FORMAT_JSON, &r), LMHS_USAGE);
  EXPECT_EQ(lmhs_quartic_verify("x^4+y", "1,0,0,0", LMHS_FORMAT_JSON, &r), LMHS_INPUT);
  // DOT only applies to the graph
  EXPECT_EQ(lmhs_wpr_plan(19, nullptr, 2, LMHS_FORMAT_DOT, &r), LMHS_INPUT);
  lmhs_report_free(nullptr);
  lmhs_lattice_free(nullptr);
}

TEST(CApi, MonodromyPaperMode) {
  lmhs_report* r = nullptr;
  ASSERT_EQ(lmhs_monodromy_analyze(nullptr, "A1m\n1\n", LMHS_LOG_PAPER, 12, 1, LMHS_FORMAT_JSON, &r), LMHS_OK);
  const std::string s = take(r);
  EXPECT_NE(s.find("\"rank\": 1"), std::string::npos);
  EXPECT_NE(s.find("\"nilpotent\": false"), std::string::npos);
}

TEST(CApi, QuarticAndGraph) {
  lmhs_report* r = nullptr;
  ASSERT_EQ(lmhs_quartic_verify("x^4+y^4+z^4+w^4-4*x*y*z*w", "[1:1:1:1]", LMHS_FORMAT_JSON, &r), LMHS_OK);
  EXPECT_NE(take(r).find("A1_NODE"), std::string::npos);
  ASSERT_EQ(lmhs_wpr_graph(20, 1, LMHS_FORMAT_DOT, &r), LMHS_OK);
  const std::string dot = take(r);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++edges;
  EXPECT_EQ(edges, 19u);
}

TEST(CApi, PlanWithAttachment) {
  lmhs_lattice* l = nullptr;
  ASSERT_EQ(lmhs_lattice_parse("K3", &l), LMHS_OK);
  lmhs_report* r = nullptr;
  ASSERT_EQ(lmhs_wpr_plan(12, l, 2, LMHS_FORMAT_JSON, &r), LMHS_OK);
  const std::string s = take(r);
  EXPECT_NE(s.find("\"m\": 8"), std::string::npos);
  EXPECT_NE(s.find("\"gram_is_minus_two_identity\": true"), std::string::npos);
  lmhs_lattice_free(l);
}

TEST(CApi, AuditIsDeterministic) {
  lmhs_report* a = nullptr;
  lmhs_report* b = nullptr;
  ASSERT_EQ(lmhs_claims_audit(nullptr, 0, 2, LMHS_FORMAT_JSON, &a), LMHS_OK);
  ASSERT_EQ(lmhs_claims_audit(nullptr, 0, 2, LMHS_FORMAT_JSON, &b), LMHS_OK);
  EXPECT_EQ(take(a), take(b));
}
