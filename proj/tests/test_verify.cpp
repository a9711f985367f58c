#include <doctest.h>

#include "spectree/error.hpp"
#include "spectree/report_io.hpp"
#include "spectree/verify.hpp"

using namespace spectree;

TEST_CASE("spider spectra closed forms") {
  const VerificationReport r = verify_spider_spectra(8);
  CHECK(r.passed());
  CHECK(r.checked == 36);
  CHECK_THROWS_AS(verify_spider_spectra(1), Error);
}

TEST_CASE("h-tree characteristic polynomial formula") {
  CHECK(verify_h_tree(2, 2).passed());
  CHECK(verify_h_tree(1, 1).passed());  // H(1,2,1) = P4 boundary
  const VerificationReport r = verify_h_tree(5, 5);
  CHECK(r.passed());
  CHECK(r.checked == 25);
}

TEST_CASE("km2 bound and equality classification") {
  const VerificationReport odd = verify_bound_km2(7);
  CHECK(odd.passed());
  REQUIRE(odd.witnesses.size() == 1);
  CHECK(odd.witnesses[0].code == canonical_code(spider(3, 3)));
  const VerificationReport even = verify_bound_km2(8);
  CHECK(even.passed());
  CHECK(even.witnesses.empty());
  CHECK_THROWS_AS(verify_bound_km2(5), Error);
}

TEST_CASE("uniqueness of near-extremal multiplicities at n=8,9") {
  const VerificationReport even = verify_thm_half_minus_2(8);
  CHECK(even.passed());
  REQUIRE(even.witnesses.size() == 1);
  CHECK(even.witnesses[0].code == canonical_code(spider(4, 3)));
  const VerificationReport odd = verify_thm_halfm1_minus_2(9);
  CHECK(odd.passed());
  REQUIRE(odd.witnesses.size() == 1);
  CHECK(odd.witnesses[0].code == canonical_code(spider(5, 3)));
  CHECK_THROWS_AS(verify_thm_half_minus_2(9), Error);
  CHECK_THROWS_AS(verify_thm_halfm1_minus_2(8), Error);
}

TEST_CASE("kho2 witnesses at small orders") {
  const VerificationReport r6 = verify_kho2(6);
  CHECK(r6.passed());
  bool saw_h222 = false;
  for (const auto& w : r6.witnesses)
    saw_h222 |= w.code == canonical_code(h_tree(2, 2, 2)) &&
                w.detail.find("strict") != std::string::npos;
  CHECK(saw_h222);

  const VerificationReport r7 = verify_kho2(7);
  CHECK(r7.passed());
  int equality = 0;
  bool saw_t42 = false, saw_t33 = false, saw_h322 = false;
  for (const auto& w : r7.witnesses) {
    if (w.detail.find("mu_2 = theta") != std::string::npos) {
      ++equality;
      saw_t42 |= w.code == canonical_code(spider(4, 2));
      saw_t33 |= w.code == canonical_code(spider(3, 3));
    }
    saw_h322 |= w.code == canonical_code(h_tree(3, 2, 2));
  }
  CHECK(equality == 2);
  CHECK(saw_t42);
  CHECK(saw_t33);
  CHECK(saw_h322);
}

TEST_CASE("kho classification of mu_{n-1}") {
  const VerificationReport r5 = verify_kho_trees(5);
  CHECK(r5.passed());
  bool saw_p5 = false;
  for (const auto& w : r5.witnesses)
    saw_p5 |= w.code == canonical_code(spider(2, 2));
  CHECK(saw_p5);

  const VerificationReport r7 = verify_kho_trees(7);
  CHECK(r7.passed());
  CHECK(r7.witnesses.size() == 2);  // exactly T(4,2) and T(3,3)

  const VerificationReport r6 = verify_kho_trees(6);
  CHECK(r6.passed());
  for (const auto& w : r6.witnesses)
    CHECK(w.code != canonical_code(spectree::fork()));
}

TEST_CASE("t_star multiplicities and algebraic connectivity") {
  const VerificationReport r = verify_tstar(5);
  CHECK(r.passed());
  CHECK(r.checked == 10);
  bool saw_42 = false;
  for (const auto& w : r.witnesses)
    saw_42 |= w.detail.find("T*(4,2): m(theta) = 0") != std::string::npos;
  CHECK(saw_42);
  bool saw_53 = false;
  for (const auto& w : r.witnesses)
    saw_53 |= w.detail.find("T*(5,3): m(theta) = 1") != std::string::npos;
  CHECK(saw_53);
}

TEST_CASE("n2k witness direction") {
  const VerificationReport r = verify_thm_n2k_witness(2, 21);
  CHECK(r.passed());
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].code == canonical_code(spider(11, 9)));
  CHECK(r.witnesses[0].detail.find("m(mu_2) = 8") != std::string::npos);
  bool scale_note = false;
  for (const auto& note : r.notes)
    scale_note |= note.find("not swept") != std::string::npos;
  CHECK(scale_note);

  // j=3, n=14: the T* family witnesses that restricting to mu_2 matters.
  const VerificationReport r3 = verify_thm_n2k_witness(3, 14);
  CHECK(r3.passed());
  bool tstar_witness = false;
  for (const auto& w : r3.witnesses)
    tstar_witness |= w.detail.find("T*(6,6): non-spider tree with m(theta) = 4") !=
                     std::string::npos;
  CHECK(tstar_witness);
  bool guard_note = false;
  for (const auto& note : r3.notes)
    guard_note |= note.find("precondition n > 10j not met") != std::string::npos;
  CHECK(guard_note);

  CHECK_THROWS_AS(verify_thm_n2k_witness(1, 30), Error);
  CHECK_THROWS_AS(verify_thm_n2k_witness(5, 10), Error);  // no spider witness
}

TEST_CASE("property suite passes at n=8 and star attains the top") {
  const VerificationReport r = verify_property_suite(8);
  CHECK(r.passed());
  CHECK(r.checked == 23);
  bool star_witness = false;
  for (const auto& w : r.witnesses)
    star_witness |= w.detail.find("star attains m(1) = n - 2") != std::string::npos;
  CHECK(star_witness);
  CHECK(r.counters.at("m1=6") >= 1);  // the star
}

TEST_CASE("interlacing sweep is clean and seeded") {
  const VerificationReport r = verify_interlacing(7, 50, 7);
  CHECK(r.passed());
  CHECK(r.checked == 50);
  const VerificationReport again = verify_interlacing(7, 50, 7);
  nlohmann::json a = report_to_json(r);
  nlohmann::json b = report_to_json(again);
  a.erase("timing");
  b.erase("timing");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("sharded sweeps merge to the unsharded report") {
  for (const char* claim : {"km2", "properties"}) {
    const int n = 9;
    VerificationReport whole = claim == std::string("km2")
                                   ? verify_bound_km2(n)
                                   : verify_property_suite(n);
    std::vector<VerificationReport> parts;
    for (int i = 0; i < 3; ++i) {
      Shard s{i, 3};
      parts.push_back(claim == std::string("km2") ? verify_bound_km2(n, s)
                                                  : verify_property_suite(n, s));
    }
    VerificationReport merged = merge_reports(parts);
    nlohmann::json a = report_to_json(whole);
    nlohmann::json b = report_to_json(merged);
    a.erase("timing");
    b.erase("timing");
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("counterexamples10 sharded merge") {
  VerificationReport whole = verify_counterexamples_10();
  std::vector<VerificationReport> parts;
  for (int i = 0; i < 2; ++i) parts.push_back(verify_counterexamples_10({i, 2}));
  VerificationReport merged = merge_reports(parts);
  nlohmann::json a = report_to_json(whole);
  nlohmann::json b = report_to_json(merged);
  a.erase("timing");
  b.erase("timing");
  CHECK(a.dump() == b.dump());
  CHECK(whole.passed());
  CHECK(whole.witnesses.size() == 5);
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.claim = "demo";
  r.scope = "nothing";
  r.checked = 3;
  r.witnesses.push_back({"Ccode", "a witness"});
  r.elapsed_seconds = 1.5;

  nlohmann::json j = report_to_json(r);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["passed"] == true);
  CHECK(j["violations"].empty());
  CHECK(j["timing"]["elapsed_seconds"] == 1.5);

  const std::string with_timing = emit_report(r, ReportFormat::kJson, true);
  const std::string without = emit_report(r, ReportFormat::kJson, false);
  CHECK(with_timing.find("timing") != std::string::npos);
  CHECK(without.find("timing") == std::string::npos);

  const std::string csv = emit_report(r, ReportFormat::kCsv, true);
  CHECK(csv.find("claim,kind,code,detail") == 0);
  CHECK(csv.find("demo,witness,\"Ccode\",\"a witness\"") != std::string::npos);

  const VerificationReport cx = verify_counterexamples_10();
  const std::string cx_csv = emit_report(cx, ReportFormat::kCsv, false);
  int rows = 0;
  for (char c : cx_csv)
    if (c == '\n') ++rows;
  CHECK(rows == 6);  // header + five witnesses

  CHECK_THROWS_AS(parse_report_format("yaml"), Error);
}
