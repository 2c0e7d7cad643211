#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rh3/hypothesis.hpp"
#include "rh3/pipeline.hpp"

using namespace rh3;

namespace {

const char* kFixturePath = RH3_SOURCE_DIR "/data/reference_tables.fix";

const FixtureSet& fixtures() {
  static FixtureSet set = load_fixtures(kFixturePath);
  return set;
}

}  // namespace

TEST_CASE("class group data helpers") {
  ClassGroupData g{mpz_class(18711), {2079, 9}};
  CHECK(g.consistent());
  CHECK(g.valuation3() == 5);
  CHECK(g.three_part() == AbelianStructure({27, 9}));
  CHECK(g.to_string() == "[18711, [2079, 9]]");
  ClassGroupData bad{mpz_class(19), {2079, 9}};
  CHECK_FALSE(bad.consistent());

  StructureFilter any{};
  CHECK(any.admits(g));
  StructureFilter five{5};
  CHECK(five.admits(g));
  StructureFilter three{3};
  CHECK_FALSE(three.admits(g));
}

TEST_CASE("sieve dossiers") {
  FieldDossier d31 = hypothesis_check(31);
  CHECK(d31.squarefree_ok);
  CHECK(d31.congruence_ok);
  CHECK(d31.class_number_ok);
  CHECK(d31.passes_sieve());
  CHECK(d31.D_minus == -31);
  CHECK(d31.D_plus == 93);
  CHECK(d31.h_minus == 3);
  CHECK(d31.h_plus == 1);
  REQUIRE(d31.cl_minus_structure);
  CHECK(*d31.cl_minus_structure == AbelianStructure({3}));

  CHECK_FALSE(hypothesis_check(33).squarefree_ok);   // 3 | d
  CHECK_FALSE(hypothesis_check(50).squarefree_ok);   // 25 | 50
  FieldDossier d35 = hypothesis_check(35);
  CHECK(d35.squarefree_ok);
  CHECK_FALSE(d35.congruence_ok);                    // 35 = 2 mod 3
  FieldDossier d7 = hypothesis_check(7);
  CHECK(d7.congruence_ok);
  CHECK_FALSE(d7.class_number_ok);                   // h- = 1
  FieldDossier d1759 = hypothesis_check(1759);
  CHECK_FALSE(d1759.class_number_ok);                // 27 | h-
  CHECK_FALSE(d1759.passes_sieve());
}

TEST_CASE("fixture ingestion") {
  const FixtureSet& fx = fixtures();
  REQUIRE(fx.records.size() == 20);
  for (size_t i = 1; i < fx.records.size(); ++i) CHECK(fx.records[i - 1].d < fx.records[i].d);

  const ScanRecord* r211 = fx.find(211);
  REQUIRE(r211);
  REQUIRE(r211->candidate);
  CHECK(r211->candidate->a == 17);
  CHECK(r211->candidate->b == 1);
  CHECK(r211->h_minus == 3);
  CHECK(r211->h_plus == 1);
  REQUIRE(r211->P);
  CHECK(r211->P->degree() == 12);
  CHECK(to_coeff_list(*r211->P) == "1,-6,21,-84,243,-432,1037,-1896,-204,-966,5949,4905,11881");
  REQUIRE(r211->class_group);
  CHECK(r211->class_group->to_string() == "[27, [9, 3]]");
  CHECK(fx.find(9999) == nullptr);

  // three records carry no printed polynomial
  int without_P = 0;
  for (const auto& r : fx.records)
    if (!r.P) ++without_P;
  CHECK(without_P == 3);

  const ClassGroupData* cg = fx.class_group_for(211, 17, 1);
  REQUIRE(cg);
  CHECK(cg->valuation3() == 3);
  CHECK(fx.class_group_for(211, 1, 1) == nullptr);
}

TEST_CASE("candidate selection with and without the structure filter") {
  // without a filter the first cube-norm hit of the box wins
  auto naive = select_candidate(913, 1000, 100, nullptr, std::nullopt);
  REQUIRE(naive);
  CHECK(naive->a == 206);
  CHECK(naive->b == 3);

  // with the class-group filter the selection lands on the recorded pair
  StructureFilter f1{fixtures().find(913)->class_group->valuation3()};
  auto filtered = select_candidate(913, 1000, 100, &fixtures(), f1);
  REQUIRE(filtered);
  CHECK(filtered->a == 321);
  CHECK(filtered->b == 4);

  // filter without any data never selects
  std::string note;
  auto none = select_candidate(7, 1000, 100, nullptr, StructureFilter{1}, &note);
  CHECK_FALSE(none);
  CHECK(note.find("filter") != std::string::npos);
}

TEST_CASE("scan of the low range") {
  auto records = scan(4, 100, 1000, 100, &fixtures());
  std::set<long long> ds;
  for (const auto& r : records) ds.insert(r.d);
  CHECK(ds == std::set<long long>{31, 61});
  for (const auto& r : records) {
    REQUIRE(r.candidate);
    REQUIRE(r.P);
    REQUIRE(r.class_group);
    REQUIRE(r.bucket);
  }
  auto r31 = records.front();
  CHECK(r31.d == 31);
  CHECK(r31.candidate->a == 1);
  CHECK(r31.candidate->b == 1);
  CHECK(*r31.bucket == 0);

  // without fixtures no class data attaches, but polynomials still build
  auto bare = scan(4, 100);
  REQUIRE(bare.size() == 2);
  CHECK_FALSE(bare[0].class_group.has_value());
  CHECK(bare[0].P.has_value());
}

TEST_CASE("chevalley counts") {
  CHECK(chevalley_fixed_points(1, 3, 3, 1) == 1);
  CHECK(chevalley_fixed_points(3, 3, 3, 1) == 3);
  CHECK_THROWS_AS(chevalley_fixed_points(1, 1, 3, 1), std::domain_error);
  CHECK_THROWS_AS(chevalley_fixed_points(0, 3, 3, 1), std::invalid_argument);
}

TEST_CASE("fixture verification of the headline rows") {
  const ScanRecord* r211 = fixtures().find(211);
  REQUIRE(r211);
  VerificationReport rep = verify_fixture(*r211);
  CHECK(rep.pass());
  CHECK(rep.in_hypothesis);
  CHECK(rep.n == 3);
  CHECK(rep.r_minus == 1);
  CHECK(rep.R_minus == 2);
  REQUIRE(rep.rh);
  CHECK_FALSE(*rep.rh);
  CHECK(rep.bucket == 1);

  const ScanRecord* r31 = fixtures().find(31);
  REQUIRE(r31);
  VerificationReport rep31 = verify_fixture(*r31);
  CHECK(rep31.pass());
  CHECK(rep31.r_minus == 1);
  CHECK(rep31.R_minus == 1);
  REQUIRE(rep31.rh);
  CHECK(*rep31.rh);
  bool fixed_note = false;
  for (const auto& m : rep31.notes) fixed_note = fixed_note || m.find("Cl_K = Cl_K^G") != std::string::npos;
  CHECK(fixed_note);

  const ScanRecord* r1759 = fixtures().find(1759);
  REQUIRE(r1759);
  VerificationReport rep1759 = verify_fixture(*r1759);
  CHECK(rep1759.pass());
  CHECK_FALSE(rep1759.in_hypothesis);
  bool outside_note = false;
  for (const auto& m : rep1759.notes)
    outside_note = outside_note || m.find("outside the class-number condition") != std::string::npos;
  CHECK(outside_note);

  // d = 2 (mod 3): fails only the congruence; the class-number condition holds,
  // so the admissible bucket and structure checks still run
  const ScanRecord* r86942 = fixtures().find(86942);
  REQUIRE(r86942);
  VerificationReport rep86942 = verify_fixture(*r86942);
  CHECK(rep86942.pass());
  CHECK_FALSE(rep86942.in_hypothesis);
  CHECK(rep86942.n == 9);
  CHECK(rep86942.R_minus == 2);
  CHECK(rep86942.bucket == 4);
  bool congruence_note = false;
  for (const auto& m : rep86942.notes)
    congruence_note = congruence_note || m.find("congruence") != std::string::npos;
  CHECK(congruence_note);
}

TEST_CASE("verification flags tampered records") {
  ScanRecord rec = *fixtures().find(211);
  rec.h_minus = 4;
  VerificationReport rep = verify_fixture(rec);
  CHECK_FALSE(rep.pass());

  ScanRecord rec2 = *fixtures().find(211);
  rec2.class_group->order = 28;
  VerificationReport rep2 = verify_fixture(rec2);
  CHECK_FALSE(rep2.pass());

  ScanRecord rec3 = *fixtures().find(211);
  rec3.P->coeffs[0] += 1;
  VerificationReport rep3 = verify_fixture(rec3);
  CHECK_FALSE(rep3.pass());

  ScanRecord rec4 = *fixtures().find(211);
  rec4.class_group = ClassGroupData{mpz_class(27), {27}};  // inadmissible [27]
  VerificationReport rep4 = verify_fixture(rec4);
  CHECK_FALSE(rep4.pass());
}

TEST_CASE("oracle script emission") {
  const ScanRecord* r211 = fixtures().find(211);
  std::string s1 = emit_oracle_script(*r211);
  std::string s2 = emit_oracle_script(*r211);
  CHECK(s1 == s2);
  CHECK(s1.find("bnfinit") != std::string::npos);
  CHECK(s1.find(to_polynomial_string(*r211->P)) != std::string::npos);
  CHECK(s1.find("K.no") != std::string::npos);
  ScanRecord no_poly = *fixtures().find(1759);
  CHECK_THROWS(emit_oracle_script(no_poly));
}

TEST_CASE("report rendering and the round trip") {
  std::string report = format_report(fixtures().records);
  CHECK(report.find("a= 8, b= 1, #Cl_{k-}=6, #Cl_{k+}=2") != std::string::npos);
  CHECK(report.find("class group : [18711, [2079, 9]]") != std::string::npos);
  CHECK(report.find("d = 86942") != std::string::npos);

  std::istringstream in(report);
  auto parsed = parse_records(in);
  REQUIRE(parsed.size() == fixtures().records.size());
  for (size_t i = 0; i < parsed.size(); ++i) CHECK(parsed[i] == fixtures().records[i]);

  // scan records round trip too, including notes and buckets
  auto records = scan(4, 250, 1000, 100, &fixtures());
  std::string rep2 = format_report(records);
  std::istringstream in2(rep2);
  auto parsed2 = parse_records(in2);
  REQUIRE(parsed2.size() == records.size());
  for (size_t i = 0; i < parsed2.size(); ++i) CHECK(parsed2[i] == records[i]);

  CHECK(format_report({}) == "cube-norm candidate report\n--------------------------\n");
}
