#ifndef RH3_PIPELINE_HPP
#define RH3_PIPELINE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rh3/abelian.hpp"
#include "rh3/hypothesis.hpp"
#include "rh3/kummer.hpp"
#include "rh3/polynomial.hpp"

namespace rh3 {

// Class group of the degree-12 field as the tables print it: total order and
// cyclic invariant factors c_1 >= c_2 >= ..., e.g. [768, [24, 4, 4, 2]]. This is
// never computed natively; it comes from fixtures or from running the emitted
// oracle script in an external computer-algebra system.
struct ClassGroupData {
  mpz_class order;
  std::vector<long long> cyclic_factors;

  AbelianStructure three_part() const;
  int valuation3() const;  // v_3 of the order
  bool consistent() const;  // order equals the product of the factors
  std::string to_string() const;  // "[768, [24, 4, 4, 2]]"

  bool operator==(const ClassGroupData& o) const {
    return order == o.order && cyclic_factors == o.cyclic_factors;
  }
};

// One d of the scan: sieve data, the selected candidate with its polynomials,
// and whatever class-group data the fixtures supplied.
struct ScanRecord {
  long long d = 0;
  std::optional<KummerCandidate> candidate;
  std::optional<long long> h_minus, h_plus;
  std::optional<IntegerPolynomial> Q, P;
  std::optional<ClassGroupData> class_group;
  std::optional<int> bucket;  // a with admissible 3-part [3^{a+1}, 3^a]
  std::string note;

  bool operator==(const ScanRecord& o) const;
};

struct FixtureSet {
  std::vector<ScanRecord> records;  // ascending d

  const ScanRecord* find(long long d) const;
  // Class data attached to the exact candidate (d, a, b), if any.
  const ClassGroupData* class_group_for(long long d, long long a, long long b) const;
};

// Stand-in for the class-group conditions of the table loops (for instance
// "3 divides the class number and 9 does not" selects the [3] bucket). The
// class group of a candidate is only ever known from fixture data, so while a
// filter is active, candidates without data cannot be tested and are skipped.
struct StructureFilter {
  std::optional<int> exact_3_valuation;  // empty admits any candidate with data

  bool admits(const ClassGroupData& g) const;
};

// First candidate of the (a_max, b_max) box, in search order, that the filter
// admits and whose compositum is non-degenerate; skips are explained in *note.
std::optional<KummerCandidate> select_candidate(long long d, long long a_max, long long b_max,
                                                const FixtureSet* fixtures,
                                                const std::optional<StructureFilter>& filter,
                                                std::string* note = nullptr);

// The table loop: d = 4, 7, 10, ... stepping by 3 over [d_lo, d_hi], one record
// per d passing the sieve. Candidate polynomials are recomputed natively; class
// groups only attach when the fixtures know the selected candidate.
std::vector<ScanRecord> scan(long long d_lo, long long d_hi, long long a_max = 1000,
                             long long b_max = 100, const FixtureSet* fixtures = nullptr,
                             const std::optional<StructureFilter>& filter = std::nullopt,
                             long long bound = kDefaultDiscriminantBound);

// Number of ambiguous classes (h_k * prod_e) / (deg * unit_index); throws
// std::domain_error when the quotient is not a positive integer.
long long chevalley_fixed_points(long long h_k, long long prod_e, long long deg,
                                 long long unit_index);

struct VerificationReport {
  long long d = 0;
  std::vector<std::string> failures;  // empty means the record verified
  std::vector<std::string> notes;
  bool in_hypothesis = false;         // sieve verdict for this d
  std::optional<int> n;               // v_3 of the class-group order
  std::optional<int> r_minus, R_minus;  // 3-ranks downstairs and upstairs
  std::optional<bool> rh;             // p-rank genus-formula verdict
  std::optional<int> bucket;

  bool pass() const { return failures.empty(); }
};

// Re-derives everything derivable about a fixture record and checks it against
// the stored values: class data consistency, the recomputed polynomials, the
// admissible-shape classification of the 3-part, and the genus-formula verdict.
// Requires rec.class_group.
VerificationReport verify_fixture(const ScanRecord& rec,
                                  long long bound = kDefaultDiscriminantBound);

// Script for an external computer-algebra system that computes the class group
// of the field cut out by rec.P and prints it as "[order, [c_1, ..., c_k]]" on
// one line. Byte-stable for identical records. Throws without P.
std::string emit_oracle_script(const ScanRecord& rec);
void emit_oracle_script_file(const ScanRecord& rec, const std::string& path);

// Table-style rendering, one block per record ordered by d; records parse back
// with parse_records (round trip). Header only for an empty list.
std::string format_report(const std::vector<ScanRecord>& records);

// Reads both the report layout and the compact fixture line format
// (d=.. a=.. b=.. hm=.. h=.. P=c12,...,c0 class=order:c1,c2,...).
std::vector<ScanRecord> parse_records(std::istream& in);
std::vector<ScanRecord> parse_records_file(const std::string& path);
FixtureSet load_fixtures(const std::string& path);

}  // namespace rh3

#endif
