#include "rh3/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rh3/integers.hpp"
#include "rh3/module.hpp"

namespace rh3 {

AbelianStructure ClassGroupData::three_part() const {
  std::vector<long long> parts;
  for (long long c : cyclic_factors) {
    long long q = 1;
    while (c % 3 == 0) {
      c /= 3;
      q *= 3;
    }
    if (q > 1) parts.push_back(q);
  }
  return AbelianStructure(parts);
}

int ClassGroupData::valuation3() const {
  mpz_class o = order;
  int v = 0;
  while (o != 0 && mpz_divisible_ui_p(o.get_mpz_t(), 3)) {
    o /= 3;
    ++v;
  }
  return v;
}

bool ClassGroupData::consistent() const {
  mpz_class prod = 1;
  for (long long c : cyclic_factors) prod *= to_mpz(c);
  return prod == order;
}

std::string ClassGroupData::to_string() const {
  std::ostringstream os;
  os << "[" << order.get_str() << ", [";
  for (size_t i = 0; i < cyclic_factors.size(); ++i) {
    if (i) os << ", ";
    os << cyclic_factors[i];
  }
  os << "]]";
  return os.str();
}

bool ScanRecord::operator==(const ScanRecord& o) const {
  return d == o.d && candidate == o.candidate && h_minus == o.h_minus && h_plus == o.h_plus &&
         Q == o.Q && P == o.P && class_group == o.class_group && bucket == o.bucket &&
         note == o.note;
}

const ScanRecord* FixtureSet::find(long long d) const {
  for (const auto& r : records)
    if (r.d == d) return &r;
  return nullptr;
}

const ClassGroupData* FixtureSet::class_group_for(long long d, long long a, long long b) const {
  for (const auto& r : records)
    if (r.d == d && r.candidate && r.candidate->a == a && r.candidate->b == b && r.class_group)
      return &*r.class_group;
  return nullptr;
}

bool StructureFilter::admits(const ClassGroupData& g) const {
  return !exact_3_valuation || g.valuation3() == *exact_3_valuation;
}

std::optional<KummerCandidate> select_candidate(long long d, long long a_max, long long b_max,
                                                const FixtureSet* fixtures,
                                                const std::optional<StructureFilter>& filter,
                                                std::string* note) {
  auto append_note = [&](const std::string& msg) {
    if (!note) return;
    if (!note->empty()) *note += "; ";
    *note += msg;
  };
  auto candidates = search_alpha(d, a_max, b_max);
  for (const auto& c : candidates) {
    if (filter) {
      const ClassGroupData* g =
          fixtures ? fixtures->class_group_for(d, c.a, c.b) : nullptr;
      if (!g) continue;  // class group unknown, filter untestable
      if (!filter->admits(*g)) continue;
    }
    if (has_rational_prime_divisor(c)) {
      std::ostringstream os;
      os << "skipped (a,b)=(" << c.a << "," << c.b << "): rational prime divides the generator";
      append_note(os.str());
      continue;
    }
    PlausibilityReport rep = plausibility_check(compositum(build_sextic(c)));
    if (!rep.squarefree) {
      std::ostringstream os;
      os << "skipped (a,b)=(" << c.a << "," << c.b << "): degenerate compositum";
      append_note(os.str());
      continue;
    }
    return c;
  }
  if (candidates.empty())
    append_note("no cube-norm candidate in the box");
  else if (filter)
    append_note("no candidate with known class data passes the filter");
  else
    append_note("all candidates skipped");
  return std::nullopt;
}

std::vector<ScanRecord> scan(long long d_lo, long long d_hi, long long a_max, long long b_max,
                             const FixtureSet* fixtures,
                             const std::optional<StructureFilter>& filter, long long bound) {
  std::vector<ScanRecord> out;
  if (d_lo > d_hi) return out;
  long long start = std::max<long long>(4, d_lo);
  long long d = start + (((1 - start % 3) % 3) + 3) % 3;
  for (; d <= d_hi; d += 3) {
    FieldDossier dossier = hypothesis_check(d, bound);
    if (!dossier.passes_sieve()) continue;
    ScanRecord rec;
    rec.d = d;
    rec.h_minus = dossier.h_minus;
    rec.h_plus = dossier.h_plus;
    auto c = select_candidate(d, a_max, b_max, fixtures, filter, &rec.note);
    if (c) {
      rec.candidate = c;
      rec.Q = build_sextic(*c);
      rec.P = compositum(*rec.Q);
      if (fixtures)
        if (const ClassGroupData* g = fixtures->class_group_for(d, c->a, c->b)) {
          rec.class_group = *g;
          AbelianStructure s = g->three_part();
          if (is_theorem_admissible(s)) rec.bucket = (g->valuation3() - 1) / 2;
        }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

long long chevalley_fixed_points(long long h_k, long long prod_e, long long deg,
                                 long long unit_index) {
  if (h_k <= 0 || prod_e <= 0 || deg <= 0 || unit_index <= 0)
    throw std::invalid_argument("chevalley_fixed_points: inputs must be positive");
  long long num = h_k * prod_e;
  long long den = deg * unit_index;
  if (num % den != 0)
    throw std::domain_error("chevalley_fixed_points: non-integral count of ambiguous classes");
  return num / den;
}

VerificationReport verify_fixture(const ScanRecord& rec, long long bound) {
  if (!rec.class_group) throw std::invalid_argument("verify_fixture: record has no class group");
  VerificationReport rep;
  rep.d = rec.d;
  auto fail = [&](const std::string& m) { rep.failures.push_back(m); };
  auto notef = [&](const std::string& m) { rep.notes.push_back(m); };

  FieldDossier dossier = hypothesis_check(rec.d, bound);
  rep.in_hypothesis = dossier.passes_sieve();
  if (!dossier.squarefree_ok) fail("d not squarefree prime to 3");
  if (!dossier.congruence_ok) {
    std::ostringstream os;
    os << "outside the congruence condition: d = " << ((rec.d % 3) + 3) % 3 << " (mod 3)";
    notef(os.str());
  }
  if (rec.h_minus && dossier.h_minus != rec.h_minus) {
    std::ostringstream os;
    os << "h- mismatch: recomputed " << (dossier.h_minus ? *dossier.h_minus : -1) << ", stored "
       << *rec.h_minus;
    fail(os.str());
  }
  if (rec.h_plus && dossier.h_plus != rec.h_plus) {
    std::ostringstream os;
    os << "h+ mismatch: recomputed " << (dossier.h_plus ? *dossier.h_plus : -1) << ", stored "
       << *rec.h_plus;
    fail(os.str());
  }

  std::optional<IntegerPolynomial> P;
  if (!rec.candidate) {
    fail("no candidate recorded");
  } else {
    const KummerCandidate& c = *rec.candidate;
    auto rebuilt = make_candidate(c.d, c.a, c.b);
    if (!rebuilt) {
      fail("recorded (a,b) is not coprime with perfect-cube norm");
    } else {
      if (!(*rebuilt == c) || rebuilt->T != c.T || rebuilt->N != c.N)
        fail("recorded candidate disagrees with the (a,b) formulas");
      if (c.a > 1000 || c.b > 100) notef("candidate lies outside the default search box");
      IntegerPolynomial Q = build_sextic(*rebuilt);
      if (rec.Q && !(Q == *rec.Q)) fail("sextic mismatch");
      P = compositum(Q);
      if (rec.P) {
        if (!(*P == *rec.P)) fail("polynomial mismatch against the stored coefficients");
      } else {
        notef("no stored polynomial; recomputed one used");
      }
      PlausibilityReport pl = plausibility_check(*P);
      if (!pl.pass()) fail("recomputed polynomial fails the plausibility screen");
    }
  }

  const ClassGroupData& g = *rec.class_group;
  if (!g.consistent()) fail("class-group order differs from the product of its factors");
  const AbelianStructure s = g.three_part();
  const int v3 = g.valuation3();
  rep.n = v3;
  long long pow3 = 1;
  for (int i = 0; i < v3; ++i) pow3 *= 3;
  if (s.order() != pow3)
    fail("3-part of the factors does not carry the full 3-valuation of the order");

  rep.R_minus = s.rank();
  if (dossier.cl_minus_structure)
    rep.r_minus = dossier.cl_minus_structure->p_part(3).rank();
  if (rep.r_minus && rep.R_minus) rep.rh = riemann_hurwitz_holds(*rep.r_minus, *rep.R_minus, 3);

  // The structural consequences (admissible family, bucket, fixed-by-conjugation
  // reading of the genus formula) only follow when 3 divides h- exactly once and
  // not h+; the congruence class of d does not enter them.
  if (dossier.class_number_ok) {
    if (!is_theorem_admissible(s)) {
      fail("3-part " + s.to_string() + " is outside the admissible family");
    } else {
      if (!is_module_realizable(s, 3)) fail("admissible 3-part not realizable as a cyclic module");
      if (v3 % 2 == 0) fail("admissible 3-part with even length");
      if (!(s == cyclic_module_structure(3, v3)))
        fail("3-part differs from the cyclic-module structure of its length");
      rep.bucket = (v3 - 1) / 2;
      if (rec.bucket && *rec.bucket != *rep.bucket) fail("stored bucket disagrees");
    }
    if (rep.rh) {
      bool structurally_flat = s == AbelianStructure({3});
      if (*rep.rh != structurally_flat)
        fail("genus-formula verdict inconsistent with the 3-part structure");
      if (*rep.rh) notef("R- = 1: class group fixed by conjugation (Cl_K = Cl_K^G)");
    }
  } else {
    std::ostringstream os;
    os << "outside the class-number condition: v_3(h-) = "
       << (dossier.h_minus ? valuation(*dossier.h_minus, 3) : -1) << ", h+ = "
       << (dossier.h_plus ? *dossier.h_plus : -1);
    notef(os.str());
    notef("3-part " + s.to_string() +
          (is_theorem_admissible(s) ? " (admissible)" : " (outside the admissible family)"));
  }
  return rep;
}

std::string emit_oracle_script(const ScanRecord& rec) {
  if (!rec.P) throw std::invalid_argument("emit_oracle_script: record has no polynomial");
  std::ostringstream os;
  os << "\\\\ class-group oracle for d = " << rec.d << "\n";
  os << "\\\\ prints the class group as [order, [c_1, ..., c_k]] for fixture ingestion\n";
  os << "P = " << to_polynomial_string(*rec.P) << ";\n";
  os << "K = bnfinit(P, 1);\n";
  os << "print(\"[\", K.no, \", \", K.cyc, \"]\");\n";
  os << "quit\n";
  return os.str();
}

void emit_oracle_script_file(const ScanRecord& rec, const std::string& path) {
  std::string text = emit_oracle_script(rec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit_oracle_script_file: cannot open " + path);
  out << text;
  if (!out) throw std::runtime_error("emit_oracle_script_file: write failed for " + path);
}

std::string format_report(const std::vector<ScanRecord>& records) {
  std::vector<const ScanRecord*> order;
  order.reserve(records.size());
  for (const auto& r : records) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const ScanRecord* x, const ScanRecord* y) { return x->d < y->d; });
  std::ostringstream os;
  os << "cube-norm candidate report\n";
  os << "--------------------------\n";
  for (const ScanRecord* rp : order) {
    const ScanRecord& r = *rp;
    os << "\n";
    os << "d = " << r.d << "\n";
    if (r.candidate) {
      os << "a= " << r.candidate->a << ", b= " << r.candidate->b;
      if (r.h_minus) os << ", #Cl_{k-}=" << *r.h_minus;
      if (r.h_plus) os << ", #Cl_{k+}=" << *r.h_plus;
      os << "\n";
    } else {
      if (r.h_minus && r.h_plus)
        os << "#Cl_{k-}=" << *r.h_minus << ", #Cl_{k+}=" << *r.h_plus << "\n";
      os << "no candidate\n";
    }
    if (r.P) os << "P = " << to_polynomial_string(*r.P) << "\n";
    if (r.class_group) os << "class group : " << r.class_group->to_string() << "\n";
    if (r.bucket) os << "bucket : " << *r.bucket << "\n";
    if (!r.note.empty()) os << "note : " << r.note << "\n";
  }
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// "d = 211" -> "d=211" so both layouts tokenize the same way
std::string collapse_equals(const std::string& s) {
  std::string out;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '=') {
      while (!out.empty() && out.back() == ' ') out.pop_back();
      out += '=';
      ++i;
      while (i < s.size() && s[i] == ' ') ++i;
    } else {
      out += s[i++];
    }
  }
  return out;
}

ClassGroupData parse_bracket_class_group(const std::string& text) {
  // "[18711, [2079, 9]]"
  ClassGroupData g;
  size_t open = text.find('[');
  size_t comma = text.find(',', open);
  if (open == std::string::npos || comma == std::string::npos)
    throw std::runtime_error("malformed class group: " + text);
  g.order = mpz_class(trim(text.substr(open + 1, comma - open - 1)));
  size_t inner = text.find('[', comma);
  size_t close = text.find(']', inner);
  if (inner == std::string::npos || close == std::string::npos)
    throw std::runtime_error("malformed class group: " + text);
  std::string list = text.substr(inner + 1, close - inner - 1);
  std::istringstream is(list);
  std::string item;
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (!item.empty()) g.cyclic_factors.push_back(std::stoll(item));
  }
  return g;
}

ClassGroupData parse_colon_class_group(const std::string& text) {
  // "18711:2079,9"
  size_t colon = text.find(':');
  if (colon == std::string::npos) throw std::runtime_error("malformed class field: " + text);
  ClassGroupData g;
  g.order = mpz_class(trim(text.substr(0, colon)));
  std::istringstream is(text.substr(colon + 1));
  std::string item;
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (!item.empty()) g.cyclic_factors.push_back(std::stoll(item));
  }
  return g;
}

struct RecordBuilder {
  std::optional<long long> d, a, b, hm, hp;
  std::optional<IntegerPolynomial> P;
  std::optional<ClassGroupData> cg;
  std::optional<int> bucket;
  std::string note;

  bool open() const { return d.has_value(); }

  ScanRecord finalize() const {
    ScanRecord rec;
    rec.d = *d;
    if (a && b) {
      auto c = make_candidate(*d, *a, *b);
      if (!c) {
        std::ostringstream os;
        os << "record d=" << *d << ": (a,b)=(" << *a << "," << *b
           << ") is not a coprime pair with perfect-cube norm";
        throw std::runtime_error(os.str());
      }
      rec.candidate = c;
      rec.Q = build_sextic(*c);
    }
    rec.h_minus = hm;
    rec.h_plus = hp;
    rec.P = P;
    rec.class_group = cg;
    rec.bucket = bucket;
    rec.note = note;
    return rec;
  }
};

}  // namespace

std::vector<ScanRecord> parse_records(std::istream& in) {
  std::vector<ScanRecord> out;
  RecordBuilder cur;
  auto flush = [&]() {
    if (cur.open()) out.push_back(cur.finalize());
    cur = RecordBuilder{};
  };
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    if (line.starts_with("class group")) {
      size_t colon = line.find(':');
      if (colon == std::string::npos) throw std::runtime_error("malformed line: " + line);
      cur.cg = parse_bracket_class_group(line.substr(colon + 1));
      continue;
    }
    if (line.starts_with("bucket")) {
      size_t sep = line.find_first_of(":=");
      if (sep == std::string::npos) throw std::runtime_error("malformed line: " + line);
      cur.bucket = std::stoi(trim(line.substr(sep + 1)));
      continue;
    }
    if (line.starts_with("note")) {
      size_t sep = line.find(':');
      if (sep == std::string::npos) throw std::runtime_error("malformed line: " + line);
      cur.note = trim(line.substr(sep + 1));
      continue;
    }
    if (line.starts_with("no candidate")) continue;  // note carries the reason
    if (line[0] == 'P' && line.find('x') != std::string::npos) {
      size_t eq = line.find('=');
      if (eq == std::string::npos) throw std::runtime_error("malformed line: " + line);
      cur.P = parse_polynomial_string(line.substr(eq + 1));
      continue;
    }
    // token layout: whitespace-separated key=value, commas trailing tokens allowed
    std::istringstream ts(collapse_equals(line));
    std::string tok;
    while (ts >> tok) {
      while (!tok.empty() && tok.back() == ',') tok.pop_back();
      size_t eq = tok.find('=');
      if (eq == std::string::npos) continue;  // prose line (header rule etc.)
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "d") {
        flush();
        cur.d = std::stoll(val);
      } else if (key == "a") {
        cur.a = std::stoll(val);
      } else if (key == "b") {
        cur.b = std::stoll(val);
      } else if (key == "hm" || key == "#Cl_{k-}") {
        cur.hm = std::stoll(val);
      } else if (key == "h" || key == "#Cl_{k+}") {
        cur.hp = std::stoll(val);
      } else if (key == "P") {
        cur.P = parse_coeff_list(val);
      } else if (key == "class") {
        cur.cg = parse_colon_class_group(val);
      } else if (key == "bucket") {
        cur.bucket = std::stoi(val);
      } else {
        throw std::runtime_error("unknown field '" + key + "' in line: " + line);
      }
    }
  }
  flush();
  return out;
}

std::vector<ScanRecord> parse_records_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_records(in);
}

FixtureSet load_fixtures(const std::string& path) {
  FixtureSet set;
  set.records = parse_records_file(path);
  std::stable_sort(set.records.begin(), set.records.end(),
                   [](const ScanRecord& x, const ScanRecord& y) { return x.d < y.d; });
  return set;
}

}  // namespace rh3
