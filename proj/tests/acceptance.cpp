// Acceptance checks 1-8. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyclometria/audit.hpp"
#include "cyclometria/cli.hpp"
#include "cyclometria/constructions.hpp"
#include "cyclometria/continued_fraction.hpp"
#include "cyclometria/examen.hpp"
#include "cyclometria/pi_oracle.hpp"
#include "cyclometria/synthesis.hpp"
#include "euler_pi.hpp"

using namespace cyclometria;

namespace {

struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) {
      std::ostringstream os;
      os << what << ": got " << actual << ", expected " << expected;
      failures.push_back(os.str());
    }
  }
};

std::string str(const BigInt& v) { return v.get_str(); }

const AuditFinding* find(const AuditReport& r, const std::string& id) {
  for (const auto& f : r.findings) {
    if (f.location == id) return &f;
  }
  return nullptr;
}

void chain_reproduction(Check& c) {
  Chain chain = generate_chain(4);
  const long long originators[] = {15, 4697, 5548, 14774};
  const char* pairs[][4] = {
      {"106", "333", "113", "355"},
      {"530762", "1667438", "530875", "1667793"},
      {"2945294501", "9252915567", "2945825376", "9254583360"},
      {"43521624105025", "136727214560643", "43524569930401", "136736469144003"},
  };
  c.equal(chain.steps.size(), std::size_t{4}, "step count");
  for (std::size_t i = 0; i < std::min<std::size_t>(4, chain.steps.size()); ++i) {
    const BoundPair& s = chain.steps[i];
    c.equal(str(s.originator_minor), std::to_string(originators[i]), "originator " + s.originator_minor_label);
    c.equal(str(s.originator_major), std::to_string(originators[i] + 1), "originator " + s.originator_major_label);
    c.equal(str(s.defective_raw.diameter), pairs[i][0], s.label_minor + " diameter");
    c.equal(str(s.defective_raw.periphery), pairs[i][1], s.label_minor + " periphery");
    c.equal(str(s.excessive_raw.diameter), pairs[i][2], s.label_major + " diameter");
    c.equal(str(s.excessive_raw.periphery), pairs[i][3], s.label_major + " periphery");
  }
}

void pi_oracle(Check& c) {
  // The Archimedes row holds 26 significant digits, the last group 26433
  // being decimal places 21-25.
  std::string row = "314159 26535 89793 23846 26433";
  std::string flat;
  for (char ch : row) {
    if (ch != ' ') flat.push_back(ch);
  }
  c.equal(pi_digits(26), flat, "Archimedes row");
  c.equal(pi_digits(201), oracle::euler_digits(201), "Machin vs Euler, 200 places");
  for (unsigned d = 1; d <= 200; ++d) {
    oracle::Interval iv = oracle::euler_pi(d);
    Enclosure other(FixedDecimal(BigInt(iv.lo.str()), d), FixedDecimal(BigInt(iv.hi.str()), d));
    if (!pi_enclosure(d).overlaps(other)) c.expect(false, "enclosures disjoint at " + std::to_string(d));
  }
}

void examen_reproduction(Check& c) {
  ExamenTable t = examen_table(generate_chain(4));
  AuditReport audit = audit_corpus(load_corpus(CYCLOMETRIA_TEST_CORPUS));
  const std::vector<std::string> labels = {"Bb", "C", "Cc", "D", "Dd", "E", "Ee", "F", "Ff"};
  for (const auto& label : labels) {
    auto row = std::find_if(t.rows.begin(), t.rows.end(), [&](const ExamenRow& r) { return r.label == label; });
    if (row == t.rows.end()) {
      c.expect(false, "missing row " + label);
      continue;
    }
    for (const char* field : {"periph", "dev"}) {
      std::string id = "t2." + label + "." + field;
      const AuditFinding* f = find(audit, id);
      if (!f) {
        c.expect(false, "corpus lacks " + id);
        continue;
      }
      const FixedDecimal& mine = std::string(field) == "periph" ? row->periphery_digits : row->deviation_digits;
      bool reproduced = format_table_digits(mine) == f->printed;
      if (reproduced) continue;
      // Allowed only where the audit documents it: C's defect as a
      // misprint, E's defect at most a convention question.
      bool documented = (id == "t2.C.dev" && f->classification == Classification::PaperMisprint) ||
                        (id == "t2.E.dev" && f->classification != Classification::PaperMisprint &&
                         f->classification != Classification::TranslatorMisprint);
      c.expect(documented, id + ": printed " + f->printed + ", computed " + format_table_digits(mine) + " (" +
                               to_string(f->classification) + ")");
    }
  }
  const AuditFinding* b = find(audit, "t2.B.dev");
  c.expect(b && b->classification == Classification::PaperMisprint, "row B defect classified PaperMisprint");
  const AuditFinding* cdev = find(audit, "t2.C.dev");
  c.expect(cdev && cdev->classification == Classification::PaperMisprint, "row C defect classified PaperMisprint");
}

void audit(Check& c) {
  Corpus corpus = load_corpus(CYCLOMETRIA_TEST_CORPUS);
  AuditReport r = audit_corpus(corpus);
  for (const char* id : {"t1.X", "t1.Xx"}) {
    const AuditFinding* f = find(r, id);
    c.expect(f && f->classification == Classification::PaperMisprint, std::string(id) + " PaperMisprint");
  }
  c.equal(find(r, "t1.X") ? find(r, "t1.X")->computed : "", "5548", "t1.X computed");
  c.equal(find(r, "t1.Xx") ? find(r, "t1.Xx")->computed : "", "5549", "t1.Xx computed");
  std::size_t confirmed = r.counts[Classification::Confirmed];
  c.expect(confirmed * 100 >= r.findings.size() * 80,
           "confirmed " + std::to_string(confirmed) + "/" + std::to_string(r.findings.size()) + " below 80%");
  std::ostringstream o1, o2, e1, e2;
  std::vector<std::string> args = {"audit", "--format", "records", "--deterministic", "--corpus",
                                   CYCLOMETRIA_TEST_CORPUS};
  run(args, o1, e1);
  run(args, o2, e2);
  c.expect(!o1.str().empty() && o1.str() == o2.str(), "audit output not byte-identical across runs");
}

void construction(Check& c) {
  ConstructionReport k = kochanski_construction(15);
  AuditReport r = audit_corpus(load_corpus(CYCLOMETRIA_TEST_CORPUS));
  for (const char* id : {"k.IL", "k.Z"}) {
    const AuditFinding* f = find(r, id);
    c.expect(f && (f->classification == Classification::Confirmed ||
                   f->classification == Classification::ConventionAmbiguity),
             std::string(id) + " not matched under the audit rule");
  }
  const AuditFinding* il = find(r, "k.IL");
  c.equal(il ? il->printed : "", "3 14153 33387 05093", "IL printed row");
  const AuditFinding* z = find(r, "k.Z");
  c.equal(z ? z->printed : "", "5 93148 84700", "Z printed row");
  c.equal(str(k.reciprocal_x), "16859", "floor(1/Z)");
  std::vector<long> years;
  for (long y = 1600; y <= 1700; ++y) {
    if (year_bound_check(y).holds) years.push_back(y);
  }
  c.expect(years == std::vector<long>{1685}, "year bound holds for a year other than 1685 alone");
  c.expect(k.identity_holds, "IL^2 = (120 - 18 sqrt 3)/9");
  auto pts = construction_coordinates();
  Surd3 il2 = squared_distance(point(pts, "I"), point(pts, "L"));
  c.expect(il2 == (Surd3(120) - Surd3(0, 18)) / BigRational(9), "identity from coordinates");
}

void bisection(Check& c) {
  BisectionReport b = bisection_construction(9);
  c.equal(b.periphery.to_string(), "3.141601562", "P");
  c.equal(format_table_digits(b.periphery).substr(0, 10), "314160 156", "P digits");
  c.expect(b.decomposition_sum == make_rational(3217, 1024), "dyadic sum");
  BigRational sum;
  for (const auto& t : b.decomposition) sum += t.value;
  c.expect(sum == make_rational(3217, 1024), "terms sum to 3217/1024");
  c.expect(b.excess_q.lo() > FixedDecimal(8908, 9) && b.excess_q.hi() < FixedDecimal(8910, 9), "Q range");
  c.expect(compare(b.excess_q, defect_z_enclosure(20)) == Ordering::Less, "Q < Z by enclosure");
  c.expect(b.comparison_to_z, "report flags Q < Z");
}

void curious(Check& c) {
  CuriousRatioReport r = curious_ratio();
  c.expect(r.value == BigRational(BigInt(3113) * 3113 + 991, BigInt(3113) * 991), "value");
  c.equal(r.agreeing_digits, 8u, "agreeing digits");
  c.expect(r.excess.lo().sign() > 0, "r > pi");
  c.expect(r.excess.hi() < FixedDecimal(23, 9), "r - pi < 2.3e-8");
}

void properties(Check& c) {
  Chain chain = generate_chain(6);
  for (const auto& s : chain.steps) {
    c.expect(cmp_pi(s.defective()) == Ordering::Less, s.label_minor + " defective");
    c.expect(cmp_pi(s.excessive()) == Ordering::Greater, s.label_major + " excessive");
  }
  std::mt19937_64 rng(1685);
  int parents = 0;
  while (parents < 100) {
    BigInt q = std::uniform_int_distribution<long>(1, 1000000000L)(rng);
    BigInt p = q * 3 + q * 1416 / 10000 + std::uniform_int_distribution<long>(1, 1000)(rng);
    BigRational parent(p, q);
    if (cmp_pi(parent) != Ordering::Greater || parent >= BigRational(4)) continue;
    ++parents;
    BigRational prev(3);
    for (long n = 1; n <= 25; ++n) {
      BigRational f(p * n + 3, q * n + 1);
      if (!(prev < f && f < parent)) c.expect(false, "mediant monotonicity for " + parent.to_string());
      prev = f;
    }
  }
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    std::string digits = std::to_string(std::uniform_int_distribution<unsigned long long>(0, 1ULL << 62)(rng));
    digits += std::to_string(std::uniform_int_distribution<unsigned long long>(0, 1ULL << 62)(rng));
    FixedDecimal x(BigInt(digits), std::uniform_int_distribution<unsigned>(0, 30)(rng));
    unsigned s = std::uniform_int_distribution<unsigned>(0, 30)(rng);
    FixedDecimal r = fd_sqrt(x, s);
    BigRational lo = r.to_rational(), hi = (r + r.ulp()).to_rational();
    if (!(lo * lo <= x.to_rational() && x.to_rational() < hi * hi)) ++bad;
  }
  c.equal(bad, 0, "fd_sqrt bracketing failures");
  CFExpansion cf = pi_continued_fraction(30);
  std::vector<long> head;
  for (std::size_t i = 0; i < 5; ++i) head.push_back(cf.terms[i].get_si());
  c.expect(head == std::vector<long>{3, 7, 15, 1, 292}, "CF terms");
  for (const auto& r : {make_rational(333, 106), make_rational(355, 113)}) {
    c.expect(std::find(cf.convergents.begin(), cf.convergents.end(), r) != cf.convergents.end(),
             r.to_string() + " among convergents");
    c.expect(classify_bound(r, cf) == BoundClass::Convergent, r.to_string() + " classified Convergent");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    void (*run)(Check&);
  };
  const Criterion criteria[] = {
      {1, "chain reproduction", chain_reproduction},
      {2, "pi oracle", pi_oracle},
      {3, "examen reproduction", examen_reproduction},
      {4, "audit", audit},
      {5, "construction", construction},
      {6, "bisection", bisection},
      {7, "curious ratio", curious},
      {8, "property suites", properties},
  };
  int failed = 0;
  auto start = std::chrono::steady_clock::now();
  for (const auto& cr : criteria) {
    Check check;
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = check.failures.empty();
    failed += !ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << cr.number << ": " << cr.title << "\n";
    for (const auto& f : check.failures) std::cout << "       " << f << "\n";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (8 - failed) << "/8 criteria passed in " << secs << " s\n";
  return failed == 0 ? 0 : 1;
}
