#include "cyclometria/continued_fraction.hpp"

#include <stdexcept>

#include "cyclometria/pi_oracle.hpp"

namespace cyclometria {

std::string to_string(BoundClass c) {
  switch (c) {
    case BoundClass::Convergent: return "Convergent";
    case BoundClass::Semiconvergent: return "Semiconvergent";
    case BoundClass::Other: return "Other";
  }
  return "?";
}

std::vector<BigRational> convergents_from_terms(const std::vector<BigInt>& terms) {
  std::vector<BigRational> out;
  BigInt p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
  BigInt p_prev2 = 0, q_prev2 = 1;  // p_{-2}, q_{-2}
  for (const BigInt& a : terms) {
    BigInt p = a * p_prev + p_prev2;
    BigInt q = a * q_prev + q_prev2;
    out.emplace_back(p, q);
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
  }
  return out;
}

CFExpansion continued_fraction(const BigRational& r) {
  CFExpansion cf;
  BigInt num = r.num();
  BigInt den = r.den();
  while (den != 0) {
    BigInt a = floor_div(num, den);
    cf.terms.push_back(a);
    BigInt rem = num - a * den;
    num = den;
    den = rem;
  }
  cf.convergents = convergents_from_terms(cf.terms);
  return cf;
}

CFExpansion pi_continued_fraction(std::size_t k, unsigned start_digits) {
  if (k < 1) throw std::invalid_argument("pi_continued_fraction: k must be >= 1");
  PiOracle& oracle = default_pi_oracle();
  for (unsigned digits = start_digits;; digits *= 2) {
    if (digits > oracle.options().max_digits) {
      throw PrecisionCeilingError("pi_continued_fraction: precision ceiling reached before " + std::to_string(k) +
                                  " terms");
    }
    Enclosure pi = oracle.enclosure(digits);
    // The tail x_j lies strictly inside (lo, hi); after taking a = floor,
    // 1/(x - a) lies in (1/(hi - a), 1/(lo - a)).
    BigRational lo = pi.lo().to_rational();
    BigRational hi = pi.hi().to_rational();
    std::vector<BigInt> terms;
    while (terms.size() < k) {
      BigInt a = lo.floor();
      if (a != hi.floor() || a < (terms.empty() ? 0 : 1)) break;
      BigRational lo_tail = lo - a;
      BigRational hi_tail = hi - a;
      terms.push_back(a);
      if (terms.size() == k) break;
      if (lo_tail.sign() == 0) break;
      BigRational next_lo = hi_tail.reciprocal();
      BigRational next_hi = lo_tail.reciprocal();
      lo = next_lo;
      hi = next_hi;
    }
    if (terms.size() == k) return CFExpansion{terms, convergents_from_terms(terms)};
  }
}

BoundClass classify_bound(const BigRational& r, const CFExpansion& cf) {
  if (cf.convergents.empty() || cf.convergents.back().den() <= r.den()) {
    throw std::invalid_argument("classify_bound: expansion too short for denominator " + r.den().get_str());
  }
  for (const auto& c : cf.convergents) {
    if (c == r) return BoundClass::Convergent;
  }
  // Between p_{k-2}/q_{k-2} and p_k/q_k the semiconvergents have denominators
  // j q_{k-1} + q_{k-2}; solve for j directly.
  for (std::size_t k = 1; k < cf.terms.size(); ++k) {
    BigInt p1 = cf.convergents[k - 1].num(), q1 = cf.convergents[k - 1].den();
    BigInt p2 = k >= 2 ? cf.convergents[k - 2].num() : BigInt(1);
    BigInt q2 = k >= 2 ? cf.convergents[k - 2].den() : BigInt(0);
    BigInt offset = r.den() - q2;
    if (offset <= 0 || offset % q1 != 0) continue;
    BigInt j = offset / q1;
    if (j < 1 || j >= cf.terms[k]) continue;
    if (BigInt(j * p1 + p2) == r.num() && BigInt(j * q1 + q2) == r.den()) return BoundClass::Semiconvergent;
  }
  return BoundClass::Other;
}

}  // namespace cyclometria
