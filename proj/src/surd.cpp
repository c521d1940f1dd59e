#include "cyclometria/surd.hpp"

namespace cyclometria {

int Surd3::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and 3 b^2 wins.
  auto c = a_ * a_ <=> BigRational(3) * b_ * b_;
  return c > 0 ? sa : sb;
}

Enclosure Surd3::enclose(unsigned scale) const {
  // sqrt(3) in [s, s + 1] * 10^-w from one integer root; w leaves room for
  // the magnification by |b|.
  unsigned w = scale + 2 + static_cast<unsigned>(b_.abs().ceil().get_str().size());
  BigInt s = integer_sqrt_floor(BigInt(3 * pow10(2 * w)));
  BigRational root_lo(s, pow10(w));
  BigRational root_hi(BigInt(s + 1), pow10(w));
  BigRational lo = a_ + b_ * (b_.sign() >= 0 ? root_lo : root_hi);
  BigRational hi = a_ + b_ * (b_.sign() >= 0 ? root_hi : root_lo);
  return Enclosure(cyclometria::enclose(lo, scale + 1).lo(), cyclometria::enclose(hi, scale + 1).hi());
}

std::string Surd3::to_string() const {
  if (b_.sign() == 0) return a_.to_string();
  std::string surd = b_.abs().to_string() + "√3";
  if (a_.sign() == 0) return (b_.sign() < 0 ? "-" : "") + surd;
  return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + surd;
}

Enclosure sqrt_enclosure(const Surd3& v, unsigned scale) {
  return sqrt(v.enclose(scale + 2), scale + 1);
}

}  // namespace cyclometria
