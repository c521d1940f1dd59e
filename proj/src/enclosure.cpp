#include "cyclometria/enclosure.hpp"

#include <algorithm>

namespace cyclometria {

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Greater: return "Greater";
    case Ordering::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Enclosure::Enclosure(FixedDecimal lo, FixedDecimal hi) {
  unsigned s = std::max(lo.scale(), hi.scale());
  lo_ = lo.widened(s);
  hi_ = hi.widened(s);
  if (lo_ > hi_) throw std::invalid_argument("Enclosure: lo > hi");
}

bool Enclosure::contains(const BigRational& r) const { return (lo_ <=> r) <= 0 && (hi_ <=> r) >= 0; }

bool Enclosure::contains(const Enclosure& inner) const { return lo_ <= inner.lo_ && inner.hi_ <= hi_; }

bool Enclosure::overlaps(const Enclosure& other) const { return !(hi_ < other.lo_ || other.hi_ < lo_); }

Enclosure Enclosure::outward(unsigned new_scale) const {
  return Enclosure(lo_.floored(new_scale), hi_.ceiled(new_scale));
}

std::optional<FixedDecimal> Enclosure::common_truncation(unsigned scale) const {
  // Truncation is toward zero, so an enclosure touching zero from both sides
  // cannot be certified by its ends alone.
  if (lo_.sign() < 0 && hi_.sign() > 0) return std::nullopt;
  FixedDecimal a = lo_.truncated(scale);
  FixedDecimal b = hi_.truncated(scale);
  if (!a.identical(b)) return std::nullopt;
  return a;
}

std::optional<FixedDecimal> Enclosure::common_rounding(unsigned scale) const {
  if (lo_.sign() < 0 && hi_.sign() > 0) return std::nullopt;
  FixedDecimal a = lo_.rounded(scale);
  FixedDecimal b = hi_.rounded(scale);
  if (!a.identical(b)) return std::nullopt;
  return a;
}

std::optional<BigInt> Enclosure::common_floor() const {
  BigInt a = lo_.floored(0).mantissa();
  BigInt b = hi_.floored(0).mantissa();
  if (a != b) return std::nullopt;
  return a;
}

std::string Enclosure::to_string() const { return "[" + lo_.to_string() + ", " + hi_.to_string() + "]"; }

Enclosure enclose(const BigRational& r, unsigned scale) {
  BigInt scaled = r.num() * pow10(scale);
  return Enclosure(FixedDecimal(floor_div(scaled, r.den()), scale), FixedDecimal(ceil_div(scaled, r.den()), scale));
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) { return Enclosure(a.lo() + b.lo(), a.hi() + b.hi()); }

Enclosure operator-(const Enclosure& a, const Enclosure& b) { return Enclosure(a.lo() - b.hi(), a.hi() - b.lo()); }

Enclosure operator-(const Enclosure& a) { return Enclosure(-a.hi(), -a.lo()); }

Enclosure operator+(const Enclosure& a, const BigRational& r) {
  Enclosure e = enclose(r, a.scale());
  return a + e;
}

Enclosure operator-(const BigRational& r, const Enclosure& a) { return enclose(r, a.scale()) - a; }

Enclosure operator-(const Enclosure& a, const BigRational& r) { return a - enclose(r, a.scale()); }

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  FixedDecimal products[] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  auto [mn, mx] = std::minmax_element(std::begin(products), std::end(products));
  return Enclosure(*mn, *mx);
}

Enclosure sqrt(const Enclosure& v, unsigned scale) {
  if (v.lo().sign() < 0) throw std::domain_error("sqrt: enclosure reaches below zero");
  FixedDecimal lo = fd_sqrt(v.lo(), scale);
  FixedDecimal hi = fd_sqrt(v.hi(), scale);
  // fd_sqrt truncates; the true root of hi is below hi + ulp.
  if (!(hi * hi == v.hi())) hi = hi + hi.ulp();
  return Enclosure(lo, hi);
}

Enclosure reciprocal(const Enclosure& v, unsigned scale) {
  if (v.lo().sign() <= 0) throw std::domain_error("reciprocal: enclosure not strictly positive");
  BigRational lo = v.hi().to_rational().reciprocal();
  BigRational hi = v.lo().to_rational().reciprocal();
  return Enclosure(enclose(lo, scale).lo(), enclose(hi, scale).hi());
}

Ordering compare(const Enclosure& v, const BigRational& r) {
  if ((v.hi() <=> r) < 0) return Ordering::Less;
  if ((v.lo() <=> r) > 0) return Ordering::Greater;
  return Ordering::Inconclusive;
}

Ordering compare(const Enclosure& a, const Enclosure& b) {
  if (a.hi() < b.lo()) return Ordering::Less;
  if (a.lo() > b.hi()) return Ordering::Greater;
  return Ordering::Inconclusive;
}

namespace {

template <typename Extract>
auto certify(const RealEvaluator& value, unsigned start, unsigned max_scale, Extract extract) {
  for (unsigned working = start;; working = working * 2) {
    if (working > max_scale) {
      throw PrecisionCeilingError("precision ceiling of " + std::to_string(max_scale) + " digits reached");
    }
    if (auto result = extract(value(working))) return *result;
  }
}

}  // namespace

FixedDecimal certified_truncation(const RealEvaluator& value, unsigned scale, unsigned max_scale) {
  return certify(value, std::max(scale + 4, 32u), max_scale,
                 [scale](const Enclosure& e) { return e.common_truncation(scale); });
}

FixedDecimal certified_rounding(const RealEvaluator& value, unsigned scale, unsigned max_scale) {
  return certify(value, std::max(scale + 4, 32u), max_scale,
                 [scale](const Enclosure& e) { return e.common_rounding(scale); });
}

BigInt certified_floor(const RealEvaluator& value, unsigned max_scale) {
  return certify(value, 32u, max_scale, [](const Enclosure& e) { return e.common_floor(); });
}

}  // namespace cyclometria
