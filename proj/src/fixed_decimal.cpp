#include "cyclometria/fixed_decimal.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclometria {
namespace {

BigInt trunc_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Magnitude digits of the mantissa, left-padded so there is at least one
// integer digit.
std::string padded_digits(const FixedDecimal& x) {
  BigInt m = abs(x.mantissa());
  std::string digits = m.get_str();
  if (digits.size() < x.scale() + 1) digits.insert(0, x.scale() + 1 - digits.size(), '0');
  return digits;
}

}  // namespace

FixedDecimal FixedDecimal::widened(unsigned new_scale) const {
  if (new_scale < scale_) throw std::invalid_argument("FixedDecimal::widened: scale would shrink");
  return FixedDecimal(mantissa_ * pow10(new_scale - scale_), new_scale);
}

FixedDecimal FixedDecimal::truncated(unsigned new_scale) const {
  if (new_scale >= scale_) return widened(new_scale);
  return FixedDecimal(trunc_div(mantissa_, pow10(scale_ - new_scale)), new_scale);
}

FixedDecimal FixedDecimal::floored(unsigned new_scale) const {
  if (new_scale >= scale_) return widened(new_scale);
  return FixedDecimal(floor_div(mantissa_, pow10(scale_ - new_scale)), new_scale);
}

FixedDecimal FixedDecimal::ceiled(unsigned new_scale) const {
  if (new_scale >= scale_) return widened(new_scale);
  return FixedDecimal(ceil_div(mantissa_, pow10(scale_ - new_scale)), new_scale);
}

FixedDecimal FixedDecimal::rounded(unsigned new_scale) const {
  if (new_scale >= scale_) return widened(new_scale);
  BigInt divisor = pow10(scale_ - new_scale);
  BigInt magnitude = abs(mantissa_);
  BigInt q = trunc_div(BigInt(magnitude * 2 + divisor), BigInt(divisor * 2));
  return FixedDecimal(mantissa_ < 0 ? BigInt(-q) : q, new_scale);
}

BigRational FixedDecimal::to_rational() const { return BigRational(mantissa_, pow10(scale_)); }

std::string FixedDecimal::to_string() const {
  std::string digits = padded_digits(*this);
  std::string out = mantissa_ < 0 ? "-" : "";
  if (scale_ == 0) return out + digits;
  std::size_t split = digits.size() - scale_;
  return out + digits.substr(0, split) + "." + digits.substr(split);
}

FixedDecimal FixedDecimal::parse(std::string_view text) {
  std::string s(text);
  bool negative = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  unsigned scale = 0;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("FixedDecimal::parse: second decimal point in '" + s + "'");
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++scale;
    } else {
      throw std::invalid_argument("FixedDecimal::parse: unexpected character in '" + s + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("FixedDecimal::parse: no digits in '" + s + "'");
  BigInt m(digits, 10);
  return FixedDecimal(negative ? BigInt(-m) : m, scale);
}

FixedDecimal operator+(const FixedDecimal& a, const FixedDecimal& b) {
  unsigned s = std::max(a.scale_, b.scale_);
  return FixedDecimal(a.widened(s).mantissa_ + b.widened(s).mantissa_, s);
}

FixedDecimal operator-(const FixedDecimal& a, const FixedDecimal& b) {
  unsigned s = std::max(a.scale_, b.scale_);
  return FixedDecimal(a.widened(s).mantissa_ - b.widened(s).mantissa_, s);
}

FixedDecimal operator*(const FixedDecimal& a, const FixedDecimal& b) {
  return FixedDecimal(a.mantissa_ * b.mantissa_, a.scale_ + b.scale_);
}

std::strong_ordering operator<=>(const FixedDecimal& a, const FixedDecimal& b) {
  unsigned s = std::max(a.scale_, b.scale_);
  int c = cmp(a.widened(s).mantissa_, b.widened(s).mantissa_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const FixedDecimal& x) { return os << x.to_string(); }

FixedDecimal decimal_expand(const BigRational& r, unsigned scale) {
  return FixedDecimal(trunc_div(BigInt(r.num() * pow10(scale)), r.den()), scale);
}

BigInt integer_sqrt_floor(const BigInt& n) {
  if (n < 0) throw std::domain_error("integer_sqrt_floor: negative argument");
  if (n < 2) return n;
  // Start above the root: 2^ceil(bits/2) > sqrt(n). Newton's iterates then
  // decrease monotonically to floor(sqrt(n)).
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  BigInt x;
  mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);
  while (true) {
    BigInt y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

FixedDecimal fd_sqrt(const FixedDecimal& x, unsigned scale) {
  if (x.sign() < 0) throw std::domain_error("fd_sqrt: negative argument");
  // floor(x * 10^(2 scale)), then the integer root.
  unsigned target = 2 * scale;
  BigInt radicand = x.scale() <= target ? BigInt(x.mantissa() * pow10(target - x.scale()))
                                        : floor_div(x.mantissa(), pow10(x.scale() - target));
  return FixedDecimal(integer_sqrt_floor(radicand), scale);
}

std::string format_grouped(const FixedDecimal& x, unsigned group) {
  if (group == 0) throw std::invalid_argument("format_grouped: group must be >= 1");
  std::string digits = padded_digits(x);
  std::size_t split = digits.size() - x.scale();
  std::string integer = digits.substr(0, split);
  std::string fraction = digits.substr(split);

  std::string out = x.sign() < 0 ? "-" : "";
  std::size_t lead = integer.size() % group;
  if (lead == 0) lead = group;
  out += integer.substr(0, lead);
  for (std::size_t i = lead; i < integer.size(); i += group) out += " " + integer.substr(i, group);
  if (!fraction.empty()) {
    out += ".";
    for (std::size_t i = 0; i < fraction.size(); i += group) {
      if (i > 0) out += " ";
      out += fraction.substr(i, group);
    }
  }
  return out;
}

FixedDecimal parse_grouped(std::string_view text) {
  std::string compact;
  bool previous_space = false;
  for (char c : text) {
    if (c == ' ') {
      if (compact.empty() || previous_space) {
        throw std::invalid_argument("parse_grouped: misplaced space in '" + std::string(text) + "'");
      }
      previous_space = true;
      continue;
    }
    if (previous_space && c == '.') {
      throw std::invalid_argument("parse_grouped: space before decimal point");
    }
    previous_space = false;
    compact.push_back(c);
  }
  if (previous_space) throw std::invalid_argument("parse_grouped: trailing space");
  return FixedDecimal::parse(compact);
}

std::vector<std::string> table_cells(const FixedDecimal& x, unsigned group) {
  if (group == 0) throw std::invalid_argument("table_cells: group must be >= 1");
  std::string digits = padded_digits(x);
  std::size_t split = digits.size() - x.scale();
  std::vector<std::string> cells;
  std::size_t first = std::min<std::size_t>(digits.size(), split + group);
  cells.push_back(digits.substr(0, first));
  for (std::size_t i = first; i < digits.size(); i += group) cells.push_back(digits.substr(i, group));

  for (auto& cell : cells) {
    std::size_t nz = cell.find_first_not_of('0');
    if (nz == std::string::npos) {
      cell.clear();
      continue;
    }
    cell.erase(0, nz);
    break;
  }
  if (std::all_of(cells.begin(), cells.end(), [](const std::string& c) { return c.empty(); })) {
    cells.back() = "0";
  }
  if (x.sign() < 0) {
    auto it = std::find_if(cells.begin(), cells.end(), [](const std::string& c) { return !c.empty(); });
    it->insert(0, "-");
  }
  return cells;
}

std::string format_table_digits(const FixedDecimal& x, unsigned group) {
  std::string out;
  for (const auto& cell : table_cells(x, group)) {
    if (cell.empty()) continue;
    if (!out.empty()) out += " ";
    out += cell;
  }
  return out;
}

}  // namespace cyclometria
