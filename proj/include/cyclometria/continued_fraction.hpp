#pragma once

#include <string>
#include <vector>

#include "cyclometria/rational.hpp"

namespace cyclometria {

struct CFExpansion {
  std::vector<BigInt> terms;             // a_0; a_1, a_2, ...
  std::vector<BigRational> convergents;  // p_k / q_k
};

/// Exact expansion of a rational.
CFExpansion continued_fraction(const BigRational& r);

/// First k terms of pi. Each term is taken only when the current pi
/// enclosure pins it down; otherwise the working precision is doubled and
/// the extraction restarts. The result does not depend on start_digits.
/// Throws PrecisionCeilingError at the oracle's ceiling.
CFExpansion pi_continued_fraction(std::size_t k, unsigned start_digits = 64);

/// Convergents from terms via p_k = a_k p_{k-1} + p_{k-2}.
std::vector<BigRational> convergents_from_terms(const std::vector<BigInt>& terms);

enum class BoundClass { Convergent, Semiconvergent, Other };

std::string to_string(BoundClass c);

/// Semiconvergents are (j p_{k-1} + p_{k-2}) / (j q_{k-1} + q_{k-2}) for
/// 1 <= j < a_k, every such j included (no half-term rule). Throws
/// std::invalid_argument unless the expansion's last convergent has a larger
/// denominator than r.
BoundClass classify_bound(const BigRational& r, const CFExpansion& cf);

}  // namespace cyclometria
