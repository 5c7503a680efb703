#pragma once

#include "conifold/char_rational.hpp"

#include <cstdint>
#include <vector>

namespace conifold {

/**
 * Exact multivariate division: returns the unique finite character p with
 * p * prod (1 - m_i) = numerator, certifying that the rational character
 * is in fact finite.  Throws NotPolynomial when division leaves a
 * remainder.
 */
CharPoly reduce_to_polynomial(const CharRational& a);

/**
 * Brute-force geometric expansion, the independent oracle for
 * reduce_to_polynomial.
 *
 * Every denominator factor is oriented into the expansion cone of the
 * given variable order (first nonzero exponent positive; negative factors
 * are re-oriented through (1 - m) = -m (1 - m^{-1})), then expanded as a
 * truncated geometric series.  Truncation is by an adaptive positive
 * integer weight vector theta (see expansion_weights): the result keeps
 * exactly the monomials of weight <= max_weight, each with its exact
 * coefficient.
 *
 * An empty order means the default order t1 > t2 > t3 > w1 > ... .
 * Throws NonExpandable when a factor cannot be oriented (unit monomial).
 */
CharPoly expand_to_order(const CharRational& a, std::int64_t max_weight,
                         const std::vector<int>& variable_order = {});

/**
 * The weight vector theta used by expand_to_order for this input: the
 * smallest vector of the family theta_j = B^(position from the back),
 * B in {1, 2, 4, 8, ...}, that gives every (oriented) denominator factor
 * weight >= 1.  Exposed so callers can truncate an exact result by the
 * same functional and compare termwise.
 */
std::vector<std::int64_t> expansion_weights(const CharRational& a,
                                            const std::vector<int>& variable_order = {});

/// Weight of a monomial under theta.
std::int64_t monomial_weight(const Monomial& m, const std::vector<std::int64_t>& theta);

/// The sub-character of terms with theta-weight <= max_weight.
CharPoly truncate_by_weights(const CharPoly& p, const std::vector<std::int64_t>& theta,
                             std::int64_t max_weight);

} // namespace conifold
