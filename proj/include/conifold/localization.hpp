#pragma once

#include "conifold/vertex.hpp"
#include "conifold/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conifold {

/**
 * The localization weight of a tangent character: the product over its
 * terms of (linear weight)^(-coefficient), evaluated at a specialization.
 * Throws ZeroWeight if any contributing weight evaluates to zero (the
 * specialization is not generic enough).
 */
Rational euler_weight(const TangentCharacter& t, const Specialization& spec);

/// A truncated generating series in q with exact rational coefficients,
/// indexed 0..max_order.  Equality compares the coefficient lists; rank
/// and twist ride along as metadata.
struct Series {
    int rank = 0;
    int twist = 0;
    int max_order = 0;
    std::vector<Rational> coefficients;

    std::string str() const;
    friend bool operator==(const Series&, const Series&);
};

/// Product of two truncated series (orders capped at max_order).
Series mul_truncated(const Series& a, const Series& b, int max_order);
/// Integer power of a truncated series.
Series pow_truncated(const Series& a, int e, int max_order);

/**
 * The degree-1 invariant series computed from first principles: for each
 * order k <= max_order, sum the localization weights of every fixed
 * configuration of total length k.
 */
Series vertex_series(const LocalP1Config& config, int max_order, const Specialization& spec,
                     const VertexOptions& opts = {});

/**
 * The reference closed form (1+q)^{-r(n+1)}: coefficient of q^k is
 * (-1)^k * C(r(n+1)+k-1, k).
 */
Series closed_form_series(int rank, int twist, int max_order);

/**
 * Draws a random cy-constrained specialization (s1+s2+s3 = 0) with small
 * integer entries, rejecting any draw that kills a weight of some fixed
 * configuration of total length <= max_order.  Throws ZeroWeight if no
 * generic draw is found within the attempt budget.
 */
Specialization draw_generic_cy(const LocalP1Config& config, int max_order, std::uint64_t seed,
                               const VertexOptions& opts = {});

/**
 * Recomputes the series at several independently drawn generic
 * specializations and checks they agree; returns the common series.
 */
Series check_specialization_independence(const LocalP1Config& config, int max_order,
                                         int num_draws, std::uint64_t seed,
                                         const VertexOptions& opts = {});

/// Which way to read the ambiguous product in the printed rank-2 weight
/// formula: the running product covering only the first summand of the
/// numerator/denominator bracket, or the whole bracket.
enum class DiagnosticReading { product_outside, product_inside };

/// Pipeline weights of one splitting class: every configuration whose
/// component totals are (d1, d2), summed, next to the closed two-factor
/// bracket for that splitting in both readings.
struct DiagnosticGroup {
    int d1 = 0;
    int d2 = 0;
    Rational pipeline_sum;
    Rational bracket_outside;
    Rational bracket_inside;
};

/// One row of the rank-2 closed-weight comparison at a given order.
struct DiagnosticRow {
    int order = 0;
    Rational pipeline_total;
    Rational formula_outside;
    Rational formula_inside;
    bool outside_matches = false;
    bool inside_matches = false;
    std::vector<DiagnosticGroup> groups;
};

struct DiagnosticReport {
    std::vector<DiagnosticRow> rows;
    /// True when neither reading reproduces the pipeline at some order.
    bool ambiguous = false;
    std::string str() const;
};

/**
 * Rank-2 only: evaluates the closed per-order weight formula (the product
 * over splittings d1+d2 = k of a two-factor bracket) in both readings and
 * compares against the localization pipeline totals.
 */
DiagnosticReport weight_product_diagnostic(const LocalP1Config& config, int max_order,
                                           const Specialization& spec,
                                           const VertexOptions& opts = {});

} // namespace conifold
