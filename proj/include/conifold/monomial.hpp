#pragma once

#include "conifold/context.hpp"
#include "conifold/errors.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace conifold {

/**
 * A character of the torus: an integer exponent vector over
 * (t1, t2, t3, w1, ..., wr).  Exponent arithmetic is checked; overflow
 * throws instead of wrapping.
 *
 * Monomials are ordered lexicographically by exponent vector, which is the
 * canonical term order used throughout the engine.
 */
class Monomial {
public:
    /// The unit monomial (all exponents zero).
    explicit Monomial(const VariableContext& ctx)
        : exponents_(static_cast<std::size_t>(ctx.size()), 0) {}

    /// Monomial with the given exponent vector (length must be 3 + rank).
    explicit Monomial(std::vector<std::int64_t> exponents)
        : exponents_(std::move(exponents)) {
        if (exponents_.size() < 4)
            throw InvalidArgument("Monomial: exponent vector must have length >= 4");
    }

    static Monomial unit(const VariableContext& ctx) { return Monomial(ctx); }

    /// The single variable with 0-based index `index`, raised to `power`.
    static Monomial variable(const VariableContext& ctx, int index, std::int64_t power = 1);

    /// Convenience factories: t1^e, t2^e, t3^e, w_i^e (i is 1-based).
    static Monomial t1(const VariableContext& ctx, std::int64_t e = 1) { return variable(ctx, 0, e); }
    static Monomial t2(const VariableContext& ctx, std::int64_t e = 1) { return variable(ctx, 1, e); }
    static Monomial t3(const VariableContext& ctx, std::int64_t e = 1) { return variable(ctx, 2, e); }
    static Monomial w(const VariableContext& ctx, int i, std::int64_t e = 1);

    int size() const { return static_cast<int>(exponents_.size()); }
    int rank() const { return size() - 3; }

    std::int64_t exponent(int index) const { return exponents_.at(static_cast<std::size_t>(index)); }
    const std::vector<std::int64_t>& exponents() const { return exponents_; }

    bool is_unit() const;

    /// Product of characters: exponent vectors add (checked).
    Monomial times(const Monomial& other) const;

    /// Inverse character: every exponent negated.
    Monomial inverse() const;

    /// this^e (e may be negative).
    Monomial pow(std::int64_t e) const;

    /// Sign of the first nonzero exponent visited in `order` (a permutation
    /// of the variable indices); 0 for the unit monomial.  An empty order
    /// means the default order t1 > t2 > t3 > w1 > ... .
    int lex_sign(const std::vector<int>& order = {}) const;

    /// Deterministic rendering, e.g. "t1^-2*t2*w1"; the unit prints "1".
    std::string str() const;

    friend auto operator<=>(const Monomial& a, const Monomial& b) = default;

private:
    std::vector<std::int64_t> exponents_;
};

} // namespace conifold
