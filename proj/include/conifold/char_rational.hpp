#pragma once

#include "conifold/char_poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace conifold {

/**
 * A rational character: a finite numerator over a product of factors
 * (1 - m), the shape every infinite character in the pipeline takes.
 *
 * Canonical form maintained by construction:
 *   - no factor monomial is the unit (a (1 - 1) factor would be zero);
 *   - every factor monomial is lexicographically positive; a negative
 *     factor is re-oriented through 1/(1 - m) = -m^{-1}/(1 - m^{-1}),
 *     which moves -m^{-1} into the numerator;
 *   - a zero numerator drops all denominator factors.
 *
 * Equality is decided by exact cross-multiplication, never by expansion.
 */
class CharRational {
public:
    using FactorMap = std::map<Monomial, int>;

    /// numerator / prod (1 - factor), canonicalized.
    CharRational(CharPoly numerator, const std::vector<Monomial>& denominator_factors);

    /// A finite character viewed as a rational one.
    static CharRational from_poly(CharPoly p) { return CharRational(std::move(p), {}); }

    /// The zero character over `ctx`.
    static CharRational zero(const VariableContext& ctx) { return from_poly(CharPoly(ctx)); }

    int nvars() const { return numerator_.nvars(); }
    bool is_zero() const { return numerator_.is_zero(); }
    const CharPoly& numerator() const { return numerator_; }
    const FactorMap& denominator_factors() const { return denominator_; }

    /// Denominator expanded to a finite character prod (1 - m)^mult.
    CharPoly denominator_poly() const;

    /// Exact sum; the common denominator is the multiset union of factors
    /// counted once per maximum multiplicity.
    CharRational add(const CharRational& other) const;

    /// Exact product; denominators concatenate.
    CharRational mul(const CharRational& other) const;

    CharRational mul(const CharPoly& p) const;
    CharRational mul_monomial(const Monomial& m) const;
    CharRational negate() const;
    CharRational sub(const CharRational& other) const { return add(other.negate()); }

    /// Dual character: numerator and every factor inverted, then
    /// re-canonicalized (so bar(1/(1-t1)) prints as -t1/(1-t1)).
    CharRational bar() const;

    /// Exact equality by cross-multiplication.
    bool equals(const CharRational& other) const;

    /// Image under a monomial substitution (factors re-canonicalized).
    template <typename F>
    CharRational map_monomials(F&& f) const {
        std::vector<Monomial> factors;
        for (const auto& [m, mult] : denominator_)
            for (int i = 0; i < mult; ++i)
                factors.push_back(f(m));
        return CharRational(numerator_.map_monomials(f), factors);
    }

    /// Deterministic rendering "num / (1 - m1)(1 - m2)...".
    std::string str() const;

    CharRational operator+(const CharRational& o) const { return add(o); }
    CharRational operator-(const CharRational& o) const { return sub(o); }
    CharRational operator*(const CharRational& o) const { return mul(o); }
    CharRational operator-() const { return negate(); }

private:
    CharPoly numerator_;
    FactorMap denominator_;
};

inline CharRational add(const CharRational& a, const CharRational& b) { return a.add(b); }
inline CharRational mul(const CharRational& a, const CharRational& b) { return a.mul(b); }
inline CharRational bar(const CharRational& a) { return a.bar(); }

} // namespace conifold
