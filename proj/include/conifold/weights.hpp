#pragma once

#include "conifold/monomial.hpp"
#include "conifold/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace conifold {

/**
 * A linear form a*s1 + b*s2 + c*s3 + sum_i e_i*v_i over exact rationals:
 * the equivariant weight of a monomial.  Addition of forms mirrors
 * multiplication of monomials.
 */
class WeightForm {
public:
    explicit WeightForm(int nvars) : coefficients_(static_cast<std::size_t>(nvars), Rational(0)) {}
    explicit WeightForm(std::vector<Rational> coefficients)
        : coefficients_(std::move(coefficients)) {}

    int size() const { return static_cast<int>(coefficients_.size()); }
    const Rational& coefficient(int i) const { return coefficients_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    bool is_zero() const;
    WeightForm add(const WeightForm& other) const;

    /// Rendering over the basis (s1, s2, s3, v1, ...), e.g. "s1 - s2 + v1".
    std::string str() const;

    friend bool operator==(const WeightForm&, const WeightForm&) = default;

private:
    std::vector<Rational> coefficients_;
};

/**
 * Exact numeric values for (s1, s2, s3) and (v1, ..., vr).  When
 * cy_constrained is set, s1 + s2 + s3 = 0 is enforced at construction.
 */
class Specialization {
public:
    Specialization(std::array<Rational, 3> s_values, std::vector<Rational> v_values,
                   bool cy_constrained);

    const std::array<Rational, 3>& s_values() const { return s_; }
    const std::vector<Rational>& v_values() const { return v_; }
    int rank() const { return static_cast<int>(v_.size()); }
    bool cy_constrained() const { return cy_; }

    std::string str() const;

private:
    std::array<Rational, 3> s_;
    std::vector<Rational> v_;
    bool cy_;
};

/// The weight form of a monomial: exponents read off against (s, v).
WeightForm specialize(const Monomial& m);

/// Numeric value of a weight form under a specialization.
Rational evaluate(const WeightForm& w, const Specialization& spec);

} // namespace conifold
