#pragma once

#include "conifold/monomial.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace conifold {

/**
 * A finite character: an integer combination of monomials, stored as a
 * sorted term map with no zero coefficients.  Equality of term maps is
 * equality of characters (canonical form).
 *
 * Coefficient arithmetic is checked 64-bit; overflow throws.
 */
class CharPoly {
public:
    using TermMap = std::map<Monomial, std::int64_t>;

    /// The zero character over `ctx`.
    explicit CharPoly(const VariableContext& ctx) : nvars_(ctx.size()) {}

    /// c * m.
    CharPoly(const Monomial& m, std::int64_t c) : nvars_(m.size()) {
        if (c != 0)
            terms_.emplace(m, c);
    }

    /// The constant character c * 1.
    static CharPoly constant(const VariableContext& ctx, std::int64_t c) {
        return CharPoly(Monomial::unit(ctx), c);
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of `m` (0 when absent).
    std::int64_t coefficient(const Monomial& m) const;

    /// Coefficient of the unit monomial.
    std::int64_t unit_coefficient() const;

    /// In-place checked accumulation of c * m.
    void accumulate(const Monomial& m, std::int64_t c);

    CharPoly add(const CharPoly& other) const;
    CharPoly sub(const CharPoly& other) const;
    CharPoly negate() const;
    CharPoly mul(const CharPoly& other) const;

    /// Multiply every term by the monomial m (lattice shift).
    CharPoly mul_monomial(const Monomial& m) const;

    /// Multiply every coefficient by c (checked).
    CharPoly mul_scalar(std::int64_t c) const;

    /// Dual character: every monomial inverted, coefficients unchanged.
    CharPoly bar() const;

    /// Image under a monomial substitution.
    template <typename F>
    CharPoly map_monomials(F&& f) const {
        CharPoly out;
        out.nvars_ = nvars_;
        for (const auto& [m, c] : terms_)
            out.accumulate(f(m), c);
        return out;
    }

    /// Deterministic rendering in term order, e.g. "t1^-1 - t2^-1*t3^-1".
    std::string str() const;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;

    CharPoly operator+(const CharPoly& o) const { return add(o); }
    CharPoly operator-(const CharPoly& o) const { return sub(o); }
    CharPoly operator*(const CharPoly& o) const { return mul(o); }
    CharPoly operator-() const { return negate(); }

private:
    CharPoly() = default;

    void check_context(const CharPoly& other) const;

    int nvars_ = 0;
    TermMap terms_;
};

/// (1 - m) as a finite character.
CharPoly one_minus(const Monomial& m);

/// Free-function spellings of the core algebra operations.
inline CharPoly add(const CharPoly& a, const CharPoly& b) { return a.add(b); }
inline CharPoly mul(const CharPoly& a, const CharPoly& b) { return a.mul(b); }
inline CharPoly bar(const CharPoly& a) { return a.bar(); }

} // namespace conifold
