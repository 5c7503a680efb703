#include "conifold/char_poly.hpp"

#include "conifold/detail/checked.hpp"

#include <sstream>

namespace conifold {

std::int64_t CharPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t CharPoly::unit_coefficient() const {
    return coefficient(Monomial(std::vector<std::int64_t>(static_cast<std::size_t>(nvars_), 0)));
}

void CharPoly::accumulate(const Monomial& m, std::int64_t c) {
    if (m.size() != nvars_)
        throw ContextMismatch("CharPoly::accumulate: mixed variable alphabets");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = detail::checked_add(it->second, c, "CharPoly::accumulate");
        if (it->second == 0)
            terms_.erase(it);
    }
}

CharPoly CharPoly::add(const CharPoly& other) const {
    check_context(other);
    CharPoly out(*this);
    for (const auto& [m, c] : other.terms_)
        out.accumulate(m, c);
    return out;
}

CharPoly CharPoly::sub(const CharPoly& other) const {
    return add(other.negate());
}

CharPoly CharPoly::negate() const {
    CharPoly out(*this);
    for (auto& [m, c] : out.terms_)
        c = detail::checked_neg(c, "CharPoly::negate");
    return out;
}

CharPoly CharPoly::mul(const CharPoly& other) const {
    check_context(other);
    CharPoly out;
    out.nvars_ = nvars_;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : other.terms_)
            out.accumulate(m1.times(m2), detail::checked_mul(c1, c2, "CharPoly::mul"));
    return out;
}

CharPoly CharPoly::mul_monomial(const Monomial& m) const {
    if (m.size() != nvars_)
        throw ContextMismatch("CharPoly::mul_monomial: mixed variable alphabets");
    return map_monomials([&m](const Monomial& x) { return x.times(m); });
}

CharPoly CharPoly::mul_scalar(std::int64_t c) const {
    CharPoly out;
    out.nvars_ = nvars_;
    if (c == 0)
        return out;
    for (const auto& [m, v] : terms_)
        out.accumulate(m, detail::checked_mul(v, c, "CharPoly::mul_scalar"));
    return out;
}

CharPoly CharPoly::bar() const {
    return map_monomials([](const Monomial& x) { return x.inverse(); });
}

std::string CharPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        unsigned long long mag = c < 0 ? 0ULL - static_cast<unsigned long long>(c)
                                       : static_cast<unsigned long long>(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (m.is_unit())
            out << mag;
        else {
            if (mag != 1)
                out << mag << "*";
            out << m.str();
        }
        first = false;
    }
    return out.str();
}

void CharPoly::check_context(const CharPoly& other) const {
    if (nvars_ != other.nvars_)
        throw ContextMismatch("CharPoly: mixed variable alphabets");
}

CharPoly one_minus(const Monomial& m) {
    CharPoly out(Monomial(std::vector<std::int64_t>(static_cast<std::size_t>(m.size()), 0)), 1);
    out.accumulate(m, -1);
    return out;
}

} // namespace conifold
