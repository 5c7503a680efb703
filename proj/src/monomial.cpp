#include "conifold/monomial.hpp"

#include "conifold/detail/checked.hpp"

#include <algorithm>
#include <sstream>

namespace conifold {

Monomial Monomial::variable(const VariableContext& ctx, int index, std::int64_t power) {
    if (index < 0 || index >= ctx.size())
        throw InvalidArgument("Monomial::variable: index out of range");
    std::vector<std::int64_t> e(static_cast<std::size_t>(ctx.size()), 0);
    e[static_cast<std::size_t>(index)] = power;
    return Monomial(std::move(e));
}

Monomial Monomial::w(const VariableContext& ctx, int i, std::int64_t e) {
    if (i < 1 || i > ctx.rank())
        throw InvalidArgument("Monomial::w: framing index out of range");
    return variable(ctx, 2 + i, e);
}

bool Monomial::is_unit() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](std::int64_t e) { return e == 0; });
}

Monomial Monomial::times(const Monomial& other) const {
    if (other.size() != size())
        throw ContextMismatch("Monomial::times: mixed variable alphabets");
    std::vector<std::int64_t> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = detail::checked_add(e[i], other.exponents_[i], "Monomial::times");
    return Monomial(std::move(e));
}

Monomial Monomial::inverse() const {
    std::vector<std::int64_t> e(exponents_);
    for (auto& x : e)
        x = detail::checked_neg(x, "Monomial::inverse");
    return Monomial(std::move(e));
}

Monomial Monomial::pow(std::int64_t e) const {
    std::vector<std::int64_t> out(exponents_);
    for (auto& x : out)
        x = detail::checked_mul(x, e, "Monomial::pow");
    return Monomial(std::move(out));
}

int Monomial::lex_sign(const std::vector<int>& order) const {
    if (order.empty()) {
        for (std::int64_t e : exponents_) {
            if (e > 0)
                return 1;
            if (e < 0)
                return -1;
        }
        return 0;
    }
    if (static_cast<int>(order.size()) != size())
        throw InvalidArgument("Monomial::lex_sign: order must visit every variable once");
    for (int idx : order) {
        if (idx < 0 || idx >= size())
            throw InvalidArgument("Monomial::lex_sign: order entry out of range");
        std::int64_t e = exponent(idx);
        if (e > 0)
            return 1;
        if (e < 0)
            return -1;
    }
    return 0;
}

std::string Monomial::str() const {
    const VariableContext ctx(rank());
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < size(); ++i) {
        const std::int64_t e = exponents_[static_cast<std::size_t>(i)];
        if (e == 0)
            continue;
        if (!first)
            out << "*";
        out << ctx.variable_name(i);
        if (e != 1)
            out << "^" << e;
        first = false;
    }
    if (first)
        return "1";
    return out.str();
}

} // namespace conifold
