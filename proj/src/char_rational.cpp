#include "conifold/char_rational.hpp"

#include <algorithm>
#include <sstream>

namespace conifold {

namespace {

std::vector<Monomial> factor_list(const CharRational::FactorMap& fm) {
    std::vector<Monomial> out;
    for (const auto& [m, mult] : fm)
        for (int i = 0; i < mult; ++i)
            out.push_back(m);
    return out;
}

} // namespace

CharRational::CharRational(CharPoly numerator, const std::vector<Monomial>& denominator_factors)
    : numerator_(std::move(numerator)) {
    for (const Monomial& f : denominator_factors) {
        if (f.size() != numerator_.nvars())
            throw ContextMismatch("CharRational: factor over a different alphabet");
        if (f.lex_sign() == 0)
            throw InvalidArgument("CharRational: denominator factor (1 - 1) vanishes");
    }
    if (numerator_.is_zero())
        return;
    for (const Monomial& f : denominator_factors) {
        if (f.lex_sign() > 0) {
            denominator_[f] += 1;
        } else {
            // 1/(1 - m) = -m^{-1} / (1 - m^{-1}): keep factors lex-positive.
            Monomial g = f.inverse();
            numerator_ = numerator_.mul_monomial(g).mul_scalar(-1);
            denominator_[g] += 1;
        }
    }
}

CharPoly CharRational::denominator_poly() const {
    CharPoly out = CharPoly::constant(VariableContext(numerator_.nvars() - 3), 1);
    for (const auto& [m, mult] : denominator_)
        for (int i = 0; i < mult; ++i)
            out = out.mul(one_minus(m));
    return out;
}

CharRational CharRational::add(const CharRational& other) const {
    if (nvars() != other.nvars())
        throw ContextMismatch("CharRational::add: mixed variable alphabets");
    // Common denominator: each factor at its maximum multiplicity.
    FactorMap common = denominator_;
    for (const auto& [m, mult] : other.denominator_) {
        int& have = common[m];
        have = std::max(have, mult);
    }
    auto scaled = [&common](const CharRational& a) {
        CharPoly num = a.numerator_;
        for (const auto& [m, mult] : common) {
            auto it = a.denominator_.find(m);
            const int have = it == a.denominator_.end() ? 0 : it->second;
            for (int i = have; i < mult; ++i)
                num = num.mul(one_minus(m));
        }
        return num;
    };
    return CharRational(scaled(*this).add(scaled(other)), factor_list(common));
}

CharRational CharRational::mul(const CharRational& other) const {
    if (nvars() != other.nvars())
        throw ContextMismatch("CharRational::mul: mixed variable alphabets");
    std::vector<Monomial> factors = factor_list(denominator_);
    const std::vector<Monomial> extra = factor_list(other.denominator_);
    factors.insert(factors.end(), extra.begin(), extra.end());
    return CharRational(numerator_.mul(other.numerator_), factors);
}

CharRational CharRational::mul(const CharPoly& p) const {
    return CharRational(numerator_.mul(p), factor_list(denominator_));
}

CharRational CharRational::mul_monomial(const Monomial& m) const {
    return CharRational(numerator_.mul_monomial(m), factor_list(denominator_));
}

CharRational CharRational::negate() const {
    return CharRational(numerator_.negate(), factor_list(denominator_));
}

CharRational CharRational::bar() const {
    std::vector<Monomial> factors;
    for (const auto& [m, mult] : denominator_)
        for (int i = 0; i < mult; ++i)
            factors.push_back(m.inverse());
    return CharRational(numerator_.bar(), factors);
}

bool CharRational::equals(const CharRational& other) const {
    if (nvars() != other.nvars())
        throw ContextMismatch("CharRational::equals: mixed variable alphabets");
    return numerator_.mul(other.denominator_poly()) == other.numerator_.mul(denominator_poly());
}

std::string CharRational::str() const {
    if (denominator_.empty())
        return numerator_.str();
    std::ostringstream out;
    out << "(" << numerator_.str() << ") / ";
    for (const auto& [m, mult] : denominator_) {
        out << "(1 - " << m.str() << ")";
        if (mult > 1)
            out << "^" << mult;
    }
    return out.str();
}

} // namespace conifold
