#include "conifold/weights.hpp"

#include "conifold/errors.hpp"

#include <algorithm>
#include <sstream>

namespace conifold {

std::string to_string(const Rational& x) {
    const BigInt n = boost::multiprecision::numerator(x);
    const BigInt d = boost::multiprecision::denominator(x);
    if (d == 1)
        return n.str();
    return n.str() + "/" + d.str();
}

BigInt binomial(const BigInt& a, int k) {
    if (k < 0)
        throw InvalidArgument("binomial: negative lower index");
    if (a < 0)
        throw InvalidArgument("binomial: negative upper index");
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= a - k + i;
        out /= i; // exact: the partial product is C(a-k+i, i)
    }
    return out;
}

Rational rational_pow(const Rational& x, long long e) {
    if (e < 0 && x == 0)
        throw ZeroWeight("rational_pow: inverse of zero");
    Rational base = x;
    unsigned long long n;
    if (e < 0) {
        base = Rational(1) / base;
        n = 0ULL - static_cast<unsigned long long>(e);
    } else {
        n = static_cast<unsigned long long>(e);
    }
    Rational out(1);
    while (n > 0) {
        if (n & 1ULL)
            out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

bool WeightForm::is_zero() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(),
                       [](const Rational& x) { return x == 0; });
}

WeightForm WeightForm::add(const WeightForm& other) const {
    if (other.size() != size())
        throw ContextMismatch("WeightForm::add: mixed variable alphabets");
    std::vector<Rational> out(coefficients_);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += other.coefficients_[i];
    return WeightForm(std::move(out));
}

std::string WeightForm::str() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < size(); ++i) {
        Rational c = coefficients_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (c < 0)
            c = -c;
        if (c != 1)
            out << to_string(c) << "*";
        out << (i < 3 ? "s" + std::to_string(i + 1) : "v" + std::to_string(i - 2));
        first = false;
    }
    return out.str();
}

Specialization::Specialization(std::array<Rational, 3> s_values, std::vector<Rational> v_values,
                               bool cy_constrained)
    : s_(std::move(s_values)), v_(std::move(v_values)), cy_(cy_constrained) {
    if (cy_ && s_[0] + s_[1] + s_[2] != 0)
        throw InvalidArgument("Specialization: s1 + s2 + s3 must vanish when constrained");
}

std::string Specialization::str() const {
    std::ostringstream out;
    out << "s = (" << to_string(s_[0]) << ", " << to_string(s_[1]) << ", " << to_string(s_[2])
        << "), v = (";
    for (std::size_t i = 0; i < v_.size(); ++i)
        out << (i ? ", " : "") << to_string(v_[i]);
    out << ")";
    return out.str();
}

WeightForm specialize(const Monomial& m) {
    std::vector<Rational> coefficients;
    coefficients.reserve(static_cast<std::size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i)
        coefficients.emplace_back(m.exponent(i));
    return WeightForm(std::move(coefficients));
}

Rational evaluate(const WeightForm& w, const Specialization& spec) {
    if (w.size() != 3 + spec.rank())
        throw ContextMismatch("evaluate: weight form and specialization rank differ");
    Rational out(0);
    for (int i = 0; i < 3; ++i)
        out += w.coefficient(i) * spec.s_values()[static_cast<std::size_t>(i)];
    for (int i = 0; i < spec.rank(); ++i)
        out += w.coefficient(3 + i) * spec.v_values()[static_cast<std::size_t>(i)];
    return out;
}

} // namespace conifold
