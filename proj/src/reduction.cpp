#include "conifold/reduction.hpp"

#include "conifold/detail/checked.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace conifold {

namespace {

std::int64_t floordiv(std::int64_t a, std::int64_t b) {
    // b > 0.
    std::int64_t q = a / b;
    if (a % b != 0 && a < 0)
        --q;
    return q;
}

/*
 * Exact division of p by (1 - m) for a lex-positive m.
 *
 * Write mu for the exponent vector of m and group the terms of p by coset
 * of the line Z*mu; inside a coset every exponent vector is key + x*mu for
 * a unique integer x.  The identity q*(1 - m) = p reads p_x = q_x - q_{x-1}
 * along each coset, so q_x is the prefix sum of the p's.  The quotient is
 * finite exactly when every coset's total sum vanishes; a nonzero total is
 * a remainder and the division fails.
 */
CharPoly divide_once(const CharPoly& p, const Monomial& m) {
    if (p.is_zero())
        return p;
    const auto& mu = m.exponents();
    std::size_t pivot = 0;
    while (mu[pivot] == 0)
        ++pivot;
    const std::int64_t mu_p = mu[pivot]; // > 0 by lex positivity

    using Entry = std::pair<std::int64_t, std::int64_t>; // (position, coefficient)
    std::map<std::vector<std::int64_t>, std::vector<Entry>> cosets;
    for (const auto& [mono, c] : p.terms()) {
        const auto& e = mono.exponents();
        const std::int64_t x = floordiv(e[pivot], mu_p);
        std::vector<std::int64_t> key(e);
        for (std::size_t i = 0; i < key.size(); ++i)
            key[i] = detail::checked_add(key[i], detail::checked_mul(-x, mu[i], "divide"),
                                         "divide");
        cosets[std::move(key)].emplace_back(x, c);
    }

    CharPoly out(VariableContext(p.nvars() - 3));
    for (auto& [key, entries] : cosets) {
        std::sort(entries.begin(), entries.end());
        std::int64_t running = 0;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            running = detail::checked_add(running, entries[i].second, "divide");
            if (i + 1 == entries.size()) {
                if (running != 0)
                    throw NotPolynomial("division by (1 - " + m.str() +
                                        ") leaves a remainder");
            } else if (running != 0) {
                for (std::int64_t x = entries[i].first; x < entries[i + 1].first; ++x) {
                    std::vector<std::int64_t> e(key);
                    for (std::size_t j = 0; j < e.size(); ++j)
                        e[j] = detail::checked_add(e[j], detail::checked_mul(x, mu[j], "divide"),
                                                   "divide");
                    out.accumulate(Monomial(std::move(e)), running);
                }
            }
        }
    }
    return out;
}

std::vector<int> effective_order(int nvars, const std::vector<int>& variable_order) {
    if (variable_order.empty()) {
        std::vector<int> order(static_cast<std::size_t>(nvars));
        std::iota(order.begin(), order.end(), 0);
        return order;
    }
    if (static_cast<int>(variable_order.size()) != nvars)
        throw InvalidArgument("expansion: variable order must visit every variable once");
    return variable_order;
}

/*
 * Multiply p by the geometric series of f (theta-weight wf >= 1), keeping
 * exactly the terms of weight <= max_weight.  Dropping heavier terms is
 * safe because every remaining multiplication can only add weight.
 */
CharPoly multiply_geometric(const CharPoly& p, const Monomial& f, std::int64_t wf,
                            const std::vector<std::int64_t>& theta, std::int64_t max_weight) {
    CharPoly out(VariableContext(p.nvars() - 3));
    for (const auto& [m, c] : p.terms()) {
        Monomial cur = m;
        for (std::int64_t w = monomial_weight(m, theta); w <= max_weight;
             w = detail::checked_add(w, wf, "expand")) {
            out.accumulate(cur, c);
            cur = cur.times(f);
        }
    }
    return out;
}

} // namespace

CharPoly reduce_to_polynomial(const CharRational& a) {
    CharPoly p = a.numerator();
    for (const auto& [m, mult] : a.denominator_factors())
        for (int i = 0; i < mult; ++i)
            p = divide_once(p, m);
    return p;
}

std::int64_t monomial_weight(const Monomial& m, const std::vector<std::int64_t>& theta) {
    if (static_cast<int>(theta.size()) != m.size())
        throw InvalidArgument("monomial_weight: weight vector length mismatch");
    std::int64_t w = 0;
    for (int i = 0; i < m.size(); ++i)
        w = detail::checked_add(
            w, detail::checked_mul(m.exponent(i), theta[static_cast<std::size_t>(i)], "weight"),
            "weight");
    return w;
}

std::vector<std::int64_t> expansion_weights(const CharRational& a,
                                            const std::vector<int>& variable_order) {
    const int n = a.nvars();
    const std::vector<int> order = effective_order(n, variable_order);

    std::vector<Monomial> oriented;
    for (const auto& [m, mult] : a.denominator_factors()) {
        const int sign = m.lex_sign(order);
        if (sign == 0)
            throw NonExpandable("expansion: factor (1 - 1) cannot be oriented");
        oriented.push_back(sign > 0 ? m : m.inverse());
    }

    // theta assigns order[0] the largest weight B^(n-1) down to 1, so the
    // leading exponent of an oriented factor eventually dominates.
    for (std::int64_t base = 1;; base *= 2) {
        std::vector<std::int64_t> theta(static_cast<std::size_t>(n), 0);
        std::int64_t powv = 1;
        for (int pos = n - 1; pos >= 0; --pos) {
            theta[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = powv;
            if (pos > 0)
                powv = detail::checked_mul(powv, base, "expansion_weights");
        }
        bool ok = true;
        for (const auto& m : oriented)
            if (monomial_weight(m, theta) < 1) {
                ok = false;
                break;
            }
        if (ok)
            return theta;
        if (base > (std::int64_t{1} << 40))
            throw NonExpandable("expansion: no positive weight vector found");
    }
}

CharPoly truncate_by_weights(const CharPoly& p, const std::vector<std::int64_t>& theta,
                             std::int64_t max_weight) {
    CharPoly out(VariableContext(p.nvars() - 3));
    for (const auto& [m, c] : p.terms())
        if (monomial_weight(m, theta) <= max_weight)
            out.accumulate(m, c);
    return out;
}

CharPoly expand_to_order(const CharRational& a, std::int64_t max_weight,
                         const std::vector<int>& variable_order) {
    const std::vector<std::int64_t> theta = expansion_weights(a, variable_order);
    const std::vector<int> order = effective_order(a.nvars(), variable_order);

    CharPoly num = a.numerator();
    std::vector<std::pair<Monomial, int>> factors;
    for (const auto& [m, mult] : a.denominator_factors()) {
        if (m.lex_sign(order) > 0) {
            factors.emplace_back(m, mult);
        } else {
            // 1/(1-m)^c = (-m^{-1})^c / (1-m^{-1})^c.
            Monomial g = m.inverse();
            num = num.mul_monomial(g.pow(mult));
            if (mult % 2 == 1)
                num = num.negate();
            factors.emplace_back(std::move(g), mult);
        }
    }

    CharPoly result = truncate_by_weights(num, theta, max_weight);
    for (const auto& [f, mult] : factors) {
        const std::int64_t wf = monomial_weight(f, theta);
        for (int i = 0; i < mult; ++i)
            result = multiply_geometric(result, f, wf, theta, max_weight);
    }
    return result;
}

} // namespace conifold
