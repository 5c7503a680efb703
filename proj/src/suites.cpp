#include "conifold/suites.hpp"

#include <random>
#include <sstream>

namespace conifold {

namespace {

constexpr std::uint64_t kInternalSeed = 0x51ab1e9a175ULL;

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

Monomial random_monomial(Rng& rng, const VariableContext& ctx, std::int64_t span) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(ctx.size()));
    for (auto& x : e)
        x = rng.range(-span, span);
    return Monomial(std::move(e));
}

CharPoly random_poly(Rng& rng, const VariableContext& ctx) {
    CharPoly out(ctx);
    const std::int64_t terms = rng.range(0, 4);
    for (std::int64_t i = 0; i < terms; ++i)
        out.accumulate(random_monomial(rng, ctx, 3), rng.range(-4, 4));
    return out;
}

/// A lex-positive monomial, as required of a denominator factor.
Monomial random_positive_monomial(Rng& rng, const VariableContext& ctx) {
    for (;;) {
        const Monomial m = random_monomial(rng, ctx, 2);
        if (m.lex_sign() > 0)
            return m;
        if (m.lex_sign() < 0)
            return m.inverse();
    }
}

/// A lex-positive monomial of positive total degree, so that the all-ones
/// weight vector already certifies the factor and expansion windows stay
/// small for the randomized round trips.
Monomial random_cone_monomial(Rng& rng, const VariableContext& ctx) {
    for (;;) {
        const Monomial m = random_monomial(rng, ctx, 2);
        std::int64_t degree = 0;
        for (int i = 0; i < m.size(); ++i)
            degree += m.exponent(i);
        if (m.lex_sign() > 0 && degree >= 1)
            return m;
    }
}

} // namespace

void SuiteResult::record(bool good, const std::string& label) {
    if (good) {
        ++passed;
        return;
    }
    ++failed;
    if (failures.size() < 32)
        failures.push_back(label);
}

std::string SuiteResult::str() const {
    std::ostringstream out;
    out << passed << " passed, " << failed << " failed";
    for (const auto& f : failures)
        out << "\n  " << f;
    if (failed > static_cast<int>(failures.size()))
        out << "\n  ... (" << failed - static_cast<int>(failures.size()) << " more)";
    return out.str();
}

SuiteResult run_algebra_suite(int cases, std::uint64_t seed) {
    SuiteResult res;
    Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
        const std::string tag = " (case " + std::to_string(i) + ")";
        const VariableContext ctx(static_cast<int>(rng.range(1, 3)));
        const CharPoly a = random_poly(rng, ctx);
        const CharPoly b = random_poly(rng, ctx);
        const CharPoly c = random_poly(rng, ctx);
        res.record(a.add(b) == b.add(a), "addition commutes" + tag);
        res.record(a.mul(b) == b.mul(a), "multiplication commutes" + tag);
        res.record(a.mul(b).mul(c) == a.mul(b.mul(c)), "multiplication associates" + tag);
        res.record(a.mul(b.add(c)) == a.mul(b).add(a.mul(c)), "distributivity" + tag);
        res.record(a.bar().bar() == a, "bar is an involution" + tag);
        res.record(a.mul(b).bar() == a.bar().mul(b.bar()), "bar respects products" + tag);

        const CharRational ra(a, {random_positive_monomial(rng, ctx)});
        const CharRational rb(b, {random_positive_monomial(rng, ctx),
                                  random_positive_monomial(rng, ctx)});
        res.record(ra.add(rb).equals(rb.add(ra)), "rational addition commutes" + tag);
        res.record(ra.add(ra.negate()).is_zero(), "rational cancellation" + tag);
        res.record(ra.mul(rb).equals(rb.mul(ra)), "rational multiplication commutes" + tag);
        res.record(ra.bar().bar().equals(ra), "rational bar is an involution" + tag);

        // Exact division recovers a constructed quotient ...
        std::vector<Monomial> ms;
        const std::int64_t nf = rng.range(1, 3);
        for (std::int64_t j = 0; j < nf; ++j)
            ms.push_back(random_cone_monomial(rng, ctx));
        CharPoly prod = a;
        for (const auto& m : ms)
            prod = prod.mul(one_minus(m));
        const CharRational q(prod, ms);
        bool reduced_ok = false;
        try {
            reduced_ok = reduce_to_polynomial(q) == a;
        } catch (const NotPolynomial&) {
        }
        res.record(reduced_ok, "exact division recovers the quotient" + tag);

        // ... and the brute-force expansion sees the same truncation.
        const auto theta = expansion_weights(q);
        res.record(expand_to_order(q, 9) == truncate_by_weights(a, theta, 9),
                   "expansion matches the truncated quotient" + tag);
    }
    return res;
}

SuiteResult run_finiteness_scan(int rank_max, int twist_max, int order_max,
                                const VertexOptions& opts, bool corrupt) {
    SuiteResult res;
    VertexOptions local = opts;
    local.corrupt_sheaf = corrupt;
    for (int r = 1; r <= rank_max; ++r)
        for (int n = 0; n <= twist_max; ++n) {
            const LocalP1Config config(r, n);
            for (int k = 0; k <= order_max; ++k)
                for (const FixedPoint& fp : enumerate_fixed_points(config, k)) {
                    bool threw = false;
                    std::string what;
                    try {
                        (void)virtual_tangent(fp, local);
                    } catch (const NotFinite& e) {
                        threw = true;
                        what = e.what();
                    } catch (const FixedPart& e) {
                        threw = true;
                        what = e.what();
                    }
                    const bool expect_throw = corrupt && fp.component_lengths()[0] > 0;
                    std::ostringstream label;
                    label << "rank " << r << ", twist " << n << ", " << fp.str() << ": ";
                    if (threw == expect_throw)
                        res.record(true, "");
                    else if (threw)
                        res.record(false, label.str() + what);
                    else
                        res.record(false, label.str() + "expected a failure, got none");
                }
        }
    return res;
}

SuiteResult run_oracle_scan(int rank_max, int twist_max, int order_max,
                            std::int64_t expand_order, const VertexOptions& opts) {
    SuiteResult res;
    for (int r = 1; r <= rank_max; ++r)
        for (int n = 0; n <= twist_max; ++n) {
            const LocalP1Config config(r, n);
            for (int k = 0; k <= order_max; ++k)
                for (const FixedPoint& fp : enumerate_fixed_points(config, k)) {
                    std::ostringstream label;
                    label << "rank " << r << ", twist " << n << ", " << fp.str();
                    try {
                        const TangentCharacter t = virtual_tangent(fp, opts);
                        const CharRational a = assembled_rational(fp, opts);
                        res.record(reduce_to_polynomial(a) == t.value,
                                   label.str() + ": one-shot reduction disagrees");
                        const auto theta = expansion_weights(a);
                        res.record(expand_to_order(a, expand_order) ==
                                       truncate_by_weights(t.value, theta, expand_order),
                                   label.str() + ": expansion disagrees with reduction");
                    } catch (const Error& e) {
                        res.record(false, label.str() + ": " + e.what());
                    }
                }
        }
    return res;
}

SuiteResult run_multiplicativity_suite(const std::vector<int>& ranks,
                                       const std::vector<int>& twists, int max_order,
                                       const VertexOptions& opts) {
    SuiteResult res;
    for (const int n : twists) {
        const LocalP1Config base_config(1, n);
        const Specialization base_spec =
            draw_generic_cy(base_config, max_order, kInternalSeed, opts);
        const Series base = vertex_series(base_config, max_order, base_spec, opts);
        for (const int r : ranks) {
            const LocalP1Config config(r, n);
            const Specialization spec =
                draw_generic_cy(config, max_order, kInternalSeed + static_cast<std::uint64_t>(r),
                                opts);
            const Series full = vertex_series(config, max_order, spec, opts);
            const Series powed = pow_truncated(base, r, max_order);
            std::ostringstream label;
            label << "rank " << r << ", twist " << n << ": " << full.str()
                  << " != " << powed.str() << " = (rank-1 series)^" << r;
            res.record(full == powed, label.str());
        }
    }
    return res;
}

SuiteResult run_specialization_suite(const std::vector<int>& ranks,
                                     const std::vector<int>& twists, int max_order,
                                     int num_draws, std::uint64_t seed,
                                     const VertexOptions& opts) {
    SuiteResult res;
    for (const int r : ranks)
        for (const int n : twists) {
            const LocalP1Config config(r, n);
            std::ostringstream label;
            label << "rank " << r << ", twist " << n << ": ";
            try {
                (void)check_specialization_independence(config, max_order, num_draws, seed,
                                                        opts);
                res.record(true, "");
            } catch (const Error& e) {
                res.record(false, label.str() + e.what());
            }
        }
    return res;
}

} // namespace conifold
