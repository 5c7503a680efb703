#include "conifold/localization.hpp"

#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

namespace conifold {

namespace {

/// Deterministic uniform draw from [lo, hi]; explicit modulo mapping so
/// the stream never depends on the standard library's distribution code.
std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(rng() % span);
}

std::vector<TangentCharacter> collect_tangents(const LocalP1Config& config, int max_order,
                                               const VertexOptions& opts) {
    std::vector<TangentCharacter> out;
    for (int k = 0; k <= max_order; ++k)
        for (const FixedPoint& fp : enumerate_fixed_points(config, k))
            out.push_back(virtual_tangent(fp, opts));
    return out;
}

Specialization draw_generic_cy_for(const std::vector<TangentCharacter>& tangents, int rank,
                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        const Rational s1(draw_int(rng, -9, 9));
        const Rational s2(draw_int(rng, -9, 9));
        std::vector<Rational> v;
        for (int i = 0; i < rank; ++i)
            v.emplace_back(draw_int(rng, -9, 9));
        if (s1 == 0 || s2 == 0)
            continue;
        const Rational s3 = -s1 - s2;
        if (s3 == 0)
            continue;
        const Specialization spec({s1, s2, s3}, v, true);
        try {
            for (const auto& t : tangents)
                (void)euler_weight(t, spec);
        } catch (const ZeroWeight&) {
            continue;
        }
        return spec;
    }
    throw ZeroWeight("draw_generic_cy: no generic specialization in 200 attempts");
}

Series series_from_tangents(const std::vector<TangentCharacter>& tangents,
                            const LocalP1Config& config, int max_order,
                            const Specialization& spec) {
    Series out;
    out.rank = config.rank;
    out.twist = config.twist;
    out.max_order = max_order;
    out.coefficients.assign(static_cast<std::size_t>(max_order) + 1, Rational(0));
    for (const auto& t : tangents)
        out.coefficients[static_cast<std::size_t>(t.source.total_length())] +=
            euler_weight(t, spec);
    return out;
}

} // namespace

Rational euler_weight(const TangentCharacter& t, const Specialization& spec) {
    if (t.value.nvars() != 3 + spec.rank())
        throw ContextMismatch("euler_weight: specialization rank differs from character");
    Rational out(1);
    for (const auto& [m, a] : t.value.terms()) {
        const Rational w = evaluate(specialize(m), spec);
        if (w == 0)
            throw ZeroWeight("euler_weight: weight of " + m.str() + " vanishes under " +
                             spec.str());
        out *= rational_pow(w, -a);
    }
    return out;
}

std::string Series::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        const Rational& c = coefficients[k];
        if (c == 0)
            continue;
        Rational mag = c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (c < 0)
            mag = -mag;
        if (mag != 1 || k == 0)
            out << to_string(mag);
        if (k > 0) {
            if (mag != 1)
                out << "*";
            out << "q";
            if (k > 1)
                out << "^" << k;
        }
        first = false;
    }
    if (first)
        return "0";
    return out.str();
}

bool operator==(const Series& a, const Series& b) {
    return a.coefficients == b.coefficients;
}

Series mul_truncated(const Series& a, const Series& b, int max_order) {
    Series out;
    out.rank = a.rank;
    out.twist = a.twist;
    out.max_order = max_order;
    out.coefficients.assign(static_cast<std::size_t>(max_order) + 1, Rational(0));
    for (std::size_t i = 0; i < a.coefficients.size(); ++i)
        for (std::size_t j = 0; j < b.coefficients.size(); ++j)
            if (i + j <= static_cast<std::size_t>(max_order))
                out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
    return out;
}

Series pow_truncated(const Series& a, int e, int max_order) {
    if (e < 0)
        throw InvalidArgument("pow_truncated: negative exponent");
    Series out;
    out.rank = a.rank;
    out.twist = a.twist;
    out.max_order = max_order;
    out.coefficients.assign(static_cast<std::size_t>(max_order) + 1, Rational(0));
    out.coefficients[0] = 1;
    for (int i = 0; i < e; ++i)
        out = mul_truncated(out, a, max_order);
    return out;
}

Series vertex_series(const LocalP1Config& config, int max_order, const Specialization& spec,
                     const VertexOptions& opts) {
    if (max_order < 0)
        throw InvalidArgument("vertex_series: negative order");
    return series_from_tangents(collect_tangents(config, max_order, opts), config, max_order,
                                spec);
}

Series closed_form_series(int rank, int twist, int max_order) {
    if (max_order < 0)
        throw InvalidArgument("closed_form_series: negative order");
    const LocalP1Config config(rank, twist); // validates rank and twist
    Series out;
    out.rank = rank;
    out.twist = twist;
    out.max_order = max_order;
    const BigInt a = BigInt(rank) * (twist + 1);
    for (int k = 0; k <= max_order; ++k) {
        BigInt c = binomial(a + k - 1, k);
        if (k % 2)
            c = -c;
        out.coefficients.emplace_back(c);
    }
    return out;
}

Specialization draw_generic_cy(const LocalP1Config& config, int max_order, std::uint64_t seed,
                               const VertexOptions& opts) {
    return draw_generic_cy_for(collect_tangents(config, max_order, opts), config.rank, seed);
}

Series check_specialization_independence(const LocalP1Config& config, int max_order,
                                         int num_draws, std::uint64_t seed,
                                         const VertexOptions& opts) {
    if (num_draws < 1)
        throw InvalidArgument("check_specialization_independence: need at least one draw");
    const std::vector<TangentCharacter> tangents = collect_tangents(config, max_order, opts);
    std::optional<Series> common;
    for (int i = 0; i < num_draws; ++i) {
        const std::uint64_t sub_seed =
            seed + static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ULL;
        const Specialization spec = draw_generic_cy_for(tangents, config.rank, sub_seed);
        Series s = series_from_tangents(tangents, config, max_order, spec);
        if (!common)
            common = std::move(s);
        else if (!(*common == s))
            throw Error("series depends on the specialization: draw " + std::to_string(i) +
                        " gives " + s.str() + " instead of " + common->str());
    }
    return *common;
}

namespace {

Rational rising_product(int d, int twist, const Rational& s1) {
    // prod_{i=0}^{d-1} (i + n) s1
    Rational out(1);
    for (int i = 0; i < d; ++i)
        out *= Rational(i + twist) * s1;
    return out;
}

Rational rising_product_shifted(int d, int twist, const Rational& s1, const Rational& s23) {
    // prod_{i=0}^{d-1} ((i + n) s1 - (s2 + s3))
    Rational out(1);
    for (int i = 0; i < d; ++i)
        out *= Rational(i + twist) * s1 - s23;
    return out;
}

Rational alternating_product(int d, int twist, const Rational& s1) {
    // prod_{i=1}^{d} (-1)^i (i + n) s1
    Rational out(1);
    for (int i = 1; i <= d; ++i) {
        out *= Rational(i + twist) * s1;
        if (i % 2)
            out = -out;
    }
    return out;
}

/// One factor N(d; vi, vj) / D(d; vi, vj) of the splitting bracket, or
/// nothing when the denominator vanishes.
std::optional<Rational> bracket_factor(int d, int twist, const Rational& s1,
                                       const Rational& s23, const Rational& vi,
                                       const Rational& vj, DiagnosticReading reading) {
    Rational num = vi * (vj - 1);
    if (reading == DiagnosticReading::product_outside)
        num += rising_product(d, twist, s1) - s23;
    else
        num += rising_product_shifted(d, twist, s1, s23);
    const Rational den = vi * (Rational(1) - vj) + alternating_product(d, twist, s1);
    if (den == 0)
        return std::nullopt;
    return num / den;
}

std::optional<Rational> splitting_bracket(int d1, int d2, int twist, const Specialization& spec,
                                          DiagnosticReading reading) {
    const Rational& s1 = spec.s_values()[0];
    const Rational s23 = spec.s_values()[1] + spec.s_values()[2];
    const Rational& v1 = spec.v_values()[0];
    const Rational& v2 = spec.v_values()[1];
    const auto f1 = bracket_factor(d1, twist, s1, s23, v1, v2, reading);
    const auto f2 = bracket_factor(d2, twist, s1, s23, v2, v1, reading);
    if (!f1 || !f2)
        return std::nullopt;
    return *f1 * *f2;
}

} // namespace

std::string DiagnosticReport::str() const {
    std::ostringstream out;
    for (const DiagnosticRow& row : rows) {
        out << "order " << row.order << ": pipeline " << to_string(row.pipeline_total)
            << ", product(outside) " << to_string(row.formula_outside)
            << (row.outside_matches ? " [match]" : " [differs]") << ", product(inside) "
            << to_string(row.formula_inside)
            << (row.inside_matches ? " [match]" : " [differs]") << "\n";
        for (const DiagnosticGroup& g : row.groups)
            out << "  splitting (" << g.d1 << "," << g.d2 << "): pipeline "
                << to_string(g.pipeline_sum) << ", bracket(outside) "
                << to_string(g.bracket_outside) << ", bracket(inside) "
                << to_string(g.bracket_inside) << "\n";
    }
    out << (ambiguous ? "verdict: neither reading reproduces the pipeline at every order\n"
                      : "verdict: a closed reading reproduces the pipeline at every order\n");
    return out.str();
}

DiagnosticReport weight_product_diagnostic(const LocalP1Config& config, int max_order,
                                           const Specialization& spec,
                                           const VertexOptions& opts) {
    if (config.rank != 2)
        throw InvalidArgument("weight_product_diagnostic: defined for rank 2 only");
    if (spec.rank() != 2)
        throw ContextMismatch("weight_product_diagnostic: need a rank-2 specialization");
    DiagnosticReport report;
    for (int k = 0; k <= max_order; ++k) {
        DiagnosticRow row;
        row.order = k;
        std::map<std::pair<int, int>, Rational> groups;
        for (const FixedPoint& fp : enumerate_fixed_points(config, k)) {
            const Rational w = euler_weight(virtual_tangent(fp, opts), spec);
            const std::vector<int> cl = fp.component_lengths();
            groups[{cl[0], cl[1]}] += w;
            row.pipeline_total += w;
        }
        bool outside_defined = true;
        bool inside_defined = true;
        if (k == 0) {
            // Empty case: the closed product is taken to be 1.
            row.formula_outside = 1;
            row.formula_inside = 1;
        } else {
            Rational po(1), pi(1);
            for (int d1 = 0; d1 <= k; ++d1) {
                const int d2 = k - d1;
                if (const auto b = splitting_bracket(d1, d2, config.twist, spec,
                                                     DiagnosticReading::product_outside))
                    po *= *b;
                else
                    outside_defined = false;
                if (const auto b = splitting_bracket(d1, d2, config.twist, spec,
                                                     DiagnosticReading::product_inside))
                    pi *= *b;
                else
                    inside_defined = false;
            }
            row.formula_outside = outside_defined ? po : Rational(0);
            row.formula_inside = inside_defined ? pi : Rational(0);
        }
        row.outside_matches = outside_defined && row.formula_outside == row.pipeline_total;
        row.inside_matches = inside_defined && row.formula_inside == row.pipeline_total;
        if (k >= 1 && !row.outside_matches && !row.inside_matches)
            report.ambiguous = true;
        for (const auto& [key, sum] : groups) {
            DiagnosticGroup g;
            g.d1 = key.first;
            g.d2 = key.second;
            g.pipeline_sum = sum;
            const auto bo = splitting_bracket(g.d1, g.d2, config.twist, spec,
                                              DiagnosticReading::product_outside);
            const auto bi = splitting_bracket(g.d1, g.d2, config.twist, spec,
                                              DiagnosticReading::product_inside);
            g.bracket_outside = bo ? *bo : Rational(0);
            g.bracket_inside = bi ? *bi : Rational(0);
            row.groups.push_back(std::move(g));
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace conifold
