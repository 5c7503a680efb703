#include "conifold/geometry.hpp"

#include <functional>
#include <sstream>

namespace conifold {

LocalP1Config::LocalP1Config(int rank_, int twist_) : rank(rank_), twist(twist_) {
    if (rank < 1)
        throw InvalidArgument("LocalP1Config: rank must be >= 1");
    if (twist < 0)
        throw InvalidArgument("LocalP1Config: twist must be >= 0");
}

FixedPoint::FixedPoint(LocalP1Config config_, std::vector<int> d_alpha_, std::vector<int> d_beta_)
    : config(config_), d_alpha(std::move(d_alpha_)), d_beta(std::move(d_beta_)) {
    if (static_cast<int>(d_alpha.size()) != config.rank ||
        static_cast<int>(d_beta.size()) != config.rank)
        throw InvalidArgument("FixedPoint: one length per framing component per patch");
    for (int d : d_alpha)
        if (d < 0)
            throw InvalidArgument("FixedPoint: negative length");
    for (int d : d_beta)
        if (d < 0)
            throw InvalidArgument("FixedPoint: negative length");
}

int FixedPoint::total_length() const {
    int total = 0;
    for (int d : d_alpha)
        total += d;
    for (int d : d_beta)
        total += d;
    return total;
}

std::vector<int> FixedPoint::component_lengths() const {
    std::vector<int> out(d_alpha);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += d_beta[i];
    return out;
}

std::string FixedPoint::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < d_alpha.size(); ++i)
        out << (i ? "," : "") << d_alpha[i];
    out << " | ";
    for (std::size_t i = 0; i < d_beta.size(); ++i)
        out << (i ? "," : "") << d_beta[i];
    out << ")";
    return out.str();
}

bool operator==(const FixedPoint& a, const FixedPoint& b) {
    return a.config.rank == b.config.rank && a.config.twist == b.config.twist &&
           a.d_alpha == b.d_alpha && a.d_beta == b.d_beta;
}

std::vector<FixedPoint> enumerate_fixed_points(const LocalP1Config& config, int k) {
    if (k < 0)
        throw InvalidArgument("enumerate_fixed_points: negative total length");
    const int parts = 2 * config.rank;
    std::vector<FixedPoint> out;
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    // Larger leading entries first gives lexicographically decreasing order
    // of the concatenated tuples.
    std::function<void(int, int)> descend = [&](int pos, int remaining) {
        if (pos == parts - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            std::vector<int> da(cur.begin(), cur.begin() + config.rank);
            std::vector<int> db(cur.begin() + config.rank, cur.end());
            out.emplace_back(config, std::move(da), std::move(db));
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[static_cast<std::size_t>(pos)] = v;
            descend(pos + 1, remaining - v);
        }
    };
    descend(0, k);
    return out;
}

Monomial patch_transition(const Monomial& m) {
    // t1 -> 1/t1, t2 -> t1*t2, t3 -> t1*t3: exponents (a,b,c) -> (b+c-a,b,c).
    std::vector<std::int64_t> e = m.exponents();
    const std::int64_t a = e[0], b = e[1], c = e[2];
    std::int64_t bc;
    if (__builtin_add_overflow(b, c, &bc) || __builtin_sub_overflow(bc, a, &e[0]))
        throw OverflowError("patch_transition: exponent overflow");
    return Monomial(std::move(e));
}

CharPoly patch_transition(const CharPoly& p) {
    return p.map_monomials([](const Monomial& m) { return patch_transition(m); });
}

CharRational patch_transition(const CharRational& a) {
    return a.map_monomials([](const Monomial& m) { return patch_transition(m); });
}

CharRational sheaf_character(const FixedPoint& fp, PatchId patch) {
    const VariableContext ctx = fp.config.context();
    CharPoly num(ctx);
    const std::vector<int>& d = fp.lengths(patch);
    for (int i = 0; i < fp.config.rank; ++i)
        num.accumulate(
            Monomial::w(ctx, i + 1).times(Monomial::t1(ctx, -static_cast<std::int64_t>(
                                                                d[static_cast<std::size_t>(i)]))),
            1);
    return CharRational(std::move(num), {Monomial::t1(ctx)});
}

CharPoly overlap_character(const FixedPoint& fp) {
    const VariableContext ctx = fp.config.context();
    CharPoly out(ctx);
    for (int i = 1; i <= fp.config.rank; ++i)
        out.accumulate(Monomial::w(ctx, i), 1);
    return out;
}

} // namespace conifold
