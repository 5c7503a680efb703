#include "conifold/vertex.hpp"

#include <utility>

/*
 * Each torus-fixed configuration contributes a virtual tangent character
 * assembled from the two affine patches of the base curve.  On a patch,
 * the deformation complex of the framed pair traces out
 *
 *   V  =  F * Wbar * t1^{-nu}                      (maps from the framing)
 *       - bar(F) * W * t1^{nu-1} / (t2 t3)         (dual maps, Serre-twisted)
 *       + F * bar(F) * (1-t1)(1-t2)(1-t3)/(t1 t2 t3)   (sheaf self-Ext's)
 *       + (1 - W*Wbar) / ((1-t1)(1-t2)(1-t3))      (framed structure sheaf)
 *
 * with F the patch sheaf character, W = sum_i w_i its framing character,
 * and nu the effective twist.  Both patches overlap along the base
 * direction; the shared cylinder is removed once per patch by an edge
 * bracket built from the t1-collapsed overlap character.  Subtracting the
 * bracket inside each patch (before any series manipulation) leaves two
 * honestly finite Laurent characters whose sum, after moving the second
 * patch through the coordinate change, is the virtual tangent character.
 */

namespace conifold {

namespace {

CharPoly framing_sum(const VariableContext& ctx, int direction) {
    CharPoly out(ctx);
    for (int i = 1; i <= ctx.rank(); ++i)
        out.accumulate(Monomial::w(ctx, i, direction), 1);
    return out;
}

} // namespace

CharRational vertex_character(const FixedPoint& fp, PatchId patch, const VertexOptions& opts) {
    const VariableContext ctx = fp.config.context();
    const std::int64_t n = fp.config.twist;
    const std::int64_t nu =
        (patch == PatchId::beta && opts.twist_variant == TwistVariant::flipped) ? -n : n;

    CharRational F = sheaf_character(fp, patch);
    if (opts.corrupt_sheaf)
        F = F.add(CharRational::from_poly(
            CharPoly(Monomial::t2(ctx).times(Monomial::w(ctx, 1)), 1)));
    const CharRational Fbar = F.bar();

    const CharPoly W = framing_sum(ctx, 1);
    const CharPoly Wbar = framing_sum(ctx, -1);

    const Monomial t1 = Monomial::t1(ctx);
    const Monomial t2 = Monomial::t2(ctx);
    const Monomial t3 = Monomial::t3(ctx);
    const Monomial u123 = t1.times(t2).times(t3).inverse();

    CharRational total = F.mul(Wbar).mul_monomial(Monomial::t1(ctx, -nu));
    total = total.sub(Fbar.mul(W).mul_monomial(
        Monomial::t1(ctx, nu - 1).times(t2.inverse()).times(t3.inverse())));
    const CharPoly koszul = one_minus(t1).mul(one_minus(t2)).mul(one_minus(t3));
    total = total.add(F.mul(Fbar).mul(koszul).mul_monomial(u123));
    CharPoly unit_part = CharPoly::constant(ctx, 1).sub(W.mul(Wbar));
    total = total.add(CharRational(std::move(unit_part), {t1, t2, t3}));
    return total;
}

std::pair<CharRational, CharRational> edge_character(const FixedPoint& fp,
                                                     const VertexOptions& opts) {
    const VariableContext ctx = fp.config.context();
    const std::int64_t sign = opts.edge_form == EdgeBracketForm::cancelling ? 1 : -1;

    const CharPoly Ft = overlap_character(fp);
    const CharPoly Ftbar = Ft.bar();
    const CharPoly W = framing_sum(ctx, 1);
    const CharPoly Wbar = framing_sum(ctx, -1);

    const Monomial t1 = Monomial::t1(ctx);
    const Monomial t2 = Monomial::t2(ctx);
    const Monomial t3 = Monomial::t3(ctx);
    const Monomial u23 = t2.times(t3).inverse();

    CharPoly bracket = Ft.mul(Wbar);
    bracket = bracket.add(Ftbar.mul(W).mul_monomial(u23).mul_scalar(sign));
    const CharPoly cross = one_minus(t2.inverse()).mul(one_minus(t3.inverse()));
    bracket = bracket.sub(Ft.mul(Ftbar).mul(cross).mul_scalar(sign));
    CharPoly unit_part = CharPoly::constant(ctx, 1).sub(W.mul(Wbar));

    const CharRational half = CharRational(std::move(bracket), {t1})
                                  .add(CharRational(std::move(unit_part), {t1, t2, t3}));
    // The bracket reads identically in each patch's own coordinates.
    return {half, half};
}

TangentCharacter virtual_tangent(const FixedPoint& fp, const VertexOptions& opts) {
    CharPoly total = [&] {
        try {
            if (opts.assembly == AssemblyMode::vertex_only) {
                const CharRational va = vertex_character(fp, PatchId::alpha, opts);
                const CharRational vb =
                    patch_transition(vertex_character(fp, PatchId::beta, opts));
                return reduce_to_polynomial(va.add(vb));
            }
            const auto [ea, eb] = edge_character(fp, opts);
            const CharPoly ta =
                reduce_to_polynomial(vertex_character(fp, PatchId::alpha, opts).sub(ea));
            const CharPoly tb =
                reduce_to_polynomial(vertex_character(fp, PatchId::beta, opts).sub(eb));
            return ta.add(patch_transition(tb));
        } catch (const NotPolynomial& e) {
            throw NotFinite("virtual tangent at " + fp.str() +
                            " is not a finite character: " + e.what());
        }
    }();
    if (const std::int64_t fixed = total.unit_coefficient(); fixed != 0)
        throw FixedPart("virtual tangent at " + fp.str() + " keeps a fixed direction (" +
                        std::to_string(fixed) + " * 1)");
    return TangentCharacter{std::move(total), fp};
}

CharRational assembled_rational(const FixedPoint& fp, const VertexOptions& opts) {
    if (opts.assembly == AssemblyMode::vertex_only) {
        const CharRational va = vertex_character(fp, PatchId::alpha, opts);
        const CharRational vb = patch_transition(vertex_character(fp, PatchId::beta, opts));
        return va.add(vb);
    }
    const auto [ea, eb] = edge_character(fp, opts);
    const CharRational aa = vertex_character(fp, PatchId::alpha, opts).sub(ea);
    const CharRational ab = vertex_character(fp, PatchId::beta, opts).sub(eb);
    return aa.add(patch_transition(ab));
}

} // namespace conifold
