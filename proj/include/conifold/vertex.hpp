#pragma once

#include "conifold/geometry.hpp"
#include "conifold/reduction.hpp"

#include <utility>

namespace conifold {

/// Which patch absorbs the framing twist with a sign flip (diagnostic
/// switch; `standard` puts t1^{+n} into the beta-patch sheaf twist the
/// same way as alpha).
enum class TwistVariant { standard, flipped };

/// Sign convention for the middle terms of the edge bracket.
/// `cancelling` is the convention under which the bracket collapses
/// against the vertex so every contribution is a Laurent polynomial;
/// `alternate` flips the two middle signs and is kept as a diagnostic.
enum class EdgeBracketForm { cancelling, alternate };

/// `patchwise` reduces vertex-minus-edge separately on each patch and
/// adds the transitioned halves; `vertex_only` drops the edge bracket
/// and reduces the bare two-patch vertex sum (finite only in rank 1).
enum class AssemblyMode { patchwise, vertex_only };

struct VertexOptions {
    TwistVariant twist_variant = TwistVariant::standard;
    EdgeBracketForm edge_form = EdgeBracketForm::cancelling;
    AssemblyMode assembly = AssemblyMode::patchwise;
    /// Test hook: perturb the sheaf character by +t2*w1.  Any
    /// configuration whose first framing component carries nonzero length
    /// then keeps a fixed direction (FixedPart), giving the scans a
    /// deterministic negative control.  Never used in real runs.
    bool corrupt_sheaf = false;
};

/**
 * A finite equivariant character: the virtual tangent space at one fixed
 * configuration, as a Laurent polynomial in t1..t3, w1..wr.
 */
struct TangentCharacter {
    CharPoly value;
    FixedPoint source;
};

/**
 * The full vertex character of one patch, in that patch's local
 * coordinates, as a rational character.  This is the alternating-sum
 * trace of the deformation complex of the pair on the patch:
 *
 *     V = F * Wbar * t1^{-nu}
 *       - bar(F) * W * t1^{nu-1} * t2^{-1} * t3^{-1}
 *       + F * bar(F) * (1-t1)(1-t2)(1-t3) * (t1 t2 t3)^{-1}
 *       + (1 - W * Wbar) / ((1-t1)(1-t2)(1-t3))
 *
 * where F is the patch sheaf character, W = sum_i w_i, Wbar = sum_i
 * w_i^{-1}, and nu is the effective framing twist on the patch (n, or -n
 * on beta under TwistVariant::flipped).
 */
CharRational vertex_character(const FixedPoint& fp, PatchId patch, const VertexOptions& opts = {});

/**
 * The edge bracket of a patch divided by (1 - t1), in the patch's local
 * coordinates.  The bracket is the same alternating combination as the
 * vertex but built from the t1-collapsed overlap character:
 *
 *     B = Ft * Wbar + s * bar(Ft) * W * (t2 t3)^{-1}
 *       - s * Ft * bar(Ft) * (1 - t2^{-1})(1 - t3^{-1})
 *       + (1 - W * Wbar) / ((1-t2)(1-t3))
 *
 * with Ft = W and s = +1 (cancelling) or -1 (alternate).  Returned as
 * (alpha part, beta part), each in its own patch's coordinates.
 */
std::pair<CharRational, CharRational> edge_character(const FixedPoint& fp,
                                                     const VertexOptions& opts = {});

/**
 * The virtual tangent character at a fixed configuration:
 *
 *     T = reduce(V_alpha - E_alpha) + transition(reduce(V_beta - E_beta))
 *
 * with each reduction performed in the patch's own coordinates.  Throws
 * NotFinite if either patch expression fails to be a Laurent polynomial,
 * and FixedPart if the result has a nonzero unit coefficient (a fixed
 * piece of the deformation space, which would make the weight vanish
 * identically).
 */
TangentCharacter virtual_tangent(const FixedPoint& fp, const VertexOptions& opts = {});

/**
 * The same assembly as one global rational character (both patches
 * pushed into alpha coordinates before any division).  Used as a
 * cross-check: its reduction must agree with virtual_tangent whenever
 * both are defined.
 */
CharRational assembled_rational(const FixedPoint& fp, const VertexOptions& opts = {});

} // namespace conifold
