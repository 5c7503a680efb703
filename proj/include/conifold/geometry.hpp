#pragma once

#include "conifold/char_rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace conifold {

/**
 * The geometry: total space of O(-1) + O(-1) over P^1 (the resolved
 * conifold), with a rank-r framing sheaf twisted by O(-n) along the base.
 * The two torus-fixed patches sit over 0 and infinity.
 */
struct LocalP1Config {
    int rank;
    int twist;

    /// Degrees of the two normal line bundles; this engine supports
    /// exactly (-1, -1).
    static constexpr std::pair<int, int> normal_degrees{-1, -1};

    LocalP1Config(int rank_, int twist_);

    VariableContext context() const { return VariableContext(rank); }
};

enum class PatchId { alpha, beta };

/**
 * An isolated fixed configuration: per patch, the composition of cokernel
 * lengths carried by the r framing components at that vertex.  The total
 * length over both vertices is the q-grading of its contribution.
 */
struct FixedPoint {
    LocalP1Config config;
    std::vector<int> d_alpha;
    std::vector<int> d_beta;

    FixedPoint(LocalP1Config config_, std::vector<int> d_alpha_, std::vector<int> d_beta_);

    int total_length() const;
    const std::vector<int>& lengths(PatchId patch) const {
        return patch == PatchId::alpha ? d_alpha : d_beta;
    }

    /// Per-component total lengths (d_alpha[i] + d_beta[i]).
    std::vector<int> component_lengths() const;

    /// Rendering "(a1,...,ar | b1,...,br)".
    std::string str() const;

    friend bool operator==(const FixedPoint&, const FixedPoint&);
};

/**
 * All fixed configurations of total length k: every pair of compositions
 * (d_alpha, d_beta) summing to k.  Count is C(k + 2r - 1, 2r - 1).
 * Ordering is deterministic: lexicographically decreasing in the
 * concatenated tuple (d_alpha, d_beta).
 */
std::vector<FixedPoint> enumerate_fixed_points(const LocalP1Config& config, int k);

/**
 * The coordinate change between the two patches, as a monomial
 * substitution: t1 -> 1/t1, t2 -> t1*t2, t3 -> t1*t3, w untouched.
 * It is an involution and a ring homomorphism.
 */
Monomial patch_transition(const Monomial& m);
CharPoly patch_transition(const CharPoly& p);
CharRational patch_transition(const CharRational& a);

/**
 * The character of the framed sheaf restricted to a patch, in that
 * patch's own coordinates:  sum_i w_i * t1^{-d_i} / (1 - t1), where d_i
 * is component i's cokernel length at that vertex.  Each component is a
 * one-leg chain of sections extending d_i steps beyond the vertex.
 */
CharRational sheaf_character(const FixedPoint& fp, PatchId patch);

/**
 * The t1-collapsed character of the framed sheaf on the patch overlap:
 * sum_i w_i.  The doubly-infinite base direction is handled by the edge
 * assembly, not stored here.
 */
CharPoly overlap_character(const FixedPoint& fp);

} // namespace conifold
