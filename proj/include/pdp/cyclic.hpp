/**
 * Direct construction on Z_w x {0..k-1}: class i develops the base block
 * {(0,0), (i,1), (2i,2), ..., ((k-1)i, k-1)} modulo w in its first
 * coordinates. The pair axiom holds exactly when w has no factorization
 * w = s*t with both factors in [2, k-1]; in particular whenever w is
 * prime or w > (k-1)^2.
 *
 * Canonical point labels: (residue x, group g) -> g*w + x.
 */
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdp/core.hpp"

namespace pdp {

struct Factorization {
    int s = 0;
    int t = 0;
};

/// nullopt when the construction applies; otherwise the smallest-s witness
/// factorization w = s*t with 2 <= s, t <= k-1.
inline std::optional<Factorization> factorization_condition(int k, int w) {
    if (k < 3) throw std::invalid_argument("factorization_condition: k must be at least 3");
    if (w < k) throw std::invalid_argument("factorization_condition: need w >= k");
    for (int s = 2; s <= k - 1; ++s) {
        if (w % s != 0) continue;
        int t = w / s;
        if (t >= 2 && t <= k - 1) return Factorization{s, t};
    }
    return std::nullopt;
}

/**
 * For each ordered pair of group coordinates (c, c+d), the multiset of
 * first-coordinate differences contributed by the k classes:
 * {0, d, 2d, ..., (k-1)d} mod w. The construction is pair-clean exactly
 * when every listed multiset has k distinct values.
 */
inline std::map<std::pair<int, int>, std::vector<int>> difference_table(int k, int w) {
    if (k < 3 || w < k) throw std::invalid_argument("difference_table: need w >= k >= 3");
    std::map<std::pair<int, int>, std::vector<int>> table;
    for (int c = 0; c + 1 < k; ++c)
        for (int d = 1; c + d < k; ++d) {
            std::vector<int> diffs(k);
            for (int i = 0; i < k; ++i) diffs[i] = (i * d) % w;
            table[{c, d}] = std::move(diffs);
        }
    return table;
}

/// Develops the k base blocks without checking the pair condition.
/// Intended for verifier-negative fixtures; the checked entry point is
/// cyclic_pdp.
inline Schedule cyclic_pdp_unchecked(int k, int w) {
    if (k < 3 || w < k) throw std::invalid_argument("cyclic_pdp: need w >= k >= 3");
    auto canon = [w](int residue, int group) { return group * w + residue; };
    std::vector<std::vector<Block>> classes(k);
    for (int slope = 0; slope < k; ++slope) {
        for (int t = 0; t < w; ++t) {
            std::vector<Point> members(k);
            for (int g = 0; g < k; ++g) members[g] = canon((g * slope + t) % w, g);
            // the block's unique point in group `slope` hosts
            Point host = canon((slope * slope + t) % w, slope);
            classes[slope].push_back(Block(std::move(members), host));
        }
    }
    return make_schedule(k, k * w, std::move(classes));
}

/// The checked construction: rejects (with the witness factorization)
/// whenever the pair condition fails, otherwise returns a schedule whose
/// classes appear in slope order and whose blocks follow development
/// order t = 0..w-1.
inline Schedule cyclic_pdp(int k, int w) {
    if (auto witness = factorization_condition(k, w))
        throw std::invalid_argument("cyclic_pdp: rejected, w admits the factorization " +
                                    std::to_string(w) + " = " + std::to_string(witness->s) + "*" +
                                    std::to_string(witness->t) + " with both factors in [2, " +
                                    std::to_string(k - 1) + "]");
    return cyclic_pdp_unchecked(k, w);
}

}  // namespace pdp
