/**
 * Host assignment for arbitrary class sets via bipartite matching.
 *
 * The point-block incidence graph of k parallel classes of k-subsets is
 * k-regular and bipartite, so a perfect matching always exists; matching
 * each block to a member point yields a host bijection regardless of
 * whether the classes satisfy the pair axiom.
 */
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdp/core.hpp"

namespace pdp {

/// Left nodes are points, right nodes are blocks (class-major order),
/// edges are membership pairs.
struct IncidenceGraph {
    int points = 0;
    int blocks = 0;
    std::vector<std::vector<int>> adjacency;  // point -> block indexes, ascending
};

/// Builds the incidence graph of a class list over points 0..v-1.
/// Throws when some class fails to partition the point set.
inline IncidenceGraph build_incidence(const std::vector<ParallelClass>& classes) {
    if (classes.empty()) throw std::invalid_argument("build_incidence: no classes");
    int v = 0;
    for (const Block& blk : classes.front().blocks)
        for (Point x : blk.members) v = std::max(v, x + 1);
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        std::vector<int> seen(v, 0);
        int covered = 0;
        for (const Block& blk : classes[ci].blocks)
            for (Point x : blk.members) {
                if (x < 0 || x >= v || seen[x]++)
                    throw std::invalid_argument("build_incidence: class " + std::to_string(ci) +
                                                " does not partition the point set");
                ++covered;
            }
        if (covered != v)
            throw std::invalid_argument("build_incidence: class " + std::to_string(ci) +
                                        " covers " + std::to_string(covered) + " of " +
                                        std::to_string(v) + " points");
    }

    IncidenceGraph g;
    g.points = v;
    g.adjacency.resize(v);
    int block_index = 0;
    for (const ParallelClass& pc : classes)
        for (const Block& blk : pc.blocks) {
            for (Point x : blk.members) g.adjacency[x].push_back(block_index);
            ++block_index;
        }
    g.blocks = block_index;
    return g;
}

struct MatchingResult {
    bool perfect = false;
    std::vector<int> point_block;       // point -> matched block, -1 if unmatched
    std::vector<int> block_point;       // block -> matched point, -1 if unmatched
    std::vector<Point> hall_witness;    // on failure: a point set S with |N(S)| < |S|
};

/**
 * Deterministic augmenting-path matching: points are processed in index
 * order and adjacency lists scanned in ascending block order, so equal
 * graphs always produce equal matchings. On failure the witness is the
 * set of points reachable by alternating paths from the first
 * unmatchable point.
 */
inline MatchingResult perfect_matching(const IncidenceGraph& g) {
    MatchingResult result;
    result.point_block.assign(g.points, -1);
    result.block_point.assign(g.blocks, -1);

    std::vector<char> block_visited(g.blocks, 0);

    auto augment = [&](auto&& self, Point x) -> bool {
        for (int blk : g.adjacency[x]) {
            if (block_visited[blk]) continue;
            block_visited[blk] = 1;
            if (result.block_point[blk] < 0 || self(self, result.block_point[blk])) {
                result.block_point[blk] = x;
                result.point_block[x] = blk;
                return true;
            }
        }
        return false;
    };

    for (Point x = 0; x < g.points; ++x) {
        std::fill(block_visited.begin(), block_visited.end(), 0);
        if (augment(augment, x)) continue;

        // Hall violator: x plus every point whose matched block was reached
        result.hall_witness.push_back(x);
        for (int blk = 0; blk < g.blocks; ++blk)
            if (block_visited[blk] && result.block_point[blk] >= 0)
                result.hall_witness.push_back(result.block_point[blk]);
        std::sort(result.hall_witness.begin(), result.hall_witness.end());
        return result;
    }
    // every point matched; perfect additionally requires block saturation
    // (automatic when the sides have equal size)
    result.perfect = std::all_of(result.block_point.begin(), result.block_point.end(),
                                 [](int p) { return p >= 0; });
    return result;
}

/**
 * Turns k parallel classes of k-subsets into a schedule whose hosts come
 * from a perfect matching. The block structure is untouched, so the pair
 * axiom holds on the output exactly when it held on the input.
 */
inline Schedule assign_hosts(const std::vector<ParallelClass>& classes) {
    IncidenceGraph g = build_incidence(classes);
    const int k = static_cast<int>(classes.size());
    if (g.blocks != g.points)
        throw std::invalid_argument("assign_hosts: need as many blocks as points (got " +
                                    std::to_string(g.blocks) + " blocks on " +
                                    std::to_string(g.points) + " points)");
    MatchingResult match = perfect_matching(g);
    if (!match.perfect)
        throw std::invalid_argument("assign_hosts: incidence graph admits no perfect matching");

    std::vector<std::vector<Block>> out;
    out.reserve(classes.size());
    int block_index = 0;
    for (const ParallelClass& pc : classes) {
        std::vector<Block> blocks;
        blocks.reserve(pc.blocks.size());
        for (const Block& blk : pc.blocks)
            blocks.push_back(Block(blk.members, match.block_point[block_index++]));
        out.push_back(std::move(blocks));
    }
    return make_schedule(k, g.points, std::move(out));
}

}  // namespace pdp
