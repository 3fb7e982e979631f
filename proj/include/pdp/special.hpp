/**
 * The explicit designs that the general machinery does not reach:
 * difference-family development (notably the PDP(5,30) on Z_30) and the
 * group-divisible route to PDP(4,24).
 */
#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdp/core.hpp"
#include "pdp/data.hpp"
#include "pdp/matching.hpp"

namespace pdp {

/**
 * Blocks generated by shifting base blocks around Z_m.
 *
 * Class r (r = 0..num_classes-1) develops each base block by the shifts
 * r, r+step, r+2*step, ... so a class holds m/step translates per base
 * block. With step = m and num_classes = 1 this degenerates to the
 * single full development.
 */
struct DifferenceFamily {
    int modulus = 0;
    std::vector<std::vector<int>> base_blocks;
    int step = 0;         // within-class shift increment
    int num_classes = 0;  // classes are offsets 0..num_classes-1
};

/// Internal differences of one base block, as residues mod m. The pair
/// axiom after development needs all of them distinct.
inline std::vector<int> internal_differences(const std::vector<int>& base, int modulus) {
    std::vector<int> diffs;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = 0; j < base.size(); ++j) {
            if (i == j) continue;
            diffs.push_back((((base[i] - base[j]) % modulus) + modulus) % modulus);
        }
    std::sort(diffs.begin(), diffs.end());
    return diffs;
}

/// Develops the family into parallel classes. Rejects families whose
/// internal differences collide or whose classes fail to partition Z_m.
inline std::vector<ParallelClass> develop_difference_family(const DifferenceFamily& df) {
    if (df.modulus < 1 || df.step < 1 || df.num_classes < 1 || df.base_blocks.empty())
        throw std::invalid_argument("difference family: incomplete description");
    if (df.modulus % df.step != 0)
        throw std::invalid_argument("difference family: step must divide the modulus");

    for (const auto& base : df.base_blocks) {
        std::vector<int> diffs = internal_differences(base, df.modulus);
        if (std::adjacent_find(diffs.begin(), diffs.end()) != diffs.end())
            throw std::invalid_argument(
                "difference family: base block repeats an internal difference");
    }

    const int per_class = df.modulus / df.step;
    std::vector<ParallelClass> classes;
    for (int r = 0; r < df.num_classes; ++r) {
        ParallelClass pc;
        pc.course_index = r;
        for (const auto& base : df.base_blocks)
            for (int j = 0; j < per_class; ++j) {
                int shift = (r + j * df.step) % df.modulus;
                std::vector<Point> members;
                members.reserve(base.size());
                for (int b : base) members.push_back((b + shift) % df.modulus);
                pc.blocks.push_back(Block(std::move(members)));
            }
        // each class must partition Z_m
        std::vector<int> seen(df.modulus, 0);
        for (const Block& blk : pc.blocks)
            for (Point x : blk.members)
                if (seen[x]++)
                    throw std::invalid_argument("difference family: class " + std::to_string(r) +
                                                " does not partition Z_" +
                                                std::to_string(df.modulus));
        classes.push_back(std::move(pc));
    }
    return classes;
}

/**
 * The direct PDP(5,30) on Z_30: thirty translates of {0,1,8,12,14},
 * classes formed by shift residue mod 5, and the explicit host rule
 * h(B0 + i) = i.
 */
inline Schedule buratti_pdp_5_30() {
    DifferenceFamily df;
    df.modulus = 30;
    df.base_blocks = {{0, 1, 8, 12, 14}};
    df.step = 5;
    df.num_classes = 5;
    std::vector<ParallelClass> classes = develop_difference_family(df);
    // class r, position j is the translate by r + 5j, which contains that
    // shift value because the base block contains 0
    std::vector<std::vector<Block>> hosted(classes.size());
    for (std::size_t r = 0; r < classes.size(); ++r)
        for (std::size_t j = 0; j < classes[r].blocks.size(); ++j) {
            int shift = (static_cast<int>(r) + 5 * static_cast<int>(j)) % 30;
            hosted[r].push_back(Block(classes[r].blocks[j].members, shift));
        }
    Schedule s = make_schedule(5, 30, std::move(hosted));
    if (!verify(s).ok()) throw std::logic_error("buratti_pdp_5_30: construction failed to verify");
    return s;
}

/// Group divisible design: points fall into consecutive groups of equal
/// size, blocks meet each group at most once, and the block set resolves
/// into parallel classes.
struct GroupDivisibleDesign {
    int points = 0;
    int group_size = 0;
    std::vector<ParallelClass> classes;

    int group_of(Point x) const { return x / group_size; }
    int group_count() const { return group_size ? points / group_size : 0; }
};

/// Empty result means the design is sound: classes partition the points,
/// blocks never meet a group twice, and no point pair repeats anywhere.
inline std::vector<std::string> gdd_check(const GroupDivisibleDesign& gdd) {
    std::vector<std::string> findings;
    if (gdd.points < 1 || gdd.group_size < 1 || gdd.points % gdd.group_size != 0) {
        findings.push_back("group size does not divide the point count");
        return findings;
    }
    std::set<std::pair<Point, Point>> pairs_seen;
    for (std::size_t ci = 0; ci < gdd.classes.size(); ++ci) {
        std::vector<int> seen(gdd.points, 0);
        for (const Block& blk : gdd.classes[ci].blocks) {
            std::set<int> groups;
            for (Point x : blk.members) {
                if (x < 0 || x >= gdd.points) {
                    findings.push_back("point out of range in class " + std::to_string(ci));
                    continue;
                }
                ++seen[x];
                if (!groups.insert(gdd.group_of(x)).second)
                    findings.push_back("block in class " + std::to_string(ci) +
                                       " meets group " + std::to_string(gdd.group_of(x)) +
                                       " twice");
            }
            const auto& mem = blk.members;
            for (std::size_t i = 0; i < mem.size(); ++i)
                for (std::size_t j = i + 1; j < mem.size(); ++j)
                    if (!pairs_seen.insert({mem[i], mem[j]}).second)
                        findings.push_back("pair {" + std::to_string(mem[i]) + ", " +
                                           std::to_string(mem[j]) + "} repeated");
        }
        for (Point x = 0; x < gdd.points; ++x)
            if (seen[x] != 1) {
                findings.push_back("class " + std::to_string(ci) + " covers point " +
                                   std::to_string(x) + " " + std::to_string(seen[x]) + " times");
                break;
            }
    }
    return findings;
}

/// The embedded four-class instance on 24 points, re-checked on access.
inline const GroupDivisibleDesign& embedded_gdd_3_8() {
    static const GroupDivisibleDesign gdd = [] {
        GroupDivisibleDesign g;
        g.points = 24;
        g.group_size = 3;
        g.classes = data::gdd_3_8_classes();
        if (!gdd_check(g).empty())
            throw std::logic_error("embedded 24-point group-divisible data failed verification");
        return g;
    }();
    return gdd;
}

/**
 * PDP(4,24): four parallel classes of a resolvable group-divisible
 * design on 24 points (the one case with k=4 that neither the cyclic
 * development nor a MOLS family covers), hosts assigned by matching.
 */
inline Schedule pdp_4_24() {
    const GroupDivisibleDesign& gdd = embedded_gdd_3_8();
    Schedule s = assign_hosts(gdd.classes);
    if (!verify(s).ok()) throw std::logic_error("pdp_4_24: construction failed to verify");
    return s;
}

}  // namespace pdp
