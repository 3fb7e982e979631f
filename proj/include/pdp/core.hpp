/**
 * Core domain types for progressive dinner party designs, plus the
 * construction-independent verifier.
 *
 * A PDP(k, v) is a set of v blocks of size k on v points such that
 *   1. the blocks split into k parallel classes (one per course),
 *   2. no pair of points occurs in more than one block,
 *   3. a host bijection h: blocks -> points exists with h(B) in B.
 *
 * Points are canonical integers 0..v-1. Constructions that work on native
 * labels (row/column/symbol triples, residue/group pairs) map them to
 * canonical form lexicographically.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdp {

using Point = int;

/// One course sitting: a k-subset of points, optionally with its host.
struct Block {
    std::vector<Point> members;  // kept sorted
    std::optional<Point> host;

    Block() = default;

    explicit Block(std::vector<Point> pts, std::optional<Point> h = std::nullopt)
        : members(std::move(pts)), host(h) {
        std::sort(members.begin(), members.end());
    }

    Block(std::initializer_list<Point> pts, std::optional<Point> h = std::nullopt)
        : Block(std::vector<Point>(pts), h) {}

    bool contains(Point x) const {
        return std::binary_search(members.begin(), members.end(), x);
    }

    bool operator==(const Block&) const = default;
};

/// Disjoint blocks covering the whole point set; one per course.
struct ParallelClass {
    int course_index = 0;  // position within the schedule, in [0, k)
    std::vector<Block> blocks;

    bool operator==(const ParallelClass&) const = default;
};

/// The central artifact: k parallel classes plus per-block hosts.
struct Schedule {
    int k = 0;
    int v = 0;
    std::vector<ParallelClass> classes;

    bool operator==(const Schedule&) const = default;
};

/// Builds a schedule from raw block lists, filling in course indexes.
inline Schedule make_schedule(int k, int v, std::vector<std::vector<Block>> class_blocks) {
    Schedule s;
    s.k = k;
    s.v = v;
    s.classes.reserve(class_blocks.size());
    for (std::size_t i = 0; i < class_blocks.size(); ++i)
        s.classes.push_back({static_cast<int>(i), std::move(class_blocks[i])});
    return s;
}

enum class ViolationKind {
    // structural: the object is not a well-formed schedule at all
    structural_class_count,
    structural_block_count,
    structural_block_size,
    structural_duplicate_member,
    structural_point_range,
    structural_course_index,
    // axiom 1
    class_not_partition,
    // axiom 2
    duplicate_pair,
    // axiom 3
    host_missing,
    host_not_in_block,
    host_count,
};

inline bool is_structural(ViolationKind k) {
    switch (k) {
        case ViolationKind::structural_class_count:
        case ViolationKind::structural_block_count:
        case ViolationKind::structural_block_size:
        case ViolationKind::structural_duplicate_member:
        case ViolationKind::structural_point_range:
        case ViolationKind::structural_course_index:
            return true;
        default:
            return false;
    }
}

struct BlockRef {
    int class_index = -1;
    int block_index = -1;
    bool operator==(const BlockRef&) const = default;
};

struct Violation {
    ViolationKind kind;
    std::string message;
    Point a = -1;          // offending point(s), where applicable
    Point b = -1;
    BlockRef first;        // offending block(s), where applicable
    BlockRef second;
    int count = 0;         // for host_count: times the point hosts
};

/**
 * Outcome of verify(). The axiom flags are meaningful only when
 * structural_ok is true; a malformed schedule is reported through
 * structural findings, never as an axiom violation.
 */
struct VerificationReport {
    bool structural_ok = true;
    bool axiom1_ok = false;
    bool axiom2_ok = false;
    bool axiom3_ok = false;
    std::vector<Violation> violations;

    bool ok() const {
        return structural_ok && axiom1_ok && axiom2_ok && axiom3_ok && violations.empty();
    }

    bool has(ViolationKind k) const {
        for (const auto& viol : violations)
            if (viol.kind == k) return true;
        return false;
    }
};

namespace detail {

inline void check_structure(const Schedule& s, VerificationReport& report) {
    auto flag = [&](ViolationKind kind, std::string msg, Point a = -1, BlockRef where = {}) {
        report.structural_ok = false;
        Violation viol;
        viol.kind = kind;
        viol.message = std::move(msg);
        viol.a = a;
        viol.first = where;
        report.violations.push_back(std::move(viol));
    };

    if (s.k < 3 || s.v <= 0 || s.v % s.k != 0 ||
        static_cast<int>(s.classes.size()) != s.k) {
        flag(ViolationKind::structural_class_count,
             "expected k=" + std::to_string(s.k) + " classes on v=" + std::to_string(s.v) +
                 " points, got " + std::to_string(s.classes.size()) + " classes");
        return;  // nothing below is trustworthy
    }
    const int per_class = s.v / s.k;
    for (int ci = 0; ci < s.k; ++ci) {
        const ParallelClass& pc = s.classes[ci];
        if (pc.course_index != ci)
            flag(ViolationKind::structural_course_index,
                 "class " + std::to_string(ci) + " carries course_index " +
                     std::to_string(pc.course_index));
        if (static_cast<int>(pc.blocks.size()) != per_class)
            flag(ViolationKind::structural_block_count,
                 "class " + std::to_string(ci) + " has " + std::to_string(pc.blocks.size()) +
                     " blocks, expected " + std::to_string(per_class));
        for (int bi = 0; bi < static_cast<int>(pc.blocks.size()); ++bi) {
            const Block& blk = pc.blocks[bi];
            BlockRef where{ci, bi};
            if (static_cast<int>(blk.members.size()) != s.k)
                flag(ViolationKind::structural_block_size,
                     "block has " + std::to_string(blk.members.size()) + " members, expected " +
                         std::to_string(s.k),
                     -1, where);
            for (std::size_t m = 0; m < blk.members.size(); ++m) {
                Point x = blk.members[m];
                if (x < 0 || x >= s.v)
                    flag(ViolationKind::structural_point_range,
                         "point " + std::to_string(x) + " outside [0, " + std::to_string(s.v) + ")",
                         x, where);
                if (m > 0 && blk.members[m] == blk.members[m - 1])
                    flag(ViolationKind::structural_duplicate_member,
                         "point " + std::to_string(x) + " repeated inside a block", x, where);
            }
        }
    }
}

}  // namespace detail

/**
 * Checks the three PDP axioms. Pure: never mutates the input, and equal
 * inputs yield equal reports.
 */
inline VerificationReport verify(const Schedule& s) {
    VerificationReport report;
    detail::check_structure(s, report);
    if (!report.structural_ok) return report;

    report.axiom1_ok = report.axiom2_ok = report.axiom3_ok = true;

    // axiom 1: every class partitions the point set
    for (int ci = 0; ci < s.k; ++ci) {
        std::vector<int> seen(s.v, 0);
        for (const Block& blk : s.classes[ci].blocks)
            for (Point x : blk.members) ++seen[x];
        for (Point x = 0; x < s.v; ++x) {
            if (seen[x] == 1) continue;
            report.axiom1_ok = false;
            Violation viol;
            viol.kind = ViolationKind::class_not_partition;
            viol.a = x;
            viol.first = {ci, -1};
            viol.message = "class " + std::to_string(ci) + " covers point " + std::to_string(x) +
                           " " + std::to_string(seen[x]) + " times";
            report.violations.push_back(std::move(viol));
        }
    }

    // axiom 2: no pair of points in more than one block
    {
        std::vector<int> pair_first(static_cast<std::size_t>(s.v) * s.v, -1);
        auto owner = [&](Point x, Point y) -> int& {
            return pair_first[static_cast<std::size_t>(x) * s.v + y];
        };
        std::vector<BlockRef> refs;
        refs.reserve(static_cast<std::size_t>(s.v));
        for (int ci = 0; ci < s.k; ++ci)
            for (int bi = 0; bi < static_cast<int>(s.classes[ci].blocks.size()); ++bi)
                refs.push_back({ci, bi});
        int ref_idx = 0;
        for (int ci = 0; ci < s.k; ++ci)
            for (int bi = 0; bi < static_cast<int>(s.classes[ci].blocks.size()); ++bi, ++ref_idx) {
                const auto& mem = s.classes[ci].blocks[bi].members;
                for (std::size_t i = 0; i < mem.size(); ++i)
                    for (std::size_t j = i + 1; j < mem.size(); ++j) {
                        int& slot = owner(mem[i], mem[j]);
                        if (slot < 0) {
                            slot = ref_idx;
                            continue;
                        }
                        report.axiom2_ok = false;
                        Violation viol;
                        viol.kind = ViolationKind::duplicate_pair;
                        viol.a = mem[i];
                        viol.b = mem[j];
                        viol.first = refs[slot];
                        viol.second = {ci, bi};
                        viol.message = "pair {" + std::to_string(mem[i]) + ", " +
                                       std::to_string(mem[j]) + "} occurs in class " +
                                       std::to_string(refs[slot].class_index) + " and class " +
                                       std::to_string(ci);
                        report.violations.push_back(std::move(viol));
                    }
            }
    }

    // axiom 3: hosts form a bijection onto the point set, h(B) in B
    {
        std::vector<int> hosts_per_point(s.v, 0);
        bool any_missing = false;
        for (int ci = 0; ci < s.k; ++ci)
            for (int bi = 0; bi < static_cast<int>(s.classes[ci].blocks.size()); ++bi) {
                const Block& blk = s.classes[ci].blocks[bi];
                if (!blk.host) {
                    any_missing = true;
                    report.axiom3_ok = false;
                    Violation viol;
                    viol.kind = ViolationKind::host_missing;
                    viol.first = {ci, bi};
                    viol.message = "block " + std::to_string(bi) + " of class " +
                                   std::to_string(ci) + " has no host";
                    report.violations.push_back(std::move(viol));
                    continue;
                }
                ++hosts_per_point[*blk.host];
                if (!blk.contains(*blk.host)) {
                    report.axiom3_ok = false;
                    Violation viol;
                    viol.kind = ViolationKind::host_not_in_block;
                    viol.a = *blk.host;
                    viol.first = {ci, bi};
                    viol.message = "host " + std::to_string(*blk.host) +
                                   " is not a member of its block";
                    report.violations.push_back(std::move(viol));
                }
            }
        for (Point x = 0; x < s.v; ++x) {
            if (hosts_per_point[x] == 1) continue;
            if (hosts_per_point[x] == 0 && any_missing) continue;  // implied by host_missing
            report.axiom3_ok = false;
            Violation viol;
            viol.kind = ViolationKind::host_count;
            viol.a = x;
            viol.count = hosts_per_point[x];
            viol.message = "point " + std::to_string(x) + " hosts " +
                           std::to_string(hosts_per_point[x]) + " times";
            report.violations.push_back(std::move(viol));
        }
    }

    return report;
}

/// Occurrence count for every unordered pair covered by some block.
/// Sums to v*k*(k-1)/2 for a structurally well-formed schedule.
inline std::map<std::pair<Point, Point>, int> pair_multiset(const Schedule& s) {
    std::map<std::pair<Point, Point>, int> counts;
    for (const ParallelClass& pc : s.classes)
        for (const Block& blk : pc.blocks) {
            const auto& mem = blk.members;
            for (std::size_t i = 0; i < mem.size(); ++i)
                for (std::size_t j = i + 1; j < mem.size(); ++j)
                    ++counts[{mem[i], mem[j]}];
        }
    return counts;
}

struct FeasibilityResult {
    bool feasible = false;
    std::string reason;  // empty when feasible
};

/**
 * Necessary conditions only: k must divide v and v >= k^2 (a point meets
 * k(k-1) distinct others, so v >= k(k-1)+1, and divisibility pushes that
 * to k^2). Passing this check does not promise a construction exists.
 */
inline FeasibilityResult feasibility_check(int k, int v) {
    if (k < 3) throw std::invalid_argument("feasibility_check: k must be at least 3");
    if (v < 1) throw std::invalid_argument("feasibility_check: v must be positive");
    if (v % k != 0)
        return {false, "k does not divide v (" + std::to_string(v) + " % " + std::to_string(k) +
                           " = " + std::to_string(v % k) + ")"};
    if (v < k * k)
        return {false,
                "v < k^2 (" + std::to_string(v) + " < " + std::to_string(k * k) + ")"};
    return {true, ""};
}

/// Schedule equality up to block order within each class.
inline bool equal_up_to_block_order(const Schedule& lhs, const Schedule& rhs) {
    if (lhs.k != rhs.k || lhs.v != rhs.v || lhs.classes.size() != rhs.classes.size())
        return false;
    auto key = [](const Block& blk) { return std::make_pair(blk.members, blk.host); };
    for (std::size_t ci = 0; ci < lhs.classes.size(); ++ci) {
        std::vector<std::pair<std::vector<Point>, std::optional<Point>>> a, b;
        for (const Block& blk : lhs.classes[ci].blocks) a.push_back(key(blk));
        for (const Block& blk : rhs.classes[ci].blocks) b.push_back(key(blk));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return true;
}

}  // namespace pdp
