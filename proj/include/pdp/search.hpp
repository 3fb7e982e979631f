/**
 * Exhaustive backtracking search for small PDP instances: the ground
 * truth for nonexistence certificates and a fallback generator when no
 * construction applies.
 *
 * Symmetry breaking for exhaustion claims: the first parallel class is
 * fixed to the lexicographic partition {0..k-1}, {k..2k-1}, ..., and
 * within every class blocks are generated anchored at the least point
 * not yet covered (so each class's first block runs through point 0).
 * Every further class and block is explored, so "exhausted" certifies
 * nonexistence outright.
 *
 * The budget is counted in decision nodes (block placements), never wall
 * time, so outcomes and statistics are reproducible.
 */
#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdp/core.hpp"
#include "pdp/matching.hpp"
#include "pdp/special.hpp"

namespace pdp {

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t backtracks = 0;
    std::vector<std::uint64_t> depth_histogram;  // nodes by blocks already placed

    void absorb(const SearchStats& other) {
        nodes += other.nodes;
        backtracks += other.backtracks;
        if (depth_histogram.size() < other.depth_histogram.size())
            depth_histogram.resize(other.depth_histogram.size(), 0);
        for (std::size_t i = 0; i < other.depth_histogram.size(); ++i)
            depth_histogram[i] += other.depth_histogram[i];
    }
};

enum class SearchOutcome { found, exhausted, budget_exceeded };

inline const char* to_string(SearchOutcome outcome) {
    switch (outcome) {
        case SearchOutcome::found: return "found";
        case SearchOutcome::exhausted: return "exhausted";
        case SearchOutcome::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::budget_exceeded;
    std::optional<Schedule> schedule;  // present iff outcome == found
    SearchStats stats;
};

struct SearchOptions {
    std::uint64_t budget = 50'000'000;  // decision nodes
    std::uint64_t seed = 0;   // find mode only: nonzero shuffles candidate order
    bool exhaust = false;     // explore the whole tree (small v only)
    int max_exhaust_v = 12;   // largest v accepted in exhaust mode
    int restarts = 8;         // budget slices for seeded find mode
};

namespace detail {

class PdpSearch {
public:
    // rank[y] orders candidate partners; identity gives lexicographic search
    PdpSearch(int k, int v, std::uint64_t budget, std::vector<int> rank)
        : k_(k),
          v_(v),
          per_class_(v / k),
          budget_(budget),
          rank_(std::move(rank)),
          pair_used_(static_cast<std::size_t>(v) * v, 0),
          used_(k, std::vector<char>(v, 0)),
          classes_(k) {
        stats_.depth_histogram.assign(static_cast<std::size_t>(k_ - 1) * per_class_, 0);
        for (int b = 0; b < per_class_; ++b) {
            std::vector<Point> members(k_);
            std::iota(members.begin(), members.end(), b * k_);
            mark_pairs(members, +1);
            classes_[0].push_back(Block(std::move(members)));
        }
    }

    // 0 = subtree exhausted without a design, 1 = found, 2 = budget hit
    int run() { return extend(1); }

    const SearchStats& stats() const { return stats_; }
    const std::vector<std::vector<Block>>& found_classes() const { return found_; }

private:
    int k_, v_, per_class_;
    std::uint64_t budget_;
    std::vector<int> rank_;
    std::vector<char> pair_used_;
    std::vector<std::vector<char>> used_;
    std::vector<std::vector<Block>> classes_;
    std::vector<std::vector<Block>> found_;
    SearchStats stats_;
    int depth_ = 0;

    char& pair(Point x, Point y) { return pair_used_[static_cast<std::size_t>(x) * v_ + y]; }

    void mark_pairs(const std::vector<Point>& members, int delta) {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                pair(members[i], members[j]) += static_cast<char>(delta);
                pair(members[j], members[i]) += static_cast<char>(delta);
            }
    }

#ifndef NDEBUG
    // pair bitset must equal a recount from the placed blocks at all times
    void check_pair_consistency() {
        std::vector<char> recount(pair_used_.size(), 0);
        for (const auto& cls : classes_)
            for (const Block& blk : cls)
                for (std::size_t i = 0; i < blk.members.size(); ++i)
                    for (std::size_t j = i + 1; j < blk.members.size(); ++j) {
                        recount[static_cast<std::size_t>(blk.members[i]) * v_ +
                                blk.members[j]] += 1;
                        recount[static_cast<std::size_t>(blk.members[j]) * v_ +
                                blk.members[i]] += 1;
                    }
        assert(recount == pair_used_);
    }
#endif

    int extend(int ci) {
        if (ci == k_) {
            found_ = classes_;
            return 1;
        }
        if (static_cast<int>(classes_[ci].size()) == per_class_) return extend(ci + 1);

        Point anchor = 0;
        while (used_[ci][anchor]) ++anchor;

        std::vector<Point> cand;
        for (Point y = anchor + 1; y < v_; ++y)
            if (!used_[ci][y] && !pair(anchor, y)) cand.push_back(y);
        std::sort(cand.begin(), cand.end(),
                  [this](Point a, Point b) { return rank_[a] < rank_[b]; });
        if (static_cast<int>(cand.size()) < k_ - 1) return 0;

        std::vector<Point> chosen;
        chosen.reserve(k_ - 1);
        return choose(ci, anchor, cand, 0, chosen);
    }

    int choose(int ci, Point anchor, const std::vector<Point>& cand, std::size_t start,
               std::vector<Point>& chosen) {
        if (static_cast<int>(chosen.size()) == k_ - 1) return place(ci, anchor, chosen);
        if (cand.size() - start < static_cast<std::size_t>(k_ - 1) - chosen.size()) return 0;
        for (std::size_t i = start; i < cand.size(); ++i) {
            Point y = cand[i];
            bool compatible = true;
            for (Point z : chosen)
                if (pair(y, z)) {
                    compatible = false;
                    break;
                }
            if (!compatible) continue;
            chosen.push_back(y);
            int rc = choose(ci, anchor, cand, i + 1, chosen);
            chosen.pop_back();
            if (rc) return rc;
        }
        return 0;
    }

    int place(int ci, Point anchor, const std::vector<Point>& chosen) {
        ++stats_.nodes;
        ++stats_.depth_histogram[depth_];
        if (stats_.nodes > budget_) return 2;

        std::vector<Point> members;
        members.reserve(k_);
        members.push_back(anchor);
        members.insert(members.end(), chosen.begin(), chosen.end());
        mark_pairs(members, +1);
        used_[ci][anchor] = 1;
        for (Point y : chosen) used_[ci][y] = 1;
        classes_[ci].push_back(Block(members));
        ++depth_;
#ifndef NDEBUG
        check_pair_consistency();
#endif

        int rc = extend(ci);

        --depth_;
        classes_[ci].pop_back();
        used_[ci][anchor] = 0;
        for (Point y : chosen) used_[ci][y] = 0;
        mark_pairs(members, -1);
#ifndef NDEBUG
        check_pair_consistency();
#endif
        if (rc == 0) ++stats_.backtracks;
        return rc;
    }
};

inline SearchResult run_pdp_search(int k, int v, std::uint64_t budget,
                                   const std::vector<int>& rank) {
    PdpSearch search(k, v, budget, rank);
    int rc = search.run();
    SearchResult result;
    result.stats = search.stats();
    if (rc == 1) {
        std::vector<ParallelClass> classes;
        for (std::size_t ci = 0; ci < search.found_classes().size(); ++ci)
            classes.push_back({static_cast<int>(ci), search.found_classes()[ci]});
        Schedule s = assign_hosts(classes);
        if (!verify(s).ok())
            throw std::logic_error("search_pdp: found design failed verification");
        result.outcome = SearchOutcome::found;
        result.schedule = std::move(s);
    } else if (rc == 0) {
        result.outcome = SearchOutcome::exhausted;
    } else {
        result.outcome = SearchOutcome::budget_exceeded;
    }
    return result;
}

}  // namespace detail

/**
 * Searches for a PDP(k, v). In exhaust mode the whole (symmetry-reduced)
 * tree is explored, so the outcome is either `found` or a nonexistence
 * certificate `exhausted`. In find mode the search stops at the first
 * design; a nonzero seed shuffles candidate order and splits the budget
 * across seeded restarts. Identical inputs give identical outcomes and
 * statistics.
 */
inline SearchResult search_pdp(int k, int v, const SearchOptions& opts = {}) {
    if (k < 3) throw std::invalid_argument("search_pdp: k must be at least 3");
    if (v < 1 || v % k != 0)
        throw std::invalid_argument("search_pdp: k must divide v (got k=" + std::to_string(k) +
                                    ", v=" + std::to_string(v) + ")");
    if (opts.exhaust && v > opts.max_exhaust_v)
        throw std::invalid_argument("search_pdp: v=" + std::to_string(v) +
                                    " exceeds the exhaustive-mode bound " +
                                    std::to_string(opts.max_exhaust_v));

    std::vector<int> identity(v);
    std::iota(identity.begin(), identity.end(), 0);

    const bool seeded_find = !opts.exhaust && opts.seed != 0 && opts.restarts > 1;
    if (!seeded_find) return detail::run_pdp_search(k, v, opts.budget, identity);

    SearchStats total;
    std::uint64_t slice = std::max<std::uint64_t>(1, opts.budget / opts.restarts);
    for (int r = 0; r < opts.restarts; ++r) {
        std::vector<int> rank = identity;
        if (r > 0) {  // first slice keeps lexicographic order
            std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ull + r);
            std::shuffle(rank.begin(), rank.end(), rng);
        }
        SearchResult attempt = detail::run_pdp_search(k, v, slice, rank);
        total.absorb(attempt.stats);
        if (attempt.outcome != SearchOutcome::budget_exceeded) {
            attempt.stats = total;
            return attempt;
        }
    }
    SearchResult result;
    result.outcome = SearchOutcome::budget_exceeded;
    result.stats = total;
    return result;
}

/**
 * Finds four parallel classes of four-point blocks on 24 points in eight
 * groups {3i, 3i+1, 3i+2}: blocks meet four distinct groups and no point
 * pair repeats. Deterministic; used once to freeze the embedded constant
 * behind pdp_4_24. Heuristics: fill classes in order, extend the class at
 * the unused point with the fewest compatible partners, prune candidates
 * group-aware.
 */
inline GroupDivisibleDesign search_resolvable_gdd_3_8(std::uint64_t budget = 100'000'000) {
    constexpr int points = 24;
    constexpr int group_size = 3;
    constexpr int block_size = 4;
    constexpr int class_count = 4;
    constexpr int per_class = points / block_size;

    struct State {
        std::uint64_t budget;
        std::uint64_t nodes = 0;
        std::vector<char> pair_used = std::vector<char>(points * points, 0);
        std::vector<std::vector<char>> used =
            std::vector<std::vector<char>>(class_count, std::vector<char>(points, 0));
        std::vector<std::vector<Block>> classes = std::vector<std::vector<Block>>(class_count);

        char& pair(Point x, Point y) { return pair_used[x * points + y]; }
        static int group_of(Point x) { return x / group_size; }

        bool compatible(Point x, Point y, int ci) {
            return !used[ci][y] && group_of(x) != group_of(y) && !pair(x, y);
        }

        // 0 exhausted, 1 found, 2 budget
        int extend(int ci) {
            if (ci == class_count) return 1;
            if (static_cast<int>(classes[ci].size()) == per_class) return extend(ci + 1);

            // most-constrained unused point anchors the next block
            Point anchor = -1;
            int best = points + 1;
            for (Point x = 0; x < points; ++x) {
                if (used[ci][x]) continue;
                int degree = 0;
                for (Point y = 0; y < points; ++y)
                    if (y != x && compatible(x, y, ci)) ++degree;
                if (degree < best) {
                    best = degree;
                    anchor = x;
                }
            }
            if (anchor < 0 || best < block_size - 1) return 0;

            std::vector<Point> cand;
            for (Point y = 0; y < points; ++y)
                if (y != anchor && compatible(anchor, y, ci)) cand.push_back(y);

            std::vector<Point> chosen;
            return choose(ci, anchor, cand, 0, chosen);
        }

        int choose(int ci, Point anchor, const std::vector<Point>& cand, std::size_t start,
                   std::vector<Point>& chosen) {
            if (static_cast<int>(chosen.size()) == block_size - 1)
                return place(ci, anchor, chosen);
            if (cand.size() - start < static_cast<std::size_t>(block_size - 1) - chosen.size())
                return 0;
            for (std::size_t i = start; i < cand.size(); ++i) {
                Point y = cand[i];
                bool ok = true;
                for (Point z : chosen)
                    if (group_of(y) == group_of(z) || pair(y, z)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                chosen.push_back(y);
                int rc = choose(ci, anchor, cand, i + 1, chosen);
                chosen.pop_back();
                if (rc) return rc;
            }
            return 0;
        }

        int place(int ci, Point anchor, const std::vector<Point>& chosen) {
            if (++nodes > budget) return 2;
            std::vector<Point> members{anchor};
            members.insert(members.end(), chosen.begin(), chosen.end());
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    pair(members[i], members[j]) = 1;
                    pair(members[j], members[i]) = 1;
                }
            for (Point x : members) used[ci][x] = 1;
            classes[ci].push_back(Block(members));

            int rc = extend(ci);
            if (rc == 1) return 1;  // keep the placed blocks

            classes[ci].pop_back();
            for (Point x : members) used[ci][x] = 0;
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    pair(members[i], members[j]) = 0;
                    pair(members[j], members[i]) = 0;
                }
            return rc;
        }
    };

    State state;
    state.budget = budget;
    int rc = state.extend(0);
    if (rc == 2)
        throw std::runtime_error("search_resolvable_gdd_3_8: node budget exceeded");
    if (rc == 0)
        throw std::runtime_error("search_resolvable_gdd_3_8: search space exhausted (no design)");

    GroupDivisibleDesign gdd;
    gdd.points = points;
    gdd.group_size = group_size;
    for (int ci = 0; ci < class_count; ++ci) gdd.classes.push_back({ci, state.classes[ci]});
    if (auto findings = gdd_check(gdd); !findings.empty())
        throw std::logic_error("search_resolvable_gdd_3_8: result failed verification: " +
                               findings.front());
    return gdd;
}

}  // namespace pdp
