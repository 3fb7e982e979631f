/**
 * Latin squares, transversals, and MOLS families, plus the constructions
 * that turn them into dinner party schedules.
 *
 * A square of order w with k disjoint transversals yields a PDP(3, 3w);
 * more generally k-2 mutually orthogonal squares sharing k disjoint
 * common transversals yield a PDP(k, kw). A family of k-1 MOLS supplies
 * the latter: the last square's symbol classes are common transversals
 * of the rest.
 */
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pdp/core.hpp"
#include "pdp/gf.hpp"

namespace pdp {

struct LatinSquare {
    int order = 0;
    std::vector<int> cells;  // row-major, symbols in [0, order)

    LatinSquare() = default;

    /// Validates the latin property on construction.
    LatinSquare(int w, std::vector<int> grid) : order(w), cells(std::move(grid)) {
        if (w < 2) throw std::invalid_argument("latin square: order must be at least 2");
        if (static_cast<int>(cells.size()) != w * w)
            throw std::invalid_argument("latin square: expected " + std::to_string(w * w) +
                                        " cells, got " + std::to_string(cells.size()));
        std::vector<int> row_seen(w), col_seen(w);
        for (int r = 0; r < w; ++r) {
            std::fill(row_seen.begin(), row_seen.end(), 0);
            for (int c = 0; c < w; ++c) {
                int sym = at(r, c);
                if (sym < 0 || sym >= w)
                    throw std::invalid_argument("latin square: symbol out of range");
                if (row_seen[sym]++)
                    throw std::invalid_argument("latin square: symbol " + std::to_string(sym) +
                                                " repeated in row " + std::to_string(r));
            }
        }
        for (int c = 0; c < w; ++c) {
            std::fill(col_seen.begin(), col_seen.end(), 0);
            for (int r = 0; r < w; ++r)
                if (col_seen[at(r, c)]++)
                    throw std::invalid_argument("latin square: symbol " +
                                                std::to_string(at(r, c)) + " repeated in column " +
                                                std::to_string(c));
        }
    }

    int at(int r, int c) const { return cells[static_cast<std::size_t>(r) * order + c]; }

    bool operator==(const LatinSquare&) const = default;
};

/// w cells, one per row and column, holding w distinct symbols. Kept
/// sorted by row.
struct Transversal {
    std::vector<std::pair<int, int>> cells;

    bool operator==(const Transversal&) const = default;
};

inline bool is_transversal(const LatinSquare& sq, const Transversal& t) {
    const int w = sq.order;
    if (static_cast<int>(t.cells.size()) != w) return false;
    std::vector<int> rows(w, 0), cols(w, 0), syms(w, 0);
    for (auto [r, c] : t.cells) {
        if (r < 0 || r >= w || c < 0 || c >= w) return false;
        if (rows[r]++ || cols[c]++ || syms[sq.at(r, c)]++) return false;
    }
    return true;
}

inline bool disjoint(const Transversal& a, const Transversal& b) {
    for (auto cell : a.cells)
        if (std::find(b.cells.begin(), b.cells.end(), cell) != b.cells.end()) return false;
    return true;
}

/// Exhaustive superposition check: all w^2 ordered symbol pairs distinct.
inline bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order != b.order) return false;
    const int w = a.order;
    std::vector<char> seen(static_cast<std::size_t>(w) * w, 0);
    for (int r = 0; r < w; ++r)
        for (int c = 0; c < w; ++c) {
            std::size_t key = static_cast<std::size_t>(a.at(r, c)) * w + b.at(r, c);
            if (seen[key]) return false;
            seen[key] = 1;
        }
    return true;
}

struct MolsFamily {
    int order = 0;
    std::vector<LatinSquare> squares;
};

/// Throws unless every pair of squares in the family is orthogonal.
inline void validate_mols(const MolsFamily& fam) {
    for (const LatinSquare& sq : fam.squares)
        if (sq.order != fam.order)
            throw std::invalid_argument("MOLS family: square order mismatch");
    for (std::size_t i = 0; i < fam.squares.size(); ++i)
        for (std::size_t j = i + 1; j < fam.squares.size(); ++j)
            if (!are_orthogonal(fam.squares[i], fam.squares[j]))
                throw std::invalid_argument("MOLS family: squares " + std::to_string(i) + " and " +
                                            std::to_string(j) + " are not orthogonal");
}

/// The cyclic square L(r, c) = r + c mod w. Latin for every w >= 2.
inline LatinSquare cyclic_latin_square(int w) {
    std::vector<int> grid(static_cast<std::size_t>(w) * w);
    for (int r = 0; r < w; ++r)
        for (int c = 0; c < w; ++c) grid[static_cast<std::size_t>(r) * w + c] = (r + c) % w;
    return LatinSquare(w, std::move(grid));
}

/**
 * The classical finite-field family: for each nonzero a in GF(q),
 * L_a(x, y) = a*x + y. Any m <= q-1 of these are mutually orthogonal.
 * Deterministic: rows, columns and symbols are field elements in the
 * fixed base-p digit encoding, and the squares take a = 1, 2, ..., m.
 */
inline MolsFamily gf_mols(int q, int m) {
    if (!gf::factor_prime_power(q))
        throw std::invalid_argument("gf_mols: " + std::to_string(q) + " is not a prime power");
    if (m < 1 || m >= q)
        throw std::invalid_argument("gf_mols: need 1 <= m <= q-1, got m=" + std::to_string(m));
    gf::Field field(q);
    MolsFamily fam;
    fam.order = q;
    for (int a = 1; a <= m; ++a) {
        std::vector<int> grid(static_cast<std::size_t>(q) * q);
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y)
                grid[static_cast<std::size_t>(x) * q + y] = field.add(field.mul(a, x), y);
        fam.squares.emplace_back(q, std::move(grid));
    }
    validate_mols(fam);
    return fam;
}

/**
 * Reads `count` pairwise-disjoint transversals of L off an orthogonal
 * mate: the i-th transversal is the cell set where the mate holds
 * symbol i. Rejects non-orthogonal inputs (a repeated L-symbol inside
 * one mate symbol class).
 */
inline std::vector<Transversal> transversals_from_mate(const LatinSquare& L,
                                                       const LatinSquare& mate, int count) {
    if (L.order != mate.order)
        throw std::invalid_argument("transversals_from_mate: order mismatch");
    const int w = L.order;
    if (count < 1 || count > w)
        throw std::invalid_argument("transversals_from_mate: count must be in [1, order]");
    if (!are_orthogonal(L, mate))
        throw std::invalid_argument(
            "transversals_from_mate: squares are not orthogonal "
            "(duplicate row-symbol collision in a mate symbol class)");
    std::vector<Transversal> out(count);
    for (int r = 0; r < w; ++r)
        for (int c = 0; c < w; ++c) {
            int sym = mate.at(r, c);
            if (sym < count) out[sym].cells.emplace_back(r, c);
        }
    return out;  // cells arrive row-sorted by construction
}

/**
 * Lemma machinery: k-2 MOLS plus k disjoint common transversals give a
 * PDP(k, kw). Point labels: rows map to 0..w-1, columns to w..2w-1, and
 * the symbols of square j to (2+j)w..(3+j)w-1. Class i is built from
 * transversal i, and its hosts take the i-th coordinate role (row,
 * column, then one symbol role per square).
 */
inline Schedule pdp_from_transversals(const std::vector<LatinSquare>& squares,
                                      const std::vector<Transversal>& transversals) {
    const int k = static_cast<int>(transversals.size());
    if (k < 3) throw std::invalid_argument("pdp_from_transversals: need at least 3 transversals");
    if (static_cast<int>(squares.size()) != k - 2)
        throw std::invalid_argument("pdp_from_transversals: wrong transversal count: " +
                                    std::to_string(k) + " transversals require " +
                                    std::to_string(k - 2) + " squares, got " +
                                    std::to_string(squares.size()));
    const int w = squares.front().order;
    for (const LatinSquare& sq : squares)
        if (sq.order != w) throw std::invalid_argument("pdp_from_transversals: order mismatch");
    for (std::size_t i = 0; i < squares.size(); ++i)
        for (std::size_t j = i + 1; j < squares.size(); ++j)
            if (!are_orthogonal(squares[i], squares[j]))
                throw std::invalid_argument("pdp_from_transversals: squares not orthogonal");
    for (int i = 0; i < k; ++i) {
        for (const LatinSquare& sq : squares)
            if (!is_transversal(sq, transversals[i]))
                throw std::invalid_argument("pdp_from_transversals: cell set " + std::to_string(i) +
                                            " is not a common transversal");
        for (int j = i + 1; j < k; ++j)
            if (!disjoint(transversals[i], transversals[j]))
                throw std::invalid_argument("pdp_from_transversals: transversals " +
                                            std::to_string(i) + " and " + std::to_string(j) +
                                            " are not disjoint");
    }

    std::vector<std::vector<Block>> classes(k);
    for (int i = 0; i < k; ++i) {
        for (auto [r, c] : transversals[i].cells) {
            std::vector<Point> members;
            members.reserve(k);
            members.push_back(r);
            members.push_back(w + c);
            for (std::size_t j = 0; j < squares.size(); ++j)
                members.push_back((2 + static_cast<int>(j)) * w + squares[j].at(r, c));
            Point host;
            if (i == 0)
                host = r;
            else if (i == 1)
                host = w + c;
            else
                host = (2 + (i - 2)) * w + squares[i - 2].at(r, c);
            classes[i].push_back(Block(std::move(members), host));
        }
    }
    return make_schedule(k, k * w, std::move(classes));
}

/// Single-square form: one square with k disjoint transversals gives a
/// PDP(3, 3w) when k = 3.
inline Schedule pdp_from_transversals(const LatinSquare& square,
                                      const std::vector<Transversal>& transversals) {
    return pdp_from_transversals(std::vector<LatinSquare>{square}, transversals);
}

/**
 * PDP(k, kw) from a family of at least k-1 MOLS: the first k-2 squares
 * build the blocks and the (k-1)-th supplies the common transversals.
 */
inline Schedule pdp_via_mols(const MolsFamily& family, int k) {
    if (k < 3) throw std::invalid_argument("pdp_via_mols: k must be at least 3");
    if (static_cast<int>(family.squares.size()) < k - 1)
        throw std::invalid_argument("pdp_via_mols: need " + std::to_string(k - 1) +
                                    " mutually orthogonal squares, have " +
                                    std::to_string(family.squares.size()));
    if (family.order < k)
        throw std::invalid_argument("pdp_via_mols: order " + std::to_string(family.order) +
                                    " too small for " + std::to_string(k) + " transversals");
    validate_mols(family);
    std::vector<LatinSquare> builders(family.squares.begin(), family.squares.begin() + (k - 2));
    const LatinSquare& mate = family.squares[k - 2];
    std::vector<Transversal> ts = transversals_from_mate(builders.front(), mate, k);
    return pdp_from_transversals(builders, ts);
}

/// PDP(k, kw) from the finite-field MOLS of order w (w a prime power,
/// w >= k).
inline Schedule pdp_via_mols(int k, int w) {
    if (!gf::field_available(w))
        throw std::invalid_argument("pdp_via_mols: no MOLS source for order " +
                                    std::to_string(w));
    return pdp_via_mols(gf_mols(w, std::min(w - 1, k - 1)), k);
}

}  // namespace pdp
