/**
 * Arithmetic in GF(p^n) for small prime powers, used to manufacture
 * families of mutually orthogonal latin squares.
 *
 * Elements are encoded as integers 0..q-1: the base-p digits of an index
 * are the polynomial coefficients, digit i holding the coefficient of X^i.
 * Index 0 is the zero element and index 1 the multiplicative identity.
 * Extension fields reduce modulo a fixed irreducible (the Conway
 * polynomial), so the tables are identical across runs and platforms.
 */
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdp::gf {

struct PrimePower {
    int p = 0;
    int n = 0;
};

inline bool is_prime(int x) {
    if (x < 2) return false;
    for (int d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

/// Decomposes q = p^n with p prime, or nullopt when q is not a prime power.
inline std::optional<PrimePower> factor_prime_power(int q) {
    if (q < 2) return std::nullopt;
    int p = q;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int n = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++n;
    }
    if (rest != 1) return std::nullopt;
    return PrimePower{p, n};
}

namespace detail {

struct IrreducibleEntry {
    int q;
    std::vector<int> coeffs;  // degree n monic polynomial, coeffs[i] multiplies X^i
};

/// Conway polynomials for the extension fields the library ships.
/// Each entry is checked irreducible by the test suite's trial-division oracle.
inline const std::vector<IrreducibleEntry>& irreducible_table() {
    static const std::vector<IrreducibleEntry> table = {
        {4, {1, 1, 1}},                // X^2 + X + 1
        {8, {1, 1, 0, 1}},             // X^3 + X + 1
        {9, {2, 2, 1}},                // X^2 + 2X + 2
        {16, {1, 1, 0, 0, 1}},         // X^4 + X + 1
        {25, {2, 4, 1}},               // X^2 + 4X + 2
        {27, {1, 2, 0, 1}},            // X^3 + 2X + 1
        {32, {1, 0, 1, 0, 0, 1}},      // X^5 + X^2 + 1
        {49, {3, 6, 1}},               // X^2 + 6X + 3
        {64, {1, 1, 0, 1, 1, 0, 1}},   // X^6 + X^4 + X^3 + X + 1
        {81, {2, 0, 0, 2, 1}},         // X^4 + 2X^3 + 2
        {121, {2, 7, 1}},              // X^2 + 7X + 2
        {125, {3, 3, 0, 1}},           // X^3 + 3X + 3
        {128, {1, 1, 0, 0, 0, 0, 0, 1}},  // X^7 + X + 1
        {169, {2, 12, 1}},             // X^2 + 12X + 2
    };
    return table;
}

inline const std::vector<int>* find_irreducible(int q) {
    for (const auto& entry : irreducible_table())
        if (entry.q == q) return &entry.coeffs;
    return nullptr;
}

}  // namespace detail

/// True when Field(q) can be constructed.
inline bool field_available(int q) {
    auto pp = factor_prime_power(q);
    if (!pp) return false;
    if (pp->n == 1) return true;
    return detail::find_irreducible(q) != nullptr;
}

class Field {
public:
    explicit Field(int q) {
        auto pp = factor_prime_power(q);
        if (!pp)
            throw std::invalid_argument("GF(" + std::to_string(q) + "): not a prime power");
        p_ = pp->p;
        n_ = pp->n;
        q_ = q;
        if (n_ > 1) {
            const std::vector<int>* irr = detail::find_irreducible(q);
            if (!irr)
                throw std::invalid_argument("GF(" + std::to_string(q) +
                                            "): no irreducible polynomial in the table");
            irreducible_ = *irr;
        }
        build_tables();
    }

    int p() const { return p_; }
    int degree() const { return n_; }
    int size() const { return q_; }

    int add(int a, int b) const { return add_[index(a, b)]; }
    int mul(int a, int b) const { return mul_[index(a, b)]; }

    int neg(int a) const {
        check(a);
        std::vector<int> digits = to_digits(a);
        for (int& d : digits) d = (p_ - d) % p_;
        return from_digits(digits);
    }

    int sub(int a, int b) const { return add(a, neg(b)); }

private:
    int p_ = 0, n_ = 0, q_ = 0;
    std::vector<int> irreducible_;
    std::vector<int> add_, mul_;

    std::size_t index(int a, int b) const {
        check(a);
        check(b);
        return static_cast<std::size_t>(a) * q_ + b;
    }

    void check(int a) const {
        if (a < 0 || a >= q_)
            throw std::invalid_argument("GF(" + std::to_string(q_) + "): element " +
                                        std::to_string(a) + " out of range");
    }

    std::vector<int> to_digits(int a) const {
        std::vector<int> digits(n_, 0);
        for (int i = 0; i < n_; ++i) {
            digits[i] = a % p_;
            a /= p_;
        }
        return digits;
    }

    int from_digits(const std::vector<int>& digits) const {
        int value = 0;
        for (int i = n_ - 1; i >= 0; --i) value = value * p_ + digits[i];
        return value;
    }

    void build_tables() {
        add_.resize(static_cast<std::size_t>(q_) * q_);
        mul_.resize(static_cast<std::size_t>(q_) * q_);
        for (int a = 0; a < q_; ++a) {
            std::vector<int> da = to_digits(a);
            for (int b = 0; b < q_; ++b) {
                std::vector<int> db = to_digits(b);
                std::vector<int> sum(n_);
                for (int i = 0; i < n_; ++i) sum[i] = (da[i] + db[i]) % p_;
                add_[static_cast<std::size_t>(a) * q_ + b] = from_digits(sum);
                mul_[static_cast<std::size_t>(a) * q_ + b] = poly_mul(da, db);
            }
        }
    }

    // product of two coefficient vectors, reduced mod the irreducible
    int poly_mul(const std::vector<int>& da, const std::vector<int>& db) const {
        std::vector<int> prod(2 * n_ - 1, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (int deg = 2 * n_ - 2; deg >= n_; --deg) {
            int coeff = prod[deg];
            if (coeff == 0) continue;
            prod[deg] = 0;
            // X^deg = -irr_low * X^(deg-n) since the irreducible is monic
            for (int i = 0; i < n_; ++i) {
                int delta = (coeff * (p_ - irreducible_[i])) % p_;
                prod[deg - n_ + i] = (prod[deg - n_ + i] + delta) % p_;
            }
        }
        std::vector<int> low(prod.begin(), prod.begin() + n_);
        return from_digits(low);
    }
};

}  // namespace pdp::gf
