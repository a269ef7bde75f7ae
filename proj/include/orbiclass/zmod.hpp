#pragma once

// Exact arithmetic in finite cyclic groups Z_n.
//
// A CyclicValue is a reduced residue together with its modulus. Binary
// operations require equal moduli and throw std::invalid_argument on a
// mismatch. Moduli are capped at kMaxModulus so that every intermediate
// product fits comfortably in 64 bits; desk-scale group orders are a few
// hundred at most.

#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

namespace orbiclass {

inline constexpr int kMaxModulus = 1 << 20;

struct CyclicValue {
    int value = 0;    // reduced representative in [0, modulus)
    int modulus = 1;  // n >= 1

    CyclicValue() = default;

    CyclicValue(long long v, int n) : modulus(checked_modulus(n)) {
        long long r = v % n;
        if (r < 0) r += n;
        value = static_cast<int>(r);
    }

    static int checked_modulus(int n) {
        if (n < 1 || n > kMaxModulus)
            throw std::invalid_argument("CyclicValue: modulus " + std::to_string(n) +
                                        " outside [1, " + std::to_string(kMaxModulus) + "]");
        return n;
    }

    friend bool operator==(const CyclicValue&, const CyclicValue&) = default;

    CyclicValue operator+(CyclicValue rhs) const {
        require_same_modulus(rhs);
        return {static_cast<long long>(value) + rhs.value, modulus};
    }
    CyclicValue operator-(CyclicValue rhs) const {
        require_same_modulus(rhs);
        return {static_cast<long long>(value) - rhs.value, modulus};
    }
    CyclicValue operator-() const { return {-static_cast<long long>(value), modulus}; }

    // k*v for an integer scalar k (k may be negative).
    CyclicValue times(long long k) const { return {k * value, modulus}; }

    void require_same_modulus(CyclicValue rhs) const {
        if (modulus != rhs.modulus)
            throw std::invalid_argument("CyclicValue: mixed moduli " + std::to_string(modulus) +
                                        " and " + std::to_string(rhs.modulus));
    }
};

// Additive order of v in Z_n: the smallest k >= 1 with k*v == 0, i.e.
// n / gcd(v, n). The identity has order 1.
inline int elem_order(CyclicValue v) {
    return v.modulus / std::gcd(v.value, v.modulus);
}

// Canonical generator d of the subgroup of Z_n generated by `values`:
// d = gcd of the values together with n. d == 0 encodes the trivial
// subgroup (empty or all-zero input); otherwise d divides n and the
// subgroup is {0, d, 2d, ...}.
inline int subgroup_gcd(std::span<const CyclicValue> values, int n) {
    CyclicValue::checked_modulus(n);
    int g = 0;
    for (CyclicValue v : values) {
        if (v.modulus != n)
            throw std::invalid_argument("subgroup_gcd: value has modulus " +
                                        std::to_string(v.modulus) + ", expected " +
                                        std::to_string(n));
        g = std::gcd(g, v.value);
    }
    if (g == 0) return 0;
    return std::gcd(g, n);
}

// Representative of the unordered pair {v, -v}: min(v, n - v).
// Idempotent, and pm_canonical(v) == pm_canonical(-v).
inline CyclicValue pm_canonical(CyclicValue v) {
    int neg = (v.modulus - v.value) % v.modulus;
    return {std::min(v.value, neg), v.modulus};
}

}  // namespace orbiclass
