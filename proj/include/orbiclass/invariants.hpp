#pragma once

// Topological invariants of a monodromy datum and their packaging into
// the full classifying tuple.
//
//   isotropy  multiset {pm_canonical(x_i)}, sorted
//   h1        in {0,1}; defined only when no isotropy equals [q]
//   l         smallest l >= 1 with <[2l]> = subgroup generated by the x_i
//   h2        only for genus 2: the four-value set {±d_1, ±d_1 + s} in
//             Z_2l, where s = d_1 + d_2 mod 2l; decisive only when l > 1
//   cover_genus  genus of the covering surface (Riemann-Hurwitz)
//
// Two data with the same two_q and genus are topologically equivalent
// exactly when their tuples are equal; the gating of h1 and h2 is
// reflected in the tuple shape (h1 stored as nullopt when undefined, h2
// only ever present for genus 2, and constant when l = 1), so plain
// field-wise equality implements the classification criterion.

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbiclass/datum.hpp"
#include "orbiclass/zmod.hpp"

namespace orbiclass {

// Sorted multiset of unordered-pair representatives {±x_i}.
inline std::vector<int> isotropy_multiset(const MonodromyDatum& m) {
    std::vector<int> out;
    out.reserve(m.x.size());
    for (int v : m.x) out.push_back(pm_canonical({v, m.two_q}).value);
    std::sort(out.begin(), out.end());
    return out;
}

// True iff some isotropy has order 2, i.e. some x_i = [q].
inline bool has_order2_isotropy(const MonodromyDatum& m) {
    for (int v : m.x)
        if (v == m.q()) return true;
    return false;
}

// h1 in {0,1}. Normalize every cone image into {[2],...,[q-2]}: each x_i
// with representative > q is sign-flipped, which shifts the d-sum by the
// old x_i (one cone sign-flip move). Then h1 = 0 iff the normalized d-sum
// lands in {[0],...,[q-1]}. The sum is well defined up to adding [q], so
// the half it lands in is an invariant.
inline int h1(const MonodromyDatum& m) {
    if (has_order2_isotropy(m))
        throw std::domain_error("h1 undefined: datum has an isotropy of order 2");
    CyclicValue s{0, m.two_q};
    for (int v : m.d) s = s + CyclicValue{v, m.two_q};
    for (int v : m.x)
        if (v > m.q()) s = s + CyclicValue{v, m.two_q};
    return s.value < m.q() ? 0 : 1;
}

// Smallest l >= 1 such that [2l] generates the subgroup generated by the
// isotropies. With no (or only trivial) isotropies the subgroup is {0}
// and l = q; otherwise the subgroup is <[t]> for t = gcd(x..., two_q),
// t is even, and l = t/2.
inline int l_value(const MonodromyDatum& m) {
    std::vector<CyclicValue> xs;
    xs.reserve(m.x.size());
    for (int v : m.x) xs.push_back({v, m.two_q});
    int t = subgroup_gcd(xs, m.two_q);
    return t == 0 ? m.q() : t / 2;
}

struct H2Invariant {
    int modulus = 2;          // M = 2l
    std::vector<int> values;  // sorted, deduplicated, all odd mod M

    friend bool operator==(const H2Invariant&, const H2Invariant&) = default;
    friend auto operator<=>(const H2Invariant&, const H2Invariant&) = default;
};

// Genus-2 invariant: with M = 2l, a = d_1 mod M and s = (d_1 + d_2) mod M
// (the long relation forces s into {0, l}), the set {a, M-a, a+s, M-a+s}
// mod M. Throws for genus != 2.
inline H2Invariant h2(const MonodromyDatum& m) {
    if (m.genus != 2)
        throw std::domain_error("h2 defined only for genus 2, got genus " +
                                std::to_string(m.genus));
    const int M = 2 * l_value(m);
    CyclicValue a{m.d[0], M};
    CyclicValue s{m.d[0] + m.d[1], M};
    std::set<int> vals{a.value, (-a).value, (a + s).value, (-a + s).value};
    return {M, std::vector<int>(vals.begin(), vals.end())};
}

struct InvariantTuple {
    int two_q = 4;
    int genus = 1;
    std::vector<int> isotropy;
    std::optional<int> h1;          // nullopt iff an isotropy equals [q]
    int l = 1;
    std::optional<H2Invariant> h2;  // engaged iff genus == 2
    bool h2_applicable = false;     // genus == 2 and l > 1
    int cover_genus = 0;

    friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
    friend auto operator<=>(const InvariantTuple&, const InvariantTuple&) = default;
};

inline InvariantTuple invariant_tuple(const MonodromyDatum& m) {
    InvariantTuple t;
    t.two_q = m.two_q;
    t.genus = m.genus;
    t.isotropy = isotropy_multiset(m);
    if (!has_order2_isotropy(m)) t.h1 = h1(m);
    t.l = l_value(m);
    if (m.genus == 2) t.h2 = h2(m);
    t.h2_applicable = m.genus == 2 && t.l > 1;
    t.cover_genus = cover_genus(m).genus_cover;
    return t;
}

struct UnrealizableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lexicographically smallest valid datum whose invariant tuple equals
// `t` (datum ordering: x list ascending, then d list ascending), found by
// exhaustive search over sign assignments of the isotropies and all odd
// d vectors. Throws UnrealizableError when nothing matches.
inline MonodromyDatum canonical_representative(int two_q, int genus, const InvariantTuple& t) {
    if (t.two_q != two_q || t.genus != genus)
        throw std::invalid_argument("canonical_representative: tuple is for (two_q, genus) = (" +
                                    std::to_string(t.two_q) + "," + std::to_string(t.genus) +
                                    "), requested (" + std::to_string(two_q) + "," +
                                    std::to_string(genus) + ")");
    CyclicValue::checked_modulus(two_q);
    if (genus < 1) throw std::invalid_argument("canonical_representative: genus must be >= 1");

    const int r = static_cast<int>(t.isotropy.size());
    std::set<std::vector<int>> x_candidates;  // canonical x lists, ascending
    for (unsigned long long signs = 0; signs < (1ULL << r); ++signs) {
        std::vector<int> x;
        x.reserve(t.isotropy.size());
        bool usable = true;
        for (int i = 0; i < r; ++i) {
            CyclicValue v = pm_canonical({t.isotropy[static_cast<std::size_t>(i)], two_q});
            if (v.value == 0) {
                usable = false;  // zero isotropy can never validate
                break;
            }
            x.push_back((signs >> i) & 1 ? (-v).value : v.value);
        }
        if (!usable) continue;
        std::sort(x.begin(), x.end(), [two_q](int a, int b) { return x_slot_less(a, b, two_q); });
        x_candidates.insert(std::move(x));
    }

    for (const std::vector<int>& x : x_candidates) {
        std::vector<int> d(static_cast<std::size_t>(genus), 1);
        for (;;) {
            ValidationResult res = validate(two_q, genus, d, x);
            if (res.ok() && invariant_tuple(*res.datum) == t) return *std::move(res.datum);
            // advance the odometer over odd residues, last coordinate fastest
            int pos = genus - 1;
            while (pos >= 0) {
                int& v = d[static_cast<std::size_t>(pos)];
                v += 2;
                if (v < two_q) break;
                v = 1;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    throw UnrealizableError("no valid datum realizes the given invariant tuple");
}

}  // namespace orbiclass
