#pragma once

// Monodromy vectors for orientation-reversing periodic surface
// homeomorphisms with a non-orientable quotient orbifold.
//
// A MonodromyDatum records the order two_q (a multiple of 4, two_q = 2q
// with q even), the crosscap number `genus` of the quotient surface, the
// images d[0..g) of the crosscap generators and the images x[0..r) of the
// cone generators, all in Z_two_q. Admissible vectors satisfy
//
//   - every d[j] odd (crosscap generators reverse orientation),
//   - every x[i] even and nonzero (cone rotations preserve it),
//   - 2*(d[0]+...+d[g-1]) + (x[0]+...+x[r-1]) == 0 mod two_q
//     (abelianized long relation),
//   - gcd(d..., x..., two_q) == 1 (the monodromy is onto).
//
// The x list is kept sorted by (element order, value); cone orders are
// derived from x, never stored.

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "orbiclass/zmod.hpp"

namespace orbiclass {

enum class ValidationKind {
    BadOrder,
    BadGenus,
    ParityD,
    ParityX,
    ZeroIsotropy,
    LongRelation,
    NotSurjective,
};

inline const char* to_string(ValidationKind k) {
    switch (k) {
        case ValidationKind::BadOrder: return "BadOrder";
        case ValidationKind::BadGenus: return "BadGenus";
        case ValidationKind::ParityD: return "ParityD";
        case ValidationKind::ParityX: return "ParityX";
        case ValidationKind::ZeroIsotropy: return "ZeroIsotropy";
        case ValidationKind::LongRelation: return "LongRelation";
        case ValidationKind::NotSurjective: return "NotSurjective";
    }
    return "?";
}

struct ValidationError {
    ValidationKind kind;
    std::string detail;

    friend bool operator==(const ValidationError&, const ValidationError&) = default;
};

struct MonodromyDatum {
    int two_q = 4;       // order of the homeomorphism, two_q % 4 == 0
    int genus = 1;       // crosscap number of the quotient surface
    std::vector<int> d;  // images of crosscap generators, odd residues
    std::vector<int> x;  // images of cone generators, even nonzero, sorted

    int q() const { return two_q / 2; }
    int r() const { return static_cast<int>(x.size()); }

    CyclicValue d_value(int j) const { return {d[static_cast<std::size_t>(j)], two_q}; }
    CyclicValue x_value(int i) const { return {x[static_cast<std::size_t>(i)], two_q}; }

    friend bool operator==(const MonodromyDatum&, const MonodromyDatum&) = default;

    // Datum ordering: x list ascending, then d list ascending (two_q and
    // genus first so the order is total across parameter spaces).
    friend bool operator<(const MonodromyDatum& a, const MonodromyDatum& b) {
        return std::tie(a.two_q, a.genus, a.x, a.d) < std::tie(b.two_q, b.genus, b.x, b.d);
    }
};

// Sort key for the x list: element order first, then value.
inline bool x_slot_less(int a, int b, int n) {
    int oa = elem_order({a, n});
    int ob = elem_order({b, n});
    return std::tie(oa, a) < std::tie(ob, b);
}

struct ValidationResult {
    std::optional<MonodromyDatum> datum;  // engaged iff errors is empty
    std::vector<ValidationError> errors;

    bool ok() const { return errors.empty(); }
};

// Checks every admissibility constraint and reports the full violation
// list. On success returns the canonical datum (values reduced, x sorted).
inline ValidationResult validate(int two_q, int genus, std::vector<int> d, std::vector<int> x) {
    ValidationResult res;
    auto fail = [&res](ValidationKind k, std::string detail) {
        res.errors.push_back({k, std::move(detail)});
    };

    if (two_q < 4 || two_q % 4 != 0 || two_q > kMaxModulus)
        fail(ValidationKind::BadOrder,
             "two_q = " + std::to_string(two_q) + " must be a multiple of 4 in [4, " +
                 std::to_string(kMaxModulus) + "]");
    if (genus < 1)
        fail(ValidationKind::BadGenus, "genus = " + std::to_string(genus) + " must be >= 1");
    else if (static_cast<int>(d.size()) != genus)
        fail(ValidationKind::BadGenus, "d has length " + std::to_string(d.size()) +
                                           ", genus is " + std::to_string(genus));

    if (two_q < 1 || two_q > kMaxModulus) return res;  // values not interpretable

    auto reduce = [two_q](int v) {
        int r = v % two_q;
        return r < 0 ? r + two_q : r;
    };
    for (int& v : d) v = reduce(v);
    for (int& v : x) v = reduce(v);

    for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j] % 2 == 0)
            fail(ValidationKind::ParityD,
                 "d[" + std::to_string(j + 1) + "] = " + std::to_string(d[j]) + " is even");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            fail(ValidationKind::ZeroIsotropy, "x[" + std::to_string(i + 1) + "] = 0");
        else if (x[i] % 2 != 0)
            fail(ValidationKind::ParityX,
                 "x[" + std::to_string(i + 1) + "] = " + std::to_string(x[i]) + " is odd");
    }

    long long sum = 0;
    for (int v : d) sum += 2LL * v;
    for (int v : x) sum += v;
    if (sum % two_q != 0)
        fail(ValidationKind::LongRelation, "2*sum(d) + sum(x) = " + std::to_string(sum) +
                                               " != 0 mod " + std::to_string(two_q));

    int g = two_q;
    for (int v : d) g = std::gcd(g, v);
    for (int v : x) g = std::gcd(g, v);
    if (g != 1)
        fail(ValidationKind::NotSurjective,
             "gcd(d, x, two_q) = " + std::to_string(g) + " != 1");

    if (!res.ok()) return res;

    std::sort(x.begin(), x.end(), [two_q](int a, int b) { return x_slot_less(a, b, two_q); });
    res.datum = MonodromyDatum{two_q, genus, std::move(d), std::move(x)};
    return res;
}

inline ValidationResult validate(const MonodromyDatum& m) {
    return validate(m.two_q, m.genus, m.d, m.x);
}

// Throwing convenience; the message joins all violation details.
inline MonodromyDatum make_datum(int two_q, int genus, std::vector<int> d, std::vector<int> x) {
    ValidationResult res = validate(two_q, genus, std::move(d), std::move(x));
    if (!res.ok()) {
        std::string msg = "invalid monodromy datum:";
        for (const ValidationError& e : res.errors)
            msg += std::string(" [") + to_string(e.kind) + "] " + e.detail + ";";
        throw std::invalid_argument(msg);
    }
    return *std::move(res.datum);
}

// Multiset of cone orders {order(x_i)}, ascending. Each order divides q.
inline std::vector<int> cone_orders(const MonodromyDatum& m) {
    std::vector<int> out;
    out.reserve(m.x.size());
    for (int v : m.x) out.push_back(elem_order({v, m.two_q}));
    std::sort(out.begin(), out.end());
    return out;
}

struct EulerCharacteristic {
    int chi = 0;          // Euler characteristic of the covering surface
    int genus_cover = 0;  // genus of the covering surface, 1 - chi/2

    friend bool operator==(const EulerCharacteristic&, const EulerCharacteristic&) = default;
};

// chi = two_q * [(2 - genus) - sum_i (1 - 1/m_i)], computed exactly in
// integers (every cone order m_i divides two_q). chi is even for every
// admissible datum, so genus_cover = 1 - chi/2 is an integer.
inline EulerCharacteristic cover_genus(const MonodromyDatum& m) {
    long long chi = static_cast<long long>(m.two_q) * (2 - m.genus);
    for (int v : m.x) {
        int order = elem_order({v, m.two_q});
        chi -= m.two_q - m.two_q / order;
    }
    return {static_cast<int>(chi), static_cast<int>(1 - chi / 2)};
}

// Quotient data for the orientable-quotient-with-boundary case: cone
// values x and boundary values c in Z_two_q. Values are reduced on
// construction; no admissibility theory is enforced beyond that.
struct OrientableQuotientDatum {
    int two_q = 4;
    int genus_orientable = 0;
    std::vector<int> x;
    std::vector<int> c;

    friend bool operator==(const OrientableQuotientDatum&, const OrientableQuotientDatum&) = default;
};

inline OrientableQuotientDatum make_orientable_datum(int two_q, int genus_orientable,
                                                     std::vector<int> x, std::vector<int> c) {
    if (two_q < 4 || two_q % 2 != 0 || two_q > kMaxModulus)
        throw std::invalid_argument("orientable quotient: two_q = " + std::to_string(two_q) +
                                    " must be even and in [4, " + std::to_string(kMaxModulus) + "]");
    if (genus_orientable < 0)
        throw std::invalid_argument("orientable quotient: genus must be >= 0");
    auto reduce = [two_q](int v) {
        int r = v % two_q;
        return r < 0 ? r + two_q : r;
    };
    for (int& v : x) v = reduce(v);
    for (int& v : c) v = reduce(v);
    return {two_q, genus_orientable, std::move(x), std::move(c)};
}

}  // namespace orbiclass
