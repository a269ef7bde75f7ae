#pragma once

// Automorphism moves on monodromy data, orbit closure, and witnesses.
//
// Four homeomorphism-induced moves act on a MonodromyDatum:
//
//   H1(i,j): d_i <- d_i + 2*d_j, d_j <- -d_j   (crosscap slide, i != j)
//   H2(i,j): d_i <- d_i + x_j,   x_j <- -x_j   (cone sign flip into d_i)
//   H3(i,j): swap x_i, x_j                     (needs equal element orders)
//   H4(i,j): swap d_i, d_j                     (pants move, i != j)
//
// States are canonicalized by re-sorting x after every move; a sign flip
// preserves the element order, so the re-sort is an order-preserving
// relabeling of cone points and stays inside the homeomorphism action.
// Under this canonicalization H3 is pure bookkeeping (swap-then-sort is
// the identity), but it is kept for interface completeness.
//
// orbit() is the breadth-first closure under all legal moves; witness()
// returns a shortest move sequence between two data in the same orbit.
// Both walk moves in a fixed deterministic order (H1 by (i,j)
// lexicographic, then H2, H3, H4) so results are reproducible.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbiclass/datum.hpp"
#include "orbiclass/zmod.hpp"

namespace orbiclass {

enum class MoveKind { H1, H2, H3, H4 };

inline const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::H1: return "H1";
        case MoveKind::H2: return "H2";
        case MoveKind::H3: return "H3";
        case MoveKind::H4: return "H4";
    }
    return "?";
}

struct Move {
    MoveKind kind;
    int i = 1;  // 1-based, indexes d for H1/H4, d then x for H2, x for H3
    int j = 1;

    friend bool operator==(const Move&, const Move&) = default;
};

inline std::string to_string(Move m) {
    return std::string(to_string(m.kind)) + "(" + std::to_string(m.i) + "," +
           std::to_string(m.j) + ")";
}

// Applies one move and returns the canonical result (x re-sorted, full
// revalidation). Throws std::invalid_argument for out-of-range indices,
// i == j where forbidden, or an H3 order mismatch.
inline MonodromyDatum apply_move(const MonodromyDatum& m, Move mv) {
    const int g = m.genus;
    const int r = m.r();
    auto bad = [&mv](const std::string& why) {
        throw std::invalid_argument("illegal move " + to_string(mv) + ": " + why);
    };
    auto check_d = [&](int idx) {
        if (idx < 1 || idx > g) bad("index " + std::to_string(idx) + " outside d range [1, " +
                                    std::to_string(g) + "]");
    };
    auto check_x = [&](int idx) {
        if (idx < 1 || idx > r) bad("index " + std::to_string(idx) + " outside x range [1, " +
                                    std::to_string(r) + "]");
    };

    std::vector<int> d = m.d;
    std::vector<int> x = m.x;
    switch (mv.kind) {
        case MoveKind::H1: {
            check_d(mv.i);
            check_d(mv.j);
            if (mv.i == mv.j) bad("H1 needs i != j");
            CyclicValue di = m.d_value(mv.i - 1);
            CyclicValue dj = m.d_value(mv.j - 1);
            d[static_cast<std::size_t>(mv.i - 1)] = (di + dj.times(2)).value;
            d[static_cast<std::size_t>(mv.j - 1)] = (-dj).value;
            break;
        }
        case MoveKind::H2: {
            check_d(mv.i);
            check_x(mv.j);
            CyclicValue di = m.d_value(mv.i - 1);
            CyclicValue xj = m.x_value(mv.j - 1);
            d[static_cast<std::size_t>(mv.i - 1)] = (di + xj).value;
            x[static_cast<std::size_t>(mv.j - 1)] = (-xj).value;
            break;
        }
        case MoveKind::H3: {
            check_x(mv.i);
            check_x(mv.j);
            if (elem_order(m.x_value(mv.i - 1)) != elem_order(m.x_value(mv.j - 1)))
                bad("H3 needs equal element orders");
            std::swap(x[static_cast<std::size_t>(mv.i - 1)], x[static_cast<std::size_t>(mv.j - 1)]);
            break;
        }
        case MoveKind::H4: {
            check_d(mv.i);
            check_d(mv.j);
            if (mv.i == mv.j) bad("H4 needs i != j");
            std::swap(d[static_cast<std::size_t>(mv.i - 1)], d[static_cast<std::size_t>(mv.j - 1)]);
            break;
        }
    }

    ValidationResult res = validate(m.two_q, m.genus, std::move(d), std::move(x));
    if (!res.ok())
        throw std::logic_error("move " + to_string(mv) + " produced an invalid datum");
    return *std::move(res.datum);
}

// Replays a move sequence left to right.
inline MonodromyDatum apply_moves(MonodromyDatum m, const std::vector<Move>& seq) {
    for (Move mv : seq) m = apply_move(m, mv);
    return m;
}

// Every legal move in the fixed exploration order. H3 and H4 swaps are
// listed once per unordered pair; H1 needs both (i,j) and (j,i) since the
// two are different operations.
inline std::vector<Move> legal_moves(const MonodromyDatum& m) {
    const int g = m.genus;
    const int r = m.r();
    std::vector<Move> out;
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            if (i != j) out.push_back({MoveKind::H1, i, j});
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= r; ++j) out.push_back({MoveKind::H2, i, j});
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            if (elem_order(m.x_value(i - 1)) == elem_order(m.x_value(j - 1)))
                out.push_back({MoveKind::H3, i, j});
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j) out.push_back({MoveKind::H4, i, j});
    return out;
}

inline constexpr long long kDefaultOrbitCap = 10'000'000;

struct OrbitCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Breadth-first closure; calls visit(state, parent, move) once per state
// (parent == nullptr for the seed). Returns false if visit asked to stop.
template <typename Visit>
void bfs_closure(const MonodromyDatum& seed, long long cap, Visit&& visit) {
    std::set<MonodromyDatum> seen;
    std::vector<MonodromyDatum> frontier;
    seen.insert(seed);
    frontier.push_back(seed);
    if (!visit(seed, static_cast<const MonodromyDatum*>(nullptr), Move{})) return;
    while (!frontier.empty()) {
        std::vector<MonodromyDatum> next;
        for (const MonodromyDatum& cur : frontier) {
            for (Move mv : legal_moves(cur)) {
                MonodromyDatum img = apply_move(cur, mv);
                if (!seen.insert(img).second) continue;
                if (static_cast<long long>(seen.size()) > cap)
                    throw OrbitCapExceeded("orbit closure exceeded cap of " +
                                           std::to_string(cap) + " states");
                if (!visit(img, &cur, mv)) return;
                next.push_back(img);
            }
        }
        frontier = std::move(next);
    }
}

}  // namespace detail

// Orbit of a datum under all legal moves, sorted. Throws OrbitCapExceeded
// if more than `cap` states are reached.
inline std::vector<MonodromyDatum> orbit(const MonodromyDatum& m,
                                         long long cap = kDefaultOrbitCap) {
    std::vector<MonodromyDatum> out;
    detail::bfs_closure(m, cap, [&out](const MonodromyDatum& s, const MonodromyDatum*, Move) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Shortest move sequence taking a to b, or nullopt if b is not in
// orbit(a). Requires matching two_q, genus and r. witness(a, a) = [].
inline std::optional<std::vector<Move>> witness(const MonodromyDatum& a, const MonodromyDatum& b,
                                                long long cap = kDefaultOrbitCap) {
    if (a.two_q != b.two_q || a.genus != b.genus || a.r() != b.r())
        throw std::invalid_argument(
            "witness: data have different shapes (two_q, genus, r) = (" +
            std::to_string(a.two_q) + "," + std::to_string(a.genus) + "," +
            std::to_string(a.r()) + ") vs (" + std::to_string(b.two_q) + "," +
            std::to_string(b.genus) + "," + std::to_string(b.r()) + ")");

    std::map<MonodromyDatum, std::pair<MonodromyDatum, Move>> parent;
    bool found = false;
    detail::bfs_closure(a, cap,
                        [&](const MonodromyDatum& s, const MonodromyDatum* from, Move mv) {
                            if (from != nullptr) parent.emplace(s, std::make_pair(*from, mv));
                            if (s == b) {
                                found = true;
                                return false;
                            }
                            return true;
                        });
    if (!found) return std::nullopt;

    std::vector<Move> seq;
    MonodromyDatum cur = b;
    while (!(cur == a)) {
        auto it = parent.find(cur);
        seq.push_back(it->second.second);
        cur = it->second.first;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

}  // namespace orbiclass
