#pragma once

// Equivalence decision, census enumeration, brute-force verification of
// the classification against the move-orbit oracle, the embeddability
// criterion, and the orientable-quotient pair invariant.
//
// The workhorse is enumerate_valid: the full list of admissible
// monodromy vectors for fixed (two_q, genus, r), in datum order. census
// buckets an enumeration by invariant tuple; verify_theorem additionally
// partitions it into move orbits and cross-tabulates the two partitions.
// Everything is deterministic for any thread count: work is split by
// index, results are merged in index order.

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "orbiclass/datum.hpp"
#include "orbiclass/invariants.hpp"
#include "orbiclass/moves.hpp"
#include "orbiclass/zmod.hpp"

namespace orbiclass {

namespace detail {

// fn(i) -> T for i in [0, n); results placed in index order, so output is
// independent of scheduling. T must be default-constructible.
template <typename T, typename Fn>
std::vector<T> parallel_map(long long n, int threads, Fn&& fn) {
    std::vector<T> out(static_cast<std::size_t>(n));
    if (threads < 2 || n < 2) {
        for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    std::atomic<long long> next{0};
    auto worker = [&] {
        for (long long i = next.fetch_add(1); i < n; i = next.fetch_add(1))
            out[static_cast<std::size_t>(i)] = fn(i);
    };
    std::vector<std::thread> pool;
    const long long nthreads = std::min<long long>(threads, n);
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (long long t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    return out;
}

// All multisets of size r over the even nonzero residues mod two_q, as
// non-decreasing value lists, in lexicographic order.
inline std::vector<std::vector<int>> x_multisets(int two_q, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v <= two_q - 2; v += 2) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 2);
    return out;
}

}  // namespace detail

inline constexpr long long kMaxEnumeration = 50'000'000;

// Every valid monodromy datum with the given parameters, sorted in datum
// order. The candidate space has q^genus d-vectors times the x multisets;
// a guard rejects spaces past kMaxEnumeration candidates.
inline std::vector<MonodromyDatum> enumerate_valid(int two_q, int genus, int r,
                                                   int threads = 1) {
    if (two_q < 4 || two_q % 4 != 0 || two_q > kMaxModulus)
        throw std::invalid_argument("enumerate_valid: two_q = " + std::to_string(two_q) +
                                    " must be a multiple of 4 in [4, " +
                                    std::to_string(kMaxModulus) + "]");
    if (genus < 1) throw std::invalid_argument("enumerate_valid: genus must be >= 1");
    if (r < 0) throw std::invalid_argument("enumerate_valid: r must be >= 0");

    const int q = two_q / 2;
    const std::vector<std::vector<int>> xs = detail::x_multisets(two_q, r);
    long long d_total = 1;
    for (int j = 0; j < genus; ++j) {
        d_total *= q;
        if (d_total * static_cast<long long>(xs.size()) > kMaxEnumeration)
            throw std::invalid_argument("enumerate_valid: candidate space exceeds " +
                                        std::to_string(kMaxEnumeration));
    }
    const long long total = d_total * static_cast<long long>(xs.size());

    const long long chunk = std::max<long long>(1, (total + 8LL * threads - 1) /
                                                       std::max(1, 8 * threads));
    const long long nchunks = (total + chunk - 1) / chunk;
    auto scan = [&](long long c) {
        std::vector<MonodromyDatum> local;
        for (long long idx = c * chunk; idx < std::min(total, (c + 1) * chunk); ++idx) {
            long long di = idx / static_cast<long long>(xs.size());
            const std::vector<int>& x = xs[static_cast<std::size_t>(
                idx % static_cast<long long>(xs.size()))];
            std::vector<int> d(static_cast<std::size_t>(genus));
            for (int j = genus - 1; j >= 0; --j) {
                d[static_cast<std::size_t>(j)] = 2 * static_cast<int>(di % q) + 1;
                di /= q;
            }
            ValidationResult res = validate(two_q, genus, std::move(d), x);
            if (res.ok()) local.push_back(*std::move(res.datum));
        }
        return local;
    };
    std::vector<std::vector<MonodromyDatum>> parts =
        detail::parallel_map<std::vector<MonodromyDatum>>(nchunks, threads, scan);

    std::vector<MonodromyDatum> out;
    for (std::vector<MonodromyDatum>& p : parts)
        out.insert(out.end(), std::make_move_iterator(p.begin()),
                   std::make_move_iterator(p.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// Topological equivalence per the classification theorem: data of
// different orders are incomparable (error); different quotient genus
// means inequivalent; otherwise compare the invariant tuples.
inline bool equivalent(const MonodromyDatum& a, const MonodromyDatum& b) {
    if (a.two_q != b.two_q)
        throw std::invalid_argument("equivalent: data have different orders " +
                                    std::to_string(a.two_q) + " and " + std::to_string(b.two_q));
    if (a.genus != b.genus) return false;
    return invariant_tuple(a) == invariant_tuple(b);
}

// Exactly one of the three constraint styles must be set.
struct CensusConstraint {
    std::optional<int> r;
    std::optional<std::vector<int>> cone_orders;  // multiset, compared sorted
    std::optional<int> max_cover_genus;

    static CensusConstraint by_r(int r) {
        CensusConstraint c;
        c.r = r;
        return c;
    }
    static CensusConstraint by_cone_orders(std::vector<int> orders) {
        CensusConstraint c;
        c.cone_orders = std::move(orders);
        return c;
    }
    static CensusConstraint by_max_cover_genus(int g) {
        CensusConstraint c;
        c.max_cover_genus = g;
        return c;
    }
};

struct CensusClass {
    InvariantTuple tuple;
    MonodromyDatum representative;  // datum-order minimum of the class
    long long vector_count = 0;
};

struct CensusReport {
    int two_q = 4;
    int genus = 1;
    CensusConstraint constraint;
    long long total_vectors = 0;
    std::vector<CensusClass> classes;  // sorted by tuple
};

inline CensusReport census(int two_q, int genus, const CensusConstraint& constraint,
                           int threads = 1) {
    const int set_count = static_cast<int>(constraint.r.has_value()) +
                          static_cast<int>(constraint.cone_orders.has_value()) +
                          static_cast<int>(constraint.max_cover_genus.has_value());
    if (set_count != 1)
        throw std::invalid_argument(
            "census: exactly one of r, cone_orders, max_cover_genus must be set");

    std::vector<int> r_values;
    auto keep = [](const MonodromyDatum&) { return true; };
    std::function<bool(const MonodromyDatum&)> pred = keep;
    if (constraint.r) {
        if (*constraint.r < 0) throw std::invalid_argument("census: r must be >= 0");
        r_values.push_back(*constraint.r);
    } else if (constraint.cone_orders) {
        std::vector<int> target = *constraint.cone_orders;
        for (int m : target)
            if (m < 2) throw std::invalid_argument("census: cone orders must be >= 2");
        std::sort(target.begin(), target.end());
        r_values.push_back(static_cast<int>(target.size()));
        pred = [target](const MonodromyDatum& m) { return cone_orders(m) == target; };
    } else {
        // genus_cover <= M bounds r: each cone point drops chi by at least
        // q, so r*q <= two_q*(2 - genus) + 2M - 2.
        const int M = *constraint.max_cover_genus;
        const long long num = static_cast<long long>(two_q) * (2 - genus) + 2LL * M - 2;
        const long long r_max = num < 0 ? -1 : num / (two_q / 2);
        for (long long r = 0; r <= r_max; ++r) r_values.push_back(static_cast<int>(r));
        pred = [M](const MonodromyDatum& m) { return cover_genus(m).genus_cover <= M; };
    }

    CensusReport report;
    report.two_q = two_q;
    report.genus = genus;
    report.constraint = constraint;
    std::map<InvariantTuple, CensusClass> buckets;
    for (int r : r_values) {
        for (MonodromyDatum& m : enumerate_valid(two_q, genus, r, threads)) {
            if (!pred(m)) continue;
            ++report.total_vectors;
            InvariantTuple t = invariant_tuple(m);
            auto [it, inserted] = buckets.try_emplace(std::move(t));
            if (inserted) {
                it->second.tuple = it->first;
                it->second.representative = std::move(m);  // first hit is the minimum
            }
            ++it->second.vector_count;
        }
    }
    report.classes.reserve(buckets.size());
    for (auto& [t, cls] : buckets) report.classes.push_back(std::move(cls));
    return report;
}

struct SoundnessViolation {
    MonodromyDatum orbit_representative;  // minimum of the offending orbit
    std::vector<InvariantTuple> tuples;   // the distinct tuples found inside it
};

struct CompletenessViolation {
    InvariantTuple tuple;
    int orbit_count = 0;
    std::vector<MonodromyDatum> orbit_representatives;
};

struct VerifyClass {
    InvariantTuple tuple;
    int orbit_count = 0;
};

struct VerifyReport {
    int two_q = 4;
    int genus_max = 1;
    int r_max = 0;
    long long bfs_cap = kDefaultOrbitCap;
    long long total_vectors = 0;
    long long total_orbits = 0;
    std::vector<VerifyClass> classes;
    std::vector<SoundnessViolation> soundness_violations;
    std::vector<CompletenessViolation> completeness_violations;

    bool ok() const { return soundness_violations.empty() && completeness_violations.empty(); }
};

// Cross-checks the invariant-tuple partition against the move-orbit
// partition on every (genus, r) cell with genus <= genus_max and
// r <= r_max. An orbit containing two distinct tuples is a soundness
// violation (the tuple is not move-invariant); a tuple spread over
// several orbits is a completeness violation (the moves do not connect
// the class). Cells run independently, fanned out over `threads`.
inline VerifyReport verify_theorem(int two_q, int genus_max, int r_max,
                                   long long bfs_cap = kDefaultOrbitCap, int threads = 1) {
    if (genus_max < 1) throw std::invalid_argument("verify_theorem: genus_max must be >= 1");
    if (r_max < 0) throw std::invalid_argument("verify_theorem: r_max must be >= 0");

    struct Cell {
        long long vectors = 0;
        long long orbits = 0;
        std::map<InvariantTuple, std::vector<MonodromyDatum>> class_orbit_reps;
        std::vector<SoundnessViolation> soundness;
    };
    std::vector<std::pair<int, int>> cells;
    for (int g = 1; g <= genus_max; ++g)
        for (int r = 0; r <= r_max; ++r) cells.emplace_back(g, r);

    auto run_cell = [&](long long ci) {
        auto [g, r] = cells[static_cast<std::size_t>(ci)];
        Cell cell;
        std::vector<MonodromyDatum> all = enumerate_valid(two_q, g, r);
        cell.vectors = static_cast<long long>(all.size());
        std::set<MonodromyDatum> unvisited(all.begin(), all.end());
        for (const MonodromyDatum& seed : all) {
            if (!unvisited.count(seed)) continue;
            std::vector<MonodromyDatum> orb = orbit(seed, bfs_cap);
            ++cell.orbits;
            std::set<InvariantTuple> tuples;
            for (const MonodromyDatum& m : orb) {
                if (unvisited.erase(m) == 0)
                    throw std::logic_error("verify_theorem: orbit left the enumerated space");
                tuples.insert(invariant_tuple(m));
            }
            for (const InvariantTuple& t : tuples)
                cell.class_orbit_reps[t].push_back(orb.front());  // orb is sorted
            if (tuples.size() > 1)
                cell.soundness.push_back(
                    {orb.front(), std::vector<InvariantTuple>(tuples.begin(), tuples.end())});
        }
        return cell;
    };
    std::vector<Cell> results = detail::parallel_map<Cell>(
        static_cast<long long>(cells.size()), threads, run_cell);

    VerifyReport report;
    report.two_q = two_q;
    report.genus_max = genus_max;
    report.r_max = r_max;
    report.bfs_cap = bfs_cap;
    std::map<InvariantTuple, std::vector<MonodromyDatum>> merged;
    for (Cell& cell : results) {
        report.total_vectors += cell.vectors;
        report.total_orbits += cell.orbits;
        for (auto& [t, reps] : cell.class_orbit_reps)
            merged[t].insert(merged[t].end(), reps.begin(), reps.end());
        report.soundness_violations.insert(report.soundness_violations.end(),
                                           cell.soundness.begin(), cell.soundness.end());
    }
    for (auto& [t, reps] : merged) {
        report.classes.push_back({t, static_cast<int>(reps.size())});
        if (reps.size() > 1) {
            std::sort(reps.begin(), reps.end());
            report.completeness_violations.push_back(
                {t, static_cast<int>(reps.size()), std::move(reps)});
        }
    }
    return report;
}

// True iff the square of the homeomorphism acts freely, i.e. [2] lies in
// no point stabilizer: no cone order equals q.
inline bool f2_fixed_point_free(const MonodromyDatum& m) {
    const int q = m.q();
    for (int v : m.x)
        if (elem_order({v, m.two_q}) == q) return false;
    return true;
}

struct EmbeddabilityVerdict {
    bool embeddable = false;
    int condition = 0;  // 1, 2 or 3; 0 = none
    std::vector<std::string> notes;
};

// Embeddability of the covering surface action in R^3 (three sufficient-
// and-necessary conditions; exactly one can apply to a given datum).
inline EmbeddabilityVerdict embeddable(const MonodromyDatum& dat) {
    EmbeddabilityVerdict verdict;
    const int q = dat.q();
    const int two_q = dat.two_q;
    const int g = dat.genus;
    const int r = dat.r();
    const bool h1_defined = !has_order2_isotropy(dat);

    // Condition 1: f^2 fixed point free and h1 = 0.
    if (f2_fixed_point_free(dat)) {
        if (!h1_defined) {
            verdict.notes.push_back(
                "condition 1 not applicable: f^2 acts freely but an order-2 isotropy "
                "leaves h1 undefined");
        } else if (h1(dat) == 0) {
            verdict.embeddable = true;
            verdict.condition = 1;
            return verdict;
        }
    }

    // Condition 2: q = 2 with cone points and genus at least r.
    if (q == 2 && r >= 1 && g >= r) {
        verdict.embeddable = true;
        verdict.condition = 2;
        return verdict;
    }

    // Condition 3: all isotropies equal to [±m] for a single even m of
    // order q, g >= r, r + g even, and h1 in the half prescribed by
    // [r*m/2]; silent when [r*m/2] lands in {[0], [q]}.
    if (q > 2 && r > 0) {
        const int m = pm_canonical({dat.x[0], two_q}).value;
        bool uniform = elem_order({m, two_q}) == q;
        for (int v : dat.x)
            uniform = uniform && (v == m || v == two_q - m);
        if (uniform && g >= r && (r + g) % 2 == 0) {
            const int v = static_cast<int>((static_cast<long long>(r) * m / 2) % two_q);
            if (v == 0 || v == q) {
                verdict.notes.push_back("condition 3 undecidable: [r*m/2] = [" +
                                        std::to_string(v) + "] is fixed by negation");
            } else {
                const int wanted = v < q ? 1 : 0;
                if (h1(dat) == wanted) {
                    verdict.embeddable = true;
                    verdict.condition = 3;
                    return verdict;
                }
            }
        }
    }
    return verdict;
}

// The unordered pair {values, negated values} for an orientable quotient,
// as a canonically ordered pair of sorted multisets.
inline std::pair<std::vector<int>, std::vector<int>> orientable_pair_invariant(
    const OrientableQuotientDatum& od) {
    std::vector<int> a = od.x;
    a.insert(a.end(), od.c.begin(), od.c.end());
    std::sort(a.begin(), a.end());
    std::vector<int> b;
    b.reserve(a.size());
    for (int v : a) b.push_back((od.two_q - v) % od.two_q);
    std::sort(b.begin(), b.end());
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

}  // namespace orbiclass
