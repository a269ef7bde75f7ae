#pragma once

// Brute-force oracles for the test suite, written from the raw
// definitions rather than via the library's algorithms: additive order
// by iterated addition, subgroups by closure instead of gcd, surjectivity
// by closure size, validity by a from-scratch recursive enumerator, h1 by
// literally mutating the datum through its normalization. Agreement
// between these and the library is what the tests certify.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace brute {

// Smallest k >= 1 with k*v == 0 mod n.
inline int elem_order_loop(int v, int n) {
    int acc = ((v % n) + n) % n;
    if (acc == 0) return 1;
    int k = 1;
    int cur = acc;
    while (cur != 0) {
        cur = (cur + acc) % n;
        ++k;
    }
    return k;
}

// The subgroup of Z_n generated by `values`, as an explicit element set.
inline std::set<int> subgroup_closure(const std::vector<int>& values, int n) {
    std::set<int> s{0};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> snapshot(s.begin(), s.end());
        for (int a : snapshot)
            for (int v : values) {
                int t = ((a + v) % n + n) % n;
                if (s.insert(t).second) grew = true;
            }
    }
    return s;
}

// A monodromy vector in oracle form: the d list as given and the x list
// sorted by plain value (the library's canonical x order differs, so
// comparisons go through this neutral shape).
using Vector = std::pair<std::vector<int>, std::vector<int>>;

// All admissible vectors for (two_q, genus, r), checked from the
// definitions: d odd, x even nonzero, 2*sum(d) + sum(x) == 0 mod two_q,
// and the values generate all of Z_two_q (closure size == two_q).
inline std::vector<Vector> all_valid(int two_q, int genus, int r) {
    std::vector<Vector> out;
    std::vector<int> d, x;
    auto valid = [&] {
        long long sum = 0;
        for (int v : d) sum += 2LL * v;
        for (int v : x) sum += v;
        if (sum % two_q != 0) return false;
        std::vector<int> all = d;
        all.insert(all.end(), x.begin(), x.end());
        return static_cast<int>(subgroup_closure(all, two_q).size()) == two_q;
    };
    auto pick_x = [&](auto&& self, int from) -> void {
        if (static_cast<int>(x.size()) == r) {
            if (valid()) out.push_back({d, x});
            return;
        }
        for (int v = from; v <= two_q - 2; v += 2) {
            x.push_back(v);
            self(self, v);
            x.pop_back();
        }
    };
    auto pick_d = [&](auto&& self) -> void {
        if (static_cast<int>(d.size()) == genus) {
            pick_x(pick_x, 2);
            return;
        }
        for (int v = 1; v <= two_q - 1; v += 2) {
            d.push_back(v);
            self(self);
            d.pop_back();
        }
    };
    pick_d(pick_d);
    std::sort(out.begin(), out.end());
    return out;
}

// h1 by the normalization procedure itself: sign-flip every cone image
// with representative above q into the lower range, absorbing each old
// value into d[0], then read off which half the d-sum lands in.
inline int h1_by_normalization(std::vector<int> d, std::vector<int> x, int two_q) {
    const int q = two_q / 2;
    for (int& v : x)
        if (v > q) {
            d[0] = (d[0] + v) % two_q;
            v = two_q - v;
        }
    long long s = 0;
    for (int v : d) s += v;
    return s % two_q < q ? 0 : 1;
}

// Smallest l in [1, q] whose element [2l] generates the same subgroup as
// the isotropy values.
inline int smallest_l(const std::vector<int>& x, int two_q) {
    const std::set<int> target = subgroup_closure(x, two_q);
    for (int l = 1; l <= two_q / 2; ++l)
        if (subgroup_closure({2 * l}, two_q) == target) return l;
    return -1;
}

}  // namespace brute
