#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "osq/ground_order.hpp"
#include "osq/matroid.hpp"
#include "osq/poly.hpp"
#include "osq/rational_matrix.hpp"

namespace fx {

using namespace osq;

// ===== matroids =====

/// Uniform matroid U_{r,n}: circuits are all (r+1)-subsets.
inline Matroid uniform(int r, int n) {
    std::vector<Subset> circuits;
    const Subset all = n == 0 ? 0 : (Subset{1} << n) - 1;
    for (Subset s = 0; s <= all && n > 0; ++s)
        if (subset_size(s) == r + 1) circuits.push_back(s);
    return Matroid(n, circuits);
}

inline Matroid u23() { return uniform(2, 3); }
inline Matroid u24() { return uniform(2, 4); }
inline Matroid u34() { return uniform(3, 4); }
inline Matroid u35() { return uniform(3, 5); }
inline Matroid u36() { return uniform(3, 6); }

inline Matroid boolean_matroid(int n) { return Matroid(n, {}); }

/// Four elements, single circuit {1,2,4} (1-based labels).
inline Matroid circuit124() { return Matroid(4, {make_subset({0, 1, 3})}); }

/// Graphic matroid of K4; edges e12,e13,e23,e14,e24,e34 are labels 0..5.
inline Matroid k4() {
    return Matroid(6, {
                           make_subset({0, 1, 2}),     // e12 e13 e23
                           make_subset({0, 3, 4}),     // e12 e14 e24
                           make_subset({1, 3, 5}),     // e13 e14 e34
                           make_subset({2, 4, 5}),     // e23 e24 e34
                           make_subset({0, 2, 3, 5}),  // 1-2-3-4-1
                           make_subset({0, 1, 4, 5}),  // 1-2-4-3-1
                           make_subset({1, 2, 3, 4}),  // 1-3-2-4-1
                       });
}

/// Columns e_i - e_j over the 6 edges of K4, last coordinate dropped.
inline RationalMatrix k4_matrix() {
    return RationalMatrix::from_strings({
        {"1", "1", "0", "1", "0", "0"},
        {"-1", "0", "1", "0", "1", "0"},
        {"0", "-1", "-1", "0", "0", "1"},
    });
}

// ===== orders =====

inline GroundOrder reversed_order(int n) {
    std::vector<int> seq;
    for (int i = n - 1; i >= 0; --i) seq.push_back(i);
    return GroundOrder::from_sequence(seq);
}

/// Deterministic Fisher-Yates shuffle (stable across platforms).
inline GroundOrder shuffled_order(int n, std::uint64_t seed) {
    std::vector<int> seq;
    for (int i = 0; i < n; ++i) seq.push_back(i);
    std::mt19937_64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(seq[i], seq[j]);
    }
    return GroundOrder::from_sequence(seq);
}

// ===== random polynomials =====

inline FreePolynomial random_poly(OrderPtr ord, std::mt19937_64& rng, int max_terms = 5,
                                  int max_word = 3) {
    const int n = ord->size();
    std::vector<Term> terms;
    const int nt = static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms + 1));
    for (int t = 0; t < nt; ++t) {
        Monomial m;
        m.t0_exp = 2 * static_cast<int>(rng() % 2);
        const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_word + 1));
        for (int i = 0; i < len && n > 0; ++i)
            m.word.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
        const long long c = static_cast<long long>(rng() % 7) - 3;
        terms.push_back({std::move(m), Int(c)});
    }
    return FreePolynomial::from_terms(std::move(ord), std::move(terms));
}

// ===== independent NBC oracle (own subset representation) =====

inline std::vector<long long> nbc_oracle(int n,
                                         const std::vector<std::vector<int>>& circuits,
                                         const std::vector<int>& position_of_label) {
    std::vector<std::vector<int>> broken;
    for (const auto& c : circuits) {
        int least = c.front();
        for (int x : c)
            if (position_of_label[x] < position_of_label[least]) least = x;
        std::vector<int> b;
        for (int x : c)
            if (x != least) b.push_back(x);
        broken.push_back(b);
    }
    std::vector<long long> counts(static_cast<std::size_t>(n) + 1, 0);
    for (long long m = 0; m < (1LL << n); ++m) {
        std::vector<bool> member(static_cast<std::size_t>(n), false);
        int size = 0;
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1) {
                member[static_cast<std::size_t>(i)] = true;
                ++size;
            }
        bool ok = true;
        for (const auto& b : broken) {
            bool inside = true;
            for (int x : b)
                if (!member[static_cast<std::size_t>(x)]) {
                    inside = false;
                    break;
                }
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) ++counts[static_cast<std::size_t>(size)];
    }
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return counts;
}

inline std::vector<std::vector<int>> circuits_as_lists(const Matroid& m) {
    std::vector<std::vector<int>> out;
    for (Subset c : m.circuits()) {
        std::vector<int> lst;
        for (int i = 0; i < m.size(); ++i)
            if (subset_contains(c, i)) lst.push_back(i);
        out.push_back(lst);
    }
    return out;
}

}  // namespace fx
