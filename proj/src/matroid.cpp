#include "osq/matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace osq {

namespace {

constexpr int kMaxGroundSize = 20;  // enumeration-based queries; desk scale

}  // namespace

Matroid::Matroid(int n, std::vector<Subset> circuits)
    : n_(n), circuits_(std::move(circuits)) {
    if (n < 0 || n > kMaxGroundSize)
        throw std::invalid_argument("ground set size out of supported range");
    const Subset all = full_set();
    for (Subset c : circuits_)
        if (!subset_includes(all, c))
            throw std::invalid_argument("circuit has labels outside the ground set");
    std::sort(circuits_.begin(), circuits_.end(), [](Subset a, Subset b) {
        int sa = subset_size(a), sb = subset_size(b);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    circuits_.erase(std::unique(circuits_.begin(), circuits_.end()), circuits_.end());

    rank_ = 0;
    for (Subset s = 0; s <= all; ++s) {
        if (!is_dependent(s)) rank_ = std::max(rank_, subset_size(s));
        if (all == 0) break;
    }
}

bool Matroid::is_dependent(Subset j) const {
    for (Subset c : circuits_)
        if (subset_includes(j, c)) return true;
    return false;
}

std::vector<CircuitViolation> validate_circuits(const Matroid& m) {
    std::vector<CircuitViolation> out;
    const auto& cs = m.circuits();
    for (Subset c : cs)
        if (subset_size(c) <= 2)
            out.push_back({CircuitViolation::Axiom::C1, c, 0, -1});
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (i != j && cs[i] != cs[j] && subset_includes(cs[j], cs[i]))
                out.push_back({CircuitViolation::Axiom::C2, cs[i], cs[j], -1});
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = 0; j < cs.size(); ++j) {
            if (i == j) continue;
            Subset common = cs[i] & cs[j];
            for (int x = 0; x < m.size(); ++x) {
                if (!subset_contains(common, x)) continue;
                Subset target = (cs[i] | cs[j]) & ~(Subset{1} << x);
                bool found = false;
                for (Subset l : cs)
                    if (subset_includes(target, l)) {
                        found = true;
                        break;
                    }
                if (!found)
                    out.push_back({CircuitViolation::Axiom::C3, cs[i], cs[j], x});
            }
        }
    }
    return out;
}

std::vector<Subset> broken_circuits(const Matroid& m, const GroundOrder& ord) {
    std::vector<Subset> out;
    for (Subset c : m.circuits()) {
        if (c == 0) continue;
        int least = least_element(c, ord);
        out.push_back(c & ~(Subset{1} << least));
    }
    std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
        int sa = subset_size(a), sb = subset_size(b);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<long long> nbc_counts(const Matroid& m, const GroundOrder& ord) {
    const auto broken = broken_circuits(m, ord);
    std::vector<long long> counts(static_cast<std::size_t>(m.size()) + 1, 0);
    const Subset all = m.full_set();
    for (Subset s = 0;; ++s) {
        bool contains_broken = false;
        for (Subset b : broken)
            if (subset_includes(s, b)) {
                contains_broken = true;
                break;
            }
        if (!contains_broken) ++counts[static_cast<std::size_t>(subset_size(s))];
        if (s == all) break;
    }
    for (std::size_t i = static_cast<std::size_t>(m.rank()) + 1; i < counts.size(); ++i)
        if (counts[i] != 0)
            throw std::invalid_argument("nbc_counts: set family is not a matroid");
    counts.resize(static_cast<std::size_t>(m.rank()) + 1);
    return counts;
}

namespace {

// z candidates closing a triangle with the pair (x, y)
std::vector<Subset> triangle_table(const Matroid& m) {
    std::vector<Subset> table(static_cast<std::size_t>(m.size()) * m.size(), 0);
    for (Subset c : m.circuits()) {
        if (subset_size(c) != 3) continue;
        int e[3], k = 0;
        for (int i = 0; i < m.size(); ++i)
            if (subset_contains(c, i)) e[k++] = i;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                if (a == b) continue;
                int z = e[3 - a - b];
                table[static_cast<std::size_t>(e[a]) * m.size() + e[b]] |= Subset{1} << z;
            }
    }
    return table;
}

bool block_valid(const Matroid& m, const std::vector<Subset>& table, Subset block,
                 Subset earlier) {
    for (int x = 0; x < m.size(); ++x) {
        if (!subset_contains(block, x)) continue;
        for (int y = x + 1; y < m.size(); ++y) {
            if (!subset_contains(block, y)) continue;
            Subset z = table[static_cast<std::size_t>(x) * m.size() + y];
            if ((z & earlier) == 0) return false;
        }
    }
    return true;
}

bool peel(const Matroid& m, const std::vector<Subset>& table, Subset remaining,
          int blocks_left, std::vector<Subset>& out) {
    if (blocks_left == 0) return remaining == 0;
    if (remaining == 0) return false;
    if (subset_size(remaining) < blocks_left) return false;

    // candidate last blocks, maximal size first
    std::vector<Subset> candidates;
    for (Subset s = remaining;; s = (s - 1) & remaining) {
        if (s != 0 && subset_size(remaining) - subset_size(s) >= blocks_left - 1 &&
            block_valid(m, table, s, remaining & ~s))
            candidates.push_back(s);
        if (s == 0) break;
    }
    std::sort(candidates.begin(), candidates.end(), [](Subset a, Subset b) {
        int sa = subset_size(a), sb = subset_size(b);
        if (sa != sb) return sa > sb;
        return a < b;
    });
    for (Subset cand : candidates) {
        out.push_back(cand);
        if (peel(m, table, remaining & ~cand, blocks_left - 1, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

std::optional<SupersolvablePartition> find_supersolvable_partition(const Matroid& m) {
    if (m.size() == 0) return SupersolvablePartition{};
    const auto table = triangle_table(m);
    std::vector<Subset> rev;
    if (!peel(m, table, m.full_set(), m.rank(), rev)) return std::nullopt;
    std::reverse(rev.begin(), rev.end());
    return SupersolvablePartition{std::move(rev)};
}

bool partition_satisfies_invariant(const Matroid& m, const SupersolvablePartition& p) {
    Subset seen = 0;
    for (Subset block : p.blocks) {
        if (block == 0 || (block & seen) != 0) return false;
        for (int x = 0; x < m.size(); ++x) {
            if (!subset_contains(block, x)) continue;
            for (int y = x + 1; y < m.size(); ++y) {
                if (!subset_contains(block, y)) continue;
                bool ok = false;
                for (int z = 0; z < m.size() && !ok; ++z) {
                    if (!subset_contains(seen, z)) continue;
                    Subset tri = (Subset{1} << x) | (Subset{1} << y) | (Subset{1} << z);
                    for (Subset c : m.circuits())
                        if (c == tri) {
                            ok = true;
                            break;
                        }
                }
                if (!ok) return false;
            }
        }
        seen |= block;
    }
    return seen == m.full_set();
}

GroundOrder order_from_partition(const SupersolvablePartition& p) {
    Subset all = 0;
    int total = 0;
    for (Subset b : p.blocks) {
        if ((all & b) != 0)
            throw std::invalid_argument("partition blocks are not disjoint");
        all |= b;
        total += subset_size(b);
    }
    if (all != (total == 0 ? 0 : (Subset{1} << total) - 1))
        throw std::invalid_argument("partition does not cover {0,...,n-1}");
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(total));
    for (Subset b : p.blocks)
        for (int x = 0; x < 32; ++x)
            if (subset_contains(b, x)) seq.push_back(x);
    return GroundOrder::from_sequence(seq);
}

bool dependent_union_check(const Matroid& m, Subset j, Subset k) {
    if (!m.is_dependent(j) || !m.is_dependent(k))
        throw std::invalid_argument("dependent_union_check: j and k must be dependent");
    if (m.is_dependent(j & k))
        throw std::invalid_argument("dependent_union_check: j ∩ k must be independent");
    const Subset u = j | k;
    for (int l = 0; l < m.size(); ++l) {
        if (!subset_contains(u, l)) continue;
        if (!m.is_dependent(u & ~(Subset{1} << l))) return false;
    }
    return true;
}

}  // namespace osq
