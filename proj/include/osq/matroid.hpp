#pragma once

#include <optional>
#include <vector>

#include "osq/ground_order.hpp"
#include "osq/subset.hpp"

namespace osq {

/// Matroid given by its family of circuits on ground set {0,...,n-1}.
/// The family is stored canonically (sorted by size, then mask) but is not
/// required to satisfy the circuit axioms; validate_circuits reports.
class Matroid {
public:
    Matroid(int n, std::vector<Subset> circuits);

    int size() const { return n_; }
    const std::vector<Subset>& circuits() const { return circuits_; }

    /// True iff j contains some circuit.
    bool is_dependent(Subset j) const;

    /// Size of the largest independent set (computed by enumeration).
    int rank() const { return rank_; }

    Subset full_set() const { return n_ == 0 ? 0 : ((Subset{1} << n_) - 1); }

private:
    int n_;
    std::vector<Subset> circuits_;
    int rank_;
};

struct CircuitViolation {
    enum class Axiom { C1, C2, C3 };
    Axiom axiom;
    Subset a = 0;  // offending circuit
    Subset b = 0;  // second circuit for C2/C3
    int x = -1;    // common element for C3
};

/// Empty iff (C1) every circuit has size > 2, (C2) no circuit contains
/// another, (C3) circuit elimination holds.
std::vector<CircuitViolation> validate_circuits(const Matroid& m);

/// { C \ {min C} : C circuit }, minima under ord; deduplicated, sorted.
std::vector<Subset> broken_circuits(const Matroid& m, const GroundOrder& ord);

/// c_i = number of i-subsets containing no broken circuit, i = 0..rank.
std::vector<long long> nbc_counts(const Matroid& m, const GroundOrder& ord);

/// Ordered partition S_1,...,S_f: every pair x,y in S_h closes a 3-circuit
/// {x,y,z} with z in an earlier block.
struct SupersolvablePartition {
    std::vector<Subset> blocks;
};

/// Searches for a partition with rank(m) nonempty blocks satisfying the
/// block invariant, peeling maximal valid top blocks first with backtracking.
std::optional<SupersolvablePartition> find_supersolvable_partition(const Matroid& m);

/// True iff the blocks are disjoint, cover the ground set, and satisfy the
/// pair condition. Independent re-check used by tests and callers.
bool partition_satisfies_invariant(const Matroid& m, const SupersolvablePartition& p);

/// Total order listing the blocks in order, ascending labels within a block.
GroundOrder order_from_partition(const SupersolvablePartition& p);

/// Requires j, k dependent and their intersection independent; true iff
/// (j ∪ k) \ {l} is dependent for every l. Exposed as a test oracle.
bool dependent_union_check(const Matroid& m, Subset j, Subset k);

}  // namespace osq
