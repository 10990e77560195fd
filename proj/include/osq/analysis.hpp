#pragma once

#include <optional>
#include <string>
#include <vector>

#include "osq/groebner.hpp"

namespace osq {

struct HilbertSummary {
    std::vector<long long> c;     // broken-circuit-free counts, c_0..c_rank
    std::string numerator;        // "1+3z+2z^2"
    std::vector<long long> dims;  // graded dimension for degree 0..max_degree
};

/// Graded dimensions computed two independent ways (partial sums of c and a
/// direct standard-monomial count); disagreement throws std::logic_error.
HilbertSummary hilbert(const GroebnerData& gd, int max_degree);

/// With every generator specialized at q = 0: all obstruction S-polynomials
/// still reduce to 0 and the e = 0 standard words are unchanged.
bool os_specialization_check(const GroebnerData& gd);

struct KoszulReport {
    std::optional<SupersolvablePartition> partition;
    GroundOrder order_used;
    int max_gcircuit_size = 0;
    bool quadratic = false;  // all Groebner circuits of size <= 3
};

/// Looks for a supersolvable partition; computes the Groebner circuits under
/// the induced order (identity order if none) and reports quadraticity.
KoszulReport koszul_check(const Matroid& m);

}  // namespace osq
