#include "osq/boundary.hpp"

#include <bit>
#include <stdexcept>

namespace osq {

int ell(Subset J, Subset I, const GroundOrder& ord) {
    if (!subset_includes(J, I))
        throw std::invalid_argument("ell: I is not contained in J");
    const auto elems = elements_ascending(J, ord);
    int sum = 0, nu = 0;
    for (int pos = 0; pos < static_cast<int>(elems.size()); ++pos) {
        if (subset_contains(I, elems[pos])) {
            ++nu;
            sum += (pos + 1) - nu;
        }
    }
    return sum;
}

namespace {

FreePolynomial boundary_sum(Subset J, OrderPtr ord, bool odd_subsets) {
    const auto elems = elements_ascending(J, *ord);
    const int k = static_cast<int>(elems.size());
    std::vector<Term> terms;
    terms.reserve(std::size_t{1} << (k > 0 ? k - 1 : 0));
    for (unsigned sub = 0; sub < (1u << k); ++sub) {
        const int isz = std::popcount(sub);
        if ((isz % 2 == 1) != odd_subsets) continue;
        int ell_val = 0, nu = 0;
        Word w;
        w.reserve(static_cast<std::size_t>(k - isz));
        for (int p = 0; p < k; ++p) {
            if ((sub >> p) & 1u) {
                ++nu;
                ell_val += (p + 1) - nu;
            } else {
                w.push_back(elems[p]);
            }
        }
        const int q_pow = odd_subsets ? (isz - 1) / 2 : isz / 2;  // (-q)^q_pow
        const int sign = ((ell_val + q_pow) % 2 != 0) ? -1 : 1;
        terms.push_back({Monomial{2 * q_pow, std::move(w)}, sign});
    }
    return FreePolynomial::from_terms(std::move(ord), std::move(terms));
}

}  // namespace

FreePolynomial del_minus(Subset J, OrderPtr ord) {
    return boundary_sum(J, std::move(ord), true);
}

FreePolynomial del_plus(Subset J, OrderPtr ord) {
    return boundary_sum(J, std::move(ord), false);
}

}  // namespace osq
