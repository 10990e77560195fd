#include "osq/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace osq {

namespace {

std::string numerator_string(const std::vector<long long>& c) {
    std::string out = std::to_string(c.empty() ? 1 : c[0]);
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        out += "+";
        if (c[i] != 1) out += std::to_string(c[i]);
        out += "z";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace

HilbertSummary hilbert(const GroebnerData& gd, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
    HilbertSummary summary;
    summary.c = nbc_counts(gd.matroid, *gd.order);
    summary.numerator = numerator_string(summary.c);

    const int rank = gd.matroid.rank();
    summary.dims.assign(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        long long sum = 0;
        for (int i = 0; i <= std::min(d, rank); ++i)
            sum += summary.c[static_cast<std::size_t>(i)];
        summary.dims[static_cast<std::size_t>(d)] = sum;
    }

    // independent route: count standard monomials degree by degree
    std::vector<long long> direct(static_cast<std::size_t>(max_degree) + 1, 0);
    for (const Monomial& m : standard_monomials(gd, max_degree))
        ++direct[static_cast<std::size_t>(m.degree())];
    if (direct != summary.dims)
        throw std::logic_error(
            "hilbert: partial sums disagree with the standard-monomial count");
    return summary;
}

bool os_specialization_check(const GroebnerData& gd) {
    GeneratorSet at_zero = gd.gens.specialized(QEvaluation{0});
    if (!buchberger_verify(at_zero).pass) return false;

    // e = 0 standard words must coincide with the q-generic ones
    const Subset all = gd.matroid.full_set();
    if (gd.matroid.size() == 0) return true;
    for (Subset s = 0;; ++s) {
        Word w;
        for (int l : elements_ascending(s, *gd.order)) w.push_back(l);
        if (gd.gens.find_reducible(w).has_value() !=
            at_zero.find_reducible(w).has_value())
            return false;
        if (s == all) break;
    }
    return true;
}

KoszulReport koszul_check(const Matroid& m) {
    KoszulReport report{std::nullopt, GroundOrder(m.size()), 0, false};
    report.partition = find_supersolvable_partition(m);
    if (report.partition) report.order_used = order_from_partition(*report.partition);

    const auto gcircuits = groebner_circuits(m, report.order_used);
    for (Subset j : gcircuits)
        report.max_gcircuit_size = std::max(report.max_gcircuit_size, subset_size(j));
    report.quadratic = report.max_gcircuit_size <= 3;
    return report;
}

}  // namespace osq
