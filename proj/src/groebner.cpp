#include "osq/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "osq/boundary.hpp"

namespace osq {

std::string Generator::name(const GroundOrder& ord) const {
    switch (kind) {
        case Kind::Square:
            return "sq(" + std::to_string(s + 1) + ")";
        case Kind::Comm:
            return "comm(" + std::to_string(r + 1) + "," + std::to_string(s + 1) + ")";
        case Kind::Circuit:
            return "d" + subset_to_string(circuit, ord);
    }
    return "?";
}

GeneratorSet::GeneratorSet(OrderPtr ord, std::vector<Generator> gens)
    : order_(std::move(ord)), gens_(std::move(gens)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const Generator& g = gens_[i];
        const Term& lt = g.poly.leading();
        if (lt.coeff != 1 || lt.mon.t0_exp != 0 || lt.mon.word != g.lead)
            throw std::logic_error("generator leading-term mismatch: " +
                                   g.name(*order_));
        auto& bucket = by_length_[static_cast<int>(g.lead.size())];
        bucket.emplace(g.lead, static_cast<int>(i));  // keeps the first in family order
    }
}

std::optional<std::pair<int, int>> GeneratorSet::find_reducible(const Word& w) const {
    const int len = static_cast<int>(w.size());
    for (int pos = 0; pos < len; ++pos) {
        int best = -1;
        for (const auto& [l, bucket] : by_length_) {
            if (pos + l > len) break;
            Word key(w.begin() + pos, w.begin() + pos + l);
            auto it = bucket.find(key);
            if (it != bucket.end() && (best < 0 || it->second < best)) best = it->second;
        }
        if (best >= 0) return std::make_pair(pos, best);
    }
    return std::nullopt;
}

GeneratorSet GeneratorSet::specialized(const QEvaluation& ev) const {
    std::vector<Generator> out;
    out.reserve(gens_.size());
    for (const Generator& g : gens_) {
        Generator h = g;
        h.poly = evaluate_q(g.poly, ev);
        out.push_back(std::move(h));
    }
    return GeneratorSet(order_, std::move(out));
}

std::vector<Subset> groebner_circuits(const Matroid& m, const GroundOrder& ord) {
    if (ord.size() != m.size())
        throw std::invalid_argument("ground order size does not match the matroid");
    std::vector<Subset> dependent;
    const Subset all = m.full_set();
    if (m.size() > 0)
        for (Subset s = 0;; ++s) {
            if (m.is_dependent(s)) dependent.push_back(s);
            if (s == all) break;
        }
    std::sort(dependent.begin(), dependent.end(),
              [&](Subset a, Subset b) { return set_deglex_less(a, b, ord); });

    std::vector<Subset> admitted;
    std::vector<Subset> broken;  // K \ {k1} for each admitted K
    for (Subset j : dependent) {
        const Subset jp = j & ~(Subset{1} << least_element(j, ord));
        bool excluded = false;
        for (Subset kp : broken) {
            if (kp != jp && is_convex_subset(kp, jp, ord)) {
                excluded = true;
                break;
            }
        }
        if (!excluded) {
            admitted.push_back(j);
            broken.push_back(jp);
        }
    }
    return admitted;
}

GeneratorSet build_generators(const Matroid& m, OrderPtr ord,
                              const std::vector<Subset>& gcircuits) {
    const int n = ord->size();
    if (n != m.size())
        throw std::invalid_argument("ground order size does not match the matroid");
    for (Subset j : gcircuits)
        if (!m.is_dependent(j))
            throw std::invalid_argument("build_generators: independent set in the circuit list");
    std::vector<Generator> gens;
    for (int p = 0; p < n; ++p) {
        const int s = ord->label_at(p);
        Generator g{Generator::Kind::Square, s, -1, 0, Word{s, s},
                    FreePolynomial::monomial(ord, Monomial{0, {s, s}}) -
                        FreePolynomial::q_power(ord, 1)};
        gens.push_back(std::move(g));
    }
    for (int rp = 1; rp < n; ++rp) {
        for (int sp = 0; sp < rp; ++sp) {
            const int r = ord->label_at(rp);
            const int s = ord->label_at(sp);
            FreePolynomial poly = FreePolynomial::monomial(ord, Monomial{0, {r, s}}) +
                                  FreePolynomial::monomial(ord, Monomial{0, {s, r}}) -
                                  Int(2) * FreePolynomial::q_power(ord, 1);
            gens.push_back({Generator::Kind::Comm, s, r, 0, Word{r, s}, std::move(poly)});
        }
    }
    for (Subset j : gcircuits) {
        const Subset jp = j & ~(Subset{1} << least_element(j, *ord));
        Word lead;
        for (int l : elements_ascending(jp, *ord)) lead.push_back(l);
        gens.push_back(
            {Generator::Kind::Circuit, -1, -1, j, std::move(lead), del_minus(j, ord)});
    }
    return GeneratorSet(std::move(ord), std::move(gens));
}

GroebnerData build_groebner_data(Matroid m, OrderPtr ord) {
    auto gcircuits = groebner_circuits(m, *ord);
    auto gens = build_generators(m, ord, gcircuits);
    return GroebnerData{std::move(m), std::move(ord), std::move(gcircuits),
                        std::move(gens)};
}

FreePolynomial reduce(FreePolynomial f, const GeneratorSet& gens) {
    if (!f.order()->same_as(*gens.order()))
        throw std::invalid_argument("reduce: ground order mismatch");
    std::vector<Term> normal;
    while (!f.is_zero()) {
        const Term lt = f.leading();
        auto hit = gens.find_reducible(lt.mon.word);
        if (!hit) {
            normal.push_back(lt);
            f.drop_leading();
            continue;
        }
        const auto [pos, gi] = *hit;
        const Generator& g = gens.gens()[static_cast<std::size_t>(gi)];
        Word left(lt.mon.word.begin(), lt.mon.word.begin() + pos);
        Word right(lt.mon.word.begin() + pos + static_cast<int>(g.lead.size()),
                   lt.mon.word.end());
        f -= g.poly.framed(left, right, lt.mon.t0_exp, lt.coeff);
    }
    // collected in strictly decreasing deglex order already
    FreePolynomial out = FreePolynomial::from_terms(gens.order(), std::move(normal));
    return out;
}

std::vector<Obstruction> obstructions(const GeneratorSet& gs) {
    std::vector<Obstruction> out;
    const auto& gens = gs.gens();
    const int n = static_cast<int>(gens.size());
    for (int a = 0; a < n; ++a) {
        const Word& u = gens[static_cast<std::size_t>(a)].lead;
        for (int b = 0; b < n; ++b) {
            const Word& v = gens[static_cast<std::size_t>(b)].lead;
            const int maxk = static_cast<int>(std::min(u.size(), v.size())) - 1;
            for (int k = 1; k <= maxk; ++k)
                if (std::equal(u.end() - k, u.end(), v.begin()))
                    out.push_back({Obstruction::Kind::Overlap, a, b, k});
            if (a != b && v.size() < u.size()) {
                const int span = static_cast<int>(u.size() - v.size());
                for (int off = 0; off <= span; ++off)
                    if (std::equal(v.begin(), v.end(), u.begin() + off))
                        out.push_back({Obstruction::Kind::Containment, a, b, off});
            }
            if (a < b && u == v)
                out.push_back({Obstruction::Kind::Containment, a, b, 0});
        }
    }
    return out;
}

FreePolynomial s_polynomial(const Obstruction& o, const GeneratorSet& gs) {
    const Generator& f = gs.gens()[static_cast<std::size_t>(o.left)];
    const Generator& g = gs.gens()[static_cast<std::size_t>(o.right)];
    const Word& u = f.lead;
    const Word& v = g.lead;
    if (o.kind == Obstruction::Kind::Overlap) {
        // f . v[k:]  -  u[:|u|-k] . g
        Word m2(v.begin() + o.offset, v.end());
        Word n1(u.begin(), u.end() - o.offset);
        return f.poly.framed({}, m2) - g.poly.framed(n1, {});
    }
    // f  -  u[:off] . g . u[off+|v|:]
    Word n1(u.begin(), u.begin() + o.offset);
    Word n2(u.begin() + o.offset + static_cast<int>(v.size()), u.end());
    return f.poly - g.poly.framed(n1, n2);
}

VerifyReport buchberger_verify(const GeneratorSet& gens, int jobs) {
    const auto obs = obstructions(gens);
    std::vector<char> failed(obs.size(), 0);
    std::vector<FreePolynomial> nf(obs.size(), FreePolynomial::zero(gens.order()));

    auto run = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            FreePolynomial r = reduce(s_polynomial(obs[i], gens), gens);
            if (!r.is_zero()) {
                failed[i] = 1;
                nf[i] = std::move(r);
            }
        }
    };

    if (jobs <= 1 || obs.size() < 2) {
        run(0, obs.size());
    } else {
        const std::size_t workers =
            std::min<std::size_t>(static_cast<std::size_t>(jobs), obs.size());
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; ++t) {
            const std::size_t lo = obs.size() * t / workers;
            const std::size_t hi = obs.size() * (t + 1) / workers;
            pool.emplace_back(run, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    VerifyReport report;
    report.n_obstructions = static_cast<int>(obs.size());
    for (std::size_t i = 0; i < obs.size(); ++i)
        if (failed[i]) report.failures.push_back({obs[i], std::move(nf[i])});
    report.pass = report.failures.empty();
    return report;
}

VerifyReport buchberger_verify(const GroebnerData& gd, int jobs) {
    return buchberger_verify(gd.gens, jobs);
}

bool dependent_reduction_check(const GroebnerData& gd) {
    const Subset all = gd.matroid.full_set();
    if (gd.matroid.size() == 0) return true;
    for (Subset s = 0;; ++s) {
        if (gd.matroid.is_dependent(s) &&
            !reduce(del_minus(s, gd.order), gd.gens).is_zero())
            return false;
        if (s == all) break;
    }
    return true;
}

std::vector<Monomial> standard_monomials(const GroebnerData& gd, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
    const auto broken = broken_circuits(gd.matroid, *gd.order);
    const Subset all = gd.matroid.full_set();
    std::vector<Monomial> out;
    for (Subset s = 0;; ++s) {
        Word w;
        for (int l : elements_ascending(s, *gd.order)) w.push_back(l);
        const bool reducible = gd.gens.find_reducible(w).has_value();
        bool has_broken = false;
        for (Subset b : broken)
            if (subset_includes(s, b)) {
                has_broken = true;
                break;
            }
        if (reducible != has_broken)
            throw std::logic_error(
                "standard monomials disagree with broken-circuit containment");
        if (!reducible)
            for (int e = 0; e + subset_size(s) <= max_degree; ++e)
                out.push_back(Monomial{e, w});
        if (s == all || gd.matroid.size() == 0) break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return deglex_compare(a, b, *gd.order) == std::strong_ordering::less;
    });
    return out;
}

bool order_independence_check(const Matroid& m, const GroundOrder& ord_a,
                              const GroundOrder& ord_b) {
    OrderPtr pa = order_ptr(ord_a);
    OrderPtr pb = order_ptr(ord_b);
    const GroebnerData gda = build_groebner_data(m, pa);
    const GroebnerData gdb = build_groebner_data(m, pb);
    for (const Generator& g : gdb.gens.gens())
        if (!reduce(g.poly.with_order(pa), gda.gens).is_zero()) return false;
    for (const Generator& g : gda.gens.gens())
        if (!reduce(g.poly.with_order(pb), gdb.gens).is_zero()) return false;
    return true;
}

}  // namespace osq
