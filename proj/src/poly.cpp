#include "osq/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace osq {

std::strong_ordering deglex_compare(const Monomial& a, const Monomial& b,
                                    const GroundOrder& ord) {
    for (int l : a.word) ord.check_label(l);
    for (int l : b.word) ord.check_label(l);
    if (a.t0_exp < 0 || b.t0_exp < 0)
        throw std::invalid_argument("negative t0 exponent");

    const int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    // padded sequences t0^e . word; t0 below every label
    for (int i = 0; i < da; ++i) {
        const bool a_t0 = i < a.t0_exp;
        const bool b_t0 = i < b.t0_exp;
        if (a_t0 && b_t0) continue;
        if (a_t0 != b_t0)
            return a_t0 ? std::strong_ordering::less : std::strong_ordering::greater;
        const int pa = ord.position(a.word[i - a.t0_exp]);
        const int pb = ord.position(b.word[i - b.t0_exp]);
        if (pa != pb) return pa <=> pb;
    }
    return std::strong_ordering::equal;
}

namespace {

struct MonLess {
    const GroundOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return deglex_compare(a, b, *ord) == std::strong_ordering::less;
    }
};

}  // namespace

FreePolynomial::FreePolynomial(OrderPtr ord) : order_(std::move(ord)) {
    if (!order_) throw std::invalid_argument("null ground order");
}

FreePolynomial FreePolynomial::zero(OrderPtr ord) { return FreePolynomial(std::move(ord)); }

FreePolynomial FreePolynomial::constant(OrderPtr ord, Int value) {
    FreePolynomial f(std::move(ord));
    if (value != 0) f.terms_.push_back({Monomial{}, std::move(value)});
    return f;
}

FreePolynomial FreePolynomial::variable(OrderPtr ord, int label) {
    ord->check_label(label);
    FreePolynomial f(std::move(ord));
    f.terms_.push_back({Monomial{0, {label}}, 1});
    return f;
}

FreePolynomial FreePolynomial::monomial(OrderPtr ord, Monomial m, Int coeff) {
    for (int l : m.word) ord->check_label(l);
    if (m.t0_exp < 0) throw std::invalid_argument("negative t0 exponent");
    FreePolynomial f(std::move(ord));
    if (coeff != 0) f.terms_.push_back({std::move(m), std::move(coeff)});
    return f;
}

FreePolynomial FreePolynomial::q_power(OrderPtr ord, int k) {
    if (k < 0) throw std::invalid_argument("negative q power");
    return monomial(std::move(ord), Monomial{2 * k, {}});
}

FreePolynomial FreePolynomial::from_terms(OrderPtr ord, std::vector<Term> terms) {
    FreePolynomial f(ord);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return deglex_compare(a.mon, b.mon, *ord) == std::strong_ordering::greater;
    });
    for (auto& t : terms) {
        for (int l : t.mon.word) ord->check_label(l);
        if (!f.terms_.empty() && f.terms_.back().mon == t.mon)
            f.terms_.back().coeff += t.coeff;
        else
            f.terms_.push_back(std::move(t));
        if (!f.terms_.empty() && f.terms_.back().coeff == 0) f.terms_.pop_back();
    }
    return f;
}

const Term& FreePolynomial::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

int FreePolynomial::degree() const {
    return terms_.empty() ? -1 : terms_.front().mon.degree();
}

void FreePolynomial::check_same_order(const FreePolynomial& g) const {
    if (order_ == g.order_) return;
    if (!order_->same_as(*g.order_))
        throw std::invalid_argument("ground order mismatch");
}

void FreePolynomial::merge(const std::vector<Term>& other, bool negate) {
    std::vector<Term> out;
    out.reserve(terms_.size() + other.size());
    const GroundOrder& ord = *order_;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.size()) {
        auto c = deglex_compare(terms_[i].mon, other[j].mon, ord);
        if (c == std::strong_ordering::greater) {
            out.push_back(std::move(terms_[i++]));
        } else if (c == std::strong_ordering::less) {
            out.push_back(other[j++]);
            if (negate) out.back().coeff = -out.back().coeff;
        } else {
            Int s = negate ? Int(terms_[i].coeff - other[j].coeff)
                           : Int(terms_[i].coeff + other[j].coeff);
            if (s != 0) out.push_back({terms_[i].mon, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
    for (; j < other.size(); ++j) {
        out.push_back(other[j]);
        if (negate) out.back().coeff = -out.back().coeff;
    }
    terms_ = std::move(out);
}

FreePolynomial& FreePolynomial::operator+=(const FreePolynomial& g) {
    check_same_order(g);
    merge(g.terms_, false);
    return *this;
}

FreePolynomial& FreePolynomial::operator-=(const FreePolynomial& g) {
    check_same_order(g);
    merge(g.terms_, true);
    return *this;
}

FreePolynomial& FreePolynomial::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

FreePolynomial FreePolynomial::framed(const Word& left, const Word& right, int t0_shift,
                                      const Int& coeff) const {
    for (int l : left) order_->check_label(l);
    for (int l : right) order_->check_label(l);
    FreePolynomial out(order_);
    if (coeff == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m;
        m.t0_exp = t.mon.t0_exp + t0_shift;
        m.word.reserve(left.size() + t.mon.word.size() + right.size());
        m.word.insert(m.word.end(), left.begin(), left.end());
        m.word.insert(m.word.end(), t.mon.word.begin(), t.mon.word.end());
        m.word.insert(m.word.end(), right.begin(), right.end());
        out.terms_.push_back({std::move(m), t.coeff * coeff});
    }
    return out;
}

FreePolynomial FreePolynomial::with_order(OrderPtr ord) const {
    FreePolynomial out = from_terms(std::move(ord), terms_);
    return out;
}

void FreePolynomial::drop_leading() {
    if (terms_.empty()) throw std::domain_error("drop_leading on the zero polynomial");
    terms_.erase(terms_.begin());
}

bool FreePolynomial::operator==(const FreePolynomial& g) const {
    if (order_ == g.order_ || order_->same_as(*g.order_)) {
        if (terms_.size() != g.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mon != g.terms_[i].mon || terms_[i].coeff != g.terms_[i].coeff)
                return false;
        return true;
    }
    // different ambient orders: compare as term multisets on raw keys
    auto key_less = [](const Term& a, const Term& b) {
        if (a.mon.t0_exp != b.mon.t0_exp) return a.mon.t0_exp < b.mon.t0_exp;
        return a.mon.word < b.mon.word;
    };
    std::vector<Term> x = terms_, y = g.terms_;
    std::sort(x.begin(), x.end(), key_less);
    std::sort(y.begin(), y.end(), key_less);
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].mon != y[i].mon || x[i].coeff != y[i].coeff) return false;
    return true;
}

FreePolynomial operator*(const FreePolynomial& a, const FreePolynomial& b) {
    a.check_same_order(b);
    std::map<Monomial, Int, MonLess> acc{MonLess{a.order_.get()}};
    for (const Term& ta : a.terms_) {
        for (const Term& tb : b.terms_) {
            Monomial m;
            m.t0_exp = ta.mon.t0_exp + tb.mon.t0_exp;
            m.word.reserve(ta.mon.word.size() + tb.mon.word.size());
            m.word.insert(m.word.end(), ta.mon.word.begin(), ta.mon.word.end());
            m.word.insert(m.word.end(), tb.mon.word.begin(), tb.mon.word.end());
            acc[std::move(m)] += ta.coeff * tb.coeff;
        }
    }
    FreePolynomial out(a.order_);
    out.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) out.terms_.push_back({it->first, it->second});
    return out;
}

FreePolynomial evaluate_q(const FreePolynomial& f, const QEvaluation& ev) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        if (t.mon.t0_exp % 2 != 0)
            throw std::domain_error("evaluate_q: odd t0 exponent is not specializable");
        Int c = t.coeff;
        if (t.mon.t0_exp > 0)
            c *= boost::multiprecision::pow(ev.value, static_cast<unsigned>(t.mon.t0_exp / 2));
        if (c != 0) terms.push_back({Monomial{0, t.mon.word}, std::move(c)});
    }
    return FreePolynomial::from_terms(f.order(), std::move(terms));
}

}  // namespace osq
