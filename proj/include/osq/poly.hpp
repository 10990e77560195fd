#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <vector>

#include "osq/ground_order.hpp"

namespace osq {

/// Exact arbitrary-precision integer coefficients.
using Int = boost::multiprecision::cpp_int;

/// A word in the ground-set variables; letters are labels, order significant.
using Word = std::vector<int>;

/// Monomial t0^t0_exp * t_{w_1} ... t_{w_k}. The homogenizing variable t0 is
/// central and collected in front; q is represented as t0^2.
struct Monomial {
    int t0_exp = 0;
    Word word;

    int degree() const { return t0_exp + static_cast<int>(word.size()); }
    bool operator==(const Monomial&) const = default;
};

/// Deglex comparison: total degree dominates; ties are broken by comparing
/// the padded letter sequence t0^t0_exp . word position by position, with t0
/// strictly below every ground label. Throws on out-of-range labels.
std::strong_ordering deglex_compare(const Monomial& a, const Monomial& b,
                                    const GroundOrder& ord);

struct Term {
    Monomial mon;
    Int coeff;
};

/// Element of Z[t0]<t_s : s in S> with t0 central. Terms are kept in strictly
/// decreasing deglex order with nonzero coefficients.
class FreePolynomial {
public:
    explicit FreePolynomial(OrderPtr ord);

    static FreePolynomial zero(OrderPtr ord);
    static FreePolynomial constant(OrderPtr ord, Int value);
    static FreePolynomial variable(OrderPtr ord, int label);
    static FreePolynomial monomial(OrderPtr ord, Monomial m, Int coeff = 1);
    /// q^k = t0^{2k}.
    static FreePolynomial q_power(OrderPtr ord, int k);
    /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
    static FreePolynomial from_terms(OrderPtr ord, std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }
    const OrderPtr& order() const { return order_; }

    /// Deglex-greatest term; throws std::domain_error on the zero polynomial.
    const Term& leading() const;
    /// Total degree of the leading term, -1 for the zero polynomial.
    int degree() const;

    FreePolynomial& operator+=(const FreePolynomial& g);
    FreePolynomial& operator-=(const FreePolynomial& g);
    FreePolynomial& operator*=(const Int& c);

    /// left * f * right, scaled by coeff and an extra t0 power. Word framing
    /// preserves the deglex order of the terms, so this is a single pass.
    FreePolynomial framed(const Word& left, const Word& right, int t0_shift = 0,
                          const Int& coeff = 1) const;

    /// Same terms re-canonicalized under a different ground order.
    FreePolynomial with_order(OrderPtr ord) const;

    /// Removes the leading term (used by reduction loops).
    void drop_leading();

    bool operator==(const FreePolynomial& g) const;

    friend FreePolynomial operator+(FreePolynomial a, const FreePolynomial& b) {
        a += b;
        return a;
    }
    friend FreePolynomial operator-(FreePolynomial a, const FreePolynomial& b) {
        a -= b;
        return a;
    }
    friend FreePolynomial operator-(FreePolynomial a) {
        a *= Int(-1);
        return a;
    }
    friend FreePolynomial operator*(const FreePolynomial& a, const FreePolynomial& b);
    friend FreePolynomial operator*(const Int& c, FreePolynomial a) {
        a *= c;
        return a;
    }

private:
    void merge(const std::vector<Term>& other, bool negate);
    void check_same_order(const FreePolynomial& g) const;

    OrderPtr order_;
    std::vector<Term> terms_;
};

/// Specialization target for q.
struct QEvaluation {
    Int value;
};

/// Replaces t0^{2k} by value^k. Every t0 exponent must be even; odd exponents
/// raise std::domain_error.
FreePolynomial evaluate_q(const FreePolynomial& f, const QEvaluation& ev);

}  // namespace osq
