#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osq/matroid.hpp"
#include "osq/poly.hpp"
#include "osq/subset.hpp"

namespace osq {

struct Generator {
    enum class Kind { Square, Comm, Circuit };

    Kind kind;
    int s = -1;          // Square: the variable; Comm: lesser label
    int r = -1;          // Comm: greater label (leading word [r,s])
    Subset circuit = 0;  // Circuit: the set J
    Word lead;           // leading word, leading coefficient always 1
    FreePolynomial poly;

    std::string name(const GroundOrder& ord) const;
};

/// The generator families of the defining ideal, with an index from leading
/// words to generators for contiguous-subword search during reduction.
/// Family order: squares, commutators, circuit generators (deglex of J).
class GeneratorSet {
public:
    GeneratorSet(OrderPtr ord, std::vector<Generator> gens);

    const std::vector<Generator>& gens() const { return gens_; }
    const OrderPtr& order() const { return order_; }

    /// Leftmost position of any generator leading word inside w; among
    /// matches at that position the earliest generator in family order wins.
    std::optional<std::pair<int, int>> find_reducible(const Word& w) const;

    /// Same generators with q specialized (used for the q = 0 checks).
    GeneratorSet specialized(const QEvaluation& ev) const;

private:
    OrderPtr order_;
    std::vector<Generator> gens_;
    std::map<int, std::map<Word, int>> by_length_;  // length -> word -> first index
};

/// The recursively filtered family of dependent sets indexing the circuit
/// generators, in deglex-increasing order: a dependent J is admitted unless
/// an earlier admitted K has K\{k1} a proper convex subset of J\{j1}.
std::vector<Subset> groebner_circuits(const Matroid& m, const GroundOrder& ord);

GeneratorSet build_generators(const Matroid& m, OrderPtr ord,
                              const std::vector<Subset>& gcircuits);

struct GroebnerData {
    Matroid matroid;
    OrderPtr order;
    std::vector<Subset> gcircuits;
    GeneratorSet gens;
};

GroebnerData build_groebner_data(Matroid m, OrderPtr ord);

/// Normal form: rewrites the deglex-greatest reducible term at its leftmost
/// match, m1 lm(g) m2 -> m1 (lm(g) - g) m2, until no term's word contains a
/// generator leading word.
FreePolynomial reduce(FreePolynomial f, const GeneratorSet& gens);

/// An S-polynomial datum m1 f m2 - n1 g n2 pinned by an overlap (a nonempty
/// proper suffix of lm(f) equals a prefix of lm(g), width = offset) or a
/// containment (lm(g) a subword of lm(f) at position offset; equal leading
/// words are emitted once with empty affixes). Disjoint/padded families that
/// reduce trivially are never enumerated.
struct Obstruction {
    enum class Kind { Overlap, Containment };
    Kind kind;
    int left;
    int right;
    int offset;
};

std::vector<Obstruction> obstructions(const GeneratorSet& gens);

FreePolynomial s_polynomial(const Obstruction& o, const GeneratorSet& gens);

struct VerifyFailure {
    Obstruction obstruction;
    FreePolynomial normal_form;
};

struct VerifyReport {
    bool pass = false;
    int n_obstructions = 0;
    std::vector<VerifyFailure> failures;
};

/// Checks that every obstruction S-polynomial reduces to 0.
VerifyReport buchberger_verify(const GeneratorSet& gens, int jobs = 1);
VerifyReport buchberger_verify(const GroebnerData& gd, int jobs = 1);

/// True iff del_minus(J) reduces to 0 for every dependent J (exhaustive).
bool dependent_reduction_check(const GroebnerData& gd);

/// All keys t0^e t_J with e + #J <= max_degree and t_J free of generator
/// leading words; cross-checked against broken-circuit containment.
/// Returned in increasing deglex order.
std::vector<Monomial> standard_monomials(const GroebnerData& gd, int max_degree);

/// Certifies that the two orders generate the same ideal: every generator
/// built under one order reduces to 0 modulo the basis built under the other.
bool order_independence_check(const Matroid& m, const GroundOrder& ord_a,
                              const GroundOrder& ord_b);

}  // namespace osq
