#pragma once

#include "osq/poly.hpp"
#include "osq/subset.hpp"

namespace osq {

/// Sign statistic: for I = {j_{a_1} < ... < j_{a_k}} inside
/// J = {j_1 < ... < j_m}, the sum of (a_v - v). Throws unless I ⊆ J.
int ell(Subset J, Subset I, const GroundOrder& ord);

/// Odd boundary sum: sum over odd I ⊆ J of
/// (-1)^{ell_J(I)} (-q)^{(#I-1)/2} t_{J\I}.   del_minus(∅) = 0.
FreePolynomial del_minus(Subset J, OrderPtr ord);

/// Even companion: sum over even I ⊆ J of
/// (-1)^{ell_J(I)} (-q)^{#I/2} t_{J\I}.   del_plus(∅) = 1.
FreePolynomial del_plus(Subset J, OrderPtr ord);

}  // namespace osq
