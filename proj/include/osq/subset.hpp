#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "osq/ground_order.hpp"

namespace osq {

/// Subset of the ground set as a bit mask; label i is bit i.
using Subset = std::uint32_t;

int subset_size(Subset s);
bool subset_contains(Subset s, int label);

/// inner is a subset of outer.
bool subset_includes(Subset outer, Subset inner);

Subset make_subset(std::initializer_list<int> labels);
Subset make_subset(const std::vector<int>& labels);

/// Elements of s in increasing order under ord.
std::vector<int> elements_ascending(Subset s, const GroundOrder& ord);

/// Least element of a nonempty subset under ord.
int least_element(Subset s, const GroundOrder& ord);

/// Degree-lexicographic order on subsets: smaller size first; at equal size
/// the set containing the least element of the symmetric difference wins.
bool set_deglex_less(Subset a, Subset b, const GroundOrder& ord);

/// k is a convex subset of j: k ⊆ j and k contains every element of j lying
/// strictly between two elements of k under ord.
bool is_convex_subset(Subset k, Subset j, const GroundOrder& ord);

/// "{1,3,4}": 1-based labels in increasing order under ord.
std::string subset_to_string(Subset s, const GroundOrder& ord);

}  // namespace osq
