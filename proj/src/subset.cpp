#include "osq/subset.hpp"

#include <bit>
#include <stdexcept>

namespace osq {

int subset_size(Subset s) { return std::popcount(s); }

bool subset_contains(Subset s, int label) { return (s >> label) & 1u; }

bool subset_includes(Subset outer, Subset inner) { return (inner & ~outer) == 0; }

Subset make_subset(std::initializer_list<int> labels) {
    Subset s = 0;
    for (int l : labels) {
        if (l < 0 || l >= 32) throw std::invalid_argument("subset label out of range");
        s |= Subset{1} << l;
    }
    return s;
}

Subset make_subset(const std::vector<int>& labels) {
    Subset s = 0;
    for (int l : labels) {
        if (l < 0 || l >= 32) throw std::invalid_argument("subset label out of range");
        s |= Subset{1} << l;
    }
    return s;
}

std::vector<int> elements_ascending(Subset s, const GroundOrder& ord) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(subset_size(s)));
    for (int p = 0; p < ord.size(); ++p) {
        int label = ord.label_at(p);
        if (subset_contains(s, label)) out.push_back(label);
    }
    if (static_cast<int>(out.size()) != subset_size(s))
        throw std::invalid_argument("subset has labels outside the ground order");
    return out;
}

int least_element(Subset s, const GroundOrder& ord) {
    for (int p = 0; p < ord.size(); ++p) {
        int label = ord.label_at(p);
        if (subset_contains(s, label)) return label;
    }
    throw std::invalid_argument("least_element of empty subset");
}

bool set_deglex_less(Subset a, Subset b, const GroundOrder& ord) {
    if (a == b) return false;
    int sa = subset_size(a), sb = subset_size(b);
    if (sa != sb) return sa < sb;
    int m = least_element(a ^ b, ord);
    return subset_contains(a, m);
}

bool is_convex_subset(Subset k, Subset j, const GroundOrder& ord) {
    if (!subset_includes(j, k)) return false;
    if (k == 0) return true;
    int first = -1, last = -1;
    for (int p = 0; p < ord.size(); ++p) {
        if (subset_contains(k, ord.label_at(p))) {
            if (first < 0) first = p;
            last = p;
        }
    }
    for (int p = first + 1; p < last; ++p) {
        int label = ord.label_at(p);
        if (subset_contains(j, label) && !subset_contains(k, label)) return false;
    }
    return true;
}

std::string subset_to_string(Subset s, const GroundOrder& ord) {
    std::string out = "{";
    bool first = true;
    for (int label : elements_ascending(s, ord)) {
        if (!first) out += ",";
        out += std::to_string(label + 1);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace osq
