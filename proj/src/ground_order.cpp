#include "osq/ground_order.hpp"

#include <algorithm>
#include <numeric>

namespace osq {

GroundOrder::GroundOrder(int n) {
    if (n < 0) throw std::invalid_argument("ground set size must be nonnegative");
    pos_.resize(n);
    lab_.resize(n);
    std::iota(pos_.begin(), pos_.end(), 0);
    std::iota(lab_.begin(), lab_.end(), 0);
}

GroundOrder GroundOrder::from_sequence(const std::vector<int>& least_to_greatest) {
    const int n = static_cast<int>(least_to_greatest.size());
    GroundOrder ord;
    ord.pos_.assign(n, -1);
    ord.lab_ = least_to_greatest;
    for (int p = 0; p < n; ++p) {
        int label = least_to_greatest[p];
        if (label < 0 || label >= n)
            throw std::invalid_argument("order sequence: label out of range");
        if (ord.pos_[label] != -1)
            throw std::invalid_argument("order sequence: duplicate label");
        ord.pos_[label] = p;
    }
    return ord;
}

int GroundOrder::label_at(int position) const {
    if (position < 0 || position >= size())
        throw std::invalid_argument("position out of range");
    return lab_[position];
}

OrderPtr natural_order(int n) { return std::make_shared<const GroundOrder>(n); }

OrderPtr order_ptr(GroundOrder ord) {
    return std::make_shared<const GroundOrder>(std::move(ord));
}

}  // namespace osq
