#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace osq {

/// Total order on the ground set {0,...,n-1}. Labels are stable identifiers;
/// the order assigns each label a position, position 0 being the least.
class GroundOrder {
public:
    /// Natural order 0 < 1 < ... < n-1.
    explicit GroundOrder(int n);

    /// Order given as the sequence of labels from least to greatest.
    static GroundOrder from_sequence(const std::vector<int>& least_to_greatest);

    int size() const { return static_cast<int>(pos_.size()); }

    int position(int label) const {
        check_label(label);
        return pos_[label];
    }

    int label_at(int position) const;

    bool less(int a, int b) const { return position(a) < position(b); }

    bool same_as(const GroundOrder& other) const { return pos_ == other.pos_; }

    void check_label(int label) const {
        if (label < 0 || label >= size())
            throw std::invalid_argument("label out of range: " + std::to_string(label));
    }

    /// Labels listed from least to greatest.
    const std::vector<int>& sequence() const { return lab_; }

private:
    GroundOrder() = default;

    std::vector<int> pos_;  // label -> position
    std::vector<int> lab_;  // position -> label
};

using OrderPtr = std::shared_ptr<const GroundOrder>;

OrderPtr natural_order(int n);
OrderPtr order_ptr(GroundOrder ord);

}  // namespace osq
