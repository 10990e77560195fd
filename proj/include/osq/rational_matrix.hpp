#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "osq/matroid.hpp"

namespace osq {

using Rational = boost::multiprecision::cpp_rational;

/// Dense matrix of exact rationals; columns realize ground-set elements.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);
    static RationalMatrix from_strings(const std::vector<std::vector<std::string>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    /// Exact rank of the selected columns (fraction-free elimination).
    int column_rank(Subset cols) const;

    bool column_is_zero(int c) const;
    bool columns_proportional(int c1, int c2) const;

private:
    int rows_;
    int cols_;
    std::vector<Rational> data_;
};

/// Circuits = inclusion-minimal linearly dependent column subsets. Rejects
/// zero columns (loops) and proportional columns (parallel elements).
Matroid circuits_from_matrix(const RationalMatrix& mat);

}  // namespace osq
