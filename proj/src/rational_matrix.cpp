#include "osq/rational_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace osq {

using boost::multiprecision::cpp_int;

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0 || cols > 20)
        throw std::invalid_argument("matrix dimensions out of supported range");
    data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::from_strings(
    const std::vector<std::vector<std::string>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("matrix rows have unequal lengths");
        for (int j = 0; j < c; ++j) {
            std::string s = rows[i][j];
            s.erase(std::remove_if(s.begin(), s.end(),
                                   [](unsigned char ch) { return std::isspace(ch); }),
                    s.end());
            try {
                m.at(i, j) = Rational(s);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad rational entry '" + rows[i][j] + "'");
            }
        }
    }
    return m;
}

bool RationalMatrix::column_is_zero(int c) const {
    for (int r = 0; r < rows_; ++r)
        if (at(r, c) != 0) return false;
    return true;
}

bool RationalMatrix::columns_proportional(int c1, int c2) const {
    int pivot = -1;
    for (int r = 0; r < rows_; ++r)
        if (at(r, c1) != 0) {
            pivot = r;
            break;
        }
    if (pivot < 0) return column_is_zero(c2);
    const Rational ratio = at(pivot, c2) / at(pivot, c1);
    for (int r = 0; r < rows_; ++r)
        if (at(r, c2) != ratio * at(r, c1)) return false;
    return true;
}

int RationalMatrix::column_rank(Subset cols) const {
    std::vector<int> idx;
    for (int c = 0; c < cols_; ++c)
        if (subset_contains(cols, c)) idx.push_back(c);
    const int nc = static_cast<int>(idx.size());
    if (nc == 0 || rows_ == 0) return 0;

    // clear denominators row by row; row scaling preserves column dependencies
    std::vector<std::vector<cpp_int>> a(static_cast<std::size_t>(rows_),
                                        std::vector<cpp_int>(static_cast<std::size_t>(nc)));
    for (int r = 0; r < rows_; ++r) {
        cpp_int scale = 1;
        for (int j = 0; j < nc; ++j)
            scale = boost::multiprecision::lcm(
                scale, boost::multiprecision::denominator(at(r, idx[j])));
        for (int j = 0; j < nc; ++j) {
            const Rational& v = at(r, idx[j]);
            a[r][j] = boost::multiprecision::numerator(v) *
                      (scale / boost::multiprecision::denominator(v));
        }
    }

    // Bareiss fraction-free elimination
    cpp_int prev = 1;
    int rank = 0;
    for (int col = 0; col < nc && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows_; ++r) {
            for (int j = col + 1; j < nc; ++j)
                a[r][j] = (a[rank][col] * a[r][j] - a[r][col] * a[rank][j]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

Matroid circuits_from_matrix(const RationalMatrix& mat) {
    const int n = mat.cols();
    for (int c = 0; c < n; ++c)
        if (mat.column_is_zero(c))
            throw std::invalid_argument("loop detected: column " + std::to_string(c + 1) +
                                        " is zero");
    for (int c1 = 0; c1 < n; ++c1)
        for (int c2 = c1 + 1; c2 < n; ++c2)
            if (mat.columns_proportional(c1, c2))
                throw std::invalid_argument("parallel elements detected: columns " +
                                            std::to_string(c1 + 1) + " and " +
                                            std::to_string(c2 + 1));

    std::vector<std::vector<Subset>> by_size(static_cast<std::size_t>(n) + 1);
    const Subset all = n == 0 ? 0 : (Subset{1} << n) - 1;
    if (n > 0)
        for (Subset s = 0;; ++s) {
            by_size[static_cast<std::size_t>(subset_size(s))].push_back(s);
            if (s == all) break;
        }

    std::vector<Subset> circuits;
    for (int size = 3; size <= n; ++size) {
        for (Subset s : by_size[static_cast<std::size_t>(size)]) {
            bool has_circuit = false;
            for (Subset c : circuits)
                if (subset_includes(s, c)) {
                    has_circuit = true;
                    break;
                }
            if (has_circuit) continue;
            if (mat.column_rank(s) < size) circuits.push_back(s);
        }
    }
    return Matroid(n, std::move(circuits));
}

}  // namespace osq
