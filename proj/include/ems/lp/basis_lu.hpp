#pragma once

#include <vector>

namespace ems::lp {

// Sparse LU factorization P·B·Q = L·U of a square matrix given column by
// column, computed left-looking with threshold partial pivoting. Columns are
// processed sparsest first and ties between acceptable pivots go to the row
// with the fewest entries, which keeps the nearly triangular bases of the
// simplex method almost free of fill.
class BasisLu {
public:
    // Column k of B holds index/value entries start[k] .. start[k+1]-1.
    // Returns false when B is numerically singular.
    bool factorize(int m, const std::vector<int>& start, const std::vector<int>& index,
                   const std::vector<double>& value);

    // v <- B^{-1} v. Input indexed by row, output by column of B.
    void ftran(double* v) const;
    // v <- B^{-T} v. Input indexed by column of B, output by row.
    void btran(double* v) const;

    int size() const { return m_; }
    std::size_t nonzeros() const { return l_value_.size() + u_value_.size() + u_diag_.size(); }

private:
    void transpose(const std::vector<int>& start, const std::vector<int>& index, const std::vector<double>& value,
                   std::vector<int>& t_start, std::vector<int>& t_index, std::vector<double>& t_value) const;

    int m_ = 0;
    std::vector<int> q_;    // pivot step -> column of B
    std::vector<int> prow_; // pivot step -> row of B
    std::vector<int> l_start_, l_index_; // L by pivot step, strictly below the diagonal
    std::vector<double> l_value_;
    std::vector<int> u_start_, u_index_; // U by pivot step, strictly above the diagonal
    std::vector<double> u_value_;
    std::vector<double> u_diag_;
    // Row-wise copies of L and U for the transposed solves.
    std::vector<int> lt_start_, lt_index_;
    std::vector<double> lt_value_;
    std::vector<int> ut_start_, ut_index_;
    std::vector<double> ut_value_;
    mutable std::vector<double> work_;
};

} // namespace ems::lp
