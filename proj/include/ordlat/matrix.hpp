#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ordlat/rational.hpp"

namespace ordlat {

using QRow = std::vector<Rat>;
using ZRow = std::vector<Int>;

// Dense rational matrix, row major. Small dimensions (<= ~100), exact arithmetic.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows, QRow(cols, Rat(0))) {}
    explicit QMatrix(std::vector<QRow> rows) : rows_(std::move(rows)) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t num_rows() const { return rows_.size(); }
    std::size_t num_cols() const { return rows_.empty() ? 0 : rows_[0].size(); }

    Rat& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    QRow& row(std::size_t i) { return rows_[i]; }
    const QRow& row(std::size_t i) const { return rows_[i]; }
    const std::vector<QRow>& rows() const { return rows_; }

    void append_row(QRow r) { rows_.push_back(std::move(r)); }

    bool operator==(const QMatrix& o) const { return rows_ == o.rows_; }

    QMatrix transposed() const {
        QMatrix t(num_cols(), num_rows());
        for (std::size_t i = 0; i < num_rows(); ++i)
            for (std::size_t j = 0; j < num_cols(); ++j) t(j, i) = rows_[i][j];
        return t;
    }

    QMatrix operator*(const QMatrix& o) const {
        if (num_cols() != o.num_rows()) throw std::invalid_argument("matrix product shape mismatch");
        QMatrix p(num_rows(), o.num_cols());
        for (std::size_t i = 0; i < num_rows(); ++i)
            for (std::size_t k = 0; k < num_cols(); ++k) {
                if (rows_[i][k] == 0) continue;
                for (std::size_t j = 0; j < o.num_cols(); ++j)
                    p(i, j) += rows_[i][k] * o(k, j);
            }
        return p;
    }

private:
    std::vector<QRow> rows_;
};

Rat det(const QMatrix& m);
std::size_t rank(const QMatrix& m);
QMatrix inverse(const QMatrix& m);

// Solves x * a = b for a square invertible a (row-vector convention); throws if singular.
QMatrix solve_right(const QMatrix& a, const QMatrix& b);

// Basis of { x : m * x^T = 0 }, returned as rows.
QMatrix null_space(const QMatrix& m);

// Reduced row echelon form with zero rows dropped: the canonical basis of the
// rational row space (subspace equality = matrix equality).
QMatrix row_space_canonical(const QMatrix& m);

// Row Hermite normal form of an integer matrix: echelon, positive pivots,
// entries above each pivot reduced into [0, pivot). Zero rows dropped.
std::vector<ZRow> hnf(std::vector<ZRow> a);

// Basis (rows) of the integer kernel { y in Z^k : y * m = 0 } for rational m with k rows.
std::vector<ZRow> integer_kernel(const QMatrix& m);

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Least positive d with d*m integral.
Int common_denominator(const QMatrix& m);

}  // namespace ordlat
