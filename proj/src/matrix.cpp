#include "ordlat/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace ordlat {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.num_cols() && pr < m.num_rows(); ++c) {
        std::size_t sel = pr;
        while (sel < m.num_rows() && m(sel, c) == 0) ++sel;
        if (sel == m.num_rows()) continue;
        std::swap(m.row(sel), m.row(pr));
        Rat inv = 1 / m(pr, c);
        for (std::size_t j = c; j < m.num_cols(); ++j) m(pr, j) *= inv;
        for (std::size_t i = 0; i < m.num_rows(); ++i) {
            if (i == pr || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < m.num_cols(); ++j) m(i, j) -= f * m(pr, j);
        }
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

}  // namespace

Rat det(const QMatrix& m) {
    if (m.num_rows() != m.num_cols()) throw std::invalid_argument("det of non-square matrix");
    QMatrix a = m;
    std::size_t n = a.num_rows();
    Rat d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && a(sel, c) == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != c) {
            std::swap(a.row(sel), a.row(c));
            d = -d;
        }
        d *= a(c, c);
        Rat inv = 1 / a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

std::size_t rank(const QMatrix& m) {
    QMatrix a = m;
    return rref(a).size();
}

QMatrix inverse(const QMatrix& m) {
    if (m.num_rows() != m.num_cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.num_rows();
    QMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }
    auto pivots = rref(a);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::invalid_argument("matrix is singular");
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
    return inv;
}

QMatrix solve_right(const QMatrix& a, const QMatrix& b) { return b * inverse(a); }

QMatrix row_space_canonical(const QMatrix& m) {
    QMatrix a = m;
    auto pivots = rref(a);
    QMatrix out;
    for (std::size_t i = 0; i < pivots.size(); ++i) out.append_row(a.row(i));
    return out;
}

QMatrix null_space(const QMatrix& m) {
    QMatrix a = m;
    auto pivots = rref(a);
    std::size_t n = m.num_cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    QMatrix basis;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        QRow v(n, Rat(0));
        v[fc] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, fc);
        basis.append_row(std::move(v));
    }
    return basis;
}

namespace {

// Row HNF with optional unimodular transform (u * input = result).
std::vector<ZRow> hnf_impl(std::vector<ZRow> a, std::vector<ZRow>* u) {
    std::size_t k = a.size();
    std::size_t n = k ? a[0].size() : 0;
    if (u) {
        u->assign(k, ZRow(k, 0));
        for (std::size_t i = 0; i < k; ++i) (*u)[i][i] = 1;
    }
    std::size_t pr = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < n && pr < k; ++c) {
        // Gcd elimination in column c among rows pr..k-1.
        while (true) {
            std::size_t best = k;
            for (std::size_t i = pr; i < k; ++i) {
                if (a[i][c] == 0) continue;
                if (best == k || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) < 0)
                    best = i;
            }
            if (best == k) break;
            std::swap(a[best], a[pr]);
            if (u) std::swap((*u)[best], (*u)[pr]);
            bool done = true;
            for (std::size_t i = pr + 1; i < k; ++i) {
                if (a[i][c] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[pr][c].get_mpz_t());
                for (std::size_t j = 0; j < n; ++j) a[i][j] -= q * a[pr][j];
                if (u)
                    for (std::size_t j = 0; j < k; ++j) (*u)[i][j] -= q * (*u)[pr][j];
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (pr < k && a[pr][c] != 0) {
            if (a[pr][c] < 0) {
                for (auto& x : a[pr]) x = -x;
                if (u)
                    for (auto& x : (*u)[pr]) x = -x;
            }
            pivot_col.push_back(c);
            ++pr;
        }
    }
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        std::size_t c = pivot_col[i];
        for (std::size_t up = 0; up < i; ++up) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a[up][c].get_mpz_t(), a[i][c].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t j = 0; j < n; ++j) a[up][j] -= q * a[i][j];
            if (u)
                for (std::size_t j = 0; j < k; ++j) (*u)[up][j] -= q * (*u)[i][j];
        }
    }
    a.resize(pr);
    return a;
}

}  // namespace

std::vector<ZRow> hnf(std::vector<ZRow> a) { return hnf_impl(std::move(a), nullptr); }

std::vector<ZRow> integer_kernel(const QMatrix& m) {
    std::size_t k = m.num_rows();
    Int d = common_denominator(m);
    std::vector<ZRow> a(k, ZRow(m.num_cols()));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m.num_cols(); ++j) {
            Rat scaled = m(i, j) * Rat(d);
            a[i][j] = scaled.get_num();
        }
    std::vector<ZRow> u;
    auto h = hnf_impl(std::move(a), &u);
    // Rows of u past the rank of the input map to zero.
    std::vector<ZRow> kernel(u.begin() + h.size(), u.end());
    return kernel.empty() ? kernel : hnf_impl(std::move(kernel), nullptr);
}

Int common_denominator(const QMatrix& m) {
    Int d(1);
    for (std::size_t i = 0; i < m.num_rows(); ++i)
        for (std::size_t j = 0; j < m.num_cols(); ++j) d = lcm(d, m(i, j).get_den());
    return d;
}

}  // namespace ordlat
