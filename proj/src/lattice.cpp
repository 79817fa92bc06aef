#include "ordlat/lattice.hpp"

#include <sstream>

namespace ordlat {

namespace {

QMatrix ambient_form(const AlgebraSpec& spec, std::size_t m) {
    std::size_t r = spec.rank();
    QMatrix block = basis_gram(spec);
    QMatrix a(r * m, r * m);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) a(t * r + i, t * r + j) = block(i, j);
    return a;
}

}  // namespace

QMatrix canonical_rational_hnf(const QMatrix& rows) {
    Int d = common_denominator(rows);
    std::vector<ZRow> zrows(rows.num_rows(), ZRow(rows.num_cols()));
    for (std::size_t i = 0; i < rows.num_rows(); ++i)
        for (std::size_t j = 0; j < rows.num_cols(); ++j)
            zrows[i][j] = Rat(rows(i, j) * Rat(d)).get_num();
    auto h = hnf(std::move(zrows));
    QMatrix out(h.size(), rows.num_cols());
    Rat dq(d);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < rows.num_cols(); ++j) out(i, j) = Rat(h[i][j]) / dq;
    return out;
}

std::shared_ptr<const Order> builtin_order_ptr(const std::string& name) {
    return std::shared_ptr<const Order>(&builtin_order(name), [](const Order*) {});
}

QRow OLattice::realize(const KVector& v) const {
    std::size_t r = order_->rank();
    QRow row(r * m_, Rat(0));
    if (v.size() != m_) throw std::invalid_argument("vector has wrong ambient dimension");
    for (std::size_t t = 0; t < m_; ++t)
        for (std::size_t c = 0; c < r; ++c) row[t * r + c] = v[t][c];
    return row;
}

KVector OLattice::unrealize(const QRow& row) const {
    std::size_t r = order_->rank();
    KVector v(m_, elem_zero(order_->spec()));
    for (std::size_t t = 0; t < m_; ++t)
        for (std::size_t c = 0; c < r; ++c) v[t][c] = row[t * r + c];
    return v;
}

OLattice OLattice::from_realization(std::shared_ptr<const Order> order, std::size_t m,
                                    QMatrix rows, bool close_under_order,
                                    bool require_full_rank) {
    const AlgebraSpec& spec = order->spec();
    std::size_t r = spec.rank();
    std::size_t n = r * m;
    if (rows.num_rows() != 0 && rows.num_cols() != n)
        throw std::invalid_argument("realization width mismatch");
    QMatrix all;
    if (close_under_order) {
        // Append alpha * v for every order basis element alpha.
        std::vector<QMatrix> mul;
        for (std::size_t i = 0; i < r; ++i)
            mul.push_back(left_mul_matrix(spec, order->basis_element(i)));
        for (std::size_t g = 0; g < rows.num_rows(); ++g) {
            for (std::size_t i = 0; i < r; ++i) {
                QRow out(n, Rat(0));
                for (std::size_t t = 0; t < m; ++t)
                    for (std::size_t a = 0; a < r; ++a) {
                        if (rows(g, t * r + a) == 0) continue;
                        for (std::size_t b = 0; b < r; ++b)
                            out[t * r + b] += mul[i](b, a) * rows(g, t * r + a);
                    }
                all.append_row(std::move(out));
            }
        }
    } else {
        all = rows;
    }
    QMatrix basis = canonical_rational_hnf(all);
    if (require_full_rank && basis.num_rows() != n) throw RankError(basis.num_rows(), n);
    return OLattice(std::move(order), m, std::move(basis), Rat(1));
}

OLattice OLattice::from_generators(std::shared_ptr<const Order> order, std::size_t m,
                                   const std::vector<KVector>& gens) {
    QMatrix rows;
    {
        OLattice probe(order, m, QMatrix(0, order->rank() * m), Rat(1));
        for (const auto& g : gens) rows.append_row(probe.realize(g));
    }
    return from_realization(std::move(order), m, std::move(rows), true, true);
}

KVector OLattice::basis_vector(std::size_t i) const { return unrealize(basis_.row(i)); }

QMatrix OLattice::gram() const {
    QMatrix a = ambient_form(order_->spec(), m_);
    QMatrix g = basis_ * a * basis_.transposed();
    if (form_scale_ != 1)
        for (std::size_t i = 0; i < g.num_rows(); ++i)
            for (std::size_t j = 0; j < g.num_cols(); ++j) g(i, j) *= form_scale_;
    return g;
}

Rat OLattice::determinant() const { return det(gram()); }

std::optional<ZRow> OLattice::member_coordinates(const QRow& x) const {
    // Solve y * basis = x by least squares against the row space, then verify.
    std::size_t k = basis_.num_rows();
    if (k == 0) return std::nullopt;
    QMatrix xm(1, basis_.num_cols());
    for (std::size_t j = 0; j < basis_.num_cols(); ++j) xm(0, j) = x[j];
    QMatrix bt = basis_.transposed();
    QMatrix gramB = basis_ * bt;
    QMatrix y = xm * bt * inverse(gramB);
    QMatrix back = y * basis_;
    for (std::size_t j = 0; j < basis_.num_cols(); ++j)
        if (back(0, j) != x[j]) return std::nullopt;
    ZRow coeffs(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (y(0, i).get_den() != 1) return std::nullopt;
        coeffs[i] = y(0, i).get_num();
    }
    return coeffs;
}

bool OLattice::contains_lattice(const OLattice& other) const {
    for (std::size_t i = 0; i < other.zrank(); ++i)
        if (!contains(other.canonical_basis().row(i))) return false;
    return true;
}

bool OLattice::operator==(const OLattice& o) const {
    return m_ == o.m_ && order_->spec() == o.order_->spec() && form_scale_ == o.form_scale_ &&
           basis_ == o.basis_;
}

Elem OLattice::hermitian(const KVector& x, const KVector& y) const {
    const AlgebraSpec& spec = order_->spec();
    Elem sum = elem_zero(spec);
    for (std::size_t t = 0; t < m_; ++t)
        sum = add(sum, multiply(spec, x[t], conjugate(spec, y[t])));
    if (form_scale_ != 1) sum = scale(sum, form_scale_);
    return sum;
}

Rat OLattice::inner(const QRow& x, const QRow& y) const {
    const AlgebraSpec& spec = order_->spec();
    std::size_t r = spec.rank();
    QMatrix block = basis_gram(spec);
    Rat sum(0);
    for (std::size_t t = 0; t < m_; ++t)
        for (std::size_t i = 0; i < r; ++i) {
            if (x[t * r + i] == 0) continue;
            sum += x[t * r + i] * block(i, i) * y[t * r + i];
        }
    return sum * form_scale_;
}

OLattice OLattice::o_dual() const {
    std::size_t q = zrank();
    if (q == 0) throw std::invalid_argument("o_dual of the zero lattice");
    const AlgebraSpec& spec = order_->spec();
    std::size_t r = spec.rank();
    std::size_t n = ambient_rank();
    QMatrix a = ambient_form(spec, m_);
    QMatrix t_inv = inverse(order_->gram());

    // For each canonical basis vector v_j the order-coordinates of h(x, v_j)
    // are T^{-1} (<x, alpha_i v_j>)_i, so the dual is the set of x for which
    // the stacked linear forms take integer values: the standard dual of the
    // Z-row-span of those forms.  For a relative lattice, x is constrained to
    // the rational span by parameterizing x = y * basis.
    QMatrix forms;
    std::vector<QMatrix> mul;
    for (std::size_t i = 0; i < r; ++i)
        mul.push_back(left_mul_matrix(spec, order_->basis_element(i)));
    for (std::size_t j = 0; j < q; ++j) {
        // rows alpha_i v_j, i = 1..r
        QMatrix block(r, n);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t t = 0; t < m_; ++t)
                for (std::size_t aa = 0; aa < r; ++aa) {
                    if (basis_(j, t * r + aa) == 0) continue;
                    for (std::size_t bb = 0; bb < r; ++bb)
                        block(i, t * r + bb) += mul[i](bb, aa) * basis_(j, t * r + aa);
                }
        }
        QMatrix f = t_inv * (block * a);
        if (form_scale_ != 1)
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t c = 0; c < n; ++c) f(i, c) *= form_scale_;
        for (std::size_t i = 0; i < r; ++i) forms.append_row(f.row(i));
    }
    // Standard dual of the Z-span of the form rows, in span coordinates.
    QMatrix span = canonical_rational_hnf(forms * basis_.transposed());
    if (span.num_rows() != q)
        throw std::logic_error(
            "dual form span is rank deficient; the lattice is not an O-lattice in its span");
    QMatrix dual_basis = inverse(span).transposed() * basis_;
    OLattice result = from_realization(order_, m_, dual_basis, false, full_rank());
    result.form_scale_ = form_scale_;
    return result;
}

OLattice OLattice::scaled(const Rat& c) const {
    if (c <= 0) throw std::invalid_argument("scale factor must be positive");
    OLattice out = *this;
    out.form_scale_ *= c;
    return out;
}

InvarianceReport OLattice::check_o_invariance() const {
    InvarianceReport report;
    const AlgebraSpec& spec = order_->spec();
    std::size_t r = spec.rank();
    for (std::size_t i = 0; i < r; ++i) {
        QMatrix mul = left_mul_matrix(spec, order_->basis_element(i));
        for (std::size_t v = 0; v < zrank(); ++v) {
            QRow out(basis_.num_cols(), Rat(0));
            for (std::size_t t = 0; t < m_; ++t)
                for (std::size_t aa = 0; aa < r; ++aa) {
                    if (basis_(v, t * r + aa) == 0) continue;
                    for (std::size_t bb = 0; bb < r; ++bb)
                        out[t * r + bb] += mul(bb, aa) * basis_(v, t * r + aa);
                }
            if (!contains(out)) {
                std::ostringstream msg;
                msg << "alpha_" << i << " * basis vector " << v << " leaves the lattice";
                report.violations.push_back({i, v, msg.str()});
            }
        }
    }
    return report;
}

OLattice direct_sum(const OLattice& a, const OLattice& b) {
    if (!(a.order().spec() == b.order().spec()) ||
        a.order().basis_matrix().rows() != b.order().basis_matrix().rows())
        throw std::invalid_argument("direct sum requires the same order");
    if (a.form_scale() != b.form_scale())
        throw std::invalid_argument("direct sum requires equal form scales");
    std::size_t r = a.order().rank();
    std::size_t m = a.ambient_dim() + b.ambient_dim();
    std::size_t na = a.ambient_rank();
    QMatrix rows(a.zrank() + b.zrank(), r * m);
    for (std::size_t i = 0; i < a.zrank(); ++i)
        for (std::size_t j = 0; j < na; ++j) rows(i, j) = a.canonical_basis()(i, j);
    for (std::size_t i = 0; i < b.zrank(); ++i)
        for (std::size_t j = 0; j < b.ambient_rank(); ++j)
            rows(a.zrank() + i, na + j) = b.canonical_basis()(i, j);
    OLattice out = OLattice::from_realization(a.order_ptr(), m, std::move(rows), false,
                                              a.full_rank() && b.full_rank());
    return a.form_scale() == 1 ? out : out.scaled(a.form_scale());
}

FreeSandwich free_sandwich(const OLattice& lattice) {
    const Order& order = lattice.order();
    const AlgebraSpec& spec = order.spec();
    std::size_t r = spec.rank();
    std::size_t m = lattice.ambient_dim();
    if (!lattice.full_rank()) throw std::invalid_argument("free_sandwich requires full rank");

    // Greedily pick lattice vectors that are K-linearly independent.
    std::vector<KVector> picked;
    QMatrix span;  // realizations of alpha_i * picked vectors
    std::vector<QMatrix> mul;
    for (std::size_t i = 0; i < r; ++i)
        mul.push_back(left_mul_matrix(spec, order.basis_element(i)));
    for (std::size_t v = 0; v < lattice.zrank() && picked.size() < m; ++v) {
        const QRow& row = lattice.canonical_basis().row(v);
        QMatrix candidate = span;
        for (std::size_t i = 0; i < r; ++i) {
            QRow out(row.size(), Rat(0));
            for (std::size_t t = 0; t < m; ++t)
                for (std::size_t aa = 0; aa < r; ++aa) {
                    if (row[t * r + aa] == 0) continue;
                    for (std::size_t bb = 0; bb < r; ++bb)
                        out[t * r + bb] += mul[i](bb, aa) * row[t * r + aa];
                }
            candidate.append_row(std::move(out));
        }
        if (rank(candidate) == candidate.num_rows()) {
            span = std::move(candidate);
            picked.push_back(lattice.unrealize(row));
        }
    }
    if (picked.size() != m) throw std::logic_error("failed to extract a K-basis");
    OLattice free_part = OLattice::from_generators(lattice.order_ptr(), m, picked);
    if (lattice.form_scale() != 1) free_part = free_part.scaled(lattice.form_scale());

    // Smallest positive integer a with a * Lambda <= Lambda_1.
    QMatrix coeffs = lattice.canonical_basis() * inverse(free_part.canonical_basis());
    Int a = common_denominator(coeffs);
    return FreeSandwich{std::move(free_part), a};
}

}  // namespace ordlat
