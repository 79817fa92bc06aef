#include "ordlat/sections.hpp"

#include <map>

namespace ordlat {

namespace {

QRow realize(const AlgebraSpec& spec, const KVector& v) {
    std::size_t r = spec.rank();
    QRow row(r * v.size(), Rat(0));
    for (std::size_t t = 0; t < v.size(); ++t)
        for (std::size_t c = 0; c < r; ++c) row[t * r + c] = v[t][c];
    return row;
}

KVector unrealize(const AlgebraSpec& spec, const QRow& row) {
    std::size_t r = spec.rank();
    KVector v(row.size() / r, elem_zero(spec));
    for (std::size_t t = 0; t < v.size(); ++t)
        for (std::size_t c = 0; c < r; ++c) v[t][c] = row[t * r + c];
    return v;
}

QMatrix ambient_form(const AlgebraSpec& spec, std::size_t m) {
    std::size_t r = spec.rank();
    QMatrix block = basis_gram(spec);
    QMatrix a(r * m, r * m);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) a(t * r + i, t * r + j) = block(i, j);
    return a;
}

// Realization rows of the K-span of a single vector: beta_i * v over the
// algebra coordinate basis.
QMatrix k_line_rows(const AlgebraSpec& spec, const KVector& v) {
    std::size_t r = spec.rank();
    QMatrix out;
    for (std::size_t i = 0; i < r; ++i) {
        Elem beta = elem_zero(spec);
        beta[i] = 1;
        KVector w(v.size(), elem_zero(spec));
        for (std::size_t t = 0; t < v.size(); ++t) w[t] = multiply(spec, beta, v[t]);
        out.append_row(realize(spec, w));
    }
    return out;
}

OLattice with_scale(OLattice l, const Rat& c) { return c == 1 ? l : l.scaled(c); }

}  // namespace

Subspace make_subspace(std::shared_ptr<const Order> order, std::size_t m,
                       const std::vector<KVector>& k_generators) {
    const AlgebraSpec& spec = order->spec();
    std::size_t r = spec.rank();
    if (k_generators.empty() || k_generators.size() > m)
        throw std::invalid_argument("subspace needs between 1 and m generators");
    QMatrix rows;
    for (const auto& g : k_generators) {
        if (g.size() != m) throw std::invalid_argument("generator has wrong ambient dimension");
        QMatrix line = k_line_rows(spec, g);
        for (std::size_t i = 0; i < r; ++i) rows.append_row(line.row(i));
    }
    std::size_t s = k_generators.size();
    if (rank(rows) != s * r)
        throw std::invalid_argument("subspace generators are not K-linearly independent");
    Subspace f;
    f.order = std::move(order);
    f.m = m;
    f.k_generators = k_generators;
    f.k_dim = s;
    f.realization = row_space_canonical(rows);
    return f;
}

Subspace perp(const Subspace& f) {
    const AlgebraSpec& spec = f.order->spec();
    std::size_t r = spec.rank();
    std::size_t n = r * f.m;
    // x is h-orthogonal to F iff <x, w> = 0 for every realization row w of F.
    QMatrix constraints = f.realization * ambient_form(spec, f.m);
    QMatrix basis = null_space(constraints);
    // Extract m - s K-generators greedily.
    std::vector<KVector> gens;
    QMatrix span;
    for (std::size_t i = 0; i < basis.num_rows() && gens.size() < f.m - f.k_dim; ++i) {
        KVector v = unrealize(spec, basis.row(i));
        QMatrix candidate = span;
        QMatrix line = k_line_rows(spec, v);
        for (std::size_t j = 0; j < r; ++j) candidate.append_row(line.row(j));
        if (rank(candidate) == candidate.num_rows()) {
            span = std::move(candidate);
            gens.push_back(std::move(v));
        }
    }
    if (gens.size() != f.m - f.k_dim)
        throw std::logic_error("failed to extract a K-basis of the orthogonal complement");
    (void)n;
    return make_subspace(f.order, f.m, gens);
}

OLattice intersect(const OLattice& lattice, const Subspace& f) {
    if (lattice.ambient_dim() != f.m || !(lattice.order().spec() == f.order->spec()))
        throw std::invalid_argument("lattice and subspace have different ambients");
    const QMatrix& b = lattice.canonical_basis();
    // x in span(F) iff W x^T = 0 for W the standard complement of the span.
    QMatrix w = null_space(f.realization);
    if (w.num_rows() == 0)  // F is everything
        return lattice;
    std::vector<ZRow> kernel = integer_kernel(b * w.transposed());
    QMatrix rows(kernel.size(), b.num_cols());
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = 0; j < b.num_cols(); ++j)
            for (std::size_t t = 0; t < b.num_rows(); ++t)
                if (kernel[i][t] != 0) rows(i, j) += Rat(kernel[i][t]) * b(t, j);
    OLattice out = OLattice::from_realization(lattice.order_ptr(), f.m, std::move(rows),
                                              false, false);
    return with_scale(std::move(out), lattice.form_scale());
}

OLattice project_perp(const OLattice& lattice, const Subspace& f) {
    std::size_t r = lattice.order().rank();
    OLattice section = intersect(lattice, f);
    if (section.zrank() != r * f.k_dim)
        throw std::invalid_argument(
            "section rank " + std::to_string(section.zrank()) + " < " +
            std::to_string(r * f.k_dim) +
            ": the lattice does not meet the subspace in a full-rank section, so its "
            "orthogonal projection need not be discrete");
    const AlgebraSpec& spec = lattice.order().spec();
    QMatrix a = ambient_form(spec, f.m);
    const QMatrix& s = f.realization;
    QMatrix st = s.transposed();
    QMatrix proj_f = a * st * inverse(s * a * st) * s;  // x -> x * proj_f lands in F
    QMatrix pi = QMatrix::identity(a.num_rows());
    for (std::size_t i = 0; i < pi.num_rows(); ++i)
        for (std::size_t j = 0; j < pi.num_cols(); ++j) pi(i, j) -= proj_f(i, j);
    QMatrix rows = lattice.canonical_basis() * pi;
    OLattice out = OLattice::from_realization(lattice.order_ptr(), f.m, std::move(rows),
                                              false, false);
    return with_scale(std::move(out), lattice.form_scale());
}

DualSectionReport dual_section_identity(const OLattice& lattice, const Subspace& f) {
    std::size_t r = lattice.order().rank();
    DualSectionReport rep;
    rep.s = f.k_dim;
    rep.m = f.m;
    rep.d_invariant = lattice.order().d_invariant();
    rep.det_lattice = lattice.determinant();
    OLattice section = intersect(lattice, f);
    OLattice dual_section = intersect(lattice.o_dual(), perp(f));
    rep.section_full_rank = section.zrank() == r * f.k_dim;
    rep.dual_section_full_rank = dual_section.zrank() == r * (f.m - f.k_dim);
    rep.rank_equivalence = rep.section_full_rank == rep.dual_section_full_rank;
    if (rep.section_full_rank && rep.dual_section_full_rank) {
        rep.det_section = section.determinant();
        rep.det_dual_section = dual_section.determinant();
        Rat rhs = rep.det_section / rep.det_dual_section *
                  pow_rat(rep.d_invariant, 2 * (f.m - f.k_dim));
        rep.identity_holds = rep.det_lattice == rhs;
    }
    return rep;
}

EqualityAuditReport equality_audit(const OLattice& lattice,
                                   const PowerProduct& reference_gamma,
                                   bool all_vectors, std::uint64_t node_budget) {
    std::size_t m = lattice.ambient_dim();
    std::size_t r = lattice.order().rank();
    if (m < 3) throw std::invalid_argument("equality audit requires ambient dimension m >= 3");
    if (!lattice.full_rank()) throw std::invalid_argument("equality audit requires full rank");

    EqualityAuditReport rep;
    rep.lattice_norm = shortest_norm(lattice, node_budget);
    OLattice dual = lattice.o_dual();
    rep.dual_norm = shortest_norm(dual, node_budget);
    {
        HermiteData hl = hermite(lattice, node_budget);
        HermiteData hd = hermite(dual, node_budget);
        rep.dual_gamma_equals_gamma = hl.gamma_nth == hd.gamma_nth;
    }

    std::vector<QRow> minvecs = minimal_vectors(dual, node_budget);
    // Group by the rank-r lattice O*x: equal for unit multiples and only then.
    std::map<std::vector<QRow>, std::vector<QRow>> orbits;
    for (const auto& x : minvecs) {
        QMatrix row(1, x.size());
        for (std::size_t j = 0; j < x.size(); ++j) row(0, j) = x[j];
        OLattice ox = OLattice::from_realization(lattice.order_ptr(), m, row, true, false);
        orbits[ox.canonical_basis().rows()].push_back(x);
    }

    std::size_t n_section = r * (m - 1);
    PowerProduct ref_nth = reference_gamma.pow(Rat(static_cast<long>(n_section)));

    rep.all_pass = true;
    for (const auto& [key, members] : orbits) {
        std::vector<QRow> reps = all_vectors ? members
                                             : std::vector<QRow>{members.front()};
        for (const auto& x : reps) {
            OrbitAudit oa;
            oa.representative = x;
            oa.orbit_size = members.size();
            KVector xv = lattice.unrealize(x);
            Subspace line = make_subspace(lattice.order_ptr(), m, {xv});
            OLattice section = intersect(lattice, perp(line));
            oa.section_norm = shortest_norm(section, node_budget);
            oa.norm_matches = oa.section_norm == rep.lattice_norm;

            QMatrix row(1, x.size());
            for (std::size_t j = 0; j < x.size(); ++j) row(0, j) = x[j];
            OLattice ox = OLattice::from_realization(lattice.order_ptr(), m, row, true, false);
            if (lattice.form_scale() != 1) ox = ox.scaled(lattice.form_scale());
            oa.dual_line_is_ox = intersect(dual, line) == ox;

            HermiteData hs = hermite(section, node_budget);
            oa.section_det = hs.det;
            oa.section_gamma_nth = hs.gamma_nth;
            oa.gamma_vs_reference =
                PowerProduct::from_rational(hs.gamma_nth).compare(ref_nth);
            oa.gamma_matches_reference = oa.gamma_vs_reference == 0;
            oa.section_kissing = minimal_vectors(section, node_budget).size();
            oa.pass = oa.norm_matches && oa.dual_line_is_ox && oa.gamma_matches_reference;
            rep.all_pass = rep.all_pass && oa.pass;
            rep.orbits.push_back(std::move(oa));
        }
    }
    return rep;
}

}  // namespace ordlat
