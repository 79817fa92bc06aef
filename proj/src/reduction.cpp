#include "ordlat/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ordlat {

namespace {

// Gram-Schmidt data computed from a Gram matrix alone.
struct Gso {
    std::vector<Rat> bstar;            // squared norms of the orthogonalized vectors
    std::vector<std::vector<Rat>> mu;  // mu[i][j], j < i
};

Gso compute_gso(const QMatrix& g) {
    std::size_t n = g.num_rows();
    Gso out;
    out.bstar.assign(n, Rat(0));
    out.mu.assign(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rat s = g(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= out.mu[j][k] * out.mu[i][k] * out.bstar[k];
            out.mu[i][j] = s / out.bstar[j];
        }
        Rat b = g(i, i);
        for (std::size_t k = 0; k < i; ++k) b -= out.mu[i][k] * out.mu[i][k] * out.bstar[k];
        if (b <= 0) throw NotPositiveDefiniteError(i);
        out.bstar[i] = std::move(b);
    }
    return out;
}

Int round_nearest(const Rat& x) {
    // Nearest integer, ties toward +infinity.
    Rat shifted = x + make_rat(1, 2);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return q;
}

// Subtract c * row j from row k, on the Gram matrix and the transform.
void row_op(QMatrix& g, std::vector<ZRow>& u, std::size_t k, std::size_t j, const Int& c) {
    std::size_t n = g.num_rows();
    Rat cq(c);
    for (std::size_t t = 0; t < n; ++t) g(k, t) -= cq * g(j, t);
    for (std::size_t t = 0; t < n; ++t) g(t, k) -= cq * g(t, j);
    for (std::size_t t = 0; t < u[k].size(); ++t) u[k][t] -= c * u[j][t];
}

void row_swap(QMatrix& g, std::vector<ZRow>& u, std::size_t k) {
    std::size_t n = g.num_rows();
    for (std::size_t t = 0; t < n; ++t) std::swap(g(k, t), g(k - 1, t));
    for (std::size_t t = 0; t < n; ++t) std::swap(g(t, k), g(t, k - 1));
    std::swap(u[k], u[k - 1]);
}

}  // namespace

LllResult lll_reduce(const QMatrix& gram, const Rat& delta) {
    if (gram.num_rows() != gram.num_cols()) throw std::invalid_argument("gram must be square");
    if (!(delta > make_rat(1, 4) && delta < 1))
        throw std::invalid_argument("delta must lie in (1/4, 1)");
    std::size_t n = gram.num_rows();
    QMatrix g = gram;
    std::vector<ZRow> u(n, ZRow(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    if (n <= 1) {
        if (n == 1 && g(0, 0) <= 0) throw NotPositiveDefiniteError(0);
        return {std::move(u), std::move(g)};
    }

    std::size_t k = 1;
    while (k < n) {
        Gso gso = compute_gso(g);
        // Size-reduce row k; updating mu[k][*] keeps the pass exact.
        for (std::size_t j = k; j-- > 0;) {
            Int c = round_nearest(gso.mu[k][j]);
            if (c != 0) {
                row_op(g, u, k, j, c);
                Rat cq(c);
                for (std::size_t t = 0; t < j; ++t) gso.mu[k][t] -= cq * gso.mu[j][t];
                gso.mu[k][j] -= cq;
            }
        }
        Rat lhs = gso.bstar[k];
        Rat rhs = (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.bstar[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            row_swap(g, u, k);
            k = (k > 1) ? k - 1 : 1;
        }
    }
    return {std::move(u), std::move(g)};
}

namespace {

// Depth-first Fincke-Pohst over the orthogonalized form
//   Q(x) = sum_j bstar[j] * (x_j + sum_{i>j} mu[i][j] x_i)^2,
// descending from level n-1.  Bound handling is exact; a double approximation
// only seeds the integer interval, which is then corrected by exact checks.
struct Enumerator {
    const Gso& gso;
    std::size_t n;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    Rat best;                     // current radius (phase 1: strict; phase 2: fixed)
    bool collect = false;         // phase 2: gather vectors with Q == best
    std::vector<long> x;
    std::vector<std::vector<long>> found;

    Enumerator(const Gso& gso_, std::uint64_t budget_) : gso(gso_), n(gso_.bstar.size()) {
        budget = budget_;
        x.assign(n, 0);
    }

    bool fits(const Rat& b, const Rat& center, long v, const Rat& radius, bool strict) const {
        Rat t = Rat(v) + center;
        Rat val = b * t * t;
        return strict ? val < radius : val <= radius;
    }

    void dfs(std::size_t level, const Rat& partial, bool tail_zero) {
        std::size_t k = level - 1;  // level in [1, n]; k is the coordinate index
        Rat center(0);
        for (std::size_t i = k + 1; i < n; ++i)
            if (x[i] != 0) center += gso.mu[i][k] * Rat(x[i]);
        Rat radius = best - partial;
        // Interval seed from doubles, then exact correction.
        double bd = mpq_get_d(gso.bstar[k].get_mpq_t());
        double rd = mpq_get_d(radius.get_mpq_t());
        double cd = mpq_get_d(center.get_mpq_t());
        double s = rd > 0 ? std::sqrt(rd / bd) : 0.0;
        long hi = static_cast<long>(std::floor(-cd + s)) + 2;
        long lo = static_cast<long>(std::ceil(-cd - s)) - 2;
        bool strict = !collect;
        while (fits(gso.bstar[k], center, hi + 1, radius, strict)) ++hi;
        while (hi >= lo && !fits(gso.bstar[k], center, hi, radius, strict)) --hi;
        while (fits(gso.bstar[k], center, lo - 1, radius, strict)) --lo;
        while (lo <= hi && !fits(gso.bstar[k], center, lo, radius, strict)) ++lo;
        if (tail_zero && lo < 0) lo = 0;  // sign symmetry: first nonzero coordinate positive

        for (long v = lo; v <= hi; ++v) {
            if (++nodes > budget) throw EnumerationBudgetError(budget);
            Rat t = Rat(v) + center;
            Rat val = partial + gso.bstar[k] * t * t;
            if (strict ? !(val < best) : !(val <= best)) continue;
            x[k] = v;
            bool tz = tail_zero && v == 0;
            if (k == 0) {
                if (tz) continue;  // zero vector
                if (collect) {
                    if (val == best) found.push_back(std::vector<long>(x.begin(), x.end()));
                } else {
                    best = val;  // shrink and keep scanning
                }
            } else {
                dfs(k, val, tz);
            }
        }
        x[k] = 0;
    }
};

Rat min_diag(const QMatrix& g) {
    Rat m = g(0, 0);
    for (std::size_t i = 1; i < g.num_rows(); ++i)
        if (g(i, i) < m) m = g(i, i);
    return m;
}

std::uint64_t env_node_budget(std::uint64_t fallback) {
    if (const char* s = std::getenv("ORDLAT_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return fallback;
}

struct ReducedEnum {
    LllResult lll;
    Gso gso;
    Rat min_norm;
    std::uint64_t nodes_used;
};

ReducedEnum reduced_minimum(const QMatrix& gram, std::uint64_t node_budget) {
    ReducedEnum out{lll_reduce(gram), {}, Rat(0), 0};
    out.gso = compute_gso(out.lll.reduced_gram);
    Enumerator e(out.gso, node_budget);
    e.best = min_diag(out.lll.reduced_gram);
    e.dfs(e.n, Rat(0), true);
    out.min_norm = e.best;
    out.nodes_used = e.nodes;
    return out;
}

}  // namespace

Rat shortest_norm_of_gram(const QMatrix& gram, std::uint64_t node_budget) {
    node_budget = env_node_budget(node_budget);
    return reduced_minimum(gram, node_budget).min_norm;
}

std::vector<ZRow> minimal_coords_of_gram(const QMatrix& gram, std::uint64_t node_budget) {
    node_budget = env_node_budget(node_budget);
    ReducedEnum re = reduced_minimum(gram, node_budget);
    Enumerator e(re.gso, node_budget > re.nodes_used ? node_budget - re.nodes_used : 1);
    e.best = re.min_norm;
    e.collect = true;
    e.dfs(e.n, Rat(0), true);
    std::vector<ZRow> out;
    std::size_t n = gram.num_rows();
    for (const auto& xv : e.found) {
        ZRow z(n, Int(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (xv[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) z[j] += Int(xv[i]) * re.lll.transform[i][j];
        }
        ZRow neg(n);
        for (std::size_t j = 0; j < n; ++j) neg[j] = -z[j];
        out.push_back(std::move(z));
        out.push_back(std::move(neg));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rat shortest_norm(const OLattice& lattice, std::uint64_t node_budget) {
    if (lattice.zrank() == 0) throw std::invalid_argument("lattice has rank zero");
    return shortest_norm_of_gram(lattice.gram(), node_budget);
}

std::vector<QRow> minimal_vectors(const OLattice& lattice, std::uint64_t node_budget) {
    if (lattice.zrank() == 0) throw std::invalid_argument("lattice has rank zero");
    std::vector<ZRow> coords = minimal_coords_of_gram(lattice.gram(), node_budget);
    const QMatrix& b = lattice.canonical_basis();
    std::vector<QRow> out;
    out.reserve(coords.size());
    for (const auto& z : coords) {
        QRow row(b.num_cols(), Rat(0));
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (z[i] == 0) continue;
            Rat c(z[i]);
            for (std::size_t j = 0; j < b.num_cols(); ++j) row[j] += c * b(i, j);
        }
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end());
    return out;
}

HermiteData hermite(const OLattice& lattice, std::uint64_t node_budget) {
    HermiteData h;
    h.min_norm = shortest_norm(lattice, node_budget);
    h.det = lattice.determinant();
    h.n = lattice.zrank();
    h.gamma_nth = pow_rat(h.min_norm, h.n) / h.det;
    h.gamma_float = std::pow(mpq_get_d(h.gamma_nth.get_mpq_t()), 1.0 / static_cast<double>(h.n));
    return h;
}

}  // namespace ordlat
