#include "ordlat/corpus.hpp"

namespace ordlat {

Elem random_order_element(const Order& order, std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    Elem out = elem_zero(order.spec());
    for (std::size_t i = 0; i < order.rank(); ++i) {
        long c = d(rng);
        if (c != 0) out = add(out, scale(order.basis_element(i), Rat(c)));
    }
    return out;
}

OLattice random_olattice(std::shared_ptr<const Order> order, std::size_t m,
                         std::mt19937_64& rng) {
    std::uniform_int_distribution<long> scale_pick(1, 3);
    const AlgebraSpec& spec = order->spec();
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rat c(scale_pick(rng));
        std::vector<KVector> gens;
        for (std::size_t g = 0; g < m + 2; ++g) {
            KVector v(m, elem_zero(spec));
            for (std::size_t t = 0; t < m; ++t)
                v[t] = scale(random_order_element(*order, rng), c);
            gens.push_back(std::move(v));
        }
        try {
            return OLattice::from_generators(order, m, gens);
        } catch (const RankError&) {
            continue;
        }
    }
    throw std::logic_error("failed to generate a full-rank random lattice");
}

std::pair<OLattice, OLattice> random_nested_pair(std::shared_ptr<const Order> order,
                                                 std::size_t m, std::mt19937_64& rng) {
    OLattice super = random_olattice(order, m, rng);
    const QMatrix& b = super.canonical_basis();
    std::uniform_int_distribution<long> d(-2, 2);
    QMatrix rows;
    for (std::size_t i = 0; i < b.num_rows(); ++i) {
        QRow doubled(b.num_cols());
        for (std::size_t j = 0; j < b.num_cols(); ++j) doubled[j] = Rat(2) * b(i, j);
        rows.append_row(std::move(doubled));
    }
    for (int extra = 0; extra < 3; ++extra) {
        QRow combo(b.num_cols(), Rat(0));
        for (std::size_t i = 0; i < b.num_rows(); ++i) {
            long c = d(rng);
            if (c == 0) continue;
            for (std::size_t j = 0; j < b.num_cols(); ++j) combo[j] += Rat(c) * b(i, j);
        }
        rows.append_row(std::move(combo));
    }
    OLattice sub = OLattice::from_realization(order, m, std::move(rows), true, true);
    return {std::move(sub), std::move(super)};
}

Subspace random_lattice_subspace(const OLattice& lattice, std::size_t s,
                                 std::mt19937_64& rng) {
    const QMatrix& b = lattice.canonical_basis();
    std::uniform_int_distribution<long> d(-1, 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<KVector> gens;
        for (std::size_t g = 0; g < s; ++g) {
            QRow combo(b.num_cols(), Rat(0));
            for (std::size_t i = 0; i < b.num_rows(); ++i) {
                long c = d(rng);
                if (c == 0) continue;
                for (std::size_t j = 0; j < b.num_cols(); ++j) combo[j] += Rat(c) * b(i, j);
            }
            gens.push_back(lattice.unrealize(combo));
        }
        try {
            return make_subspace(lattice.order_ptr(), lattice.ambient_dim(), gens);
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::logic_error("failed to generate an independent subspace");
}

}  // namespace ordlat
