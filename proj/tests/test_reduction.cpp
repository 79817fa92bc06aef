#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ordlat/lattice.hpp"
#include "ordlat/reduction.hpp"

using namespace ordlat;

namespace {

// Exhaustive box oracle: minimum of x G x^T over nonzero |x_i| <= radius.
Rat brute_min(const QMatrix& g, long radius) {
    std::size_t n = g.num_rows();
    std::vector<long> x(n, -radius);
    Rat best(0);
    bool have = false;
    while (true) {
        bool zero = true;
        for (long v : x)
            if (v != 0) zero = false;
        if (!zero) {
            Rat val(0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (x[i] != 0 && x[j] != 0) val += Rat(x[i]) * g(i, j) * Rat(x[j]);
            if (!have || val < best) {
                best = val;
                have = true;
            }
        }
        std::size_t k = 0;
        while (k < n && x[k] == radius) x[k++] = -radius;
        if (k == n) break;
        ++x[k];
    }
    return best;
}

QMatrix random_pd_gram(std::mt19937_64& rng, std::size_t n) {
    // B with entries in [-3,3], G = B B^T + I to keep it definite.
    std::uniform_int_distribution<long> d(-3, 3);
    QMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = Rat(d(rng));
    QMatrix g = b * b.transposed();
    for (std::size_t i = 0; i < n; ++i) g(i, i) += 1;
    return g;
}

OLattice standard_lattice(const std::string& order_name, std::size_t m) {
    auto o = builtin_order_ptr(order_name);
    std::vector<KVector> gens;
    for (std::size_t t = 0; t < m; ++t) {
        KVector v(m, elem_zero(o->spec()));
        v[t] = elem_one(o->spec());
        gens.push_back(v);
    }
    return OLattice::from_generators(o, m, gens);
}

}  // namespace

TEST_CASE("lll transform is unimodular and reproduces the reduced gram") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        QMatrix g = random_pd_gram(rng, 5);
        LllResult r = lll_reduce(g);
        QMatrix u(5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) u(i, j) = Rat(r.transform[i][j]);
        Rat du = det(u);
        CHECK((du == 1 || du == -1));
        CHECK(u * g * u.transposed() == r.reduced_gram);
    }
}

TEST_CASE("lll rejects non positive definite input naming the minor") {
    QMatrix g(2, 2);
    g(0, 0) = 1;
    g(1, 1) = -1;
    try {
        lll_reduce(g);
        FAIL("expected NotPositiveDefiniteError");
    } catch (const NotPositiveDefiniteError& e) {
        CHECK(e.minor_index == 1);
    }
    QMatrix z(3, 3);
    z(1, 1) = 1;
    z(2, 2) = 1;
    CHECK_THROWS_AS(lll_reduce(z), NotPositiveDefiniteError);
}

TEST_CASE("shortest norm matches the exhaustive oracle on random forms") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        QMatrix g = random_pd_gram(rng, 4);
        Rat fast = shortest_norm_of_gram(g, kDefaultNodeBudget);
        Rat slow = brute_min(g, 4);
        CHECK(fast == slow);
    }
}

TEST_CASE("minimal vector coordinates match the oracle count and norm") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 6; ++trial) {
        QMatrix g = random_pd_gram(rng, 3);
        auto vecs = minimal_coords_of_gram(g, kDefaultNodeBudget);
        Rat mn = shortest_norm_of_gram(g, kDefaultNodeBudget);
        CHECK(!vecs.empty());
        CHECK(vecs.size() % 2 == 0);
        long count = 0;
        std::vector<long> x(3, -5);
        while (true) {
            bool zero = x[0] == 0 && x[1] == 0 && x[2] == 0;
            if (!zero) {
                Rat val(0);
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j) val += Rat(x[i]) * g(i, j) * Rat(x[j]);
                if (val == mn) ++count;
            }
            std::size_t k = 0;
            while (k < 3 && x[k] == 5) x[k++] = -5;
            if (k == 3) break;
            ++x[k];
        }
        CHECK(static_cast<long>(vecs.size()) == count);
        for (const auto& z : vecs) {
            Rat val(0);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) val += Rat(z[i]) * g(i, j) * Rat(z[j]);
            CHECK(val == mn);
        }
    }
}

TEST_CASE("standard lattices over the built-in orders") {
    // O itself: minimum 1 (attained by 1), determinant D.
    OLattice a2 = standard_lattice("eisenstein", 1);
    CHECK(shortest_norm(a2) == 1);
    CHECK(minimal_vectors(a2).size() == 6);
    HermiteData h = hermite(a2);
    CHECK(h.gamma_nth == make_rat(4, 3));
    CHECK(h.gamma_float == doctest::Approx(2.0 / std::sqrt(3.0)));

    OLattice d4 = standard_lattice("hurwitz", 1);
    CHECK(shortest_norm(d4) == 1);
    CHECK(minimal_vectors(d4).size() == 24);
    CHECK(hermite(d4).gamma_nth == Rat(4));

    OLattice z2 = standard_lattice("gaussian", 1);
    CHECK(shortest_norm(z2) == 1);
    CHECK(minimal_vectors(z2).size() == 4);
    CHECK(hermite(z2).gamma_nth == Rat(1));
}

TEST_CASE("hermite data on a scaled lattice") {
    OLattice L = standard_lattice("hurwitz", 1).scaled(make_rat(5, 3));
    HermiteData h = hermite(L);
    CHECK(h.min_norm == make_rat(5, 3));
    CHECK(h.n == 4);
    // gamma is scale invariant
    CHECK(h.gamma_nth == Rat(4));
}

TEST_CASE("node budget error is raised and carries the budget") {
    std::mt19937_64 rng(5);
    QMatrix g = random_pd_gram(rng, 6);
    try {
        shortest_norm_of_gram(g, 3);
        FAIL("expected EnumerationBudgetError");
    } catch (const EnumerationBudgetError& e) {
        CHECK(e.budget == 3);
    }
}
