#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordlat/lattice.hpp"

using namespace ordlat;

namespace {

Elem el(const AlgebraSpec& s, std::initializer_list<Rat> coords) {
    Elem e(coords);
    if (e.size() != s.rank()) throw std::logic_error("bad element literal");
    return e;
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

Rat d_pow(const Order& o, unsigned long e) { return pow_rat(o.d_invariant(), e); }

}  // namespace

TEST_CASE("rank-1 standard lattice has det = D and is O-invariant") {
    for (const auto& name : {"eisenstein", "gaussian", "hurwitz", "j"}) {
        CAPTURE(name);
        OLattice L = standard_lattice(name, 1);
        CHECK(L.determinant() == builtin_order(name).d_invariant());
        CHECK(L.check_o_invariance().ok());
        CHECK(L.full_rank());
    }
}

TEST_CASE("canonical basis does not depend on generator order or redundancy") {
    auto o = builtin_order_ptr("hurwitz");
    const AlgebraSpec& s = o->spec();
    Elem one = elem_one(s);
    Elem two = scale(one, Rat(2));
    Elem ipl = el(s, {Rat(1), Rat(1), Rat(0), Rat(0)});  // 1 + i
    KVector g1{ipl, elem_zero(s)};
    KVector g2{one, one};
    OLattice a = OLattice::from_generators(o, 2, {g1, g2});
    OLattice b = OLattice::from_generators(o, 2, {g2, g1, g2});
    KVector extra{two, elem_zero(s)};  // 2 e_1 = (1-i)(1+i) e_1, already inside
    OLattice c = OLattice::from_generators(o, 2, {g2, extra, g1});
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("membership and coordinates round-trip") {
    OLattice L = standard_lattice("eisenstein", 2);
    KVector v{el(L.order().spec(), {make_rat(1, 2), make_rat(1, 2)}),
              el(L.order().spec(), {Rat(3), Rat(-1)})};
    CHECK(L.contains(v));
    auto c = L.member_coordinates(L.realize(v));
    REQUIRE(c.has_value());
    QRow back(L.ambient_rank(), Rat(0));
    for (std::size_t i = 0; i < c->size(); ++i)
        for (std::size_t j = 0; j < L.ambient_rank(); ++j)
            back[j] += Rat((*c)[i]) * L.canonical_basis()(i, j);
    CHECK(back == L.realize(v));
    KVector w{el(L.order().spec(), {make_rat(1, 3), Rat(0)}),
              el(L.order().spec(), {Rat(0), Rat(0)})};
    CHECK(!L.contains(w));
}

TEST_CASE("non-invariant row span is reported") {
    auto o = builtin_order_ptr("gaussian");
    // Z-span of {e_1} alone inside K^1: not closed under multiplication by i.
    QMatrix rows(1, 2);
    rows(0, 0) = 1;
    OLattice L = OLattice::from_realization(o, 1, rows, false, false);
    auto report = L.check_o_invariance();
    CHECK(!report.ok());
    CHECK(report.violations[0].what.find("leaves the lattice") != std::string::npos);
}

TEST_CASE("O-dual of the standard lattice is itself") {
    for (const auto& name : {"eisenstein", "gaussian", "hurwitz", "j"}) {
        for (std::size_t m : {1, 2}) {
            CAPTURE(name);
            CAPTURE(m);
            OLattice L = standard_lattice(name, m);
            CHECK(L.o_dual() == L);
        }
    }
}

TEST_CASE("dual determinant identity and biduality") {
    auto o = builtin_order_ptr("hurwitz");
    const AlgebraSpec& s = o->spec();
    Elem one = elem_one(s);
    Elem i = el(s, {Rat(0), Rat(1), Rat(0), Rat(0)});
    // A proper full-rank sublattice of O^2.
    OLattice L = OLattice::from_generators(
        o, 2, {KVector{scale(one, Rat(2)), one}, KVector{elem_zero(s), add(one, i)}});
    OLattice D = L.o_dual();
    CHECK(D.determinant() * L.determinant() == d_pow(L.order(), 4));  // D^(2m)
    CHECK(D.o_dual() == L);
    CHECK(D.check_o_invariance().ok());
}

TEST_CASE("duality is antitone") {
    auto o = builtin_order_ptr("eisenstein");
    const AlgebraSpec& s = o->spec();
    Elem one = elem_one(s);
    OLattice big = standard_lattice("eisenstein", 2);
    OLattice small = OLattice::from_generators(
        o, 2, {KVector{scale(one, Rat(3)), elem_zero(s)}, KVector{one, one}});
    REQUIRE(big.contains_lattice(small));
    CHECK(small.o_dual().contains_lattice(big.o_dual()));
}

TEST_CASE("scaling multiplies norms and determinants") {
    OLattice L = standard_lattice("gaussian", 2);
    Rat c = make_rat(3, 2);
    OLattice S = L.scaled(c);
    CHECK(S.determinant() == L.determinant() * pow_rat(c, 4));
    QRow x = L.canonical_basis().row(0);
    CHECK(S.inner(x, x) == c * L.inner(x, x));
    // Dual with respect to the scaled form shrinks by 1/c, so the
    // determinant identity holds unchanged.
    OLattice SD = S.o_dual();
    CHECK(SD.determinant() * S.determinant() == d_pow(L.order(), 4));
    QRow e1(L.ambient_rank(), Rat(0));
    e1[0] = make_rat(2, 3);
    CHECK(SD.contains(e1));
}

TEST_CASE("direct sum concatenates and multiplies determinants") {
    OLattice a = standard_lattice("hurwitz", 1);
    OLattice b = standard_lattice("hurwitz", 2);
    OLattice s = direct_sum(a, b);
    CHECK(s.ambient_dim() == 3);
    CHECK(s.zrank() == 12);
    CHECK(s.determinant() == a.determinant() * b.determinant());
    CHECK(s.check_o_invariance().ok());
}

TEST_CASE("free sandwich bounds the lattice between free modules") {
    auto o = builtin_order_ptr("hurwitz");
    const AlgebraSpec& s = o->spec();
    Elem one = elem_one(s);
    Elem i = el(s, {Rat(0), Rat(1), Rat(0), Rat(0)});
    OLattice L = OLattice::from_generators(
        o, 2, {KVector{add(one, i), elem_zero(s)}, KVector{one, one}});
    FreeSandwich fs = free_sandwich(L);
    CHECK(L.contains_lattice(fs.free_sublattice));
    CHECK(fs.a > 0);
    // a * Lambda lies inside the free part.
    for (std::size_t v = 0; v < L.zrank(); ++v) {
        QRow scaled = L.canonical_basis().row(v);
        for (auto& q : scaled) q *= Rat(fs.a);
        CHECK(fs.free_sublattice.contains(scaled));
    }
    CHECK(fs.free_sublattice.check_o_invariance().ok());
}

TEST_CASE("hermitian form takes order values on standard lattice") {
    OLattice L = standard_lattice("hurwitz", 2);
    for (std::size_t v = 0; v < L.zrank(); ++v)
        for (std::size_t w = 0; w < L.zrank(); ++w) {
            Elem h = L.hermitian(L.basis_vector(v), L.basis_vector(w));
            CHECK(L.order().contains(h));
        }
}

TEST_CASE("rank errors carry achieved and expected ranks") {
    auto o = builtin_order_ptr("gaussian");
    const AlgebraSpec& s = o->spec();
    KVector g{elem_one(s), elem_zero(s)};
    try {
        OLattice::from_generators(o, 2, {g});
        FAIL("expected RankError");
    } catch (const RankError& e) {
        CHECK(e.achieved_rank == 2);
        CHECK(e.expected_rank == 4);
    }
}
