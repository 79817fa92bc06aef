#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ordlat/algebra.hpp"
#include "ordlat/matrix.hpp"
#include "ordlat/order.hpp"

namespace ordlat {

// Vector in K^m: m algebra elements.
using KVector = std::vector<Elem>;

struct RankError : std::runtime_error {
    RankError(std::size_t achieved, std::size_t expected)
        : std::runtime_error("generators span rank " + std::to_string(achieved) +
                             " of required " + std::to_string(expected)),
          achieved_rank(achieved),
          expected_rank(expected) {}
    std::size_t achieved_rank;
    std::size_t expected_rank;
};

struct InvarianceViolation {
    std::size_t order_basis_index;
    std::size_t lattice_basis_index;
    std::string what;
};

struct InvarianceReport {
    std::vector<InvarianceViolation> violations;
    bool ok() const { return violations.empty(); }
};

// A left O-invariant lattice in K^m, canonicalized by the Hermite normal form
// of its Z-basis over the rm-dimensional rational coordinate realization.
// Sections and projections yield *relative* lattices whose Z-rank is below rm.
//
// The inner product is <x,y> = (1/2)(h(x,y) + conj(h(x,y))) for the standard
// Hermitian form h(x,y) = sum_t x_t conj(y_t), scaled by form_scale (default 1).
// With this normalization the rank-1 lattice O itself has det = D_O.
class OLattice {
public:
    // Closes gens under the left order action, canonicalizes, and requires
    // full rank rm; throws RankError otherwise.
    static OLattice from_generators(std::shared_ptr<const Order> order, std::size_t m,
                                    const std::vector<KVector>& gens);

    // Realization-level constructor (rows = rational coordinate vectors of
    // length r*m).  Optionally closes under the order action; checks full rank
    // only when required.  Used by duals, sections, and file I/O.
    static OLattice from_realization(std::shared_ptr<const Order> order, std::size_t m,
                                     QMatrix rows, bool close_under_order,
                                     bool require_full_rank);

    const Order& order() const { return *order_; }
    const std::shared_ptr<const Order>& order_ptr() const { return order_; }
    std::size_t ambient_dim() const { return m_; }
    std::size_t ambient_rank() const { return order_->rank() * m_; }
    std::size_t zrank() const { return basis_.num_rows(); }
    bool full_rank() const { return zrank() == ambient_rank(); }
    const QMatrix& canonical_basis() const { return basis_; }
    const Rat& form_scale() const { return form_scale_; }

    KVector basis_vector(std::size_t i) const;

    QMatrix gram() const;
    Rat determinant() const;

    // Integer coordinates of a realization row over the canonical basis, or
    // nullopt when the vector is not a lattice member.
    std::optional<ZRow> member_coordinates(const QRow& x) const;
    bool contains(const QRow& x) const { return member_coordinates(x).has_value(); }
    bool contains(const KVector& v) const { return contains(realize(v)); }

    // Sublattice test: every basis vector of other lies in *this.
    bool contains_lattice(const OLattice& other) const;

    bool operator==(const OLattice& o) const;

    // Hermitian product h(x,y) = form_scale * sum_t x_t conj(y_t).
    Elem hermitian(const KVector& x, const KVector& y) const;
    Rat inner(const QRow& x, const QRow& y) const;

    // Realization helpers.
    QRow realize(const KVector& v) const;
    KVector unrealize(const QRow& row) const;

    // The O-dual { x : h(x, Lambda) contained in O }, taken inside the
    // rational span: relative lattices dualize within their own subspace.
    OLattice o_dual() const;

    // Gram scaling: norms multiply by c > 0.
    OLattice scaled(const Rat& c) const;

    InvarianceReport check_o_invariance() const;

private:
    OLattice(std::shared_ptr<const Order> order, std::size_t m, QMatrix basis, Rat form_scale)
        : order_(std::move(order)), m_(m), basis_(std::move(basis)),
          form_scale_(std::move(form_scale)) {}

    std::shared_ptr<const Order> order_;
    std::size_t m_;
    QMatrix basis_;      // zrank x rm, canonical
    Rat form_scale_{1};
};

// Non-owning shared_ptr around a built-in (static) order.
std::shared_ptr<const Order> builtin_order_ptr(const std::string& name);

OLattice direct_sum(const OLattice& a, const OLattice& b);

struct FreeSandwich {
    OLattice free_sublattice;  // Lambda_1, free on m vectors of Lambda
    Int a;                     // Lambda_1 <= Lambda <= (1/a) Lambda_1
};

FreeSandwich free_sandwich(const OLattice& lattice);

// Canonical HNF of rational rows: unique basis of the generated Z-module.
QMatrix canonical_rational_hnf(const QMatrix& rows);

}  // namespace ordlat
