#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordlat/algebra.hpp"
#include "ordlat/matrix.hpp"

namespace ordlat {

// A maximal order given by the rational coordinates of a Z-basis.  The four
// built-in orders are the documented maximal orders; maximality itself is not
// verified here, only the ring axioms (see verify_ring_closure).
class Order {
public:
    Order(AlgebraSpec spec, QMatrix basis, std::string name = "");

    const AlgebraSpec& spec() const { return spec_; }
    const QMatrix& basis_matrix() const { return basis_; }
    const std::string& name() const { return name_; }
    std::size_t rank() const { return spec_.rank(); }

    Elem basis_element(std::size_t i) const;

    // det of the trace-form Gram of the Z-basis; basis independent, positive.
    Rat d_invariant() const;

    // Gram matrix (real_inner of basis pairs).
    QMatrix gram() const;

    // Integer coordinates of x over the Z-basis, or nullopt if x is not a member.
    std::optional<ZRow> coordinates(const Elem& x) const;

    // Rational coordinates of x over the Z-basis (always defined).
    QRow rational_coordinates(const Elem& x) const;

    bool contains(const Elem& x) const { return coordinates(x).has_value(); }

private:
    AlgebraSpec spec_;
    QMatrix basis_;
    QMatrix basis_inv_;
    std::string name_;
};

struct ClosureViolation {
    std::string what;  // human-readable description naming the offending pair
};

struct ClosureReport {
    std::vector<ClosureViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Confirms 1 in span, alpha_i * alpha_j in span, conj(alpha_i) in span.
ClosureReport verify_ring_closure(const Order& o);

// Built-in maximal orders.
const Order& eisenstein_order();
const Order& gaussian_order();
const Order& hurwitz_order();
const Order& j_order();

// Lookup by CLI name: eisenstein | gaussian | hurwitz | j.  Throws on unknown.
const Order& builtin_order(const std::string& name);
std::vector<std::string> builtin_order_names();

}  // namespace ordlat
