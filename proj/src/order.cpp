#include "ordlat/order.hpp"

#include <sstream>

namespace ordlat {

Order::Order(AlgebraSpec spec, QMatrix basis, std::string name)
    : spec_(std::move(spec)), basis_(std::move(basis)), name_(std::move(name)) {
    std::size_t r = spec_.rank();
    if (basis_.num_rows() != r || basis_.num_cols() != r)
        throw std::invalid_argument("order basis must be r x r");
    basis_inv_ = inverse(basis_);  // throws if singular
}

Elem Order::basis_element(std::size_t i) const {
    Elem e(basis_.row(i).begin(), basis_.row(i).end());
    return e;
}

QMatrix Order::gram() const {
    std::size_t r = rank();
    QMatrix g(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            g(i, j) = real_inner(spec_, basis_element(i), basis_element(j));
            g(j, i) = g(i, j);
        }
    return g;
}

Rat Order::d_invariant() const { return det(gram()); }

QRow Order::rational_coordinates(const Elem& x) const {
    // Row vector x_coords = c * basis  =>  c = x_coords * basis^{-1}.
    QMatrix xm(1, rank());
    for (std::size_t j = 0; j < rank(); ++j) xm(0, j) = x[j];
    QMatrix c = xm * basis_inv_;
    return c.row(0);
}

std::optional<ZRow> Order::coordinates(const Elem& x) const {
    QRow c = rational_coordinates(x);
    ZRow z(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j].get_den() != 1) return std::nullopt;
        z[j] = c[j].get_num();
    }
    return z;
}

ClosureReport verify_ring_closure(const Order& o) {
    ClosureReport report;
    const AlgebraSpec& s = o.spec();
    std::size_t r = o.rank();
    if (!o.contains(elem_one(s)))
        report.violations.push_back({"1 is not in the Z-span of the basis"});
    for (std::size_t i = 0; i < r; ++i) {
        Elem ai = o.basis_element(i);
        if (!o.contains(conjugate(s, ai)))
            report.violations.push_back(
                {"conjugate of basis element " + std::to_string(i) + " not in span"});
        for (std::size_t j = 0; j < r; ++j) {
            Elem prod = multiply(s, ai, o.basis_element(j));
            if (!o.contains(prod)) {
                std::ostringstream msg;
                msg << "product of basis elements " << i << " and " << j << " = "
                    << to_string(s, prod) << " not in span";
                report.violations.push_back({msg.str()});
            }
        }
    }
    return report;
}

namespace {

QMatrix rows(std::vector<QRow> r) { return QMatrix(std::move(r)); }

Rat h(long num, long den) { return make_rat(num, den); }

}  // namespace

const Order& eisenstein_order() {
    static const Order o(AlgebraSpec::quadratic(Rat(-3)),
                         rows({{Rat(1), Rat(0)}, {h(1, 2), h(1, 2)}}), "eisenstein");
    return o;
}

const Order& gaussian_order() {
    static const Order o(AlgebraSpec::quadratic(Rat(-1)),
                         rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}), "gaussian");
    return o;
}

const Order& hurwitz_order() {
    static const Order o(AlgebraSpec::quaternion(Rat(-1), Rat(-1)),
                         rows({{Rat(1), Rat(0), Rat(0), Rat(0)},
                               {Rat(0), Rat(1), Rat(0), Rat(0)},
                               {Rat(0), Rat(0), Rat(1), Rat(0)},
                               {h(1, 2), h(1, 2), h(1, 2), h(1, 2)}}),
                         "hurwitz");
    return o;
}

const Order& j_order() {
    static const Order o(AlgebraSpec::quaternion(Rat(-1), Rat(-3)),
                         rows({{Rat(1), Rat(0), Rat(0), Rat(0)},
                               {Rat(0), Rat(1), Rat(0), Rat(0)},
                               {h(1, 2), Rat(0), h(1, 2), Rat(0)},
                               {Rat(0), h(1, 2), Rat(0), h(1, 2)}}),
                         "j");
    return o;
}

const Order& builtin_order(const std::string& name) {
    if (name == "eisenstein") return eisenstein_order();
    if (name == "gaussian") return gaussian_order();
    if (name == "hurwitz") return hurwitz_order();
    if (name == "j") return j_order();
    throw std::invalid_argument("unknown order: " + name);
}

std::vector<std::string> builtin_order_names() {
    return {"eisenstein", "gaussian", "hurwitz", "j"};
}

}  // namespace ordlat
