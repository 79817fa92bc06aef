#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordlat/matrix.hpp"
#include "ordlat/rational.hpp"

namespace ordlat {

// Ambient Q-algebra: an imaginary quadratic field Q(sqrt(d)) with basis {1, s},
// s^2 = d < 0, or a definite quaternion algebra (a,b/Q) with basis {1, i, j, k},
// i^2 = a, j^2 = b, ij = -ji = k, a < 0, b < 0.  Elements are coordinate vectors
// over the fixed basis; no real embedding is ever materialized.
class AlgebraSpec {
public:
    enum class Kind { Quadratic, Quaternion };

    static AlgebraSpec quadratic(Rat d) {
        if (d >= 0) throw std::invalid_argument("quadratic algebra requires d < 0");
        AlgebraSpec s;
        s.kind_ = Kind::Quadratic;
        s.a_ = std::move(d);
        return s;
    }

    static AlgebraSpec quaternion(Rat a, Rat b) {
        if (a >= 0 || b >= 0) throw std::invalid_argument("quaternion algebra requires a < 0, b < 0");
        AlgebraSpec s;
        s.kind_ = Kind::Quaternion;
        s.a_ = std::move(a);
        s.b_ = std::move(b);
        return s;
    }

    Kind kind() const { return kind_; }
    std::size_t rank() const { return kind_ == Kind::Quadratic ? 2 : 4; }
    const Rat& d() const { return a_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool operator==(const AlgebraSpec& o) const {
        return kind_ == o.kind_ && a_ == o.a_ && b_ == o.b_;
    }

private:
    AlgebraSpec() = default;
    Kind kind_ = Kind::Quadratic;
    Rat a_, b_;
};

// Element of the algebra: rank() rational coordinates over {1,s} or {1,i,j,k}.
using Elem = std::vector<Rat>;

Elem elem_zero(const AlgebraSpec& s);
Elem elem_one(const AlgebraSpec& s);
Elem elem_from_rat(const AlgebraSpec& s, const Rat& q);

Elem add(const Elem& x, const Elem& y);
Elem sub(const Elem& x, const Elem& y);
Elem neg(const Elem& x);
Elem scale(const Elem& x, const Rat& c);
bool is_zero(const Elem& x);

Elem multiply(const AlgebraSpec& s, const Elem& x, const Elem& y);
Elem conjugate(const AlgebraSpec& s, const Elem& x);

// (1/2)(x * conj(y) + y * conj(x)); symmetric, bilinear, positive definite.
Rat real_inner(const AlgebraSpec& s, const Elem& x, const Elem& y);

// real_inner(x, x), the reduced norm.
Rat real_norm(const AlgebraSpec& s, const Elem& x);

// Gram matrix of the coordinate basis under real_inner (diagonal for both kinds).
QMatrix basis_gram(const AlgebraSpec& s);

// Matrix of left multiplication by x on coordinates: coords(x*y) = coords(y) * M^T,
// returned so that row-vector y maps as y_coords -> y_coords * left_mul_matrix(x)^T.
// Columns are the coordinates of x * basis_j.
QMatrix left_mul_matrix(const AlgebraSpec& s, const Elem& x);

std::string to_string(const AlgebraSpec& s, const Elem& x);

}  // namespace ordlat
