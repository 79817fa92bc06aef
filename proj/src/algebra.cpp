#include "ordlat/algebra.hpp"

#include <sstream>

namespace ordlat {

namespace {

void check_same_rank(const Elem& x, const Elem& y) {
    if (x.size() != y.size()) throw std::invalid_argument("algebra elements of different rank");
}

}  // namespace

Elem elem_zero(const AlgebraSpec& s) { return Elem(s.rank(), Rat(0)); }

Elem elem_one(const AlgebraSpec& s) {
    Elem e = elem_zero(s);
    e[0] = 1;
    return e;
}

Elem elem_from_rat(const AlgebraSpec& s, const Rat& q) {
    Elem e = elem_zero(s);
    e[0] = q;
    return e;
}

Elem add(const Elem& x, const Elem& y) {
    check_same_rank(x, y);
    Elem z(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) z[t] = x[t] + y[t];
    return z;
}

Elem sub(const Elem& x, const Elem& y) {
    check_same_rank(x, y);
    Elem z(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) z[t] = x[t] - y[t];
    return z;
}

Elem neg(const Elem& x) {
    Elem z(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) z[t] = -x[t];
    return z;
}

Elem scale(const Elem& x, const Rat& c) {
    Elem z(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) z[t] = x[t] * c;
    return z;
}

bool is_zero(const Elem& x) {
    for (const auto& c : x)
        if (c != 0) return false;
    return true;
}

Elem multiply(const AlgebraSpec& s, const Elem& x, const Elem& y) {
    check_same_rank(x, y);
    if (x.size() != s.rank()) throw std::invalid_argument("element rank does not match algebra");
    if (s.kind() == AlgebraSpec::Kind::Quadratic) {
        const Rat& d = s.d();
        return {x[0] * y[0] + d * x[1] * y[1], x[0] * y[1] + x[1] * y[0]};
    }
    const Rat& a = s.a();
    const Rat& b = s.b();
    Elem z(4);
    z[0] = x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - a * b * x[3] * y[3];
    z[1] = x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2];
    z[2] = x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1];
    z[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
    return z;
}

Elem conjugate(const AlgebraSpec& s, const Elem& x) {
    Elem z = x;
    for (std::size_t t = 1; t < s.rank(); ++t) z[t] = -z[t];
    return z;
}

Rat real_inner(const AlgebraSpec& s, const Elem& x, const Elem& y) {
    check_same_rank(x, y);
    if (s.kind() == AlgebraSpec::Kind::Quadratic)
        return x[0] * y[0] - s.d() * x[1] * y[1];
    const Rat& a = s.a();
    const Rat& b = s.b();
    return x[0] * y[0] - a * x[1] * y[1] - b * x[2] * y[2] + a * b * x[3] * y[3];
}

Rat real_norm(const AlgebraSpec& s, const Elem& x) { return real_inner(s, x, x); }

QMatrix basis_gram(const AlgebraSpec& s) {
    std::size_t r = s.rank();
    QMatrix g(r, r);
    g(0, 0) = 1;
    if (s.kind() == AlgebraSpec::Kind::Quadratic) {
        g(1, 1) = -s.d();
    } else {
        g(1, 1) = -s.a();
        g(2, 2) = -s.b();
        g(3, 3) = s.a() * s.b();
    }
    return g;
}

QMatrix left_mul_matrix(const AlgebraSpec& s, const Elem& x) {
    std::size_t r = s.rank();
    QMatrix m(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        Elem basis = elem_zero(s);
        basis[j] = 1;
        Elem col = multiply(s, x, basis);
        for (std::size_t i = 0; i < r; ++i) m(i, j) = col[i];
    }
    return m;
}

std::string to_string(const AlgebraSpec& s, const Elem& x) {
    static const char* quad_names[] = {"", "s"};
    static const char* quat_names[] = {"", "i", "j", "k"};
    std::ostringstream out;
    bool first = true;
    for (std::size_t t = 0; t < x.size(); ++t) {
        if (x[t] == 0) continue;
        const char* name =
            s.kind() == AlgebraSpec::Kind::Quadratic ? quad_names[t] : quat_names[t];
        if (!first && x[t] > 0) out << "+";
        if (t == 0)
            out << x[t].get_str();
        else if (x[t] == 1)
            out << name;
        else if (x[t] == -1)
            out << "-" << name;
        else
            out << x[t].get_str() << name;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace ordlat
