#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ordlat/rational.hpp"

namespace ordlat {

// Positive real number represented symbolically as a product of primes raised
// to rational exponents, optionally times powers of opaque decimal literals
// (externally sourced bounds with no closed form).  The value is exact iff no
// literal is present; multiplication and powering stay in the representation.
class PowerProduct {
public:
    PowerProduct() = default;  // the number 1

    static PowerProduct from_rational(const Rat& q);
    static PowerProduct from_literal(const std::string& decimal);

    // Grammar: term ('*' term)*, term = base ['^' exponent], base = positive
    // integer, rational p/q, or decimal literal (contains '.'), exponent =
    // rational with optional sign, parentheses allowed.
    static PowerProduct parse(const std::string& text);

    bool exact() const { return literals_.empty(); }
    bool is_one() const { return factors_.empty() && literals_.empty(); }

    PowerProduct operator*(const PowerProduct& o) const;
    PowerProduct pow(const Rat& e) const;

    // The exact rational value when every exponent is a literal-free integer.
    std::optional<Rat> as_rational() const;

    // Structural equality of the normalized representation.  For exact values
    // this is true value equality.
    bool equals(const PowerProduct& o) const {
        return factors_ == o.factors_ && literals_ == o.literals_;
    }

    // Three-way comparison. Exact vs exact is decided by cross-powering to
    // integer exponents; any literal operand falls back to high-precision
    // decimals, returning 0 when the two agree within guard_digits digits
    // (an ambiguous comparison, impossible among the shipped data).
    int compare(const PowerProduct& o, unsigned guard_digits = 20) const;

    std::string to_decimal(std::size_t significant_digits) const;
    double to_double() const;
    std::string to_string() const;

    nlohmann::json to_json() const;
    static PowerProduct from_json(const nlohmann::json& j);

    const std::map<Int, Rat>& factors() const { return factors_; }

private:
    void normalize();

    std::map<Int, Rat> factors_;                            // prime -> exponent
    std::vector<std::pair<std::string, Rat>> literals_;     // decimal -> exponent
};

}  // namespace ordlat
