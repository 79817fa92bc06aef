#include "ordlat/powerproduct.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ordlat {

namespace {

constexpr mpfr_prec_t kEvalBits = 512;  // ~154 decimal digits, ample for 20 guard digits

// Trial-division factorization; a composite leftover above the bound is kept
// as a single pseudo-prime factor (never hit by the shipped data).
std::map<Int, long> factorize(Int n) {
    std::map<Int, long> out;
    if (n <= 0) throw std::invalid_argument("power products are positive");
    for (Int p = 2; p * p <= n && p < 1000000; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

void check_literal(const std::string& s) {
    if (s.empty() || s.find('.') == std::string::npos)
        throw std::invalid_argument("literal must be a decimal string: " + s);
    Rat q = parse_rat(s);
    if (q <= 0) throw std::invalid_argument("literal must be positive: " + s);
}

// Wrapper holding an mpfr value for scope-safe evaluation.
struct MpfrVal {
    mpfr_t v;
    MpfrVal() { mpfr_init2(v, kEvalBits); }
    ~MpfrVal() { mpfr_clear(v); }
    MpfrVal(const MpfrVal&) = delete;
};

}  // namespace

void PowerProduct::normalize() {
    for (auto it = factors_.begin(); it != factors_.end();)
        it = (it->second == 0) ? factors_.erase(it) : std::next(it);
    std::map<std::string, Rat> merged;
    for (auto& [lit, e] : literals_) merged[lit] += e;
    literals_.clear();
    for (auto& [lit, e] : merged)
        if (e != 0) literals_.emplace_back(lit, e);
}

PowerProduct PowerProduct::from_rational(const Rat& q) {
    if (q <= 0) throw std::invalid_argument("power products are positive");
    PowerProduct out;
    for (auto& [p, e] : factorize(Int(q.get_num()))) out.factors_[p] += e;
    for (auto& [p, e] : factorize(Int(q.get_den()))) out.factors_[p] -= e;
    out.normalize();
    return out;
}

PowerProduct PowerProduct::from_literal(const std::string& decimal) {
    check_literal(decimal);
    PowerProduct out;
    out.literals_.emplace_back(decimal, Rat(1));
    return out;
}

PowerProduct PowerProduct::parse(const std::string& text) {
    PowerProduct out;
    std::size_t pos = 0;
    auto strip = [](std::string s) {
        std::string t;
        for (char c : s)
            if (!isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') t += c;
        return t;
    };
    std::string clean = strip(text);
    if (clean.empty()) throw std::invalid_argument("empty power product");
    while (pos <= clean.size()) {
        std::size_t star = clean.find('*', pos);
        std::string term = clean.substr(pos, star == std::string::npos ? star : star - pos);
        if (term.empty()) throw std::invalid_argument("empty term in power product: " + text);
        std::size_t caret = term.find('^');
        std::string base = term.substr(0, caret);
        Rat expo(1);
        if (caret != std::string::npos) expo = parse_rat(term.substr(caret + 1));
        PowerProduct piece = base.find('.') != std::string::npos
                                 ? from_literal(base)
                                 : from_rational(parse_rat(base));
        out = out * piece.pow(expo);
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return out;
}

PowerProduct PowerProduct::operator*(const PowerProduct& o) const {
    PowerProduct out = *this;
    for (auto& [p, e] : o.factors_) out.factors_[p] += e;
    for (auto& [lit, e] : o.literals_) out.literals_.emplace_back(lit, e);
    out.normalize();
    return out;
}

PowerProduct PowerProduct::pow(const Rat& e) const {
    PowerProduct out = *this;
    for (auto& [p, ex] : out.factors_) ex *= e;
    for (auto& [lit, ex] : out.literals_) ex *= e;
    out.normalize();
    return out;
}

std::optional<Rat> PowerProduct::as_rational() const {
    if (!exact()) return std::nullopt;
    Rat value(1);
    for (auto& [p, e] : factors_) {
        if (e.get_den() != 1) return std::nullopt;
        Int num = e.get_num();
        bool inv = num < 0;
        unsigned long a = static_cast<unsigned long>(mpz_get_ui(Int(abs(num)).get_mpz_t()));
        Rat piece = pow_rat(Rat(p), a);
        value *= inv ? Rat(1) / piece : piece;
    }
    return value;
}

namespace {

void eval_log(mpfr_t acc, const std::map<Int, Rat>& factors,
              const std::vector<std::pair<std::string, Rat>>& literals) {
    mpfr_set_zero(acc, 1);
    MpfrVal t, lg;
    for (auto& [p, e] : factors) {
        mpfr_set_z(t.v, p.get_mpz_t(), MPFR_RNDN);
        mpfr_log(lg.v, t.v, MPFR_RNDN);
        mpfr_mul_q(lg.v, lg.v, e.get_mpq_t(), MPFR_RNDN);
        mpfr_add(acc, acc, lg.v, MPFR_RNDN);
    }
    for (auto& [lit, e] : literals) {
        mpfr_set_str(t.v, lit.c_str(), 10, MPFR_RNDN);
        mpfr_log(lg.v, t.v, MPFR_RNDN);
        mpfr_mul_q(lg.v, lg.v, e.get_mpq_t(), MPFR_RNDN);
        mpfr_add(acc, acc, lg.v, MPFR_RNDN);
    }
}

}  // namespace

int PowerProduct::compare(const PowerProduct& o, unsigned guard_digits) const {
    if (exact() && o.exact()) {
        // Cross-power both sides to integer exponents, then compare rationals.
        Int l(1);
        for (auto& [p, e] : factors_) l = lcm(l, e.get_den());
        for (auto& [p, e] : o.factors_) l = lcm(l, e.get_den());
        Rat le(l);
        auto a = pow(le).as_rational();
        auto b = o.pow(le).as_rational();
        if (a && b) return *a < *b ? -1 : (*a > *b ? 1 : 0);
    }
    // Guarded decimal comparison on logarithms: the values are O(1)-scale
    // table entries, so log agreement within 10^-(guard+5) decides a tie.
    MpfrVal la, lb, diff, tol;
    eval_log(la.v, factors_, literals_);
    eval_log(lb.v, o.factors_, o.literals_);
    mpfr_sub(diff.v, la.v, lb.v, MPFR_RNDN);
    mpfr_set_ui(tol.v, 10, MPFR_RNDN);
    mpfr_pow_si(tol.v, tol.v, -static_cast<long>(guard_digits + 5), MPFR_RNDN);
    MpfrVal ad;
    mpfr_abs(ad.v, diff.v, MPFR_RNDN);
    if (mpfr_cmp(ad.v, tol.v) <= 0) return 0;
    return mpfr_sgn(diff.v) < 0 ? -1 : 1;
}

std::string PowerProduct::to_decimal(std::size_t significant_digits) const {
    MpfrVal lg, val;
    eval_log(lg.v, factors_, literals_);
    mpfr_exp(val.v, lg.v, MPFR_RNDN);
    char buf[256];
    mpfr_snprintf(buf, sizeof(buf), "%.*Rg", static_cast<int>(significant_digits), val.v);
    return buf;
}

double PowerProduct::to_double() const {
    MpfrVal lg, val;
    eval_log(lg.v, factors_, literals_);
    mpfr_exp(val.v, lg.v, MPFR_RNDN);
    return mpfr_get_d(val.v, MPFR_RNDN);
}

std::string PowerProduct::to_string() const {
    if (is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (auto& [p, e] : factors_) {
        if (!first) out << "*";
        first = false;
        out << p.get_str();
        if (e != 1) out << "^" << ordlat::to_string(e);
    }
    for (auto& [lit, e] : literals_) {
        if (!first) out << "*";
        first = false;
        out << lit;
        if (e != 1) out << "^" << ordlat::to_string(e);
    }
    return out.str();
}

nlohmann::json PowerProduct::to_json() const {
    nlohmann::json factors = nlohmann::json::object();
    for (auto& [p, e] : factors_) factors[p.get_str()] = ordlat::to_string(e);
    nlohmann::json j{{"factors", factors}};
    if (literals_.empty()) {
        j["literal"] = nullptr;
    } else if (literals_.size() == 1 && literals_[0].second == 1) {
        j["literal"] = literals_[0].first;
    } else {
        // Collapse several literal powers into one evaluated decimal; marked
        // by the key so round-trips stay flagged as inexact.
        PowerProduct lits;
        lits.literals_ = literals_;
        j["literal"] = lits.to_decimal(30);
    }
    return j;
}

PowerProduct PowerProduct::from_json(const nlohmann::json& j) {
    PowerProduct out;
    for (auto& [key, val] : j.at("factors").items())
        out.factors_[Int(key, 10)] = parse_rat(val.get<std::string>());
    if (j.contains("literal") && !j.at("literal").is_null())
        out.literals_.emplace_back(j.at("literal").get<std::string>(), Rat(1));
    out.normalize();
    return out;
}

}  // namespace ordlat
