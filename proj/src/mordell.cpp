#include "ordlat/mordell.hpp"

namespace ordlat {

PowerProduct mordell_step(const Order& o, long m, const PowerProduct& gamma_prev) {
    if (m < 3) throw std::invalid_argument("the step bound requires m >= 3");
    long r = static_cast<long>(o.rank());
    PowerProduct d = PowerProduct::from_rational(o.d_invariant());
    return gamma_prev.pow(make_rat(m - 1, m - 2)) * d.pow(make_rat(1, r * (m - 2)));
}

PowerProduct mordell_iterate(const Order& o, long m, long s, const PowerProduct& gamma_base) {
    if (m < 2) throw std::invalid_argument("the iterated bound requires m >= 2");
    if (s <= m) throw std::invalid_argument("the iterated bound requires s > m");
    long r = static_cast<long>(o.rank());
    PowerProduct d = PowerProduct::from_rational(o.d_invariant());
    return gamma_base.pow(make_rat(s - 1, m - 1)) * d.pow(make_rat(s - m, r * (m - 1)));
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::KnownExact: return "known-exact";
        case Provenance::ExternalLp: return "external-LP";
        case Provenance::DensestKnown: return "densest-known";
    }
    throw std::logic_error("bad provenance");
}

Provenance provenance_from_name(const std::string& s) {
    if (s == "known-exact") return Provenance::KnownExact;
    if (s == "external-LP") return Provenance::ExternalLp;
    if (s == "densest-known") return Provenance::DensestKnown;
    throw std::invalid_argument("unknown provenance: " + s);
}

BoundsConfig BoundsConfig::from_json(const nlohmann::json& j) {
    BoundsConfig c;
    c.order_name = j.at("order").get<std::string>();
    if (j.contains("notes")) c.notes = j.at("notes").get<std::string>();
    for (auto& [key, row] : j.at("rows").items()) {
        BoundsRow br;
        if (row.contains("exact"))
            br.value = PowerProduct::parse(row.at("exact").get<std::string>());
        else if (row.contains("decimal"))
            br.value = PowerProduct::from_literal(row.at("decimal").get<std::string>());
        else
            throw std::invalid_argument("bounds row needs an exact or decimal value");
        br.provenance = provenance_from_name(row.at("prov").get<std::string>());
        if (br.provenance == Provenance::KnownExact && !br.value.exact())
            throw std::invalid_argument("known-exact rows must be exact power products");
        if (row.contains("published"))
            br.published_bound = row.at("published").get<std::string>();
        c.rows[std::stol(key)] = std::move(br);
    }
    return c;
}

nlohmann::json BoundsConfig::to_json() const {
    nlohmann::json jrows = nlohmann::json::object();
    for (auto& [dim, row] : rows) {
        nlohmann::json jr;
        if (row.value.exact())
            jr["exact"] = row.value.to_string();
        else
            jr["decimal"] = row.value.to_string();
        jr["prov"] = provenance_name(row.provenance);
        if (row.published_bound) jr["published"] = *row.published_bound;
        jrows[std::to_string(dim)] = std::move(jr);
    }
    nlohmann::json j{{"order", order_name}, {"rows", jrows}};
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

ObstructionReport structure_obstruction(const Order& o, long m,
                                        const PowerProduct& gamma_known_rm,
                                        const PowerProduct& candidate_gamma) {
    if (m < 3) throw std::invalid_argument("obstruction test requires m >= 3");
    ObstructionReport rep;
    rep.rhs = mordell_step(o, m, candidate_gamma);
    rep.obstructed = gamma_known_rm.compare(rep.rhs) > 0;
    rep.claim =
        "tested whether the known invariant at dimension " +
        std::to_string(static_cast<long>(o.rank()) * m) +
        " stays below the step bound computed from the candidate invariant one "
        "K-dimension lower; a failure suggests no compatible order-module structure exists";
    rep.caveat =
        "the candidate's invariant stands in for the supremum over all structured "
        "lattices in its dimension, and that supremum can only be larger; a failed "
        "inequality therefore rules out the structure only under the extra hypothesis "
        "that the candidate is optimal among structured lattices, and a holding "
        "inequality proves nothing either way";
    return rep;
}

namespace {

// Smaller of two bounds under the guarded decimal policy; exact values win
// ties in favour of determinism (ties do not occur in the shipped data).
const PowerProduct& smaller(const PowerProduct& a, const PowerProduct& b) {
    return a.compare(b) <= 0 ? a : b;
}

}  // namespace

BoundTable build_table(const Order& o, long max_dim, const BoundsConfig& config,
                       const BoundsConfig* conjectured_config) {
    long r = static_cast<long>(o.rank());
    BoundTable table;
    table.order_name = o.name().empty() ? config.order_name : o.name();
    std::map<long, PowerProduct> computed;  // previous recursion outputs

    for (long m = 1; r * m <= max_dim; ++m) {
        long dim = r * m;
        TableRow row;
        row.dim = dim;
        auto it = config.rows.find(dim);
        if (it != config.rows.end()) {
            row.best_known = it->second.value;
            row.best_known_provenance = it->second.provenance;
        }
        if (m >= 3) {
            long prev_dim = dim - r;
            auto prev_cfg = config.rows.find(prev_dim);
            auto prev_out = computed.find(prev_dim);
            std::optional<PowerProduct> input;
            if (prev_cfg != config.rows.end() &&
                prev_cfg->second.provenance == Provenance::KnownExact) {
                input = prev_cfg->second.value;
                row.input_source = "known-exact at " + std::to_string(prev_dim);
            } else {
                if (prev_cfg != config.rows.end()) {
                    input = prev_cfg->second.value;
                    row.input_source = "external bound at " + std::to_string(prev_dim);
                }
                if (prev_out != computed.end() &&
                    (!input || prev_out->second.compare(*input) < 0)) {
                    input = prev_out->second;
                    row.input_source = "iterated bound at " + std::to_string(prev_dim);
                }
            }
            if (!input) throw TableGapError(prev_dim);
            PowerProduct bound = mordell_step(o, m, *input);
            computed[dim] = bound;
            row.bound = bound;

            if (it != config.rows.end() && it->second.published_bound) {
                PowerProduct published =
                    PowerProduct::from_literal(*it->second.published_bound);
                // 1e-5 absolute tolerance on the printed 5-decimal cells.
                double delta = bound.to_double() - published.to_double();
                if (delta > 1e-5 || delta < -1e-5)
                    row.annotation = "computed value " + bound.to_decimal(6) +
                                     " differs from the previously published " +
                                     *it->second.published_bound;
            }

            // Conjectured column: substitute the densest known lattice's
            // invariant at the input dimension.  Shown only where the main
            // column does not already settle the cell: the input dimension is
            // unsolved and the substitution changes the bound.
            if (conjectured_config) {
                auto cj = conjectured_config->rows.find(prev_dim);
                bool input_solved = prev_cfg != config.rows.end() &&
                                    prev_cfg->second.provenance == Provenance::KnownExact;
                if (cj != conjectured_config->rows.end() && !input_solved) {
                    PowerProduct conj = mordell_step(o, m, cj->second.value);
                    if (conj.compare(bound) != 0) row.conjectured = conj;
                }
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace ordlat
