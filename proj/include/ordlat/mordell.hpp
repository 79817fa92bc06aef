#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordlat/order.hpp"
#include "ordlat/powerproduct.hpp"

namespace ordlat {

// One step of the dimension recursion: an upper bound at K-dimension m from
// the bound at m-1,
//   gamma(O, rm) <= gamma(O, r(m-1))^((m-1)/(m-2)) * D^(1/(r(m-2))).
PowerProduct mordell_step(const Order& o, long m, const PowerProduct& gamma_prev);

// Iterated form, s > m >= 2:
//   gamma(O, rs) <= gamma(O, rm)^((s-1)/(m-1)) * D^((s-m)/(r(m-1))).
PowerProduct mordell_iterate(const Order& o, long m, long s, const PowerProduct& gamma_base);

enum class Provenance { KnownExact, ExternalLp, DensestKnown };

std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& s);

struct BoundsRow {
    PowerProduct value;
    Provenance provenance = Provenance::KnownExact;
    // Previously published value of the *output* bound cell at this
    // dimension, used only to annotate discrepancies.
    std::optional<std::string> published_bound;
};

struct BoundsConfig {
    std::string order_name;
    std::map<long, BoundsRow> rows;  // keyed by Z-dimension (multiples of r)
    std::string notes;

    static BoundsConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct TableGapError : std::runtime_error {
    explicit TableGapError(long dim)
        : std::runtime_error("bounds config has no usable row at dimension " +
                             std::to_string(dim)),
          dimension(dim) {}
    long dimension;
};

struct TableRow {
    long dim = 0;
    std::optional<PowerProduct> best_known;
    std::optional<Provenance> best_known_provenance;
    std::optional<PowerProduct> bound;       // produced for m >= 3 only
    std::string input_source;                // how the recursion input was chosen
    std::optional<PowerProduct> conjectured; // densest-known substitution, when it differs
    std::string annotation;                  // e.g. published-value discrepancy
};

struct BoundTable {
    std::string order_name;
    std::vector<TableRow> rows;
};

// Reproduces the published tables: for each dimension rm (m >= 3) the
// recursion input at r(m-1) is the known-exact config value when the smaller
// dimension is solved, otherwise the smaller of the external bound and the
// previously computed cell (guarded decimal comparison).  The conjectured
// column substitutes the densest known lattice's invariant for the unknown
// constant and is shown only when that changes the outcome.
BoundTable build_table(const Order& o, long max_dim, const BoundsConfig& config,
                       const BoundsConfig* conjectured_config = nullptr);

struct ObstructionReport {
    bool obstructed = false;
    PowerProduct rhs;  // candidate^((m-1)/(m-2)) * D^(1/(r(m-2)))
    std::string claim;
    std::string caveat;
};

// Tests whether a known invariant at dimension rm is consistent with the step
// bound when a candidate lattice's invariant stands in for the (unknown)
// constant at r(m-1).  "Obstructed" = the inequality fails.
ObstructionReport structure_obstruction(const Order& o, long m,
                                        const PowerProduct& gamma_known_rm,
                                        const PowerProduct& candidate_gamma);

}  // namespace ordlat
