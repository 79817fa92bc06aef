#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordlat/lattice.hpp"
#include "ordlat/reduction.hpp"

namespace ordlat {

struct UnknownEntryError : std::runtime_error {
    explicit UnknownEntryError(const std::string& name)
        : std::runtime_error("unknown catalog entry: " + name) {}
};

// Expected invariants shipped next to each lattice file.  A verification run
// recomputes every present field exactly; kissing is optional (dropped where
// full minimal-vector enumeration is deliberately out of budget).
struct CatalogExpected {
    Rat det;
    Rat min_norm;
    Rat gamma_nth;
    std::optional<long> kissing;
};

struct CatalogEntry {
    std::string name;        // e.g. "L16/hurwitz" ("Λ16/hurwitz" is an alias)
    std::string order_name;
    std::string lattice_file;
    std::string expected_file;
    CatalogExpected expected;
    std::vector<std::string> citations;
};

struct FieldCheck {
    std::string field;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct CatalogVerification {
    std::string name;
    bool o_invariant = false;
    std::vector<FieldCheck> checks;
    bool pass = false;
};

// Data directory: ORDLAT_DATA_DIR environment variable when set, otherwise the
// compiled-in default pointing at the source tree.
std::string catalog_data_dir();

// Sorted entry names discovered in the data directory.
std::vector<std::string> list_entries();

CatalogEntry catalog_entry(const std::string& name);
OLattice load_catalog(const std::string& name);

CatalogVerification verify_entry(const std::string& name,
                                 std::size_t node_budget = kDefaultNodeBudget);

// Copies the entry's lattice file content (round-trips through the loader).
void export_entry(const std::string& name, const std::string& path);

}  // namespace ordlat
