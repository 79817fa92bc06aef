#pragma once

#include <json.hpp>

#include "ordlat/lattice.hpp"

namespace ordlat {

struct IoError : std::runtime_error {
    IoError(const std::string& what, const std::string& path)
        : std::runtime_error(what + ": " + path), path(path) {}
    std::string path;
};

nlohmann::json order_to_json(const Order& o);
std::shared_ptr<const Order> order_from_json(const nlohmann::json& j);

// {"order": name-or-inline, "m": int, "generators": [[["p/q", ...], ...], ...],
//  "metadata": {...}}.  Generators are K-vectors of algebra coordinates; the
// loader closes them under the order action, so export/import round-trips to
// the identical canonical basis.
nlohmann::json lattice_to_json(const OLattice& lattice);
OLattice lattice_from_json(const nlohmann::json& j);

void save_lattice(const OLattice& lattice, const std::string& path);
OLattice load_lattice(const std::string& path);

}  // namespace ordlat
