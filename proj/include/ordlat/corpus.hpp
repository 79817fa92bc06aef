#pragma once

#include <random>
#include <utility>

#include "ordlat/lattice.hpp"
#include "ordlat/sections.hpp"

namespace ordlat {

// Seeded random instances for the verification suites: full-rank O-lattices
// built from small random O-combinations of a scaled standard basis, nested
// pairs, and K-subspaces spanned by lattice vectors.

Elem random_order_element(const Order& order, std::mt19937_64& rng, long bound = 2);

OLattice random_olattice(std::shared_ptr<const Order> order, std::size_t m,
                         std::mt19937_64& rng);

// (sub, super) with sub a full-rank O-sublattice of super.
std::pair<OLattice, OLattice> random_nested_pair(std::shared_ptr<const Order> order,
                                                 std::size_t m, std::mt19937_64& rng);

// K-subspace spanned by s lattice vectors (so sections have full rank).
Subspace random_lattice_subspace(const OLattice& lattice, std::size_t s,
                                 std::mt19937_64& rng);

}  // namespace ordlat
