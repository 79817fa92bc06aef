#pragma once

#include <cstdint>
#include <vector>

#include "ordlat/lattice.hpp"
#include "ordlat/matrix.hpp"

namespace ordlat {

inline constexpr std::uint64_t kDefaultNodeBudget = 1000000000ULL;

struct EnumerationBudgetError : std::runtime_error {
    explicit EnumerationBudgetError(std::uint64_t budget)
        : std::runtime_error("enumeration node budget of " + std::to_string(budget) +
                             " exceeded; raise --node-budget for this instance"),
          budget(budget) {}
    std::uint64_t budget;
};

struct NotPositiveDefiniteError : std::runtime_error {
    explicit NotPositiveDefiniteError(std::size_t minor_index)
        : std::runtime_error("Gram matrix is not positive definite (failing leading minor " +
                             std::to_string(minor_index + 1) + ")"),
          minor_index(minor_index) {}
    std::size_t minor_index;
};

struct LllResult {
    std::vector<ZRow> transform;  // unimodular, transform * gram * transform^T = reduced
    QMatrix reduced_gram;
};

// Exact rational LLL on a Gram matrix, 1/4 < delta < 1.
LllResult lll_reduce(const QMatrix& gram, const Rat& delta = make_rat(3, 4));

// Exact minimum of the positive definite form over nonzero integer vectors.
Rat shortest_norm_of_gram(const QMatrix& gram, std::uint64_t node_budget);

// All nonzero integer vectors attaining the minimum (both signs included).
std::vector<ZRow> minimal_coords_of_gram(const QMatrix& gram, std::uint64_t node_budget);

Rat shortest_norm(const OLattice& lattice, std::uint64_t node_budget = kDefaultNodeBudget);

// Realizations of all minimal vectors, sorted, both signs included.
std::vector<QRow> minimal_vectors(const OLattice& lattice,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

struct HermiteData {
    Rat min_norm;
    Rat det;
    std::size_t n;      // Z-rank
    Rat gamma_nth;      // min_norm^n / det, the exact n-th power of gamma
    double gamma_float;
};

HermiteData hermite(const OLattice& lattice, std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace ordlat
