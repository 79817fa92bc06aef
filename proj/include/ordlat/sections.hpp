#pragma once

#include <cstdint>
#include <vector>

#include "ordlat/lattice.hpp"
#include "ordlat/powerproduct.hpp"
#include "ordlat/reduction.hpp"

namespace ordlat {

// A K-subspace of K^m presented by K-linearly independent generators.  The
// rational realization (canonical reduced-echelon rows of dimension s*r) is
// cached for span comparisons and membership constraints.
struct Subspace {
    std::shared_ptr<const Order> order;
    std::size_t m = 0;
    std::vector<KVector> k_generators;
    std::size_t k_dim = 0;   // s
    QMatrix realization;     // s*r canonical rows spanning the Q-realization

    bool same_span(const Subspace& o) const { return realization == o.realization; }
};

// Throws if the generators are K-linearly dependent or zero.
Subspace make_subspace(std::shared_ptr<const Order> order, std::size_t m,
                       const std::vector<KVector>& k_generators);

// The h-orthogonal complement; k_dim = m - s; involution on spans.
Subspace perp(const Subspace& f);

// Saturated section Lambda cap F, a relative lattice (rank r*s when the
// section is an O-lattice in F; lower rank is a legal outcome).
OLattice intersect(const OLattice& lattice, const Subspace& f);

// Image of Lambda under the exact orthogonal projection onto F-perp.
// Requires the section to have full rank r*s in F; otherwise the projected
// set need not be discrete and the call is rejected.
OLattice project_perp(const OLattice& lattice, const Subspace& f);

struct DualSectionReport {
    std::size_t s = 0;
    std::size_t m = 0;
    Rat det_lattice;
    Rat det_section;
    Rat det_dual_section;
    Rat d_invariant;
    bool section_full_rank = false;
    bool dual_section_full_rank = false;
    bool rank_equivalence = false;  // section is an O-lattice in F iff the dual section is in F-perp
    bool identity_holds = false;    // det = det_section / det_dual_section * D^(2(m-s))
};

DualSectionReport dual_section_identity(const OLattice& lattice, const Subspace& f);

// Audit of the equality conditions for the step bound at dimension rm:
// for each minimal vector x of the O-dual (one representative per unit orbit
// unless all_vectors), the hyperplane section Lambda cap (Kx)-perp must have
// the same norm as Lambda, the dual line must be exactly O*x, and the
// section's Hermite invariant must match the reference value.
struct OrbitAudit {
    QRow representative;          // realization of the dual minimal vector
    std::size_t orbit_size = 0;
    Rat section_norm;
    bool norm_matches = false;        // (1)
    bool dual_line_is_ox = false;     // (2)
    bool gamma_matches_reference = false;  // (3)
    int gamma_vs_reference = 0;       // sign of section gamma - reference
    Rat section_det;
    Rat section_gamma_nth;
    std::size_t section_kissing = 0;
    bool pass = false;
};

struct EqualityAuditReport {
    Rat lattice_norm;
    Rat dual_norm;
    bool dual_gamma_equals_gamma = false;
    std::vector<OrbitAudit> orbits;
    bool all_pass = false;
};

EqualityAuditReport equality_audit(const OLattice& lattice,
                                   const PowerProduct& reference_gamma,
                                   bool all_vectors = false,
                                   std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace ordlat
