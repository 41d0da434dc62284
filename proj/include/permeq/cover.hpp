#pragma once

#include <vector>

#include "permeq/group_action.hpp"

namespace permeq {

/// Monodromy description of a G-cover of the n-punctured sphere: a tuple
/// (g_1, ..., g_n) with product the identity, plus marked-point shifts
/// (h_1, ..., h_n).  Entries are element indices of a GroupAction.
struct CoverSpec {
    std::vector<size_t> monodromies;
    std::vector<size_t> shifts;

    size_t punctures() const { return monodromies.size(); }
    void validate(const GroupAction& action) const;  // throws InputError
};

/// One connected component of the total space of the associated |X|-fold
/// cover, with its boundary structure and genus.
struct CoverComponent {
    std::vector<int> sheets;                         // subset of X, sorted
    // boundary_blocks[i]: the <g_i>-cycles contained in this component
    std::vector<std::vector<std::vector<int>>> boundary_blocks;
    // marked_blocks[i]: the same circles labelled through the marked point,
    // i.e. the <h_i g_i^{-1} h_i^{-1}>-orbits h_i . c for each cycle c
    std::vector<std::vector<std::vector<int>>> marked_blocks;
    long genus = 0;

    bool same_topology(const CoverComponent& o) const {
        return sheets == o.sheets && boundary_blocks == o.boundary_blocks && genus == o.genus;
    }
};

struct CoverAnalysis {
    OrbitPartition components;
    std::vector<CoverComponent> pieces;  // aligned with components.blocks

    bool same_topology(const CoverAnalysis& o) const;
};

/// Orbit/genus analysis of the cover from the monodromy data alone
/// (components from the generated subgroup, genus from the Euler-characteristic
/// count chi = |o| (2 - n)).
CoverAnalysis analyze_cover(const CoverSpec& spec, const GroupAction& action);

/// Independent oracle: builds the total space as an explicit cell complex
/// (|X| sheets of the cut sphere glued along cuts), finds components by
/// union-find, counts boundary circles by walking the 1-skeleton, and derives
/// the genus from V - E + F.
CoverAnalysis oracle_euler(const CoverSpec& spec, const GroupAction& action);

/// Transport along the cylinder S_2(g, g^{-1}; 1, h): the induced map on
/// boundary orbits, identical to conjugation_orbit_map(action, h, g).
std::vector<size_t> cylinder_transport(const GroupAction& action, size_t g, size_t h);

}  // namespace permeq
