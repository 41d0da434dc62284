#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permeq/error.hpp"

namespace permeq {

/// Permutation of {0, ..., degree-1} stored as an image tuple.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& f, const Perm& g);  // (f*g)(x) = f(g(x))
Perm perm_inverse(const Perm& f);
bool perm_is_valid(const Perm& f);

/// A finite group presented by permutation generators acting on the ordered
/// set X = {0, ..., degree-1}, closed under composition.
class GroupAction {
  public:
    static constexpr size_t kOrderCap = 10000;

    static GroupAction close_group(int degree, const std::vector<Perm>& generators);

    int degree() const { return degree_; }
    const std::vector<Perm>& elements() const { return elements_; }
    size_t order() const { return elements_.size(); }
    size_t identity_index() const { return identity_; }

    size_t index_of(const Perm& p) const;          // throws if not a member
    bool contains(const Perm& p) const;
    size_t compose(size_t a, size_t b) const;      // index arithmetic
    size_t inverse(size_t a) const;
    size_t conjugate(size_t h, size_t g) const;    // h g h^{-1}

  private:
    int degree_ = 0;
    std::vector<Perm> elements_;   // sorted lexicographically by image tuple
    size_t identity_ = 0;
    std::vector<std::vector<size_t>> mult_;  // composition table
    std::vector<size_t> inv_;
};

/// Disjoint sorted blocks covering X, ordered by minimum element.
struct OrbitPartition {
    std::vector<std::vector<int>> blocks;

    size_t block_of(int x) const;
    bool operator==(const OrbitPartition& o) const { return blocks == o.blocks; }
};

/// Orbits of the subgroup generated by `gens` (indices into action.elements()).
OrbitPartition orbits(const GroupAction& action, const std::vector<size_t>& gens);

/// Orbit partition generated by explicit permutations (no group needed).
OrbitPartition orbits_of_perms(int degree, const std::vector<Perm>& gens);

/// The bijection o -> h.o from <g>-orbits to <h g h^{-1}>-orbits; returns for
/// each block index of orbits(<g>) the block index in orbits(<h g h^{-1}>).
std::vector<size_t> conjugation_orbit_map(const GroupAction& action, size_t h, size_t g);

}  // namespace permeq
