#include "permeq/group_action.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace permeq {

Perm perm_identity(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& f, const Perm& g) {
    Perm out(g.size());
    for (size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
    return out;
}

Perm perm_inverse(const Perm& f) {
    Perm out(f.size());
    for (size_t x = 0; x < f.size(); ++x) out[f[x]] = static_cast<int>(x);
    return out;
}

bool perm_is_valid(const Perm& f) {
    std::vector<bool> seen(f.size(), false);
    for (int v : f) {
        if (v < 0 || v >= static_cast<int>(f.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

GroupAction GroupAction::close_group(int degree, const std::vector<Perm>& generators) {
    for (const Perm& g : generators) {
        if (static_cast<int>(g.size()) != degree || !perm_is_valid(g))
            throw InputError("malformed permutation: not a bijection of degree " +
                             std::to_string(degree));
    }
    std::set<Perm> closure;
    closure.insert(perm_identity(degree));
    std::vector<Perm> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& e : frontier) {
            for (const Perm& g : generators) {
                Perm h = perm_compose(g, e);
                if (closure.insert(h).second) {
                    next.push_back(h);
                    if (closure.size() > kOrderCap)
                        throw InputError("group order exceeds cap of " +
                                         std::to_string(kOrderCap));
                }
            }
        }
        frontier = std::move(next);
    }
    GroupAction a;
    a.degree_ = degree;
    a.elements_.assign(closure.begin(), closure.end());  // set iterates lexicographically
    std::map<Perm, size_t> index;
    for (size_t i = 0; i < a.elements_.size(); ++i) index[a.elements_[i]] = i;
    a.identity_ = index.at(perm_identity(degree));
    size_t n = a.elements_.size();
    a.mult_.assign(n, std::vector<size_t>(n));
    a.inv_.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            a.mult_[i][j] = index.at(perm_compose(a.elements_[i], a.elements_[j]));
        a.inv_[i] = index.at(perm_inverse(a.elements_[i]));
    }
    return a;
}

size_t GroupAction::index_of(const Perm& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) throw InputError("permutation is not a group element");
    return static_cast<size_t>(it - elements_.begin());
}

bool GroupAction::contains(const Perm& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    return it != elements_.end() && *it == p;
}

size_t GroupAction::compose(size_t a, size_t b) const { return mult_[a][b]; }
size_t GroupAction::inverse(size_t a) const { return inv_[a]; }
size_t GroupAction::conjugate(size_t h, size_t g) const {
    return mult_[mult_[h][g]][inv_[h]];
}

size_t OrbitPartition::block_of(int x) const {
    for (size_t b = 0; b < blocks.size(); ++b)
        if (std::binary_search(blocks[b].begin(), blocks[b].end(), x)) return b;
    throw InputError("element outside partition support");
}

OrbitPartition orbits_of_perms(int degree, const std::vector<Perm>& gens) {
    std::vector<int> parent(degree);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Perm& g : gens)
        for (int x = 0; x < degree; ++x) {
            int a = find(x), b = find(g[x]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, std::vector<int>> by_root;
    for (int x = 0; x < degree; ++x) by_root[find(x)].push_back(x);
    OrbitPartition part;
    for (auto& [root, blk] : by_root) {
        std::sort(blk.begin(), blk.end());
        part.blocks.push_back(blk);
    }
    std::sort(part.blocks.begin(), part.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return part;
}

OrbitPartition orbits(const GroupAction& action, const std::vector<size_t>& gens) {
    std::vector<Perm> ps;
    for (size_t i : gens) {
        if (i >= action.order()) throw InputError("generator index out of range");
        ps.push_back(action.elements()[i]);
    }
    return orbits_of_perms(action.degree(), ps);
}

std::vector<size_t> conjugation_orbit_map(const GroupAction& action, size_t h, size_t g) {
    OrbitPartition src = orbits(action, {g});
    OrbitPartition dst = orbits(action, {action.conjugate(h, g)});
    const Perm& hp = action.elements()[h];
    std::vector<size_t> map(src.blocks.size());
    for (size_t b = 0; b < src.blocks.size(); ++b) map[b] = dst.block_of(hp[src.blocks[b][0]]);
    return map;
}

}  // namespace permeq
