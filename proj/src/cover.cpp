#include "permeq/cover.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace permeq {

void CoverSpec::validate(const GroupAction& action) const {
    if (monodromies.empty()) throw InputError("cover needs at least one puncture");
    if (shifts.size() != monodromies.size())
        throw InputError("shift tuple length differs from monodromy tuple length");
    size_t prod = action.identity_index();
    for (size_t g : monodromies) {
        if (g >= action.order()) throw InputError("monodromy index out of range");
        prod = action.compose(prod, g);
    }
    for (size_t h : shifts)
        if (h >= action.order()) throw InputError("shift index out of range");
    if (prod != action.identity_index())
        throw InputError("monodromy product is not the identity");
}

bool CoverAnalysis::same_topology(const CoverAnalysis& o) const {
    if (!(components == o.components) || pieces.size() != o.pieces.size()) return false;
    for (size_t i = 0; i < pieces.size(); ++i)
        if (!pieces[i].same_topology(o.pieces[i])) return false;
    return true;
}

namespace {

std::vector<std::vector<int>> cycles_in(const Perm& g, const std::vector<int>& subset) {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> done(g.size(), false);
    for (int x : subset) {
        if (done[x]) continue;
        std::vector<int> cyc;
        int y = x;
        do {
            cyc.push_back(y);
            done[y] = true;
            y = g[y];
        } while (y != x);
        std::sort(cyc.begin(), cyc.end());
        cycles.push_back(cyc);
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return cycles;
}

}  // namespace

CoverAnalysis analyze_cover(const CoverSpec& spec, const GroupAction& action) {
    spec.validate(action);
    size_t n = spec.punctures();
    std::vector<Perm> gens;
    for (size_t g : spec.monodromies) gens.push_back(action.elements()[g]);

    CoverAnalysis out;
    out.components = orbits_of_perms(action.degree(), gens);
    for (const std::vector<int>& comp : out.components.blocks) {
        CoverComponent piece;
        piece.sheets = comp;
        long total_blocks = 0;
        for (size_t i = 0; i < n; ++i) {
            const Perm& gi = action.elements()[spec.monodromies[i]];
            auto blocks = cycles_in(gi, comp);
            total_blocks += static_cast<long>(blocks.size());
            // labels through the marked point: translate by h_i
            const Perm& hi = action.elements()[spec.shifts[i]];
            std::vector<std::vector<int>> marked;
            for (const auto& c : blocks) {
                std::vector<int> m;
                for (int x : c) m.push_back(hi[x]);
                std::sort(m.begin(), m.end());
                marked.push_back(m);
            }
            piece.boundary_blocks.push_back(std::move(blocks));
            piece.marked_blocks.push_back(std::move(marked));
        }
        long chi = static_cast<long>(comp.size()) * (2 - static_cast<long>(n));
        long twice_genus = 2 - total_blocks - chi;
        if (twice_genus < 0 || twice_genus % 2 != 0)
            throw ValidationError("genus formula produced a non-integer or negative value");
        piece.genus = twice_genus / 2;
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

CoverAnalysis oracle_euler(const CoverSpec& spec, const GroupAction& action) {
    spec.validate(action);
    size_t n = spec.punctures();
    int deg = action.degree();

    // Cell complex of the total space.  Per sheet x: one face (the cut-open
    // sphere), n cut edges, n boundary arcs, n boundary vertices, one
    // vertex over the common cut endpoint at infinity.  Crossing cut i away
    // from puncture i moves from sheet x to sheet g_i[x] (the global sign
    // convention cancels in every count below).
    //
    // Cell ids:
    //   face[x]                      -> 0 .. deg-1
    //   cut edge (i, x)              -> edge shared by face x and face g_i[x]
    //   arc edge (i, x)              -> boundary arc on circle i starting at
    //                                   the lift x of the cut endpoint
    //   boundary vertex (i, x)
    //   infinity vertex (x)
    std::vector<Perm> g(n);
    for (size_t i = 0; i < n; ++i) g[i] = action.elements()[spec.monodromies[i]];

    size_t faces = static_cast<size_t>(deg);
    size_t cut_edges = n * deg;
    size_t arc_edges = n * deg;
    size_t b_vertices = n * deg;
    size_t inf_vertices = static_cast<size_t>(deg);
    size_t total = faces + cut_edges + arc_edges + b_vertices + inf_vertices;

    auto face_id = [&](int x) { return static_cast<size_t>(x); };
    auto cut_id = [&](size_t i, int x) { return faces + i * deg + x; };
    auto arc_id = [&](size_t i, int x) { return faces + cut_edges + i * deg + x; };
    auto bvert_id = [&](size_t i, int x) { return faces + cut_edges + arc_edges + i * deg + x; };
    auto ivert_id = [&](int x) { return faces + cut_edges + arc_edges + b_vertices + x; };

    std::vector<size_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    // Incidences.
    for (int x = 0; x < deg; ++x) {
        for (size_t i = 0; i < n; ++i) {
            // cut edge (i, x) borders face x and face g_i[x]
            unite(cut_id(i, x), face_id(x));
            unite(cut_id(i, x), face_id(g[i][x]));
            // cut edge ends: boundary vertex on circle i (sheet x) and the
            // vertex over infinity (sheet x); the identification of the far
            // end with a particular sheet is a labelling choice that does not
            // change any count.
            unite(cut_id(i, x), bvert_id(i, x));
            unite(cut_id(i, x), ivert_id(x));
            // arc edge (i, x) runs along circle i from vertex (i, x) to
            // vertex (i, g_i[x]); it borders face x.
            unite(arc_id(i, x), face_id(x));
            unite(arc_id(i, x), bvert_id(i, x));
            unite(arc_id(i, x), bvert_id(i, g[i][x]));
        }
    }

    // Components of the sheet set.
    std::map<size_t, std::vector<int>> comp_sheets;
    for (int x = 0; x < deg; ++x) comp_sheets[find(face_id(x))].push_back(x);

    // chi per component root.
    std::map<size_t, long> chi;
    for (int x = 0; x < deg; ++x) {
        chi[find(face_id(x))] += 1;       // face
        chi[find(ivert_id(x))] += 1;      // vertex at infinity
        for (size_t i = 0; i < n; ++i) {
            chi[find(cut_id(i, x))] -= 1;   // edge
            chi[find(arc_id(i, x))] -= 1;   // edge
            chi[find(bvert_id(i, x))] += 1; // vertex
        }
    }

    // Boundary circles per component: walk arc cycles on each circle i.
    // The arcs over circle i decompose into cycles of g_i.
    std::map<size_t, long> boundary_count;
    std::map<size_t, std::vector<std::vector<std::vector<int>>>> boundary_sets;
    for (auto& [root, sheets] : comp_sheets) {
        boundary_sets[root].assign(n, {});
    }
    for (size_t i = 0; i < n; ++i) {
        std::vector<bool> seen(deg, false);
        for (int x = 0; x < deg; ++x) {
            if (seen[x]) continue;
            std::vector<int> cyc;
            int y = x;
            do {
                cyc.push_back(y);
                seen[y] = true;
                y = g[i][y];
            } while (y != x);
            size_t root = find(face_id(x));
            boundary_count[root] += 1;
            std::sort(cyc.begin(), cyc.end());
            boundary_sets[root][i].push_back(cyc);
        }
    }

    CoverAnalysis out;
    for (auto& [root, sheets] : comp_sheets) {
        std::sort(sheets.begin(), sheets.end());
        out.components.blocks.push_back(sheets);
    }
    std::sort(out.components.blocks.begin(), out.components.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& sheets : out.components.blocks) {
        size_t root = find(face_id(sheets.front()));
        CoverComponent piece;
        piece.sheets = sheets;
        piece.boundary_blocks = boundary_sets[root];
        for (auto& per_puncture : piece.boundary_blocks)
            std::sort(per_puncture.begin(), per_puncture.end(),
                      [](const auto& a, const auto& b) { return a.front() < b.front(); });
        // marked labels, as in analyze_cover
        for (size_t i = 0; i < n; ++i) {
            const Perm& hi = action.elements()[spec.shifts[i]];
            std::vector<std::vector<int>> marked;
            for (const auto& c : piece.boundary_blocks[i]) {
                std::vector<int> m;
                for (int x : c) m.push_back(hi[x]);
                std::sort(m.begin(), m.end());
                marked.push_back(m);
            }
            piece.marked_blocks.push_back(std::move(marked));
        }
        long c = chi[root];
        long b = boundary_count[root];
        long twice_genus = 2 - b - c;
        if (twice_genus < 0 || twice_genus % 2 != 0)
            throw ValidationError("oracle Euler characteristic is inconsistent");
        piece.genus = twice_genus / 2;
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

std::vector<size_t> cylinder_transport(const GroupAction& action, size_t g, size_t h) {
    return conjugation_orbit_map(action, h, g);
}

}  // namespace permeq
