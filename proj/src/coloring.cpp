#include "polymoduli/coloring.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "polymoduli/errors.hpp"

namespace polymoduli {

namespace {

int edge_count(const DualGraph& D) { return static_cast<int>(D.edge_cells.size()); }
int cell_count(const DualGraph& D) { return static_cast<int>(D.cells.size()); }

void validate_references(const DualGraph& D, const DualColoring& col) {
    for (const Arrow& a : col.arrows) {
        if (a.edge < 0 || a.edge >= edge_count(D))
            throw ForeignSimplex("arrow on unknown dual edge " + std::to_string(a.edge));
        if (a.out_of != D.edge_cells[a.edge].first &&
            a.out_of != D.edge_cells[a.edge].second)
            throw ForeignSimplex("arrow on dual edge " + std::to_string(a.edge) +
                                 " points out of non-adjacent cell " +
                                 std::to_string(a.out_of));
    }
    for (const DualCorner& c : col.corners) {
        if (c.cell < 0 || c.cell >= cell_count(D))
            throw ForeignSimplex("corner in unknown cell " + std::to_string(c.cell));
        const auto& circuit = D.cells[c.cell];
        if (std::find(circuit.begin(), circuit.end(), c.node) == circuit.end())
            throw ForeignSimplex("cell " + std::to_string(c.cell) +
                                 " has no corner at node " + std::to_string(c.node));
    }
}

struct SearchState {
    const DualGraph& D;
    std::vector<int> order;          // edge ids in assignment order
    std::vector<int> need;           // outward arrows still required per cell
    std::vector<int> open;           // unassigned incident edges per cell
    int bare_budget;                 // how many edges may stay arrow-free
    std::vector<Arrow> arrows;

    bool feasible(int cell) const {
        return need[cell] >= 0 && need[cell] <= open[cell];
    }

    bool assign(size_t depth) {
        if (depth == order.size()) {
            for (int c = 0; c < cell_count(D); ++c)
                if (need[c] != 0) return false;
            return true;
        }
        const int e = order[depth];
        const auto [p, q] = D.edge_cells[e];
        --open[p];
        --open[q];
        for (int out : {std::min(p, q), std::max(p, q)}) {
            --need[out];
            if (feasible(p) && feasible(q)) {
                arrows.push_back({e, out});
                if (assign(depth + 1)) return true;
                arrows.pop_back();
            }
            ++need[out];
        }
        if (bare_budget > 0) {
            --bare_budget;
            if (feasible(p) && feasible(q) && assign(depth + 1)) return true;
            ++bare_budget;
        }
        ++open[p];
        ++open[q];
        return false;
    }
};

// Edges in breadth-first discovery order over the dual nodes, seeded by the
// given nodes; keeps the search's constraint propagation local.
std::vector<int> bfs_edge_order(const DualGraph& D, std::vector<int> seeds) {
    std::vector<std::vector<int>> at_node(D.node_count);
    for (int e = 0; e < edge_count(D); ++e) {
        at_node[D.edge_nodes[e].first].push_back(e);
        at_node[D.edge_nodes[e].second].push_back(e);
    }
    std::vector<int> order;
    std::vector<char> edge_seen(edge_count(D), 0), node_seen(D.node_count, 0);
    std::deque<int> queue;
    for (int s : seeds)
        if (!node_seen[s]) {
            node_seen[s] = 1;
            queue.push_back(s);
        }
    for (int v = 0; v < D.node_count; ++v)
        if (!node_seen[v]) {
            node_seen[v] = 1;  // disconnected duals do not occur, but be total
            queue.push_back(v);
        }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : at_node[v]) {
            if (edge_seen[e]) continue;
            edge_seen[e] = 1;
            order.push_back(e);
            int w = D.edge_nodes[e].first == v ? D.edge_nodes[e].second
                                               : D.edge_nodes[e].first;
            if (!node_seen[w]) {
                node_seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return order;
}

// The three corners of dual node f: one in each cell whose circuit passes
// through f.
std::vector<DualCorner> corners_of_node(const DualGraph& D, int f) {
    std::vector<DualCorner> out;
    for (int c = 0; c < cell_count(D); ++c)
        if (std::find(D.cells[c].begin(), D.cells[c].end(), f) != D.cells[c].end())
            out.push_back({c, f});
    return out;
}

}  // namespace

bool is_admissible(const DualGraph& D, const DualColoring& col) {
    validate_references(D, col);
    std::vector<int> colors(cell_count(D), 0);
    std::set<std::pair<int, int>> seen_arrows;
    for (const Arrow& a : col.arrows)
        if (seen_arrows.insert({a.edge, a.out_of}).second) ++colors[a.out_of];
    std::set<std::pair<int, int>> seen_corners;
    for (const DualCorner& c : col.corners)
        if (seen_corners.insert({c.cell, c.node}).second) ++colors[c.cell];
    for (int c = 0; c < cell_count(D); ++c)
        if (colors[c] != 3) return false;
    return true;
}

ColoringResult find_epc_coloring(const DualGraph& D, int genus,
                                 std::optional<std::pair<int, int>> adjacent_pair) {
    if (genus >= 1 && adjacent_pair)
        throw ArgumentMismatch("a corner pair only applies to genus 0");
    if (edge_count(D) == 0) throw ArgumentMismatch("dual graph has no edges");

    ColoringResult result;
    std::vector<int> need(cell_count(D), 3);
    std::vector<int> seeds;

    if (genus == 0) {
        std::pair<int, int> pair =
            adjacent_pair ? *adjacent_pair : D.edge_nodes[0];
        bool adjacent = false;
        for (int e = 0; e < edge_count(D); ++e) {
            auto [x, y] = D.edge_nodes[e];
            if ((x == pair.first && y == pair.second) ||
                (x == pair.second && y == pair.first))
                adjacent = true;
        }
        if (pair.first < 0 || pair.first >= D.node_count || pair.second < 0 ||
            pair.second >= D.node_count || !adjacent)
            throw ArgumentMismatch("nodes " + std::to_string(pair.first) + " and " +
                                   std::to_string(pair.second) +
                                   " are not adjacent in the dual graph");
        for (int f : {pair.first, pair.second})
            for (const DualCorner& c : corners_of_node(D, f)) {
                result.coloring.corners.push_back(c);
                --need[c.cell];
            }
        seeds = {pair.first, pair.second};
    } else {
        seeds = {0};
    }

    for (int c = 0; c < cell_count(D); ++c)
        if (need[c] < 0) return result;  // over-cornered cell, no witness

    SearchState state{D,
                      bfs_edge_order(D, seeds),
                      need,
                      std::vector<int>(cell_count(D), 0),
                      genus == 0 ? 0 : 6 * genus - 6,
                      {}};
    for (int e = 0; e < edge_count(D); ++e) {
        ++state.open[D.edge_cells[e].first];
        ++state.open[D.edge_cells[e].second];
    }
    for (int c = 0; c < cell_count(D); ++c)
        if (!state.feasible(c)) return result;

    if (state.assign(0)) {
        result.found = true;
        result.coloring.arrows = state.arrows;
        std::sort(result.coloring.arrows.begin(), result.coloring.arrows.end(),
                  [](const Arrow& a, const Arrow& b) { return a.edge < b.edge; });
    } else {
        result.coloring.corners.clear();
    }
    return result;
}

std::string format_coloring(const DualGraph& D, const DualColoring& col) {
    validate_references(D, col);
    std::ostringstream out;
    std::vector<Arrow> arrows = col.arrows;
    std::sort(arrows.begin(), arrows.end(),
              [](const Arrow& a, const Arrow& b) { return a.edge < b.edge; });
    for (const Arrow& a : arrows) {
        const auto [p, q] = D.edge_cells[a.edge];
        out << "arrow " << a.edge << " -> " << (a.out_of == p ? q : p) << "\n";
    }
    std::vector<DualCorner> corners = col.corners;
    std::sort(corners.begin(), corners.end(), [](const DualCorner& a, const DualCorner& b) {
        return a.cell != b.cell ? a.cell < b.cell : a.node < b.node;
    });
    for (const DualCorner& c : corners) {
        const auto& circuit = D.cells[c.cell];
        const int n = static_cast<int>(circuit.size());
        int at = static_cast<int>(
            std::find(circuit.begin(), circuit.end(), c.node) - circuit.begin());
        out << "corner " << c.cell << " " << circuit[(at + n - 1) % n] << " "
            << c.node << " " << circuit[(at + 1) % n] << "\n";
    }
    return out.str();
}

}  // namespace polymoduli
