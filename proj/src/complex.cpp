#include "polymoduli/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "polymoduli/errors.hpp"

namespace polymoduli {

namespace {

std::string face_str(const std::array<int, 3>& f) {
    return "(" + std::to_string(f[0]) + ", " + std::to_string(f[1]) + ", " +
           std::to_string(f[2]) + ")";
}

std::array<int, 3> rotate_smallest_first(const std::array<int, 3>& f) {
    int s = 0;
    if (f[1] < f[s]) s = 1;
    if (f[2] < f[s]) s = 2;
    return {f[s], f[(s + 1) % 3], f[(s + 2) % 3]};
}

}  // namespace

Combinatoric Combinatoric::from_faces(const std::vector<std::array<int, 3>>& input) {
    Combinatoric K;
    if (input.size() < 4)
        throw InvalidComplex("a closed surface needs at least 4 faces, got " +
                             std::to_string(input.size()));

    K.faces_.reserve(input.size());
    std::set<std::array<int, 3>> seen;
    int max_vertex = -1;
    for (const auto& f : input) {
        if (f[0] < 0 || f[1] < 0 || f[2] < 0)
            throw InvalidComplex("negative vertex index in face " + face_str(f));
        if (f[0] == f[1] || f[1] == f[2] || f[2] == f[0])
            throw InvalidComplex("repeated vertex in face " + face_str(f));
        auto canon = rotate_smallest_first(f);
        std::array<int, 3> key = {canon[0], std::min(canon[1], canon[2]), std::max(canon[1], canon[2])};
        if (!seen.insert(key).second)
            throw InvalidComplex("face " + face_str(f) + " occurs twice");
        K.faces_.push_back(canon);
        max_vertex = std::max({max_vertex, f[0], f[1], f[2]});
    }
    K.vertex_count_ = max_vertex + 1;
    if (K.vertex_count_ < 4)
        throw InvalidComplex("a closed surface needs at least 4 vertices, got " +
                             std::to_string(K.vertex_count_));

    std::vector<char> used(K.vertex_count_, 0);
    for (const auto& f : K.faces_)
        for (int v : f) used[v] = 1;
    for (int v = 0; v < K.vertex_count_; ++v)
        if (!used[v])
            throw InvalidComplex("vertex indices must be dense; " + std::to_string(v) +
                                 " is unused");

    // Undirected edges, then manifold and orientation conditions.
    const int F = K.face_count();
    std::map<std::pair<int, int>, std::vector<std::pair<int, bool>>> edge_uses;  // (face, is lo->hi)
    for (int f = 0; f < F; ++f) {
        const auto& t = K.faces_[f];
        for (int s = 0; s < 3; ++s) {
            int u = t[s], v = t[(s + 1) % 3];
            edge_uses[{std::min(u, v), std::max(u, v)}].push_back({f, u < v});
        }
    }
    for (const auto& [e, uses] : edge_uses) {
        if (uses.size() != 2)
            throw NonManifoldEdge("edge {" + std::to_string(e.first) + ", " +
                                  std::to_string(e.second) + "} lies in " +
                                  std::to_string(uses.size()) + " faces");
        if (uses[0].second == uses[1].second)
            throw InconsistentOrientation("edge {" + std::to_string(e.first) + ", " +
                                          std::to_string(e.second) +
                                          "} is traversed twice in the same direction");
    }

    K.edges_.reserve(edge_uses.size());
    std::map<std::pair<int, int>, int> edge_ids;
    for (const auto& [e, uses] : edge_uses) {
        int id = static_cast<int>(K.edges_.size());
        K.edges_.push_back(e);
        edge_ids[e] = id;
        std::array<int, 2> ef = {-1, -1};
        for (const auto& [f, forward] : uses) ef[forward ? 0 : 1] = f;
        K.edge_faces_.push_back(ef);
    }

    K.face_edges_.resize(F);
    for (int f = 0; f < F; ++f) {
        const auto& t = K.faces_[f];
        for (int s = 0; s < 3; ++s) {
            int u = t[s], v = t[(s + 1) % 3];
            K.face_edges_[f][s] = edge_ids.at({std::min(u, v), std::max(u, v)});
        }
    }

    K.corners_.reserve(3 * F);
    for (int f = 0; f < F; ++f) {
        const auto& t = K.faces_[f];
        for (int s = 0; s < 3; ++s) {
            Corner c;
            c.face = f;
            c.center = t[s];
            c.wing_lo = std::min(t[(s + 1) % 3], t[(s + 2) % 3]);
            c.wing_hi = std::max(t[(s + 1) % 3], t[(s + 2) % 3]);
            K.corners_.push_back(c);
        }
    }

    // Vertex links: the faces around k induce arcs of neighbours; a closed
    // surface needs exactly one cycle per vertex.
    const int V = K.vertex_count_;
    std::vector<std::map<int, std::pair<int, int>>> succ(V);  // vertex -> (next, face)
    for (int f = 0; f < F; ++f) {
        const auto& t = K.faces_[f];
        for (int s = 0; s < 3; ++s) {
            int k = t[s], a = t[(s + 1) % 3], b = t[(s + 2) % 3];
            // face (k, a, b): the link arc of k runs a -> b
            if (!succ[k].insert({a, {b, f}}).second)
                throw PinchedVertex("vertex " + std::to_string(k) +
                                    " has a branching link");
        }
    }
    K.links_.resize(V);
    K.faces_around_.resize(V);
    for (int k = 0; k < V; ++k) {
        const auto& m = succ[k];
        if (m.size() < 3)
            throw InvalidComplex("vertex " + std::to_string(k) + " has valency " +
                                 std::to_string(m.size()));
        int start = m.begin()->first;
        int cur = start;
        do {
            auto it = m.find(cur);
            if (it == m.end())
                throw PinchedVertex("link of vertex " + std::to_string(k) +
                                    " does not close up");
            K.links_[k].push_back(cur);
            K.faces_around_[k].push_back(it->second.second);
            cur = it->second.first;
        } while (cur != start && K.links_[k].size() <= m.size());
        if (K.links_[k].size() != m.size() || cur != start)
            throw PinchedVertex("link of vertex " + std::to_string(k) +
                                " is not a single cycle");
    }

    // Face-adjacency connectivity.
    std::vector<char> reached(F, 0);
    std::vector<int> stack = {0};
    reached[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int e : K.face_edges_[f]) {
            for (int g : K.edge_faces_[e]) {
                if (!reached[g]) {
                    reached[g] = 1;
                    ++count;
                    stack.push_back(g);
                }
            }
        }
    }
    if (count != F)
        throw DisconnectedComplex("only " + std::to_string(count) + " of " +
                                  std::to_string(F) + " faces are reachable");

    const int chi = V - K.edge_count() + F;
    if (chi > 2 || chi % 2 != 0)
        throw InvalidComplex("Euler characteristic " + std::to_string(chi) +
                             " is not that of a closed oriented surface");
    K.genus_ = (2 - chi) / 2;
    return K;
}

int Combinatoric::edge_index(int a, int b) const {
    const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        throw MissingEntry("no edge {" + std::to_string(a) + ", " + std::to_string(b) + "}");
    return static_cast<int>(it - edges_.begin());
}

int Combinatoric::corner_index(int f, int center) const {
    if (f < 0 || f >= face_count())
        throw MissingEntry("face id " + std::to_string(f) + " out of range");
    for (int s = 0; s < 3; ++s)
        if (faces_[f][s] == center) return 3 * f + s;
    throw MissingEntry("face " + std::to_string(f) + " has no vertex " + std::to_string(center));
}

DualGraph dual_graph(const Combinatoric& K) {
    DualGraph D;
    D.node_count = K.face_count();
    D.edge_nodes.reserve(K.edge_count());
    D.edge_cells.reserve(K.edge_count());
    for (int e = 0; e < K.edge_count(); ++e) {
        D.edge_nodes.push_back({K.edge_faces(e)[0], K.edge_faces(e)[1]});
        D.edge_cells.push_back(K.edges()[e]);
    }
    D.cells.reserve(K.vertex_count());
    for (int k = 0; k < K.vertex_count(); ++k) D.cells.push_back(K.faces_around(k));
    return D;
}

namespace {

// Scratch data for growing discs over a fixed combinatoric.
struct DiscGrower {
    const Combinatoric& K;
    std::vector<char> face_in;  // current disc as a face set
    int faces_in = 0;

    explicit DiscGrower(const Combinatoric& K) : K(K), face_in(K.face_count(), 0) {}

    bool covered() const { return faces_in == K.face_count(); }

    // Faces of the closed star of k that are in the disc, as positions in
    // faces_around(k). Contiguity is cyclic.
    std::vector<int> fan_positions(int k) const {
        std::vector<int> pos;
        const auto& around = K.faces_around(k);
        for (int i = 0; i < static_cast<int>(around.size()); ++i)
            if (face_in[around[i]]) pos.push_back(i);
        return pos;
    }

    static bool contiguous_cyclic(const std::vector<int>& pos, int n) {
        if (pos.empty() || static_cast<int>(pos.size()) == n) return !pos.empty();
        // one run exactly when one marked position has an unmarked successor
        std::vector<char> in(n, 0);
        for (int p : pos) in[p] = 1;
        int gaps = 0;
        for (int p = 0; p < n; ++p)
            if (in[p] && !in[(p + 1) % n]) ++gaps;
        return gaps == 1;
    }

    // The new vertex must meet the disc in one contiguous nonempty fan of
    // faces plus link simplices forming arcs attached to its ends; that is
    // equivalent to the marked part of the link being connected.
    bool attachment_shape_ok(int k) const {
        const auto& around = K.faces_around(k);
        const auto& link = K.vertex_link(k);
        const int n = static_cast<int>(around.size());
        auto pos = fan_positions(k);
        if (pos.empty()) return false;
        if (static_cast<int>(pos.size()) == n) return true;
        if (!contiguous_cyclic(pos, n)) return false;

        // Vertices and edges of the link that already belong to the disc.
        std::vector<char> vert_in(n, 0), edge_in(n, 0);  // edge i joins link[i], link[i+1]
        for (int i = 0; i < n; ++i) {
            if (vertex_in_disc(link[i])) vert_in[i] = 1;
            int e = K.edge_index(link[i], link[(i + 1) % n]);
            for (int f : K.edge_faces(e))
                if (face_in[f]) edge_in[i] = 1;
        }
        // Connectivity of the marked sub-link (fan arcs included) along the
        // cycle: marked edges force their endpoints, so walk components of
        // the 1-complex. Growing the disc here stays valid only when the
        // marked part is a single arc.
        std::vector<int> comp(n, -1);
        int comps = 0;
        for (int i = 0; i < n; ++i) {
            if (!vert_in[i] || comp[i] >= 0) continue;
            ++comps;
            // expand forward and backward through marked edges
            comp[i] = comps;
            int fwd = i;
            while (edge_in[fwd] && vert_in[(fwd + 1) % n] && comp[(fwd + 1) % n] < 0) {
                fwd = (fwd + 1) % n;
                comp[fwd] = comps;
            }
            int bwd = i;
            while (edge_in[(bwd + n - 1) % n] && vert_in[(bwd + n - 1) % n] &&
                   comp[(bwd + n - 1) % n] < 0) {
                bwd = (bwd + n - 1) % n;
                comp[bwd] = comps;
            }
        }
        return comps == 1;
    }

    bool vertex_in_disc(int v) const {
        for (int f : K.faces_around(v))
            if (face_in[f]) return true;
        return false;
    }

    void add_star(int k) {
        for (int f : K.faces_around(k)) {
            if (!face_in[f]) {
                face_in[f] = 1;
                ++faces_in;
            }
        }
    }
};

// Validity of a face subset as a combinatorial disc: connected, contiguous
// face fan at every vertex, Euler characteristic 1, one boundary cycle.
bool is_disc(const Combinatoric& K, const std::vector<char>& face_in) {
    int F_in = 0;
    for (char c : face_in) F_in += c;
    if (F_in == 0) return false;
    if (F_in == K.face_count()) return false;

    // connectivity over shared edges
    int start = -1;
    for (int f = 0; f < K.face_count(); ++f)
        if (face_in[f]) { start = f; break; }
    std::vector<char> reached(K.face_count(), 0);
    std::vector<int> stack = {start};
    reached[start] = 1;
    int count = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int e : K.face_edges(f)) {
            const auto& ef = K.edge_faces(e);
            if (!face_in[ef[0]] || !face_in[ef[1]]) continue;
            int g = ef[0] == f ? ef[1] : ef[0];
            if (!reached[g]) {
                reached[g] = 1;
                ++count;
                stack.push_back(g);
            }
        }
    }
    if (count != F_in) return false;

    // edges and vertices present; boundary edges have one incident face in
    std::vector<int> edge_mult(K.edge_count(), 0);
    std::vector<char> vert_in(K.vertex_count(), 0);
    for (int f = 0; f < K.face_count(); ++f) {
        if (!face_in[f]) continue;
        for (int e : K.face_edges(f)) ++edge_mult[e];
        for (int v : K.faces()[f]) vert_in[v] = 1;
    }
    int E_in = 0, V_in = 0;
    for (int e = 0; e < K.edge_count(); ++e) E_in += edge_mult[e] > 0;
    for (int v = 0; v < K.vertex_count(); ++v) V_in += vert_in[v];

    // fan condition per vertex
    for (int v = 0; v < K.vertex_count(); ++v) {
        if (!vert_in[v]) continue;
        const auto& around = K.faces_around(v);
        std::vector<int> pos;
        for (int i = 0; i < static_cast<int>(around.size()); ++i)
            if (face_in[around[i]]) pos.push_back(i);
        if (pos.empty()) return false;  // vertex only on boundary arcs: pinch
        if (static_cast<int>(pos.size()) != static_cast<int>(around.size()) &&
            !DiscGrower::contiguous_cyclic(pos, static_cast<int>(around.size())))
            return false;
    }

    if (V_in - E_in + F_in != 1) return false;

    // boundary must be one closed cycle
    std::map<int, std::vector<int>> bnd;  // vertex -> boundary neighbours
    int bnd_edges = 0;
    for (int e = 0; e < K.edge_count(); ++e) {
        if (edge_mult[e] != 1) continue;
        ++bnd_edges;
        bnd[K.edges()[e].first].push_back(K.edges()[e].second);
        bnd[K.edges()[e].second].push_back(K.edges()[e].first);
    }
    if (bnd_edges == 0) return false;
    for (const auto& [v, nb] : bnd)
        if (nb.size() != 2) return false;
    // walk the cycle
    int v0 = bnd.begin()->first;
    int prev = v0, cur = bnd[v0][0];
    int steps = 1;
    while (cur != v0 && steps <= bnd_edges) {
        const auto& nb = bnd[cur];
        int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++steps;
    }
    return cur == v0 && steps == bnd_edges;
}

bool grow(const Combinatoric& K, DiscGrower& gr, std::vector<int>& order,
          std::vector<char>& used) {
    const int V = K.vertex_count();
    if (gr.covered()) {
        for (int v = 0; v < V; ++v)
            if (!used[v]) order.push_back(v);
        return true;
    }

    // candidates: boundary vertices of the current disc, smallest first
    std::vector<int> candidates;
    if (order.empty()) {
        candidates.resize(V);
        std::iota(candidates.begin(), candidates.end(), 0);
    } else {
        std::vector<int> edge_mult(K.edge_count(), 0);
        for (int f = 0; f < K.face_count(); ++f)
            if (gr.face_in[f])
                for (int e : K.face_edges(f)) ++edge_mult[e];
        std::set<int> bnd;
        for (int e = 0; e < K.edge_count(); ++e)
            if (edge_mult[e] == 1) {
                bnd.insert(K.edges()[e].first);
                bnd.insert(K.edges()[e].second);
            }
        for (int v : bnd)
            if (!used[v]) candidates.push_back(v);
    }

    for (int k : candidates) {
        if (!order.empty() && !gr.attachment_shape_ok(k)) continue;
        std::vector<char> saved = gr.face_in;
        int saved_count = gr.faces_in;
        gr.add_star(k);
        bool ok = gr.covered() || is_disc(K, gr.face_in);
        if (ok) {
            order.push_back(k);
            used[k] = 1;
            if (grow(K, gr, order, used)) return true;
            order.pop_back();
            used[k] = 0;
        }
        gr.face_in = saved;
        gr.faces_in = saved_count;
    }
    return false;
}

}  // namespace

std::vector<int> disc_growth_order(const Combinatoric& K) {
    if (K.genus() != 0)
        throw GenusNotZero("disc growth requires genus 0, got " + std::to_string(K.genus()));
    DiscGrower gr(K);
    std::vector<int> order;
    std::vector<char> used(K.vertex_count(), 0);
    if (!grow(K, gr, order, used))
        throw SearchExhausted("no disc growth order found");
    return order;
}

}  // namespace polymoduli
