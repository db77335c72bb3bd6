#include "polymoduli/intrinsic.hpp"

#include <cmath>
#include <deque>
#include <string>

#include "polymoduli/errors.hpp"
#include "polymoduli/euclid.hpp"

namespace polymoduli {

namespace {

EuclideanTriangle face_triangle(const Combinatoric& K, const EdgeLengths& ell,
                                const SurfaceAngles& sigma, int f) {
    const auto& e = K.face_edges(f);  // {i,j}, {j,k}, {k,i}
    EuclideanTriangle t;
    t.a = ell.ell[e[0]];
    t.b = ell.ell[e[1]];
    t.c = ell.ell[e[2]];
    t.alpha = sigma.sigma[3 * f + 2];  // at k, opposite side ij
    t.beta = sigma.sigma[3 * f + 0];   // at i
    t.gamma = sigma.sigma[3 * f + 1];  // at j
    return t;
}

void require_sizes(const Combinatoric& K, const EdgeLengths& ell,
                   const SurfaceAngles& sigma) {
    if (static_cast<int>(ell.ell.size()) != K.edge_count())
        throw MissingEntry("expected " + std::to_string(K.edge_count()) +
                           " edge lengths, got " + std::to_string(ell.ell.size()));
    if (static_cast<int>(sigma.sigma.size()) != 3 * K.face_count())
        throw MissingEntry("expected " + std::to_string(3 * K.face_count()) +
                           " corner angles, got " + std::to_string(sigma.sigma.size()));
}

}  // namespace

Eigen::VectorXd g_in(const Combinatoric& K, const EdgeLengths& ell,
                     const SurfaceAngles& sigma) {
    require_sizes(K, ell, sigma);
    Eigen::VectorXd r(3 * K.face_count());
    for (int f = 0; f < K.face_count(); ++f)
        r.segment<3>(3 * f) = g_delta(face_triangle(K, ell, sigma, f));
    return r;
}

EdgeLengths propagate_lengths(const Combinatoric& K, const SurfaceAngles& sigma,
                              int base_edge, double base_length) {
    if (static_cast<int>(sigma.sigma.size()) != 3 * K.face_count())
        throw MissingEntry("corner angle vector has wrong size");
    if (base_edge < 0 || base_edge >= K.edge_count())
        throw MissingEntry("base edge id " + std::to_string(base_edge) + " out of range");

    EdgeLengths out;
    out.ell.assign(K.edge_count(), 0.0);
    std::vector<char> known(K.edge_count(), 0);
    out.ell[base_edge] = base_length;
    known[base_edge] = 1;

    // Angle opposite a given edge within a face: faces store edges in the
    // order ({i,j}, {j,k}, {k,i}) and corners in the order (i, j, k), so edge
    // slot s is opposite corner slot (s + 2) mod 3.
    auto opposite_angle = [&](int f, int slot) {
        return sigma.sigma[3 * f + (slot + 2) % 3];
    };

    std::deque<int> queue;
    std::vector<char> queued(K.face_count(), 0);
    for (int f : K.edge_faces(base_edge)) {
        if (!queued[f]) {
            queued[f] = 1;
            queue.push_back(f);
        }
    }
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        const auto& edges = K.face_edges(f);
        int known_slot = -1;
        for (int s = 0; s < 3; ++s)
            if (known[edges[s]]) {
                known_slot = s;
                break;
            }
        if (known_slot < 0)
            throw MissingEntry("face " + std::to_string(f) +
                               " queued before any of its edges was known");
        const double ratio =
            out.ell[edges[known_slot]] / std::sin(opposite_angle(f, known_slot));
        for (int s = 0; s < 3; ++s) {
            int e = edges[s];
            if (known[e]) continue;
            out.ell[e] = ratio * std::sin(opposite_angle(f, s));
            known[e] = 1;
            for (int g : K.edge_faces(e)) {
                if (!queued[g]) {
                    queued[g] = 1;
                    queue.push_back(g);
                }
            }
        }
    }
    return out;
}

IntrinsicMembership check_in_membership(const Combinatoric& K,
                                        const SurfaceAngles& sigma, double tol,
                                        int base_edge) {
    const double base_length = 1.0;
    IntrinsicMembership result;
    result.ell = propagate_lengths(K, sigma, base_edge, base_length);
    result.max_residual = g_in(K, result.ell, sigma).cwiseAbs().maxCoeff();
    result.member = result.max_residual <= tol * (1.0 + base_length);
    return result;
}

}  // namespace polymoduli
