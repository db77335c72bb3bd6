#include "polymoduli/build.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "polymoduli/cones.hpp"
#include "polymoduli/errors.hpp"
#include "polymoduli/euclid.hpp"
#include "polymoduli/intrinsic.hpp"
#include "polymoduli/moduli.hpp"

namespace polymoduli {

namespace {

constexpr double kPi = std::numbers::pi;

int third_vertex(const std::array<int, 3>& face, int a, int b) {
    return face[0] + face[1] + face[2] - a - b;
}

void require_coords(const PolyhedronEmbedding& P) {
    if (static_cast<int>(P.coords.size()) != P.K.vertex_count())
        throw SizeMismatch("embedding has " + std::to_string(P.coords.size()) +
                           " points for " + std::to_string(P.K.vertex_count()) +
                           " vertices");
}

}  // namespace

ExtractedAngles extract_angles(const PolyhedronEmbedding& P) {
    require_coords(P);
    const Combinatoric& K = P.K;
    ExtractedAngles out;
    out.ell.ell.resize(K.edge_count());
    out.sigma.sigma.resize(3 * K.face_count());
    out.delta.delta.resize(K.edge_count());

    for (int e = 0; e < K.edge_count(); ++e) {
        const auto& [a, b] = K.edges()[e];
        out.ell.ell[e] = (P.coords[a] - P.coords[b]).norm();
    }

    for (int f = 0; f < K.face_count(); ++f) {
        const auto& fc = K.faces()[f];
        const Eigen::Vector3d u = P.coords[fc[1]] - P.coords[fc[0]];
        const Eigen::Vector3d v = P.coords[fc[2]] - P.coords[fc[0]];
        const auto& fe = K.face_edges(f);
        const double lab = out.ell.ell[fe[0]], lbc = out.ell.ell[fe[1]],
                     lca = out.ell.ell[fe[2]];
        const double diameter2 =
            std::max({lab * lab, lbc * lbc, lca * lca});
        if (0.5 * u.cross(v).norm() <= tol::kFaceArea * diameter2)
            throw DegenerateFace("face (" + std::to_string(fc[0]) + "," +
                                 std::to_string(fc[1]) + "," +
                                 std::to_string(fc[2]) + ") has no area");
        std::array<double, 3> angles;
        try {
            angles = solve_triangle_from_lengths(lab, lbc, lca);
        } catch (const DegenerateTriangle& e) {
            throw DegenerateFace("face (" + std::to_string(fc[0]) + "," +
                                 std::to_string(fc[1]) + "," +
                                 std::to_string(fc[2]) + "): " + e.what());
        }
        // angles come back opposite the sides (ab, bc, ca): at c, at a, at b
        out.sigma.sigma[3 * f + 0] = angles[1];
        out.sigma.sigma[3 * f + 1] = angles[2];
        out.sigma.sigma[3 * f + 2] = angles[0];
    }

    for (int e = 0; e < K.edge_count(); ++e) {
        const auto& [i, j] = K.edges()[e];
        const auto& ef = K.edge_faces(e);
        const int k = third_vertex(K.faces()[ef[0]], i, j);
        const int l = third_vertex(K.faces()[ef[1]], i, j);
        const double d =
            dihedral_angle(P.coords[j] - P.coords[i], P.coords[k] - P.coords[i],
                           P.coords[l] - P.coords[i]);
        out.delta.delta[e] = d;
        if (std::abs(d - kPi) <= tol::kFlatEdge) out.flat_edges.push_back(e);
    }
    return out;
}

bool in_general_position(const PolyhedronEmbedding& P) {
    require_coords(P);
    for (int k = 0; k < P.K.vertex_count(); ++k) {
        const auto& link = P.K.vertex_link(k);
        const int n = static_cast<int>(link.size());
        std::vector<Eigen::Vector3d> rays(n);
        for (int i = 0; i < n; ++i) {
            rays[i] = P.coords[link[i]] - P.coords[k];
            if (rays[i].norm() <= 0.0) return false;
            rays[i].normalize();
        }
        for (int i = 0; i < n; ++i) {
            Eigen::Matrix3d m;
            m.col(0) = rays[i];
            m.col(1) = rays[(i + 1) % n];
            m.col(2) = rays[(i + 2) % n];
            if (std::abs(m.determinant()) <= tol::kGeneralPosition) return false;
        }
    }
    return true;
}

RigidMotion rigid_motion_from_point_triples(const std::array<Eigen::Vector3d, 3>& src,
                                            const std::array<Eigen::Vector3d, 3>& dst) {
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            const double ds = (src[a] - src[b]).norm();
            const double dd = (dst[a] - dst[b]).norm();
            if (std::abs(ds - dd) > tol::kCongruence * (1.0 + ds))
                throw NotCongruent("side " + std::to_string(a) + "-" +
                                   std::to_string(b) + " has lengths " +
                                   std::to_string(ds) + " and " + std::to_string(dd));
        }

    auto frame = [](const std::array<Eigen::Vector3d, 3>& p) {
        const Eigen::Vector3d u = p[1] - p[0];
        const Eigen::Vector3d v = p[2] - p[0];
        const Eigen::Vector3d w = u.cross(v);
        if (w.norm() <= tol::kGeneralPosition * u.norm() * v.norm())
            throw Collinear("point triple spans no plane");
        Eigen::Matrix3d F;
        F.col(0) = u.normalized();
        F.col(2) = w.normalized();
        F.col(1) = F.col(2).cross(F.col(0));
        return F;
    };

    RigidMotion motion;
    const Eigen::Matrix3d Fs = frame(src), Fd = frame(dst);
    motion.R = Fd * Fs.transpose();
    motion.t = dst[0] - motion.R * src[0];
    return motion;
}

namespace {

// Apex plus link images of one realized cone, in a local frame.
struct LocalCone {
    std::vector<int> vertices;           // apex first, then the link order
    std::vector<Eigen::Vector3d> points;
};

LocalCone realize_local_cone(const Combinatoric& K, const ModuliPoint& point,
                             int k) {
    const ConeAngles angles = cone_angles_at_vertex(K, point.sigma, point.delta, k);
    const std::vector<Eigen::Vector3d> rays = realize_cone(angles, point.charts[k]);
    const auto& link = K.vertex_link(k);
    LocalCone cone;
    cone.vertices.push_back(k);
    cone.points.push_back(Eigen::Vector3d::Zero());
    for (size_t i = 0; i < link.size(); ++i) {
        cone.vertices.push_back(link[i]);
        cone.points.push_back(point.ell.ell[K.edge_index(k, link[i])] * rays[i]);
    }
    return cone;
}

}  // namespace

PolyhedronEmbedding reconstruct(const Combinatoric& K, const SurfaceAngles& sigma,
                                const DihedralAngles& delta, double tol,
                                int base_edge) {
    if (K.genus() != 0)
        throw GenusNotZero("reconstruction needs genus 0, got " +
                           std::to_string(K.genus()));
    Membership membership = check_membership(K, sigma, delta, tol, base_edge);
    if (!membership.member)
        throw NotAMember("angle data rejected: " + membership.detail);
    const ModuliPoint& point = *membership.point;

    const std::vector<int> order = disc_growth_order(K);
    std::vector<Eigen::Vector3d> coords(K.vertex_count(), Eigen::Vector3d::Zero());
    std::vector<char> placed(K.vertex_count(), 0);
    std::vector<char> face_done(K.face_count(), 0);

    auto face_area = [&](int f) {
        const auto& fc = K.faces()[f];
        return 0.5 * (coords[fc[1]] - coords[fc[0]])
                         .cross(coords[fc[2]] - coords[fc[0]])
                         .norm();
    };

    for (size_t step = 0; step < order.size(); ++step) {
        const int k = order[step];
        LocalCone cone = realize_local_cone(K, point, k);

        if (step == 0) {
            for (size_t i = 0; i < cone.vertices.size(); ++i) {
                coords[cone.vertices[i]] = cone.points[i];
                placed[cone.vertices[i]] = 1;
            }
        } else {
            int best_face = -1;
            double best_area = -1.0;
            for (int f : K.faces_around(k)) {
                if (!face_done[f]) continue;
                const double area = face_area(f);
                if (area > best_area) {
                    best_area = area;
                    best_face = f;
                }
            }
            if (best_face < 0)
                throw ClosureFailure("vertex " + std::to_string(k) +
                                     " shares no built face");

            std::map<int, Eigen::Vector3d> local;
            for (size_t i = 0; i < cone.vertices.size(); ++i)
                local[cone.vertices[i]] = cone.points[i];
            std::array<Eigen::Vector3d, 3> src, dst;
            for (int s = 0; s < 3; ++s) {
                const int v = K.faces()[best_face][s];
                src[s] = local.at(v);
                dst[s] = coords[v];
            }
            const RigidMotion T = rigid_motion_from_point_triples(src, dst);

            // vertices on built shared faces must match tightly, the rest of
            // the already-placed link only within the closure allowance
            std::vector<char> on_strip(K.vertex_count(), 0);
            for (int f : K.faces_around(k))
                if (face_done[f])
                    for (int v : K.faces()[f]) on_strip[v] = 1;

            for (const auto& [v, q] : local) {
                const Eigen::Vector3d image = T.apply(q);
                if (placed[v]) {
                    const double deviation = (image - coords[v]).norm();
                    const double allowance =
                        on_strip[v] ? tol : tol::kClosureFactor * tol;
                    if (deviation > allowance)
                        throw ClosureFailure(
                            "attaching the cone at vertex " + std::to_string(k) +
                            ": vertex " + std::to_string(v) + " lands " +
                            std::to_string(deviation) + " away");
                } else {
                    coords[v] = image;
                    placed[v] = 1;
                }
            }
        }
        for (int f : K.faces_around(k)) face_done[f] = 1;
    }

    return PolyhedronEmbedding{K, std::move(coords)};
}

SimilarityResult similarity_compare(const PolyhedronEmbedding& P1,
                                    const PolyhedronEmbedding& P2) {
    if (P1.K.faces() != P2.K.faces())
        throw CombinatoricMismatch("the embeddings triangulate different complexes");
    require_coords(P1);
    require_coords(P2);

    const int V = P1.K.vertex_count();
    Eigen::MatrixXd src(3, V), dst(3, V);
    for (int v = 0; v < V; ++v) {
        src.col(v) = P1.coords[v];
        dst.col(v) = P2.coords[v];
    }
    const Eigen::Matrix4d T = Eigen::umeyama(src, dst, true);
    const Eigen::Matrix3d A = T.topLeftCorner<3, 3>();
    const Eigen::Vector3d t = T.topRightCorner<3, 1>();

    SimilarityResult result;
    result.scale = std::cbrt(A.determinant());
    for (int v = 0; v < V; ++v)
        result.max_deviation =
            std::max(result.max_deviation, (A * P1.coords[v] + t - P2.coords[v]).norm());
    double diameter = 0.0;
    for (int a = 0; a < V; ++a)
        for (int b = a + 1; b < V; ++b)
            diameter = std::max(diameter, (P2.coords[a] - P2.coords[b]).norm());
    result.same = result.max_deviation <= tol::kSimilarity * diameter;
    return result;
}

}  // namespace polymoduli
