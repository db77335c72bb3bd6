#include "fixtures.hpp"

#include <cmath>
#include <numbers>

#include "polymoduli/errors.hpp"
#include "polymoduli/tolerances.hpp"

namespace fixtures {

using namespace polymoduli;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kPhi = 1.6180339887498949;
}  // namespace

PolyhedronEmbedding tetrahedron() {
    std::vector<Eigen::Vector3d> coords = {
        {1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    std::vector<std::array<int, 3>> faces = {
        {0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
    return {Combinatoric::from_faces(faces), std::move(coords)};
}

PolyhedronEmbedding octahedron() {
    std::vector<Eigen::Vector3d> coords = {
        {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    std::vector<std::array<int, 3>> faces = {
        {0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
        {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
    return {Combinatoric::from_faces(faces), std::move(coords)};
}

PolyhedronEmbedding icosahedron() {
    std::vector<Eigen::Vector3d> coords = {
        {-1, kPhi, 0}, {1, kPhi, 0},  {-1, -kPhi, 0}, {1, -kPhi, 0},
        {0, -1, kPhi}, {0, 1, kPhi},  {0, -1, -kPhi}, {0, 1, -kPhi},
        {kPhi, 0, -1}, {kPhi, 0, 1},  {-kPhi, 0, -1}, {-kPhi, 0, 1}};
    std::vector<std::array<int, 3>> faces = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
        {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
        {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
    return {Combinatoric::from_faces(faces), std::move(coords)};
}

PolyhedronEmbedding cube_with_diagonals() {
    std::vector<Eigen::Vector3d> coords = {
        {-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1},
        {-1, -1, 1},  {1, -1, 1},  {1, 1, 1},  {-1, 1, 1}};
    std::vector<std::array<int, 3>> faces = {
        {0, 3, 2}, {0, 2, 1},   // bottom
        {4, 5, 6}, {4, 6, 7},   // top
        {0, 1, 5}, {0, 5, 4},   // front
        {2, 3, 7}, {2, 7, 6},   // back
        {0, 4, 7}, {0, 7, 3},   // left
        {1, 2, 6}, {1, 6, 5}};  // right
    return {Combinatoric::from_faces(faces), std::move(coords)};
}

std::vector<std::array<int, 3>> pinched_faces() {
    return {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2},
            {0, 4, 5}, {0, 5, 6}, {0, 6, 4}, {4, 6, 5}};
}

std::vector<std::array<int, 3>> disjoint_faces() {
    return {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2},
            {4, 5, 6}, {4, 6, 7}, {4, 7, 5}, {5, 7, 6}};
}

ConeAngles random_cone(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> colatitude(0.5, 2.2);
    const double widest =
        n == 3 ? kPi - 0.2 : std::min(kPi - 0.2, (2.0 * kPi - 0.3) / (n - 2));
    std::uniform_real_distribution<double> gap(0.5, widest);

    for (;;) {
        std::vector<Eigen::Vector3d> rays;
        rays.push_back(Eigen::Vector3d::UnitZ());
        double lon = 0.0;
        for (int i = 2; i <= n; ++i) {
            if (i > 2) lon -= gap(rng);
            const double th = colatitude(rng);
            rays.push_back({std::sin(th) * std::cos(lon),
                            std::sin(th) * std::sin(lon), std::cos(th)});
        }
        try {
            ConeAngles angles = extract_cone_angles(rays);
            if (check_cone_membership(angles, tol::kResidual)) return angles;
        } catch (const Error&) {
            // fold-flat or parallel draw; try again
        }
    }
}

PolyhedronEmbedding jittered_icosahedron(double relative, std::mt19937_64& rng) {
    const PolyhedronEmbedding base = icosahedron();
    const double edge = 2.0;  // all edges of the phi-scaled icosahedron
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (;;) {
        PolyhedronEmbedding P = base;
        for (auto& p : P.coords)
            p += relative * edge *
                 Eigen::Vector3d(unit(rng), unit(rng), unit(rng));
        if (in_general_position(P)) return P;
    }
}

}  // namespace fixtures
