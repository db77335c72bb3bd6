#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "polymoduli/build.hpp"
#include "polymoduli/errors.hpp"
#include "support/fixtures.hpp"

using namespace polymoduli;

namespace {
constexpr double kPi = std::numbers::pi;

Eigen::Matrix3d random_rotation(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Quaterniond q(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    q.normalize();
    return q.toRotationMatrix();
}
}  // namespace

TEST_CASE("angles of the regular tetrahedron") {
    ExtractedAngles ex = extract_angles(fixtures::tetrahedron());
    for (double s : ex.sigma.sigma) CHECK(s == doctest::Approx(kPi / 3).epsilon(1e-12));
    for (double d : ex.delta.delta)
        CHECK(d == doctest::Approx(std::acos(1.0 / 3.0)).epsilon(1e-12));
    for (double l : ex.ell.ell)
        CHECK(l == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(ex.flat_edges.empty());
}

TEST_CASE("dihedral angles of the other regular solids") {
    ExtractedAngles octa = extract_angles(fixtures::octahedron());
    for (double d : octa.delta.delta)
        CHECK(d == doctest::Approx(std::acos(-1.0 / 3.0)).epsilon(1e-12));

    ExtractedAngles icosa = extract_angles(fixtures::icosahedron());
    for (double d : icosa.delta.delta)
        CHECK(d == doctest::Approx(std::acos(-std::sqrt(5.0) / 3.0)).epsilon(1e-12));
    for (double s : icosa.sigma.sigma)
        CHECK(s == doctest::Approx(kPi / 3).epsilon(1e-12));
}

TEST_CASE("a cube cut along face diagonals has six flat edges") {
    PolyhedronEmbedding P = fixtures::cube_with_diagonals();
    ExtractedAngles ex = extract_angles(P);
    CHECK(ex.flat_edges.size() == 6);
    for (int e : ex.flat_edges)
        CHECK(ex.delta.delta[e] == doctest::Approx(kPi).epsilon(1e-12));

    // each split square contributes angles pi/2, pi/4, pi/4
    int right = 0, half = 0;
    for (double s : ex.sigma.sigma) {
        if (std::abs(s - kPi / 2) < 1e-12) ++right;
        if (std::abs(s - kPi / 4) < 1e-12) ++half;
    }
    CHECK(right == 12);
    CHECK(half == 24);

    // at a corner with three incident diagonals, a cube edge, a diagonal and
    // the next cube edge lie in one plane
    CHECK_FALSE(in_general_position(P));
}

TEST_CASE("regular solids are in general position") {
    CHECK(in_general_position(fixtures::tetrahedron()));
    CHECK(in_general_position(fixtures::octahedron()));
    CHECK(in_general_position(fixtures::icosahedron()));
}

TEST_CASE("extract_angles rejects collapsed faces") {
    PolyhedronEmbedding P = fixtures::tetrahedron();
    P.coords[3] = (P.coords[1] + P.coords[2]) / 2.0;  // vertex 3 onto an edge
    CHECK_THROWS_AS(extract_angles(P), DegenerateFace);
}

TEST_CASE("rigid motions from point triples") {
    std::mt19937_64 rng(301);
    std::array<Eigen::Vector3d, 3> src = {Eigen::Vector3d(0, 0, 0),
                                          Eigen::Vector3d(2, 0, 0),
                                          Eigen::Vector3d(0.5, 1.5, 0)};
    for (int trial = 0; trial < 5; ++trial) {
        Eigen::Matrix3d R = random_rotation(rng);
        Eigen::Vector3d t(trial - 2.0, 0.25 * trial, 1.0 - trial);
        std::array<Eigen::Vector3d, 3> dst;
        for (int i = 0; i < 3; ++i) dst[i] = R * src[i] + t;
        RigidMotion motion = rigid_motion_from_point_triples(src, dst);
        CHECK(motion.R.determinant() == doctest::Approx(1.0).epsilon(1e-9));
        for (int i = 0; i < 3; ++i)
            CHECK((motion.apply(src[i]) - dst[i]).norm() < 1e-9);
    }
}

TEST_CASE("a mirrored triple still admits a proper motion") {
    // reflecting a planar triple equals rotating it through its plane
    std::array<Eigen::Vector3d, 3> src = {Eigen::Vector3d(0, 0, 0),
                                          Eigen::Vector3d(1, 0, 0),
                                          Eigen::Vector3d(0, 1, 0)};
    std::array<Eigen::Vector3d, 3> dst = {Eigen::Vector3d(0, 0, 0),
                                          Eigen::Vector3d(1, 0, 0),
                                          Eigen::Vector3d(0, -1, 0)};
    RigidMotion motion = rigid_motion_from_point_triples(src, dst);
    CHECK(motion.R.determinant() == doctest::Approx(1.0).epsilon(1e-9));
    for (int i = 0; i < 3; ++i) CHECK((motion.apply(src[i]) - dst[i]).norm() < 1e-12);
}

TEST_CASE("point triple error cases") {
    std::array<Eigen::Vector3d, 3> line = {Eigen::Vector3d(0, 0, 0),
                                           Eigen::Vector3d(1, 0, 0),
                                           Eigen::Vector3d(2, 0, 0)};
    std::array<Eigen::Vector3d, 3> raised = {Eigen::Vector3d(0, 0, 0),
                                             Eigen::Vector3d(0, 1, 0),
                                             Eigen::Vector3d(0, 2, 0)};
    CHECK_THROWS_AS(rigid_motion_from_point_triples(line, raised), Collinear);

    std::array<Eigen::Vector3d, 3> tri = {Eigen::Vector3d(0, 0, 0),
                                          Eigen::Vector3d(1, 0, 0),
                                          Eigen::Vector3d(0, 1, 0)};

    std::array<Eigen::Vector3d, 3> stretched = {Eigen::Vector3d(0, 0, 0),
                                                Eigen::Vector3d(1.5, 0, 0),
                                                Eigen::Vector3d(0, 1, 0)};
    CHECK_THROWS_AS(rigid_motion_from_point_triples(tri, stretched), NotCongruent);
}

TEST_CASE("reconstruction reproduces the regular solids up to similarity") {
    for (const PolyhedronEmbedding& P :
         {fixtures::tetrahedron(), fixtures::octahedron(), fixtures::icosahedron()}) {
        ExtractedAngles ex = extract_angles(P);
        PolyhedronEmbedding rebuilt = reconstruct(P.K, ex.sigma, ex.delta);
        SimilarityResult sim = similarity_compare(rebuilt, P);
        CHECK(sim.same);
        // the base edge is rebuilt with length 1, so the scale factor is the
        // original edge length
        CHECK(sim.scale == doctest::Approx(ex.ell.ell[0]).epsilon(1e-9));
        CHECK(sim.max_deviation < 1e-9);
    }
}

TEST_CASE("reconstruction respects the chosen base edge") {
    PolyhedronEmbedding P = fixtures::icosahedron();
    ExtractedAngles ex = extract_angles(P);
    PolyhedronEmbedding rebuilt = reconstruct(P.K, ex.sigma, ex.delta, 1e-9, 17);
    SimilarityResult sim = similarity_compare(rebuilt, P);
    CHECK(sim.same);
    CHECK(sim.max_deviation < 1e-9);
}

TEST_CASE("a jittered icosahedron survives the round trip") {
    std::mt19937_64 rng(401);
    PolyhedronEmbedding P = fixtures::jittered_icosahedron(0.05, rng);
    ExtractedAngles ex = extract_angles(P);
    PolyhedronEmbedding rebuilt = reconstruct(P.K, ex.sigma, ex.delta);
    SimilarityResult sim = similarity_compare(rebuilt, P);
    CHECK(sim.same);
    CHECK(sim.max_deviation < 1e-8);
}

TEST_CASE("reconstruction refuses bad inputs") {
    PolyhedronEmbedding P = fixtures::tetrahedron();
    ExtractedAngles ex = extract_angles(P);

    SurfaceAngles bent = ex.sigma;
    bent.sigma[0] += 1e-3;
    CHECK_THROWS_AS(reconstruct(P.K, bent, ex.delta), NotAMember);

    std::vector<std::array<int, 3>> faces;
    for (int i = 0; i < 7; ++i) {
        faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        faces.push_back({i, (i + 3) % 7, (i + 2) % 7});
    }
    Combinatoric torus = Combinatoric::from_faces(faces);
    SurfaceAngles s42{std::vector<double>(42, 1.0)};
    DihedralAngles d21{std::vector<double>(21, 1.0)};
    CHECK_THROWS_AS(reconstruct(torus, s42, d21), GenusNotZero);
}

TEST_CASE("similarity_compare separates genuine mirror images") {
    PolyhedronEmbedding P = fixtures::tetrahedron();
    PolyhedronEmbedding mirrored = P;
    for (Eigen::Vector3d& p : mirrored.coords) p.x() = -p.x();
    SimilarityResult sim = similarity_compare(P, mirrored);
    CHECK_FALSE(sim.same);

    PolyhedronEmbedding other = fixtures::octahedron();
    CHECK_THROWS_AS(similarity_compare(P, other), CombinatoricMismatch);
}

TEST_CASE("similarity_compare finds scaled rotated copies") {
    std::mt19937_64 rng(501);
    PolyhedronEmbedding P = fixtures::octahedron();
    PolyhedronEmbedding moved = P;
    Eigen::Matrix3d R = random_rotation(rng);
    for (Eigen::Vector3d& p : moved.coords)
        p = 3.75 * (R * p) + Eigen::Vector3d(1, -2, 0.5);
    SimilarityResult sim = similarity_compare(P, moved);
    CHECK(sim.same);
    CHECK(sim.scale == doctest::Approx(3.75).epsilon(1e-9));
    CHECK(sim.max_deviation < 1e-9);
}
