// Acceptance gate: each criterion prints exactly one PASS or FAIL line with
// enough numbers to audit the decision. The exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "polymoduli/build.hpp"
#include "polymoduli/coloring.hpp"
#include "polymoduli/cones.hpp"
#include "polymoduli/errors.hpp"
#include "polymoduli/intrinsic.hpp"
#include "polymoduli/moduli.hpp"
#include "support/fixtures.hpp"

using namespace polymoduli;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct NamedSolid {
    const char* name;
    PolyhedronEmbedding P;
};

std::vector<NamedSolid> regular_solids() {
    return {{"tetrahedron", fixtures::tetrahedron()},
            {"octahedron", fixtures::octahedron()},
            {"icosahedron", fixtures::icosahedron()}};
}

// 1: extraction composed with reconstruction is the identity up to
// similarity, on the regular solids and on 20 jittered icosahedra, with the
// worst vertex within 1e-6 of the diameter, in under ten seconds total.
bool criterion_round_trip() {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    int shapes = 0;
    std::string culprit;

    auto run_one = [&](const std::string& name, const PolyhedronEmbedding& P) {
        ExtractedAngles ex = extract_angles(P);
        PolyhedronEmbedding rebuilt = reconstruct(P.K, ex.sigma, ex.delta);
        SimilarityResult sim = similarity_compare(rebuilt, P);
        double diameter = 0.0;
        for (size_t i = 0; i < P.coords.size(); ++i)
            for (size_t j = i + 1; j < P.coords.size(); ++j)
                diameter = std::max(diameter, (P.coords[i] - P.coords[j]).norm());
        double relative = sim.max_deviation / diameter;
        worst = std::max(worst, relative);
        ++shapes;
        if (!sim.same || relative > 1e-6) culprit = name;
    };

    for (const NamedSolid& solid : regular_solids()) run_one(solid.name, solid.P);
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 20; ++i)
        run_one("jittered icosahedron " + std::to_string(i),
                fixtures::jittered_icosahedron(0.05, rng));

    double elapsed = seconds_since(t0);
    bool ok = culprit.empty() && elapsed < 10.0;
    printf("criterion 1: %s round trips on %d shapes, worst relative deviation "
           "%.3g, %.2fs%s%s\n",
           ok ? "PASS" : "FAIL", shapes, worst, elapsed,
           culprit.empty() ? "" : ", first failure: ", culprit.c_str());
    return ok;
}

// 2: the cone system at a valency-n solution has kernel dimension 2n-3,
// cleanly separated in the singular spectrum.
bool criterion_cone_kernels() {
    std::mt19937_64 rng(77);
    bool ok = true;
    double worst_gap = std::numeric_limits<double>::infinity();
    for (int n = 3; n <= 6; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            ConeAngles cone = fixtures::random_cone(n, rng);
            NullityReport r =
                numeric_nullity(jacobian_cone(cone, lift_cone(cone)));
            worst_gap = std::min(worst_gap, r.gap);
            if (r.nullity != 2 * n - 3 || r.gap < 1e3) {
                printf("criterion 2: FAIL valency %d trial %d: kernel %d "
                       "(want %d), gap %.3g\n",
                       n, trial, r.nullity, 2 * n - 3, r.gap);
                ok = false;
            }
        }
    }
    if (ok)
        printf("criterion 2: PASS cone kernels 3,5,7,9 at valency 3..6, 10 "
               "random cones each, worst gap %.3g\n",
               worst_gap);
    return ok;
}

// 3: the assembled cone system over all vertices has kernel 2E + 6g - 6.
// The genus-1 instance is exercised only when a valid embedded torus
// fixture is available; none is shipped (see criterion notes in README).
bool criterion_assembled_kernels() {
    bool ok = true;
    std::string summary;
    for (const NamedSolid& solid : regular_solids()) {
        ExtractedAngles ex = extract_angles(solid.P);
        Membership m = check_membership(solid.P.K, ex.sigma, ex.delta);
        if (!m.member) {
            printf("criterion 3: FAIL %s does not pass membership\n", solid.name);
            return false;
        }
        NullityReport r = numeric_nullity(jacobian_le(solid.P.K, *m.point));
        int want = 2 * solid.P.K.edge_count() - 6;
        summary += std::string(" ") + std::to_string(r.nullity);
        if (r.nullity != want || r.gap < 1e3) {
            printf("criterion 3: FAIL %s assembled kernel %d (want %d), gap %.3g\n",
                   solid.name, r.nullity, want, r.gap);
            ok = false;
        }
    }
    if (ok)
        printf("criterion 3: PASS assembled cone kernels%s on the regular "
               "solids; genus-1 fixture not supplied, optional torus check "
               "skipped\n",
               summary.c_str());
    return ok;
}

// 4: the reduced full system should report kernel E on the regular solids
// and the scale direction should be flat to 1e-6.
bool criterion_full_system() {
    bool ok = true;
    for (const NamedSolid& solid : regular_solids()) {
        const Combinatoric& K = solid.P.K;
        ExtractedAngles ex = extract_angles(solid.P);
        Membership m = check_membership(K, ex.sigma, ex.delta);
        if (!m.member) {
            printf("criterion 4: FAIL %s does not pass membership\n", solid.name);
            return false;
        }
        NullityReport reduced = numeric_nullity(
            jacobian_full_reduced(K, *m.point, default_dropped_faces(K)));
        NullityReport unreduced = numeric_nullity(jacobian_full(K, *m.point));

        VariableLayout L = variable_layout(K);
        Eigen::VectorXd direction = Eigen::VectorXd::Zero(L.total);
        for (int i = 0; i < L.ell_size; ++i)
            direction(L.ell_offset + i) = m.point->ell.ell[i];
        direction.normalize();
        double scale_derivative =
            (jacobian_full(K, *m.point) * direction).cwiseAbs().maxCoeff();

        if (reduced.nullity != K.edge_count() || reduced.gap < 1e3 ||
            scale_derivative >= 1e-6) {
            printf("criterion 4: FAIL %s reduced kernel %d (want %d, gap %.3g); "
                   "unreduced kernel %d; scale derivative %.3g\n",
                   solid.name, reduced.nullity, K.edge_count(), reduced.gap,
                   unreduced.nullity, scale_derivative);
            ok = false;
        }
    }
    if (ok) printf("criterion 4: PASS reduced full-system kernels match E\n");
    return ok;
}

// 5: the flat-cone system has kernel E and length propagation does not
// depend on the base edge.
bool criterion_intrinsic() {
    std::mt19937_64 rng(55);
    bool ok = true;
    double worst_gap = std::numeric_limits<double>::infinity();
    double worst_dev = 0.0;
    for (const NamedSolid& solid : regular_solids()) {
        const Combinatoric& K = solid.P.K;
        ExtractedAngles ex = extract_angles(solid.P);
        NullityReport r =
            numeric_nullity(jacobian_intrinsic(K, ex.ell, ex.sigma));
        worst_gap = std::min(worst_gap, r.gap);
        if (r.nullity != K.edge_count() || r.gap < 1e3) {
            printf("criterion 5: FAIL %s flat-cone kernel %d (want %d), gap %.3g\n",
                   solid.name, r.nullity, K.edge_count(), r.gap);
            ok = false;
        }

        EdgeLengths reference = propagate_lengths(K, ex.sigma, 0, 1.0);
        std::uniform_int_distribution<int> pick(0, K.edge_count() - 1);
        for (int trial = 0; trial < 5; ++trial) {
            int base = pick(rng);
            EdgeLengths other = propagate_lengths(K, ex.sigma, base, 1.0);
            double s = reference.ell[0] / other.ell[0];
            for (int e = 0; e < K.edge_count(); ++e) {
                double dev =
                    std::abs(s * other.ell[e] - reference.ell[e]) / reference.ell[e];
                worst_dev = std::max(worst_dev, dev);
                if (dev > 1e-9) {
                    printf("criterion 5: FAIL %s base edge %d disagrees at edge "
                           "%d by %.3g\n",
                           solid.name, base, e, dev);
                    ok = false;
                }
            }
        }
    }
    if (ok)
        printf("criterion 5: PASS flat-cone kernels equal E, propagation "
               "base-independent (worst gap %.3g, worst deviation %.3g)\n",
               worst_gap, worst_dev);
    return ok;
}

// 6: lifting valid cone angles yields a zero residual and realizing then
// re-extracting returns the input.
bool criterion_lift_identity() {
    std::mt19937_64 rng(99);
    bool ok = true;
    double worst_residual = 0.0, worst_diff = 0.0;
    for (int n : {3, 4, 5}) {
        for (int trial = 0; trial < 100; ++trial) {
            ConeAngles cone = fixtures::random_cone(n, rng);
            ConeChart chart = lift_cone(cone);
            double residual = g_n(cone, chart).cwiseAbs().maxCoeff();
            worst_residual = std::max(worst_residual, residual);

            ConeAngles back = extract_cone_angles(realize_cone(cone, chart));
            double diff = 0.0;
            for (int i = 0; i < n; ++i) {
                diff = std::max(diff, std::abs(back.sigma[i] - cone.sigma[i]));
                diff = std::max(diff, std::abs(back.delta[i] - cone.delta[i]));
            }
            worst_diff = std::max(worst_diff, diff);
            if (residual > 1e-9 || diff > 1e-9) {
                printf("criterion 6: FAIL valency %d trial %d: residual %.3g, "
                       "round-trip difference %.3g\n",
                       n, trial, residual, diff);
                ok = false;
            }
        }
    }
    if (ok)
        printf("criterion 6: PASS 300 lifted cones, worst residual %.3g, worst "
               "round-trip difference %.3g\n",
               worst_residual, worst_diff);
    return ok;
}

// 7: an elimination coloring exists for every adjacent dual node pair of the
// regular solids, found in under five seconds apiece.
bool criterion_colorings() {
    bool ok = true;
    double worst_time = 0.0;
    int searches = 0;
    for (const NamedSolid& solid : regular_solids()) {
        const Combinatoric& K = solid.P.K;
        DualGraph D = dual_graph(K);
        for (int e = 0; e < K.edge_count(); ++e) {
            auto t0 = std::chrono::steady_clock::now();
            ColoringResult r = find_epc_coloring(D, 0, D.edge_nodes[e]);
            double took = seconds_since(t0);
            worst_time = std::max(worst_time, took);
            ++searches;
            bool good = r.found && is_admissible(D, r.coloring) &&
                        (int)r.coloring.arrows.size() == K.edge_count() &&
                        r.coloring.corners.size() == 6 && took < 5.0;
            if (!good) {
                printf("criterion 7: FAIL %s pair (%d,%d): found=%d arrows=%zu "
                       "corners=%zu %.2fs\n",
                       solid.name, D.edge_nodes[e].first, D.edge_nodes[e].second,
                       r.found, r.coloring.arrows.size(), r.coloring.corners.size(),
                       took);
                ok = false;
            }
        }
    }
    if (ok)
        printf("criterion 7: PASS colorings for all %d adjacent pairs, worst "
               "search %.3fs\n",
               searches, worst_time);
    return ok;
}

// 8: no single-coordinate perturbation of magnitude 1e-3 survives the
// membership test at tolerance 1e-6.
bool criterion_perturbations() {
    PolyhedronEmbedding P = fixtures::tetrahedron();
    ExtractedAngles ex = extract_angles(P);
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> coordinate(0, 17);
    std::uniform_int_distribution<int> direction(0, 1);
    int accepted = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        SurfaceAngles sigma = ex.sigma;
        DihedralAngles delta = ex.delta;
        int c = coordinate(rng);
        double bump = direction(rng) ? 1e-3 : -1e-3;
        if (c < 12)
            sigma.sigma[c] += bump;
        else
            delta.delta[c - 12] += bump;
        if (check_membership(P.K, sigma, delta, 1e-6).member) ++accepted;
    }
    bool ok = accepted == 0;
    printf("criterion 8: %s %d of 1000 perturbed inputs accepted\n",
           ok ? "PASS" : "FAIL", accepted);
    return ok;
}

}  // namespace

int main() {
    int failed = 0;
    failed += !criterion_round_trip();
    failed += !criterion_cone_kernels();
    failed += !criterion_assembled_kernels();
    failed += !criterion_full_system();
    failed += !criterion_intrinsic();
    failed += !criterion_lift_identity();
    failed += !criterion_colorings();
    failed += !criterion_perturbations();
    printf("%d of 8 criteria passed\n", 8 - failed);
    return failed;
}
