// Command-line front end: extraction, membership checking, reconstruction,
// dimension reports, elimination-pattern coloring search, and round trips.
//
// Exit codes: 0 success / member, 1 checked-and-false / not found,
// 2 usage or parse error, 3 internal failure.

#include <CLI11.hpp>
#include <Eigen/Core>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>

#include "polymoduli/build.hpp"
#include "polymoduli/coloring.hpp"
#include "polymoduli/complex.hpp"
#include "polymoduli/errors.hpp"
#include "polymoduli/io.hpp"
#include "polymoduli/moduli.hpp"

namespace {

using namespace polymoduli;

// Returns false for a malformed value; unset is fine and leaves the default.
bool apply_thread_cap() {
    const char* raw = std::getenv("POLYMODULI_THREADS");
    if (raw == nullptr) return true;
    char* end = nullptr;
    long threads = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || threads <= 0) {
        std::cerr << "POLYMODULI_THREADS must be a positive integer, got '"
                  << raw << "'\n";
        return false;
    }
    Eigen::setNbThreads(static_cast<int>(threads));
    return true;
}

std::string fmt(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
}

int edge_id_from_pair(const Combinatoric& K, const std::vector<int>& pair) {
    return K.edge_index(pair[0], pair[1]);
}

struct CheckOptions {
    std::string complex_path, angles_path;
    double tol = tol::kResidual;
    std::vector<int> base_edge;
};

int run_check(const CheckOptions& opt) {
    Combinatoric K = Combinatoric::from_faces(read_complex_file(opt.complex_path));
    auto [sigma, delta] = read_angles_file(opt.angles_path, K);
    int base = opt.base_edge.empty() ? 0 : edge_id_from_pair(K, opt.base_edge);
    Membership m = check_membership(K, sigma, delta, opt.tol, base);
    std::cout << "member: " << (m.member ? "true" : "false") << "\n";
    std::cout << "max residual: " << fmt(m.max_residual) << "\n";
    if (!m.member) std::cout << "reason: " << m.detail << "\n";
    return m.member ? 0 : 1;
}

struct ExtractOptions {
    std::string mesh_path, angles_path;
};

int run_extract(const ExtractOptions& opt) {
    PolyhedronEmbedding P = read_obj(opt.mesh_path);
    ExtractedAngles ex = extract_angles(P);
    write_angles_file(opt.angles_path, P.K, ex.sigma, ex.delta);
    std::cout << "vertices: " << P.K.vertex_count()
              << " edges: " << P.K.edge_count()
              << " faces: " << P.K.face_count()
              << " genus: " << P.K.genus() << "\n";
    std::cout << "flat edges: " << ex.flat_edges.size() << "\n";
    std::cout << "wrote " << opt.angles_path << "\n";
    return 0;
}

struct ReconstructOptions {
    std::string complex_path, angles_path, mesh_path;
    double tol = tol::kResidual;
    std::vector<int> base_edge;
};

int run_reconstruct(const ReconstructOptions& opt) {
    Combinatoric K = Combinatoric::from_faces(read_complex_file(opt.complex_path));
    auto [sigma, delta] = read_angles_file(opt.angles_path, K);
    int base = opt.base_edge.empty() ? 0 : edge_id_from_pair(K, opt.base_edge);
    try {
        PolyhedronEmbedding P = reconstruct(K, sigma, delta, opt.tol, base);
        write_obj(opt.mesh_path, P);
        std::cout << "wrote " << opt.mesh_path << "\n";
        return 0;
    } catch (const NotAMember& e) {
        std::cout << "not a member: " << e.what() << "\n";
        return 1;
    }
}

struct ColorOptions {
    std::string complex_path;
    std::vector<int> pair;
};

int run_color(const ColorOptions& opt) {
    Combinatoric K = Combinatoric::from_faces(read_complex_file(opt.complex_path));
    DualGraph D = dual_graph(K);
    std::optional<std::pair<int, int>> pair;
    if (!opt.pair.empty()) pair = std::make_pair(opt.pair[0], opt.pair[1]);
    ColoringResult result = find_epc_coloring(D, K.genus(), pair);
    if (!result.found) {
        std::cout << "no admissible coloring found\n";
        return 1;
    }
    std::cout << format_coloring(D, result.coloring);
    return 0;
}

struct DimsOptions {
    std::vector<std::string> inputs;
    std::vector<int> pair;
    std::vector<int> base_edge;
    double tol = tol::kResidual;
};

std::tuple<Combinatoric, SurfaceAngles, DihedralAngles> load_angle_input(
    const std::vector<std::string>& inputs) {
    if (inputs.size() == 1) {
        PolyhedronEmbedding P = read_obj(inputs[0]);
        ExtractedAngles ex = extract_angles(P);
        return {std::move(P.K), std::move(ex.sigma), std::move(ex.delta)};
    }
    Combinatoric K = Combinatoric::from_faces(read_complex_file(inputs[0]));
    auto [sigma, delta] = read_angles_file(inputs[1], K);
    return {std::move(K), std::move(sigma), std::move(delta)};
}

int run_dims(const DimsOptions& opt) {
    auto [K, sigma, delta] = load_angle_input(opt.inputs);
    int base = opt.base_edge.empty() ? 0 : edge_id_from_pair(K, opt.base_edge);
    Membership m = check_membership(K, sigma, delta, opt.tol, base);
    if (!m.member) {
        std::cout << "not a member: " << m.detail << "\n";
        return 1;
    }
    std::optional<std::pair<int, int>> dropped;
    if (!opt.pair.empty()) dropped = std::make_pair(opt.pair[0], opt.pair[1]);
    DimensionReport report = verify_dimensions(K, *m.point, dropped);
    std::cout << format_dimension_report(report);
    return report.all_ok() ? 0 : 1;
}

struct RoundtripOptions {
    std::string mesh_in, mesh_out;
    double tol = tol::kResidual;
};

int run_roundtrip(const RoundtripOptions& opt) {
    PolyhedronEmbedding P = read_obj(opt.mesh_in);
    ExtractedAngles ex = extract_angles(P);
    Membership m = check_membership(P.K, ex.sigma, ex.delta, opt.tol);
    if (!m.member) {
        std::cout << "extracted angles rejected: " << m.detail << "\n";
        return 1;
    }
    PolyhedronEmbedding Q = reconstruct(P.K, ex.sigma, ex.delta, opt.tol);
    if (!opt.mesh_out.empty()) {
        write_obj(opt.mesh_out, Q);
        std::cout << "wrote " << opt.mesh_out << "\n";
    }
    SimilarityResult sim = similarity_compare(Q, P);
    std::cout << "same shape: " << (sim.same ? "true" : "false") << "\n";
    std::cout << "scale: " << fmt(sim.scale) << "\n";
    std::cout << "max deviation: " << fmt(sim.max_deviation) << "\n";
    return sim.same ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (!apply_thread_cap()) return 2;

    CLI::App app{"Moduli of triangulated polyhedra: angle extraction, membership,"
                 " reconstruction, dimension reports, colorings"};
    app.require_subcommand(1);

    CheckOptions check_opt;
    CLI::App* check = app.add_subcommand(
        "check", "Test whether angle data admits a polyhedral realization");
    check->add_option("complex", check_opt.complex_path, "complex file")->required();
    check->add_option("angles", check_opt.angles_path, "angles file")->required();
    check->add_option("--tol", check_opt.tol, "residual tolerance");
    check->add_option("--base-edge", check_opt.base_edge,
                      "vertex pair of the unit-length base edge")->expected(2);

    ExtractOptions extract_opt;
    CLI::App* extract = app.add_subcommand(
        "extract", "Read a triangle mesh and write its angle data");
    extract->add_option("mesh", extract_opt.mesh_path, "input OBJ mesh")->required();
    extract->add_option("angles", extract_opt.angles_path, "output angles file")
        ->required();

    ReconstructOptions rec_opt;
    CLI::App* rec = app.add_subcommand(
        "reconstruct", "Rebuild a mesh from valid angle data");
    rec->add_option("complex", rec_opt.complex_path, "complex file")->required();
    rec->add_option("angles", rec_opt.angles_path, "angles file")->required();
    rec->add_option("mesh", rec_opt.mesh_path, "output OBJ mesh")->required();
    rec->add_option("--tol", rec_opt.tol, "residual tolerance");
    rec->add_option("--base-edge", rec_opt.base_edge,
                    "vertex pair of the unit-length base edge")->expected(2);

    ColorOptions color_opt;
    CLI::App* color = app.add_subcommand(
        "color", "Search for an elimination-pattern coloring of the dual graph");
    color->add_option("complex", color_opt.complex_path, "complex file")->required();
    color->add_option("--pair", color_opt.pair,
                      "adjacent face pair carrying the six corners")->expected(2);

    DimsOptions dims_opt;
    CLI::App* dims = app.add_subcommand(
        "dims", "Verify the dimension formulas at a solution point");
    dims->add_option("input", dims_opt.inputs,
                     "either one OBJ mesh or a complex file plus an angles file")
        ->expected(1, 2)->required();
    dims->add_option("--pair", dims_opt.pair, "dropped face pair")->expected(2);
    dims->add_option("--base-edge", dims_opt.base_edge,
                     "vertex pair of the unit-length base edge")->expected(2);
    dims->add_option("--tol", dims_opt.tol, "residual tolerance");

    RoundtripOptions round_opt;
    CLI::App* round = app.add_subcommand(
        "roundtrip", "Extract angles, reconstruct, and compare shapes");
    round->add_option("mesh", round_opt.mesh_in, "input OBJ mesh")->required();
    round->add_option("out", round_opt.mesh_out, "optional output OBJ mesh");
    round->add_option("--tol", round_opt.tol, "residual tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*check) return run_check(check_opt);
        if (*extract) return run_extract(extract_opt);
        if (*rec) return run_reconstruct(rec_opt);
        if (*color) return run_color(color_opt);
        if (*dims) return run_dims(dims_opt);
        if (*round) return run_roundtrip(round_opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
