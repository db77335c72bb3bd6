#include "polymoduli/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "polymoduli/errors.hpp"

namespace polymoduli {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void fail(const std::string& path, int line, const std::string& what) {
    throw ParseError(path + ":" + std::to_string(line) + ": " + what);
}

// Content lines with comments stripped, paired with their 1-based numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream probe(line);
        std::string token;
        if (probe >> token) out.push_back({number, line});
    }
    return out;
}

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
}

int parse_int(std::istringstream& in, const std::string& path, int line,
              const char* what) {
    int value = 0;
    if (!(in >> value)) fail(path, line, std::string("expected ") + what);
    return value;
}

double parse_double(std::istringstream& in, const std::string& path, int line,
                    const char* what) {
    double value = 0;
    if (!(in >> value) || !std::isfinite(value))
        fail(path, line, std::string("expected ") + what);
    return value;
}

void expect_end(std::istringstream& in, const std::string& path, int line) {
    std::string extra;
    if (in >> extra) fail(path, line, "unexpected trailing token '" + extra + "'");
}

}  // namespace

std::vector<std::array<int, 3>> read_complex_file(const std::string& path) {
    const auto lines = content_lines(path);
    if (lines.empty()) throw ParseError(path + ": empty file");

    auto it = lines.begin();
    std::istringstream header(it->second);
    std::string keyword;
    header >> keyword;
    if (keyword != "complex") fail(path, it->first, "expected `complex V F` header");
    const int V = parse_int(header, path, it->first, "vertex count");
    const int F = parse_int(header, path, it->first, "face count");
    expect_end(header, path, it->first);
    ++it;

    std::vector<std::array<int, 3>> faces;
    int max_vertex = -1;
    for (; it != lines.end(); ++it) {
        std::istringstream in(it->second);
        std::string kind;
        in >> kind;
        if (kind != "f") fail(path, it->first, "expected `f i j k`, got '" + kind + "'");
        std::array<int, 3> face;
        for (int s = 0; s < 3; ++s) {
            face[s] = parse_int(in, path, it->first, "vertex index");
            if (face[s] < 0) fail(path, it->first, "negative vertex index");
            max_vertex = std::max(max_vertex, face[s]);
        }
        expect_end(in, path, it->first);
        faces.push_back(face);
    }
    const int last = lines.back().first;
    if (static_cast<int>(faces.size()) != F)
        fail(path, last, "header declares " + std::to_string(F) + " faces, found " +
                             std::to_string(faces.size()));
    if (max_vertex + 1 != V)
        fail(path, last, "header declares " + std::to_string(V) + " vertices, found " +
                             std::to_string(max_vertex + 1));
    return faces;
}

void write_complex_file(const std::string& path, const Combinatoric& K) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << "complex " << K.vertex_count() << " " << K.face_count() << "\n";
    for (const auto& f : K.faces())
        out << "f " << f[0] << " " << f[1] << " " << f[2] << "\n";
}

std::pair<SurfaceAngles, DihedralAngles> read_angles_file(const std::string& path,
                                                          const Combinatoric& K) {
    const auto lines = content_lines(path);
    if (lines.empty()) throw ParseError(path + ": empty file");

    auto it = lines.begin();
    std::istringstream header(it->second);
    std::string keyword;
    header >> keyword;
    if (keyword != "angles") fail(path, it->first, "expected `angles V E F` header");
    const int V = parse_int(header, path, it->first, "vertex count");
    const int E = parse_int(header, path, it->first, "edge count");
    const int F = parse_int(header, path, it->first, "face count");
    expect_end(header, path, it->first);
    if (V != K.vertex_count() || E != K.edge_count() || F != K.face_count())
        fail(path, it->first, "header sizes do not match the complex");
    ++it;

    std::map<std::array<int, 3>, int> face_of;
    for (int f = 0; f < K.face_count(); ++f) {
        auto fc = K.faces()[f];
        std::sort(fc.begin(), fc.end());
        face_of[fc] = f;
    }

    SurfaceAngles sigma;
    DihedralAngles delta;
    sigma.sigma.assign(3 * K.face_count(), -1.0);
    delta.delta.assign(K.edge_count(), -1.0);

    for (; it != lines.end(); ++it) {
        std::istringstream in(it->second);
        std::string kind;
        in >> kind;
        if (kind == "s") {
            const int i = parse_int(in, path, it->first, "vertex index");
            const int j = parse_int(in, path, it->first, "vertex index");
            const int k = parse_int(in, path, it->first, "vertex index");
            const double value = parse_double(in, path, it->first, "angle value");
            expect_end(in, path, it->first);
            std::array<int, 3> key = {i, j, k};
            std::sort(key.begin(), key.end());
            auto found = face_of.find(key);
            if (found == face_of.end())
                fail(path, it->first, "no face with those three vertices");
            int corner;
            try {
                corner = K.corner_index(found->second, j);
            } catch (const MissingEntry& e) {
                fail(path, it->first, e.what());
            }
            if (!(value > 0.0 && value < kPi))
                fail(path, it->first, "face angle outside (0,pi)");
            if (sigma.sigma[corner] >= 0.0)
                fail(path, it->first, "corner given twice");
            sigma.sigma[corner] = value;
        } else if (kind == "d") {
            const int i = parse_int(in, path, it->first, "vertex index");
            const int j = parse_int(in, path, it->first, "vertex index");
            const double value = parse_double(in, path, it->first, "angle value");
            expect_end(in, path, it->first);
            int e;
            try {
                e = K.edge_index(i, j);
            } catch (const MissingEntry& err) {
                fail(path, it->first, err.what());
            }
            if (!(value > 0.0 && value < 2.0 * kPi))
                fail(path, it->first, "dihedral angle outside (0,2pi)");
            if (delta.delta[e] >= 0.0) fail(path, it->first, "edge given twice");
            delta.delta[e] = value;
        } else {
            fail(path, it->first, "expected an `s` or `d` record, got '" + kind + "'");
        }
    }

    const int last = lines.back().first;
    for (size_t c = 0; c < sigma.sigma.size(); ++c)
        if (sigma.sigma[c] < 0.0)
            fail(path, last, "missing corner " + std::to_string(c));
    for (size_t e = 0; e < delta.delta.size(); ++e)
        if (delta.delta[e] < 0.0)
            fail(path, last, "missing edge " + std::to_string(e));
    return {std::move(sigma), std::move(delta)};
}

void write_angles_file(const std::string& path, const Combinatoric& K,
                       const SurfaceAngles& sigma, const DihedralAngles& delta) {
    if (static_cast<int>(sigma.sigma.size()) != 3 * K.face_count() ||
        static_cast<int>(delta.delta.size()) != K.edge_count())
        throw SizeMismatch("angle data does not fit the complex");
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << "angles " << K.vertex_count() << " " << K.edge_count() << " "
        << K.face_count() << "\n";
    for (int c = 0; c < 3 * K.face_count(); ++c) {
        const Corner& corner = K.corners()[c];
        out << "s " << corner.wing_lo << " " << corner.center << " "
            << corner.wing_hi << " " << format_double(sigma.sigma[c]) << "\n";
    }
    for (int e = 0; e < K.edge_count(); ++e)
        out << "d " << K.edges()[e].first << " " << K.edges()[e].second << " "
            << format_double(delta.delta[e]) << "\n";
}

PolyhedronEmbedding read_obj(const std::string& path) {
    const auto lines = content_lines(path);
    std::vector<Eigen::Vector3d> points;
    std::vector<std::array<int, 3>> faces;
    for (const auto& [number, text] : lines) {
        std::istringstream in(text);
        std::string kind;
        in >> kind;
        if (kind == "v") {
            Eigen::Vector3d p;
            for (int s = 0; s < 3; ++s)
                p(s) = parse_double(in, path, number, "coordinate");
            expect_end(in, path, number);
            points.push_back(p);
        } else if (kind == "f") {
            std::array<int, 3> face;
            for (int s = 0; s < 3; ++s) {
                face[s] = parse_int(in, path, number, "1-based vertex index");
                if (face[s] < 1) fail(path, number, "vertex indices must be positive");
                face[s] -= 1;
            }
            expect_end(in, path, number);
            faces.push_back(face);
        } else {
            fail(path, number, "unsupported record '" + kind + "'");
        }
    }
    const int V = static_cast<int>(points.size());
    for (const auto& f : faces)
        for (int v : f)
            if (v >= V)
                throw ParseError(path + ": face references vertex " +
                                 std::to_string(v + 1) + " of " + std::to_string(V));
    return PolyhedronEmbedding{Combinatoric::from_faces(faces), std::move(points)};
}

void write_obj(const std::string& path, const PolyhedronEmbedding& P) {
    if (static_cast<int>(P.coords.size()) != P.K.vertex_count())
        throw SizeMismatch("embedding size mismatch");
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    for (const auto& p : P.coords)
        out << "v " << format_double(p.x()) << " " << format_double(p.y()) << " "
            << format_double(p.z()) << "\n";
    for (const auto& f : P.K.faces())
        out << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
}

}  // namespace polymoduli
