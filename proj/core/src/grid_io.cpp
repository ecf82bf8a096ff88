#include "gnsharp/grid_io.hpp"

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gnsharp {

namespace {

constexpr char binary_magic[8] = {'G', 'N', 'S', 'H', 'G', 'R', 'D', '1'};
constexpr const char* text_magic = "gnsharp-grid 1";

void save_binary(std::ofstream& out, const GridFunction& u) {
    out.write(binary_magic, sizeof(binary_magic));
    const std::uint32_t n = static_cast<std::uint32_t>(u.spec().n());
    const std::uint32_t points = static_cast<std::uint32_t>(u.spec().points_per_axis());
    const double length = u.spec().box_length();
    out.write(reinterpret_cast<const char*>(&n), sizeof(n));
    out.write(reinterpret_cast<const char*>(&points), sizeof(points));
    out.write(reinterpret_cast<const char*>(&length), sizeof(length));
    for (const complex& v : u.samples()) {
        const double re = v.real();
        const double im = v.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof(re));
        out.write(reinterpret_cast<const char*>(&im), sizeof(im));
    }
}

void save_text(std::ofstream& out, const GridFunction& u) {
    char line[80];
    out << text_magic << '\n';
    std::snprintf(line, sizeof(line), "%d %d %.17g\n", u.spec().n(),
                  u.spec().points_per_axis(), u.spec().box_length());
    out << line;
    for (const complex& v : u.samples()) {
        std::snprintf(line, sizeof(line), "%.17g %.17g\n", v.real(), v.imag());
        out << line;
    }
}

GridFunction load_binary(std::ifstream& in) {
    std::uint32_t n = 0;
    std::uint32_t points = 0;
    double length = 0.0;
    in.read(reinterpret_cast<char*>(&n), sizeof(n));
    in.read(reinterpret_cast<char*>(&points), sizeof(points));
    in.read(reinterpret_cast<char*>(&length), sizeof(length));
    if (!in) {
        throw std::runtime_error("grid file: truncated header");
    }
    const GridSpec spec(static_cast<int>(n), static_cast<int>(points), length);
    std::vector<complex> samples(spec.size());
    for (complex& v : samples) {
        double re = 0.0;
        double im = 0.0;
        in.read(reinterpret_cast<char*>(&re), sizeof(re));
        in.read(reinterpret_cast<char*>(&im), sizeof(im));
        if (!in) {
            throw std::runtime_error("grid file: truncated payload");
        }
        v = complex(re, im);
    }
    return GridFunction(spec, std::move(samples));
}

GridFunction load_text(std::ifstream& in) {
    std::string header;
    std::getline(in, header);  // magic line, already checked
    int n = 0;
    int points = 0;
    double length = 0.0;
    in >> n >> points >> length;
    if (!in) {
        throw std::runtime_error("grid file: bad text header");
    }
    const GridSpec spec(n, points, length);
    std::vector<complex> samples(spec.size());
    for (complex& v : samples) {
        double re = 0.0;
        double im = 0.0;
        in >> re >> im;
        if (!in) {
            throw std::runtime_error("grid file: truncated payload");
        }
        v = complex(re, im);
    }
    return GridFunction(spec, std::move(samples));
}

}  // namespace

void save_grid_function(const std::filesystem::path& path, const GridFunction& u,
                        ArrayFormat format) {
    std::ofstream out(path, format == ArrayFormat::binary
                                ? std::ios::binary | std::ios::trunc
                                : std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    if (format == ArrayFormat::binary) {
        save_binary(out, u);
    } else {
        save_text(out, u);
    }
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

GridFunction load_grid_function(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::array<char, sizeof(binary_magic)> magic{};
    in.read(magic.data(), magic.size());
    if (!in) {
        throw std::runtime_error("grid file: too short");
    }
    if (std::memcmp(magic.data(), binary_magic, sizeof(binary_magic)) == 0) {
        return load_binary(in);
    }
    in.close();
    std::ifstream text(path);
    std::string first_line;
    std::getline(text, first_line);
    if (first_line != text_magic) {
        throw std::runtime_error("grid file: unrecognized format");
    }
    text.seekg(0);
    return load_text(text);
}

}  // namespace gnsharp
