#include "flns/field_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "flns/errors.hpp"

namespace flns {
namespace {

// The container is little-endian by contract; this implementation writes
// native byte order and targets little-endian hosts.
void put_u32(std::ostream& out, std::uint32_t v) { out.write(reinterpret_cast<const char*>(&v), 4); }
void put_f64(std::ostream& out, double v) { out.write(reinterpret_cast<const char*>(&v), 8); }

std::uint32_t get_u32(std::istream& in, const char* what) {
    std::uint32_t v = 0;
    if (!in.read(reinterpret_cast<char*>(&v), 4)) throw ConfigError(std::string("field file truncated reading ") + what);
    return v;
}

double get_f64(std::istream& in, const char* what) {
    double v = 0.0;
    if (!in.read(reinterpret_cast<char*>(&v), 8)) throw ConfigError(std::string("field file truncated reading ") + what);
    return v;
}

} // namespace

void write_field(const std::string& path, const SpectralField& f) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out.write("SFL1", 4);
    put_u32(out, 1);
    put_u32(out, static_cast<std::uint32_t>(f.grid.d));
    put_u32(out, static_cast<std::uint32_t>(f.components));
    for (int a = 0; a < f.grid.d; ++a) put_u32(out, static_cast<std::uint32_t>(f.grid.n));
    put_f64(out, f.grid.L);
    for (const Complex& c : f.coeffs) {
        put_f64(out, c.real());
        put_f64(out, c.imag());
    }
    if (!out) throw ConfigError("write failed for '" + path + "'");
}

SpectralField read_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open field file '" + path + "'");

    char magic[4] = {0, 0, 0, 0};
    if (!in.read(magic, 4) || std::memcmp(magic, "SFL1", 4) != 0)
        throw ConfigError("'" + path + "' is not a field file (bad magic)");
    const std::uint32_t version = get_u32(in, "version");
    if (version != 1) throw ConfigError("unsupported field file version " + std::to_string(version));
    const std::uint32_t d = get_u32(in, "dimension");
    if (d < 2 || d > 3) throw ConfigError("field file dimension must be 2 or 3; got " + std::to_string(d));
    const std::uint32_t components = get_u32(in, "components");
    if (components < 1 || components > 16)
        throw ConfigError("field file component count out of range: " + std::to_string(components));
    std::uint32_t n = 0;
    for (std::uint32_t a = 0; a < d; ++a) {
        const std::uint32_t na = get_u32(in, "points per axis");
        if (a == 0)
            n = na;
        else if (na != n)
            throw ConfigError("field file is anisotropic (unsupported): " + std::to_string(n) + " vs " +
                              std::to_string(na));
    }
    const double L = get_f64(in, "box size");

    Grid grid;
    try {
        grid = Grid{static_cast<int>(d), static_cast<int>(n), L};
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("field file header invalid: ") + e.what());
    }

    SpectralField f(grid, static_cast<int>(components));
    for (Complex& c : f.coeffs) {
        const double re = get_f64(in, "coefficient");
        const double im = get_f64(in, "coefficient");
        c = Complex(re, im);
    }
    char extra = 0;
    if (in.read(&extra, 1)) throw ConfigError("field file '" + path + "' has trailing bytes");
    f.refresh_mean_flag();
    return f;
}

} // namespace flns
