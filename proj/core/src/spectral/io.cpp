#include "fbns/spectral/io.hpp"

#include "fbns/error.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace fbns::spectral {

namespace {

constexpr char kMagic[8] = {'F', 'B', 'N', 'S', 'F', 'L', 'D', '1'};

struct Header {
    std::int32_t kind = 0; // 0 surface, 1 half-space
    std::int32_t rep = 0;
    std::int32_t components = 1;
    std::int32_t nh = 0;
    std::int32_t nz = 0;
    std::int32_t scheme = 0;
    double box = 0.0;
    double depth = 0.0;
    std::uint64_t count = 0;
};

template <class T>
void put(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) fail(ErrorKind::invalid_input, "truncated field file");
    return v;
}

void write_header(std::ostream& os, const Header& h) {
    os.write(kMagic, sizeof(kMagic));
    put(os, h.kind);
    put(os, h.rep);
    put(os, h.components);
    put(os, h.nh);
    put(os, h.nz);
    put(os, h.scheme);
    put(os, h.box);
    put(os, h.depth);
    put(os, h.count);
}

Header read_header(std::istream& is) {
    char magic[8];
    is.read(magic, sizeof(magic));
    require(is && std::memcmp(magic, kMagic, sizeof(magic)) == 0, ErrorKind::invalid_input, "not a field file");
    Header h;
    h.kind = get<std::int32_t>(is);
    h.rep = get<std::int32_t>(is);
    h.components = get<std::int32_t>(is);
    h.nh = get<std::int32_t>(is);
    h.nz = get<std::int32_t>(is);
    h.scheme = get<std::int32_t>(is);
    h.box = get<double>(is);
    h.depth = get<double>(is);
    h.count = get<std::uint64_t>(is);
    return h;
}

void write_values(std::ostream& os, const std::vector<cplx>& v) {
    os.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(cplx)));
}

void read_values(std::istream& is, std::vector<cplx>& v) {
    is.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(cplx)));
    if (!is) fail(ErrorKind::invalid_input, "truncated field values");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    require(os.good(), ErrorKind::invalid_input, "cannot open " + path + " for writing");
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    require(is.good(), ErrorKind::invalid_input, "cannot open " + path);
    return is;
}

const char* rep_name(Representation r) { return r == Representation::physical ? "physical" : "spectral"; }

} // namespace

void write_binary(const std::string& path, const HalfSpaceField& f) {
    Header h;
    h.kind = 1;
    h.rep = static_cast<std::int32_t>(f.representation());
    h.components = f.components();
    h.nh = f.hgrid()->n();
    h.nz = f.nz();
    h.scheme = static_cast<std::int32_t>(f.vgrid()->scheme());
    h.box = f.hgrid()->box_length();
    h.depth = f.vgrid()->depth();
    h.count = f.size();
    auto os = open_out(path);
    write_header(os, h);
    write_values(os, f.values());
}

HalfSpaceField read_binary(const std::string& path) {
    auto is = open_in(path);
    const Header h = read_header(is);
    require(h.kind == 1, ErrorKind::invalid_input, "file does not hold a half-space field");
    auto hg = make_hgrid(h.box, h.nh);
    auto vg = make_vgrid(static_cast<VerticalScheme>(h.scheme), h.depth, h.nz);
    HalfSpaceField f(hg, vg, h.components, static_cast<Representation>(h.rep));
    require(h.count == f.size(), ErrorKind::invalid_input, "field header count mismatch");
    read_values(is, f.values());
    return f;
}

void write_binary(const std::string& path, const SurfaceField& f) {
    Header h;
    h.kind = 0;
    h.rep = static_cast<std::int32_t>(f.representation());
    h.nh = f.grid()->n();
    h.box = f.grid()->box_length();
    h.count = f.size();
    auto os = open_out(path);
    write_header(os, h);
    write_values(os, f.values());
}

SurfaceField read_surface_binary(const std::string& path) {
    auto is = open_in(path);
    const Header h = read_header(is);
    require(h.kind == 0, ErrorKind::invalid_input, "file does not hold a surface field");
    SurfaceField f(make_hgrid(h.box, h.nh), static_cast<Representation>(h.rep));
    require(h.count == f.size(), ErrorKind::invalid_input, "field header count mismatch");
    read_values(is, f.values());
    return f;
}

void write_csv(std::ostream& os, const HalfSpaceField& f) {
    const auto& g = *f.hgrid();
    const bool phys = f.representation() == Representation::physical;
    os << "# representation=" << rep_name(f.representation()) << " components=" << f.components()
       << " nh=" << g.n() << " nz=" << f.nz() << " box=" << g.box_length() << " depth=" << f.vgrid()->depth()
       << "\n";
    os << "component,z_index,i1,i2,h1,h2,x3,re,im\n";
    os << std::setprecision(17);
    for (int c = 0; c < f.components(); ++c)
        for (int z = 0; z < f.nz(); ++z)
            for (std::size_t m = 0; m < g.size(); ++m) {
                const int i1 = static_cast<int>(m / g.n());
                const int i2 = static_cast<int>(m % g.n());
                const double h1 = phys ? g.x(i1) : g.wavenumber(i1);
                const double h2 = phys ? g.x(i2) : g.wavenumber(i2);
                const cplx v = f(c, z, m);
                os << c << ',' << z << ',' << i1 << ',' << i2 << ',' << h1 << ',' << h2 << ','
                   << f.vgrid()->node(z) << ',' << v.real() << ',' << v.imag() << '\n';
            }
}

void write_csv(std::ostream& os, const SurfaceField& f) {
    const auto& g = *f.grid();
    const bool phys = f.representation() == Representation::physical;
    os << "# representation=" << rep_name(f.representation()) << " nh=" << g.n() << " box=" << g.box_length()
       << "\n";
    os << "i1,i2,h1,h2,re,im\n";
    os << std::setprecision(17);
    for (std::size_t m = 0; m < g.size(); ++m) {
        const int i1 = static_cast<int>(m / g.n());
        const int i2 = static_cast<int>(m % g.n());
        const double h1 = phys ? g.x(i1) : g.wavenumber(i1);
        const double h2 = phys ? g.x(i2) : g.wavenumber(i2);
        os << i1 << ',' << i2 << ',' << h1 << ',' << h2 << ',' << f[m].real() << ',' << f[m].imag() << '\n';
    }
}

} // namespace fbns::spectral
