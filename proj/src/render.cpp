#include "gamelab/render.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gamelab {

namespace {

// Decimal text of a rational with three fractional digits, rounded half up.
std::string decimal(const Rational& x)
{
    const std::int64_t scaled_num = x.numerator() * 1000;
    std::int64_t v = scaled_num / x.denominator();
    const std::int64_t rem = scaled_num % x.denominator();
    if (rem != 0 && 2 * (rem < 0 ? -rem : rem) >= x.denominator()) {
        v += rem < 0 ? -1 : 1;
    }
    const bool neg = v < 0;
    const std::int64_t a = neg ? -v : v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%lld.%03lld", neg ? "-" : "", static_cast<long long>(a / 1000),
                  static_cast<long long>(a % 1000));
    return buf;
}

std::string rational_text(const Rational& x)
{
    std::ostringstream out;
    out << x.numerator();
    if (x.denominator() != 1) {
        out << '/' << x.denominator();
    }
    return out.str();
}

std::string svg(const PlaneColoring& c, std::size_t p, std::size_t q, const RenderSpec& spec)
{
    const std::uint64_t R = c.view();
    const std::uint64_t cs = spec.cell_size;
    const std::uint64_t size = R * cs;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
        << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    for (std::uint64_t row = 0; row < R; ++row) {
        const std::uint64_t n = R - 1 - row;
        for (std::uint64_t m = 0; m < R; ++m) {
            out << "<rect x=\"" << m * cs << "\" y=\"" << row * cs << "\" width=\"" << cs
                << "\" height=\"" << cs << "\" fill=\"" << (c.black(p, q, m, n) ? "#000" : "#fff")
                << "\"/>\n";
        }
    }
    const auto f = frontier(c, p, q);
    // Cell centres sit at half-integers, kept exact as rationals.
    auto x_of = [&](std::int64_t col) {
        if (col == kUnbounded) {
            return Rational(static_cast<std::int64_t>(size));
        }
        if (col < 0) {
            return Rational(0);
        }
        return Rational(static_cast<std::int64_t>(cs) * (2 * col + 1), 2);
    };
    auto y_of = [&](const Rational& n) {
        return Rational(static_cast<std::int64_t>(size)) - n * static_cast<std::int64_t>(cs);
    };
    if (spec.frontier) {
        out << "<polyline fill=\"none\" stroke=\"#d00\" stroke-width=\"1\" points=\"";
        for (std::uint64_t n = 0; n < R; ++n) {
            out << (n ? " " : "") << decimal(x_of(f[n])) << ','
                << decimal(y_of(Rational(static_cast<std::int64_t>(2 * n + 1), 2)));
        }
        out << "\"/>\n";
    }
    if (spec.fit_line) {
        const BeltFit fit = classify_and_fit(f);
        if (fit.kind == BeltClass::Slanted && !fit.unstable) {
            const Rational mid = (fit.band_lo + fit.band_hi) / 2 + Rational(1, 2);
            const Rational top(static_cast<std::int64_t>(R));
            auto x_at = [&](const Rational& n) {
                return (fit.slope * (n - Rational(1, 2)) + mid) * static_cast<std::int64_t>(cs);
            };
            out << "<line x1=\"" << decimal(x_at(Rational(0))) << "\" y1=\"" << decimal(y_of(Rational(0)))
                << "\" x2=\"" << decimal(x_at(top)) << "\" y2=\"" << decimal(y_of(top))
                << "\" stroke=\"#06c\" stroke-width=\"1\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string safe_name(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
                        ch == '-';
        out += ok ? ch : '-';
    }
    return out;
}

}  // namespace

std::string render_plane(const PlaneColoring& c, std::size_t p, std::size_t q, const RenderSpec& spec)
{
    if (spec.cell_size < 1) {
        throw std::invalid_argument("cell size must be at least 1");
    }
    if (spec.format == ImageFormat::Svg) {
        return svg(c, p, q, spec);
    }
    const std::uint64_t R = c.view();
    const std::uint64_t cs = spec.cell_size;
    std::string out = "P2\n" + std::to_string(R * cs) + ' ' + std::to_string(R * cs) + "\n1\n";
    for (std::uint64_t row = 0; row < R; ++row) {
        const std::uint64_t n = R - 1 - row;
        std::string line;
        for (std::uint64_t m = 0; m < R; ++m) {
            const char px = c.black(p, q, m, n) ? '0' : '1';
            for (std::uint64_t k = 0; k < cs; ++k) {
                if (!line.empty()) {
                    line += ' ';
                }
                line += px;
            }
        }
        line += '\n';
        for (std::uint64_t k = 0; k < cs; ++k) {
            out += line;
        }
    }
    return out;
}

std::string render_ranks(const PlaneColoring& c, std::size_t p, std::size_t q)
{
    const std::uint64_t R = c.view();
    std::string out;
    for (std::uint64_t row = 0; row < R; ++row) {
        const std::uint64_t n = R - 1 - row;
        for (std::uint64_t m = 0; m < R; ++m) {
            const auto r = c.rank(p, q, m, n);
            out += m ? " " : "";
            out += r ? std::to_string(*r) : ".";
        }
        out += '\n';
    }
    return out;
}

std::string fit_summary(const PlaneColoring& c, std::size_t p, std::size_t q)
{
    const BeltFit fit = classify_and_fit(frontier(c, p, q));
    std::string out = belt_class_name(fit.kind);
    if (fit.kind == BeltClass::Slanted) {
        if (fit.unstable) {
            return out + " unstable";
        }
        out += " slope=" + rational_text(fit.slope) + " band=[" + rational_text(fit.band_lo) + "," +
               rational_text(fit.band_hi) + "]";
    }
    if (const auto period = detect_belt_period(c, p, q, fit)) {
        out += " period=(" + std::to_string(period->first) + "," + std::to_string(period->second) + ")";
    } else {
        out += " period=none";
    }
    return out;
}

std::vector<std::string> render_all(const std::vector<std::string>& state_names,
                                    const PlaneColoring& c, const std::string& dir,
                                    const RenderSpec& spec)
{
    namespace fs = std::filesystem;
    if (dir.empty()) {
        throw std::invalid_argument("output directory must not be empty");
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create " + dir + ": " + ec.message());
    }
    auto write = [&](const std::string& name, const std::string& bytes) {
        const fs::path path = fs::path(dir) / name;
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        file << bytes;
        if (!file) {
            throw std::runtime_error("cannot write " + path.string());
        }
    };
    const char* ext = spec.format == ImageFormat::Svg ? "svg" : "pgm";
    std::vector<std::string> files;
    std::set<std::string> used;
    std::string manifest;
    for (std::size_t p = 0; p < c.num_states(); ++p) {
        for (std::size_t q = 0; q < c.num_states(); ++q) {
            std::string name = "plane_" + safe_name(state_names.at(p)) + "_" + safe_name(state_names.at(q));
            if (used.count(name + "." + ext)) {
                name += "_" + std::to_string(p) + "_" + std::to_string(q);
            }
            name += std::string(".") + ext;
            used.insert(name);
            write(name, render_plane(c, p, q, spec));
            files.push_back(name);
            manifest += name + " " + state_names[p] + " " + state_names[q] + " " + fit_summary(c, p, q) + "\n";
        }
    }
    write("manifest.txt", manifest);
    files.push_back("manifest.txt");
    return files;
}

}  // namespace gamelab
