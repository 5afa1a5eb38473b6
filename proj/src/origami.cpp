#include "foldsym/origami.hpp"

#include <numeric>
#include <sstream>

#include "foldsym/errors.hpp"

namespace foldsym {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw ConfigError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text), 1);
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ConfigError("template: cannot parse rational '" + text + "'");
    }
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

OrigamiTemplate parse_origami_template(const std::string& text) {
    OrigamiTemplate tpl;
    std::istringstream in(text);
    std::string line;
    TemplatePolygon* current = nullptr;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "polygon") {
            tpl.polygons.emplace_back();
            current = &tpl.polygons.back();
        } else if (head == "fold") {
            FoldPair f;
            if (!(ls >> f.polygon_a >> f.edge_a >> f.polygon_b >> f.edge_b))
                throw ConfigError("template line " + std::to_string(lineno) +
                                  ": fold needs 4 indices");
            tpl.folds.push_back(f);
        } else {
            if (!current)
                throw ConfigError("template line " + std::to_string(lineno) +
                                  ": vertex before any 'polygon'");
            std::string ytext;
            if (!(ls >> ytext))
                throw ConfigError("template line " + std::to_string(lineno) +
                                  ": vertex needs two rationals");
            current->vertices.push_back({Rational::parse(head), Rational::parse(ytext)});
        }
    }
    for (const auto& poly : tpl.polygons)
        if (poly.vertices.size() < 3) throw ConfigError("template: polygon with < 3 vertices");
    for (const auto& f : tpl.folds) {
        auto bad = [&](int p, int e) {
            return p < 0 || p >= static_cast<int>(tpl.polygons.size()) || e < 0 ||
                   e >= static_cast<int>(tpl.polygons[static_cast<size_t>(p)].vertices.size());
        };
        if (bad(f.polygon_a, f.edge_a) || bad(f.polygon_b, f.edge_b))
            throw ConfigError("template: fold indices out of range");
    }
    return tpl;
}

std::string format_origami_template(const OrigamiTemplate& tpl) {
    std::ostringstream out;
    for (const auto& poly : tpl.polygons) {
        out << "polygon\n";
        for (const auto& v : poly.vertices) out << v[0].str() << " " << v[1].str() << "\n";
    }
    for (const auto& f : tpl.folds)
        out << "fold " << f.polygon_a << " " << f.edge_a << " " << f.polygon_b << " "
            << f.edge_b << "\n";
    return out.str();
}

namespace {

// Primitive integer direction of the edge from a to b.
std::array<long long, 2> primitive_direction(const std::array<Rational, 2>& a,
                                             const std::array<Rational, 2>& b) {
    const Rational dx = b[0] - a[0];
    const Rational dy = b[1] - a[1];
    // Clear denominators, then divide by the gcd.
    const long long l = std::lcm(dx.den, dy.den);
    long long nx = dx.num * (l / dx.den);
    long long ny = dy.num * (l / dy.den);
    const long long g = std::gcd(nx < 0 ? -nx : nx, ny < 0 ? -ny : ny);
    if (g == 0) throw ConfigError("template: zero-length edge");
    return {nx / g, ny / g};
}

// Squared length with exact rationals, for fold compatibility.
Rational edge_length_sq(const TemplatePolygon& poly, int e) {
    const int n = static_cast<int>(poly.vertices.size());
    const auto& a = poly.vertices[static_cast<size_t>(e)];
    const auto& b = poly.vertices[static_cast<size_t>((e + 1) % n)];
    const Rational dx = b[0] - a[0];
    const Rational dy = b[1] - a[1];
    return Rational(dx.num * dx.num * dy.den * dy.den + dy.num * dy.num * dx.den * dx.den,
                    dx.den * dx.den * dy.den * dy.den);
}

} // namespace

DelzantReport delzant_check(const OrigamiTemplate& tpl) {
    DelzantReport rep;
    for (int pi = 0; pi < static_cast<int>(tpl.polygons.size()); ++pi) {
        const auto& poly = tpl.polygons[static_cast<size_t>(pi)];
        const int n = static_cast<int>(poly.vertices.size());
        for (int v = 0; v < n; ++v) {
            // Vertex v joins edge v-1 (incoming) and edge v (outgoing); skip
            // vertices on a fold edge.
            const int e_in = (v + n - 1) % n, e_out = v;
            bool on_fold = false;
            for (const auto& f : tpl.folds) {
                if ((f.polygon_a == pi && (f.edge_a == e_in || f.edge_a == e_out)) ||
                    (f.polygon_b == pi && (f.edge_b == e_in || f.edge_b == e_out)))
                    on_fold = true;
            }
            if (on_fold) continue;
            const auto d1 = primitive_direction(poly.vertices[static_cast<size_t>(v)],
                                                poly.vertices[static_cast<size_t>((v + 1) % n)]);
            const auto d2 = primitive_direction(poly.vertices[static_cast<size_t>(v)],
                                                poly.vertices[static_cast<size_t>((v + n - 1) % n)]);
            const long long det = d1[0] * d2[1] - d1[1] * d2[0];
            if (det != 1 && det != -1) {
                rep.pass = false;
                rep.failures.push_back({pi, v, det});
            }
        }
    }
    for (const auto& f : tpl.folds) {
        const Rational la = edge_length_sq(tpl.polygons[static_cast<size_t>(f.polygon_a)], f.edge_a);
        const Rational lb = edge_length_sq(tpl.polygons[static_cast<size_t>(f.polygon_b)], f.edge_b);
        if (!(la == lb)) {
            rep.folds_compatible = false;
            rep.pass = false;
        }
    }
    if (!rep.pass && rep.note.empty())
        rep.note = rep.folds_compatible ? "determinant condition fails at listed vertices"
                                        : "fold identification is not length-compatible";
    return rep;
}

OrigamiTemplate apply_unimodular(const OrigamiTemplate& tpl,
                                 const std::array<std::array<long long, 2>, 2>& m,
                                 const std::array<long long, 2>& shift) {
    const long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det != 1 && det != -1) throw ConfigError("apply_unimodular: matrix is not unimodular");
    OrigamiTemplate out = tpl;
    for (auto& poly : out.polygons)
        for (auto& v : poly.vertices) {
            const Rational x = v[0], y = v[1];
            v[0] = Rational(m[0][0] * x.num * y.den + m[0][1] * y.num * x.den +
                                shift[0] * x.den * y.den,
                            x.den * y.den);
            v[1] = Rational(m[1][0] * x.num * y.den + m[1][1] * y.num * x.den +
                                shift[1] * x.den * y.den,
                            x.den * y.den);
        }
    return out;
}

} // namespace foldsym
