#ifndef FOLDSYM_ORIGAMI_HPP
#define FOLDSYM_ORIGAMI_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace foldsym {

// Exact rational for template vertices.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    static Rational parse(const std::string& text);

    Rational operator-(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

struct TemplatePolygon {
    std::vector<std::array<Rational, 2>> vertices; // counterclockwise
};

struct FoldPair {
    int polygon_a = 0, edge_a = 0;
    int polygon_b = 0, edge_b = 0;
};

// 2d origami template: polygons with rational vertices plus fold-edge
// identifications (edge i joins vertex i to vertex i+1).
struct OrigamiTemplate {
    std::vector<TemplatePolygon> polygons;
    std::vector<FoldPair> folds;
};

// Plain-text template format:
//   polygon
//   0/1 0/1
//   1/1 0/1
//   ...
//   fold <poly_a> <edge_a> <poly_b> <edge_b>
OrigamiTemplate parse_origami_template(const std::string& text);
std::string format_origami_template(const OrigamiTemplate& tpl);

struct DelzantVertexFailure {
    int polygon = 0;
    int vertex = 0;
    long long determinant = 0;
};

struct DelzantReport {
    bool pass = true;
    std::vector<DelzantVertexFailure> failures;
    bool folds_compatible = true;
    std::string note;
};

// At each non-fold vertex the primitive integer edge directions must form a
// lattice basis (determinant +-1); fold pairs must identify edges of equal
// length.
DelzantReport delzant_check(const OrigamiTemplate& tpl);

// Apply an integer unimodular map (and integer translation) to the template.
OrigamiTemplate apply_unimodular(const OrigamiTemplate& tpl,
                                 const std::array<std::array<long long, 2>, 2>& m,
                                 const std::array<long long, 2>& shift = {0, 0});

} // namespace foldsym

#endif
