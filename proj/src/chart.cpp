#include "foldsym/chart.hpp"

#include <cmath>

namespace foldsym {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Chart::Chart(std::string name, std::vector<Coord> coords, std::optional<int> z_index)
    : name_(std::move(name)), coords_(std::move(coords)), z_index_(z_index) {
    const int d = dim();
    if (d < 2 || d > 8 || d % 2 != 0)
        throw DimensionError("chart '" + name_ + "': dimension must be even and in [2,8], got " +
                             std::to_string(d));
    for (auto& c : coords_) {
        if (c.kind == CoordKind::Angle) {
            c.lo = 0.0;
            c.hi = 1.0;
        } else if (!(c.lo < c.hi)) {
            throw ConfigError("chart '" + name_ + "': empty interval for coordinate " + c.name);
        }
    }
    for (size_t i = 0; i < coords_.size(); ++i)
        for (size_t j = i + 1; j < coords_.size(); ++j)
            if (coords_[i].name == coords_[j].name)
                throw ConfigError("chart '" + name_ + "': duplicate coordinate name '" +
                                  coords_[i].name + "'");
    if (z_index_) {
        if (*z_index_ < 0 || *z_index_ >= d)
            throw ConfigError("chart '" + name_ + "': z_coord index out of range");
        const Coord& zc = coords_[static_cast<size_t>(*z_index_)];
        if (zc.kind != CoordKind::Linear)
            throw ConfigError("chart '" + name_ + "': defining coordinate of Z must be linear");
        if (!(zc.lo < 0.0 && 0.0 < zc.hi))
            throw ConfigError("chart '" + name_ + "': 0 must lie in the interval of the defining coordinate");
    }
}

int Chart::index_of(const std::string& coord_name) const {
    for (int i = 0; i < dim(); ++i)
        if (coords_[static_cast<size_t>(i)].name == coord_name) return i;
    throw ConfigError("chart '" + name_ + "': no coordinate named '" + coord_name + "'");
}

int Chart::z_index() const {
    if (!z_index_) throw ConfigError("chart '" + name_ + "': no defining coordinate of Z is set");
    return *z_index_;
}

double Chart::z_range() const {
    const Coord& zc = coords_[static_cast<size_t>(z_index())];
    return zc.hi - zc.lo;
}

bool Chart::on_z(const Vec& p, double tol) const {
    return std::abs(z_value(p)) <= tol;
}

Vec Chart::normalize(Vec p) const {
    check_point(p);
    for (int i = 0; i < dim(); ++i) {
        if (coords_[static_cast<size_t>(i)].kind == CoordKind::Angle) {
            double v = p[i] - std::floor(p[i]);
            if (v >= 1.0) v -= 1.0; // floor rounding at the seam
            p[i] = v;
        }
    }
    return p;
}

bool Chart::contains(const Vec& p, double pad) const {
    check_point(p);
    for (int i = 0; i < dim(); ++i) {
        const Coord& c = coords_[static_cast<size_t>(i)];
        if (c.kind == CoordKind::Angle) continue;
        if (p[i] < c.lo + pad || p[i] > c.hi - pad) return false;
    }
    return true;
}

Vec Chart::clamp_to_bounds(Vec p, double pad) const {
    check_point(p);
    for (int i = 0; i < dim(); ++i) {
        const Coord& c = coords_[static_cast<size_t>(i)];
        if (c.kind == CoordKind::Angle) continue;
        p[i] = std::min(std::max(p[i], c.lo + pad), c.hi - pad);
    }
    return p;
}

double Chart::coord_delta(int i, double a, double b) const {
    double d = b - a;
    if (coords_[static_cast<size_t>(i)].kind == CoordKind::Angle) {
        d -= std::round(d);
    }
    return d;
}

Vec Chart::delta(const Vec& p, const Vec& q) const {
    check_point(p);
    check_point(q);
    Vec d(dim());
    for (int i = 0; i < dim(); ++i) d[i] = coord_delta(i, p[i], q[i]);
    return d;
}

double Chart::distance(const Vec& p, const Vec& q) const {
    if (embed_) return (embed(p) - embed(q)).norm();
    return delta(p, q).norm();
}

void Chart::set_embedding(std::function<Vec(const Vec&)> embed) {
    embed_ = std::move(embed);
}

Vec Chart::embed(const Vec& p) const {
    if (embed_) return embed_(p);
    // Default: angles on unit-speed circles, linear coordinates as-is.
    int na = 0;
    for (const auto& c : coords_)
        if (c.kind == CoordKind::Angle) ++na;
    Vec e(dim() + na);
    int k = 0;
    for (int i = 0; i < dim(); ++i) {
        if (coords_[static_cast<size_t>(i)].kind == CoordKind::Angle) {
            e[k++] = std::cos(kTwoPi * p[i]) / kTwoPi;
            e[k++] = std::sin(kTwoPi * p[i]) / kTwoPi;
        } else {
            e[k++] = p[i];
        }
    }
    return e;
}

void Chart::check_point(const Vec& p) const {
    if (p.size() != dim())
        throw DimensionError("chart '" + name_ + "': point has length " +
                             std::to_string(p.size()) + ", expected " + std::to_string(dim()));
}

ChartPtr make_chart(std::string name, std::vector<Coord> coords,
                    std::optional<std::string> z_coord) {
    std::optional<int> zi;
    if (z_coord) {
        for (size_t i = 0; i < coords.size(); ++i)
            if (coords[i].name == *z_coord) zi = static_cast<int>(i);
        if (!zi) throw ConfigError("make_chart: unknown z coordinate '" + *z_coord + "'");
    }
    return std::make_shared<Chart>(std::move(name), std::move(coords), zi);
}

} // namespace foldsym
