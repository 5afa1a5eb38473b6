#ifndef FOLDSYM_CHART_HPP
#define FOLDSYM_CHART_HPP

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "foldsym/errors.hpp"

namespace foldsym {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class CoordKind { Linear, Angle };

struct Coord {
    std::string name;
    CoordKind kind = CoordKind::Linear;
    double lo = 0.0;
    double hi = 1.0; // angles always get [0,1); period 1 by convention
};

// A coordinate box with periodic/linear coordinates. One box per manifold
// model; no atlases. If z_index is set, Z = {t = 0} with t the coordinate
// at that index.
class Chart {
public:
    Chart(std::string name, std::vector<Coord> coords,
          std::optional<int> z_index = std::nullopt);

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    const Coord& coord(int i) const { return coords_.at(static_cast<size_t>(i)); }
    const std::vector<Coord>& coords() const { return coords_; }
    int index_of(const std::string& coord_name) const;

    bool has_z() const { return z_index_.has_value(); }
    int z_index() const;
    double z_value(const Vec& p) const { return p[z_index()]; }
    // Length of the defining coordinate's interval.
    double z_range() const;
    bool on_z(const Vec& p, double tol) const;

    // Reduce angle coordinates mod 1; linear coordinates unchanged.
    Vec normalize(Vec p) const;

    bool contains(const Vec& p, double pad = 0.0) const;
    Vec clamp_to_bounds(Vec p, double pad = 0.0) const;

    // Shortest signed representative of b - a in coordinate i.
    double coord_delta(int i, double a, double b) const;
    // Component-wise shortest difference q - p (angles wrapped to (-1/2, 1/2]).
    Vec delta(const Vec& p, const Vec& q) const;

    // Distance between chart points. Defaults to the flat metric with angles
    // embedded as unit-speed circles; gallery charts for spheres install an
    // embedding so that distances degenerate correctly at poles.
    double distance(const Vec& p, const Vec& q) const;
    void set_embedding(std::function<Vec(const Vec&)> embed);
    bool has_embedding() const { return static_cast<bool>(embed_); }
    Vec embed(const Vec& p) const;

    void check_point(const Vec& p) const;

private:
    std::string name_;
    std::vector<Coord> coords_;
    std::optional<int> z_index_;
    std::function<Vec(const Vec&)> embed_;
};

using ChartPtr = std::shared_ptr<const Chart>;

// Convenience builder used across the gallery and tests.
ChartPtr make_chart(std::string name, std::vector<Coord> coords,
                    std::optional<std::string> z_coord = std::nullopt);

} // namespace foldsym

#endif
