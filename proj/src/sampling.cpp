#include "foldsym/sampling.hpp"

namespace foldsym {

namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

double halton(uint64_t index, int base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % static_cast<uint64_t>(base));
        index /= static_cast<uint64_t>(base);
    }
    return r;
}

std::vector<Vec> halton_box(const Chart& chart, int n, uint64_t seed, double margin,
                            bool z_slice) {
    const int d = chart.dim();
    const uint64_t leap = 1 + seed * 7919ull;
    std::vector<Vec> pts;
    pts.reserve(static_cast<size_t>(n));
    const int zi = z_slice ? chart.z_index() : -1;
    for (int k = 0; k < n; ++k) {
        Vec p(d);
        int axis = 0;
        for (int i = 0; i < d; ++i) {
            if (i == zi) {
                p[i] = 0.0;
                continue;
            }
            const double u = halton(leap + static_cast<uint64_t>(k) * 127ull + 1ull,
                                    kPrimes[axis % 8]) ;
            const Coord& c = chart.coord(i);
            if (c.kind == CoordKind::Angle) {
                p[i] = u;
            } else {
                const double pad = margin * (c.hi - c.lo);
                p[i] = c.lo + pad + u * (c.hi - c.lo - 2 * pad);
            }
            ++axis;
        }
        pts.push_back(p);
    }
    return pts;
}

} // namespace

std::vector<Vec> interior_samples(const Chart& chart, int n, uint64_t seed, double margin) {
    return halton_box(chart, n, seed, margin, false);
}

std::vector<Vec> z_samples(const Chart& chart, int n, uint64_t seed, double margin) {
    return halton_box(chart, n, seed, margin, true);
}

std::vector<Vec> random_points(const Chart& chart, int n, Rng& rng, double margin) {
    const int d = chart.dim();
    std::vector<Vec> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        Vec p(d);
        for (int i = 0; i < d; ++i) {
            const Coord& c = chart.coord(i);
            if (c.kind == CoordKind::Angle) {
                p[i] = rng.uniform();
            } else {
                const double pad = margin * (c.hi - c.lo);
                p[i] = rng.uniform(c.lo + pad, c.hi - pad);
            }
        }
        pts.push_back(p);
    }
    return pts;
}

} // namespace foldsym
