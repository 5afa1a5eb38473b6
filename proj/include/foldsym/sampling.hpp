#ifndef FOLDSYM_SAMPLING_HPP
#define FOLDSYM_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "foldsym/chart.hpp"

namespace foldsym {

// Deterministic uniform doubles in [0,1). std::uniform_real_distribution is
// implementation-defined, so reports built on this stay byte-reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next_u64() {
        // splitmix64
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
    }

private:
    uint64_t state_;
};

struct SamplePlan {
    int n_interior = 2048;
    int n_z = 256;
    uint64_t seed = 1;
    double margin = 0.02; // relative inset from linear bounds
};

// Halton points over the chart box (seed leaps the sequence). Angles sample
// their full period; linear coordinates are inset by margin * range.
std::vector<Vec> interior_samples(const Chart& chart, int n, uint64_t seed,
                                  double margin = 0.02);

// Samples on the slice {t = 0}; requires the chart to have a z coordinate.
std::vector<Vec> z_samples(const Chart& chart, int n, uint64_t seed,
                           double margin = 0.02);

// Uniform random points (chart box), for spot checks at random points.
std::vector<Vec> random_points(const Chart& chart, int n, Rng& rng,
                               double margin = 0.02);

} // namespace foldsym

#endif
