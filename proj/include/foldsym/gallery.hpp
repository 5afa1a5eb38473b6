#ifndef FOLDSYM_GALLERY_HPP
#define FOLDSYM_GALLERY_HPP

#include <optional>

#include "foldsym/mapping_torus.hpp"
#include "foldsym/nullline.hpp"
#include "foldsym/system.hpp"

namespace foldsym {

struct GalleryExpectations {
    bool validate_pass = true;
    bool commutation_pass = true;
    bool independence_pass = true;
    std::optional<int> closed_null_orbits;  // exact count, when asserted
    std::optional<bool> all_seeds_close;    // origami-type null fibration
    std::optional<Obstruction> obstruction; // mapping-torus entries
};

// One explicit example with its analytic oracle for cross-checks.
struct GalleryEntry {
    std::string id;
    std::string provenance; // where the construction comes from
    IntegrableSystem system;
    // Closed-form Hamiltonian field of observable 0, when available.
    std::function<Vec(const Vec&)> oracle_field;
    std::optional<MappingTorus> mapping_torus;
    std::vector<Vec> null_seeds; // detector seeds on Z, when relevant
    NullLineOptions null_opts;
    GalleryExpectations expected;
};

std::vector<std::string> gallery_ids();
GalleryEntry instantiate(const std::string& id);

// S^2 chart (h, theta) with the round embedding; poles at the h-bounds.
ChartPtr sphere_chart(const std::string& name, const std::string& h_name = "h",
                      const std::string& angle_name = "theta", double h_extent = 1.0,
                      bool h_is_z = true);

struct ConsolidatedReport {
    std::string id;
    bool pass = true;
    std::vector<CheckItem> items;
    std::string to_records() const; // line-delimited, stable key order
};

// validate_form + admissibility + commutation + independence +
// classify-sample + oracle agreement + entry-specific checks, compared
// against the entry's expected outcomes.
ConsolidatedReport run_all_checks(const GalleryEntry& entry, uint64_t seed = 1);

} // namespace foldsym

#endif
