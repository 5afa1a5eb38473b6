#ifndef FOLDSYM_CONFIG_IO_HPP
#define FOLDSYM_CONFIG_IO_HPP

#include <json.hpp>
#include <optional>

#include "foldsym/system.hpp"

namespace foldsym {

using Json = nlohmann::ordered_json;

// Chart / form / system specifications from a declarative config:
// coordinates (name, kind, bounds), form terms with arithmetic-expression
// coefficients over the coordinates, and observables (smooth expressions or
// b-functions). "gallery": "<id>" and "construct": {...} are shorthands.
ChartPtr chart_from_config(const Json& j);
SingularForm form_from_config(ChartPtr chart, const Json& j);
Observable observable_from_config(const Chart& chart, const Json& j);

struct LoadedSystem {
    FormPtr form;
    std::vector<Observable> observables;
    std::string source; // config | gallery:<id> | construct:<op>
};

LoadedSystem load_system(const Json& j);
IntegrableSystem system_from_config(const Json& j);

Json load_json_file(const std::string& path);

// Explicit config emitters for the expressible constructions.
Json twisted_b_lift_config(int n, double c);
Json folded_lift_config(int n);

} // namespace foldsym

#endif
