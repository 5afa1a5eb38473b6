#include "foldsym/config_io.hpp"

#include <fstream>

#include "foldsym/build4d.hpp"
#include "foldsym/desingularize.hpp"
#include "foldsym/expression.hpp"
#include "foldsym/gallery.hpp"
#include "foldsym/lifts.hpp"

namespace foldsym {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("config parse error in '" + path + "': " + e.what());
    }
    return j;
}

ChartPtr chart_from_config(const Json& j) {
    if (!j.contains("coords")) throw ConfigError("chart config needs 'coords'");
    std::vector<Coord> coords;
    for (const auto& cj : j.at("coords")) {
        Coord c;
        c.name = cj.at("name").get<std::string>();
        const std::string kind = cj.value("kind", "linear");
        if (kind == "angle") {
            c.kind = CoordKind::Angle;
        } else if (kind == "linear") {
            c.kind = CoordKind::Linear;
            c.lo = cj.at("min").get<double>();
            c.hi = cj.at("max").get<double>();
        } else {
            throw ConfigError("chart coordinate kind must be 'linear' or 'angle'");
        }
        coords.push_back(std::move(c));
    }
    std::optional<std::string> z;
    if (j.contains("z_coord")) z = j.at("z_coord").get<std::string>();
    return make_chart(j.value("name", "chart"), std::move(coords), z);
}

namespace {

TwoFormField two_form_from_terms(const Chart& chart, const Json& terms) {
    TwoFormField w;
    for (const auto& t : terms) {
        const int i = chart.index_of(t.at("i").get<std::string>());
        const int k = chart.index_of(t.at("j").get<std::string>());
        auto f = Expression::parse(t.at("coeff").get<std::string>()).bind(chart);
        w.add(i, k, [f](const Vec& p) { return f.value(p); });
    }
    return w;
}

OneFormField one_form_from_terms(const Chart& chart, const Json& terms) {
    OneFormField a;
    for (const auto& t : terms) {
        const int i = chart.index_of(t.at("i").get<std::string>());
        auto f = Expression::parse(t.at("coeff").get<std::string>()).bind(chart);
        a.add(i, [f](const Vec& p) { return f.value(p); });
    }
    return a;
}

} // namespace

SingularForm form_from_config(ChartPtr chart, const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "symplectic")
        return SingularForm::symplectic(chart, two_form_from_terms(*chart, j.at("terms")));
    if (kind == "folded")
        return SingularForm::folded(chart, two_form_from_terms(*chart, j.at("terms")));
    if (kind == "b" || kind == "b-symplectic")
        return SingularForm::b_symplectic(
            chart, one_form_from_terms(*chart, j.at("alpha")),
            j.contains("beta") ? two_form_from_terms(*chart, j.at("beta")) : TwoFormField{});
    throw ConfigError("form kind must be symplectic | folded | b");
}

Observable observable_from_config(const Chart& chart, const Json& j) {
    const std::string type = j.value("type", "smooth");
    const std::string name = j.value("name", "");
    if (type == "smooth")
        return Observable::smooth(Expression::parse(j.at("expr").get<std::string>()).bind(chart),
                                  name.empty() ? j.at("expr").get<std::string>() : name);
    if (type == "bfun")
        return Observable::bfun(
            j.at("c").get<double>(),
            Expression::parse(j.value("g", "0")).bind(chart), name);
    throw ConfigError("observable type must be smooth | bfun");
}

LoadedSystem load_system(const Json& j) {
    LoadedSystem out;
    if (j.contains("gallery")) {
        const std::string id = j.at("gallery").get<std::string>();
        GalleryEntry entry = instantiate(id);
        out.form = entry.system.form_ptr();
        out.observables = entry.system.observables();
        out.source = "gallery:" + id;
        return out;
    }
    if (j.contains("construct")) {
        const Json& c = j.at("construct");
        const std::string op = c.at("op").get<std::string>();
        if (op == "twisted_b_lift") {
            IntegrableSystem sys =
                twisted_b_cotangent_lift(c.value("n", 2), c.value("c", 1.0));
            out.form = sys.form_ptr();
            out.observables = sys.observables();
        } else if (op == "folded_lift") {
            IntegrableSystem sys = folded_cotangent_lift(c.value("n", 2));
            out.form = sys.form_ptr();
            out.observables = sys.observables();
        } else if (op == "desingularize") {
            LoadedSystem base = load_system(c.at("base"));
            const double eps = c.at("epsilon").get<double>();
            out.form = std::make_shared<SingularForm>(desingularize(*base.form, eps));
            for (const auto& o : base.observables)
                out.observables.push_back(
                    desingularize_observable(o, base.form->chart(), eps));
        } else if (op == "build_b_integrable_4d") {
            MappingTorus mt;
            mt.leaf = sphere_chart("leaf_s2", "h", "psi");
            const int k = c.value("order", 2);
            mt.leaf_form.add(0, 1, 1.0);
            mt.monodromy = [k](const Vec& p) {
                Vec q = p;
                q[1] += 1.0 / k;
                return q;
            };
            mt.order = k;
            mt.period_k = c.value("c", 1.0);
            BumpParams bump{c.value("delta", 0.4), c.value("delta_prime", 0.8)};
            Build4dOptions opts;
            opts.modular_period = c.value("c", 1.0);
            if (c.value("variant", "b") == "folded")
                opts.variant = Build4dVariant::DesingularizedFolded;
            Built4d built = build_b_integrable_4d(mt, c.value("epsilon", 0.9), bump, opts);
            out.form = built.system.form_ptr();
            out.observables = built.system.observables();
        } else {
            throw ConfigError("unknown construct op '" + op + "'");
        }
        out.source = "construct:" + op;
        return out;
    }
    ChartPtr chart = chart_from_config(j.at("chart"));
    out.form = std::make_shared<SingularForm>(form_from_config(chart, j.at("form")));
    if (j.contains("observables"))
        for (const auto& oj : j.at("observables"))
            out.observables.push_back(observable_from_config(*chart, oj));
    out.source = "config";
    return out;
}

IntegrableSystem system_from_config(const Json& j) {
    LoadedSystem ls = load_system(j);
    return IntegrableSystem(ls.form, std::move(ls.observables));
}

Json twisted_b_lift_config(int n, double c) {
    Json j;
    j["name"] = "twisted_b_lift";
    Json chart;
    chart["name"] = "twisted_b_lift";
    Json coords = Json::array();
    for (int i = 1; i <= n; ++i)
        coords.push_back({{"name", "theta" + std::to_string(i)}, {"kind", "angle"}});
    for (int i = 1; i <= n; ++i)
        coords.push_back({{"name", "a" + std::to_string(i)},
                          {"kind", "linear"},
                          {"min", -2.0},
                          {"max", 2.0}});
    chart["coords"] = coords;
    chart["z_coord"] = "a1";
    j["chart"] = chart;
    Json form;
    form["kind"] = "b";
    form["alpha"] = Json::array({{{"i", "theta1"}, {"coeff", std::to_string(-c)}}});
    Json beta = Json::array();
    for (int i = 2; i <= n; ++i)
        beta.push_back({{"i", "theta" + std::to_string(i)},
                        {"j", "a" + std::to_string(i)},
                        {"coeff", "1"}});
    form["beta"] = beta;
    j["form"] = form;
    Json obs = Json::array();
    obs.push_back({{"type", "bfun"}, {"c", 1.0}, {"g", "0"}, {"name", "log|a1|"}});
    for (int i = 2; i <= n; ++i)
        obs.push_back({{"type", "smooth"}, {"expr", "a" + std::to_string(i)}});
    j["observables"] = obs;
    return j;
}

Json folded_lift_config(int n) {
    Json j;
    j["name"] = "folded_lift";
    Json chart;
    chart["name"] = "folded_lift";
    Json coords = Json::array();
    for (int i = 1; i <= n; ++i)
        coords.push_back({{"name", "theta" + std::to_string(i)}, {"kind", "angle"}});
    for (int i = 1; i <= n; ++i)
        coords.push_back({{"name", "p" + std::to_string(i)},
                          {"kind", "linear"},
                          {"min", -2.0},
                          {"max", 2.0}});
    chart["coords"] = coords;
    chart["z_coord"] = "p1";
    j["chart"] = chart;
    Json form;
    form["kind"] = "folded";
    Json terms = Json::array();
    terms.push_back({{"i", "theta1"}, {"j", "p1"}, {"coeff", "p1"}});
    for (int i = 2; i <= n; ++i)
        terms.push_back({{"i", "theta" + std::to_string(i)},
                         {"j", "p" + std::to_string(i)},
                         {"coeff", "1"}});
    form["terms"] = terms;
    j["form"] = form;
    Json obs = Json::array();
    obs.push_back({{"type", "smooth"}, {"expr", "p1^2"}, {"name", "p1^2"}});
    for (int i = 2; i <= n; ++i)
        obs.push_back({{"type", "smooth"}, {"expr", "p" + std::to_string(i)}});
    j["observables"] = obs;
    return j;
}

} // namespace foldsym
