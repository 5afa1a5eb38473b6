#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "foldsym/actionangle.hpp"
#include "foldsym/averaging.hpp"
#include "foldsym/build4d.hpp"
#include "foldsym/config_io.hpp"
#include "foldsym/desingularize.hpp"
#include "foldsym/gallery.hpp"
#include "foldsym/origami.hpp"
#include "foldsym/report.hpp"

namespace {

using namespace foldsym;

// Exit-code contract: 0 pass, 1 check failure, 2 usage/config error,
// 3 numerical failure.
constexpr int kPass = 0, kFail = 1, kConfig = 2, kNumerics = 3;

std::string resolve_config_path(const std::string& path) {
    if (path.empty()) return path;
    {
        std::ifstream probe(path);
        if (probe) return path;
    }
    if (const char* dir = std::getenv("FOLDSYM_CONFIG_DIR")) {
        const std::string joined = std::string(dir) + "/" + path;
        std::ifstream probe(joined);
        if (probe) return joined;
    }
    return path;
}

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::string format = "records";
    uint64_t seed = 1;
    double tol = -1.0; // command default when negative
    int samples = -1;
};

Json load_config(const CommonArgs& args) {
    if (args.config_path.empty()) throw ConfigError("--config is required");
    return load_json_file(resolve_config_path(args.config_path));
}

SamplePlan plan_from(const CommonArgs& args, const Json& j, int fallback_interior) {
    SamplePlan plan;
    plan.n_interior = args.samples > 0 ? args.samples
                                       : j.value("samples", fallback_interior);
    plan.n_z = std::max(64, plan.n_interior / 8);
    plan.seed = args.seed;
    return plan;
}

void emit_items(RecordWriter& rw, const std::string& id, const std::vector<CheckItem>& items) {
    for (const auto& it : items) {
        rw.field("record", std::string("check")).field("id", id).field("name", it.name);
        rw.field("value", it.value).field("threshold", it.threshold).field("pass", it.pass);
        if (!it.note.empty()) rw.field("note", "\"" + it.note + "\"");
        rw.end_record();
    }
}

int cmd_validate(const CommonArgs& args) {
    const Json j = load_config(args);
    LoadedSystem ls = load_system(j);
    Tolerances tol;
    if (args.tol > 0) tol.closed = args.tol;
    const ValidationReport rep = validate_form(*ls.form, plan_from(args, j, 2048), tol);
    RecordWriter rw;
    emit_items(rw, ls.source, rep.items);
    rw.field("record", std::string("summary")).field("id", ls.source).field("pass", rep.pass);
    rw.end_record();
    write_output(rw.str(), args.out_path);
    return rep.pass ? kPass : kFail;
}

int cmd_check(const CommonArgs& args) {
    const Json j = load_config(args);
    LoadedSystem ls = load_system(j);
    if (ls.observables.empty())
        throw ConfigError("check: the config declares no observables");
    IntegrableSystem sys(ls.form, ls.observables);
    const SamplePlan plan = plan_from(args, j, 2048);
    const double tol = args.tol > 0 ? args.tol : 1e-8;

    RecordWriter rw;
    bool pass = true;

    const ValidationReport v = validate_form(sys.form(), plan);
    emit_items(rw, ls.source, v.items);
    pass = pass && v.pass;

    if (sys.form().kind() == FormKind::Folded) {
        const auto zs = z_samples(sys.chart(), plan.n_z, plan.seed);
        for (int i = 0; i < sys.n(); ++i) {
            const auto adm = is_folded_function(sys.observable(i), sys.form(), zs);
            rw.field("record", std::string("admissibility")).field("id", ls.source);
            rw.field("observable", static_cast<long>(i)).field("margin", adm.worst_margin);
            rw.field("pass", adm.pass);
            rw.end_record();
            pass = pass && adm.pass;
        }
    }
    if (sys.n() > 1) {
        const auto comm = check_commutation(sys, plan, tol);
        for (const auto& pr : comm.pairs) {
            rw.field("record", std::string("commutation")).field("id", ls.source);
            rw.field("i", static_cast<long>(pr.i)).field("j", static_cast<long>(pr.j));
            rw.field("max_abs_bracket", pr.max_abs).field("tol", comm.tol);
            rw.field("pass", pr.max_abs <= comm.tol);
            rw.end_record();
        }
        pass = pass && comm.pass;
    }
    {
        const auto ind = check_independence(sys, plan);
        rw.field("record", std::string("independence")).field("id", ls.source);
        rw.field("interior_fraction", ind.interior_fraction).field("z_fraction", ind.z_fraction);
        rw.field("threshold", ind.threshold).field("pass", ind.pass);
        rw.field("note", std::string("\"density proxy for the dense-set condition\""));
        rw.end_record();
        pass = pass && ind.pass;
    }
    rw.field("record", std::string("summary")).field("id", ls.source).field("pass", pass);
    rw.end_record();
    write_output(rw.str(), args.out_path);
    return pass ? kPass : kFail;
}

int cmd_flow(const CommonArgs& args) {
    const Json j = load_config(args);
    LoadedSystem ls = load_system(j);
    IntegrableSystem sys(ls.form, ls.observables);
    const Json& fj = j.contains("flow") ? j.at("flow") : Json::object();
    const int field_index = fj.value("observable", 0);
    const double T = fj.value("time", 1.0);
    if (!fj.contains("start")) throw ConfigError("flow: config needs flow.start");
    Vec p0(sys.chart().dim());
    {
        const auto& s = fj.at("start");
        if (static_cast<int>(s.size()) != sys.chart().dim())
            throw ConfigError("flow: start point has wrong dimension");
        for (int i = 0; i < p0.size(); ++i) p0[i] = s[static_cast<size_t>(i)].get<double>();
    }
    if (!sys.chart().contains(sys.chart().normalize(p0)))
        throw ConfigError("flow: start point outside the chart bounds");

    IntegratorOptions iopts;
    if (args.tol > 0) iopts.rel_tol = args.tol;
    const auto& xf = sys.field(field_index);
    const Trajectory traj = integrate_flow([&xf](const Vec& q) { return xf.eval(q); },
                                           sys.chart(), p0, T, iopts);

    std::vector<std::string> header{"time"};
    for (int i = 0; i < sys.chart().dim(); ++i) header.push_back(sys.chart().coord(i).name);
    std::vector<double> f0(static_cast<size_t>(sys.n()));
    for (int i = 0; i < sys.n(); ++i) {
        header.push_back("drift_" + std::to_string(i));
        f0[static_cast<size_t>(i)] =
            sys.observable(i).value(sys.chart(), sys.chart().normalize(p0));
    }
    TableWriter tw(header);
    const size_t stride = std::max<size_t>(1, traj.states.size() / fj.value("max_rows", 2000));
    for (size_t k = 0; k < traj.states.size(); ++k) {
        if (k % stride != 0 && k + 1 != traj.states.size()) continue;
        std::vector<double> row{traj.times[k]};
        const Vec pn = sys.chart().normalize(traj.states[k]);
        for (int i = 0; i < pn.size(); ++i) row.push_back(pn[i]);
        for (int i = 0; i < sys.n(); ++i)
            row.push_back(sys.observable(i).value(sys.chart(), pn) - f0[static_cast<size_t>(i)]);
        tw.row(row);
    }
    write_output(tw.str(), args.out_path);
    return traj.truncated ? kNumerics : kPass;
}

int cmd_actionangle(const CommonArgs& args) {
    const Json j = load_config(args);
    LoadedSystem ls = load_system(j);
    IntegrableSystem sys(ls.form, ls.observables);
    const Json& aj = j.contains("actionangle") ? j.at("actionangle") : Json::object();
    if (!aj.contains("seeds")) throw ConfigError("actionangle: config needs actionangle.seeds");
    std::vector<Vec> seeds;
    for (const auto& sj : aj.at("seeds")) {
        Vec p(sys.chart().dim());
        if (static_cast<int>(sj.size()) != sys.chart().dim())
            throw ConfigError("actionangle: seed has wrong dimension");
        for (int i = 0; i < p.size(); ++i) p[i] = sj[static_cast<size_t>(i)].get<double>();
        seeds.push_back(p);
    }
    ActionAngleOptions opts;
    if (args.tol > 0) opts.uniformize.lattice.tol = args.tol;
    ActionAngleChart chart = action_angle_chart(sys, seeds, opts);

    std::vector<std::string> header;
    for (int i = 0; i < sys.chart().dim(); ++i) header.push_back("b_" + sys.chart().coord(i).name);
    for (int i = 0; i < sys.n(); ++i) header.push_back("sigma_" + std::to_string(i));
    for (int i = 0; i < sys.n(); ++i) header.push_back("theta_" + std::to_string(i));
    for (int i = 0; i < sys.n(); ++i)
        for (int k = 0; k < sys.n(); ++k)
            header.push_back("lambda_" + std::to_string(i) + std::to_string(k));
    TableWriter tw(header);
    for (const auto& b : seeds) {
        std::vector<double> row;
        for (int i = 0; i < b.size(); ++i) row.push_back(b[i]);
        const Vec sigma = chart.actions(b);
        const Vec theta = chart.angles(b);
        const PeriodLattice lat = chart.lattice_at(b);
        for (int i = 0; i < sys.n(); ++i) row.push_back(sigma[i]);
        for (int i = 0; i < sys.n(); ++i) row.push_back(theta[i]);
        for (const auto& v : lat.basis)
            for (int k = 0; k < v.size(); ++k) row.push_back(v[k]);
        tw.row(row);
    }

    Rng rng(args.seed + 13);
    std::vector<Vec> samples;
    if (aj.contains("residual_samples")) {
        for (const auto& sj : aj.at("residual_samples")) {
            Vec p(sys.chart().dim());
            for (int i = 0; i < p.size(); ++i) p[i] = sj[static_cast<size_t>(i)].get<double>();
            samples.push_back(p);
        }
    } else {
        samples.assign(seeds.begin(), seeds.begin() + std::min<size_t>(seeds.size(), 4));
    }
    const double residual = normal_form_residual(sys, chart, samples);

    RecordWriter rw;
    rw.field("record", std::string("actionangle")).field("id", ls.source);
    rw.field("normal_form_residual", residual);
    if (chart.singular_index() >= 0)
        rw.field("modular_period_c", chart.singular_action_coefficient());
    rw.field("pass", residual <= (args.tol > 0 ? args.tol : 1e-5));
    rw.end_record();
    write_output(tw.str() + rw.str(), args.out_path);
    return residual <= (args.tol > 0 ? args.tol : 1e-5) ? kPass : kFail;
}

int cmd_construct(const CommonArgs& args) {
    const Json j = load_config(args);
    if (!j.contains("construct")) throw ConfigError("construct: config needs a 'construct' block");
    const Json& c = j.at("construct");
    const std::string op = c.at("op").get<std::string>();

    if (op == "twisted_b_lift") {
        write_output(twisted_b_lift_config(c.value("n", 2), c.value("c", 1.0)).dump(2) + "\n",
                     args.out_path);
        return kPass;
    }
    if (op == "folded_lift") {
        write_output(folded_lift_config(c.value("n", 2)).dump(2) + "\n", args.out_path);
        return kPass;
    }
    if (op == "desingularize" || op == "build_b_integrable_4d") {
        // Parametric constructions round-trip through the loader.
        LoadedSystem ls = load_system(j); // validates parameters eagerly
        (void)ls;
        Json out;
        out["construct"] = c;
        write_output(out.dump(2) + "\n", args.out_path);
        return kPass;
    }
    if (op == "average") {
        GalleryEntry entry = instantiate(c.value("gallery", "non_b_modelable"));
        const int k = c.value("order", 2);
        const Chart& chart = entry.system.chart();
        ScalarField f = Expression::parse(c.value("f", "h + cos(2*pi*theta)")).bind(chart);
        PointMap half_turn = [k](const Vec& p) {
            Vec q = p;
            q[1] += 1.0 / k;
            return q;
        };
        const AveragingResult res = average_invariant_function(chart, f, half_turn, k);
        RecordWriter rw;
        rw.field("record", std::string("average")).field("order", static_cast<long>(k));
        rw.field("invariance_residual", res.invariance_residual);
        rw.field("non_constancy", res.non_constancy).field("perturbed", res.perturbed);
        rw.end_record();
        write_output(rw.str(), args.out_path);
        return kPass;
    }
    if (op == "obstruction") {
        GalleryEntry entry = instantiate(c.value("gallery", "swap_monodromy"));
        if (!entry.mapping_torus) throw ConfigError("obstruction: entry has no mapping torus");
        const ObstructionReport rep = obstruction_report(*entry.mapping_torus);
        RecordWriter rw;
        rw.field("record", std::string("obstruction")).field("id", entry.id);
        rw.field("verdict", to_string(rep.verdict));
        rw.field("note", "\"" + rep.reason + "\"");
        rw.end_record();
        std::string msg = rw.str();
        if (rep.verdict == Obstruction::Nontrivial)
            msg += "nontrivial - global action-angle obstructed\n";
        write_output(msg, args.out_path);
        return kPass;
    }
    if (op == "delzant") {
        std::string text;
        if (c.contains("template_file")) {
            std::ifstream in(resolve_config_path(c.at("template_file").get<std::string>()));
            if (!in) throw ConfigError("delzant: cannot open template file");
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        } else if (c.contains("template")) {
            text = c.at("template").get<std::string>();
        } else {
            throw ConfigError("delzant: needs template or template_file");
        }
        const DelzantReport rep = delzant_check(parse_origami_template(text));
        RecordWriter rw;
        rw.field("record", std::string("delzant")).field("pass", rep.pass);
        rw.field("failed_vertices", static_cast<long>(rep.failures.size()));
        rw.field("folds_compatible", rep.folds_compatible);
        rw.end_record();
        for (const auto& f : rep.failures) {
            rw.field("record", std::string("delzant_failure"));
            rw.field("polygon", static_cast<long>(f.polygon));
            rw.field("vertex", static_cast<long>(f.vertex));
            rw.field("determinant", static_cast<long>(f.determinant));
            rw.end_record();
        }
        write_output(rw.str(), args.out_path);
        return rep.pass ? kPass : kFail;
    }
    throw ConfigError("unknown construct op '" + op + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"foldsym: integrable systems on folded and b-symplectic manifolds"};
    app.require_subcommand(1);

    CommonArgs args;
    auto add_common = [&args](CLI::App* sub) {
        sub->add_option("--config", args.config_path,
                        "config file (searched in FOLDSYM_CONFIG_DIR too)");
        sub->add_option("--seed", args.seed, "deterministic sampling seed");
        sub->add_option("--tol", args.tol, "override the command tolerance");
        sub->add_option("--samples", args.samples, "override the sample count");
        sub->add_option("--out", args.out_path, "output file (stdout by default)");
        sub->add_option("--format", args.format, "records | tabular");
    };

    auto* validate = app.add_subcommand("validate", "validate a singular form");
    auto* check = app.add_subcommand("check", "commutation + independence + admissibility");
    auto* flow = app.add_subcommand("flow", "integrate a Hamiltonian flow, tabular output");
    auto* actionangle =
        app.add_subcommand("actionangle", "period lattice, actions, angles, residual");
    auto* construct = app.add_subcommand("construct", "emit a constructed system or report");
    for (auto* sub : {validate, check, flow, actionangle, construct}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(args);
        if (check->parsed()) return cmd_check(args);
        if (flow->parsed()) return cmd_flow(args);
        if (actionangle->parsed()) return cmd_actionangle(args);
        if (construct->parsed()) return cmd_construct(args);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NumericsError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
