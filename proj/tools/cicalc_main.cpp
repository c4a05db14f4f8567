#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "cicalc/instance.hpp"

using namespace cicalc;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "cicalc 0.1.0";

// exit codes: 0 ok, 1 internal, 2 usage/parse, 3 inconclusive fit,
// 4 genericity failure, 5 theorem-violation alarm, 6 inconclusive cohomology
enum ExitCode {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kInconclusiveFit = 3,
    kGenericity = 4,
    kViolation = 5,
    kInconclusiveCohomology = 6,
};

json deg_json(const Deg& d) {
    if (d.neg_inf) return json("-inf");
    return json(d.value);
}

json provenance(const InstanceSpec& spec, const BuiltInstance& built) {
    json j;
    j["p"] = spec.p;
    j["seed"] = spec.params.seed;
    j["version"] = kVersion;
    j["windows"] = {{"imax", spec.params.i_max},
                    {"nmax", spec.params.n_max},
                    {"cutoff", spec.params.cutoff},
                    {"burn_in_n", spec.params.burn_in_n},
                    {"burn_in_i", spec.params.burn_in_i}};
    j["ideal"] = built.ideal->describe();
    j["module"] = built.module.describe();
    j["ring_dim"] = built.ring->dim();
    j["ring_codim"] = built.ring->codim();
    return j;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

void write_json(const std::filesystem::path& path, const json& j) {
    write_file(path, j.dump(2) + "\n");
}

struct CommandContext {
    InstanceSpec spec;
    BuiltInstance built;
    std::filesystem::path outdir;
};

int run_resolve(CommandContext& ctx) {
    FreeResolution res = minimal_resolution(ctx.built.module, ctx.spec.params.cutoff);
    json j;
    j["provenance"] = provenance(ctx.spec, ctx.built);
    j["betti"] = res.betti_numbers();
    json degs = json::array();
    for (int i = 0; i <= res.cutoff; ++i) degs.push_back(res.degs[size_t(i)]);
    j["generator_degrees"] = degs;
    j["minimal"] = res.minimal;
    write_json(ctx.outdir / "resolve.json", j);
    return kOk;
}

int run_ext_table(CommandContext& ctx, LengthTable* out_table = nullptr) {
    TableOptions opts;
    opts.jobs = ctx.spec.params.jobs;
    LengthTable t = ext_length_table(ctx.built.module, *ctx.built.ideal, ctx.spec.params.i_max,
                                     ctx.spec.params.n_max, opts);
    write_file(ctx.outdir / "ext_table.csv", t.csv());
    json j;
    j["provenance"] = provenance(ctx.spec, ctx.built);
    j["cells"] = t.cells;
    write_json(ctx.outdir / "ext_table.json", j);
    if (out_table) *out_table = t;
    return kOk;
}

int run_psi(CommandContext& ctx) {
    LengthTable t;
    run_ext_table(ctx, &t);
    PsiReport rep;
    try {
        rep = r_invariants_from_table(t, ctx.spec.params.burn_in_n, ctx.spec.params.burn_in_i);
    } catch (const InconclusiveFit& e) {
        json j;
        j["provenance"] = provenance(ctx.spec, ctx.built);
        j["flags"] = {std::string("inconclusive fit: ") + e.what()};
        write_json(ctx.outdir / "psi.json", j);
        return kInconclusiveFit;
    }
    json j;
    j["provenance"] = provenance(ctx.spec, ctx.built);
    json psi = json::array();
    for (const Deg& d : rep.psi) psi.push_back(deg_json(d));
    j["psi"] = psi;
    j["r0"] = deg_json(rep.r0);
    j["r1"] = deg_json(rep.r1);
    j["r"] = deg_json(rep.r);
    j["windows"] = rep.fit_window_starts;
    j["flags"] = rep.flags;
    write_json(ctx.outdir / "psi.json", j);
    if (!rep.tails_ok()) {
        std::cerr << "alarm: psi parity tails failed to stabilize\n";
        return kViolation;
    }
    return kOk;
}

json variety_json(const VarietyIdeal& v) {
    json j;
    json gens = json::array();
    for (const Poly& g : v.gens) gens.push_back(g.str());
    j["generators"] = gens;
    j["dim"] = v.dim;
    j["p"] = v.p;
    j["inconclusive"] = v.inconclusive;
    if (v.stabilization_index >= 0) j["stabilization_index"] = v.stabilization_index;
    if (v.inconclusive) {
        json alt = json::array();
        for (const Poly& g : v.alt_gens) alt.push_back(g.str());
        j["alt_generators"] = alt;
    }
    return j;
}

int run_variety(CommandContext& ctx) {
    VarietyIdeal vm = support_variety(ctx.built.module, ctx.spec.params.burn_in_i - 1,
                                      ctx.spec.params.cutoff);
    IdealVarietyFamily fam = stable_ideal_variety(*ctx.built.ideal, 4,
                                                  ctx.spec.params.burn_in_i - 1,
                                                  ctx.spec.params.cutoff);
    VarietyIdeal tot = total_ideal_variety(*ctx.built.ideal, 4, ctx.spec.params.burn_in_i - 1,
                                           ctx.spec.params.cutoff);
    ComplexityReport cx = complexity(ctx.built.module, ctx.spec.params.burn_in_i - 1,
                                     ctx.spec.params.cutoff);
    json j;
    j["provenance"] = provenance(ctx.spec, ctx.built);
    j["module_variety"] = variety_json(vm);
    j["stable_ideal_variety"] = variety_json(fam.stable);
    json per = json::array();
    for (const auto& v : fam.per_power) per.push_back(variety_json(v));
    j["ideal_variety_per_power"] = per;
    j["total_ideal_variety"] = variety_json(tot);
    j["complexity"] = {{"value", cx.value},
                       {"via_variety", cx.via_variety},
                       {"via_betti", cx.via_betti},
                       {"agreed", cx.agreed}};
    write_json(ctx.outdir / "variety.json", j);
    if (!cx.agreed || vm.inconclusive) {
        std::cerr << "alarm: variety/complexity computations disagree or are inconclusive\n";
        return kViolation;
    }
    return kOk;
}

int run_equivalences(CommandContext& ctx) {
    EquivalenceReport rep = check_equivalences(
        ctx.built.module, *ctx.built.ideal, ctx.spec.params.i_max, ctx.spec.params.n_max,
        ctx.spec.params.burn_in_n, ctx.spec.params.burn_in_i, ctx.spec.params.cutoff);
    json j;
    j["provenance"] = provenance(ctx.spec, ctx.built);
    j["r_is_minus_infinity"] = rep.r_is_minus_infinity;
    j["rowwise_vanishing"] = rep.rowwise_vanishing;
    j["uniform_vanishing"] = rep.uniform_vanishing;
    j["variety_meets_origin_only"] = rep.variety_meets_origin_only;
    j["tor_vanishes_past_index"] = rep.tor_vanishes_past_index;
    j["stabilization_index"] = rep.stabilization_index;
    j["all_equal"] = rep.all_equal;
    j["flags"] = rep.flags;
    write_json(ctx.outdir / "equivalences.json", j);
    if (!rep.all_equal) {
        std::cerr << "alarm: the five vanishing conditions disagree\n";
        return kViolation;
    }
    return kOk;
}

int run_reg_sweep(CommandContext& ctx) {
    int sweep_imax = std::min(ctx.spec.params.i_max, 6);
    SweepReport rep = reg_syzygy_sweep(ctx.built.module, *ctx.built.ideal, sweep_imax);
    json j;
    j["provenance"] = provenance(ctx.spec, ctx.built);
    json regs = json::array();
    for (const Deg& d : rep.reg_values) regs.push_back(deg_json(d));
    j["reg_values"] = regs;
    j["bounded_verdict"] = rep.bounded_verdict;
    j["hypothesis_r_minus_inf"] = rep.hypothesis_r_minus_inf;
    j["hypothesis_dim_stable_le_1"] = rep.hypothesis_dim_stable_le_1;
    j["hypothesis_total_meets_origin"] = rep.hypothesis_total_meets_origin;
    j["flags"] = rep.flags;
    write_json(ctx.outdir / "reg_sweep.json", j);
    // per-degree cohomology dimensions of the module's own graded object
    GradedPresentation G(ctx.built.module, ctx.built.ideal);
    RegReport rr = local_cohomology_ends(G);
    std::ostringstream csv;
    csv << "i\\degree";
    for (int n = rr.scan_lo; n <= rr.scan_hi; ++n) csv << "," << n;
    csv << "\n";
    for (size_t i = 0; i < rr.ends.size(); ++i) {
        csv << i;
        for (size_t col = 0; col < rr.piece_dims.size(); ++col)
            csv << "," << rr.piece_dims[col][i];
        csv << "\n";
    }
    write_file(ctx.outdir / "cohomology.csv", csv.str());
    bool hyp = rep.hypothesis_r_minus_inf || rep.hypothesis_dim_stable_le_1;
    if (hyp && !rep.bounded_verdict) {
        std::cerr << "alarm: boundedness hypothesis holds but the sweep is unbounded\n";
        return kViolation;
    }
    return kOk;
}

int run_artin_rees(CommandContext& ctx) {
    int i_max = std::min(ctx.spec.params.i_max, 4);
    SweepReport sweep = reg_syzygy_sweep(ctx.built.module, *ctx.built.ideal,
                                         std::min(ctx.spec.params.i_max, 6));
    ARReport rep = strong_ar_exponent(ctx.built.module, *ctx.built.ideal, i_max,
                                      ctx.spec.params.n_max, &sweep);
    ARVerification ver =
        verify_ar(ctx.built.module, *ctx.built.ideal, rep.h, i_max, ctx.spec.params.n_max);
    json j;
    j["provenance"] = provenance(ctx.spec, ctx.built);
    j["h_per_level"] = rep.h_per_level;
    j["h"] = rep.h;
    json regs = json::array();
    for (const Deg& d : rep.reg_filtration) regs.push_back(deg_json(d));
    j["reg_filtration"] = regs;
    j["cross_check_ok"] = rep.cross_check_ok;
    j["hypothesis_verified"] = rep.hypothesis_verified;
    j["verification_holds"] = ver.holds;
    j["verification_vacuous"] = ver.vacuous;
    j["transcript"] = ver.transcript;
    j["flags"] = rep.flags;
    write_json(ctx.outdir / "artin_rees.json", j);
    if (!ver.holds || !rep.cross_check_ok) {
        std::cerr << "alarm: artin-rees verification failed\n";
        return kViolation;
    }
    return kOk;
}

int run_approx(CommandContext& ctx) {
    if (ctx.built.parameter_sequence.empty())
        throw ParseError("no parameter sequence available for the approximation");
    std::vector<Poly> xs = {ctx.built.parameter_sequence[0]};
    McmApproxData ap = mcm_approx(ctx.built.module, xs);
    json j;
    j["provenance"] = provenance(ctx.spec, ctx.built);
    j["kernel_proj_dim"] = ap.pd_Y;
    j["approximation_rank"] = ap.V.rank();
    j["target"] = ap.target.describe();
    write_json(ctx.outdir / "approx.json", j);
    return kOk;
}

int run_reduce_cx(CommandContext& ctx) {
    ComplexityReduction red = reduce_complexity(ctx.built.module, ctx.spec.params.cutoff,
                                                ctx.spec.params.seed);
    json j;
    j["provenance"] = provenance(ctx.spec, ctx.built);
    j["attempts"] = red.attempts;
    j["operator_coeffs"] = red.operator_coeffs;
    j["window_start"] = red.window_start;
    j["kernel"] = red.K.describe();
    j["betti_differences"] = red.betti_differences;
    j["syzygy_step_verified"] = red.syzygy_step_verified;
    write_json(ctx.outdir / "reduce_cx.json", j);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kVersion) +
                 " - invariants of modules over graded complete intersections"};
    app.require_subcommand(1);
    std::string input_file, fixture_name, outdir = ".";
    int64_t seed_flag = -1;
    int jobs_flag = 0, imax_flag = 0, nmax_flag = 0, cutoff_flag = 0;
    app.add_option("--input", input_file, "instance description file");
    app.add_option("--fixture", fixture_name, "built-in fixture name");
    app.add_option("--out", outdir, "output directory");
    app.add_option("--seed", seed_flag, "seed override (also CICALC_SEED)");
    app.add_option("--jobs", jobs_flag, "worker cap override");
    app.add_option("--imax", imax_flag, "homological window override");
    app.add_option("--nmax", nmax_flag, "power window override");
    app.add_option("--cutoff", cutoff_flag, "resolution cutoff override");
    bool list_fixtures = false;
    app.add_flag("--list-fixtures", list_fixtures, "print fixture names and exit");

    std::map<std::string, std::function<int(CommandContext&)>> commands = {
        {"resolve", run_resolve},
        {"ext-table", [](CommandContext& c) { return run_ext_table(c); }},
        {"psi", run_psi},
        {"variety", run_variety},
        {"equivalences", run_equivalences},
        {"reg-sweep", run_reg_sweep},
        {"artin-rees", run_artin_rees},
        {"approx", run_approx},
        {"reduce-cx", run_reduce_cx},
    };
    for (auto& [name, fn] : commands)
        app.add_subcommand(name, "run the " + name + " experiment")->fallthrough();

    CLI11_PARSE(app, argc, argv);
    if (list_fixtures) {
        for (const auto& [name, text] : builtin_fixtures()) std::cout << name << "\n";
        return kOk;
    }

    try {
        std::string text;
        if (!input_file.empty()) {
            std::ifstream in(input_file);
            if (!in) {
                std::cerr << "cannot read " << input_file << "\n";
                return kUsage;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        } else if (!fixture_name.empty()) {
            auto it = builtin_fixtures().find(fixture_name);
            if (it == builtin_fixtures().end()) {
                std::cerr << "unknown fixture '" << fixture_name << "'\n";
                return kUsage;
            }
            text = it->second;
        } else {
            std::cerr << "one of --input or --fixture is required\n";
            return kUsage;
        }
        CommandContext ctx;
        ctx.spec = parse_instance(text);
        if (const char* env = std::getenv("CICALC_SEED"); env && seed_flag < 0)
            ctx.spec.params.seed = uint64_t(std::stoll(env));
        if (seed_flag >= 0) ctx.spec.params.seed = uint64_t(seed_flag);
        if (jobs_flag > 0) ctx.spec.params.jobs = jobs_flag;
        if (imax_flag > 0) ctx.spec.params.i_max = imax_flag;
        if (nmax_flag > 0) ctx.spec.params.n_max = nmax_flag;
        if (cutoff_flag > 0) ctx.spec.params.cutoff = cutoff_flag;
        ctx.built = build_instance(ctx.spec);
        ctx.outdir = outdir;
        std::filesystem::create_directories(ctx.outdir);
        for (auto& [name, fn] : commands)
            if (app.get_subcommand(name)->parsed()) return fn(ctx);
        std::cerr << "no command selected\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const InconclusiveFit& e) {
        std::cerr << "inconclusive fit: " << e.what() << "\n";
        return kInconclusiveFit;
    } catch (const GenericityFailure& e) {
        std::cerr << "genericity failure: " << e.what() << "\n";
        return kGenericity;
    } catch (const ComplexityTooLowError& e) {
        std::cerr << "complexity too low: " << e.what() << "\n";
        return kUsage;
    } catch (const InconclusiveCohomology& e) {
        std::cerr << "inconclusive cohomology: " << e.what() << "\n";
        return kInconclusiveCohomology;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
}
