// landscape-lab: analyses of cost-probability landscapes and local blind
// descent on the bundled problem families (analytic MAX-2-SAT class, TSP
// under 2-opt, Lipschitz-bounded synthetic spaces, binomial-count benchmark).

#include <chrono>
#include <climits>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "landscape/descent.hpp"
#include "landscape/io.hpp"
#include "landscape/kernels.hpp"
#include "landscape/models/benchmark.hpp"
#include "landscape/models/lipschitz.hpp"
#include "landscape/models/sat2.hpp"
#include "landscape/models/tsp.hpp"
#include "landscape/nweight.hpp"
#include "landscape/parallel.hpp"
#include "landscape/rate.hpp"
#include "landscape/sim.hpp"

namespace {

using namespace landscape;
namespace fs = std::filesystem;

constexpr const char* kVersion = "landscape-lab 1.0.0";

struct GlobalOpts {
    std::uint64_t seed = 1;
    std::string out_dir = ".";
    std::string format = "csv";
    unsigned threads = 0;

    io::Format fmt() const { return format == "dat" ? io::Format::dat : io::Format::csv; }
};

// Collects output paths so every command ends with a manifest.
struct Emitter {
    const GlobalOpts& opts;
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    explicit Emitter(const GlobalOpts& g) : opts(g) { fs::create_directories(opts.out_dir); }

    std::string path(const std::string& stem) {
        std::string p = (fs::path(opts.out_dir) / (stem + io::extension(opts.fmt()))).string();
        outputs.push_back(p);
        return p;
    }

    std::string fixed_path(const std::string& name) {
        std::string p = (fs::path(opts.out_dir) / name).string();
        outputs.push_back(p);
        return p;
    }

    void manifest(const std::string& command_line) {
        io::RunManifest m;
        m.command_line = command_line;
        m.seed = opts.seed;
        m.tool_version = kVersion;
        m.outputs = outputs;
        m.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        io::write_manifest(m, (fs::path(opts.out_dir) / "run_manifest.json").string());
    }
};

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

descent::ImpVariant imp_variant(const std::string& name) {
    return name == "normalized" ? descent::ImpVariant::normalized
                                : descent::ImpVariant::truncated_sum;
}

models::BenchmarkClassSpec::Interpolation interpolation(const std::string& name) {
    return name == "plateau" ? models::BenchmarkClassSpec::Interpolation::plateau
                             : models::BenchmarkClassSpec::Interpolation::successive;
}

// ---------------------------------------------------------------------------

void cmd_sat2(Emitter& em) {
    const auto dist = models::sat2_distribution();
    const auto kernel = models::sat2_kernel();
    const auto weights = compute_nweights(dist, kernel);

    io::write_distribution(dist, em.path("sat2_p"), em.opts.fmt());

    {
        io::TableWriter w(em.path("sat2_r17"), {"delta", "r", "posr"}, em.opts.fmt());
        const auto ub = check_unbiased(dist, kernel, weights, 17);
        for (int d = 1; d <= 4; ++d) {
            double posr = 0.0;
            for (const auto& [dd, v] : ub.posr)
                if (dd == d) posr = v;
            w.row({std::to_string(d), io::fmt(weights.r(17, d)), io::fmt(posr)});
        }
        w.close();
    }
    {
        io::TableWriter w(em.path("sat2_rbar"), {"k", "rbar"}, em.opts.fmt());
        for (int k : {20, 17, 14, 11, 8, 5}) w.row({std::to_string(k), io::fmt(weights.rbar(k))});
        w.close();
    }
    {
        io::TableWriter w(em.path("sat2_ta"), {"k", "t", "a"}, em.opts.fmt());
        for (int k : {26, 23, 20, 17, 14, 11, 8}) {
            const double t_k = kernel.pn(k, k) - dist.p(k);
            const double a_k = (p_greater(dist, k) - pn_greater(kernel, k)) +
                               (p_much_greater(dist, k) - pn_much_greater(kernel, k));
            w.row({std::to_string(k), io::fmt_fixed(t_k, 2), io::fmt_fixed(a_k, 2)});
        }
        w.close();
    }
    std::cout << "sat2: k_mod=" << dist.k_mod() << " rbar(17)=" << io::fmt_fixed(weights.rbar(17), 2)
              << "\n";
}

// Variance fraction explained by the best nonincreasing fit (pool-adjacent
// violators); 1 means perfectly nonincreasing.
double nonincreasing_fit_r2(const std::vector<double>& y) {
    if (y.size() < 2) return 1.0;
    std::vector<double> level;
    std::vector<double> weight;
    for (double v : y) {
        level.push_back(-v);  // fit nondecreasing on the negated series
        weight.push_back(1.0);
        while (level.size() > 1 && level[level.size() - 2] > level.back()) {
            const double wsum = weight[weight.size() - 2] + weight.back();
            const double merged =
                (level[level.size() - 2] * weight[weight.size() - 2] +
                 level.back() * weight.back()) /
                wsum;
            level.pop_back();
            weight.pop_back();
            level.back() = merged;
            weight.back() = wsum;
        }
    }
    std::vector<double> fit;
    for (std::size_t i = 0; i < level.size(); ++i)
        fit.insert(fit.end(), static_cast<std::size_t>(weight[i]), -level[i]);
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());
    double ss_tot = 0.0, ss_res = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        ss_tot += (y[i] - mean) * (y[i] - mean);
        ss_res += (y[i] - fit[i]) * (y[i] - fit[i]);
    }
    if (ss_tot <= 0.0) return 1.0;
    return 1.0 - ss_res / ss_tot;
}

struct TspOpts {
    int cities = 10;
    std::string mode = "enumerate";
    std::uint64_t samples = 400000;
    int study = 0;
    std::string instance_file;
};

void cmd_tsp(Emitter& em, const TspOpts& t) {
    if (t.study > 0) {
        io::TableWriter w(em.path("tsp_study"),
                          {"seed", "k_opt", "k_mod", "k_ge", "conditions_hold",
                           "degenerate_levels", "crossover_k"},
                          em.opts.fmt());
        const auto rows = models::tsp_study(t.cities, em.opts.seed, t.study, em.opts.threads);
        int pass = 0;
        for (const auto& r : rows) {
            pass += r.conditions_hold;
            w.row({std::to_string(r.seed), std::to_string(r.k_opt), std::to_string(r.k_mod),
                   std::to_string(r.k_ge), std::to_string(int(r.conditions_hold)),
                   std::to_string(r.degenerate_levels),
                   r.crossover_k == INT_MAX ? std::string("none")
                                            : std::to_string(r.crossover_k)});
        }
        w.close();
        std::cout << "tsp study: conditions hold in " << pass << "/" << rows.size()
                  << " instances\n";
        return;
    }

    models::TspInstance inst = t.instance_file.empty()
                                   ? models::tsp_generate(t.cities, em.opts.seed)
                                   : models::read_instance(t.instance_file);
    models::write_instance(inst, em.fixed_path("tsp_instance.txt"));

    const models::TspLandscape land =
        t.mode == "sample" ? models::tsp_sample(inst, t.samples, em.opts.seed, em.opts.threads)
                           : models::tsp_enumerate(inst, em.opts.threads);
    const auto weights = compute_nweights(land.dist, land.kernel);
    const auto report = check_conditions(land.dist, land.kernel, weights);

    io::write_distribution(land.dist, em.path("tsp_p"), em.opts.fmt());
    {
        io::TableWriter w(em.path("tsp_rbar"), {"k", "rbar", "rbar_support"}, em.opts.fmt());
        for (int k = land.k_opt + 1; k <= land.k_ge; ++k)
            if (weights.has_row(k))
                w.row({std::to_string(k), io::fmt(weights.rbar(k)),
                       io::fmt(weights.rbar_support(k))});
        w.close();
    }
    {
        io::TableWriter w(em.path("tsp_thm1"), {"k", "pn_less", "rbar_times_p_less"},
                          em.opts.fmt());
        for (int k = land.k_opt + 1; k <= land.k_ge; ++k) {
            if (!land.kernel.row_present(k)) continue;
            w.row({std::to_string(k), io::fmt(pn_less(land.kernel, k)),
                   io::fmt(weights.rbar(k) * p_less(land.dist, k))});
        }
        w.close();
    }
    {
        io::TableWriter w(em.path("tsp_conditions"),
                          {"k", "ge", "nsc", "unbiased", "positively_biased", "full_nsc",
                           "thm1_holds", "thm2_holds", "weak_cond_slack"},
                          em.opts.fmt());
        for (const auto& lc : report.levels)
            w.row({std::to_string(lc.k), std::to_string(int(lc.ge)), std::to_string(int(lc.nsc)),
                   std::to_string(int(lc.unbiased)), std::to_string(int(lc.positively_biased)),
                   std::to_string(int(lc.full_nsc)), std::to_string(int(lc.thm1_holds)),
                   std::to_string(int(lc.thm2_holds)), io::fmt(lc.weak_cond_slack)});
        w.close();
    }
    {
        io::TableWriter w(em.path("tsp_rates"), {"k", "e_imp", "en_imp"}, em.opts.fmt());
        for (const auto& pt : rate::rate_curve(land.dist, land.kernel))
            w.row({std::to_string(pt.k), io::fmt(pt.e_imp), io::fmt(pt.en_imp)});
        w.close();
    }

    double trend_r2 = -1.0;
    if (t.mode == "sample") {
        std::vector<double> r_kge;
        io::TableWriter w(em.path("tsp_r_kge"), {"delta", "r"}, em.opts.fmt());
        for (int d = 1; d <= 2 * 24 && d <= weights.max_delta(land.k_ge); ++d) {
            if (!weights.has(land.k_ge, d)) continue;
            r_kge.push_back(weights.r(land.k_ge, d));
            w.row({std::to_string(d), io::fmt(r_kge.back())});
        }
        w.close();
        trend_r2 = nonincreasing_fit_r2(r_kge);
    }
    {
        io::TableWriter w(em.path("tsp_summary"),
                          {"k_opt", "k_mod", "k_ge", "tours", "nweight_trend_r2"}, em.opts.fmt());
        w.row({std::to_string(land.k_opt), std::to_string(land.k_mod), std::to_string(land.k_ge),
               std::to_string(land.tours), trend_r2 < 0 ? std::string("na") : io::fmt(trend_r2)});
        w.close();
    }
    std::cout << "tsp: k_opt=" << land.k_opt << " k_mod=" << land.k_mod << " k_ge=" << land.k_ge
              << " tours=" << land.tours << "\n";
}

struct ToyOpts {
    int kmax = 200;
    int k = 30;
    int t = 15;
    std::vector<int> bounds{1, 5, 10, 50, 200};
    std::string window = "primary";
};

void cmd_toy(Emitter& em, const ToyOpts& t) {
    const auto base = models::uniform_distribution(t.kmax);
    io::TableWriter w1(em.path("toy_pnless"), {"b", "p_less", "pn_less"}, em.opts.fmt());
    io::TableWriter w2(em.path("toy_enimp"), {"b", "e_imp", "en_imp"}, em.opts.fmt());
    io::TableWriter w3(em.path("toy_enimp_target"), {"b", "e_imp", "en_imp"}, em.opts.fmt());
    for (int b : t.bounds) {
        const auto kernel = models::lipschitz_kernel(base, b);
        w1.row({std::to_string(b), io::fmt(p_less(base, t.k)), io::fmt(pn_less(kernel, t.k))});
        const auto one = rate::expected_improvement(base, kernel, t.k);
        w2.row({std::to_string(b), io::fmt(one.e_imp), io::fmt(one.en_imp)});
        const auto tgt = rate::expected_improvement_to_target(base, kernel, t.k, t.t);
        const double en = t.window == "alternate"
                              ? models::lipschitz_en_imp_clamped(base, b, t.k, t.t)
                              : tgt.en_imp;
        w3.row({std::to_string(b), io::fmt(tgt.e_imp), io::fmt(en)});
    }
    w1.close();
    w2.close();
    w3.close();
}

struct BenchmarkOpts {
    int t = 10;
    std::uint64_t n = 50;
    std::vector<int> bounds{1, 3, 5, 7, 9, 11, 13, 15, 17};
    std::string interp = "successive";
    std::string imp = "truncated";
};

void cmd_benchmark(Emitter& em, const BenchmarkOpts& o) {
    models::BenchmarkClassSpec spec;
    spec.interpolation = interpolation(o.interp);
    const auto dist = models::benchmark_distribution(spec);
    io::write_distribution(dist, em.path("benchmark_p"), em.opts.fmt());

    io::TableWriter table(em.path("benchmark_savings"),
                          {"lipschitz_bound", "starting_cost", "savings"}, em.opts.fmt());
    for (int b : o.bounds) {
        const auto kernel = models::lipschitz_kernel(dist, b);
        const auto scan = descent::savings_scan(dist, kernel, o.t,
                                                NeighbourhoodSize::finite(o.n), imp_variant(o.imp));
        io::TableWriter curve(em.path("benchmark_curve_b" + std::to_string(b)), {"k", "savings"},
                              em.opts.fmt());
        for (const auto& [k, sv] : scan.curve) curve.row({std::to_string(k), io::fmt(sv)});
        curve.close();
        table.row({std::to_string(b), std::to_string(scan.best_k),
                   io::fmt_fixed(scan.best_savings, 2)});
    }
    table.close();
}

struct DescentOpts {
    int b = 7;
    std::uint64_t n = 50;
    std::vector<int> targets{0, 5, 10, 15, 20, 25, 30, 35, 40};
    int k = -1;
    int t = -1;
    std::string interp = "successive";
    std::string imp = "truncated";
};

void cmd_descent(Emitter& em, const DescentOpts& o) {
    models::BenchmarkClassSpec spec;
    spec.interpolation = interpolation(o.interp);
    const auto dist = models::benchmark_distribution(spec);
    const auto kernel = models::lipschitz_kernel(dist, o.b);
    const auto n = NeighbourhoodSize::finite(o.n);
    const auto variant = imp_variant(o.imp);

    if (o.k >= 0 && o.t >= 0) {
        const auto res = descent::lbd_steps(dist, kernel, {o.k, o.t, n}, variant);
        io::TableWriter w(em.path("descent_result"),
                          {"k", "t", "blind_steps", "lbd_steps", "savings", "beneficial"},
                          em.opts.fmt());
        w.row({std::to_string(o.k), std::to_string(o.t), io::fmt(res.blind_steps),
               io::fmt(res.lbd_steps), io::fmt(res.savings), std::to_string(int(res.beneficial))});
        w.close();
        io::TableWriter steps(em.path("descent_steps"), {"j", "steps"}, em.opts.fmt());
        for (const auto& [j, s] : res.steps_table) steps.row({std::to_string(j), io::fmt(s)});
        steps.close();
        return;
    }

    io::TableWriter table(em.path("descent_savings"),
                          {"target_cost", "starting_cost", "savings"}, em.opts.fmt());
    for (int t : o.targets) {
        const auto scan = descent::savings_scan(dist, kernel, t, n, variant);
        io::TableWriter curve(em.path("descent_curve_t" + std::to_string(t)), {"k", "savings"},
                              em.opts.fmt());
        for (const auto& [k, sv] : scan.curve) curve.row({std::to_string(k), io::fmt(sv)});
        curve.close();
        table.row({std::to_string(t), std::to_string(scan.best_k),
                   io::fmt_fixed(scan.best_savings, 2)});
    }
    table.close();
}

struct RatesOpts {
    std::string family = "toy";
    int b = 10;
    int kmax = 200;
    int cities = 10;
};

void cmd_rates(Emitter& em, const RatesOpts& o) {
    std::string stem = "rates_" + o.family;
    std::vector<rate::RatePoint> curve;
    if (o.family == "sat2") {
        const auto dist = models::sat2_distribution();
        curve = rate::rate_curve(dist, models::sat2_kernel());
    } else if (o.family == "benchmark") {
        const auto dist = models::benchmark_distribution();
        curve = rate::rate_curve(dist, models::lipschitz_kernel(dist, o.b));
        stem += "_b" + std::to_string(o.b);
    } else if (o.family == "tsp") {
        const auto land =
            models::tsp_enumerate(models::tsp_generate(o.cities, em.opts.seed), em.opts.threads);
        curve = rate::rate_curve(land.dist, land.kernel);
    } else {
        const auto dist = models::uniform_distribution(o.kmax);
        curve = rate::rate_curve(dist, models::lipschitz_kernel(dist, o.b));
        stem += "_b" + std::to_string(o.b);
    }
    io::TableWriter w(em.path(stem), {"k", "e_imp", "en_imp"}, em.opts.fmt());
    for (const auto& pt : curve)
        w.row({std::to_string(pt.k), io::fmt(pt.e_imp), io::fmt(pt.en_imp)});
    w.close();
}

struct SimulateOpts {
    std::string family = "toy";
    int b = 10;
    int kmax = 200;
    int k = 30;
    int t = 10;
    std::uint64_t n = 50;
    std::uint64_t runs = 100000;
    std::uint64_t cap = 10000000;
    int cities = 10;
    std::uint64_t instance_seed = 1;
    bool without_replacement = false;
    std::string trace;
};

void cmd_simulate(Emitter& em, const SimulateOpts& o) {
    sim::SimConfig cfg;
    cfg.runs = o.runs;
    cfg.seed = em.opts.seed;
    cfg.spec = {o.k, o.t, NeighbourhoodSize::finite(o.n)};
    cfg.step_cap = o.cap;

    io::TableWriter w(em.path("simulate_result"),
                      {"metric", "analytic", "simulated", "std_error", "runs", "capped",
                       "within_3_sigma"},
                      em.opts.fmt());
    auto emit = [&](const std::string& name, double analytic, const sim::SimResult& r) {
        w.row({name, io::fmt(analytic), io::fmt(r.mean_steps), io::fmt(r.std_error),
               std::to_string(r.runs), std::to_string(r.capped_runs),
               std::to_string(int(r.agrees_with(analytic)))});
        std::cout << name << ": analytic=" << io::fmt(analytic)
                  << " simulated=" << io::fmt(r.mean_steps) << " +-" << io::fmt(r.std_error)
                  << (r.agrees_with(analytic) ? " [ok]" : " [off]") << "\n";
    };

    if (o.family == "tsp") {
        const auto inst = models::tsp_generate(o.cities, o.instance_seed);
        const auto land = models::tsp_enumerate(inst, em.opts.threads);
        const auto analytic = descent::lbd_steps(land.dist, land.kernel, cfg.spec);
        const auto abstract = sim::simulate_lbd(land.dist, land.kernel, cfg, em.opts.threads);
        const auto concrete =
            sim::simulate_tsp_descent(inst, cfg, o.without_replacement, em.opts.threads);
        emit("lbd_kernel", analytic.lbd_steps, abstract);
        emit("lbd_concrete", analytic.lbd_steps, concrete);
        w.close();
        return;
    }

    const CostDistribution dist = o.family == "benchmark"
                                      ? models::benchmark_distribution()
                                      : models::uniform_distribution(o.kmax);
    const auto kernel = models::lipschitz_kernel(dist, o.b);
    const auto blind = sim::simulate_blind(dist, o.t, cfg, em.opts.threads);
    emit("blind", descent::blind_steps(dist, o.t), blind);
    const auto lbd = sim::simulate_lbd(dist, kernel, cfg, em.opts.threads);
    emit("lbd", descent::lbd_steps(dist, kernel, cfg.spec).lbd_steps, lbd);
    if (!o.trace.empty()) {
        sim::trace_lbd(dist, kernel, cfg, 10, em.fixed_path(o.trace));
    }
    w.close();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cost-landscape analysis and local blind descent toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    if (const char* env = std::getenv("LANDSCAPE_LAB_THREADS")) g.threads = std::atoi(env);
    app.add_option("--seed", g.seed, "global RNG seed");
    app.add_option("--out-dir", g.out_dir, "output directory");
    app.add_option("--format", g.format, "csv or dat")->check(CLI::IsMember({"csv", "dat"}));
    app.add_option("--threads", g.threads, "worker threads (0 = auto)");

    auto* sat2 = app.add_subcommand("sat2", "analytic MAX-2-SAT class tables");

    TspOpts tsp;
    auto* tsp_cmd = app.add_subcommand("tsp", "TSP landscape under 2-opt");
    tsp_cmd->add_option("--cities", tsp.cities, "number of cities");
    tsp_cmd->add_option("--mode", tsp.mode, "enumerate or sample")
        ->check(CLI::IsMember({"enumerate", "sample"}));
    tsp_cmd->add_option("--samples", tsp.samples, "sample count for sample mode");
    tsp_cmd->add_option("--study", tsp.study, "run N seeded instances and report conditions");
    tsp_cmd->add_option("--instance", tsp.instance_file, "read instance from file");

    ToyOpts toy;
    auto* toy_cmd = app.add_subcommand("toy", "uniform toy space improvement tables");
    toy_cmd->add_option("--kmax", toy.kmax, "top of the cost range");
    toy_cmd->add_option("--k", toy.k, "current cost");
    toy_cmd->add_option("--t", toy.t, "target cost");
    toy_cmd->add_option("--bounds", toy.bounds, "cost-difference bounds");
    toy_cmd->add_option("--window", toy.window, "primary or alternate window normalization")
        ->check(CLI::IsMember({"primary", "alternate"}));

    BenchmarkOpts bench;
    auto* bench_cmd = app.add_subcommand("benchmark", "benchmark-class savings by bound");
    bench_cmd->add_option("--t", bench.t, "target cost");
    bench_cmd->add_option("--n", bench.n, "neighbourhood size");
    bench_cmd->add_option("--bounds", bench.bounds, "cost-difference bounds");
    bench_cmd->add_option("--interp", bench.interp, "successive or plateau count interpolation")
        ->check(CLI::IsMember({"successive", "plateau"}));
    bench_cmd->add_option("--imp", bench.imp, "truncated or normalized improvement expectation")
        ->check(CLI::IsMember({"truncated", "normalized"}));

    DescentOpts desc;
    auto* desc_cmd = app.add_subcommand("descent", "benchmark-class savings by target");
    desc_cmd->add_option("--b", desc.b, "cost-difference bound");
    desc_cmd->add_option("--n", desc.n, "neighbourhood size");
    desc_cmd->add_option("--targets", desc.targets, "target costs");
    desc_cmd->add_option("--k", desc.k, "single starting cost (with --t)");
    desc_cmd->add_option("--t", desc.t, "single target cost (with --k)");
    desc_cmd->add_option("--interp", desc.interp, "successive or plateau count interpolation")
        ->check(CLI::IsMember({"successive", "plateau"}));
    desc_cmd->add_option("--imp", desc.imp, "truncated or normalized improvement expectation")
        ->check(CLI::IsMember({"truncated", "normalized"}));

    RatesOpts rates;
    auto* rates_cmd = app.add_subcommand("rates", "one-step improvement curves");
    rates_cmd->add_option("--family", rates.family, "toy, benchmark, sat2 or tsp")
        ->check(CLI::IsMember({"toy", "benchmark", "sat2", "tsp"}));
    rates_cmd->add_option("--b", rates.b, "cost-difference bound");
    rates_cmd->add_option("--kmax", rates.kmax, "top of the toy cost range");
    rates_cmd->add_option("--cities", rates.cities, "TSP city count");

    SimulateOpts simo;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo check of the analytic steps");
    sim_cmd->add_option("--family", simo.family, "toy, benchmark or tsp")
        ->check(CLI::IsMember({"toy", "benchmark", "tsp"}));
    sim_cmd->add_option("--b", simo.b, "cost-difference bound");
    sim_cmd->add_option("--kmax", simo.kmax, "top of the toy cost range");
    sim_cmd->add_option("--k", simo.k, "starting cost");
    sim_cmd->add_option("--t", simo.t, "target cost");
    sim_cmd->add_option("--n", simo.n, "neighbourhood size");
    sim_cmd->add_option("--runs", simo.runs, "simulation runs");
    sim_cmd->add_option("--cap", simo.cap, "per-run step cap");
    sim_cmd->add_option("--cities", simo.cities, "TSP city count");
    sim_cmd->add_option("--instance-seed", simo.instance_seed, "TSP instance seed");
    sim_cmd->add_flag("--without-replacement", simo.without_replacement,
                      "probe concrete tours without replacement");
    sim_cmd->add_option("--trace", simo.trace, "per-run trace CSV (first 10 runs)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Emitter em(g);
        if (*sat2) cmd_sat2(em);
        if (*tsp_cmd) cmd_tsp(em, tsp);
        if (*toy_cmd) cmd_toy(em, toy);
        if (*bench_cmd) cmd_benchmark(em, bench);
        if (*desc_cmd) cmd_descent(em, desc);
        if (*rates_cmd) cmd_rates(em, rates);
        if (*sim_cmd) cmd_simulate(em, simo);
        em.manifest(join_args(argc, argv));
    } catch (const landscape::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
