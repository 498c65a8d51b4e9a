#include "commands.hpp"
#include "object_spec.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace vercat;
using namespace vercat::cli;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, budget = 3 };

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Computations in Rep(Z/p), the Verlinde category Ver_p and sVec_2"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "human", out_path, cache_dir;
    std::size_t max_entries = std::size_t{1} << 20;
    bool no_cache = false;
    std::uint64_t seed = 42;
    std::size_t trials = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--out", out_path, "Write the report to this file instead of stdout");
    app.add_option("--max-entries", max_entries, "Matrix-entry budget per intermediate");
    app.add_option("--cache-dir", cache_dir, "Result cache directory (default: $VERLINDE_CACHE_DIR)");
    app.add_flag("--no-cache", no_cache, "Disable the result cache");
    app.add_option("--seed", seed, "Seed for random trials");
    app.add_option("--trials", trials, "Number of random trials (default depends on the check)");

    std::uint64_t p = 5;
    std::size_t l = 1, r = 1, degree = 2, max_degree = 6;
    bool oracle = false;
    std::string object, ambient = "verlinde", report = "hilbert", module = "W", sub, amb = "W";
    VerifyOptions vo;

    auto* fusion = app.add_subcommand("fusion", "Fusion rule L_l (x) L_r in Ver_p");
    fusion->add_option("--p", p, "Prime")->required();
    fusion->add_option("--l", l, "Left simple index")->required();
    fusion->add_option("--r", r, "Right simple index")->required();
    fusion->add_flag("--oracle", oracle, "Cross-check through Jordan decomposition");

    auto* sympow = app.add_subcommand("sympow", "Symmetric power S^m(X)");
    sympow->add_option("--p", p, "Prime")->required();
    sympow->add_option("--object", object, "Object, e.g. 1+2*L3")->required();
    sympow->add_option("--degree", degree, "Degree m")->required();
    sympow->add_option("--ambient", ambient, "Where to compute")->check(CLI::IsMember({"repzp", "verlinde", "both"}));

    auto* symalg = app.add_subcommand("symalg", "Symmetric algebra S(X) up to a degree");
    symalg->add_option("--p", p, "Prime")->required();
    symalg->add_option("--object", object, "Object, e.g. 1+L2")->required();
    symalg->add_option("--max-degree", max_degree, "Truncation degree");
    symalg->add_option("--report", report, "Report kind")
        ->check(CLI::IsMember({"hilbert", "invariants", "generators", "module-finiteness"}));

    auto* sv = app.add_subcommand("svec2", "Symmetric algebras in sVec_2");
    sv->require_subcommand(1);
    auto* sv_sym = sv->add_subcommand("sympow", "Degree of S(X)");
    sv_sym->add_option("--module", module, "Module, e.g. W+1");
    sv_sym->add_option("--degree", degree, "Degree")->required();
    auto* sv_four = sv->add_subcommand("fourth-power", "Random checks of the fourth-power identities");
    sv_four->add_option("--module", module, "Module, e.g. W+1");
    sv_four->add_option("--max-degree", max_degree, "Truncation degree")->default_val(8);
    auto* sv_inj = sv->add_subcommand("injectivity", "Is S(U) -> S(W) injective?");
    sv_inj->add_option("--sub", sub, "Basis vectors of the ambient spanning U, e.g. y")->required();
    sv_inj->add_option("--amb", amb, "Ambient module");
    sv_inj->add_option("--max-degree", max_degree, "Truncation degree");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", vo.suite, "Suite")
        ->check(CLI::IsMember({"all", "fusion", "sympow", "invariants", "svec2", "char0", "sympow-comparison"}));
    verify->add_option("--p-max", vo.p_max, "Largest prime in the grids");
    verify->add_option("--max-degree", vo.max_degree, "Truncation degree of the char 0 demo");
    verify->add_option("--mutant", vo.mutant, "Corrupt the fusion formula (negative control)")
        ->check(CLI::IsMember({"drop-p-minus-r"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    Context ctx;
    ctx.budget.max_entries = max_entries;
    ctx.seed = seed;
    if (trials > 0)
        ctx.trials = trials;
    const char* env_dir = std::getenv("VERLINDE_CACHE_DIR");
    const Format fmt_kind = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::human;

    try {
        if (!no_cache && (!cache_dir.empty() || (env_dir && *env_dir)))
            ctx.cache = ResultCache(cache_dir.empty() ? env_dir : cache_dir);
        Report rep;
        if (fusion->parsed())
            rep = cmd_fusion(ctx, p, l, r, oracle);
        else if (sympow->parsed())
            rep = cmd_sympow(ctx, p, object, degree, ambient);
        else if (symalg->parsed())
            rep = cmd_symalg(ctx, p, object, max_degree, report);
        else if (sv_sym->parsed())
            rep = cmd_svec2_sympow(ctx, module, degree);
        else if (sv_four->parsed())
            rep = cmd_svec2_fourth_power(ctx, module, max_degree);
        else if (sv_inj->parsed())
            rep = cmd_svec2_injectivity(ctx, sub, amb, max_degree);
        else
            rep = cmd_verify(ctx, vo);

        const auto text = rep.render(fmt_kind);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path);
            f << text;
            if (!f) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return usage;
            }
        }
        return rep.passed() ? ok : check_failed;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.pretty() << "\n";
        return usage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: budget exceeded: " << e.what() << " (raise --max-entries)\n";
        return budget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return check_failed;
    }
}
