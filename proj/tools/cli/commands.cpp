#include "commands.hpp"

#include "object_spec.hpp"

#include "vercat/invariants.hpp"
#include "vercat/svec2.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <map>

namespace vercat::cli {

using ver::VerObject;

namespace {

std::string object_key(const VerObject& x)
{
    return fmt::format("p{}_{}", x.p(), fmt::join(x.mult(), "-"));
}

VerObject object_from(std::uint64_t p, const Json& j)
{
    return VerObject(p, j.get<std::vector<std::uint64_t>>());
}

} // namespace

VerObject cached_sym_power(Context& ctx, const VerObject& x, std::size_t m)
{
    const auto key = fmt::format("sympow_{}_m{}", object_key(x), m);
    const auto j = ctx.cache.get_or_compute(key, [&] { return Json(ver::ver_sym_power(x, m, ctx.budget).mult()); });
    return object_from(x.p(), j);
}

ver::MultSeries cached_series(Context& ctx, const VerObject& x, std::size_t max_degree)
{
    const auto key = fmt::format("series_{}_D{}", object_key(x), max_degree);
    const auto j = ctx.cache.get_or_compute(key, [&] {
        const auto s = ver::sym_alg_series(x, max_degree, ctx.budget);
        Json out;
        out["finite"] = s.finite;
        out["degrees"] = Json::array();
        for (const auto& d : s.degrees)
            out["degrees"].push_back(d.mult());
        return out;
    });
    ver::MultSeries s;
    s.p = x.p();
    s.finite = j.at("finite").get<bool>();
    for (const auto& d : j.at("degrees"))
        s.degrees.push_back(object_from(x.p(), d));
    return s;
}

std::string jordan_string(const lin::JordanType& t)
{
    std::map<std::size_t, std::size_t> count;
    for (auto part : t.parts)
        ++count[part];
    std::vector<std::string> terms;
    for (auto [size, k] : count)
        terms.push_back(k == 1 ? fmt::format("J{}", size) : fmt::format("{}*J{}", k, size));
    return terms.empty() ? "0" : fmt::format("{}", fmt::join(terms, " + "));
}

Report cmd_fusion(Context&, std::uint64_t p, std::size_t l, std::size_t r, bool oracle)
{
    Report rep;
    rep.command = "fusion";
    rep.parameters = {{"p", p}, {"l", l}, {"r", r}, {"oracle", oracle}};
    const auto prod = ver::fusion_simple(p, l, r);
    rep.results["product"] = prod.to_string();
    rep.results["multiplicities"] = prod.mult();
    std::string line = prod.to_string();
    if (oracle) {
        const auto a = VerObject::simple(p, l), b = VerObject::simple(p, r);
        const auto o = ver::fusion_by_jordan(a, b);
        const auto dropped = ver::negligible_blocks(a, b);
        const bool agree = o == prod;
        rep.results["oracle"] = {{"product", o.to_string()}, {"agrees", agree}, {"negligible_blocks", dropped}};
        std::string note = agree ? "oracle agrees" : "oracle disagrees: " + o.to_string();
        if (dropped > 0)
            note += fmt::format("; {} negligible block{} J{} dropped", dropped, dropped == 1 ? "" : "s", p);
        line += " (" + note + ")";
        rep.checks.push_back({"closed formula equals Jordan decomposition", agree,
                              fmt::format("formula {}, oracle {}", prod.to_string(), o.to_string())});
    }
    rep.lines.push_back(line);
    return rep;
}

Report cmd_sympow(Context& ctx, std::uint64_t p, const std::string& object, std::size_t degree,
                  const std::string& ambient)
{
    const auto x = parse_ver_object(object, p);
    Report rep;
    rep.command = "sympow";
    rep.parameters = {{"p", p}, {"object", x.to_string()}, {"degree", degree}, {"ambient", ambient}};
    std::vector<std::string> parts;
    std::optional<lin::JordanType> jt;
    if (ambient != "verlinde") {
        const auto sp = repzp::sym_power(ver::representative(x), degree, ctx.budget);
        jt = repzp::jordan_type(sp.module);
        rep.results["jordan_type"] = jordan_string(*jt);
        rep.results["partition"] = jt->parts;
        parts.push_back(jordan_string(*jt));
    }
    if (ambient != "repzp") {
        const auto v = cached_sym_power(ctx, x, degree);
        rep.results["ver"] = v.to_string();
        rep.results["multiplicities"] = v.mult();
        parts.push_back(v.to_string());
        if (jt) {
            const bool agree = ver::quotient(*jt, p) == v;
            rep.results["quotient_agrees"] = agree;
            parts.push_back(agree ? "agree" : "disagree");
        }
    }
    rep.lines.push_back(fmt::format("{}", fmt::join(parts, " | ")));
    return rep;
}

namespace {

void symalg_hilbert(Context& ctx, Report& rep, const VerObject& x, std::size_t max_degree)
{
    const auto s = cached_series(ctx, x, max_degree);
    const std::uint64_t p = x.p();
    rep.table.header.push_back("degree");
    for (std::size_t i = 1; i < p; ++i)
        rep.table.header.push_back(fmt::format("L{}", i));
    rep.table.header.push_back("dim");
    std::vector<std::string> series;
    for (std::size_t m = 0; m < s.degrees.size(); ++m) {
        const auto& d = s.degrees[m];
        std::vector<std::string> row{std::to_string(m)};
        for (auto k : d.mult())
            row.push_back(std::to_string(k));
        row.push_back(std::to_string(d.total_dimension()));
        rep.table.rows.push_back(std::move(row));
        series.push_back(d.to_string());
    }
    const auto fc = ver::poly_factor_check(s, x.multiplicity(1));
    rep.results["series"] = series;
    rep.results["finite"] = s.finite;
    Json f;
    f["passes"] = fc.passes;
    f["polynomial_variables"] = x.multiplicity(1);
    std::vector<std::string> q;
    for (const auto& d : fc.quotient_series)
        q.push_back(d.to_string());
    f["quotient_series"] = q;
    f["y"] = fc.y ? Json(fc.y->to_string()) : Json(nullptr);
    f["y_dim"] = fc.y ? Json(fc.y->total_dimension()) : Json(nullptr);
    f["reason"] = fc.reason;
    rep.results["factorization"] = f;
    rep.lines.push_back(fmt::format("{}; {}; {}", fmt::join(series, ", "), s.finite ? "finite" : "not certified finite",
                                    fc.passes ? fmt::format("Y dim {}", fc.y->total_dimension())
                                              : "no factorization: " + fc.reason));
    const auto n = x.multiplicity(1);
    const auto poly = n == 0 ? std::string("") : n == 1 ? std::string("k[x] (x) ") : fmt::format("k[x_1..x_{}] (x) ", n);
    rep.checks.push_back({fmt::format("S(X) = {}Y with Y finite", poly), fc.passes,
                          fc.passes ? "Y = " + fc.y->to_string() : fc.reason});
}

} // namespace

Report cmd_symalg(Context& ctx, std::uint64_t p, const std::string& object, std::size_t max_degree,
                  const std::string& report)
{
    const auto x = parse_ver_object(object, p);
    Report rep;
    rep.command = "symalg";
    rep.parameters = {{"p", p}, {"object", x.to_string()}, {"max_degree", max_degree}, {"report", report}};
    if (report == "hilbert") {
        symalg_hilbert(ctx, rep, x, max_degree);
        return rep;
    }
    if (report == "module-finiteness") {
        const auto mf = inv::module_finiteness_check(x, max_degree, ctx.budget);
        rep.table.header = {"degree", "simple", "count"};
        Json sel = Json::array();
        for (const auto& s : mf.selections) {
            rep.table.rows.push_back({std::to_string(s.degree), fmt::format("L{}", s.simple), std::to_string(s.count)});
            sel.push_back({{"degree", s.degree}, {"simple", s.simple}, {"count", s.count}});
        }
        rep.results["selections"] = sel;
        rep.results["window_start"] = mf.window_start;
        rep.results["stabilized"] = mf.stabilized;
        rep.results["note"] = "evidence up to the truncation degree, not a proof";
        rep.lines.push_back(fmt::format("module generators over the invariants: {} selections; {} (no selections in "
                                        "degrees {}..{}: {}); evidence up to truncation only",
                                        sel.size(), mf.stabilized ? "stabilized" : "not stabilized", mf.window_start,
                                        max_degree, mf.stabilized ? "yes" : "no"));
        return rep;
    }
    const auto alg = inv::InvariantAlgebra::build(x, max_degree, ctx.budget);
    if (report == "invariants") {
        rep.table.header = {"degree", "invariant_dim"};
        for (std::size_t m = 0; m <= max_degree; ++m)
            rep.table.rows.push_back({std::to_string(m), std::to_string(alg.dim(m))});
        rep.results["invariant_dims"] = alg.dims();
        rep.lines.push_back(fmt::format("invariant dimensions: {}", fmt::join(alg.dims(), ", ")));
        return rep;
    }
    // generators
    const auto g = inv::generator_degrees(alg);
    std::vector<std::size_t> counts;
    std::size_t last = 0;
    rep.table.header = {"degree", "new_generators"};
    for (const auto& c : g) {
        counts.push_back(c.count);
        rep.table.rows.push_back({std::to_string(c.degree), std::to_string(c.count)});
        if (c.count > 0)
            last = c.degree;
    }
    rep.results["new_generators"] = counts;
    rep.results["last_generator_degree"] = last;
    rep.lines.push_back(fmt::format("new generators by degree: {}", fmt::join(counts, ", ")));
    rep.lines.push_back(fmt::format("no new generators above degree {} (evidence up to degree {})", last, max_degree));
    return rep;
}

Report cmd_svec2_sympow(Context& ctx, const std::string& module, std::size_t degree)
{
    const auto x = parse_dmodule(module);
    svec2::DGradedAlgebra s(x, degree, ctx.budget);
    Report rep;
    rep.command = "svec2 sympow";
    rep.parameters = {{"module", module}, {"degree", degree}};
    const auto names = s.basis_names(degree);
    const auto inv = svec2::invariants_d(s);
    rep.results["dim"] = s.dim(degree);
    rep.results["basis"] = names;
    rep.results["d_invariant_dim"] = inv[degree].cols();
    rep.table.header = {"degree", "dim", "ker_d"};
    for (std::size_t m = 0; m <= degree; ++m)
        rep.table.rows.push_back({std::to_string(m), std::to_string(s.dim(m)), std::to_string(inv[m].cols())});
    rep.lines.push_back(fmt::format("dim {} (basis {})", s.dim(degree), fmt::join(names, ", ")));
    return rep;
}

Report cmd_svec2_fourth_power(Context& ctx, const std::string& module, std::size_t max_degree)
{
    const auto x = parse_dmodule(module);
    const auto trials = ctx.trials_or(200);
    const auto res = svec2::fourth_power_checks(x, max_degree, trials, ctx.seed, ctx.budget);
    Report rep;
    rep.command = "svec2 fourth-power";
    rep.parameters = {{"module", module}, {"max_degree", max_degree}, {"trials", trials}};
    rep.seed = ctx.seed;
    rep.results["max_sample_degree"] = res.max_sample_degree;
    for (const auto& id : res.identities)
        rep.checks.push_back({id.name, id.passed(),
                              id.passed() ? fmt::format("{} trials", id.trials)
                                          : fmt::format("{} of {} trials fail; {}", id.failures, id.trials,
                                                        id.counterexample)});
    rep.lines.push_back(fmt::format("fourth-power identities in S({}) truncated at degree {}, samples of degree <= {}",
                                    module, max_degree, res.max_sample_degree));
    return rep;
}

Report cmd_svec2_injectivity(Context& ctx, const std::string& sub, const std::string& amb, std::size_t max_degree)
{
    const auto w = parse_dmodule(amb);
    const auto idx = parse_basis_names(sub, w);
    const auto f = svec2::gf2();
    lin::ModMatrix incl(f, w.dim(), idx.size()), d(f, idx.size(), idx.size());
    std::vector<std::string> names;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        incl(idx[a], a) = 1;
        names.push_back(w.names()[idx[a]]);
        for (std::size_t r = 0; r < w.dim(); ++r) {
            if (w.d()(r, idx[a]) == 0)
                continue;
            auto it = std::find(idx.begin(), idx.end(), r);
            if (it == idx.end())
                throw PreconditionError(fmt::format("span of {} is not closed under d", sub));
            d(std::size_t(it - idx.begin()), a) = 1;
        }
    }
    const svec2::DModule u(d, names);
    const auto res = svec2::injectivity_check(u, w, incl, max_degree, ctx.budget);
    Report rep;
    rep.command = "svec2 injectivity";
    rep.parameters = {{"sub", sub}, {"amb", amb}, {"max_degree", max_degree}};
    rep.results["injective"] = res.injective;
    rep.results["first_failure"] = res.first_failure ? Json(*res.first_failure) : Json(nullptr);
    rep.results["witness"] = res.witness;
    rep.table.header = {"degree", "dim_source", "dim_image"};
    for (std::size_t m = 0; m < res.source_dims.size(); ++m)
        rep.table.rows.push_back({std::to_string(m), std::to_string(res.source_dims[m]), std::to_string(res.image_dims[m])});
    rep.lines.push_back(res.injective ? fmt::format("injective up to degree {}", max_degree)
                                      : fmt::format("fails at degree {} ({} = 0)", *res.first_failure, res.witness));
    return rep;
}

} // namespace vercat::cli
