#pragma once

#include "cache.hpp"
#include "report.hpp"

#include "vercat/budget.hpp"
#include "vercat/verlinde.hpp"

#include <optional>
#include <string>

namespace vercat::cli {

struct Context {
    Budget budget;
    ResultCache cache;
    std::uint64_t seed = 42;
    std::optional<std::size_t> trials;

    std::size_t trials_or(std::size_t fallback) const { return trials.value_or(fallback); }
};

/// S^m(X) in Ver_p through the cache.
ver::VerObject cached_sym_power(Context& ctx, const ver::VerObject& x, std::size_t m);
/// sym_alg_series through the cache.
ver::MultSeries cached_series(Context& ctx, const ver::VerObject& x, std::size_t max_degree);

/// "J1 + 2*J3"; "0" for the zero module.
std::string jordan_string(const lin::JordanType& t);

Report cmd_fusion(Context& ctx, std::uint64_t p, std::size_t l, std::size_t r, bool oracle);
Report cmd_sympow(Context& ctx, std::uint64_t p, const std::string& object, std::size_t degree,
                  const std::string& ambient);
Report cmd_symalg(Context& ctx, std::uint64_t p, const std::string& object, std::size_t max_degree,
                  const std::string& report);
Report cmd_svec2_sympow(Context& ctx, const std::string& module, std::size_t degree);
Report cmd_svec2_fourth_power(Context& ctx, const std::string& module, std::size_t max_degree);
Report cmd_svec2_injectivity(Context& ctx, const std::string& sub, const std::string& amb, std::size_t max_degree);

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t p_max = 13;
    std::size_t max_degree = 8;
    std::string mutant; ///< empty, or "drop-p-minus-r"
};

Report cmd_verify(Context& ctx, const VerifyOptions& opts);

} // namespace vercat::cli
