#include "seaweed/enumerate.hpp"

#include <fstream>
#include <random>

#include "seaweed/error.hpp"
#include "seaweed/kernel.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/serialize.hpp"
#include "seaweed/winding.hpp"

namespace seaweed {

namespace {

void extend(Composition& prefix, int remaining, bool partial, std::vector<Composition>& out) {
    if (partial || remaining == 0) out.push_back(prefix);
    for (int part = 1; part <= remaining; ++part) {
        prefix.push_back(part);
        extend(prefix, remaining - part, partial, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions(int n, bool partial) {
    std::vector<Composition> out;
    Composition prefix;
    extend(prefix, n, partial, out);
    return out;
}

std::vector<SeaweedSpec> all_specs(Family family, int max_n, bool canonical) {
    std::vector<SeaweedSpec> out;
    const bool partial = family == Family::B || family == Family::C;
    for (int n = 1; n <= max_n; ++n) {
        const int t = family == Family::A ? n + 1 : n;
        const auto comps = compositions(t, partial);
        for (const auto& a : comps) {
            for (const auto& b : comps) {
                if (canonical && b < a) continue;
                out.push_back(make_spec(family, a, b, n));
            }
        }
    }
    return out;
}

int sweep_ceiling(Family family) {
    switch (family) {
        case Family::GL: return 10;
        case Family::A: return 9;
        default: return 7;
    }
}

SweepReport enumerate_sweep(const SweepOptions& options) {
    if (options.max_n < 1 || options.max_n > sweep_ceiling(options.family)) {
        throw Error(ErrorCode::Validation, "max-n must be between 1 and " +
                                               std::to_string(sweep_ceiling(options.family)) + " for family " +
                                               family_name(options.family));
    }
    std::ofstream log;
    if (!options.log_path.empty()) {
        log.open(options.log_path);
        if (!log) throw Error(ErrorCode::Validation, "cannot open log file " + options.log_path);
    }

    SweepReport report;
    std::mt19937_64 seeds(options.seed);
    for (const auto& spec : all_specs(options.family, options.max_n, options.canonical)) {
        if (options.budget > 0 && report.total >= options.budget) {
            report.truncated = true;
            break;
        }
        ++report.total;
        const Functional f = construct(spec, {}, options.policy);
        const RegularityReport reg = is_regular(spec, f);
        std::vector<std::string> problems;
        if (reg.regular) {
            ++report.regular;
        } else {
            problems.push_back("kernel dim " + std::to_string(reg.kernel_dim) + " != index " +
                               std::to_string(reg.index));
        }

        Json line = {{"spec", to_json(spec)},
                     {"signature", format_signature(signature(spec))},
                     {"homotopy", format_homotopy(homotopy_type(spec), spec.family)},
                     {"index", reg.index},
                     {"kernel_dim", reg.kernel_dim}};
        if (options.oracle_samples > 0) {
            ++report.oracle_checked;
            int oracle = generic_index_oracle(spec, options.oracle_samples, seeds());
            if (oracle != reg.index) {
                ++report.oracle_resampled;
                oracle = generic_index_oracle(spec, 4 * options.oracle_samples, seeds());
            }
            if (oracle != reg.index) {
                ++report.oracle_mismatches;
                problems.push_back("oracle " + std::to_string(oracle) + " != index " + std::to_string(reg.index));
            }
            line["oracle"] = oracle;
        }
        line["verdict"] = problems.empty() ? "ok" : "fail";
        if (log) log << line.dump() << '\n';
        for (auto& p : problems) report.failures.push_back({spec, std::move(p)});
    }
    return report;
}

}  // namespace seaweed
