#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "seaweed_c.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitError = 1;
constexpr int kExitIrregular = 2;

struct CliError {
    std::string message;
};

void check(int code) {
    if (code != SW_OK) throw CliError{sw_last_error()};
}

std::string take(char* s) {
    std::string out(s ? s : "");
    sw_string_free(s);
    return out;
}

class Spec {
public:
    Spec(const std::string& text, int rank) { check(sw_spec_parse(text.c_str(), rank, &h_)); }
    ~Spec() { sw_spec_free(h_); }
    Spec(const Spec&) = delete;
    Spec& operator=(const Spec&) = delete;
    const sw_spec* get() const { return h_; }

private:
    sw_spec* h_ = nullptr;
};

class Functional {
public:
    Functional(const Spec& spec, const std::string& base, const std::string& peaks) {
        check(sw_construct(spec.get(), base.c_str(), peaks.c_str(), &h_));
    }
    explicit Functional(const std::string& json) { check(sw_functional_from_json(json.c_str(), &h_)); }
    ~Functional() { sw_functional_free(h_); }
    Functional(const Functional&) = delete;
    Functional& operator=(const Functional&) = delete;
    const sw_functional* get() const { return h_; }

private:
    sw_functional* h_ = nullptr;
};

template <typename Fn, typename... Args>
std::string text_of(Fn fn, Args... args) {
    char* out = nullptr;
    check(fn(args..., &out));
    return take(out);
}

template <typename Fn, typename... Args>
int int_of(Fn fn, Args... args) {
    int out = 0;
    check(fn(args..., &out));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{"cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::string verb;
    std::string spec;
    int rank = 0;
    bool json = false;
    std::string base = "F";
    std::string peaks = "diag";
    std::string functional_path;
    int samples = 8;
    std::optional<std::uint64_t> seed;
    std::string family = "gl";
    int max_n = 4;
    long budget = 0;
    bool canonical = false;
    std::string log_path;
    std::string format = "ascii";
    std::string what = "meander";
};

std::unique_ptr<Functional> functional_for(const Options& o, const Spec& spec) {
    if (!o.functional_path.empty()) return std::make_unique<Functional>(read_file(o.functional_path));
    return std::make_unique<Functional>(spec, o.base, o.peaks);
}

void print_json(const std::string& raw) { std::cout << Json::parse(raw).dump(2) << '\n'; }

int run_spec_verb(const Options& o) {
    const Spec spec(o.spec, o.rank);
    const sw_spec* s = spec.get();

    if (o.verb == "meander") {
        if (o.json || o.format == "json") {
            print_json(text_of(sw_meander_json, s));
        } else if (o.format == "dot") {
            std::cout << text_of(sw_meander_dot, s);
        } else {
            std::cout << text_of(sw_meander_ascii, s);
        }
    } else if (o.verb == "signature") {
        if (o.json) {
            print_json(text_of(sw_signature_json, s));
        } else {
            std::cout << text_of(sw_signature, s) << '\n';
        }
    } else if (o.verb == "homotopy") {
        if (o.json) {
            print_json(Json(Json::parse(text_of(sw_signature_json, s))["homotopy"]).dump());
        } else {
            std::cout << text_of(sw_homotopy, s) << '\n';
        }
    } else if (o.verb == "index") {
        const int idx = int_of(sw_index, s);
        if (o.json) {
            std::cout << Json({{"spec", Json::parse(text_of(sw_spec_json, s))}, {"index", idx}}).dump(2) << '\n';
        } else {
            std::cout << idx << '\n';
        }
    } else if (o.verb == "core") {
        if (o.json) {
            print_json(text_of(sw_core_json, s));
        } else {
            std::cout << text_of(sw_core_ascii, s);
        }
    } else if (o.verb == "construct") {
        const auto f = functional_for(o, spec);
        if (o.json) {
            print_json(text_of(sw_functional_json, f->get()));
        } else {
            std::cout << "size=" << int_of(sw_functional_size, f->get()) << '\n';
            std::cout << text_of(sw_functional_ascii, f->get());
        }
    } else if (o.verb == "verify") {
        const auto f = functional_for(o, spec);
        const Json v = Json::parse(text_of(sw_verify_json, s, f->get()));
        if (o.json) {
            std::cout << v.dump(2) << '\n';
        } else {
            std::cout << "regular: " << (v["regular"].get<bool>() ? "true" : "false")
                      << ", dim=" << v["kernel_dim"].get<int>() << ", blocks=" << v["blocks"].get<std::string>()
                      << '\n';
            if (!v["regular"].get<bool>()) std::cout << "index=" << v["index"].get<int>() << '\n';
            for (const auto& p : v["problems"]) std::cout << "problem: " << p.get<std::string>() << '\n';
        }
        return v["regular"].get<bool>() ? 0 : kExitIrregular;
    } else if (o.verb == "relations") {
        const auto f = functional_for(o, spec);
        if (o.json) {
            print_json(text_of(sw_relations_json, s, f->get()));
        } else {
            std::cout << text_of(sw_relations_text, s, f->get());
        }
    } else if (o.verb == "oracle") {
        if (o.json && !o.seed) throw CliError{"--seed is required for oracle in --json mode"};
        const std::uint64_t seed = o.seed.value_or(1);
        int out = 0;
        check(sw_oracle(s, o.samples, seed, &out));
        if (o.json) {
            std::cout << Json({{"spec", Json::parse(text_of(sw_spec_json, s))},
                               {"samples", o.samples},
                               {"seed", seed},
                               {"oracle_index", out}})
                             .dump(2)
                      << '\n';
        } else {
            std::cout << out << '\n';
        }
    } else if (o.verb == "render") {
        if (o.what == "meander") {
            if (o.format == "dot") {
                std::cout << text_of(sw_meander_dot, s);
            } else if (o.format == "json") {
                print_json(text_of(sw_meander_json, s));
            } else {
                std::cout << text_of(sw_meander_ascii, s);
            }
        } else if (o.what == "core") {
            if (o.format == "json") {
                print_json(text_of(sw_core_json, s));
            } else if (o.format == "ascii") {
                std::cout << text_of(sw_core_ascii, s);
            } else {
                throw CliError{"core renders as ascii or json"};
            }
        } else {
            const auto f = functional_for(o, spec);
            if (o.format == "json") {
                print_json(text_of(sw_functional_json, f->get()));
            } else if (o.format == "ascii") {
                std::cout << text_of(sw_functional_ascii, f->get());
            } else {
                throw CliError{"functional renders as ascii or json"};
            }
        }
    }
    return 0;
}

int run_enumerate(const Options& o) {
    if (o.json && !o.seed && o.samples > 0) throw CliError{"--seed is required for the oracle in --json mode"};
    char* out = nullptr;
    check(sw_enumerate(o.family.c_str(), o.max_n, o.peaks.c_str(), o.samples, o.seed.value_or(1), o.canonical,
                       o.budget, o.log_path.empty() ? nullptr : o.log_path.c_str(), &out));
    const Json report = Json::parse(take(out));
    if (o.json) {
        std::cout << report.dump(2) << '\n';
    } else {
        std::cout << "family=" << report["family"].get<std::string>() << " max_n=" << report["max_n"].get<int>()
                  << " specs=" << report["total"].get<long>() << " regular=" << report["regular"].get<long>()
                  << " oracle_mismatches=" << report["oracle_mismatches"].get<long>()
                  << " failures=" << report["failures"].size() << '\n';
        for (const auto& f : report["failures"]) {
            std::cout << "FAIL " << f["spec"].get<std::string>() << " n=" << f["n"].get<int>() << ": "
                      << f["reason"].get<std::string>() << '\n';
        }
    }
    return report["failures"].empty() ? 0 : kExitIrregular;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Seaweed algebra index, meander and regular functional toolkit"};
    app.require_subcommand(1);

    auto add_spec_verb = [&](const std::string& name, const std::string& help) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("spec", o.spec, "spec such as \"gl 17|3 / 10|4|6\" or \"C 5|10 / 2|4|3|1|1\"")->required();
        cmd->add_option("--n", o.rank, "rank for B and C specs");
        cmd->add_flag("--json", o.json, "machine-readable output");
        return cmd;
    };
    auto add_functional_opts = [&](CLI::App* cmd) {
        cmd->add_option("--base", o.base, "base functional: F G H K Gp Hp Kp Fp");
        cmd->add_option("--peaks", o.peaks, "peak policy: diag, anti or mixed:I-J=diag|anti,...");
        cmd->add_option("--functional", o.functional_path, "read the functional from a JSON file");
    };

    auto* meander = add_spec_verb("meander", "meander graph and its components");
    meander->add_option("--format", o.format, "dot, ascii or json")->check(CLI::IsMember({"dot", "ascii", "json"}));
    add_spec_verb("signature", "winding-down signature");
    add_spec_verb("homotopy", "homotopy type");
    add_spec_verb("index", "index from the meander formula");
    add_spec_verb("core", "core and peak set of the component meander");
    add_functional_opts(add_spec_verb("construct", "build the regular functional"));
    add_functional_opts(add_spec_verb("verify", "construct, compute the kernel and check regularity"));
    add_functional_opts(add_spec_verb("relations", "relations matrix of the kernel"));
    auto* oracle = add_spec_verb("oracle", "index from random functionals");
    oracle->add_option("--samples", o.samples, "number of random functionals");
    oracle->add_option("--seed", o.seed, "random seed");
    auto* render = add_spec_verb("render", "render a meander, core or functional");
    render->add_option("--format", o.format, "dot, ascii or json")->check(CLI::IsMember({"dot", "ascii", "json"}));
    render->add_option("--what", o.what, "meander, core or functional")
        ->check(CLI::IsMember({"meander", "core", "functional"}));
    add_functional_opts(render);

    auto* enumerate = app.add_subcommand("enumerate", "sweep every composition pair up to a rank");
    enumerate->add_option("--family", o.family, "gl, A, B or C")->check(CLI::IsMember({"gl", "A", "B", "C"}));
    enumerate->add_option("--max-n", o.max_n, "largest rank")->required();
    enumerate->add_option("--peaks", o.peaks, "peak policy");
    enumerate->add_option("--samples", o.samples, "oracle samples per spec, 0 disables the oracle");
    enumerate->add_option("--seed", o.seed, "random seed");
    enumerate->add_option("--budget", o.budget, "stop after this many specs");
    enumerate->add_option("--log", o.log_path, "JSON lines run log");
    enumerate->add_flag("--canonical", o.canonical, "skip a spec when its flip was already listed");
    enumerate->add_flag("--json", o.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }
    o.verb = app.get_subcommands().front()->get_name();

    try {
        if (o.verb == "enumerate") return run_enumerate(o);
        return run_spec_verb(o);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return kExitError;
    }
}
