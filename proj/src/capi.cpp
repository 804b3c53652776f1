#include "seaweed_c.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "seaweed/configuration.hpp"
#include "seaweed/enumerate.hpp"
#include "seaweed/error.hpp"
#include "seaweed/functionals.hpp"
#include "seaweed/kernel.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/serialize.hpp"
#include "seaweed/winding.hpp"

struct sw_spec {
    seaweed::SeaweedSpec spec;
};

struct sw_functional {
    seaweed::Functional f;
};

namespace {

thread_local std::string last_error;

int fail(int code, const std::string& message) {
    last_error = message;
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        last_error.clear();
        fn();
        return SW_OK;
    } catch (const seaweed::Error& e) {
        return fail(static_cast<int>(e.code()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(SW_ERR_PARSE, e.what());
    } catch (const std::exception& e) {
        return fail(SW_ERR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
int string_out(char** out, Fn&& fn) {
    if (!out) return fail(SW_ERR_ARGUMENT, "null output pointer");
    return guarded([&] { *out = copy_string(fn()); });
}

template <typename Fn>
int int_out(int* out, Fn&& fn) {
    if (!out) return fail(SW_ERR_ARGUMENT, "null output pointer");
    return guarded([&] { *out = fn(); });
}

seaweed::Family family_from(const std::string& s) {
    if (s == "gl" || s == "GL") return seaweed::Family::GL;
    if (s == "A") return seaweed::Family::A;
    if (s == "B") return seaweed::Family::B;
    if (s == "C") return seaweed::Family::C;
    throw seaweed::Error(seaweed::ErrorCode::Parse, "unknown family '" + s + "'");
}

void check_domain(const sw_spec* spec, const sw_functional* f) {
    if (!(f->f.domain == spec->spec)) {
        throw seaweed::Error(seaweed::ErrorCode::Validation, "functional domain does not match spec");
    }
}

}  // namespace

#define SW_REQUIRE(...)                                                   \
    do {                                                                  \
        const void* ptrs[] = {__VA_ARGS__};                               \
        for (const void* p : ptrs)                                        \
            if (!p) return fail(SW_ERR_ARGUMENT, "null handle argument"); \
    } while (0)

extern "C" {

const char* sw_last_error(void) { return last_error.c_str(); }

void sw_string_free(char* s) { std::free(s); }

int sw_spec_parse(const char* text, int rank, sw_spec** out) {
    SW_REQUIRE(text, out);
    return guarded([&] {
        auto spec = seaweed::parse_spec(text, rank);
        *out = new sw_spec{std::move(spec)};
    });
}

int sw_spec_from_json(const char* json, sw_spec** out) {
    SW_REQUIRE(json, out);
    return guarded([&] {
        auto spec = seaweed::spec_from_json(seaweed::Json::parse(json));
        *out = new sw_spec{std::move(spec)};
    });
}

void sw_spec_free(sw_spec* spec) { delete spec; }

int sw_spec_json(const sw_spec* spec, char** out) {
    SW_REQUIRE(spec);
    return string_out(out, [&] { return seaweed::to_json(spec->spec).dump(); });
}

int sw_spec_text(const sw_spec* spec, char** out) {
    SW_REQUIRE(spec);
    return string_out(out, [&] { return seaweed::format_spec(spec->spec); });
}

int sw_spec_size(const sw_spec* spec, int* out) {
    SW_REQUIRE(spec);
    return int_out(out, [&] { return spec->spec.size(); });
}

int sw_index(const sw_spec* spec, int* out) {
    SW_REQUIRE(spec);
    return int_out(out, [&] { return seaweed::index(spec->spec); });
}

int sw_meander_json(const sw_spec* spec, char** out) {
    SW_REQUIRE(spec);
    return string_out(out, [&] { return seaweed::meander_json(spec->spec).dump(); });
}

int sw_meander_dot(const sw_spec* spec, char** out) {
    SW_REQUIRE(spec);
    return string_out(out, [&] { return seaweed::meander_to_dot(seaweed::build_meander(spec->spec)); });
}

int sw_meander_ascii(const sw_spec* spec, char** out) {
    SW_REQUIRE(spec);
    return string_out(out, [&] { return seaweed::meander_to_ascii(seaweed::build_meander(spec->spec)); });
}

int sw_signature(const sw_spec* spec, char** out) {
    SW_REQUIRE(spec);
    return string_out(out, [&] { return seaweed::format_signature(seaweed::signature(spec->spec)); });
}

int sw_signature_json(const sw_spec* spec, char** out) {
    SW_REQUIRE(spec);
    return string_out(out, [&] { return seaweed::signature_json(spec->spec).dump(); });
}

int sw_homotopy(const sw_spec* spec, char** out) {
    SW_REQUIRE(spec);
    return string_out(out, [&] {
        return seaweed::format_homotopy(seaweed::homotopy_type(spec->spec), spec->spec.family);
    });
}

int sw_core_json(const sw_spec* spec, char** out) {
    SW_REQUIRE(spec);
    return string_out(out, [&] { return seaweed::to_json(seaweed::core_and_peaks(spec->spec)).dump(); });
}

int sw_core_ascii(const sw_spec* spec, char** out) {
    SW_REQUIRE(spec);
    return string_out(out, [&] {
        return seaweed::render_core_ascii(spec->spec, seaweed::core_and_peaks(spec->spec));
    });
}

int sw_construct(const sw_spec* spec, const char* base, const char* peaks, sw_functional** out) {
    SW_REQUIRE(spec, out);
    return guarded([&] {
        seaweed::BaseChoice choice;
        if (base) choice.kind = seaweed::parse_base_kind(base);
        seaweed::PeakPolicy policy;
        if (peaks) policy = seaweed::parse_peak_policy(peaks);
        auto f = seaweed::construct(spec->spec, choice, policy);
        *out = new sw_functional{std::move(f)};
    });
}

int sw_functional_from_json(const char* json, sw_functional** out) {
    SW_REQUIRE(json, out);
    return guarded([&] {
        auto f = seaweed::functional_from_json(seaweed::Json::parse(json));
        seaweed::validate(f.domain);
        const auto adm = seaweed::admissible_positions(f.domain);
        for (const auto& [p, c] : f.entries) {
            if (!adm.contains(p)) {
                throw seaweed::Error(seaweed::ErrorCode::Validation,
                                     "entry (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                         ") is not admissible");
            }
        }
        *out = new sw_functional{std::move(f)};
    });
}

void sw_functional_free(sw_functional* f) { delete f; }

int sw_functional_json(const sw_functional* f, char** out) {
    SW_REQUIRE(f);
    return string_out(out, [&] { return seaweed::to_json(f->f).dump(); });
}

int sw_functional_ascii(const sw_functional* f, char** out) {
    SW_REQUIRE(f);
    return string_out(out, [&] { return seaweed::render_functional_ascii(f->f); });
}

int sw_functional_size(const sw_functional* f, int* out) {
    SW_REQUIRE(f);
    return int_out(out, [&] { return f->f.size(); });
}

int sw_kernel_dim(const sw_spec* spec, const sw_functional* f, int* out) {
    SW_REQUIRE(spec, f);
    return int_out(out, [&] {
        check_domain(spec, f);
        return seaweed::kernel_dim(spec->spec, f->f);
    });
}

int sw_relations_json(const sw_spec* spec, const sw_functional* f, char** out) {
    SW_REQUIRE(spec, f);
    return string_out(out, [&] {
        check_domain(spec, f);
        return seaweed::to_json(seaweed::relations_matrix(spec->spec, f->f)).dump();
    });
}

int sw_relations_text(const sw_spec* spec, const sw_functional* f, char** out) {
    SW_REQUIRE(spec, f);
    return string_out(out, [&] {
        check_domain(spec, f);
        return seaweed::format_relations(seaweed::relations_matrix(spec->spec, f->f));
    });
}

int sw_verify_json(const sw_spec* spec, const sw_functional* f, char** out) {
    SW_REQUIRE(spec, f);
    return string_out(out, [&] {
        check_domain(spec, f);
        const auto reg = seaweed::is_regular(spec->spec, f->f);
        const auto rel = seaweed::relations_matrix(spec->spec, f->f);
        const auto blocks = seaweed::block_structure_check(spec->spec, rel, seaweed::core_and_peaks(spec->spec));
        seaweed::Json j = {{"spec", seaweed::to_json(spec->spec)},
                           {"regular", reg.regular},
                           {"kernel_dim", reg.kernel_dim},
                           {"index", reg.index},
                           {"relations_verified", seaweed::verify_relations(spec->spec, f->f, rel)},
                           {"blocks", blocks.blocks},
                           {"blocks_ok", blocks.ok},
                           {"problems", blocks.problems}};
        return j.dump();
    });
}

int sw_oracle(const sw_spec* spec, int samples, uint64_t seed, int* out) {
    SW_REQUIRE(spec);
    return int_out(out, [&] { return seaweed::generic_index_oracle(spec->spec, samples, seed); });
}

int sw_enumerate(const char* family, int max_n, const char* peaks, int samples, uint64_t seed, int canonical,
                 long budget, const char* log_path, char** out) {
    SW_REQUIRE(family);
    return string_out(out, [&] {
        seaweed::SweepOptions opt;
        opt.family = family_from(family);
        opt.max_n = max_n;
        if (peaks) opt.policy = seaweed::parse_peak_policy(peaks);
        opt.oracle_samples = samples;
        opt.seed = seed;
        opt.canonical = canonical != 0;
        opt.budget = budget;
        if (log_path) opt.log_path = log_path;
        const auto report = seaweed::enumerate_sweep(opt);
        seaweed::Json failures = seaweed::Json::array();
        for (const auto& fl : report.failures) {
            failures.push_back({{"spec", seaweed::format_spec(fl.spec)}, {"n", fl.spec.n}, {"reason", fl.reason}});
        }
        seaweed::Json j = {{"family", family},
                           {"max_n", max_n},
                           {"total", report.total},
                           {"regular", report.regular},
                           {"oracle_checked", report.oracle_checked},
                           {"oracle_resampled", report.oracle_resampled},
                           {"oracle_mismatches", report.oracle_mismatches},
                           {"truncated", report.truncated},
                           {"failures", failures}};
        return j.dump();
    });
}

int sw_closed_form_check(int n, char** out) {
    return string_out(out, [&] {
        const auto r = seaweed::fn_closed_form_check(n);
        return seaweed::Json({{"n", n}, {"ok", r.ok}, {"failures", r.failures}}).dump();
    });
}

}  // extern "C"
