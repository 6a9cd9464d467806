#include "svcvv/params.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <map>

#include "svcvv/errors.hpp"
#include "svcvv/text.hpp"

namespace svcvv {
namespace {

struct Field {
    const char* name;
    double ParameterSet::* member;
};

// Single source of truth for file keys, serialization order, and hashing.
constexpr std::array<Field, 12> kFields{{
    {"K_a", &ParameterSet::K_a},
    {"K_omega", &ParameterSet::K_omega},
    {"K_omega_c", &ParameterSet::K_omega_c},
    {"K_ac", &ParameterSet::K_ac},
    {"K_vc", &ParameterSet::K_vc},
    {"K_vvc", &ParameterSet::K_vvc},
    {"tau", &ParameterSet::tau},
    {"tau_a", &ParameterSet::tau_a},
    {"tau_d", &ParameterSet::tau_d},
    {"tau_I", &ParameterSet::tau_I},
    {"b", &ParameterSet::b},
    {"P", &ParameterSet::P},
}};

}  // namespace

ParameterSet ParameterSet::svc() { return ParameterSet{}; }

ParameterSet ParameterSet::svc_vv() {
    ParameterSet p;
    p.K_vc = 2.5;
    p.K_vvc = 2.5;
    return p;
}

void ParameterSet::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw InputError(std::string("parameter ") + name + " must be positive");
    };
    positive(tau, "tau");
    positive(tau_a, "tau_a");
    positive(tau_d, "tau_d");
    positive(tau_I, "tau_I");
    positive(b, "b");
    if (!(P > 0.0) || !(P <= 100.0))
        throw InputError("parameter P must lie in (0, 100]");
    // The expectation loops solve (1 + gain) * conflict = ...; a gain of -1
    // makes them singular.
    if (K_omega_c == -1.0) throw InputError("parameter K_omega_c must not equal -1");
    if (K_ac == -1.0) throw InputError("parameter K_ac must not equal -1");
    for (const auto& f : kFields)
        if (!std::isfinite(this->*f.member))
            throw InputError(std::string("parameter ") + f.name + " is not finite");
}

std::uint64_t ParameterSet::hash() const {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& f : kFields) {
        mix(f.name);
        mix("=");
        mix(fmt_full(this->*f.member));
        mix("\n");
    }
    return h;
}

ParameterSet load_params(const std::string& path) {
    ParameterSet p;
    std::map<std::string, bool> seen;
    for (const auto& kv : parse_key_values(path)) {
        const Field* field = nullptr;
        for (const auto& f : kFields)
            if (kv.key == f.name) { field = &f; break; }
        if (!field)
            throw InputError(path + ":" + std::to_string(kv.line) +
                             ": unknown parameter '" + kv.key + "'");
        if (seen[kv.key])
            throw InputError(path + ":" + std::to_string(kv.line) +
                             ": duplicate parameter '" + kv.key + "'");
        seen[kv.key] = true;
        p.*(field->member) = parse_double(kv.value, path + ":" + std::to_string(kv.line));
    }
    for (const auto& f : kFields)
        if (!seen[f.name])
            throw InputError(path + ": missing parameter '" + std::string(f.name) + "'");
    p.validate();
    return p;
}

void save_params(const std::string& path, const ParameterSet& p) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    for (const auto& f : kFields)
        out << f.name << " = " << fmt_full(p.*f.member) << "\n";
}

}  // namespace svcvv
