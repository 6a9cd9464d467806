#include "svcvv/eval.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <stdexcept>

#include "svcvv/errors.hpp"
#include "svcvv/text.hpp"
#include "svcvv/vvp.hpp"

namespace svcvv {

std::optional<double> theta_g(const Vec3& g) {
    if (std::hypot(g.x, g.y) < 1e-9) return std::nullopt;
    return fold_half_turn(std::atan2(g.y, g.x) * 180.0 / std::numbers::pi);
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw InputError("pearson: series lengths differ");
    const std::size_t n = x.size();
    if (n < 2) throw InputError("pearson: need at least two samples");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw std::domain_error("zero variance");
    return sxy / std::sqrt(sxx * syy);
}

ConfusionMatrix confusion(std::span<const ParticipantOutcome> outcomes) {
    ConfusionMatrix cm;
    for (const auto& o : outcomes) {
        const bool observed = o.misc_lad < o.misc_wad;
        const bool predicted = o.msi_lad < o.msi_wad;
        if (observed && predicted)
            ++cm.tp;
        else if (!observed && predicted)
            ++cm.fp;
        else if (observed && !predicted)
            ++cm.fn;
        else
            ++cm.tn;
    }
    return cm;
}

MetricReport metrics(const ConfusionMatrix& cm) {
    MetricReport r;
    if (cm.total() > 0) r.accuracy = static_cast<double>(cm.tp + cm.tn) / cm.total();
    if (cm.tp + cm.fp > 0) r.precision = static_cast<double>(cm.tp) / (cm.tp + cm.fp);
    if (cm.tp + cm.fn > 0) r.recall = static_cast<double>(cm.tp) / (cm.tp + cm.fn);
    if (r.precision && r.recall && *r.precision + *r.recall > 0.0)
        r.f1 = 2.0 * *r.precision * *r.recall / (*r.precision + *r.recall);
    return r;
}

namespace {
constexpr const char* kCohortHeader = "participant_id,condition,mean_misc,max_misc,mean_msi,max_msi";

std::string normalize_condition(std::string c, const std::string& ctx) {
    std::transform(c.begin(), c.end(), c.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (c != "lad" && c != "wad") throw InputError(ctx + ": condition must be lad or wad, got '" + c + "'");
    return c;
}
}  // namespace

std::vector<CohortRow> load_cohort(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty() || trim(lines.front()) != kCohortHeader)
        throw InputError(path + ": expected header '" + std::string(kCohortHeader) + "'");
    std::vector<CohortRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty()) continue;
        const std::string ctx = path + ":" + std::to_string(i + 1);
        const auto parts = split(line, ',');
        if (parts.size() != 6) throw InputError(ctx + ": expected 6 fields, got " + std::to_string(parts.size()));
        CohortRow r;
        r.participant_id = trim(parts[0]);
        if (r.participant_id.empty()) throw InputError(ctx + ": empty participant id");
        r.condition = normalize_condition(trim(parts[1]), ctx);
        r.mean_misc = parse_double(parts[2], ctx);
        r.max_misc = parse_double(parts[3], ctx);
        r.mean_msi = parse_double(parts[4], ctx);
        r.max_msi = parse_double(parts[5], ctx);
        rows.push_back(std::move(r));
    }
    return rows;
}

void save_cohort(const std::string& path, const std::vector<CohortRow>& rows) {
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot open for writing");
    out << kCohortHeader << "\n";
    for (const auto& r : rows) {
        out << r.participant_id << ',' << r.condition << ',' << fmt_g(r.mean_misc) << ',' << fmt_g(r.max_misc) << ','
            << fmt_g(r.mean_msi) << ',' << fmt_g(r.max_msi) << "\n";
    }
    if (!out.good()) throw InputError(path + ": write failed");
}

Measure parse_measure(const std::string& text) {
    if (text == "mean") return Measure::mean;
    if (text == "max") return Measure::max;
    throw InputError("unknown measure '" + text + "' (expected mean or max)");
}

std::vector<ParticipantOutcome> pair_conditions(const std::vector<CohortRow>& rows, Measure measure) {
    std::map<std::string, std::map<std::string, const CohortRow*>> by_id;
    for (const auto& r : rows) {
        auto& slot = by_id[r.participant_id][r.condition];
        if (slot != nullptr)
            throw InputError("participant '" + r.participant_id + "' has duplicate " + r.condition + " rows");
        slot = &r;
    }
    std::vector<ParticipantOutcome> out;
    out.reserve(by_id.size());
    for (const auto& [id, conditions] : by_id) {
        const auto lad = conditions.find("lad");
        const auto wad = conditions.find("wad");
        if (lad == conditions.end() || wad == conditions.end())
            throw InputError("participant '" + id + "' is missing a lad or wad row");
        ParticipantOutcome o;
        o.id = id;
        if (measure == Measure::mean) {
            o.misc_lad = lad->second->mean_misc;
            o.misc_wad = wad->second->mean_misc;
            o.msi_lad = lad->second->mean_msi;
            o.msi_wad = wad->second->mean_msi;
        } else {
            o.misc_lad = lad->second->max_misc;
            o.misc_wad = wad->second->max_misc;
            o.msi_lad = lad->second->max_msi;
            o.msi_wad = wad->second->max_msi;
        }
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace svcvv
