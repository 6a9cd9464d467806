#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svcvv/vec3.hpp"

namespace svcvv {

/// Frontal-plane angle of a gravity vector, degrees in [0, 180), measured the
/// same way the visual estimator measures stripe angles (90 when gravity is
/// straight down the head's y axis). Empty when gravity has no frontal-plane
/// component to project.
std::optional<double> theta_g(const Vec3& g);

/// Pearson correlation coefficient. Throws std::domain_error("zero variance")
/// when either series is constant, InputError on length mismatch or n < 2.
double pearson(std::span<const double> x, std::span<const double> y);

/// One participant's per-condition outcomes: observed sickness scores and
/// model predictions for the lighter (lad) and heavier (wad) condition.
struct ParticipantOutcome {
    std::string id;
    double misc_lad = 0.0;
    double misc_wad = 0.0;
    double msi_lad = 0.0;
    double msi_wad = 0.0;
};

struct ConfusionMatrix {
    int tp = 0;
    int fp = 0;
    int fn = 0;
    int tn = 0;
    int total() const { return tp + fp + fn + tn; }
};

/// Per-participant two-condition comparison. The observed label is positive
/// when the lad condition scored strictly lower than wad; the prediction is
/// positive when the model ranks lad strictly lower. Ties count as negative
/// on either side.
ConfusionMatrix confusion(std::span<const ParticipantOutcome> outcomes);

/// Classification metrics; a field is empty when its denominator is zero
/// rather than being forced to 0.
struct MetricReport {
    std::optional<double> accuracy;
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f1;
};

MetricReport metrics(const ConfusionMatrix& cm);

/// Long-format cohort summary row: one (participant, condition) pair.
struct CohortRow {
    std::string participant_id;
    std::string condition;  // "lad" or "wad"
    double mean_misc = 0.0;
    double max_misc = 0.0;
    double mean_msi = 0.0;
    double max_msi = 0.0;
};

std::vector<CohortRow> load_cohort(const std::string& path);
void save_cohort(const std::string& path, const std::vector<CohortRow>& rows);

enum class Measure { mean, max };
Measure parse_measure(const std::string& text);

/// Pair each participant's lad and wad rows, selecting the chosen measure.
/// Requires exactly one row per condition per participant.
std::vector<ParticipantOutcome> pair_conditions(const std::vector<CohortRow>& rows, Measure measure);

}  // namespace svcvv
