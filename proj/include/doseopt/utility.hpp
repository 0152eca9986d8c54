#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace doseopt {

/// Raised for malformed inputs: probabilities that do not sum to one, utility
/// scores out of range, inconsistent counts.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kProbTolerance = 1e-12;
inline constexpr double kCountTolerance = 1e-9;

/// Utility scores for the four efficacy/toxicity outcomes:
///   u1 efficacy & no toxicity, u2 no efficacy & no toxicity,
///   u3 efficacy & toxicity,    u4 no efficacy & toxicity.
struct UtilityTable2 {
    double u1 = 100.0;
    double u2 = 0.0;
    double u3 = 0.0;
    double u4 = 0.0;

    /// Throws InputError when any score is outside [0, 100].
    void validate() const;
    /// u2 + u3 == 100 enables the marginal shortcut.
    bool marginal_ok() const;
    /// Soft findings (u1 != 100, u4 != 0). Never fatal.
    std::vector<std::string> warnings() const;
    std::array<double, 4> scores() const { return {u1, u2, u3, u4}; }
};

/// Eight scores indexed [j][k-1]; j = 1 is the third-endpoint-positive row.
struct UtilityTable3 {
    std::array<std::array<double, 4>, 2> u{};

    void validate() const;
    double at(int j, int k) const { return u.at(j).at(k - 1); }
};

/// Additive offsets turning the negative row into the positive row, with
/// optional per-cell overrides applied last.
struct OffsetSpec {
    std::array<double, 4> a{};
    std::array<std::optional<double>, 4> override_positive{};
};

/// CUI weights per marginal endpoint. Toxicity enters oriented as 1 - p_T.
struct CuiWeights {
    double toxicity = 0.0;
    double efficacy = 0.0;
    double biomarker = 0.0;

    void validate() const;
    bool uses_biomarker() const { return biomarker > 0.0; }
};

/// Joint cell layout shared by probabilities and counts:
///   index k-1 for k = 1..4 (E&!T, !E&!T, E&T, !E&T).
using Cells4 = std::array<double, 4>;
/// [j][k-1], j = 0 third-endpoint negative, j = 1 positive.
using Cells8 = std::array<Cells4, 2>;

struct MarginalRates {
    double toxicity = 0.0;
    double efficacy = 0.0;
    std::optional<double> biomarker;
};

/// Observed data for one dose arm. Counts are real-valued so that
/// expected-count reconstructions (n * rate) are representable.
struct ArmData {
    std::string label;
    int n = 0;
    std::optional<Cells4> cells4;
    std::optional<Cells8> cells8;
    std::optional<double> toxicities;
    std::optional<double> responders;
    std::optional<double> biomarker_positive;

    /// Checks count ranges and joint/marginal agreement. Throws InputError.
    void validate() const;

    /// Marginal counts, preferring joint cells when present.
    std::optional<double> toxicity_count() const;
    std::optional<double> efficacy_count() const;
    std::optional<double> biomarker_count() const;
};

enum class Reconstruction {
    Rounded,   ///< round(rate * n), ties up; marginal counts only
    Expected,  ///< fractional n * p cells under endpoint independence
};

double mean_utility_joint2(const Cells4& p, const UtilityTable2& u);
double mean_utility_marginal2(double p_tox, double p_eff, const UtilityTable2& u);
double mean_utility_joint3(const Cells8& p, const UtilityTable3& u);

double quasi_events2(const ArmData& arm, const UtilityTable2& u);
double quasi_events3(const ArmData& arm, const UtilityTable3& u);

double cui_value(const MarginalRates& p, const CuiWeights& w);
double cui_quasi_events(const ArmData& arm, const CuiWeights& w);

UtilityTable3 utility3_from_offsets(const Cells4& base_row, const OffsetSpec& off);

Cells4 independent_joint2(double p_tox, double p_eff);
Cells8 independent_joint3(double p_tox, double p_eff, double p_bio);

/// Marginals implied by joint cells.
MarginalRates marginals_of(const Cells4& p);
MarginalRates marginals_of(const Cells8& p);

/// round(rate * n) to nearest integer with ties going up.
int round_count(double rate, int n);

/// Builds arm data from marginal rates. Rounded mode yields integer marginal
/// counts; Expected mode additionally fills the independent joint cells.
ArmData arm_from_rates(std::string label, int n, const MarginalRates& rates,
                       Reconstruction mode);

}  // namespace doseopt
