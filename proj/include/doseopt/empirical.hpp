#pragma once

#include <optional>
#include <string>
#include <vector>

#include "doseopt/decision.hpp"
#include "doseopt/utility.hpp"

namespace doseopt {

enum class EmpiricalCell { High, Low, Consider };
enum class EmpiricalConsiderPolicy { Low, High, Report };
enum class NegativeEdPolicy { Consider, Low };
enum class Resolution { High, Low, Pending };

/// Interval membership is decided with this slack so that rates like
/// 0.26 / 0.13 land on the closed boundary they represent.
inline constexpr double kBoundaryTolerance = 1e-9;

struct EmpiricalThresholds {
    double ed1 = 0.15;
    double ed2 = 0.35;
    double tr1 = 1.5;
    double tr2 = 2.0;
    std::optional<double> bd1;
    EmpiricalConsiderPolicy consider_policy = EmpiricalConsiderPolicy::Low;
    NegativeEdPolicy neg_ed_policy = NegativeEdPolicy::Consider;
    /// Apply the admissibility screen before the scan (off by default).
    bool screen_admissibility = false;

    void validate() const;
};

struct EmpiricalCellDecision {
    EmpiricalCell cell = EmpiricalCell::Consider;
    bool starred = false;  ///< the footnoted cell where ED < 0 may mean Low
    int row = 0;           ///< 0: TR < TR1, 1: [TR1, TR2], 2: TR > TR2
    int column = 0;        ///< 0: ED > ED2, 1: [ED1, ED2], 2: ED < ED1
    bool biomarker_block = false;  ///< BD > BD1 block of the three-endpoint table
};

/// Toxicity ratio high / low; +inf when only the low rate is zero, 1 when
/// both are zero.
double toxicity_ratio(double tox_high, double tox_low);

EmpiricalCellDecision empirical_cell2(double ed, double tr, const EmpiricalThresholds& thr);
EmpiricalCellDecision empirical_cell3(double ed, double tr, double bd, const EmpiricalThresholds& thr);

/// Applies the consider policy; Report keeps the comparison pending.
Resolution resolve(EmpiricalCell cell, EmpiricalConsiderPolicy policy);

struct EmpiricalStep {
    int high = 0;
    int low = 0;
    double ed = 0.0;
    double tr = 0.0;
    std::optional<double> bd;
    EmpiricalCellDecision cell;
    Resolution resolution = Resolution::Pending;
    std::string action;
};

struct EmpiricalTrace {
    std::vector<AdmissibilityVerdict> admissibility;
    std::vector<EmpiricalStep> steps;
    std::optional<int> selected;
    bool pending = false;
    std::vector<std::string> notes;
};

/// Observed marginal rates of each arm (counts / n).
std::vector<MarginalRates> observed_rates(const std::vector<ArmData>& arms);

EmpiricalStep empirical_compare(const MarginalRates& high, const MarginalRates& low, int high_index,
                                int low_index, const EmpiricalThresholds& thr);

/// Reference = highest dose level; lower doses compared from the lowest up.
/// A resolved Low stops at the lower dose, High moves to the next comparator.
EmpiricalTrace empirical_sequential(const std::vector<MarginalRates>& rates, const EmpiricalThresholds& thr,
                                    const std::vector<AdmissibilityVerdict>& admissibility = {});

/// Convenience overload working from arm data, with optional screening.
EmpiricalTrace empirical_sequential(const std::vector<ArmData>& arms, const EmpiricalThresholds& thr,
                                    const AdmissibilityConfig& adm);

/// Every (high > low) pair, in the order (1,2), (1,3), ..., with the
/// cell and its policy resolution.
std::vector<EmpiricalStep> empirical_pairwise(const std::vector<MarginalRates>& rates,
                                              const EmpiricalThresholds& thr);

const char* to_string(EmpiricalCell c);
const char* cell_letter(EmpiricalCell c);
const char* to_string(Resolution r);
const char* to_string(EmpiricalConsiderPolicy p);
const char* to_string(NegativeEdPolicy p);

}  // namespace doseopt
