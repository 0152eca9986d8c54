#include "doseopt/utility.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace doseopt {

namespace {

void check_score(double s, const char* name) {
    if (!(s >= 0.0 && s <= 100.0)) {
        std::ostringstream os;
        os << "utility score " << name << " = " << s << " outside [0, 100]";
        throw InputError(os.str());
    }
}

void check_prob(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream os;
        os << name << " = " << p << " outside [0, 1]";
        throw InputError(os.str());
    }
}

template <class Cells>
double cell_sum(const Cells& c) {
    return std::accumulate(c.begin(), c.end(), 0.0);
}

double cell_sum(const Cells8& c) { return cell_sum(c[0]) + cell_sum(c[1]); }

void check_joint(const Cells4& p) {
    for (double v : p) check_prob(v, "joint probability");
    if (std::abs(cell_sum(p) - 1.0) > kProbTolerance)
        throw InputError("joint probabilities do not sum to 1");
}

void check_joint(const Cells8& p) {
    for (const auto& row : p)
        for (double v : row) check_prob(v, "joint probability");
    if (std::abs(cell_sum(p) - 1.0) > kProbTolerance)
        throw InputError("joint probabilities do not sum to 1");
}

void check_marginal(const std::optional<double>& v, int n, const char* name) {
    if (v && (*v < -kCountTolerance || *v > n + kCountTolerance)) {
        std::ostringstream os;
        os << name << " count " << *v << " outside [0, " << n << "]";
        throw InputError(os.str());
    }
}

void check_agrees(const std::optional<double>& stated, double implied,
                  const std::string& label, const char* name) {
    if (stated && std::abs(*stated - implied) > kCountTolerance) {
        std::ostringstream os;
        os << "arm '" << label << "': stated " << name << " count " << *stated
           << " disagrees with joint cells (" << implied << ")";
        throw InputError(os.str());
    }
}

}  // namespace

void UtilityTable2::validate() const {
    check_score(u1, "u1");
    check_score(u2, "u2");
    check_score(u3, "u3");
    check_score(u4, "u4");
}

bool UtilityTable2::marginal_ok() const { return std::abs(u2 + u3 - 100.0) <= 1e-9; }

std::vector<std::string> UtilityTable2::warnings() const {
    std::vector<std::string> out;
    if (u1 != 100.0) out.emplace_back("u1 is conventionally 100 (most desirable outcome)");
    if (u4 != 0.0) out.emplace_back("u4 is conventionally 0 (least desirable outcome)");
    return out;
}

void UtilityTable3::validate() const {
    for (const auto& row : u)
        for (double s : row) check_score(s, "u_jk");
}

void CuiWeights::validate() const {
    if (toxicity < 0.0 || efficacy < 0.0 || biomarker < 0.0)
        throw InputError("CUI weights must be nonnegative");
    if (std::abs(toxicity + efficacy + biomarker - 1.0) > 1e-12)
        throw InputError("CUI weights must sum to 1");
}

std::optional<double> ArmData::toxicity_count() const {
    if (cells8) return (*cells8)[0][2] + (*cells8)[0][3] + (*cells8)[1][2] + (*cells8)[1][3];
    if (cells4) return (*cells4)[2] + (*cells4)[3];
    return toxicities;
}

std::optional<double> ArmData::efficacy_count() const {
    if (cells8) return (*cells8)[0][0] + (*cells8)[0][2] + (*cells8)[1][0] + (*cells8)[1][2];
    if (cells4) return (*cells4)[0] + (*cells4)[2];
    return responders;
}

std::optional<double> ArmData::biomarker_count() const {
    if (cells8) return cell_sum((*cells8)[1]);
    return biomarker_positive;
}

void ArmData::validate() const {
    if (n < 0) throw InputError("arm '" + label + "': negative sample size");
    check_marginal(toxicities, n, "toxicity");
    check_marginal(responders, n, "responder");
    check_marginal(biomarker_positive, n, "biomarker-positive");
    if (cells4 && cells8) throw InputError("arm '" + label + "': both 4- and 8-cell counts given");
    auto check_cells = [&](double total) {
        if (std::abs(total - n) > kCountTolerance) {
            std::ostringstream os;
            os << "arm '" << label << "': joint counts sum to " << total << ", expected n = " << n;
            throw InputError(os.str());
        }
    };
    if (cells4) {
        for (double c : *cells4)
            if (c < -kCountTolerance) throw InputError("arm '" + label + "': negative cell count");
        check_cells(cell_sum(*cells4));
    }
    if (cells8) {
        for (const auto& row : *cells8)
            for (double c : row)
                if (c < -kCountTolerance) throw InputError("arm '" + label + "': negative cell count");
        check_cells(cell_sum(*cells8));
        check_agrees(biomarker_positive, *biomarker_count(), label, "biomarker-positive");
    }
    if (cells4 || cells8) {
        check_agrees(toxicities, *toxicity_count(), label, "toxicity");
        check_agrees(responders, *efficacy_count(), label, "responder");
    }
}

double mean_utility_joint2(const Cells4& p, const UtilityTable2& u) {
    check_joint(p);
    const auto s = u.scores();
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) acc += p[k] * s[k];
    return acc;
}

double mean_utility_marginal2(double p_tox, double p_eff, const UtilityTable2& u) {
    if (!u.marginal_ok()) throw InputError("marginal utility formula requires u2 + u3 = 100");
    check_prob(p_tox, "p_T");
    check_prob(p_eff, "p_E");
    return u.u2 * (1.0 - p_tox) + u.u3 * p_eff;
}

double mean_utility_joint3(const Cells8& p, const UtilityTable3& u) {
    check_joint(p);
    double acc = 0.0;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 4; ++k) acc += p[j][k] * u.u[j][k];
    return acc;
}

double quasi_events2(const ArmData& arm, const UtilityTable2& u) {
    if (arm.cells4) {
        const auto s = u.scores();
        double acc = 0.0;
        for (int k = 0; k < 4; ++k) acc += (*arm.cells4)[k] * s[k];
        return acc / 100.0;
    }
    const auto nt = arm.toxicity_count();
    const auto ne = arm.efficacy_count();
    if (nt && ne && u.marginal_ok()) return (u.u2 * (arm.n - *nt) + u.u3 * *ne) / 100.0;
    throw InputError("arm '" + arm.label +
                     "': quasi-events need joint counts, or marginal counts with u2 + u3 = 100");
}

double quasi_events3(const ArmData& arm, const UtilityTable3& u) {
    if (!arm.cells8) throw InputError("arm '" + arm.label + "': three-endpoint utility needs 8-cell joint counts");
    double acc = 0.0;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 4; ++k) acc += (*arm.cells8)[j][k] * u.u[j][k];
    return acc / 100.0;
}

double cui_value(const MarginalRates& p, const CuiWeights& w) {
    w.validate();
    check_prob(p.toxicity, "p_T");
    check_prob(p.efficacy, "p_E");
    double v = w.toxicity * (1.0 - p.toxicity) + w.efficacy * p.efficacy;
    if (w.biomarker > 0.0) {
        if (!p.biomarker) throw InputError("CUI weight on biomarker but no biomarker rate");
        check_prob(*p.biomarker, "p_B");
        v += w.biomarker * *p.biomarker;
    }
    return v;
}

double cui_quasi_events(const ArmData& arm, const CuiWeights& w) {
    w.validate();
    const auto nt = arm.toxicity_count();
    const auto ne = arm.efficacy_count();
    if (!nt || !ne) throw InputError("arm '" + arm.label + "': CUI needs toxicity and efficacy counts");
    double x = w.toxicity * (arm.n - *nt) + w.efficacy * *ne;
    if (w.biomarker > 0.0) {
        const auto nb = arm.biomarker_count();
        if (!nb) throw InputError("arm '" + arm.label + "': CUI weight on biomarker but no biomarker count");
        x += w.biomarker * *nb;
    }
    return x;
}

UtilityTable3 utility3_from_offsets(const Cells4& base_row, const OffsetSpec& off) {
    UtilityTable3 t;
    for (int k = 0; k < 4; ++k) {
        if (off.a[k] < 0.0) throw InputError("utility offsets must be nonnegative");
        t.u[0][k] = base_row[k];
        t.u[1][k] = base_row[k] + off.a[k];
        if (off.override_positive[k]) t.u[1][k] = *off.override_positive[k];
    }
    t.validate();
    return t;
}

Cells4 independent_joint2(double p_tox, double p_eff) {
    check_prob(p_tox, "p_T");
    check_prob(p_eff, "p_E");
    return {p_eff * (1.0 - p_tox), (1.0 - p_eff) * (1.0 - p_tox), p_eff * p_tox,
            (1.0 - p_eff) * p_tox};
}

Cells8 independent_joint3(double p_tox, double p_eff, double p_bio) {
    check_prob(p_bio, "p_B");
    const Cells4 base = independent_joint2(p_tox, p_eff);
    Cells8 out{};
    for (int k = 0; k < 4; ++k) {
        out[0][k] = (1.0 - p_bio) * base[k];
        out[1][k] = p_bio * base[k];
    }
    return out;
}

MarginalRates marginals_of(const Cells4& p) {
    return {p[2] + p[3], p[0] + p[2], std::nullopt};
}

MarginalRates marginals_of(const Cells8& p) {
    MarginalRates m;
    m.toxicity = p[0][2] + p[0][3] + p[1][2] + p[1][3];
    m.efficacy = p[0][0] + p[0][2] + p[1][0] + p[1][2];
    m.biomarker = cell_sum(p[1]);
    return m;
}

int round_count(double rate, int n) {
    // Nudge by a few ulps so that 0.5 ties computed as 0.4999... still go up.
    return static_cast<int>(std::floor(rate * n + 0.5 + 1e-9));
}

ArmData arm_from_rates(std::string label, int n, const MarginalRates& rates,
                       Reconstruction mode) {
    check_prob(rates.toxicity, "toxicity rate");
    check_prob(rates.efficacy, "efficacy rate");
    if (rates.biomarker) check_prob(*rates.biomarker, "biomarker rate");
    ArmData arm;
    arm.label = std::move(label);
    arm.n = n;
    if (mode == Reconstruction::Rounded) {
        arm.toxicities = round_count(rates.toxicity, n);
        arm.responders = round_count(rates.efficacy, n);
        if (rates.biomarker) arm.biomarker_positive = round_count(*rates.biomarker, n);
        return arm;
    }
    if (rates.biomarker) {
        Cells8 c = independent_joint3(rates.toxicity, rates.efficacy, *rates.biomarker);
        for (auto& row : c)
            for (double& v : row) v *= n;
        arm.cells8 = c;
    } else {
        Cells4 c = independent_joint2(rates.toxicity, rates.efficacy);
        for (double& v : c) v *= n;
        arm.cells4 = c;
    }
    arm.toxicities = arm.toxicity_count();
    arm.responders = arm.efficacy_count();
    arm.biomarker_positive = arm.biomarker_count();
    return arm;
}

}  // namespace doseopt
