#include "awg/materials.hpp"

#include <cmath>
#include <string>

#include "awg/errors.hpp"

namespace awg {

namespace {

using Domain = EvaluationDomain;

void check_lambda(double lambda_um) {
    if (!(lambda_um >= Domain::lambda_min_um && lambda_um <= Domain::lambda_max_um))
        throw DomainError("wavelength " + std::to_string(lambda_um) + " um outside [0.5, 5.0]");
}

double checked_pole(double denominator, const char* what) {
    if (std::abs(denominator) < Domain::pole_epsilon)
        throw DomainError(std::string("Sellmeier pole reached in ") + what);
    return denominator;
}

double checked_sqrt(double n_squared, const char* what) {
    if (!(n_squared > 0.0))
        throw DomainError(std::string(what) + ": n^2 <= 0");
    return std::sqrt(n_squared);
}

// Coefficients of the LiNbO3 form with the temperature folded in.
struct LiNbO3Terms {
    double lambda2;
    double A12, A34, A56, A78;
    double u;  // lambda^2 - A56^2
    double w;  // lambda^2 - A9^2
    double n;
};

LiNbO3Terms linbo3_terms(const LiNbO3Model& m, double lambda_um, double temperature_c) {
    check_lambda(lambda_um);
    if (!(temperature_c >= Domain::temperature_min_c && temperature_c <= Domain::temperature_max_c))
        throw DomainError("LiNbO3 temperature " + std::to_string(temperature_c) +
                          " C outside [0, 100]");
    LiNbO3Terms t{};
    const double H = temperature_c * temperature_c - m.T0 * m.T0;
    t.lambda2 = lambda_um * lambda_um;
    t.A12 = m.A1 + m.A2 * H;
    t.A34 = m.A3 + m.A4 * H;
    t.A56 = m.A5 + m.A6 * H;
    t.A78 = m.A7 + m.A8 * H;
    t.u = checked_pole(t.lambda2 - t.A56 * t.A56, "LiNbO3 UV term");
    t.w = checked_pole(t.lambda2 - m.A9 * m.A9, "LiNbO3 IR term");
    t.n = checked_sqrt(t.A12 + t.A34 / t.u + t.A78 / t.w - m.A10 * t.lambda2, "LiNbO3");
    return t;
}

struct PmmaTerms {
    double lambda2;
    double c2, c4;
    double u2, u4, u6;  // lambda^2 - Ci^2
    double n;
};

PmmaTerms pmma_terms(const PmmaModel& m, double lambda_um, double temperature_c) {
    check_lambda(lambda_um);
    if (!(temperature_c > Domain::temperature_min_c && temperature_c <= Domain::temperature_max_c))
        throw DomainError("PMMA temperature " + std::to_string(temperature_c) +
                          " C outside (0, 100]");
    PmmaTerms t{};
    t.lambda2 = lambda_um * lambda_um;
    t.c2 = m.C2(temperature_c);
    t.c4 = m.C4(temperature_c);
    t.u2 = checked_pole(t.lambda2 - t.c2 * t.c2, "PMMA C2 term");
    t.u4 = checked_pole(t.lambda2 - t.c4 * t.c4, "PMMA C4 term");
    t.u6 = checked_pole(t.lambda2 - m.C6 * m.C6, "PMMA C6 term");
    t.n = checked_sqrt(1.0 + m.C1 * t.lambda2 / t.u2 + m.C3 * t.lambda2 / t.u4 +
                           m.C5 * t.lambda2 / t.u6,
                       "PMMA");
    return t;
}

}  // namespace

std::string_view to_string(DerivativeMode mode) {
    return mode == DerivativeMode::exact ? "exact" : "paper";
}

DerivativeMode parse_derivative_mode(std::string_view text) {
    if (text == "exact") return DerivativeMode::exact;
    if (text == "paper" || text == "paper-literal") return DerivativeMode::paper;
    throw ConfigError("derivative mode must be 'exact' or 'paper', got '" + std::string(text) + "'");
}

std::string_view to_string(MaterialId id) { return id == MaterialId::linbo3 ? "linbo3" : "pmma"; }

// ---------------------------------------------------------------------------
// LiNbO3

double LiNbO3Model::index(double lambda_um, double temperature_c) const {
    return linbo3_terms(*this, lambda_um, temperature_c).n;
}

double LiNbO3Model::dn_dlambda(double lambda_um, double temperature_c) const {
    const auto t = linbo3_terms(*this, lambda_um, temperature_c);
    return (-lambda_um / t.n) * (t.A34 / (t.u * t.u) + t.A78 / (t.w * t.w) + A10);
}

double LiNbO3Model::d2n_dlambda2(double lambda_um, double temperature_c,
                                 DerivativeMode mode) const {
    const auto t = linbo3_terms(*this, lambda_um, temperature_c);
    const double bracket = t.A34 * (t.u - 4.0 * t.lambda2) / (t.u * t.u * t.u) +
                           t.A78 * (t.w - 4.0 * t.lambda2) / (t.w * t.w * t.w) + A10;
    const double printed = -bracket / t.n;
    if (mode == DerivativeMode::paper) return printed;
    // n'' = (f''/2 - n'^2) / n for n^2 = f.
    const double slope = (-lambda_um / t.n) * (t.A34 / (t.u * t.u) + t.A78 / (t.w * t.w) + A10);
    return printed - slope * slope / t.n;
}

double LiNbO3Model::dn_dT(double lambda_um, double temperature_c) const {
    const auto t = linbo3_terms(*this, lambda_um, temperature_c);
    const double uv = (t.u * A4 + 2.0 * A6 * t.A56 * t.A34) / (t.u * t.u);
    return (temperature_c / t.n) * (A2 + uv + A8 / t.w);
}

// ---------------------------------------------------------------------------
// PMMA

double PmmaModel::index(double lambda_um, double temperature_c) const {
    return pmma_terms(*this, lambda_um, temperature_c).n;
}

double PmmaModel::dn_dT(double lambda_um, double temperature_c) const {
    const auto t = pmma_terms(*this, lambda_um, temperature_c);
    // The C4 pole scales faster than the C2 pole by C4_base/C2_base (~1.635).
    const double ratio = C4_base / C2_base;
    const double bracket = C1 * t.c2 / (t.u2 * t.u2) + ratio * C3 * t.c4 / (t.u4 * t.u4);
    return t.lambda2 * C2_base / (t.n * T0) * bracket;
}

// ---------------------------------------------------------------------------

IndexSample sample_linbo3(const LiNbO3Model& model, double lambda_um, double temperature_c,
                          DerivativeMode mode) {
    return IndexSample{
        .lambda_um = lambda_um,
        .temperature_c = temperature_c,
        .n = model.index(lambda_um, temperature_c),
        .dn_dlambda = model.dn_dlambda(lambda_um, temperature_c),
        .d2n_dlambda2 = model.d2n_dlambda2(lambda_um, temperature_c, mode),
        .dn_dT = model.dn_dT(lambda_um, temperature_c),
    };
}

IndexSample sample_pmma(const PmmaModel& model, double lambda_um, double temperature_c) {
    return IndexSample{
        .lambda_um = lambda_um,
        .temperature_c = temperature_c,
        .n = model.index(lambda_um, temperature_c),
        .dn_dT = model.dn_dT(lambda_um, temperature_c),
    };
}

// ---------------------------------------------------------------------------
// Self check

bool SelfCheckReport::passed() const {
    for (const auto& d : derivatives)
        if (!d.passed()) return false;
    return true;
}

namespace {

void track(DerivativeDeviation& dev, double analytic, double numeric, double lambda_um,
           double temperature_c) {
    const double rel = std::abs(analytic - numeric) / std::abs(numeric);
    if (!(rel <= dev.max_relative_error)) {
        dev.max_relative_error = rel;
        dev.at_lambda_um = lambda_um;
        dev.at_temperature_c = temperature_c;
    }
}

template <class F>
double central(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace

SelfCheckReport derivative_self_check(const Materials& materials, MaterialId id,
                                      std::span<const double> lambda_grid_um,
                                      std::span<const double> temperature_grid_c,
                                      DerivativeMode mode, const FiniteDifferenceSteps& steps) {
    if (lambda_grid_um.empty() || temperature_grid_c.empty())
        throw ConfigError("derivative self check needs non-empty wavelength and temperature grids");

    SelfCheckReport report;
    report.material = id;
    report.mode = mode;

    if (id == MaterialId::linbo3) {
        const auto& m = materials.core;
        DerivativeDeviation d1{.name = "dn1_dlambda", .tolerance = 1e-5};
        DerivativeDeviation dT{.name = "dn1_dT", .tolerance = 1e-5};
        DerivativeDeviation d2{.name = "d2n1_dlambda2",
                               .tolerance = mode == DerivativeMode::exact ? 1e-4 : 0.0};
        for (double l : lambda_grid_um) {
            for (double T : temperature_grid_c) {
                track(d1, m.dn_dlambda(l, T),
                      central([&](double x) { return m.index(x, T); }, l, steps.lambda_um), l, T);
                track(dT, m.dn_dT(l, T),
                      central([&](double x) { return m.index(l, x); }, T, steps.temperature_c), l,
                      T);
                track(d2, m.d2n_dlambda2(l, T, mode),
                      central([&](double x) { return m.dn_dlambda(x, T); }, l, steps.lambda2_um), l,
                      T);
                ++report.points;
            }
        }
        report.derivatives = {d1, dT, d2};
    } else {
        const auto& m = materials.cladding;
        DerivativeDeviation dT{.name = "dn2_dT", .tolerance = 1e-5};
        for (double l : lambda_grid_um) {
            for (double T : temperature_grid_c) {
                track(dT, m.dn_dT(l, T),
                      central([&](double x) { return m.index(l, x); }, T, steps.temperature_c), l,
                      T);
                ++report.points;
            }
        }
        report.derivatives = {dT};
    }
    return report;
}

}  // namespace awg
