#include "heat1d/analysis/fit.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "heat1d/errors.hpp"

namespace heat1d::analysis {

namespace {

double mean(std::span<const double> values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

}  // namespace

double r_squared(std::span<const double> observed, std::span<const double> predicted) {
    if (observed.size() != predicted.size() || observed.empty())
        throw std::invalid_argument("r_squared needs equally sized, non-empty inputs");
    const double y_bar = mean(observed);
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double r = observed[i] - predicted[i];
        const double d = observed[i] - y_bar;
        ss_res += r * r;
        ss_tot += d * d;
    }
    if (ss_tot == 0.0) return ss_res == 0.0 ? 1.0 : -std::numeric_limits<double>::infinity();
    return 1.0 - ss_res / ss_tot;
}

FitResult fit_scaling(std::span<const ScalingSample> samples) {
    if (samples.empty()) throw DegenerateFit("no samples to fit");
    for (const auto& s : samples) {
        if (!(s.threads > 0.0)) throw DegenerateFit("thread counts must be positive");
    }
    const bool one_thread_count = std::all_of(samples.begin(), samples.end(),
                                              [&](const ScalingSample& s) { return s.threads == samples[0].threads; });
    if (one_thread_count) throw DegenerateFit("fit needs at least two distinct thread counts");

    std::vector<double> x;
    std::vector<double> y;
    x.reserve(samples.size());
    y.reserve(samples.size());
    for (const auto& s : samples) {
        x.push_back(1.0 / s.threads);
        y.push_back(s.elapsed_s);
    }
    const double x_bar = mean(x);
    const double y_bar = mean(y);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - x_bar) * (x[i] - x_bar);
        sxy += (x[i] - x_bar) * (y[i] - y_bar);
    }

    FitResult fit;
    fit.parallel_s = sxy / sxx;
    fit.serial_s = y_bar - fit.parallel_s * x_bar;

    const bool constant = std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; });
    if (constant) {
        fit.r_squared = 1.0;
        return fit;
    }
    std::vector<double> predicted;
    predicted.reserve(samples.size());
    for (const auto& s : samples) predicted.push_back(predict(fit, s.threads));
    fit.r_squared = r_squared(y, predicted);
    return fit;
}

}  // namespace heat1d::analysis
