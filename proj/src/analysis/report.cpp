#include "heat1d/analysis/report.hpp"

#include <algorithm>
#include <set>

namespace heat1d::analysis {

std::vector<std::string> labels_of(std::span<const BenchRecord> records) {
    std::vector<std::string> labels;
    for (const auto& r : records) {
        if (std::find(labels.begin(), labels.end(), r.strategy) == labels.end()) labels.push_back(r.strategy);
    }
    return labels;
}

std::vector<LabelledFit> fit_by_label(std::span<const BenchRecord> records) {
    std::vector<LabelledFit> fits;
    for (const auto& label : labels_of(records)) {
        std::vector<ScalingSample> samples;
        std::set<std::size_t> thread_counts;
        for (const auto& r : records) {
            if (r.strategy != label) continue;
            samples.push_back({static_cast<double>(r.threads), r.elapsed_s});
            thread_counts.insert(r.threads);
        }
        if (thread_counts.size() < 2) continue;
        fits.push_back({label, samples.size(), fit_scaling(samples)});
    }
    return fits;
}

std::optional<double> mean_elapsed(std::span<const BenchRecord> records, const std::string& label,
                                   std::size_t threads) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& r : records) {
        if (r.strategy == label && r.threads == threads) {
            sum += r.elapsed_s;
            ++n;
        }
    }
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
}

}  // namespace heat1d::analysis
