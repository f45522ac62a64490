#include "gasprint/gas_price_series.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "gasprint/error.hpp"

namespace gasprint {

GasPriceSeries::GasPriceSeries(std::vector<GasPriceSample> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) throw DomainError("gas price series is empty");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const double p = samples_[i].price;
        if (!(std::isfinite(p) && p >= 0.0))
            throw DomainError("gas price sample " + std::to_string(i) + " must be >= 0");
        if (i > 0 && !(samples_[i - 1].time < samples_[i].time))
            throw DomainError("gas price sample " + std::to_string(i) +
                              " is not later than the previous one");
    }
}

int hour_of_day(Timestamp t) {
    const auto day = std::chrono::floor<std::chrono::days>(t);
    return static_cast<int>(std::chrono::duration_cast<std::chrono::hours>(t - day).count());
}

SeriesStats series_stats(const GasPriceSeries& series) {
    std::array<double, 24> hour_sum{};
    std::array<std::size_t, 24> hour_count{};
    double sum = 0.0;
    SeriesStats out;
    out.minimum = series.samples().front().price;
    for (const auto& s : series.samples()) {
        sum += s.price;
        if (s.price < out.minimum) out.minimum = s.price;
        const int h = hour_of_day(s.time);
        hour_sum[h] += s.price;
        ++hour_count[h];
    }
    out.average = sum / static_cast<double>(series.size());

    bool found = false;
    for (int h = 0; h < 24; ++h) {
        if (hour_count[h] == 0) continue;
        const double mean = hour_sum[h] / static_cast<double>(hour_count[h]);
        if (!found || mean < out.best_hour_mean) {
            out.best_hour = h;
            out.best_hour_mean = mean;
            found = true;
        }
    }
    return out;
}

}  // namespace gasprint
