#pragma once

#include <chrono>
#include <span>
#include <vector>

namespace gasprint {

using Timestamp = std::chrono::sys_time<std::chrono::minutes>;

struct GasPriceSample {
    Timestamp time;
    double price = 0.0;  // Gwei
};

/// Non-empty, strictly time-ordered gas price observations (UTC).
class GasPriceSeries {
public:
    /// Throws DomainError if empty, out of order, or any price is negative.
    explicit GasPriceSeries(std::vector<GasPriceSample> samples);

    [[nodiscard]] std::span<const GasPriceSample> samples() const noexcept { return samples_; }
    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }

    friend bool operator==(const GasPriceSeries& a, const GasPriceSeries& b) {
        if (a.samples_.size() != b.samples_.size()) return false;
        for (std::size_t i = 0; i < a.samples_.size(); ++i)
            if (a.samples_[i].time != b.samples_[i].time || a.samples_[i].price != b.samples_[i].price)
                return false;
        return true;
    }

private:
    std::vector<GasPriceSample> samples_;
};

struct SeriesStats {
    double average = 0.0;         // mean over all samples
    double minimum = 0.0;         // lowest single sample
    int best_hour = 0;            // UTC hour of day with the lowest mean price
    double best_hour_mean = 0.0;  // mean price within that hour
};

/// Ties between hours go to the earliest hour of the day.
[[nodiscard]] SeriesStats series_stats(const GasPriceSeries& series);

[[nodiscard]] int hour_of_day(Timestamp t);

}  // namespace gasprint
