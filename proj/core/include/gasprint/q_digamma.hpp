#pragma once

#include <cstdint>

namespace gasprint::special {

/// Summation stops once a bound on the remaining tail falls below this
/// fraction of the running sum.
inline constexpr double kSeriesRelativeTolerance = 1e-16;

/// Evaluations that would need more terms than this are refused.
inline constexpr std::uint64_t kMaxSeriesTerms = 1'000'000'000;

/// Base q of a q-series, stored as logarithms so that bases within a few ulps
/// of 1 keep their precision. Only 0 < q < 1 is representable.
class QBase {
public:
    /// Throws DomainError unless 0 < q < 1.
    static QBase from_q(double q);
    /// Build from 1 - q directly; preferred when q is close to 1.
    static QBase from_one_minus_q(double one_minus_q);

    [[nodiscard]] double q() const noexcept { return q_; }
    [[nodiscard]] double log_q() const noexcept { return log_q_; }
    [[nodiscard]] double log_one_minus_q() const noexcept { return log_one_minus_q_; }
    /// Rough number of terms the series needs for full double precision.
    [[nodiscard]] double expected_terms() const noexcept;

private:
    QBase(double q, double log_q, double log_one_minus_q)
        : q_(q), log_q_(log_q), log_one_minus_q_(log_one_minus_q) {}

    double q_;
    double log_q_;
    double log_one_minus_q_;
};

/// A real number z written as sign * exp(log_abs); sign is -1, 0 or +1.
struct SignedLog {
    int sign = 0;
    double log_abs = 0.0;

    [[nodiscard]] double value() const noexcept;
};

struct SeriesEvaluation {
    double value = 0.0;
    std::uint64_t terms = 0;
};

/// q-digamma, the logarithmic derivative of the q-gamma function:
///
///   psi_q(x) = -ln(1 - q) + ln(q) * sum_{n>=0} q^(n+x) / (1 - q^(n+x))
///
/// Requires 0 < q < 1 and x > 0. Throws DomainError otherwise, or when the
/// series would need more than kMaxSeriesTerms terms.
[[nodiscard]] double q_digamma(double q, double x);

/// Adaptive evaluation that also reports how many terms were summed.
[[nodiscard]] SeriesEvaluation q_digamma_series(const QBase& base, double x);

/// Fixed-depth evaluation: exactly `terms` series terms, no early exit.
[[nodiscard]] double q_digamma_truncated(double q, double x, std::uint64_t terms);

/// psi_q expressed through z = q^x instead of x. For z in (0, 1) this is
/// psi_q(log(z) / log(q)); negative z continues the function to complex
/// arguments with real value, which the closed-form revenue needs when the
/// supply starts above its fixed point. Requires z < 1.
[[nodiscard]] SeriesEvaluation q_digamma_at_power(const QBase& base, SignedLog z);

}  // namespace gasprint::special
