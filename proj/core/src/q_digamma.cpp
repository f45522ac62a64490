#include "gasprint/q_digamma.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "gasprint/error.hpp"

namespace gasprint::special {

namespace {

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct Term {
    double value;      // w / (1 - w)
    double magnitude;  // |w|
};

/// n-th term of sum_n w_n / (1 - w_n), w_n = z q^n, z = sign * exp(log_abs).
Term lambert_term(const QBase& base, SignedLog z, std::uint64_t n) {
    const double a = z.log_abs + static_cast<double>(n) * base.log_q();
    const double e = std::exp(a);
    if (z.sign > 0) return {e / -std::expm1(a), e};
    return {-e / (1.0 + e), e};
}

SeriesEvaluation sum_series(const QBase& base, SignedLog z, std::uint64_t fixed_terms) {
    const bool adaptive = fixed_terms == 0;
    if (z.sign > 0 && z.log_abs >= 0.0) throw DomainError("q-series requires q^x < 1");
    if (adaptive && base.expected_terms() > static_cast<double>(kMaxSeriesTerms)) {
        char gap[32];
        std::snprintf(gap, sizeof gap, "%.3g", std::exp(base.log_one_minus_q()));
        throw DomainError(std::string("q-digamma series with 1 - q = ") + gap +
                          " needs more than " + std::to_string(kMaxSeriesTerms) +
                          " terms; use the block recurrence instead");
    }

    // Terms shrink at least geometrically with ratio q once |w| < 1, so the
    // tail after term n is at most q / (1 - q) * max(|term|, |w|).
    const double tail_factor = std::exp(base.log_q() - base.log_one_minus_q());
    CompensatedSum sum;
    std::uint64_t n = 0;
    if (z.sign != 0) {
        for (;; ++n) {
            if (!adaptive && n == fixed_terms) break;
            const Term term = lambert_term(base, z, n);
            sum.add(term.value);
            const double tail = tail_factor * std::max(std::abs(term.value), term.magnitude);
            if (adaptive && term.magnitude < 1.0 &&
                (term.value == 0.0 || tail <= kSeriesRelativeTolerance * std::abs(sum.value()))) {
                ++n;
                break;
            }
            if (n >= kMaxSeriesTerms) throw DomainError("q-digamma series failed to converge");
        }
    }
    return {-base.log_one_minus_q() + base.log_q() * sum.value(), n};
}

void check_argument(double x) {
    if (!(std::isfinite(x) && x > 0.0)) throw DomainError("q-digamma requires x > 0");
}

}  // namespace

QBase QBase::from_q(double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie strictly between 0 and 1");
    return QBase(q, std::log(q), std::log1p(-q));
}

QBase QBase::from_one_minus_q(double one_minus_q) {
    if (!(one_minus_q > 0.0 && one_minus_q < 1.0))
        throw DomainError("q must lie strictly between 0 and 1");
    return QBase(1.0 - one_minus_q, std::log1p(-one_minus_q), std::log(one_minus_q));
}

double QBase::expected_terms() const noexcept {
    return (-std::log(kSeriesRelativeTolerance) - log_one_minus_q_) / -log_q_;
}

double SignedLog::value() const noexcept {
    return sign == 0 ? 0.0 : static_cast<double>(sign) * std::exp(log_abs);
}

double q_digamma(double q, double x) { return q_digamma_series(QBase::from_q(q), x).value; }

SeriesEvaluation q_digamma_series(const QBase& base, double x) {
    check_argument(x);
    return sum_series(base, {+1, x * base.log_q()}, 0);
}

double q_digamma_truncated(double q, double x, std::uint64_t terms) {
    check_argument(x);
    if (terms == 0) throw DomainError("truncation depth must be positive");
    const QBase base = QBase::from_q(q);
    return sum_series(base, {+1, x * base.log_q()}, terms).value;
}

SeriesEvaluation q_digamma_at_power(const QBase& base, SignedLog z) {
    if (z.sign < -1 || z.sign > 1) throw DomainError("sign must be -1, 0 or +1");
    return sum_series(base, z, 0);
}

}  // namespace gasprint::special
