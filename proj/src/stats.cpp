#include "serpaudit/stats.hpp"

#include <algorithm>
#include <cmath>

#include "serpaudit/errors.hpp"
#include "serpaudit/special.hpp"

namespace serpaudit::stats {

namespace {

constexpr std::size_t kNormalityFloor = 8;

double central_moment(std::span<const double> v, double mean, int k) {
    double sum = 0.0;
    for (double x : v) sum += std::pow(x - mean, k);
    return sum / static_cast<double>(v.size());
}

}  // namespace

Sample::Sample(std::string label_, std::vector<double> values_)
    : label(std::move(label_)), values(std::move(values_)) {
    if (values.size() < 3) {
        throw SampleTooSmall(label, values.size(), 3);
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw ValidationError("sample '" + label + "' contains a non-finite value");
        }
    }
}

double Sample::mean() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double Sample::variance() const {
    double m = mean();
    double sum = 0.0;
    for (double v : values) sum += (v - m) * (v - m);
    return sum / static_cast<double>(values.size() - 1);
}

const char* transform_name(Transform t) {
    switch (t) {
        case Transform::None: return "NONE";
        case Transform::Log: return "LOG";
        case Transform::Exp: return "EXP";
        case Transform::Sqrt: return "SQRT";
    }
    return "NONE";
}

std::vector<HistogramBin> histogram(const Sample& sample, std::size_t bins) {
    if (bins < 1) throw std::invalid_argument("histogram: bins must be >= 1");
    auto [lo_it, hi_it] = std::minmax_element(sample.values.begin(), sample.values.end());
    double lo = *lo_it;
    double hi = *hi_it;
    if (lo == hi) {
        return {HistogramBin{lo, sample.size()}};
    }
    std::vector<HistogramBin> out(bins);
    double width = (hi - lo) / static_cast<double>(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        out[i].lower = lo + width * static_cast<double>(i);
    }
    for (double v : sample.values) {
        auto idx = static_cast<std::size_t>((v - lo) / width);
        if (idx >= bins) idx = bins - 1;  // v == hi
        ++out[idx].count;
    }
    return out;
}

std::vector<std::pair<double, double>> qq_points(const Sample& sample) {
    std::vector<double> sorted = sample.values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<double, double>> out;
    out.reserve(sorted.size());
    double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        double p = (static_cast<double>(i) + 0.5) / n;
        out.emplace_back(special::normal_quantile(p), sorted[i]);
    }
    return out;
}

NormalityResult normality_test(const Sample& sample, double alpha) {
    if (sample.size() < kNormalityFloor) {
        throw SampleTooSmall(sample.label, sample.size(), kNormalityFloor);
    }
    double n = static_cast<double>(sample.size());
    double m = sample.mean();
    double m2 = central_moment(sample.values, m, 2);
    if (m2 == 0.0) throw ZeroVariance(sample.label);
    double m3 = central_moment(sample.values, m, 3);
    double m4 = central_moment(sample.values, m, 4);
    double skew = m3 / std::pow(m2, 1.5);
    double excess_kurtosis = m4 / (m2 * m2) - 3.0;
    NormalityResult r;
    r.statistic = n / 6.0 * (skew * skew + excess_kurtosis * excess_kurtosis / 4.0);
    r.p = special::chi_squared_sf(r.statistic, 2.0);
    r.pass = r.p >= alpha;
    return r;
}

Sample apply_transform(const Sample& sample, Transform kind) {
    if (kind == Transform::None) return sample;
    constexpr double kShiftDelta = 1e-6;
    std::vector<double> out;
    out.reserve(sample.size());
    std::string label = sample.label + "/" + transform_name(kind);
    switch (kind) {
        case Transform::Log:
        case Transform::Sqrt: {
            double lo = *std::min_element(sample.values.begin(), sample.values.end());
            double shift = lo <= 0.0 ? -lo + kShiftDelta : 0.0;
            for (double v : sample.values) {
                double x = v + shift;
                out.push_back(kind == Transform::Log ? std::log(x) : std::sqrt(x));
            }
            break;
        }
        case Transform::Exp: {
            for (double v : sample.values) {
                double x = std::exp(v);
                if (!std::isfinite(x)) {
                    throw ValueOverflow("EXP transform overflows for sample '" +
                                        sample.label + "'");
                }
                out.push_back(x);
            }
            break;
        }
        case Transform::None:
            break;
    }
    return Sample(std::move(label), std::move(out));
}

FTestResult f_test(const Sample& a, const Sample& b, double alpha) {
    double va = a.variance();
    double vb = b.variance();
    // Exact variance ties break on sample size so swapping arguments can
    // never change the answer.
    bool a_on_top = va > vb || (va == vb && a.size() >= b.size());
    const Sample& hi = a_on_top ? a : b;
    const Sample& lo = a_on_top ? b : a;
    double v_hi = a_on_top ? va : vb;
    double v_lo = a_on_top ? vb : va;
    if (v_lo == 0.0) {
        throw ZeroVariance(lo.label);
    }
    FTestResult r;
    r.statistic = v_hi / v_lo;
    r.p = std::min(1.0, 2.0 * special::f_sf(r.statistic, static_cast<double>(hi.size()) - 1.0,
                                            static_cast<double>(lo.size()) - 1.0));
    r.equal_variance = r.p >= alpha;
    return r;
}

TTestResult t_test_two_tail(const Sample& a, const Sample& b, bool equal_variance) {
    double n1 = static_cast<double>(a.size());
    double n2 = static_cast<double>(b.size());
    double m1 = a.mean();
    double m2 = b.mean();
    double v1 = a.variance();
    double v2 = b.variance();

    TTestResult r;
    double se = 0.0;
    if (equal_variance) {
        r.df = n1 + n2 - 2.0;
        double pooled = ((n1 - 1.0) * v1 + (n2 - 1.0) * v2) / r.df;
        se = std::sqrt(pooled * (1.0 / n1 + 1.0 / n2));
    } else {
        double u1 = v1 / n1;
        double u2 = v2 / n2;
        se = std::sqrt(u1 + u2);
        if (u1 + u2 > 0.0) {
            r.df = (u1 + u2) * (u1 + u2) /
                   (u1 * u1 / (n1 - 1.0) + u2 * u2 / (n2 - 1.0));
        } else {
            r.df = n1 + n2 - 2.0;
        }
    }
    if (se == 0.0) {
        // Both samples constant: identical means is a vacuous "no difference",
        // different means cannot be tested at all.
        if (m1 == m2) {
            r.statistic = 0.0;
            r.df = n1 + n2 - 2.0;
            r.p = 1.0;
            return r;
        }
        throw ZeroVariance(a.label + "' vs '" + b.label);
    }
    r.statistic = (m1 - m2) / se;
    r.p = 2.0 * special::student_t_sf(std::fabs(r.statistic), r.df);
    if (r.p > 1.0) r.p = 1.0;
    return r;
}

TestReport significance_pipeline(const Sample& a, const Sample& b, double alpha) {
    TestReport report;
    report.sample_labels = {a.label, b.label};

    const Sample* use_a = &a;
    const Sample* use_b = &b;
    Sample hold_a = a;
    Sample hold_b = b;

    bool can_test_normality =
        a.size() >= kNormalityFloor && b.size() >= kNormalityFloor;
    if (can_test_normality) {
        static constexpr Transform kSearchOrder[] = {Transform::None, Transform::Log,
                                                     Transform::Sqrt, Transform::Exp};
        bool found = false;
        for (Transform t : kSearchOrder) {
            Sample ta = hold_a;
            Sample tb = hold_b;
            try {
                ta = apply_transform(a, t);
                tb = apply_transform(b, t);
            } catch (const ValueOverflow&) {
                continue;  // an exploding candidate just drops out of the search
            }
            NormalityResult na = normality_test(ta, alpha);
            NormalityResult nb = normality_test(tb, alpha);
            if (t == Transform::None) {
                // Keep the untransformed result as the fallback record.
                report.transform_used = t;
                report.normality_a = na;
                report.normality_b = nb;
            }
            if (na.pass && nb.pass) {
                report.transform_used = t;
                report.normality_a = na;
                report.normality_b = nb;
                hold_a = std::move(ta);
                hold_b = std::move(tb);
                found = true;
                break;
            }
        }
        if (!found) {
            // Best effort: no transform normalizes both; test the raw data.
            hold_a = a;
            hold_b = b;
        }
        use_a = &hold_a;
        use_b = &hold_b;
    }
    // Below the validity floor the check has no power; it never rejects.

    report.f = f_test(*use_a, *use_b, alpha);
    report.t = t_test_two_tail(*use_a, *use_b, report.f.equal_variance);
    report.significant = report.t.p < alpha;
    return report;
}

}  // namespace serpaudit::stats
