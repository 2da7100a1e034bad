#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace serpaudit::stats {

// One engine's score sample entering the significance procedure.
struct Sample {
    std::string label;
    std::vector<double> values;

    Sample(std::string label, std::vector<double> values);

    std::size_t size() const { return values.size(); }
    double mean() const;
    double variance() const;  // unbiased, n-1 denominator
};

enum class Transform { None, Log, Exp, Sqrt };

const char* transform_name(Transform t);

struct HistogramBin {
    double lower = 0.0;
    std::size_t count = 0;
};

// Equal-width bins spanning [min, max]; a zero-width range collapses to a
// single bin holding everything.
std::vector<HistogramBin> histogram(const Sample& sample, std::size_t bins);

// (theoretical normal quantile, sorted sample value) pairs,
// theoretical_i = Phi^-1((i - 0.5) / n).
std::vector<std::pair<double, double>> qq_points(const Sample& sample);

struct NormalityResult {
    double statistic = 0.0;
    double p = 1.0;
    bool pass = true;
};

// Jarque-Bera: JB = n/6 (S^2 + K^2/4), p from chi-squared(2).
// Requires n >= 8; throws SampleTooSmall below that.
NormalityResult normality_test(const Sample& sample, double alpha = 0.05);

// Element-wise transform. Log and Sqrt shift by (x - min + 1e-6) first when
// any value is <= 0, so their domain never fails; Exp overflow throws
// ValueOverflow.
Sample apply_transform(const Sample& sample, Transform kind);

struct FTestResult {
    double statistic = 1.0;  // larger variance over smaller, >= 1
    double p = 1.0;          // two-tail
    bool equal_variance = true;
};

// Two-tail variance-ratio F test; symmetric in its arguments.
FTestResult f_test(const Sample& a, const Sample& b, double alpha = 0.05);

struct TTestResult {
    double statistic = 0.0;
    double df = 0.0;
    double p = 1.0;  // two-tail
};

// Pooled-variance Student t when equal_variance, Welch t with
// Welch-Satterthwaite df otherwise.
TTestResult t_test_two_tail(const Sample& a, const Sample& b, bool equal_variance);

struct TestReport {
    std::pair<std::string, std::string> sample_labels;
    Transform transform_used = Transform::None;
    NormalityResult normality_a;
    NormalityResult normality_b;
    FTestResult f;
    TTestResult t;
    bool significant = false;
};

// The full procedure: joint normality check with the fixed transform search
// order NONE -> LOG -> SQRT -> EXP (first joint pass wins; falls back to the
// untransformed data when none passes), then F test, then the matching
// two-tail t test. Samples smaller than the Jarque-Bera validity floor (8)
// skip the normality stage as a vacuous pass. Deterministic.
TestReport significance_pipeline(const Sample& a, const Sample& b, double alpha = 0.05);

}  // namespace serpaudit::stats
