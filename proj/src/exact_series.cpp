#include "cauchyderiv/sfun.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace cauchy {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Exact rational -> ScaledComplex. Numerator and denominator are brought into
// double range by power-of-two shifts; only their small net shift lands on the
// exponent, so the conversion is accurate to a few ulps regardless of how
// large the exact integers are.
ScaledComplex rational_to_scaled(const cpp_rational& q) {
    if (q == 0) return ScaledComplex::zero();
    cpp_int num = boost::multiprecision::numerator(q);
    cpp_int den = boost::multiprecision::denominator(q);
    bool negative = num < 0;
    if (negative) num = -num;
    auto reduce = [](cpp_int& v) -> long {
        long bits = static_cast<long>(boost::multiprecision::msb(v)) + 1;
        long shift = bits > 500 ? bits - 500 : 0;
        if (shift > 0) v >>= shift;
        return shift;
    };
    long shift_num = reduce(num);
    long shift_den = reduce(den);
    double ratio = static_cast<double>(num) / static_cast<double>(den);
    if (negative) ratio = -ratio;
    constexpr long double kLn2L = 0.693147180559945309417232121458176568L;
    return ScaledComplex::from(ratio).scaled_by_exp(
        static_cast<long double>(shift_num - shift_den) * kLn2L);
}

cpp_int binomial(int n, int k) {
    cpp_int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

cpp_int factorial(int n) {
    cpp_int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Bernoulli numbers of f(z) = z/(e^z - 1) = sum B_k z^k / k!  (B_1 = -1/2),
// via the classical recurrence sum_{k=0}^{n-1} C(n+1,k) B_k = -(n+1) B_n.
const std::vector<cpp_rational>& bernoulli_table() {
    static const std::vector<cpp_rational> table = [] {
        const int kMax = 128;
        std::vector<cpp_rational> b(kMax + 1);
        b[0] = 1;
        for (int n = 1; n <= kMax; ++n) {
            cpp_rational acc = 0;
            for (int k = 0; k < n; ++k) {
                if (k > 1 && k % 2 == 1) continue; // odd Bernoullis beyond B_1 vanish
                acc += cpp_rational(binomial(n + 1, k)) * b[k];
            }
            b[n] = -acc / (n + 1);
        }
        return b;
    }();
    return table;
}

const std::vector<cpp_int>& bell_table() {
    static const std::vector<cpp_int> table = [] {
        const int kMax = 130;
        std::vector<cpp_int> bell(kMax + 1);
        std::vector<cpp_int> row{1};
        bell[0] = 1;
        for (int n = 1; n <= kMax; ++n) {
            std::vector<cpp_int> next(row.size() + 1);
            next[0] = row.back();
            for (size_t k = 0; k + 1 < next.size(); ++k) next[k + 1] = next[k] + row[k];
            bell[n] = next[0];
            row.swap(next);
        }
        return bell;
    }();
    return table;
}

// sec(z)^6 as a series in w = z^2, exact rationals; enough terms for n <= 120.
const std::vector<cpp_rational>& sec6_table() {
    static const std::vector<cpp_rational> table = [] {
        const int kTerms = 64;
        std::vector<cpp_rational> cosw(kTerms), sec(kTerms);
        for (int k = 0; k < kTerms; ++k) {
            cosw[k] = cpp_rational(1, factorial(2 * k));
            if (k % 2 == 1) cosw[k] = -cosw[k];
        }
        sec[0] = 1;
        for (int n = 1; n < kTerms; ++n) {
            cpp_rational acc = 0;
            for (int j = 1; j <= n; ++j) acc += cosw[j] * sec[n - j];
            sec[n] = -acc;
        }
        auto mul = [&](const std::vector<cpp_rational>& a, const std::vector<cpp_rational>& b) {
            std::vector<cpp_rational> r(kTerms);
            for (int i = 0; i < kTerms; ++i)
                for (int j = 0; i + j < kTerms; ++j) r[i + j] += a[i] * b[j];
            return r;
        };
        auto sec2 = mul(sec, sec);
        auto sec4 = mul(sec2, sec2);
        return mul(sec4, sec2);
    }();
    return table;
}

// Maclaurin coefficients of the Airy equation y'' = z y with the given seeds,
// kept in scaled form: index 1000 is far below double range.
class AirySeriesTable {
public:
    AirySeriesTable(double c0, double c1) {
        coeffs_.push_back(ScaledComplex::from(c0));
        coeffs_.push_back(ScaledComplex::from(c1));
        coeffs_.push_back(ScaledComplex::zero());
    }

    ScaledComplex get(size_t n) {
        std::lock_guard<std::mutex> g(mutex_);
        while (coeffs_.size() <= n) {
            size_t k = coeffs_.size() - 3;
            coeffs_.push_back(coeffs_[k] / static_cast<double>((k + 3) * (k + 2)));
        }
        return coeffs_[n];
    }

private:
    std::mutex mutex_;
    std::vector<ScaledComplex> coeffs_;
};

AirySeriesTable& ai_table() {
    static AirySeriesTable t(std::exp(-(2.0 / 3.0) * std::log(3.0) - std::lgamma(2.0 / 3.0)),
                             -std::exp(-(1.0 / 3.0) * std::log(3.0) - std::lgamma(1.0 / 3.0)));
    return t;
}

AirySeriesTable& bi_table() {
    static AirySeriesTable t(std::exp(-(1.0 / 6.0) * std::log(3.0) - std::lgamma(2.0 / 3.0)),
                             std::exp((1.0 / 6.0) * std::log(3.0) - std::lgamma(1.0 / 3.0)));
    return t;
}

} // namespace

ScaledComplex bernoulli_gen_coefficient(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli_gen_coefficient: n must be nonnegative");
    const auto& table = bernoulli_table();
    if (n >= static_cast<int>(table.size()))
        throw std::out_of_range("bernoulli_gen_coefficient: cached up to index 128");
    return rational_to_scaled(table[n] / cpp_rational(factorial(n)));
}

ScaledComplex bell_coefficient(int n) {
    if (n < 0) throw std::invalid_argument("bell_coefficient: n must be nonnegative");
    const auto& table = bell_table();
    if (n >= static_cast<int>(table.size()))
        throw std::out_of_range("bell_coefficient: cached up to index 130");
    return rational_to_scaled(cpp_rational(table[n], factorial(n)));
}

ScaledComplex sec6_coefficient(int n) {
    if (n < 0) throw std::invalid_argument("sec6_coefficient: n must be nonnegative");
    if (n % 2 == 1) return ScaledComplex::zero();
    const auto& table = sec6_table();
    if (n / 2 >= static_cast<int>(table.size()))
        throw std::out_of_range("sec6_coefficient: series held up to n = 120");
    return rational_to_scaled(table[n / 2]);
}

ScaledComplex airy_ai_coefficient(int n) {
    if (n < 0) throw std::invalid_argument("airy_ai_coefficient: n must be nonnegative");
    return ai_table().get(static_cast<size_t>(n));
}

ScaledComplex airy_bi_coefficient(int n) {
    if (n < 0) throw std::invalid_argument("airy_bi_coefficient: n must be nonnegative");
    return bi_table().get(static_cast<size_t>(n));
}

ScaledComplex fornberg_log_coefficient(int n) {
    if (n <= 0) return ScaledComplex::zero();
    cpp_rational acc = 0;
    for (int j = 0; j <= std::min(10, n - 1); ++j) {
        cpp_rational term(binomial(10, j), n - j);
        if ((n - j) % 2 == 0) term = -term;
        acc += term;
    }
    return rational_to_scaled(acc);
}

} // namespace cauchy
