#include "cauchyderiv/sfun.hpp"

#include <cmath>
#include <stdexcept>

namespace cauchy {
namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kLanczosG = 6.024680040776729583740234375;

// Lanczos N=13 rational sum (the double-precision coefficient set of
// Pugh/Godfrey); num/den in ascending order, den(z) = z(z+1)...(z+11).
const double kNum[13] = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443603510684028368377121,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
};
const double kDen[13] = {
    0, 39916800, 120543840, 150917976, 105258076, 45995730,
    13339535, 2637558, 357423, 32670, 1925, 66, 1,
};

Complex lanczos_sum(Complex z) {
    if (std::abs(z) <= 1.0) {
        Complex num = kNum[12];
        Complex den = kDen[12];
        for (int i = 11; i >= 0; --i) {
            num = num * z + kNum[i];
            den = den * z + kDen[i];
        }
        return num / den;
    }
    Complex s = 1.0 / z;
    Complex num = kNum[0];
    Complex den = kDen[0];
    for (int i = 1; i < 13; ++i) {
        num = num * s + kNum[i];
        den = den * s + kDen[i];
    }
    return num / den;
}

Complex lanczos_sum_derivative_ratio(Complex z) {
    // d/dz log lanczos_sum = num'/num - den'/den
    Complex num(0, 0), dnum(0, 0), den(0, 0), dden(0, 0);
    for (int i = 12; i >= 0; --i) {
        dnum = dnum * z + num;
        num = num * z + kNum[i];
        dden = dden * z + den;
        den = den * z + kDen[i];
    }
    return dnum / num - dden / den;
}

bool at_pole(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log sin(pi z) continuous in the closed upper half plane (Im z >= 0):
// sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}).
Complex log_sin_pi_upper(Complex z) {
    const Complex i(0.0, 1.0);
    return -i * kPi * z + std::log(1.0 - std::exp(2.0 * kPi * i * z)) -
           std::log(2.0) + i * (kPi / 2.0);
}

Complex cot_pi(Complex z) {
    double ai = std::abs(z.imag());
    if (ai > 0.5) {
        // cot(w) = i (q + 1)/(q - 1), q = e^{2 i w}; stable for |Im w| large
        const Complex i(0.0, 1.0);
        Complex w = kPi * z;
        if (z.imag() > 0.0) {
            Complex q = std::exp(2.0 * i * w);
            return i * (q + 1.0) / (q - 1.0);
        }
        Complex q = std::exp(-2.0 * i * w);
        return -i * (q + 1.0) / (q - 1.0);
    }
    return std::cos(kPi * z) / std::sin(kPi * z);
}

} // namespace

Complex log_gamma_complex(Complex z) {
    if (at_pole(z)) throw std::domain_error("log_gamma_complex: pole at nonpositive integer");
    if (z.imag() < 0.0) return std::conj(log_gamma_complex(std::conj(z)));
    if (z.real() >= 0.5) {
        Complex zm1 = z - 1.0;
        Complex t = zm1 + (kLanczosG + 0.5);
        return (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
    }
    return std::log(kPi) - log_sin_pi_upper(z) - log_gamma_complex(1.0 - z);
}

Complex digamma_complex(Complex z) {
    if (at_pole(z)) throw std::domain_error("digamma_complex: pole at nonpositive integer");
    if (z.imag() < 0.0) return std::conj(digamma_complex(std::conj(z)));
    if (z.real() >= 0.5) {
        Complex zm1 = z - 1.0;
        Complex t = zm1 + (kLanczosG + 0.5);
        return std::log(t) + (zm1 + 0.5) / t - 1.0 + lanczos_sum_derivative_ratio(z);
    }
    return digamma_complex(1.0 - z) - kPi * cot_pi(z);
}

} // namespace cauchy
