#include "hkqus/special.hpp"

#include <cmath>
#include <limits>

#include "hkqus/errors.hpp"

namespace hk {
namespace {

double polevl(double x, const double* coef, int n) {
  double r = coef[0];
  for (int i = 1; i <= n; ++i) r = r * x + coef[i];
  return r;
}

// polevl with an implied leading coefficient of 1.
double p1evl(double x, const double* coef, int n) {
  double r = x + coef[0];
  for (int i = 1; i < n; ++i) r = r * x + coef[i];
  return r;
}

// Cephes-style asymptotic tables (Moshier) for the x > 5 region.
constexpr double kPP[7] = {
    7.96936729297347051624e-4, 8.28352392107440799803e-2,
    1.23953371646414299388e0,  5.44725003058768775090e0,
    8.74716500199817011941e0,  5.30324038235394892183e0,
    9.99999999999999997821e-1,
};
constexpr double kPQ[7] = {
    9.24408810558863637013e-4, 8.56288474354474431428e-2,
    1.25352743901058953537e0,  5.47097740330417105182e0,
    8.76190883237069594232e0,  5.30605288235394617618e0,
    1.00000000000000000218e0,
};
constexpr double kQP[8] = {
    -1.13663838898469149931e-2, -1.28252718670509318512e0,
    -1.95539544257735972385e1,  -9.32060152123768231369e1,
    -1.77681167980488790968e2,  -1.47077505154951170175e2,
    -5.14105326766599330220e1,  -6.05014350600728481186e0,
};
constexpr double kQQ[7] = {
    6.43178256118178023184e1, 8.56430025976980587198e2,
    3.88240183605401609683e3, 7.24046774195652478189e3,
    5.93072701187316984827e3, 2.06209331660327847417e3,
    2.42005740240291393179e2,
};
constexpr double kSq2OverPi = 7.9788456080286535588e-1;
constexpr double kPiOver4 = 7.85398163397448309616e-1;
constexpr double kThreePiOver4 = 2.35619449019234492885e0;

// Cephes j1 tables.
constexpr double kRP1[4] = {
    -8.99971225705559398224e8, 4.52228297998194034323e11,
    -7.27494245221818276015e13, 3.68295732863852883286e15,
};
constexpr double kRQ1[8] = {
    6.20836478118054335476e2,  2.56987256757748830383e5,
    8.35146791431949253037e7,  2.21511595479792499675e10,
    4.74914122079991414898e12, 7.84369607876235854894e14,
    8.95222336184627338078e16, 5.32278620332680085395e18,
};
constexpr double kPP1[7] = {
    7.62125616208173112003e-4, 7.31397056940917570436e-2,
    1.12719608129684925192e0,  5.11207951146807644818e0,
    8.42404590141772420927e0,  5.21451598682361504063e0,
    1.00000000000000000254e0,
};
constexpr double kPQ1[7] = {
    5.71323128072548699714e-4, 6.88455908754495404082e-2,
    1.10514232634061696926e0,  5.07386386128601488557e0,
    8.39985554327604159757e0,  5.20982848682361821619e0,
    9.99999999999999997461e-1,
};
constexpr double kQP1[8] = {
    5.10862594750176621635e-2, 4.98213872951233449420e0,
    7.58238284132545283818e1,  3.66779609360150777800e2,
    7.10856304998926107277e2,  5.97489612400613639965e2,
    2.11688757100572135698e2,  2.52070205858023719784e1,
};
constexpr double kQQ1[7] = {
    7.42373277035675149943e1, 1.05644886038262816351e3,
    4.98641058337653607651e3, 9.56231892404756170795e3,
    7.99704160447350683650e3, 2.82619278517639096600e3,
    3.36093607810698293419e2,
};
constexpr double kZ1 = 1.46819706421238932572e1;  // first zero of J1, squared
constexpr double kZ2 = 4.92184563216946036703e1;  // second zero, squared

}  // namespace

double bessel_j0(double x) {
  x = std::fabs(x);
  if (x <= 5.0) {
    // ascending series; at x = 5 the largest term is ~40, so the result
    // keeps about 14 digits
    const double q = -0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int j = 1; j < 40; ++j) {
      term *= q / (static_cast<double>(j) * j);
      sum += term;
      if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return sum;
  }
  const double w = 5.0 / x;
  const double q = 25.0 / (x * x);
  const double p = polevl(q, kPP, 6) / polevl(q, kPQ, 6);
  const double r = polevl(q, kQP, 7) / p1evl(q, kQQ, 7);
  const double xn = x - kPiOver4;
  return (p * std::cos(xn) - w * r * std::sin(xn)) * kSq2OverPi / std::sqrt(x);
}

double bessel_j1(double x) {
  const double ax = std::fabs(x);
  double w;
  if (ax <= 5.0) {
    const double z = ax * ax;
    w = polevl(z, kRP1, 3) / p1evl(z, kRQ1, 8);
    w = w * ax * (z - kZ1) * (z - kZ2);
  } else {
    const double u = 5.0 / ax;
    const double z = u * u;
    const double p = polevl(z, kPP1, 6) / polevl(z, kPQ1, 6);
    const double q = polevl(z, kQP1, 7) / p1evl(z, kQQ1, 7);
    const double xn = ax - kThreePiOver4;
    w = (p * std::cos(xn) - u * q * std::sin(xn)) * kSq2OverPi / std::sqrt(ax);
  }
  return x < 0.0 ? -w : w;
}

double hyp1f1_half(double v, double z) {
  if (!(v > -0.1 && v <= 4.0)) throw invalid_input("hyp1f1_half: v out of range");
  if (z > 0.0) throw invalid_input("hyp1f1_half: requires z <= 0");
  if (z > -1e-300) return 1.0;

  const double a = -0.5 * v;
  const double w = -z;
  constexpr double kEps = 1e-16;

  if (w <= 40.0) {
    // Kummer transform: 1F1(a;1;z) = e^z 1F1(1-a;1;-z); the transformed series
    // has all-positive terms for our a range, so no cancellation.
    double term = 1.0, sum = 1.0;
    for (int j = 0; j < 500; ++j) {
      term *= (1.0 - a + j) * w / ((j + 1.0) * (j + 1.0));
      sum += term;
      if (term < kEps * sum && j > w) break;
    }
    return std::exp(z) * sum;
  }

  // Large-|z| asymptotic: 1F1(a;1;z) ~ w^{-a}/Gamma(1-a) * sum_n (a)_n^2/(n! w^n).
  double term = 1.0, sum = 1.0, prev = std::numeric_limits<double>::max();
  for (int n = 0; n < 60; ++n) {
    const double an = a + n;
    term *= an * an / ((n + 1.0) * w);
    if (std::fabs(term) >= prev) break;  // asymptotic tail started to grow
    sum += term;
    prev = std::fabs(term);
    if (std::fabs(term) < kEps * std::fabs(sum)) break;
  }
  return std::pow(w, -a) / std::tgamma(1.0 - a) * sum;
}

}  // namespace hk
