#include <doctest.h>

#include <cmath>

#include "hkqus/errors.hpp"
#include "hkqus/special.hpp"

namespace {

// Power-series oracle for J0, independent of the rational approximations.
// Usable for |x| <= 12 before cancellation matters.
double j0_series(double x) {
  const double q = -0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int j = 1; j < 80; ++j) {
    term *= q / (static_cast<double>(j) * j);
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

struct RefPoint {
  double x, value;
};

}  // namespace

TEST_CASE("bessel_j0 reference values") {
  // frozen from a 40-digit arbitrary-precision evaluation
  const RefPoint table[] = {
      {0.0, 1.0},
      {0.5, 0.9384698072408129},
      {1.0, 0.76519768655796655},
      {2.0, 0.22389077914123567},
      {3.0, -0.26005195490193344},
      {5.0, -0.1775967713143383},
      {7.5, 0.2663396578803784},
      {8.0, 0.17165080713755391},
      {10.0, -0.24593576445134834},
      {13.3, 0.21829809031927707},
      {17.0, -0.16985425215118355},
      {21.5, -0.048942043721558057},
      {26.0, 0.15599931552242113},
      {33.7, 0.010411602945694851},
      {41.0, -0.1007457891244798},
      {47.3, -0.094959345344983001},
      {50.0, 0.055812327669251815},
  };
  for (const auto& r : table) {
    CHECK(std::fabs(hk::bessel_j0(r.x) - r.value) < 1e-10);
    CHECK(std::fabs(hk::bessel_j0(-r.x) - r.value) < 1e-10);  // even function
  }
}

TEST_CASE("bessel_j0 basics") {
  CHECK(hk::bessel_j0(0.0) == 1.0);
  CHECK(std::fabs(hk::bessel_j0(2.404825557695773)) < 1e-9);  // first root
  CHECK(hk::bessel_j0(1.0) == doctest::Approx(0.7651976865579666).epsilon(1e-12));
}

TEST_CASE("bessel_j0 against power series") {
  for (double x = 0.0; x <= 12.0; x += 0.0937) {
    CHECK(std::fabs(hk::bessel_j0(x) - j0_series(x)) < 1e-11);
  }
}

TEST_CASE("bessel_j1 reference values") {
  // frozen oracle values
  const RefPoint table[] = {
      {0.0, 0.0},
      {0.5, 0.24226845767487388},
      {1.0, 0.44005058574493355},
      {3.0, 0.33905895852593645},
      {7.0, -0.0046828234823458326},
      {12.5, -0.16548380461475972},
      {30.0, -0.11875106261662294},
      {50.0, -0.097511828125175129},
  };
  for (const auto& r : table) {
    CHECK(std::fabs(hk::bessel_j1(r.x) - r.value) < 1e-10);
    CHECK(std::fabs(hk::bessel_j1(-r.x) + r.value) < 1e-10);  // odd function
  }
}

TEST_CASE("hyp1f1_half trivial cases") {
  CHECK(hk::hyp1f1_half(0.72, 0.0) == 1.0);
  // 1F1(-1; 1; z) = 1 - z exactly
  for (double z : {-0.5, -7.0, -39.0, -41.0, -300.0, -2e4}) {
    CHECK(hk::hyp1f1_half(2.0, z) == doctest::Approx(1.0 - z).epsilon(1e-12));
  }
}

TEST_CASE("hyp1f1_half frozen oracle table") {
  struct Row {
    double v, z, value;
  };
  // frozen from a 40-digit arbitrary-precision evaluation
  const Row rows[] = {
      {0.72, -0.1, 1.0354343253054292},   {0.72, -1.0, 1.3113872022047858},
      {0.72, -10.0, 2.6075873706918717},  {0.72, -39.99, 4.2524087705033737},
      {0.72, -40.01, 4.253167332381783},  {0.72, -50.0, 4.6055136842844476},
      {0.72, -500.0, 10.52596104616241},  {0.72, -10000.0, 30.940375829529868},
      {0.72, -1000000.0, 162.37531719959307},
      {0.72, -2500000000.0, 2715.0532972792965},
      {0.88, -1.0, 1.3875845867715343},   {0.88, -39.99, 5.7494496506418379},
      {0.88, -40.01, 5.7507007072454524}, {0.88, -10000.0, 64.963624817071611},
      {1.44, -10.0, 6.0501721147813182},  {1.44, -50.0, 18.512722771274242},
      {1.44, -1000000.0, 22894.386146543992},
      {1.76, -39.99, 27.416549503471649}, {1.76, -40.01, 27.428354880272374},
      {1.76, -2500000000.0, 195052542.80834894},
      {2.16, -0.1, 1.108213818189863},    {2.16, -500.0, 794.92993085426576},
      {2.64, -1.0, 2.4183776608633022},   {2.64, -10000.0, 161381.29547435917},
      {2.88, -10.0, 26.113532472297069},  {2.88, -50.0, 228.29547555624963},
      {3.52, -39.99, 438.64366552543658}, {3.52, -40.01, 439.01384502421184},
      {3.52, -1000000.0, 22389907926.111483},
      {4.0, -0.1, 1.205},                 {4.0, -10.0, 71.0},
      {4.0, -2500000000.0, 3.125000005e18},
      {0.002, -0.1, 1.0000975569488958},  {0.002, -50.0, 1.0044985249290278},
      {0.002, -2500000000.0, 1.0224645620241328},
  };
  for (const auto& r : rows) {
    const double got = hk::hyp1f1_half(r.v, r.z);
    CHECK_MESSAGE(std::fabs(got / r.value - 1.0) < 1e-8,
                  "v=", r.v, " z=", r.z, " got=", got, " want=", r.value);
  }
}

TEST_CASE("hyp1f1_half straddles the series/asymptotic switch smoothly") {
  // the frozen table rows at z = -39.99 and z = -40.01 pin each branch to
  // 1e-8; here both sides of the switch must track the exact polynomial case
  for (double z : {-39.999, -40.0, -40.001}) {
    CHECK(hk::hyp1f1_half(2.0, z) == doctest::Approx(1.0 - z).epsilon(1e-10));
    // 1F1(-2;1;z) = 1 - 2z + z^2/2
    CHECK(hk::hyp1f1_half(4.0, z) ==
          doctest::Approx(1.0 - 2.0 * z + 0.5 * z * z).epsilon(1e-10));
  }
}

TEST_CASE("hyp1f1_half domain errors") {
  CHECK_THROWS_AS(hk::hyp1f1_half(0.72, 0.5), hk::invalid_input);
  CHECK_THROWS_AS(hk::hyp1f1_half(4.5, -1.0), hk::invalid_input);
  CHECK_THROWS_AS(hk::hyp1f1_half(-0.5, -1.0), hk::invalid_input);
}
