#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "camv/errors.hpp"
#include "camv/rfmath.hpp"

using namespace camv;

TEST_CASE("gamma and VSWR round trip") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> g(0.0, 0.999);
  for (int i = 0; i < 1000; ++i) {
    const double gamma = g(rng);
    CHECK(std::abs(gamma_from_vswr(vswr_from_gamma(gamma)) - gamma) <= 1e-12);
  }
  CHECK(vswr_from_gamma(0.0) == 1.0);
  CHECK(gamma_from_vswr(1.0) == 0.0);
  CHECK_THROWS_AS(vswr_from_gamma(1.0), std::domain_error);
  CHECK_THROWS_AS(vswr_from_gamma(-0.1), std::domain_error);
  CHECK_THROWS_AS(gamma_from_vswr(0.9), std::domain_error);
}

TEST_CASE("reference conversions") {
  // |G| = 10^(-15/20); VSWR = (1 + |G|) / (1 - |G|)
  const double g15 = std::pow(10.0, -0.75);
  CHECK(gamma_from_rl_db(15.0).value == doctest::Approx(g15).epsilon(1e-15));
  CHECK(std::abs(vswr_from_rl_db(15.0) - 1.4326) <= 1e-4);
  CHECK(std::abs(vswr_from_gamma(0.31623) - 1.9250) <= 1e-4);
  CHECK(rl_db_from_gamma(gamma_from_rl_db(10.0).value) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(std::isinf(rl_db_from_gamma(0.0)));
  CHECK(rl_db_from_gamma(1.0) == 0.0);
}

TEST_CASE("perfect-match clamp") {
  const auto a = gamma_from_rl_db(299.0);
  CHECK_FALSE(a.clamped);
  CHECK(a.value > 0.0);
  const auto b = gamma_from_rl_db(300.0);
  CHECK(b.clamped);
  CHECK(b.value == 0.0);
  CHECK_THROWS_AS(gamma_from_rl_db(-1.0), std::domain_error);
}

TEST_CASE("conversions are scalar-generic") {
  const float v = vswr_from_gamma(0.2f);
  CHECK(v == doctest::Approx(1.5).epsilon(1e-6));
  const long double g = gamma_from_vswr(3.0L);
  CHECK(std::abs(g - 0.5L) < 1e-18L);
}

namespace {

// RL(f) = 25 - |f - 28 GHz| / 0.2 GHz dB, sampled every 0.1 GHz from 25 to 31 GHz.
std::vector<ReflectionPoint> v_curve() {
  std::vector<ReflectionPoint> pts;
  for (int i = 0; i <= 60; ++i) {
    const double f = 25e9 + i * 0.1e9;
    pts.push_back(ReflectionPoint::from_rl_db(f, 25.0 - std::abs(f - 28e9) / 0.2e9));
  }
  return pts;
}

}  // namespace

TEST_CASE("band extraction on a V-shaped curve") {
  const auto pts = v_curve();
  // RL >= 15 where |f - 28| <= 2 GHz.
  const auto bands = band_below_threshold(pts, 15.0);
  REQUIRE(bands.size() == 1);
  CHECK(bands[0].start == doctest::Approx(26e9).epsilon(1e-9));
  CHECK(bands[0].stop == doctest::Approx(30e9).epsilon(1e-9));
  // Off-sample crossing: RL >= 17.3 where |f - 28| <= 1.54 GHz.
  const auto b2 = band_below_threshold(pts, 17.3);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].start == doctest::Approx(26.46e9).epsilon(1e-9));
  CHECK(b2[0].stop == doctest::Approx(29.54e9).epsilon(1e-9));
  CHECK(band_below_threshold(pts, 30.0).empty());
  // Whole sweep qualifies.
  const auto all = band_below_threshold(pts, 5.0);
  REQUIRE(all.size() == 1);
  CHECK(all[0].start == 25e9);
  CHECK(all[0].stop == 31e9);
}

TEST_CASE("band extraction with two dips") {
  std::vector<ReflectionPoint> pts;
  const double rl[] = {5, 20, 5, 5, 20, 20, 5};
  for (int i = 0; i < 7; ++i) pts.push_back(ReflectionPoint::from_rl_db(25e9 + i * 1e9, rl[i]));
  const auto bands = band_below_threshold(pts, 12.5);
  REQUIRE(bands.size() == 2);
  CHECK(bands[0].start == doctest::Approx(25.5e9));
  CHECK(bands[0].stop == doctest::Approx(26.5e9));
  CHECK(bands[1].start == doctest::Approx(28.5e9));
  CHECK(bands[1].stop == doctest::Approx(30.5e9));
}

TEST_CASE("VSWR and return-loss thresholds select identical bands") {
  const auto pts = v_curve();
  for (const double vswr : {1.2, 1.4326, 1.5, 2.0, 3.0}) {
    const double rl = rl_db_from_gamma(gamma_from_vswr(vswr));
    const auto a = band_below_vswr(pts, vswr);
    const auto b = band_below_threshold(pts, rl);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].start == b[i].start);
      CHECK(a[i].stop == b[i].stop);
    }
  }
}

TEST_CASE("band extraction preconditions") {
  auto pts = v_curve();
  std::swap(pts[3], pts[4]);
  CHECK_THROWS_AS(band_below_threshold(pts, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(band_below_threshold({ReflectionPoint::from_rl_db(28e9, 10)}, 10.0), std::invalid_argument);
}

TEST_CASE("return-loss CSV") {
  const auto dir = std::filesystem::temp_directory_path() / "camv_test_rf";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "rl.csv") << "freq_hz,rl_db\r\n26e9,8\r\n27e9,16\r\n28e9,24\r\n29e9,16\r\n30e9,8\r\n";
  const auto pts = read_return_loss_csv(dir / "rl.csv");
  REQUIRE(pts.size() == 5);
  CHECK(pts[2].gamma_mag == doctest::Approx(std::pow(10.0, -1.2)));
  const auto bands = band_below_threshold(pts, 15.0);
  REQUIRE(bands.size() == 1);
  CHECK(bands[0].start == doctest::Approx(26.875e9));
  CHECK(bands[0].stop == doctest::Approx(29.125e9));

  std::ofstream(dir / "bad.csv") << "freq_hz,rl_db\n26e9,8\n27e9,oops\n";
  try {
    read_return_loss_csv(dir / "bad.csv");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.row() == 3);
    CHECK(std::string(e.what()).find("bad.csv") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_return_loss_csv("freq,rl\n1,2\n"), FormatError);
  CHECK_THROWS_AS(parse_return_loss_csv("freq_hz,rl_db\n1e9,-3\n"), FormatError);
  CHECK_THROWS_AS(parse_return_loss_csv("freq_hz,rl_db\n1e9\n"), FormatError);
}
