#include <doctest.h>

#include <cmath>

#include "primesteg/metrics.hpp"

using namespace primesteg;

TEST_SUITE("image statistics") {
  TEST_CASE("mse") {
    const auto a = synth_image(9, 9, SynthMode::seeded_noise, 1);
    const auto b = synth_image(9, 9, SynthMode::seeded_noise, 2);
    CHECK(mse(a, a) == 0.0);
    CHECK(mse(a, b) == mse(b, a));
    CHECK(mse(GrayImage(1, 1, 0), GrayImage(1, 1, 255)) == 65025.0);
    CHECK(mse(GrayImage(2, 1, {10, 20}), GrayImage(2, 1, {13, 16})) == 12.5);
    CHECK_THROWS_AS(mse(GrayImage(2, 1), GrayImage(1, 2)), std::invalid_argument);
  }

  TEST_CASE("psnr") {
    const auto a = synth_image(4, 4, SynthMode::gradient);
    CHECK(psnr(a, a) == kInfinitePsnr);
    CHECK(std::isinf(psnr(a, a)));
    CHECK(psnr(GrayImage(1, 1, 0), GrayImage(1, 1, 255)) == doctest::Approx(0.0));
    // MSE of exactly 1.
    CHECK(psnr(GrayImage(1, 1, 7), GrayImage(1, 1, 8)) == doctest::Approx(48.1308036).epsilon(1e-9));
    CHECK_THROWS_AS(psnr(GrayImage(2, 1), GrayImage(1, 2)), std::invalid_argument);
  }
}

TEST_SUITE("worst-case statistics") {
  TEST_CASE("wse") {
    const auto bin = make_binary_system(8);
    for (std::size_t l = 0; l < 8; ++l) CHECK(wse(bin, l) == (std::uint64_t{1} << (2 * l)));
    CHECK(wse(make_prime_system(8), 4) == 49);
    for (const auto& sys : {bin, make_prime_system(8), make_fibonacci_system(3, 8)}) {
      CHECK(wse(sys, 0) == 1);
    }
    CHECK_THROWS_AS(wse(bin, 8), std::invalid_argument);
  }

  TEST_CASE("wmse") {
    const auto bin = make_binary_system(8);
    CHECK(wmse(1, 1, bin, 0) == 1);
    CHECK(wmse(512, 512, bin, 3) == 16777216);
    const auto prime = make_prime_system(8);
    for (std::size_t l = 0; l < prime.plane_count(); ++l) {
      CHECK(wmse(7, 5, prime, l) == 35 * wse(prime, l));
    }
    CHECK_THROWS_AS(wmse(4, 4, prime, 15), std::invalid_argument);
  }

  TEST_CASE("psnr_worst") {
    const auto bin = make_binary_system(8);
    CHECK(psnr_worst(8, bin, 0) == doctest::Approx(48.1308036).epsilon(1e-9));
    CHECK(psnr_worst(8, bin, 7) == doctest::Approx(5.9866042).epsilon(1e-8));
    CHECK(psnr_worst(8, make_prime_system(8), 4) == doctest::Approx(31.2288428).epsilon(1e-8));
    for (const auto& sys : {bin, make_prime_system(8)}) {
      for (std::size_t l = 1; l < sys.plane_count(); ++l) {
        CHECK(psnr_worst(8, sys, l) < psnr_worst(8, sys, l - 1));
      }
    }
    CHECK_THROWS_AS(psnr_worst(8, bin, 9), std::invalid_argument);
  }

  TEST_CASE("measure bundles the statistics") {
    const auto cover = synth_image(8, 8, SynthMode::gradient);
    auto stego = cover;
    stego.at(0, 0) = 3;
    const auto r = measure(cover, stego, make_prime_system(8), 2);
    CHECK(r.mse == doctest::Approx(9.0 / 64.0));
    CHECK(r.plane == 2u);
    CHECK(r.wse == 9);
    CHECK(r.wmse == 64 * 9);
    CHECK(r.psnr_worst_db == doctest::Approx(10 * std::log10(65025.0 / 9.0)));
  }

  TEST_CASE("weight ordering on the shared planes") {
    const auto bin = make_binary_system(8);
    const auto fib = make_fibonacci_system(1, 8);
    const auto prime = make_prime_system(8);
    for (std::size_t l = 4; l <= 11; ++l) {
      CAPTURE(l);
      CHECK(prime.weight(l) < fib.weight(l));
      CHECK(psnr_worst(8, prime, l) > psnr_worst(8, fib, l));
      if (l < bin.plane_count()) {
        CHECK(fib.weight(l) < bin.weight(l));
        CHECK(psnr_worst(8, fib, l) > psnr_worst(8, bin, l));
      }
    }
  }
}

TEST_SUITE("alpha roots") {
  TEST_CASE("published values") {
    CHECK(std::abs(alpha_root(1, 1e-9) - 1.618034) < 1e-6);
    // The published p = 2 value is 3.8e-6 above the actual root 1.4655712319.
    CHECK(std::abs(alpha_root(2, 1e-9) - 1.465575) < 4e-6);
    CHECK(alpha_root(2, 1e-12) == doctest::Approx(1.46557123187677).epsilon(1e-12));
    CHECK(std::abs(alpha_root(3, 1e-9) - 1.380278) < 1e-6);
    CHECK(std::abs(alpha_root(4, 1e-9) - 1.324718) < 1e-6);
    CHECK(alpha_root(1, 1e-12) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  }

  TEST_CASE("higher orders against a high-precision solve") {
    CHECK(alpha_root(5, 1e-10) == doctest::Approx(1.28519903324535).epsilon(1e-10));
    CHECK(alpha_root(8, 1e-10) == doctest::Approx(1.21314972305964).epsilon(1e-10));
  }

  TEST_CASE("residual and monotonicity") {
    for (double tol : {1e-4, 1e-8, 1e-12}) {
      for (unsigned p = 1; p <= 8; ++p) {
        const double a = alpha_root(p, tol);
        CHECK(std::abs(std::pow(a, p + 1) - std::pow(a, p) - 1) < 10 * tol);
        if (p < 8) CHECK(a > alpha_root(p + 1, tol));
      }
    }
    for (unsigned p : {20u, 60u, 128u}) {
      const double a = alpha_root(p, 1e-10);
      CHECK(a > 1.0);
      CHECK(std::abs(std::pow(a, p + 1) - std::pow(a, p) - 1) < 1e-9);
    }
  }

  TEST_CASE("argument checks") {
    CHECK_THROWS_AS(alpha_root(0, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(alpha_root(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(alpha_root(1, -1.0), std::invalid_argument);
  }

  TEST_CASE("fibonacci lower bounds") {
    // p = 1: F(n) > alpha^(n-1) for every n > 1.
    const double a1 = alpha_root(1, 1e-12);
    for (std::size_t n = 2; n <= 40; ++n) {
      CHECK(static_cast<double>(fibonacci_term(1, n)) > std::pow(a1, n - 1.0));
      CHECK(static_cast<double>(fibonacci_term(1, n)) > std::pow(1.618034, n - 1.0));
    }
    // With p + 1 leading ones the exponent shifts by p: F_p(n) > alpha_p^(n-p)
    // for n > p. The unshifted form fails from n = 2 on, e.g. F_2(2) = 1.
    for (unsigned p = 2; p <= 4; ++p) {
      const double a = alpha_root(p, 1e-12);
      CHECK(static_cast<double>(fibonacci_term(p, 2)) < a);
      for (std::size_t n = p + 1; n <= 40; ++n) {
        CHECK(static_cast<double>(fibonacci_term(p, n)) > std::pow(a, double(n) - p));
      }
    }
  }
}

TEST_SUITE("growth table") {
  TEST_CASE("rows") {
    const auto rows = growth_table(16);
    REQUIRE(rows.size() == 16);
    CHECK(rows[0].binary == 1);
    CHECK(rows[0].fibonacci1 == 1);
    CHECK(rows[0].prime == 1);
    CHECK_FALSE(rows[1].prime_over_nlogn.has_value());
    CHECK(rows[4].binary == 16);
    CHECK(rows[4].fibonacci1 == 8);
    CHECK(rows[4].prime == 7);
    CHECK(rows[13].fibonacci1 == 610);
    CHECK(rows[14].prime == 43);
    CHECK(rows[14].fibonacci1 == 987);
    CHECK(double(rows[14].prime) / double(rows[13].fibonacci1) < 0.08);
    CHECK(double(rows[14].prime) / double(rows[14].fibonacci1) < 0.08);
  }

  TEST_CASE("exact at full width") {
    const auto rows = growth_table(64);
    CHECK(rows[63].binary == (std::uint64_t{1} << 63));
    CHECK(rows[63].fibonacci1 == 17167680177565ull);  // F(64)
    CHECK(rows[63].prime == 307);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i].binary > rows[i - 1].binary);
      CHECK(rows[i].fibonacci1 > rows[i - 1].fibonacci1);
      CHECK(rows[i].prime > rows[i - 1].prime);
    }
  }

  TEST_CASE("prime growth stays near i ln i") {
    // p_i > i ln i for all i >= 2, and p_i < i (ln i + ln ln i) from i = 6.
    // The ratio column sits in [0.8, 1.3] from i = 6; small i overshoot
    // (i = 2 gives 3 / (2 ln 2) = 2.16).
    const auto rows = growth_table(64);
    for (std::size_t i = 2; i < rows.size(); ++i) {
      const double n = double(i);
      CHECK(double(rows[i].prime) > n * std::log(n));
      if (i >= 6) {
        CHECK(double(rows[i].prime) < n * (std::log(n) + std::log(std::log(n))));
        CHECK(*rows[i].prime_over_nlogn >= 0.8);
        CHECK(*rows[i].prime_over_nlogn <= 1.3);
      }
    }
    CHECK(*rows[2].prime_over_nlogn > 1.3);
  }

  TEST_CASE("csv") {
    const auto csv = growth_csv(growth_table(3));
    CHECK(csv == "plane,binary,fibonacci1,prime,prime_over_nlogn\n"
                 "0,1,1,1,\n"
                 "1,2,2,2,\n"
                 "2,4,3,3,2.164043\n");
  }

  TEST_CASE("argument checks") {
    CHECK_THROWS_AS(growth_table(1), std::invalid_argument);
    CHECK_THROWS_AS(growth_table(65), std::invalid_argument);
  }
}
