#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>

#include "poki/errors.hpp"
#include "poki/rng.hpp"
#include "poki/tuning.hpp"
#include "support.hpp"

using namespace poki;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name) {
    path = std::filesystem::temp_directory_path() / name;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("artificial target formula") {
  const double x0 = 0.0;
  CHECK(target_artificial({&x0, 1}) == doctest::Approx(1.0));
  const double x1 = 0.25;
  CHECK(target_artificial({&x1, 1}) == doctest::Approx(0.25));
  // only the first coordinate matters
  const double a[] = {0.25, 0.9}, b[] = {0.25, 0.1};
  CHECK(target_artificial(a) == doctest::Approx(target_artificial(b)));
}

TEST_CASE("periodic target formula and period") {
  CHECK(target_periodic(0.0) == doctest::Approx(2.0));
  CHECK(target_periodic(0.125) == doctest::Approx(3.0));
  Rng rng(91);
  for (int i = 0; i < 100; ++i) {
    const double x = rng.uniform(0.0, 0.5);
    CHECK(target_periodic(x) == doctest::Approx(target_periodic(x + 0.5)).epsilon(1e-12));
  }
}

TEST_CASE("pendulum target formula") {
  const double origin[] = {0.0, 3.0};
  CHECK(target_pendulum(origin) == doctest::Approx(0.0));
  const double quarter[] = {std::numbers::pi / 2.0, -1.0};
  CHECK(target_pendulum(quarter) == doctest::Approx(-9.81));
  const double v1[] = {0.7, -5.0}, v2[] = {0.7, 5.0};
  CHECK(target_pendulum(v1) == target_pendulum(v2));
}

TEST_CASE("generators: domains, noise-free outputs, determinism") {
  const NoiseModel none;
  SUBCASE("artificial") {
    auto data = gen_artificial(3, 100, none, 17);
    CHECK(data.rows() == 100);
    CHECK(data.dim == 3);
    for (std::size_t i = 0; i < data.rows(); ++i) {
      for (double v : data.input(i)) {
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
      }
      CHECK(data.outputs[i] == doctest::Approx(target_artificial(data.input(i))));
    }
    CHECK(std::isfinite(strongin_estimate(data)));
    auto again = gen_artificial(3, 100, none, 17);
    CHECK(again.inputs == data.inputs);
    CHECK(again.outputs == data.outputs);
    CHECK(gen_artificial(3, 100, none, 18).inputs != data.inputs);
  }
  SUBCASE("periodic") {
    auto data = gen_periodic(50, none, 9);
    CHECK(data.dim == 1);
    for (std::size_t i = 0; i < data.rows(); ++i) {
      CHECK(data.outputs[i] == doctest::Approx(target_periodic(data.input(i)[0])));
    }
  }
  SUBCASE("pendulum") {
    auto data = gen_pendulum(200, none, 13);
    CHECK(data.dim == 2);
    for (std::size_t i = 0; i < data.rows(); ++i) {
      const auto x = data.input(i);
      CHECK(std::abs(x[0]) <= std::numbers::pi);
      CHECK(std::abs(x[1]) <= 5.0);
      CHECK(data.outputs[i] == doctest::Approx(target_pendulum(x)));
    }
  }
}

TEST_CASE("noise models: empirical mean near zero, seeded reproducibility") {
  const std::size_t n = 100000;
  SUBCASE("gaussian") {
    NoiseModel noise{NoiseModel::Kind::Gaussian, 0.25, 5};
    auto data = gen_periodic(n, noise, 3);
    double mean_dev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mean_dev += data.outputs[i] - target_periodic(data.input(i)[0]);
    }
    mean_dev /= static_cast<double>(n);
    CHECK(std::abs(mean_dev) <= 3.0 * 0.25 / std::sqrt(static_cast<double>(n)));
  }
  SUBCASE("uniform symmetric") {
    NoiseModel noise{NoiseModel::Kind::UniformSymmetric, 0.5, 5};
    auto data = gen_artificial(1, n, noise, 3);
    double mean_dev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double dev = data.outputs[i] - target_artificial(data.input(i));
      CHECK(std::abs(dev) <= 0.5);
      mean_dev += dev;
    }
    mean_dev /= static_cast<double>(n);
    // uniform on [-0.5, 0.5] has sd 1/sqrt(12)
    CHECK(std::abs(mean_dev) <= 3.0 * (1.0 / std::sqrt(12.0)) / std::sqrt(static_cast<double>(n)));
  }
  SUBCASE("noise is seeded independently of the inputs") {
    NoiseModel a{NoiseModel::Kind::Gaussian, 0.1, 1};
    NoiseModel b{NoiseModel::Kind::Gaussian, 0.1, 2};
    auto da = gen_periodic(20, a, 7);
    auto db = gen_periodic(20, b, 7);
    CHECK(da.inputs == db.inputs);
    CHECK(da.outputs != db.outputs);
  }
}

TEST_CASE("query-input samplers cover the generator domains") {
  auto q1 = sample_inputs_artificial(2, 500, 23);
  CHECK(q1.dim == 2);
  CHECK(q1.rows() == 500);
  for (double v : q1.inputs) {
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
  auto q2 = sample_inputs_pendulum(500, 23);
  CHECK(q2.dim == 2);
  for (std::size_t i = 0; i < q2.rows(); ++i) {
    CHECK(std::abs(q2.input(i)[0]) <= std::numbers::pi);
    CHECK(std::abs(q2.input(i)[1]) <= 5.0);
  }
}

TEST_CASE("csv round trip") {
  TempFile tmp("poki_test_roundtrip.csv");
  Rng rng(97);
  auto data = testsupport::random_dataset(rng, 25, 3);
  save_csv(data, tmp.path.string());
  auto back = load_csv(tmp.path.string(), {0, 1, 2}, 3, true);
  CHECK(back.dim == data.dim);
  CHECK(back.inputs == data.inputs);
  CHECK(back.outputs == data.outputs);
}

TEST_CASE("csv loading: hand-written file, column selection, headers") {
  TempFile tmp("poki_test_hand.csv");
  {
    std::ofstream out(tmp.path);
    out << "a,b,c\n1.5,2.5,10\n-0.5,0.25,20\n";
  }
  SUBCASE("all inputs") {
    auto data = load_csv(tmp.path.string(), {0, 1}, 2, true);
    CHECK(data.rows() == 2);
    CHECK(data.dim == 2);
    CHECK(data.input(0)[0] == doctest::Approx(1.5));
    CHECK(data.input(1)[1] == doctest::Approx(0.25));
    CHECK(data.outputs[0] == doctest::Approx(10.0));
    CHECK(data.outputs[1] == doctest::Approx(20.0));
  }
  SUBCASE("column subset and reorder") {
    auto data = load_csv(tmp.path.string(), {1}, 0, true);
    CHECK(data.dim == 1);
    CHECK(data.input(0)[0] == doctest::Approx(2.5));
    CHECK(data.outputs[0] == doctest::Approx(1.5));
  }
  SUBCASE("headerless file") {
    TempFile plain("poki_test_plain.csv");
    {
      std::ofstream out(plain.path);
      out << "1,2\n3,4\n";
    }
    auto data = load_csv(plain.path.string(), {0}, 1, false);
    CHECK(data.rows() == 2);
    CHECK(data.outputs[1] == doctest::Approx(4.0));
  }
}

TEST_CASE("csv loading errors") {
  CHECK_THROWS_AS(load_csv("/nonexistent/poki.csv", {0}, 1, false), io_error);
  TempFile tmp("poki_test_bad.csv");
  {
    std::ofstream out(tmp.path);
    out << "x,y\n1,2\n1,abc\n";
  }
  CHECK_THROWS_AS(load_csv(tmp.path.string(), {0}, 1, true), io_error);
  CHECK_THROWS_AS(load_csv(tmp.path.string(), {0}, 5, true), io_error);
}

TEST_CASE("train/test split sizes and rounding") {
  Rng rng(101);
  SUBCASE("large set, fractional boundary") {
    auto data = testsupport::random_dataset(rng, 9568, 1);
    auto [train, test] = train_test_split(data, 0.1, 1);
    CHECK(train.rows() == 957);  // round half up of 956.8
    CHECK(test.rows() == 8611);
  }
  SUBCASE("small set") {
    auto data = testsupport::random_dataset(rng, 10, 1);
    auto [train, test] = train_test_split(data, 0.6, 2);
    CHECK(train.rows() == 6);
    CHECK(test.rows() == 4);
    auto [t2, e2] = train_test_split(data, 0.6, 2);
    CHECK(t2.inputs == train.inputs);
    CHECK(e2.outputs == test.outputs);
  }
  SUBCASE("clamped to keep both sides nonempty") {
    auto data = testsupport::random_dataset(rng, 5, 1);
    auto [train, test] = train_test_split(data, 0.999, 3);
    CHECK(train.rows() == 4);
    CHECK(test.rows() == 1);
  }
}

TEST_CASE("dataset validation") {
  Dataset empty;
  empty.dim = 1;
  CHECK_THROWS_AS(validate(empty), std::invalid_argument);
  Dataset bad;
  bad.dim = 1;
  const double x = 0.0;
  bad.add({&x, 1}, std::nan(""));
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}
