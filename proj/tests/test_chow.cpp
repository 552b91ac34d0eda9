#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "segre/chow.hpp"

using namespace segre;

namespace {

ChowClass random_class(int n, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> dist(-20, 20);
  ChowClass a(n);
  for (int i = 0; i <= n; ++i) a[i] = dist(gen);
  return a;
}

}  // namespace

TEST_CASE("class_multiply") {
  const HPolynomial h({0, 1});
  CHECK(class_multiply(ChowClass::linear(3, 2), h) == ChowClass::linear(3, 1));
  CHECK(class_multiply(ChowClass::linear(3, 0), h).is_zero());

  // (1+H)^4 * 2H/(1+2H) on [P^3]: c_SM of a smooth quadric surface
  const HPolynomial series = HPolynomial({0, 2}) * HPolynomial::linear(2).inverse(3);
  const ChowClass r = class_multiply(class_multiply(ChowClass::linear(3, 3), series), tangent_pn(3));
  CHECK(r == ChowClass(3, {4, 4, 2, 0}));

  std::mt19937_64 gen(7);
  for (int n = 0; n <= 4; ++n) {
    const ChowClass a = random_class(n, gen), b = random_class(n, gen), c = random_class(n, gen);
    CHECK(class_multiply(a, ChowClass::linear(n, n)) == a);
    CHECK(class_multiply(a, b) == class_multiply(b, a));
    CHECK(class_multiply(class_multiply(a, b), c) == class_multiply(a, class_multiply(b, c)));
    CHECK(class_multiply(a, b + c) == class_multiply(a, b) + class_multiply(a, c));
  }
  CHECK_THROWS_AS(class_multiply(ChowClass(2), ChowClass(3)), AmbientMismatch);
}

TEST_CASE("dual") {
  CHECK(dual(ChowClass::linear(3, 0)) == Integer(-1) * ChowClass::linear(3, 0));
  CHECK(dual(ChowClass::linear(3, 3)) == ChowClass::linear(3, 3));
  std::mt19937_64 gen(11);
  for (int n = 0; n <= 4; ++n) {
    const ChowClass a = random_class(n, gen);
    CHECK(dual(dual(a)) == a);
    CHECK(dual(a) == oracle::brute_dual(a));
  }
}

TEST_CASE("tensor_by") {
  CHECK(tensor_by(ChowClass::linear(3, 0), 2) == ChowClass::linear(3, 0));
  CHECK(tensor_by(ChowClass::linear(2, 2), 5) == ChowClass::linear(2, 2));
  // [P^1] in P^2 is H, H/(1+H) = H - H^2
  CHECK(tensor_by(ChowClass::linear(2, 1), 1) == ChowClass(2, {-1, 1, 0}));
  std::mt19937_64 gen(13);
  for (int n = 0; n <= 4; ++n) {
    for (int d = -3; d <= 3; ++d) {
      for (int rep = 0; rep < 3; ++rep) {
        const ChowClass a = random_class(n, gen);
        CHECK(tensor_by(a, d) == oracle::brute_tensor(a, d));
        CHECK(tensor_by(tensor_by(a, d), -d) == a);
        CHECK(dual(tensor_by(a, d)) == tensor_by(dual(a), -d));
        CHECK(tensor_by(tensor_by(a, d), 2) == tensor_by(a, d + 2));
      }
      if (d == 0) CHECK(tensor_by(random_class(n, gen), 0).ambient() == n);
    }
  }
}

TEST_CASE("component and integral") {
  const ChowClass a(2, {3, 4, 2});
  CHECK(component(a, 0) == ChowClass(2, {3, 0, 0}));
  CHECK(integral(ChowClass::linear(4, 0)) == 1);
  CHECK(integral(ChowClass(2, {0, 5, 1})) == 0);
  ChowClass sum(2);
  for (int k = 0; k <= 2; ++k) sum = sum + component(a, k);
  CHECK(sum == a);
  CHECK_THROWS(component(a, 3));
}

TEST_CASE("chern constructors") {
  CHECK(tangent_pn(3) == HPolynomial({1, 4, 6, 4}));
  const std::vector<Integer> d{3};
  CHECK(ci_normal_bundle(d, {}, 5) == HPolynomial({1, 3}));
  CHECK(line_bundle(3) == HPolynomial({1, 3}));

  const std::vector<Integer> ones{1, 1, 1, 1}, two{2};
  const HPolynomial c = ci_normal_bundle(ones, two, 5);
  CHECK(ChowClass::from_hpolynomial(5, c) == ChowClass(5, {-2, 1, 0, 2, 2, 1}));
  CHECK(ChowClass::from_hpolynomial(5, c).to_string() == "1 [P^5] + 2 [P^4] + 2 [P^3] + 1 [P^1] - 2 [P^0]");
}

TEST_CASE("series inverse") {
  for (int d = -3; d <= 3; ++d) {
    const HPolynomial f = HPolynomial::linear(d).pow(3, 6);
    CHECK((f * f.inverse(6)).truncated(6) == HPolynomial::constant(1));
  }
  CHECK_THROWS(HPolynomial({2, 1}).inverse(3));
}

TEST_CASE("pretty printer") {
  CHECK(ChowClass(3).to_string() == "0");
  CHECK(ChowClass(2, {3, 4, 2}).to_string() == "2 [P^2] + 4 [P^1] + 3 [P^0]");
  CHECK(ChowClass(2, {-3, 3, 1}).to_string() == "1 [P^2] + 3 [P^1] - 3 [P^0]");
  CHECK(ChowClass(2, {-11, 2, 0}).to_string() == "2 [P^1] - 11 [P^0]");
  CHECK(ChowClass(1, {0, -1}).to_string() == "-1 [P^1]");
}

TEST_CASE("big coefficients") {
  ChowClass a(2);
  a[0] = Integer(1) << 200;
  CHECK(tensor_by(tensor_by(a, 3), -3) == a);
  CHECK(binomial(60, 30) == Integer("118264581564861424"));
}
