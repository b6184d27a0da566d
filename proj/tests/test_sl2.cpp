#include <doctest.h>

#include <cmath>
#include <random>

#include "sl2rep/errors.hpp"
#include "sl2rep/sl2.hpp"

using namespace sl2rep;

namespace {

std::mt19937& rng() {
  static std::mt19937 gen(5);
  return gen;
}

cplx rand_cplx(double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng()), u(rng())};
}

SL2Element rand_sl2(double scale = 1.0) {
  while (true) {
    Mat2 m{rand_cplx(scale), rand_cplx(scale), rand_cplx(scale), rand_cplx(scale)};
    cplx det = m.det();
    if (std::abs(det) < 0.05) continue;
    return make_sl2((1.0 / std::sqrt(det)) * m, 1e-9);
  }
}

Sl2Vector rand_sl2vec(double scale = 1.0) {
  return {rand_cplx(scale), rand_cplx(scale), rand_cplx(scale)};
}

SL2Element rand_su2() {
  // unit quaternion -> SU(2)
  std::normal_distribution<double> g;
  double q0 = g(rng()), q1 = g(rng()), q2 = g(rng()), q3 = g(rng());
  double n = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
  q0 /= n; q1 /= n; q2 /= n; q3 /= n;
  return make_sl2({cplx{q0, q1}, cplx{q2, q3}, cplx{-q2, q3}, cplx{q0, -q1}}, 1e-12);
}

const Sl2Vector H{1, 0, 0}, E{0, 1, 0}, F{0, 0, 1};

}  // namespace

TEST_CASE("mul and inv basics") {
  SL2Element g = make_sl2({2.0, 0.0, 0.0, 0.5});
  SL2Element h = make_sl2({3.0, 0.0, 0.0, 1.0 / 3.0});
  Mat2 prod = (g * h).m;
  CHECK(std::abs(prod.a - 6.0) < 1e-12);
  CHECK(std::abs(prod.d - 1.0 / 6.0) < 1e-12);

  SL2Element u = make_sl2({1.0, 1.0, 0.0, 1.0});
  Mat2 ui = inv(u).m;
  CHECK(std::abs(ui.b - (-1.0)) < 1e-14);

  for (int t = 0; t < 20; ++t) {
    SL2Element g2 = rand_sl2(2.0);
    CHECK(distance((g2 * inv(g2)).m, Mat2::identity()) < 1e-12);
  }
  CHECK_THROWS_AS(make_sl2({2.0, 0.0, 0.0, 1.0}), NumericError);

  // accumulated determinant drift beyond 10 * kDetTol degrades loudly
  SL2Element drifty = make_sl2({1.0 + 4e-9, 0.0, 0.0, 1.0}, 1e-8);
  CHECK_THROWS_AS(drifty * drifty * drifty, NumericError);
}

TEST_CASE("exp_traceless closed form") {
  CHECK(distance(exp_traceless({0, 0, 0}).m, Mat2::identity()) < 1e-15);

  Mat2 d = exp_traceless(0.3 * H).m;
  CHECK(std::abs(d.a - std::exp(0.3)) < 1e-14);
  CHECK(std::abs(d.d - std::exp(-0.3)) < 1e-14);
  CHECK(std::abs(d.b) < 1e-15);

  Mat2 n = exp_traceless(E).m;  // nilpotent: series truncates
  CHECK(distance(n, Mat2{1.0, 1.0, 0.0, 1.0}) < 1e-15);

  // tiny arguments go through the sinhc series branch
  Mat2 t = exp_traceless(1e-7 * E).m;
  CHECK(std::abs(t.b - 1e-7) < 1e-20);
  CHECK(std::abs(t.a - 1.0) < 1e-15);
}

TEST_CASE("exp_traceless matches a 20-term Taylor series") {
  for (int t = 0; t < 30; ++t) {
    Sl2Vector x = rand_sl2vec(0.8);  // |X| <= 2 territory
    Mat2 xm = x.to_matrix();
    Mat2 sum = Mat2::identity();
    Mat2 term = Mat2::identity();
    for (int k = 1; k <= 20; ++k) {
      term = (1.0 / k) * (term * xm);
      sum = sum + term;
    }
    CHECK(distance(exp_traceless(x).m, sum) < 1e-12);
  }
}

TEST_CASE("adjoint examples") {
  CHECK((adjoint_matrix(make_sl2(Mat2::identity())) - Eigen::Matrix3cd::Identity()).norm() <
        1e-15);
  CHECK((adjoint_matrix(make_sl2((-1.0) * Mat2::identity())) - Eigen::Matrix3cd::Identity())
            .norm() < 1e-15);
  // Ad(diag(s,1/s)) = diag(1, s^2, s^-2) in (H,E,F), by conjugating the basis
  cplx s{1.7, 0.4};
  Eigen::Matrix3cd ad = adjoint_matrix(make_sl2({s, 0.0, 0.0, 1.0 / s}));
  Eigen::Matrix3cd want = Eigen::Matrix3cd::Zero();
  want(0, 0) = 1.0;
  want(1, 1) = s * s;
  want(2, 2) = 1.0 / (s * s);
  CHECK((ad - want).norm() < 1e-12);
}

TEST_CASE("adjoint is a homomorphism") {
  for (int t = 0; t < 40; ++t) {
    SL2Element g = rand_sl2(), h = rand_sl2();
    Eigen::Matrix3cd lhs = adjoint_matrix(g * h);
    Eigen::Matrix3cd rhs = adjoint_matrix(g) * adjoint_matrix(h);
    CHECK((lhs - rhs).norm() < 1e-10 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("cartan projection values") {
  CHECK(cartan_mu(make_sl2(Mat2::identity())) == 0.0);
  CHECK(std::abs(cartan_mu(make_sl2({2.0, 0.0, 0.0, 0.5})) - std::log(2.0)) < 1e-14);
  // eigenvalues of g g^* are (3 +- sqrt(5))/2; mu = log golden ratio
  CHECK(std::abs(cartan_mu(make_sl2({1.0, 1.0, 0.0, 1.0})) - 0.4812118250596035) < 1e-13);
}

TEST_CASE("cartan projection properties") {
  for (int t = 0; t < 40; ++t) {
    SL2Element g = rand_sl2(2.0), h = rand_sl2(2.0);
    CHECK(std::abs(cartan_mu(g) - cartan_mu(inv(g))) < 1e-11);
    CHECK(cartan_mu(g * h) <= cartan_mu(g) + cartan_mu(h) + 1e-11);
    SL2Element k1 = rand_su2(), k2 = rand_su2();
    CHECK(std::abs(cartan_mu(k1 * g * k2) - cartan_mu(g)) < 1e-11);
  }
}

TEST_CASE("killing pairing") {
  CHECK(std::abs(killing_pairing(H, H) - 8.0) < 1e-15);  // 4 tr(H^2) = 8
  CHECK(std::abs(killing_pairing(H, E)) < 1e-15);
  for (int t = 0; t < 30; ++t) {
    SL2Element g = rand_sl2();
    Sl2Vector x = rand_sl2vec(), y = rand_sl2vec();
    auto ad = adjoint_matrix(g);
    Eigen::Vector3cd xv{x.h, x.e, x.f}, yv{y.h, y.e, y.f};
    Eigen::Vector3cd gx = ad * xv, gy = ad * yv;
    cplx lhs = killing_pairing({gx(0), gx(1), gx(2)}, {gy(0), gy(1), gy(2)});
    CHECK(std::abs(lhs - killing_pairing(x, y)) < 1e-10);
  }
}

TEST_CASE("invariant hermitian form: unitary diagonal accepted") {
  cplx w = std::polar(1.0, 0.77);
  std::vector<SL2Element> mats = {make_sl2({w, 0.0, 0.0, std::conj(w)})};
  auto h = invariant_hermitian_form(mats);
  REQUIRE(h.has_value());
  CHECK(distance(*h, Mat2::identity()) < 1e-9);
}

TEST_CASE("invariant hermitian form: hyperbolic and unipotent rejected") {
  std::vector<SL2Element> hyp = {make_sl2({2.0, 0.0, 0.0, 0.5})};
  CHECK(!invariant_hermitian_form(hyp).has_value());
  // fixed-point system leaves only the degenerate family [[0,iy],[-iy,r]]
  std::vector<SL2Element> uni = {make_sl2({1.0, 1.0, 0.0, 1.0})};
  CHECK(!invariant_hermitian_form(uni).has_value());
}

TEST_CASE("invariant hermitian form: conjugated SU(2) pair certified") {
  for (int t = 0; t < 10; ++t) {
    SL2Element g = rand_sl2(1.2);
    SL2Element gi = inv(g);
    std::vector<SL2Element> mats = {g * rand_su2() * gi, g * rand_su2() * gi};
    auto h = invariant_hermitian_form(mats);
    REQUIRE(h.has_value());
    double hn = h->frobenius();
    for (const SL2Element& m : mats)
      CHECK(distance(m.m.conj_transpose() * *h * m.m, *h) < 1e-8 * hn);
  }
}

TEST_CASE("invariant hermitian form: empty input rejected") {
  std::vector<SL2Element> none;
  CHECK_THROWS_AS(invariant_hermitian_form(none), InvalidInputError);
}
