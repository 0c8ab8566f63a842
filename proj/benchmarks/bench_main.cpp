// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rootmult/ball.hpp"
#include "rootmult/linsolve.hpp"
#include "rootmult/newton.hpp"
#include "rootmult/planner.hpp"
#include "rootmult/solver.hpp"
#include "rootmult/vander.hpp"

using namespace rootmult;

namespace {

std::vector<BigRational> random_coeffs(std::size_t k, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::vector<BigRational> c;
  c.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    BigRational q(num(rng), 7);
    q.canonicalize();
    c.push_back(q);
  }
  return c;
}

std::vector<BigRational> spread_roots(std::size_t n) {
  std::vector<BigRational> r;
  for (std::size_t i = 0; i < n; ++i) r.emplace_back(2 * i + 3, 2);
  return r;
}

void bm_power_sums_from_coeffs(benchmark::State& state) {
  std::vector<BigRational> c = random_coeffs(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(power_sums_from_coeffs(c));
  }
}
BENCHMARK(bm_power_sums_from_coeffs)->Arg(16)->Arg(48);

void bm_exact_solve(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> num(-50, 50);
  Matrix<BigRational> m(n, n);
  std::vector<BigRational> b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = BigRational(num(rng), 3);
    b.emplace_back(num(rng));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_solve(m, b));
  }
}
BENCHMARK(bm_exact_solve)->Arg(6)->Arg(9)->Arg(16);

void bm_vandermonde_inverse_exact(benchmark::State& state) {
  std::vector<BigRational> roots = spread_roots(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vandermonde_inverse(std::span<const BigRational>(roots)));
  }
}
BENCHMARK(bm_vandermonde_inverse_exact)->Arg(4)->Arg(8)->Arg(16);

void bm_v0_inverse_disks(benchmark::State& state) {
  const std::size_t n = 16;
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(state.range(0));
  std::vector<ComplexDisk> disks;
  BigFloat rad = BigFloat::pow2(-60, prec);
  for (std::size_t i = 0; i < n; ++i) {
    disks.push_back(ComplexDisk(
        {BigFloat::of(static_cast<long>(2 * i + 3), prec), BigFloat::of(0L, prec)}, rad));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(v0_inverse(std::span<const ComplexDisk>(disks)));
  }
}
BENCHMARK(bm_v0_inverse_disks)->Arg(128)->Arg(1024)->Arg(3072);

void bm_disk_mul(benchmark::State& state) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(state.range(0));
  ComplexDisk a({BigFloat::of(1.25, prec), BigFloat::of(-0.5, prec)},
                BigFloat::pow2(-40, prec));
  ComplexDisk b({BigFloat::of(-2.0, prec), BigFloat::of(0.75, prec)},
                BigFloat::pow2(-42, prec));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(a, b));
  }
}
BENCHMARK(bm_disk_mul)->Arg(128)->Arg(1024);

void bm_solve_exact_nine_factors(benchmark::State& state) {
  // the largest bundled dataset: nine factors, sixteen coefficients
  std::vector<const char*> cs{
      "-18432", "169843968", "-1043209971456", "4804960103034624",
      "-17702435302276375440", "54341319772238850901668",
      "-142960393819753656566577552", "329036832924106136747171871042",
      "-673063350744784559041302787109576"};
  PolyProblem pr;
  for (const char* s : cs) pr.coefficients.push_back(rational_from_string(s));
  pr.degree = 53248;
  pr.degree_scale = 3;
  FactorRoots fr;
  auto poly = [](std::initializer_list<long> v) {
    std::vector<BigRational> c;
    for (long x : v) c.emplace_back(x);
    return MonicPoly(c);
  };
  fr.factors = {poly({-6, 8, -4}), poly({-5, 5, -2}), poly({-1}), poly({-4, 2}),
                poly({-4, 3, -1}), poly({-3, 1}), poly({-3}), poly({-2}), poly({-4})};
  pr.roots = std::move(fr);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_exact(pr));
  }
}
BENCHMARK(bm_solve_exact_nine_factors);

}  // namespace

BENCHMARK_MAIN();
