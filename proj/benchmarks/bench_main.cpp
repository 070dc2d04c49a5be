#include <benchmark/benchmark.h>

#include "wbk/app/campaign.hpp"
#include "wbk/app/generators.hpp"
#include "wbk/cuntz.hpp"
#include "wbk/region.hpp"

using namespace wbk;

namespace {

std::vector<Box> boxes(std::size_t dim, std::size_t n, std::uint64_t seed) {
  app::Gen g(seed);
  std::vector<Box> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(app::random_box(g, dim, app::Flags::any));
  return out;
}

void BM_Normalize(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  const auto in = boxes(dim, static_cast<std::size_t>(state.range(1)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(normalize(dim, in));
}
BENCHMARK(BM_Normalize)->Args({1, 8})->Args({2, 8})->Args({2, 32})->Args({3, 8});

void BM_Boolean(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  const auto ba = boxes(dim, 6, 1), bb = boxes(dim, 6, 2);
  const Region a = normalize(dim, ba), b = normalize(dim, bb);
  for (auto _ : state) {
    benchmark::DoNotOptimize(unite(a, b));
    benchmark::DoNotOptimize(subtract(a, b));
  }
}
BENCHMARK(BM_Boolean)->Arg(1)->Arg(2)->Arg(3);

void BM_Closure(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  const auto in = boxes(dim, 8, 3);
  const Region a = normalize(dim, in);
  for (auto _ : state) benchmark::DoNotOptimize(closure(a));
}
BENCHMARK(BM_Closure)->Arg(1)->Arg(2)->Arg(3);

Space unit_interval() { return Space(Region::from_box(Box{{Interval::closed(0, 2)}})); }

void BM_Urysohn(benchmark::State& state) {
  const Space k = unit_interval();
  const Region u = Region::from_box(Box{{Interval::open(Scalar(Rational(1, 2)), Scalar(Rational(1)))}});
  const Region v = Region::from_box(Box{{Interval::open(Scalar(Rational(0)), Scalar(Rational(2)))}});
  for (auto _ : state) benchmark::DoNotOptimize(urysohn(u, v, k));
}
BENCHMARK(BM_Urysohn);

void BM_TensorCertificate(benchmark::State& state) {
  const Space k = unit_interval();
  const CuntzClass a(PositiveElement::scalar(PLFunction::tent(k, 1, Rational(1, 4), 1)));
  const CuntzClass b(PositiveElement::scalar(PLFunction::tent(k, 1, 1, 1)));
  const AuditOptions audit{0x5eed, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(theorem_4_2(a, b, a, b, k, k, audit));
}
BENCHMARK(BM_TensorCertificate)->Arg(1000)->Arg(10000);

void BM_Campaign(benchmark::State& state) {
  const auto theorem = static_cast<app::Theorem>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(app::run_campaign(theorem, 20, 1, 1, false));
  state.SetLabel(std::string(app::theorem_name(theorem)));
}
BENCHMARK(BM_Campaign)
    ->Arg(static_cast<int>(app::Theorem::prop32))
    ->Arg(static_cast<int>(app::Theorem::agreement))
    ->Arg(static_cast<int>(app::Theorem::exhaustion))
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
