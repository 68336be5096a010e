#include <benchmark/benchmark.h>

#include "heightlab/chow.hpp"
#include "heightlab/harness.hpp"
#include "heightlab/heights.hpp"
#include "heightlab/ideals.hpp"

namespace hl = heightlab;

namespace {

hl::PolyIdeal twisted_cubic() {
  hl::PolyIdeal p1 = hl::make_ideal(2, {});
  std::vector<hl::HomPoly> phi{hl::parse_poly("x0^3", 2), hl::parse_poly("x0^2*x1", 2),
                               hl::parse_poly("x0*x1^2", 2), hl::parse_poly("x1^3", 2)};
  return hl::image_ideal(p1, phi);
}

void bm_groebner_twisted_cubic(benchmark::State& state) {
  hl::PolyIdeal p1 = hl::make_ideal(2, {});
  std::vector<hl::HomPoly> phi{hl::parse_poly("x0^3", 2), hl::parse_poly("x0^2*x1", 2),
                               hl::parse_poly("x0*x1^2", 2), hl::parse_poly("x1^3", 2)};
  for (auto _ : state) benchmark::DoNotOptimize(hl::image_ideal(p1, phi));
}
BENCHMARK(bm_groebner_twisted_cubic);

void bm_hilbert_function(benchmark::State& state) {
  hl::GroebnerBasis gb = hl::groebner(twisted_cubic());
  for (auto _ : state) benchmark::DoNotOptimize(hl::hilbert_function(gb, static_cast<uint32_t>(state.range(0))));
}
BENCHMARK(bm_hilbert_function)->Arg(4)->Arg(8);

void bm_hilbert_weight(benchmark::State& state) {
  hl::PolyIdeal conic = hl::make_ideal(3, {hl::parse_poly("x0*x2 - x1^2", 3)});
  hl::GroebnerBasis gb = hl::groebner(conic);
  hl::WeightVector c(std::vector<hl::Rat>{hl::Rat(3), hl::Rat(1), hl::Rat(0)});
  for (auto _ : state) benchmark::DoNotOptimize(hl::hilbert_weight(gb, 4, c));
}
BENCHMARK(bm_hilbert_weight);

void bm_weil(benchmark::State& state) {
  hl::HomPoly q = hl::parse_poly("x0^2 + 3*x1*x2 - x2^2", 3);
  hl::ProjPoint x = hl::parse_point("(12:35:-8)");
  hl::Place two = hl::Place::finite(hl::Int(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hl::weil(q, hl::Place::infinity(), x));
    benchmark::DoNotOptimize(hl::weil(q, two, x));
  }
}
BENCHMARK(bm_weil);

void bm_enumerate_points(benchmark::State& state) {
  hl::VarietySpec p2 = hl::make_variety(hl::make_ideal(3, {}));
  for (auto _ : state) benchmark::DoNotOptimize(hl::enumerate_points(p2, state.range(0)));
}
BENCHMARK(bm_enumerate_points)->Arg(5)->Arg(15);

void bm_height_point(benchmark::State& state) {
  hl::ProjPoint x = hl::parse_point("(105:-49:36)");
  for (auto _ : state) benchmark::DoNotOptimize(hl::height_point(x));
}
BENCHMARK(bm_height_point);

}  // namespace

BENCHMARK_MAIN();
