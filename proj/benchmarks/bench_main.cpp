#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "gravfock/lsz.h"
#include "gravfock/normal_order.h"
#include "gravfock/parser.h"
#include "gravfock/toy_smatrix.h"

using namespace gravfock;

static OperatorExpr scalar_word(int n) {
  std::string w;
  for (int i = 0; i < n; ++i) {
    const std::string k = "k" + std::to_string(i), big = "K" + std::to_string(i);
    w += (i ? " * " : "") + std::string(i % 2 ? "a'(" : "a(") + k + ";" + big + ")";
  }
  return parse_expression(w);
}

static void BM_NormalForm(benchmark::State& state) {
  const OperatorExpr e = scalar_word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_normal_form(e));
}
BENCHMARK(BM_NormalForm)->DenseRange(2, 8, 2);

static void BM_GaugeCommutator(benchmark::State& state) {
  const OperatorExpr a = parse_expression("A(k,g=g;K,G=G)");
  const OperatorExpr b = parse_expression("A'(h,g=x;H,G=y)");
  for (auto _ : state) benchmark::DoNotOptimize(commutator(a, b));
}
BENCHMARK(BM_GaugeCommutator);

static void BM_ParsePrint(benchmark::State& state) {
  const std::string text = "2 * Lambda^-4 * twopi^7 * omega(k) * delta3(k,h) * delta4(K,H) + 3i * a'(k;K) * b(h,s=1;H)";
  for (auto _ : state) benchmark::DoNotOptimize(to_string(parse_expression(text)));
}
BENCHMARK(BM_ParsePrint);

static void BM_LszElastic(benchmark::State& state) {
  GreenFunction g;
  g.fields = {{FieldKind::Scalar, Rational(1)}};
  const int n = static_cast<int>(state.range(0));
  for (int io = 0; io < 2; ++io)
    for (int i = 0; i < n; ++i) {
      Leg l;
      l.incoming = io == 0;
      l.momentum = MomentumLabel::symbol((io ? "h" : "k") + std::to_string(i));
      g.legs.push_back(l);
    }
  for (auto _ : state) benchmark::DoNotOptimize(lsz_reduce(g, {}, {}));
}
BENCHMARK(BM_LszElastic)->DenseRange(1, 4);

static void BM_ToyUnitarity(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const ToySMatrix t = random_block_instance(n, rng);
    benchmark::DoNotOptimize(toy_unitarity_check(t, 1e-12));
  }
}
BENCHMARK(BM_ToyUnitarity)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
