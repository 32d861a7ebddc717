#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "alexnorm/fox.hpp"
#include "alexnorm/kernels.hpp"
#include "alexnorm/norm.hpp"

using namespace alexnorm;

namespace {

// Support of the four-component link polynomial plus a few of its
// pairwise differences: a 4-dimensional cloud with many coplanar subsets.
std::vector<Point> difference_points() {
  std::vector<Point> out;
  const auto terms = mt_link_polynomial().terms();
  for (const auto& [g, cg] : terms) out.push_back(g.to_point());
  for (const auto& [h, ch] : terms)
    if (h.to_point()[3] == 0) out.push_back((terms.begin()->first - h).to_point());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

kernels::PolyMatrix link_matrix() {
  std::ifstream in(std::string(ALEXNORM_DATA_DIR) + "/mt_link.pd");
  std::stringstream ss;
  ss << in.rdbuf();
  AlexanderMatrix m = alexander_matrix(wirtinger_from_pd(parse_pd(ss.str())));
  m.pop_back();
  return m;
}

void BM_facets_parallel(benchmark::State& st) {
  const auto pts = difference_points();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::enumerate_facets(pts));
}
void BM_facets_serial(benchmark::State& st) {
  const auto pts = difference_points();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::enumerate_facets_serial(pts));
}
void BM_minors_parallel(benchmark::State& st) {
  const auto m = link_matrix();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::column_deleted_minors(m, 4));
}
void BM_minors_serial(benchmark::State& st) {
  const auto m = link_matrix();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::column_deleted_minors_serial(m, 4));
}

}  // namespace

BENCHMARK(BM_facets_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_facets_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_minors_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_minors_serial)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
