// Serial-versus-parallel comparison for the two kernels that fan out over
// independent work items: region enumeration (one exact LP per sign mask)
// and the exhaustive F2 annihilator scan (one colon ideal per class).
#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "hv/arrangement.hpp"
#include "hv/regions.hpp"
#include "hv/rings.hpp"

namespace {

hv::Arrangement make(int d, const std::vector<std::vector<long>>& normals,
                     const std::vector<std::string>& offsets) {
  hv::Arrangement arr;
  arr.dimension = d;
  for (size_t i = 0; i < normals.size(); ++i) {
    hv::Hyperplane h;
    for (long z : normals[i]) h.normal.push_back(hv::Integer(z));
    h.offset = hv::parse_rational(offsets[i]);
    arr.hyperplanes.push_back(std::move(h));
  }
  return arr;
}

// Nine lines in general position: 512 sign masks, each probed by an exact LP.
hv::Arrangement nine_lines() {
  return make(2,
              {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {1, 1}, {1, 1}, {1, -1}, {1, -1}, {2, 1}},
              {"0", "5", "0", "5", "7", "1", "4", "-4", "13"});
}

hv::Arrangement fig2a5() {
  return make(2, {{1, 1}, {1, 0}, {-1, 0}, {0, -1}, {1, 1}}, {"1", "0", "-2", "-2", "0"});
}

void BM_regions_serial(benchmark::State& state) {
  auto arr = nine_lines();
  for (auto _ : state) {
    auto out = hv::enumerate_regions_serial(arr);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_regions_serial)->Unit(benchmark::kMillisecond);

void BM_regions_parallel(benchmark::State& state) {
  auto arr = nine_lines();
  for (auto _ : state) {
    auto out = hv::enumerate_regions(arr);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_regions_parallel)->Unit(benchmark::kMillisecond);

void BM_scan_serial(benchmark::State& state) {
  auto pres = hv::present_z2os(fig2a5());
  for (auto _ : state) {
    auto out = hv::scan_annihilators_serial(pres);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_scan_serial)->Unit(benchmark::kMillisecond);

void BM_scan_parallel(benchmark::State& state) {
  auto pres = hv::present_z2os(fig2a5());
  for (auto _ : state) {
    auto out = hv::scan_annihilators(pres);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_scan_parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
