// Serial reference kernels against their OpenMP counterparts.

#include "thyp/registry.hpp"
#include "thyp/series.hpp"

#include <benchmark/benchmark.h>

using namespace thyp;

namespace {

// Dense series whose coefficients are rational functions of A and B.
std::vector<ParamRat> dense(int N, int shift)
{
    std::vector<ParamRat> c;
    ParamRat A = ParamRat::var(kA), B = ParamRat::var(kB);
    for (int k = 0; k <= N; ++k)
        c.push_back((A + ParamRat(Rat(k + shift))) / (B * ParamRat(Rat(k + 1)) + ParamRat(Rat(shift))));
    return c;
}

void BM_series_mul_serial(benchmark::State& state)
{
    int N = static_cast<int>(state.range(0));
    auto a = dense(N, 1), b = dense(N, 2);
    std::vector<ParamRat> out;
    for (auto _ : state) {
        series_mul_serial(a, b, out, N);
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_series_mul_parallel(benchmark::State& state)
{
    int N = static_cast<int>(state.range(0));
    auto a = dense(N, 1), b = dense(N, 2);
    std::vector<ParamRat> out;
    for (auto _ : state) {
        series_mul_parallel(a, b, out, N);
        benchmark::DoNotOptimize(out.data());
    }
}

std::vector<VerifyJob> batch()
{
    std::vector<VerifyJob> jobs;
    for (const auto& c : list_identities()) {
        VerifyJob j;
        j.id = c.id;
        j.order = c.free_slots.size() >= 2 ? 4 : 8;
        jobs.push_back(j);
    }
    return jobs;
}

void BM_verify_batch(benchmark::State& state)
{
    bool parallel = state.range(0) != 0;
    auto jobs = batch();
    for (auto _ : state) {
        auto reports = verify_batch(jobs, parallel);
        benchmark::DoNotOptimize(reports.data());
    }
    state.SetLabel(parallel ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_series_mul_serial)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_series_mul_parallel)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_batch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
