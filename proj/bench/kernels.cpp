// Dense reference elimination against the sparse kernel, serial and OpenMP, on the
// differential matrices of the fixtures; plus whole-range cohomology precompute.

#include <benchmark/benchmark.h>

#include <memory>
#include <string>

#include "dgalab/cohomology.hpp"
#include "dgalab/io.hpp"
#include "dgalab/linalg.hpp"

using namespace dgalab;

namespace {

struct Matrix {
  std::vector<SparseVec> rows;
  std::size_t cols = 0;
};

Matrix differential_matrix(const char* fixture, int n) {
  auto dga = load_dga(std::string(DGALAB_FIXTURE_DIR) + "/" + fixture).dga;
  Cohomology h(dga, Exec::serial);
  return {h.differential_columns(n), h.basis(n + 1).size()};
}

Matrix tensor_matrix(const char* fixture, int n) {
  auto dga = load_dga(std::string(DGALAB_FIXTURE_DIR) + "/" + fixture).dga;
  Cohomology h(tensor_product(dga, dga), Exec::serial);
  return {h.differential_columns(n), h.basis(n + 1).size()};
}

const Matrix& a1a1_47() {
  static Matrix m = tensor_matrix("a1.dga", 47);
  return m;
}

const Matrix& a1_63() {
  static Matrix m = differential_matrix("a1.dga", 63);
  return m;
}

const Matrix& a1_47() {
  static Matrix m = differential_matrix("a1.dga", 47);
  return m;
}

void run_sparse(benchmark::State& state, const Matrix& m, Exec exec) {
  for (auto _ : state) benchmark::DoNotOptimize(rref(m.rows, m.cols, exec));
  state.counters["rows"] = static_cast<double>(m.rows.size());
  state.counters["cols"] = static_cast<double>(m.cols);
}

void run_dense(benchmark::State& state, const Matrix& m) {
  DenseMatrix d;
  for (const auto& r : m.rows) d.push_back(to_dense(r, m.cols));
  for (auto _ : state) benchmark::DoNotOptimize(reference::rref_dense(d, m.cols));
}

void BM_Dense_A1_d47(benchmark::State& s) { run_dense(s, a1_47()); }
void BM_SparseSerial_A1_d47(benchmark::State& s) { run_sparse(s, a1_47(), Exec::serial); }
void BM_SparseParallel_A1_d47(benchmark::State& s) { run_sparse(s, a1_47(), Exec::parallel); }
void BM_Dense_A1_d63(benchmark::State& s) { run_dense(s, a1_63()); }
void BM_SparseSerial_A1_d63(benchmark::State& s) { run_sparse(s, a1_63(), Exec::serial); }
void BM_SparseParallel_A1_d63(benchmark::State& s) { run_sparse(s, a1_63(), Exec::parallel); }

void BM_Dense_A1xA1_d47(benchmark::State& s) { run_dense(s, a1a1_47()); }
void BM_SparseSerial_A1xA1_d47(benchmark::State& s) { run_sparse(s, a1a1_47(), Exec::serial); }
void BM_SparseParallel_A1xA1_d47(benchmark::State& s) { run_sparse(s, a1a1_47(), Exec::parallel); }

void precompute(benchmark::State& state, Exec exec) {
  auto dga = load_dga(std::string(DGALAB_FIXTURE_DIR) + "/a1.dga").dga;
  for (auto _ : state) {
    Cohomology h(dga, exec);
    h.precompute(0, 64);
    benchmark::DoNotOptimize(h.space(64).dimension());
  }
}

void BM_CohomologyRange_A1_Serial(benchmark::State& s) { precompute(s, Exec::serial); }
void BM_CohomologyRange_A1_Parallel(benchmark::State& s) { precompute(s, Exec::parallel); }

}  // namespace

BENCHMARK(BM_Dense_A1_d47)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseSerial_A1_d47)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseParallel_A1_d47)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dense_A1_d63)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseSerial_A1_d63)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseParallel_A1_d63)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dense_A1xA1_d47)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseSerial_A1xA1_d47)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseParallel_A1xA1_d47)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CohomologyRange_A1_Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CohomologyRange_A1_Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
