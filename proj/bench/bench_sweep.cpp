#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "supercong/congruence.hpp"
#include "supercong/qseries.hpp"

using namespace supercong;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t max_p = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1000;
  const std::size_t len = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 400;
  #ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif

  std::size_t rows = 0;
  const double ts = seconds([&] { rows = sweep_serial(catalog(), 5, max_p).rows.size(); });
  const double t1 = seconds([&] { sweep(catalog(), 5, max_p, 1); });
  const double tp = seconds([&] { sweep(catalog(), 5, max_p, threads); });
  std::printf("sweep [5, %llu], %zu rows\n", static_cast<unsigned long long>(max_p), rows);
  std::printf("  reference      %8.3f s\n", ts);
  std::printf("  cached, 1 thr  %8.3f s\n", t1);
  std::printf("  cached, %d thr %8.3f s\n", threads, tp);

  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-1000, 1000);
  std::vector<mpq_class> a(len), b(len);
  for (auto& v : a) v = d(rng);
  for (auto& v : b) v = mpq_class(d(rng), 1 + std::abs(d(rng)));
  for (auto& v : b) v.canonicalize();
  const double ms = seconds([&] { mul_dense_serial(a, b, len); });
  const double mp = seconds([&] { mul_dense(a, b, len); });
  std::printf("dense product, %zu terms\n", len);
  std::printf("  serial         %8.3f s\n", ms);
  std::printf("  %d thr         %8.3f s\n", threads, mp);
}
