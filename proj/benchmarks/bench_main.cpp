// Local main() for the benchmark suite. The distro's libbenchmark_main.a
// ships slim-LTO objects that newer GCC releases refuse to link, so the
// two-line entry point lives here instead.

#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
