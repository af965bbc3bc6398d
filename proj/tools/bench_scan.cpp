// Times the classification scans in serial and parallel mode on one batch of
// random tensors and checks that both modes produce byte-identical reports.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tlcp/classify.hpp"
#include "tlcp/config.hpp"
#include "tlcp/io.hpp"
#include "tlcp/random.hpp"
#include "tlcp/scan.hpp"

namespace {

double run_batch(const std::vector<tlcp::DenseTensor>& batch, tlcp::scan::Mode mode,
                 std::vector<std::string>& dumps) {
    dumps.clear();
    const auto t0 = std::chrono::steady_clock::now();
    for (const tlcp::DenseTensor& t : batch) {
        tlcp::ClassifyOptions opt{tlcp::enumeration_cap(), mode};
        dumps.push_back(tlcp::classification_to_json(tlcp::classify(t, opt)).dump());
    }
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial versus parallel scan kernels on a classification batch"};
    std::uint64_t seed = 1;
    int count = 8;
    int blocks = 2;
    int side = 2;
    long lo = -3;
    long hi = 3;
    app.add_option("--seed", seed)->capture_default_str();
    app.add_option("--count", count)->capture_default_str();
    app.add_option("--blocks", blocks)->capture_default_str();
    app.add_option("--side", side)->capture_default_str();
    app.add_option("--lo", lo)->capture_default_str();
    app.add_option("--hi", hi)->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    std::vector<tlcp::DenseTensor> batch;
    for (int i = 0; i < count; ++i) {
        auto rng = tlcp::rng_for(seed, static_cast<std::uint64_t>(i));
        batch.push_back(tlcp::random_integer_tensor(
            rng, tlcp::cubical_shape(2 * blocks, side), lo, hi));
    }

    std::vector<std::string> serial_dumps;
    const double serial = run_batch(batch, tlcp::scan::Mode::Serial, serial_dumps);
    std::printf("serial    %8.3f s  (%d tensors)\n", serial, count);

    if (!tlcp::scan::parallel_available()) {
        std::printf("parallel  unavailable (built without OpenMP)\n");
        return 0;
    }

    std::vector<std::string> parallel_dumps;
    const double parallel = run_batch(batch, tlcp::scan::Mode::Parallel, parallel_dumps);
    std::printf("parallel  %8.3f s\n", parallel);
    if (parallel > 0) std::printf("speedup   %8.2fx\n", serial / parallel);

    if (serial_dumps != parallel_dumps) {
        std::fprintf(stderr, "bench_scan: serial and parallel reports differ\n");
        return 1;
    }
    std::printf("reports   identical across modes\n");
    return 0;
}
