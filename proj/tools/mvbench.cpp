// Benchmark: serial reference implementations against the OpenMP kernels.
// Checks that both paths produce identical output before timing them.

#include <chrono>
#include <cstdio>

#include "mv/characters.hpp"
#include "mv/json_io.hpp"
#include "mv/mv_series.hpp"
#include "mv/parallel.hpp"

using namespace mv;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
double time_ms(F&& f) {
    auto t0 = Clock::now();
    f();
    return ms_since(t0);
}

}  // namespace

int main(int argc, char** argv) {
    int table_d = 10;
    int series_d = 5;
    int order = 12;
    if (argc > 1) table_d = std::atoi(argv[1]);
    if (argc > 2) series_d = std::atoi(argv[2]);
    if (argc > 3) order = std::atoi(argv[3]);

    std::printf("workers: %d (cap with MV_THREADS)\n\n", worker_count());

    {
        CharacterTable serial, parallel;
        double ts = time_ms([&] { serial = character_table_serial(table_d); });
        double tp = time_ms([&] { parallel = character_table(table_d, Exec::parallel); });
        bool same = serial.labels.size() == parallel.labels.size();
        for (size_t v = 0; same && v < serial.values.size(); ++v)
            for (size_t m = 0; same && m < serial.values.size(); ++m)
                same = serial.values[v][m] == parallel.values[v][m];
        std::printf("character table d=%d      serial %8.1f ms   openmp %8.1f ms   speedup %.2fx   %s\n",
                    table_d, ts, tp, ts / tp, same ? "identical" : "MISMATCH");
        if (!same) return 1;
    }
    {
        MVSeries serial, parallel;
        double ts = time_ms([&] { serial = disconnected_series_serial(series_d, order, order); });
        double tp = time_ms([&] { parallel = disconnected_series(series_d, order, order, Exec::parallel); });
        bool same = json_of(serial).dump() == json_of(parallel).dump();
        std::printf("character sum d=%d N=%-3d  serial %8.1f ms   openmp %8.1f ms   speedup %.2fx   %s\n",
                    series_d, order, ts, tp, ts / tp, same ? "identical" : "MISMATCH");
        if (!same) return 1;
    }
    {
        VerifyReport serial, parallel;
        double ts = time_ms([&] { serial = verify_cutjoin(series_d, 8, 6, false, Exec::serial); });
        double tp = time_ms([&] { parallel = verify_cutjoin(series_d, 8, 6, false, Exec::parallel); });
        std::printf("cut-and-join d=%d        serial %8.1f ms   openmp %8.1f ms   speedup %.2fx   %s\n",
                    series_d, ts, tp, ts / tp,
                    (serial.pass == parallel.pass) ? (serial.pass ? "pass" : "fail") : "MISMATCH");
        if (serial.pass != parallel.pass || !serial.pass) return 1;
    }
    return 0;
}
