#include <doctest.h>

#include <thread>
#include <vector>

#include "trithoff/alpha.hpp"
#include "trithoff/trithoff_array.hpp"

using namespace trithoff;

// The shared state in the library is limited to memo caches (Tribonacci
// numbers, first-column values, array entries, the alpha bracket). Hammer
// them from several threads and check every thread saw identical values.

TEST_CASE("memo caches serve concurrent readers consistent values") {
    constexpr int kThreads = 4;
    std::vector<std::thread> workers;
    std::vector<std::string> digests(kThreads);
    for (int t = 0; t < kThreads; ++t) {
        workers.emplace_back([t, &digests] {
            std::string d;
            for (size_t n = 400; n-- > 380;) d += tribonacci(n).to_string() + ",";
            for (size_t r = 200; r-- > 180;) d += entry(r, 3).to_string() + ",";
            d += alpha_bits(300).lo.to_decimal(40);
            digests[t] = std::move(d);
        });
    }
    for (auto& w : workers) w.join();
    for (int t = 1; t < kThreads; ++t) CHECK(digests[t] == digests[0]);
}
