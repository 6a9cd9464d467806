#include <atomic>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "svcvv/parallel.hpp"

using namespace svcvv;

TEST_CASE("job resolution") {
    CHECK(resolve_jobs(5) == 5);
    CHECK(resolve_jobs(1) == 1);
    CHECK(resolve_jobs(0) >= 1);
    CHECK(resolve_jobs(-3) >= 1);
}

TEST_CASE("parallel loop visits every index exactly once") {
    const std::size_t n = 10000;
    std::vector<std::atomic<int>> hits(n);
    parallel_for(n, 4, [&](std::size_t i) { hits[i].fetch_add(1); });
    bool all_once = true;
    for (const auto& h : hits) all_once = all_once && h.load() == 1;
    CHECK(all_once);

    // degenerate sizes
    parallel_for(0, 4, [&](std::size_t) { throw std::logic_error("never called"); });
    std::atomic<int> single{0};
    parallel_for(1, 8, [&](std::size_t) { single.fetch_add(1); });
    CHECK(single.load() == 1);
}

TEST_CASE("worker exceptions surface on the calling thread") {
    std::atomic<int> done{0};
    CHECK_THROWS_WITH_AS(parallel_for(1000, 4,
                                      [&](std::size_t i) {
                                          if (i == 137) throw std::runtime_error("boom at 137");
                                          done.fetch_add(1);
                                      }),
                         "boom at 137", std::runtime_error);
    CHECK(done.load() < 1000);

    // sequential path reports the same way
    CHECK_THROWS_AS(parallel_for(10, 1, [](std::size_t) { throw std::runtime_error("seq"); }),
                    std::runtime_error);
}
