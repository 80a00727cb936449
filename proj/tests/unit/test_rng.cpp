#include <doctest.h>

#include <cmath>
#include <set>

#include "niafs/rng.hpp"

using niafs::RngStream;

TEST_CASE("equal identity gives identical draw sequences") {
    RngStream a(42);
    RngStream b(42);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

    RngStream c1 = RngStream(7).derive(1).derive(2);
    RngStream c2 = RngStream(7).derive(1).derive(2);
    for (int i = 0; i < 100; ++i) CHECK(c1.uniform() == c2.uniform());
}

TEST_CASE("derive records the path") {
    RngStream s(123);
    auto child = s.derive(1).derive(2);
    CHECK(child.path() == std::vector<std::uint64_t>{1, 2});
    CHECK(child.master_seed() == 123);
}

TEST_CASE("sibling streams differ within the first 100 draws") {
    RngStream s(99);
    auto a = s.derive(1);
    auto b = s.derive(2);
    bool differs = false;
    for (int i = 0; i < 100 && !differs; ++i) differs = a.next_u64() != b.next_u64();
    CHECK(differs);
}

TEST_CASE("different master seeds differ") {
    RngStream a(1), b(2);
    bool differs = false;
    for (int i = 0; i < 100 && !differs; ++i) differs = a.next_u64() != b.next_u64();
    CHECK(differs);
}

TEST_CASE("uniform stays in [0,1) and fills the range") {
    RngStream s(5);
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double u = s.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
}

TEST_CASE("normal moments are sane") {
    RngStream s(11);
    const int n = 100000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = s.normal();
        sum += x;
        sq += x * x;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    CHECK(std::fabs(mean) < 0.02);
    CHECK(std::fabs(var - 1.0) < 0.03);
}

TEST_CASE("index covers all residues") {
    RngStream s(3);
    std::set<std::size_t> seen;
    for (int i = 0; i < 200; ++i) seen.insert(s.index(7));
    CHECK(seen.size() == 7);
}
