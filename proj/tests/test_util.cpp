#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "serpaudit/util.hpp"

using namespace serpaudit;

TEST_CASE("sha256 matches known vectors") {
    CHECK(sha256_hex(std::string("")) ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex(std::string("abc")) ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex(std::string(
              "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq")) ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    // Multi-block input.
    CHECK(sha256_hex(std::string(1000000, 'a')) ==
          "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST_CASE("format helpers are stable") {
    CHECK(format_fixed(0.95149, 4) == "0.9515");
    CHECK(format_fixed(-0.0, 4) == "0.0000");
    CHECK(format_fixed(1.0, 1) == "1.0");
    CHECK(format_full(0.5) == "0.5");
    CHECK(format_full(-0.0) == "0");
}

TEST_CASE("stable_sum is permutation invariant and sign antisymmetric") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> v(1 + trial % 17);
        for (auto& x : v) x = dist(rng);
        double base = stable_sum(v);
        std::shuffle(v.begin(), v.end(), rng);
        CHECK(stable_sum(v) == base);
        std::vector<double> neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        CHECK(stable_sum(neg) == -base);
    }
    CHECK(stable_mean(std::vector<double>{}) == 0.0);
}

TEST_CASE("parallel_for covers every index once") {
    std::vector<int> hits(501, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
}
