#include "doctest.h"

#include "permtodd/spider.hpp"

#include <algorithm>
#include <random>

using namespace permtodd;
using namespace permtodd::spider;

namespace {

// Shapes on n positions: a first spider of size j has j head choices.
BigInt shape_count_oracle(int n, bool skip_zero_td) {
    std::vector<BigInt> a(n + 1, 0);
    a[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int j = 1; j <= m; ++j)
            if (!skip_zero_td || j == 1 || j % 2 == 0) a[m] += j * a[m - j];
    return a[n];
}

std::vector<int> random_chain(std::mt19937& rng, int d, int k) {
    std::vector<int> pool(d);
    for (int i = 0; i < d; ++i) pool[i] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> s(pool.begin(), pool.begin() + k);
    std::sort(s.begin(), s.end());
    return s;
}

DiagramShape one(int size, int head) { return DiagramShape{{Spider{size, head}}}; }

}  // namespace

TEST_CASE("chain validation") {
    CHECK_NOTHROW((SizeChain{3, {1, 3}}.validate()));
    CHECK_NOTHROW((SizeChain{0, {}}.validate()));
    CHECK_THROWS_AS((SizeChain{3, {2, 2}}.validate()), ChainError);
    CHECK_THROWS_AS((SizeChain{3, {0, 2}}.validate()), ChainError);
    CHECK_THROWS_AS((SizeChain{3, {1, 4}}.validate()), ChainError);
    CHECK_THROWS_AS((SizeChain{3, {3, 1}}.validate()), ChainError);
    CHECK_THROWS_AS((alpha(SizeChain{2, {1, 3}})), DomainError);
}

TEST_CASE("shape enumeration") {
    CHECK(enumerate_shapes(0).size() == 1);
    CHECK(enumerate_shapes(1).size() == 1);
    const auto two = enumerate_shapes(2);
    REQUIRE(two.size() == 3);
    CHECK(two[0] == DiagramShape{{Spider{1, 1}, Spider{1, 1}}});
    for (int n = 1; n <= 10; ++n) {
        CHECK(BigInt(static_cast<unsigned long>(enumerate_shapes(n, false).size())) == shape_count_oracle(n, false));
        CHECK(count_shapes(n) == shape_count_oracle(n, true));
        for (const auto& s : enumerate_shapes(n)) {
            CHECK(s.covered() == n);
            CHECK_FALSE(s.has_vanishing_todd());
        }
    }
    const long expected[] = {1, 3, 5, 15, 29};
    for (int n = 1; n <= 5; ++n) CHECK(count_shapes(n) == expected[n - 1]);
}

TEST_CASE("generating function matches the shape counts") {
    const auto series = gf_series(12);
    CHECK(series[0] == 0);
    for (int n = 1; n <= 12; ++n) CHECK(series[n] == count_shapes(n));
}

TEST_CASE("weights of two-position shapes") {
    const SizeChain c{9, {3, 5}};
    CHECK(diagram_weight(c, DiagramShape{{Spider{1, 1}, Spider{1, 1}}}) == 1);
    CHECK(diagram_weight(c, one(2, 2)) == make_rational(3, 5));
    CHECK(diagram_weight(c, one(2, 1)) == make_rational(10 - 5, 10 - 3));
}

TEST_CASE("weight of a four-position spider with the head first") {
    const int s1 = 2, s2 = 5, s3 = 6, s4 = 9, n = 12;
    const SizeChain c{n - 1, {s1, s2, s3, s4}};
    const Rational expect = make_rational(s3 - s2, s3 - s1) * make_rational(s4 - s3, s4 - s1) *
                            make_rational(n - s4, n - s1);
    CHECK(diagram_weight(c, one(4, 1)) == expect);
    CHECK(diagram_weight(c, one(4, 4)) ==
          make_rational(s1, s4) * make_rational(s2 - s1, s4 - s1) * make_rational(s3 - s2, s4 - s2));
}

TEST_CASE("diagram term factors") {
    const SizeChain c{3, {1, 2}};
    const auto t = diagram_term(c, DiagramShape{{Spider{1, 1}, Spider{1, 1}}});
    CHECK(t.value == make_rational(1, 4));
    CHECK(t.sign == 1);

    const SizeChain c4{11, {2, 5, 6, 9}};
    const auto h2 = diagram_term(c4, one(4, 2));
    CHECK(h2.tdcoeff == make_rational(-1, 720));
    CHECK(h2.binom == 3);
    CHECK(h2.sign == -1);
    CHECK(h2.value == make_rational(3, 720) * diagram_weight(c4, one(4, 2)));

    const auto odd = diagram_term(SizeChain{5, {1, 2, 4}}, one(3, 2));
    CHECK(odd.tdcoeff == 0);
    CHECK(odd.value == 0);
}

TEST_CASE("alpha examples") {
    CHECK(alpha(SizeChain{24, {10, 12, 13, 15}}) == make_rational(-19, 1684800));
    CHECK(alpha(SizeChain{2, {1, 2}}) == make_rational(1, 6));
    CHECK(alpha(SizeChain{5, {}}) == 1);
    for (int d = 1; d <= 8; ++d)
        for (int s = 1; s <= d; ++s) CHECK(alpha(SizeChain{d, {s}}) == make_rational(1, 2));
}

TEST_CASE("alpha matches the codimension-two closed form") {
    for (int d = 2; d <= 12; ++d)
        for (int s1 = 1; s1 <= d; ++s1)
            for (int s2 = s1 + 1; s2 <= d; ++s2) CHECK(alpha(SizeChain{d, {s1, s2}}) == alpha_codim2_closed(s1, s2, d));
}

TEST_CASE("alpha matches the four-chain closed form on random chains") {
    std::mt19937 rng(101);
    for (int i = 0; i < 150; ++i) {
        const int d = std::uniform_int_distribution<int>(4, 15)(rng);
        const auto s = random_chain(rng, d, 4);
        CHECK(alpha(SizeChain{d, s}) == alpha_4chain_closed(s[0], s[1], s[2], s[3], d));
    }
    CHECK(alpha_4chain_closed(10, 12, 13, 15, 24) == make_rational(-19, 1684800));
}

TEST_CASE("alpha is invariant under reflecting the chain") {
    std::mt19937 rng(202);
    for (int i = 0; i < 200; ++i) {
        const int d = std::uniform_int_distribution<int>(1, 14)(rng);
        const int k = std::uniform_int_distribution<int>(1, std::min(d, 5))(rng);
        const auto s = random_chain(rng, d, k);
        std::vector<int> r;
        for (auto it = s.rbegin(); it != s.rend(); ++it) r.push_back(d + 1 - *it);
        CHECK(alpha(SizeChain{d, s}) == alpha(SizeChain{d, r}));
    }
}

TEST_CASE("weights are invariant under scaling the sizes") {
    std::mt19937 rng(303);
    for (int i = 0; i < 100; ++i) {
        const int d = std::uniform_int_distribution<int>(3, 12)(rng);
        const int k = std::uniform_int_distribution<int>(1, std::min(d, 4))(rng);
        const auto s = random_chain(rng, d, k);
        const int lambda = std::uniform_int_distribution<int>(2, 5)(rng);
        std::vector<int> c{0}, scaled{0};
        for (int x : s) {
            c.push_back(x);
            scaled.push_back(lambda * x);
        }
        c.push_back(d + 1);
        scaled.push_back(lambda * (d + 1));
        for (const auto& shape : enumerate_shapes(k, false))
            CHECK(diagram_weight_completed(c, shape) == diagram_weight_completed(scaled, shape));
    }
}

TEST_CASE("alpha is the sum of its diagram terms") {
    const SizeChain c{9, {1, 4, 6, 8}};
    Rational sum = 0;
    for (const auto& shape : enumerate_shapes(4, false)) sum += diagram_term(c, shape).value;
    CHECK(sum == alpha(c));
}

TEST_CASE("negative scan") {
    CHECK(scan_negative(23, 4).empty());
    CHECK(scan_negative(24, 2).empty());
    CHECK(scan_negative(3, 3).empty());
    const auto hits = scan_negative(24, 4);
    REQUIRE_FALSE(hits.empty());
    bool found = false;
    for (const auto& h : hits) {
        CHECK(h.chain.d == 24);
        CHECK(h.value < 0);
        CHECK(h.value == alpha(h.chain));
        found |= h.chain.sizes == std::vector<int>{10, 12, 13, 15};
    }
    CHECK(found);
    CHECK_THROWS_AS((scan_negative(0, 1)), DomainError);
}

TEST_CASE("threaded scan gives the same list") {
    const auto serial = scan_negative(24, 4, 1);
    const auto threaded = scan_negative(24, 4, 4);
    REQUIRE(serial.size() == threaded.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].chain == threaded[i].chain);
        CHECK(serial[i].value == threaded[i].value);
    }
}
