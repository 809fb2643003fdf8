#include "doctest.h"

#include "permtodd/chow.hpp"
#include "permtodd/spider.hpp"

#include "json.hpp"

#include <bit>
#include <random>

using namespace permtodd;
using namespace permtodd::chow;

namespace {

Subset set(std::initializer_list<int> elems) {
    Subset s = 0;
    for (int e : elems) s |= Subset{1} << (e - 1);
    return s;
}

std::vector<int> members(Subset s) {
    std::vector<int> out;
    for (int e = 1; s; ++e, s >>= 1)
        if (s & 1u) out.push_back(e);
    return out;
}

// Every multiplicity vector with entries >= 1 and total degree <= max_deg.
void for_each_mult(int k, int max_deg, std::vector<int>& m, const std::function<void()>& f) {
    if (static_cast<int>(m.size()) == k) {
        f();
        return;
    }
    int used = 0;
    for (int x : m) used += x;
    for (int x = 1; used + x + (k - static_cast<int>(m.size()) - 1) <= max_deg; ++x) {
        m.push_back(x);
        for_each_mult(k, max_deg, m, f);
        m.pop_back();
    }
}

}  // namespace

TEST_CASE("subset chain validation") {
    CHECK_NOTHROW((SubsetChain{2, {set({1}), set({1, 3})}}.validate()));
    CHECK_THROWS_AS((SubsetChain{2, {set({1}), set({2, 3})}}.validate()), DomainError);
    CHECK_THROWS_AS((SubsetChain{2, {set({1, 2, 3})}}.validate()), DomainError);
    CHECK_THROWS_AS((SubsetChain{2, {0}}.validate()), DomainError);
    CHECK_THROWS_AS((SubsetChain{2, {set({1}), set({1})}}.validate()), DomainError);
    const SubsetChain c{3, {set({2}), set({2, 4})}};
    CHECK(c.at(0) == 0);
    CHECK(c.at(3) == set({1, 2, 3, 4}));
    CHECK(c.sizes() == std::vector<int>{1, 2});
}

TEST_CASE("squaring with a fixed choice, d = 2") {
    const SubsetChain c{2, {set({1})}};
    const auto e12 = expand_square_choice(c, 1, 1, 2);
    CHECK(e12.terms().size() == 1);
    CHECK(e12.coefficient({set({1}), set({1, 3})}) == -1);
    const auto e13 = expand_square_choice(c, 1, 1, 3);
    CHECK(e13.terms().size() == 1);
    CHECK(e13.coefficient({set({1}), set({1, 2})}) == -1);
    CHECK_THROWS_AS((expand_square_choice(c, 1, 2, 3)), DomainError);
    CHECK_THROWS_AS((expand_square_choice(c, 1, 1, 1)), DomainError);
}

TEST_CASE("squaring with a fixed choice, d = 3") {
    const SubsetChain c{3, {set({1, 2})}};
    const auto e = expand_square_choice(c, 1, 1, 3);
    CHECK(e.terms().size() == 2);
    CHECK(e.coefficient({set({1}), set({1, 2})}) == -1);
    CHECK(e.coefficient({set({1, 2}), set({1, 2, 4})}) == -1);
}

TEST_CASE("averaged squaring is the mean over all choices") {
    for (int d = 1; d <= 4; ++d) {
        for (const auto& c : all_chains(d, d)) {
            for (int l = 1; l <= c.length(); ++l) {
                const auto as = members(c.at(l) & ~c.at(l - 1));
                const auto bs = members(c.at(l + 1) & ~c.at(l));
                SquareFreeExpr mean(d);
                const Rational w = make_rational(1, static_cast<long>(as.size() * bs.size()));
                for (int a : as)
                    for (int b : bs) mean.add(expand_square_choice(c, l, a, b), w);
                CHECK(expand_square_avg(c, l) == mean);
            }
        }
    }
}

TEST_CASE("square-free monomials expand to themselves") {
    for (const auto& c : all_chains(3, 3)) {
        if (c.subsets.empty()) continue;
        ChainMonomial m{c, std::vector<int>(c.length(), 1)};
        SquareFreeExpr expect(3);
        expect.add(c.subsets, 1);
        CHECK(expand_monomial(m) == expect);
        CHECK(expand_monomial_direct(m) == expect);
    }
}

TEST_CASE("x_{1}^2 at d = 2") {
    const ChainMonomial m{SubsetChain{2, {set({1})}}, {2}};
    const auto e = expand_monomial(m);
    CHECK(e.coefficient({set({1}), set({1, 2})}) == make_rational(-1, 2));
    CHECK(e.coefficient({set({1}), set({1, 3})}) == make_rational(-1, 2));
    CHECK(e.terms().size() == 2);
    const auto sym = symmetrize(e);
    CHECK(sym.coefficient({1, 2}) == make_rational(-1, 6));
}

TEST_CASE("monomials above the top degree vanish") {
    CHECK(expand_monomial(ChainMonomial{SubsetChain{2, {set({1})}}, {3}}).empty());
    CHECK(expand_monomial_direct(ChainMonomial{SubsetChain{2, {set({1})}}, {3}}).empty());
    CHECK(expand_monomial(ChainMonomial{SubsetChain{3, {set({1}), set({1, 2})}}, {2, 3}}).empty());
}

TEST_CASE("closed-form expansion equals iterated squaring") {
    for (int d = 1; d <= 4; ++d) {
        for (const auto& c : all_chains(d, d)) {
            if (c.subsets.empty()) continue;
            std::vector<int> m;
            for_each_mult(c.length(), d, m, [&] {
                const ChainMonomial mono{c, m};
                CHECK(expand_monomial_direct(mono) == expand_monomial(mono));
            });
        }
    }
}

TEST_CASE("size class counts") {
    CHECK(size_class_count(2, {1}) == 3);
    CHECK(size_class_count(2, {1, 2}) == 6);
    CHECK(size_class_count(3, {2}) == 6);
    CHECK(size_class_count(4, {}) == 1);
    for (int d = 1; d <= 4; ++d) {
        std::map<std::vector<int>, long> tally;
        for (const auto& c : all_chains(d, d)) ++tally[c.sizes()];
        for (const auto& [sizes, n] : tally) CHECK(size_class_count(d, sizes) == n);
    }
}

TEST_CASE("symmetrize averages a size class") {
    SquareFreeExpr e(2);
    e.add(std::vector<Subset>{set({1})}, 3);
    e.add(std::vector<Subset>{set({2})}, 1);
    e.add(std::vector<Subset>{set({1, 2})}, make_rational(1, 2));
    const auto s = symmetrize(e);
    CHECK(s.coefficient({1}) == make_rational(4, 3));
    CHECK(s.coefficient({2}) == make_rational(1, 6));
    CHECK(s.coefficient({1, 2}) == 0);
}

TEST_CASE("todd expansion equals alpha on every size chain") {
    for (int d = 1; d <= 4; ++d) {
        const auto target = todd_from_alpha(d, d);
        CHECK(target.terms().size() == (std::size_t{1} << d));
        for (const auto& [sizes, c] : target.terms()) CHECK(c == spider::alpha(spider::SizeChain{d, sizes}));
        CHECK(todd_squarefree(d, d) == target);
        CHECK(todd_squarefree(d, d, ExpansionPath::Direct) == target);
    }
}

TEST_CASE("symmetrized expansion does not depend on the (a, b) choices") {
    std::mt19937 rng(5);
    auto random_choice = [&](const SubsetChain& c, int l) {
        const auto as = members(c.at(l) & ~c.at(l - 1));
        const auto bs = members(c.at(l + 1) & ~c.at(l));
        return std::pair{as[rng() % as.size()], bs[rng() % bs.size()]};
    };
    auto highest = [](const SubsetChain& c, int l) {
        return std::pair{members(c.at(l) & ~c.at(l - 1)).back(), members(c.at(l + 1) & ~c.at(l)).back()};
    };
    for (int d = 1; d <= 4; ++d) {
        const auto target = todd_from_alpha(d, d);
        CHECK(todd_squarefree(d, d, ExpansionPath::Choice, random_choice) == target);
        CHECK(todd_squarefree(d, d, ExpansionPath::Choice, highest) == target);
    }
}

TEST_CASE("truncated todd expansion") {
    const auto t = todd_squarefree(3, 1);
    for (const auto& [sizes, c] : t.terms()) CHECK(sizes.size() <= 1);
    CHECK(t == todd_from_alpha(3, 1));
}

TEST_CASE("json form of the todd class at d = 2") {
    const auto j = nlohmann::json::parse(todd_from_alpha(2, 2).to_json());
    REQUIRE(j.size() == 4);
    CHECK(j[0]["sizes"].empty());
    CHECK(j[0]["coeff"] == "1");
    CHECK(j[1]["sizes"] == nlohmann::json({1}));
    CHECK(j[1]["coeff"] == "1/2");
    CHECK(j[2]["sizes"] == nlohmann::json({1, 2}));
    CHECK(j[2]["coeff"] == "1/6");
}

TEST_CASE("todd expansion equals alpha at d = 5") {
    CHECK(todd_squarefree(5, 5) == todd_from_alpha(5, 5));
}
