#include "permtodd/verify.hpp"

#include "permtodd/chow.hpp"
#include "permtodd/ehrhart.hpp"
#include "permtodd/spider.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>

namespace permtodd::verify {

namespace {

using spider::SizeChain;

std::vector<Check> counts() {
    std::vector<Check> out;
    const std::array<long, 5> expected{1, 3, 5, 15, 29};
    for (int n = 1; n <= 5; ++n) {
        BigInt c = spider::count_shapes(n);
        out.push_back({"count_shapes(" + std::to_string(n) + ")", c == expected[n - 1], c.get_str()});
    }
    const auto series = spider::gf_series(12);
    bool all = true;
    std::string first_bad;
    for (int n = 1; n <= 12; ++n) {
        if (spider::count_shapes(n) != series[n]) {
            all = false;
            if (first_bad.empty()) first_bad = "n=" + std::to_string(n);
        }
    }
    out.push_back({"count_shapes = generating function, n <= 12", all, all ? "12 orders" : first_bad});
    return out;
}

std::vector<Check> closedforms() {
    std::vector<Check> out;
    int checked = 0;
    std::string bad;
    for (int d = 2; d <= 12; ++d)
        for (int s1 = 1; s1 <= d; ++s1)
            for (int s2 = s1 + 1; s2 <= d; ++s2) {
                ++checked;
                if (bad.empty() && spider::alpha(SizeChain{d, {s1, s2}}) != spider::alpha_codim2_closed(s1, s2, d))
                    bad = "d=" + std::to_string(d) + " (" + std::to_string(s1) + "," + std::to_string(s2) + ")";
            }
    out.push_back({"codim-2 closed form, all 2-chains d <= 12", bad.empty(),
                   bad.empty() ? std::to_string(checked) + " chains" : bad});

    std::mt19937 rng(20240611);
    bad.clear();
    const int samples = 200;
    for (int i = 0; i < samples; ++i) {
        const int d = std::uniform_int_distribution<int>(4, 15)(rng);
        std::vector<int> pool(d);
        for (int s = 0; s < d; ++s) pool[s] = s + 1;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> s(pool.begin(), pool.begin() + 4);
        std::sort(s.begin(), s.end());
        if (bad.empty() && spider::alpha(SizeChain{d, s}) != spider::alpha_4chain_closed(s[0], s[1], s[2], s[3], d))
            bad = "d=" + std::to_string(d);
    }
    out.push_back({"4-chain closed form, 200 sampled chains d <= 15", bad.empty(),
                   bad.empty() ? std::to_string(samples) + " chains" : bad});

    const Rational v = spider::alpha_4chain_closed(10, 12, 13, 15, 24);
    out.push_back({"4-chain closed form at (10,12,13,15), d=24", v == make_rational(-19, 1684800), to_string(v)});
    return out;
}

std::vector<Check> hypersimplex() {
    using namespace ehrhart;
    std::vector<Check> out;
    std::string bad;
    int checked = 0;
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k < n; ++k) {
            const auto poly = hypersimplex_ehrhart(k, n);
            const auto h = HPolytope::of(hypersimplex_spec(k, n));
            for (int t = 0; t <= 3; ++t) {
                ++checked;
                const BigInt gf = hypersimplex_ehrhart_gf(k, n, t);
                const Rational closed = poly(t);
                const auto brute = count_lattice_points(h, t);
                if (bad.empty() && !(closed == Rational(gf) && gf == static_cast<unsigned long>(brute)))
                    bad = "k=" + std::to_string(k) + " n=" + std::to_string(n) + " t=" + std::to_string(t);
            }
        }
    out.push_back({"generating function = closed form = brute force, n <= 5, t <= 3", bad.empty(),
                   bad.empty() ? std::to_string(checked) + " cases" : bad});

    const auto h24 = HPolytope::of(hypersimplex_spec(2, 4));
    out.push_back({"Lat(Delta_{2,4}, 1) = 6", count_lattice_points(h24, 1) == 6, std::to_string(count_lattice_points(h24, 1))});
    out.push_back({"Lat(Delta_{2,4}, 2) = 19", count_lattice_points(h24, 2) == 19, std::to_string(count_lattice_points(h24, 2))});

    bad.clear();
    checked = 0;
    for (int d = 1; d <= 60; ++d)
        for (int k = 1; k <= d; ++k) {
            ++checked;
            const Rational lin = hypersimplex_linear_coeff(k, d + 1);
            if (bad.empty() && !(lin > 0 && lin == hypersimplex_ehrhart(k, d + 1, 1).coefficient(1)))
                bad = "k=" + std::to_string(k) + " d=" + std::to_string(d);
        }
    out.push_back({"linear coefficient positive and equal to [t^1], d <= 60", bad.empty(),
                   bad.empty() ? std::to_string(checked) + " cases" : bad});
    return out;
}

std::vector<Check> mcmullen(int d) {
    using namespace ehrhart;
    std::vector<PermSpec> specs;
    if (d == 2) {
        specs = {PermSpec{{1, 2, 3}}, PermSpec{{0, 2, 5}}};
    } else if (d == 3) {
        specs = {PermSpec{{1, 2, 3, 4}}, PermSpec{{0, 1, 3, 7}}};
    } else {
        throw DomainError("verify mcmullen: --d must be 2 or 3");
    }
    std::vector<Check> out;
    for (const auto& v : specs) {
        const auto r = mcmullen_check(v);
        std::string name = "face sum = Ehrhart polynomial for Perm(";
        for (std::size_t i = 0; i < v.v.size(); ++i) name += (i ? "," : "") + std::to_string(v.v[i]);
        out.push_back({name + ")", r.pass, r.ehrhart.str()});
    }
    return out;
}

std::vector<Check> chow(int d) {
    if (d < 1 || d > 5) throw DomainError("verify chow: --d must lie in [1, 5]");
    std::vector<Check> out;
    const auto target = chow::todd_from_alpha(d, d);
    const auto avg = chow::todd_squarefree(d, d, chow::ExpansionPath::Averaged);
    out.push_back({"symmetrized Todd expansion = alpha, d=" + std::to_string(d), avg == target,
                   std::to_string(target.terms().size()) + " size classes"});
    auto lowest = [](const chow::SubsetChain& c, int l) {
        const auto lo = c.at(l - 1), s = c.at(l), hi = c.at(l + 1);
        return std::pair{std::countr_zero(s & ~lo) + 1, std::countr_zero(hi & ~s) + 1};
    };
    const auto chosen = chow::todd_squarefree(d, d, chow::ExpansionPath::Choice, lowest);
    out.push_back({"fixed (a,b) choices symmetrize to the same class, d=" + std::to_string(d), chosen == target, ""});
    return out;
}

}  // namespace

bool known_target(std::string_view target) {
    return target == "mcmullen" || target == "chow" || target == "hypersimplex" || target == "closedforms" ||
           target == "counts";
}

std::vector<Check> run(std::string_view target, const Options& opts) {
    if (target == "counts") return counts();
    if (target == "closedforms") return closedforms();
    if (target == "hypersimplex") return hypersimplex();
    if (target == "mcmullen") return mcmullen(opts.d);
    if (target == "chow") return chow(opts.d);
    throw DomainError("unknown verification target '" + std::string(target) + "'");
}

}  // namespace permtodd::verify
