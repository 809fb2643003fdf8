#include "permtodd/spider.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

namespace permtodd::spider {

void SizeChain::validate() const {
    if (d < 0) throw ChainError("chain: d must be nonnegative");
    int prev = 0;
    for (int s : sizes) {
        if (s <= prev || s > d)
            throw ChainError("chain: sizes must be strictly increasing within [1, " + std::to_string(d) + "]");
        prev = s;
    }
}

int DiagramShape::covered() const {
    return std::accumulate(spiders.begin(), spiders.end(), 0, [](int a, const Spider& s) { return a + s.size; });
}

int DiagramShape::legs() const { return covered() - static_cast<int>(spiders.size()); }

bool DiagramShape::has_vanishing_todd() const {
    return std::any_of(spiders.begin(), spiders.end(), [](const Spider& s) { return s.size >= 3 && s.size % 2 == 1; });
}

namespace {

void enumerate_into(int remaining, bool skip_zero_td, std::vector<Spider>& prefix, std::vector<DiagramShape>& out) {
    if (remaining == 0) {
        out.push_back(DiagramShape{prefix});
        return;
    }
    for (int m = 1; m <= remaining; ++m) {
        if (skip_zero_td && m >= 3 && m % 2 == 1) continue;
        for (int h = 1; h <= m; ++h) {
            prefix.push_back(Spider{m, h});
            enumerate_into(remaining - m, skip_zero_td, prefix, out);
            prefix.pop_back();
        }
    }
}

struct CachedShape {
    DiagramShape shape;
    Rational factor;  // tdcoeff * binom * sign
};

const std::vector<CachedShape>& cached_shapes(int k) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<CachedShape>>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[k];
    if (!slot) {
        slot = std::make_unique<std::vector<CachedShape>>();
        for (auto& shape : enumerate_shapes(k, true)) {
            Rational f = shape_factor(shape).product();
            slot->push_back(CachedShape{std::move(shape), std::move(f)});
        }
    }
    return *slot;
}

std::vector<int> completed_sizes(const SizeChain& chain) {
    std::vector<int> c;
    c.reserve(chain.sizes.size() + 2);
    c.push_back(0);
    c.insert(c.end(), chain.sizes.begin(), chain.sizes.end());
    c.push_back(chain.d + 1);
    return c;
}

void require_cover(int k, const DiagramShape& shape) {
    if (shape.covered() != k) throw DomainError("diagram shape does not cover the chain");
    for (const auto& s : shape.spiders)
        if (s.size < 1 || s.head < 1 || s.head > s.size) throw DomainError("diagram shape: bad spider");
}

}  // namespace

std::vector<DiagramShape> enumerate_shapes(int k, bool skip_zero_td) {
    if (k < 0) throw DomainError("enumerate_shapes: negative length");
    std::vector<DiagramShape> out;
    std::vector<Spider> prefix;
    enumerate_into(k, skip_zero_td, prefix, out);
    return out;
}

Rational diagram_weight_completed(const std::vector<int>& c, const DiagramShape& shape) {
    const int k = static_cast<int>(c.size()) - 2;
    require_cover(k, shape);
    BigInt num = 1, den = 1;
    int pos = 1;
    int prev_head = c[0];
    int prev_rstar = c[0];
    for (const auto& sp : shape.spiders) {
        const int hp = pos + sp.head - 1;
        const int last = pos + sp.size - 1;
        const int head = c[hp];
        // left legs c[pos] < ... < c[hp-1]
        for (int j = pos + 1; j < hp; ++j) {
            num *= c[j] - c[j - 1];
            den *= head - c[j - 1];
        }
        // right legs, largest first: c[last] > ... > c[hp+1]
        for (int p = last; p >= hp + 2; --p) {
            num *= c[p] - c[p - 1];
            den *= c[p] - head;
        }
        const int lstar = sp.left_legs() > 0 ? c[pos] : head;
        num *= lstar - prev_rstar;
        den *= head - prev_head;
        prev_rstar = sp.right_legs() > 0 ? c[last] : head;
        prev_head = head;
        pos = last + 1;
    }
    const int top = c[k + 1];
    num *= top - prev_rstar;
    den *= top - prev_head;
    return make_rational(num, den);
}

Rational diagram_weight(const SizeChain& chain, const DiagramShape& shape) {
    chain.validate();
    return diagram_weight_completed(completed_sizes(chain), shape);
}

ShapeFactor shape_factor(const DiagramShape& shape) {
    ShapeFactor f{1, 1, 1};
    for (const auto& sp : shape.spiders) {
        f.tdcoeff *= todd_coefficient(sp.size);
        f.binom *= binomial(sp.size - 1, sp.left_legs());
    }
    f.sign = shape.legs() % 2 == 0 ? 1 : -1;
    return f;
}

DiagramTerm diagram_term(const SizeChain& chain, const DiagramShape& shape) {
    DiagramTerm t;
    t.shape = shape;
    auto f = shape_factor(shape);
    t.tdcoeff = f.tdcoeff;
    t.binom = f.binom;
    t.sign = f.sign;
    t.weight = diagram_weight(chain, shape);
    t.value = f.product() * t.weight;
    return t;
}

Rational alpha(const SizeChain& chain) {
    chain.validate();
    const auto c = completed_sizes(chain);
    Rational total = 0;
    for (const auto& cs : cached_shapes(chain.length())) total += cs.factor * diagram_weight_completed(c, cs.shape);
    return total;
}

Rational alpha_codim2_closed(int s1, int s2, int d) {
    SizeChain{d, {s1, s2}}.validate();
    const int n = d + 1;
    return make_rational(1, 4) - make_rational(1, 12) * (make_rational(n - s2, n - s1) + make_rational(s1, s2));
}

Rational alpha_4chain_closed(int s1, int s2, int s3, int s4, int d) {
    SizeChain{d, {s1, s2, s3, s4}}.validate();
    const int n = d + 1;
    auto q = [](int a, int b) { return make_rational(a, b); };
    Rational r = q(1, 16);
    r -= q(1, 48) * (q(s3 - s2, s3 - s1) + q(s1, s2) + q(s4 - s3, s4 - s2) + q(s2 - s1, s3 - s1) +
                     q(n - s4, n - s3) + q(s3 - s2, s4 - s2));
    r += q(1, 144) * (q(s3 - s2, s3 - s1) * q(n - s4, n - s3) + q(s3 - s2, s4 - s1) +
                      q(s1, s2) * q(n - s4, n - s3) + q(s1, s2) * q(s3 - s2, s4 - s2));
    // One four-legged spider per head position 1..4.
    r += q(1, 720) * (q(s3 - s2, s3 - s1) * q(s4 - s3, s4 - s1) * q(n - s4, n - s1) +
                      3 * q(s1, s2) * q(s4 - s3, s4 - s2) * q(n - s4, n - s2) +
                      3 * q(s1, s3) * q(s2 - s1, s3 - s1) * q(n - s4, n - s3) +
                      q(s1, s4) * q(s2 - s1, s4 - s1) * q(s3 - s2, s4 - s2));
    return r;
}

BigInt count_shapes(int n) {
    if (n < 1) throw DomainError("count_shapes: n must be positive");
    return static_cast<unsigned long>(enumerate_shapes(n, true).size());
}

std::vector<BigInt> gf_series(int n_max) {
    if (n_max < 0) throw DomainError("gf_series: negative order");
    // numerator -z^5 + 2z^3 - 2z^2 - z, denominator z^5 - z^4 - 2z^3 + 4z^2 + z - 1
    const long num[] = {0, -1, -2, 2, 0, -1};
    const long den[] = {-1, 1, 4, -2, -1, 1};
    std::vector<BigInt> a(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        BigInt acc = n < 6 ? BigInt(num[n]) : BigInt(0);
        for (int j = 1; j <= std::min(n, 5); ++j) acc -= den[j] * a[n - j];
        a[n] = acc / den[0];
    }
    return a;
}

namespace {

void scan_chains(int d, int k, std::vector<NegativeHit>& out) {
    std::vector<int> sizes(k);
    std::iota(sizes.begin(), sizes.end(), 1);
    while (true) {
        SizeChain chain{d, sizes};
        Rational v = alpha(chain);
        if (sgn(v) < 0) out.push_back(NegativeHit{std::move(chain), std::move(v)});
        int i = k - 1;
        while (i >= 0 && sizes[i] == d - (k - 1 - i)) --i;
        if (i < 0) return;
        ++sizes[i];
        for (int j = i + 1; j < k; ++j) sizes[j] = sizes[j - 1] + 1;
    }
}

}  // namespace

std::vector<NegativeHit> scan_negative(int max_d, int max_k, unsigned jobs) {
    if (max_d < 1 || max_k < 1) throw DomainError("scan_negative: max_d and max_k must be positive");
    std::vector<std::pair<int, int>> work;
    for (int d = 1; d <= max_d; ++d)
        for (int k = 1; k <= std::min(max_k, d); ++k) work.emplace_back(d, k);
    // Largest items first so threads finish together.
    std::sort(work.begin(), work.end(), [](auto a, auto b) {
        return binomial(a.first, a.second) > binomial(b.first, b.second);
    });

    std::vector<std::vector<NegativeHit>> partial(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++)
            scan_chains(work[i].first, work[i].second, partial[i]);
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }

    std::vector<NegativeHit> hits;
    for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(hits));
    std::sort(hits.begin(), hits.end(), [](const NegativeHit& a, const NegativeHit& b) { return a.chain < b.chain; });
    return hits;
}

}  // namespace permtodd::spider
