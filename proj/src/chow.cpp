#include "permtodd/chow.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>

namespace permtodd::chow {

namespace {

Subset full_set(int d) { return (Subset{1} << (d + 1)) - 1; }

int popcount(Subset s) { return std::popcount(s); }

bool contains(Subset s, int element) { return (s >> (element - 1)) & 1u; }

void require_d(int d) {
    if (d < 0 || d > kMaxD) throw DomainError("chow: d must lie in [0, " + std::to_string(kMaxD) + "]");
}

std::vector<Subset> with_inserted(const std::vector<Subset>& chain, int index, Subset t) {
    std::vector<Subset> out;
    out.reserve(chain.size() + 1);
    out.insert(out.end(), chain.begin(), chain.begin() + index);
    out.push_back(t);
    out.insert(out.end(), chain.begin() + index, chain.end());
    return out;
}

// Calls f(T) for every T with lo ⊊ T ⊊ hi.
template <class F>
void for_each_between(Subset lo, Subset hi, F&& f) {
    const Subset free = hi & ~lo;
    for (Subset sub = (free - 1) & free; sub != 0; sub = (sub - 1) & free) f(lo | sub);
}

}  // namespace

void SubsetChain::validate() const {
    require_d(d);
    const Subset full = full_set(d);
    Subset prev = 0;
    for (Subset s : subsets) {
        if (s == 0 || s == full || (s & ~full) != 0)
            throw DomainError("subset chain: subsets must be proper and nonempty");
        if (s == prev || (s & prev) != prev) throw DomainError("subset chain: subsets must be strictly nested");
        prev = s;
    }
}

Subset SubsetChain::at(int i) const {
    if (i == 0) return 0;
    if (i == length() + 1) return full_set(d);
    return subsets.at(i - 1);
}

std::vector<int> SubsetChain::sizes() const {
    std::vector<int> out;
    for (Subset s : subsets) out.push_back(popcount(s));
    return out;
}

int ChainMonomial::degree() const {
    int deg = 0;
    for (int m : multiplicities) deg += m;
    return deg;
}

Rational SquareFreeExpr::coefficient(const std::vector<Subset>& chain) const {
    auto it = terms_.find(chain);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SquareFreeExpr::add(const std::vector<Subset>& chain, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(chain, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SquareFreeExpr::add(const SquareFreeExpr& other, const Rational& scale) {
    for (const auto& [chain, c] : other.terms_) add(chain, c * scale);
}

Rational SymmetricExpr::coefficient(const std::vector<int>& sizes) const {
    auto it = terms_.find(sizes);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymmetricExpr::add(const std::vector<int>& sizes, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(sizes, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::string SymmetricExpr::to_json() const {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [sizes, c] : terms_) out.push_back({{"sizes", sizes}, {"coeff", to_string(c)}});
    return out.dump();
}

SquareFreeExpr expand_square_choice(const SubsetChain& chain, int l, int a, int b) {
    chain.validate();
    if (l < 1 || l > chain.length()) throw DomainError("expand_square_choice: index out of range");
    const Subset lo = chain.at(l - 1), s = chain.at(l), hi = chain.at(l + 1);
    if (a < 1 || a > chain.d + 1 || !contains(s, a) || contains(lo, a))
        throw DomainError("expand_square_choice: a must lie in S_l \\ S_{l-1}");
    if (b < 1 || b > chain.d + 1 || !contains(hi, b) || contains(s, b))
        throw DomainError("expand_square_choice: b must lie in S_{l+1} \\ S_l");

    SquareFreeExpr out(chain.d);
    for_each_between(lo, s, [&](Subset t) {
        if (contains(t, a)) out.add(with_inserted(chain.subsets, l - 1, t), -1);
    });
    for_each_between(s, hi, [&](Subset t) {
        if (!contains(t, b)) out.add(with_inserted(chain.subsets, l, t), -1);
    });
    return out;
}

SquareFreeExpr expand_square_avg(const SubsetChain& chain, int l) {
    chain.validate();
    if (l < 1 || l > chain.length()) throw DomainError("expand_square_avg: index out of range");
    const Subset lo = chain.at(l - 1), s = chain.at(l), hi = chain.at(l + 1);
    const int below = popcount(s & ~lo);
    const int above = popcount(hi & ~s);

    SquareFreeExpr out(chain.d);
    for_each_between(lo, s, [&](Subset t) {
        out.add(with_inserted(chain.subsets, l - 1, t), -make_rational(popcount(t & ~lo), below));
    });
    for_each_between(s, hi, [&](Subset t) {
        out.add(with_inserted(chain.subsets, l, t), -make_rational(popcount(hi & ~t), above));
    });
    return out;
}

namespace {

using StepFn = std::function<SquareFreeExpr(const SubsetChain&, int)>;

SquareFreeExpr expand_iterated(const ChainMonomial& mono, const StepFn& step) {
    mono.chain.validate();
    const int k = mono.chain.length();
    if (static_cast<int>(mono.multiplicities.size()) != k)
        throw DomainError("chain monomial: one multiplicity per subset required");
    for (int m : mono.multiplicities)
        if (m < 1) throw DomainError("chain monomial: multiplicities must be positive");

    // Peeling takes j = max{i : m_i > 1} first; the products are applied in reverse.
    std::vector<int> peel;
    for (int j = k; j >= 1; --j)
        for (int r = 1; r < mono.multiplicities[j - 1]; ++r) peel.push_back(j);

    SquareFreeExpr current(mono.chain.d);
    current.add(mono.chain.subsets, 1);
    for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
        const Subset s = mono.chain.subsets[*it - 1];
        SquareFreeExpr next(mono.chain.d);
        for (const auto& [subsets, c] : current.terms()) {
            const int l = static_cast<int>(std::find(subsets.begin(), subsets.end(), s) - subsets.begin()) + 1;
            next.add(step(SubsetChain{mono.chain.d, subsets}, l), c);
        }
        current = std::move(next);
    }
    return current;
}

// Calls f(chain) for every chain of exactly `count` subsets strictly between lo and hi.
void for_each_chain_between(Subset lo, Subset hi, int count, std::vector<Subset>& acc,
                            const std::function<void()>& f) {
    if (count == 0) {
        f();
        return;
    }
    if (popcount(hi & ~lo) <= count) return;
    for_each_between(lo, hi, [&](Subset t) {
        acc.push_back(t);
        for_each_chain_between(t, hi, count - 1, acc, f);
        acc.pop_back();
    });
}

}  // namespace

SquareFreeExpr expand_monomial(const ChainMonomial& mono) { return expand_iterated(mono, expand_square_avg); }

SquareFreeExpr expand_monomial_choice(const ChainMonomial& mono, const ChoiceFn& choose) {
    return expand_iterated(mono, [&](const SubsetChain& chain, int l) {
        auto [a, b] = choose(chain, l);
        return expand_square_choice(chain, l, a, b);
    });
}

SquareFreeExpr expand_monomial_direct(const ChainMonomial& mono) {
    const auto& chain = mono.chain;
    chain.validate();
    const int k = chain.length();
    if (static_cast<int>(mono.multiplicities.size()) != k)
        throw DomainError("chain monomial: one multiplicity per subset required");
    for (int m : mono.multiplicities)
        if (m < 1) throw DomainError("chain monomial: multiplicities must be positive");

    SquareFreeExpr out(chain.d);
    std::vector<int> left(k, 0);  // left legs per spider; the rest are right legs
    std::vector<std::vector<Subset>> gaps(k + 1);

    // Assemble one refined chain from the gaps and record its term.
    auto emit = [&] {
        spider::DiagramShape shape;
        std::vector<Subset> full;
        for (int i = 0; i <= k; ++i) {
            full.insert(full.end(), gaps[i].begin(), gaps[i].end());
            if (i < k) {
                full.push_back(chain.subsets[i]);
                shape.spiders.push_back(spider::Spider{mono.multiplicities[i], left[i] + 1});
            }
        }
        std::vector<int> completed{0};
        for (Subset s : full) completed.push_back(popcount(s));
        completed.push_back(chain.d + 1);
        const auto f = spider::shape_factor(shape);
        out.add(full, Rational(f.binom) * f.sign * spider::diagram_weight_completed(completed, shape));
    };

    // Fill gap i (between S_{i-1} and S_i) once spider legs are fixed.
    std::function<void(int)> fill_gap = [&](int i) {
        if (i > k) {
            emit();
            return;
        }
        const int right_prev = i == 0 ? 0 : mono.multiplicities[i - 1] - 1 - left[i - 1];
        const int left_here = i == k ? 0 : left[i];
        gaps[i].clear();
        std::vector<Subset> acc;
        for_each_chain_between(chain.at(i), chain.at(i + 1), right_prev + left_here, acc, [&] {
            gaps[i] = acc;
            fill_gap(i + 1);
        });
    };

    std::function<void(int)> choose_legs = [&](int i) {
        if (i == k) {
            fill_gap(0);
            return;
        }
        for (int p = 0; p < mono.multiplicities[i]; ++p) {
            left[i] = p;
            choose_legs(i + 1);
        }
    };
    choose_legs(0);
    return out;
}

BigInt size_class_count(int d, const std::vector<int>& sizes) {
    spider::SizeChain{d, sizes}.validate();
    BigInt count;
    mpz_fac_ui(count.get_mpz_t(), d + 1);
    int prev = 0;
    for (int s : sizes) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), s - prev);
        count /= f;
        prev = s;
    }
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), d + 1 - prev);
    return count / f;
}

SymmetricExpr symmetrize(const SquareFreeExpr& expr) {
    std::map<std::vector<int>, Rational> sums;
    for (const auto& [subsets, c] : expr.terms()) {
        std::vector<int> sizes;
        for (Subset s : subsets) sizes.push_back(popcount(s));
        sums[sizes] += c;
    }
    SymmetricExpr out(expr.d());
    for (const auto& [sizes, total] : sums) out.add(sizes, total / Rational(size_class_count(expr.d(), sizes)));
    return out;
}

std::vector<SubsetChain> all_chains(int d, int max_len) {
    require_d(d);
    const Subset full = full_set(d);
    std::vector<SubsetChain> out;
    std::vector<Subset> acc;
    std::function<void(Subset)> grow = [&](Subset prev) {
        out.push_back(SubsetChain{d, acc});
        if (static_cast<int>(acc.size()) == max_len) return;
        for_each_between(prev, full, [&](Subset t) {
            acc.push_back(t);
            grow(t);
            acc.pop_back();
        });
    };
    grow(0);
    return out;
}

namespace {

// Multiplicity vectors with nonvanishing Todd coefficients and total degree <= budget.
void for_each_multiplicity(int k, int budget, std::vector<int>& acc, const std::function<void()>& f) {
    if (static_cast<int>(acc.size()) == k) {
        f();
        return;
    }
    const int reserve = k - static_cast<int>(acc.size()) - 1;
    for (int m = 1; m <= budget - reserve; ++m) {
        if (m >= 3 && m % 2 == 1) continue;
        acc.push_back(m);
        for_each_multiplicity(k, budget - m, acc, f);
        acc.pop_back();
    }
}

}  // namespace

SymmetricExpr todd_squarefree(int d, int max_deg, ExpansionPath path, const ChoiceFn& choose) {
    if (d < 1 || d > 6) throw DomainError("todd_squarefree: d must lie in [1, 6]");
    if (max_deg < 0) throw DomainError("todd_squarefree: negative degree");
    if (path == ExpansionPath::Choice && !choose) throw DomainError("todd_squarefree: choice path needs a chooser");
    const int deg = std::min(max_deg, d);

    SquareFreeExpr total(d);
    for (const auto& chain : all_chains(d, deg)) {
        std::vector<int> mult;
        for_each_multiplicity(chain.length(), deg, mult, [&] {
            Rational coeff = 1;
            for (int m : mult) coeff *= todd_coefficient(m);
            ChainMonomial mono{chain, mult};
            switch (path) {
                case ExpansionPath::Averaged: total.add(expand_monomial(mono), coeff); break;
                case ExpansionPath::Direct: total.add(expand_monomial_direct(mono), coeff); break;
                case ExpansionPath::Choice: total.add(expand_monomial_choice(mono, choose), coeff); break;
            }
        });
    }
    return symmetrize(total);
}

SymmetricExpr todd_from_alpha(int d, int max_deg) {
    if (d < 0) throw DomainError("todd_from_alpha: negative d");
    SymmetricExpr out(d);
    // Size chains are the subsets of {1..d}.
    const std::uint64_t n = std::uint64_t{1} << d;
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        if (std::popcount(mask) > max_deg) continue;
        std::vector<int> sizes;
        for (int s = 1; s <= d; ++s)
            if ((mask >> (s - 1)) & 1u) sizes.push_back(s);
        out.add(sizes, spider::alpha(spider::SizeChain{d, sizes}));
    }
    return out;
}

}  // namespace permtodd::chow
