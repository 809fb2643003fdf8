#pragma once

// Square-free rewriting in the Chow ring A_d of the permutohedral variety.
//
// Generators x_S are indexed by proper nonempty subsets S of [d+1] (stored as
// bitmasks, element e <-> bit e-1). Products of incomparable generators vanish
// and the linear forms l_a = sum_{S contains a} x_S are all equal, which is
// what lets a square x_S^2 be traded for square-free terms.

#include "permtodd/arith.hpp"
#include "permtodd/spider.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace permtodd::chow {

using Subset = std::uint32_t;

inline constexpr int kMaxD = 20;

struct SubsetChain {
    int d = 0;
    std::vector<Subset> subsets;  // S_1 ⊊ S_2 ⊊ ... ⊊ S_k

    // Throws DomainError unless the subsets are proper, nonempty and strictly nested.
    void validate() const;
    int length() const { return static_cast<int>(subsets.size()); }
    // S_0 = ∅ and S_{k+1} = [d+1] for i = 0 and i = k+1.
    Subset at(int i) const;
    std::vector<int> sizes() const;
    friend auto operator<=>(const SubsetChain&, const SubsetChain&) = default;
};

struct ChainMonomial {
    SubsetChain chain;
    std::vector<int> multiplicities;  // m_i >= 1, one per subset
    int degree() const;
};

class SquareFreeExpr {
public:
    explicit SquareFreeExpr(int d = 0) : d_(d) {}

    int d() const { return d_; }
    // Keyed by the subsets of the chain.
    const std::map<std::vector<Subset>, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    Rational coefficient(const std::vector<Subset>& chain) const;

    void add(const std::vector<Subset>& chain, const Rational& c);
    void add(const SquareFreeExpr& other, const Rational& scale = 1);
    friend bool operator==(const SquareFreeExpr&, const SquareFreeExpr&) = default;

private:
    int d_;
    std::map<std::vector<Subset>, Rational> terms_;
};

class SymmetricExpr {
public:
    explicit SymmetricExpr(int d = 0) : d_(d) {}

    int d() const { return d_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    Rational coefficient(const std::vector<int>& sizes) const;
    void add(const std::vector<int>& sizes, const Rational& c);
    friend bool operator==(const SymmetricExpr&, const SymmetricExpr&) = default;

    // [{"sizes": [..], "coeff": "p/q"}, ...] in size-sequence order.
    std::string to_json() const;

private:
    int d_;
    std::map<std::vector<int>, Rational> terms_;
};

// x_{S•} * x_{S_l} with the square traded through l_a = l_b.
// l is 1-based; requires a ∈ S_l \ S_{l-1} and b ∈ S_{l+1} \ S_l.
SquareFreeExpr expand_square_choice(const SubsetChain& chain, int l, int a, int b);

// Average of expand_square_choice over all admissible (a, b).
SquareFreeExpr expand_square_avg(const SubsetChain& chain, int l);

// Picks (a, b) for one squaring step on `chain` at position l.
using ChoiceFn = std::function<std::pair<int, int>(const SubsetChain& chain, int l)>;

// Square-free expansion by repeated averaged squaring. Extra powers are peeled
// from the highest index with m_i > 1, so the lowest spider is grown first.
SquareFreeExpr expand_monomial(const ChainMonomial& mono);
// Same recursion but every squaring step uses the (a, b) returned by `choose`.
SquareFreeExpr expand_monomial_choice(const ChainMonomial& mono, const ChoiceFn& choose);
// Closed-form expansion as a sum over leg-size refinements of the chain.
SquareFreeExpr expand_monomial_direct(const ChainMonomial& mono);

// Number of chains of [d+1] with the given sizes (a multinomial coefficient).
BigInt size_class_count(int d, const std::vector<int>& sizes);

// Averages coefficients over each size class.
SymmetricExpr symmetrize(const SquareFreeExpr& expr);

enum class ExpansionPath { Averaged, Direct, Choice };

// Todd class of X_d up to total degree max_deg, expanded over explicit
// subsets and symmetrized. With ExpansionPath::Choice, `choose` must be set.
SymmetricExpr todd_squarefree(int d, int max_deg, ExpansionPath path = ExpansionPath::Averaged,
                              const ChoiceFn& choose = {});

// The same class computed from the spider formula, one entry per size chain.
SymmetricExpr todd_from_alpha(int d, int max_deg);

// Every chain of subsets of [d+1] of length <= max_len, in a fixed order.
std::vector<SubsetChain> all_chains(int d, int max_len);

}  // namespace permtodd::chow
