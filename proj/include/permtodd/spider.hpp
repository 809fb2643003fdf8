#pragma once

// Berline-Vergne alpha on cones of the braid fan, via spider diagrams.
//
// A cone of the braid fan in dimension d is given (up to the symmetric group)
// by the sizes 0 < s_1 < ... < s_k < d+1 of a chain of nested subsets of
// [d+1]. A spider diagram partitions the k chain positions into consecutive
// intervals, each with a marked head; positions left of the head are left
// legs, positions right of it are right legs. Two legless extremal spiders
// sit at the virtual sizes 0 and d+1.

#include "permtodd/arith.hpp"

#include <cstdint>
#include <vector>

namespace permtodd::spider {

class ChainError : public DomainError {
public:
    using DomainError::DomainError;
};

struct SizeChain {
    int d = 0;
    std::vector<int> sizes;

    // Throws ChainError unless 1 <= s_1 < ... < s_k <= d.
    void validate() const;
    int length() const { return static_cast<int>(sizes.size()); }
    friend auto operator<=>(const SizeChain&, const SizeChain&) = default;
};

struct Spider {
    int size = 1;  // number of chain positions covered
    int head = 1;  // 1-based offset of the head inside the interval

    int left_legs() const { return head - 1; }
    int right_legs() const { return size - head; }
    friend bool operator==(const Spider&, const Spider&) = default;
};

struct DiagramShape {
    std::vector<Spider> spiders;  // left to right, sizes sum to the chain length

    int covered() const;
    int legs() const;
    bool has_vanishing_todd() const;  // some spider of odd size >= 3
    friend bool operator==(const DiagramShape&, const DiagramShape&) = default;
};

struct DiagramTerm {
    DiagramShape shape;
    Rational tdcoeff;
    BigInt binom;
    int sign = 1;
    Rational weight;
    Rational value;
};

// All shapes on k positions: compositions left to right, head choice innermost.
// With skip_zero_td, spiders of odd size >= 3 are pruned.
std::vector<DiagramShape> enumerate_shapes(int k, bool skip_zero_td = true);

// Weight of a shape on a chain; depends on the sizes only.
Rational diagram_weight(const SizeChain& chain, const DiagramShape& shape);

// Same as diagram_weight on a raw completed size sequence 0 = c_0 < c_1 < ... < c_{k+1};
// used by the Chow-ring expansion, which works with subset sizes directly.
Rational diagram_weight_completed(const std::vector<int>& completed, const DiagramShape& shape);

// Todd coefficient, multinomial count and sign of a shape, independent of the chain.
struct ShapeFactor {
    Rational tdcoeff;
    BigInt binom;
    int sign = 1;
    Rational product() const { return tdcoeff * Rational(binom) * sign; }
};
ShapeFactor shape_factor(const DiagramShape& shape);

DiagramTerm diagram_term(const SizeChain& chain, const DiagramShape& shape);

// alpha^BV of the braid cone with the given sizes; 1 on the empty chain.
Rational alpha(const SizeChain& chain);

Rational alpha_codim2_closed(int s1, int s2, int d);
Rational alpha_4chain_closed(int s1, int s2, int s3, int s4, int d);

// Number of shapes on n positions with nonvanishing Todd coefficient.
BigInt count_shapes(int n);
// Coefficients [z^0 .. z^n_max] of -z(z^4-2z^2+2z+1)/(z^5-z^4-2z^3+4z^2+z-1).
std::vector<BigInt> gf_series(int n_max);

struct NegativeHit {
    SizeChain chain;
    Rational value;
};

// Every chain with 1 <= k <= max_k and d <= max_d whose alpha is < 0, ordered by
// (d, sizes). jobs > 1 splits the work across threads; the result is identical.
std::vector<NegativeHit> scan_negative(int max_d, int max_k, unsigned jobs = 1);

}  // namespace permtodd::spider
