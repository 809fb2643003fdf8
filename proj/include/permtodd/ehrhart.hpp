#pragma once

// Ehrhart-theoretic oracles for permutohedra and hypersimplices: brute-force
// lattice-point counting, exact interpolation, face enumeration with relative
// volumes, and the face-by-face lattice-point identity driven by alpha.

#include "permtodd/arith.hpp"
#include "permtodd/spider.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace permtodd::ehrhart {

using EhrhartPolynomial = PolynomialQ;
using Point = std::vector<std::int64_t>;

struct PermSpec {
    std::vector<std::int64_t> v;

    int ambient() const { return static_cast<int>(v.size()); }  // d + 1
    bool generic() const;                                        // entries pairwise distinct
    int dimension() const;                                       // d, or 0 when all entries agree
};

// { x : sum_i x_i = total, sum_{i in S} x_i <= bound(S) for proper nonempty S },
// with bound(S) the sum of the |S| largest entries of v. Subsets are bitmasks.
struct HPolytope {
    int n = 0;
    std::int64_t total = 0;
    std::vector<std::int64_t> bound;  // indexed by mask, size 2^n; bound[0] = 0, bound[full] = total

    static HPolytope of(const PermSpec& v);
};

struct FaceDescriptor {
    std::vector<std::vector<int>> partition;  // ordered blocks of 1-based coordinates
    std::vector<std::uint32_t> chain;         // S_j = B_1 ∪ ... ∪ B_j as bitmasks, j < #blocks
    std::vector<Point> vertices;
    PermSpec polytope;

    int dimension() const;
    std::vector<int> sizes() const;
};

// All distinct permutations of v, in lexicographic order.
std::vector<Point> perm_vertices(const PermSpec& v);

// Lattice points of t*P. Masks in `tight` are forced to equality (a face of P).
std::uint64_t count_lattice_points(const HPolytope& h, std::int64_t t, const std::vector<std::uint32_t>& tight = {});

EhrhartPolynomial ehrhart_of(const PermSpec& v);

// One face per ordered set partition of the coordinates. The block B_1 carries
// the largest entries of v. Throws DomainError for non-generic v.
std::vector<FaceDescriptor> faces_of(const PermSpec& v);

// Leading Ehrhart coefficient of the face (volume relative to its own lattice).
Rational nvol(const FaceDescriptor& face);

struct FaceContribution {
    std::vector<std::vector<int>> partition;
    std::vector<int> sizes;
    Rational alpha;
    Rational nvol;
    int dim = 0;
};

struct McMullenReport {
    PermSpec v;
    EhrhartPolynomial ehrhart;
    std::vector<Rational> mcmullen;  // per power of t
    std::vector<FaceContribution> per_face;
    bool pass = false;

    std::vector<bool> per_coefficient() const;
    std::string to_json() const;
};

McMullenReport mcmullen_check(const PermSpec& v);

// Polynomial form for Δ_{k,n}: sum_i (-1)^i C(n,i) C(d + t(k-i) - i, d), d = n - 1.
// max_power >= 0 drops every power of t above it.
EhrhartPolynomial hypersimplex_ehrhart(int k, int n, int max_power = -1);
// [z^{kt}] (1 + z + ... + z^t)^n.
BigInt hypersimplex_ehrhart_gf(int k, int n, int t);
// sum_{i=1}^{d} k/i - sum_{i=1}^{k} (d+1)(k-i) / (i(d+1-i)), d = n - 1.
Rational hypersimplex_linear_coeff(int k, int n);

PermSpec hypersimplex_spec(int k, int n);

}  // namespace permtodd::ehrhart
