#include "permtodd/ehrhart.hpp"

#include "permtodd/kernels.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace permtodd::ehrhart {

bool PermSpec::generic() const {
    std::set<std::int64_t> seen(v.begin(), v.end());
    return seen.size() == v.size();
}

int PermSpec::dimension() const {
    if (v.empty()) return 0;
    const bool flat = std::all_of(v.begin(), v.end(), [&](std::int64_t x) { return x == v.front(); });
    return flat ? 0 : ambient() - 1;
}

HPolytope HPolytope::of(const PermSpec& spec) {
    const int n = spec.ambient();
    if (n < 1 || n > 20) throw DomainError("polytope: need between 1 and 20 coordinates");
    std::vector<std::int64_t> desc(spec.v);
    std::sort(desc.begin(), desc.end(), std::greater<>());
    std::vector<std::int64_t> prefix(n + 1, 0);
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + desc[i];

    HPolytope h;
    h.n = n;
    h.total = prefix[n];
    h.bound.resize(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < h.bound.size(); ++mask) h.bound[mask] = prefix[std::popcount(mask)];
    return h;
}

int FaceDescriptor::dimension() const {
    return polytope.ambient() - static_cast<int>(partition.size());
}

std::vector<int> FaceDescriptor::sizes() const {
    std::vector<int> out;
    for (auto s : chain) out.push_back(std::popcount(s));
    return out;
}

std::vector<Point> perm_vertices(const PermSpec& spec) {
    Point p(spec.v);
    std::sort(p.begin(), p.end());
    std::vector<Point> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::uint64_t count_lattice_points(const HPolytope& h, std::int64_t t, const std::vector<std::uint32_t>& tight) {
    if (t < 0) throw DomainError("count_lattice_points: negative dilation");
    const int n = h.n;
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<std::int64_t> lower(full + 1), upper(full + 1);
    for (std::size_t mask = 0; mask <= full; ++mask) {
        upper[mask] = t * h.bound[mask];
        lower[mask] = t * (h.total - h.bound[full ^ mask]);
    }
    for (auto mask : tight) {
        if (mask == 0 || mask > full) throw DomainError("count_lattice_points: tight mask out of range");
        lower[mask] = upper[mask];
    }
    lower[full] = upper[full];

    std::vector<std::int64_t> sums(full + 1, 0);
    std::uint64_t count = 0;
    std::function<void(int)> descend = [&](int j) {
        const std::size_t half = std::size_t{1} << j;
        std::span<const std::int64_t> base(sums.data(), half);
        std::span<const std::int64_t> lo(lower.data() + half, half), hi(upper.data() + half, half);
        std::span<std::int64_t> out(sums.data() + half, half);
        if (j == n - 1) {
            // The last coordinate is pinned by the total.
            const std::int64_t x = upper[full] - sums[half - 1];
            if (kernels::extend_subset_sums(base, x, lo, hi, out)) ++count;
            return;
        }
        for (std::int64_t x = lower[half]; x <= upper[half]; ++x)
            if (kernels::extend_subset_sums(base, x, lo, hi, out)) descend(j + 1);
    };
    descend(0);
    return count;
}

namespace {

PolynomialQ interpolate_counts(const HPolytope& h, int dim, const std::vector<std::uint32_t>& tight) {
    std::vector<std::pair<long, Rational>> pts;
    for (int t = 0; t <= dim; ++t)
        pts.emplace_back(t, Rational(static_cast<unsigned long>(count_lattice_points(h, t, tight))));
    return interpolate(pts);
}

}  // namespace

EhrhartPolynomial ehrhart_of(const PermSpec& v) {
    return interpolate_counts(HPolytope::of(v), v.dimension(), {});
}

std::vector<FaceDescriptor> faces_of(const PermSpec& v) {
    if (!v.generic()) throw DomainError("faces_of: entries of v must be distinct");
    const int n = v.ambient();
    const HPolytope h = HPolytope::of(v);
    const auto vertices = perm_vertices(v);

    std::vector<FaceDescriptor> faces;
    for (int m = 1; m <= n; ++m) {
        // Block labels in base m, coordinate 0 most significant.
        std::vector<int> label(n, 0);
        while (true) {
            std::vector<std::vector<int>> blocks(m);
            for (int i = 0; i < n; ++i) blocks[label[i]].push_back(i + 1);
            if (std::none_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); })) {
                FaceDescriptor f;
                f.partition = blocks;
                f.polytope = v;
                std::uint32_t acc = 0;
                for (int j = 0; j + 1 < m; ++j) {
                    for (int e : blocks[j]) acc |= 1u << (e - 1);
                    f.chain.push_back(acc);
                }
                for (const auto& p : vertices) {
                    bool on = true;
                    for (auto s : f.chain) {
                        std::int64_t sum = 0;
                        for (int i = 0; i < n; ++i)
                            if ((s >> i) & 1u) sum += p[i];
                        on &= sum == h.bound[s];
                    }
                    if (on) f.vertices.push_back(p);
                }
                faces.push_back(std::move(f));
            }
            int i = n - 1;
            while (i >= 0 && label[i] == m - 1) label[i--] = 0;
            if (i < 0) break;
            ++label[i];
        }
    }
    return faces;
}

Rational nvol(const FaceDescriptor& face) {
    if (face.vertices.empty()) throw DomainError("nvol: face has no vertices");
    const int dim = face.dimension();
    return interpolate_counts(HPolytope::of(face.polytope), dim, face.chain).coefficient(dim);
}

std::vector<bool> McMullenReport::per_coefficient() const {
    std::vector<bool> out;
    for (std::size_t i = 0; i < mcmullen.size(); ++i) out.push_back(ehrhart.coefficient(static_cast<int>(i)) == mcmullen[i]);
    return out;
}

std::string McMullenReport::to_json() const {
    nlohmann::ordered_json j;
    j["v"] = v.v;
    auto coeffs = nlohmann::ordered_json::array();
    for (int i = 0; i < static_cast<int>(mcmullen.size()); ++i) coeffs.push_back(to_string(ehrhart.coefficient(i)));
    j["ehrhart"] = coeffs;
    auto mc = nlohmann::ordered_json::array();
    for (const auto& c : mcmullen) mc.push_back(to_string(c));
    j["mcmullen"] = mc;
    auto faces = nlohmann::ordered_json::array();
    for (const auto& f : per_face)
        faces.push_back({{"partition", f.partition},
                         {"sizes", f.sizes},
                         {"alpha", to_string(f.alpha)},
                         {"nvol", to_string(f.nvol)},
                         {"dim", f.dim}});
    j["per_face"] = faces;
    j["pass"] = pass;
    return j.dump();
}

McMullenReport mcmullen_check(const PermSpec& v) {
    McMullenReport r;
    r.v = v;
    const int d = v.ambient() - 1;
    r.ehrhart = ehrhart_of(v);
    r.mcmullen.assign(d + 1, Rational(0));
    for (const auto& face : faces_of(v)) {
        FaceContribution fc;
        fc.partition = face.partition;
        fc.sizes = face.sizes();
        fc.alpha = spider::alpha(spider::SizeChain{d, fc.sizes});
        fc.nvol = nvol(face);
        fc.dim = face.dimension();
        r.mcmullen[fc.dim] += fc.alpha * fc.nvol;
        r.per_face.push_back(std::move(fc));
    }
    const auto flags = r.per_coefficient();
    r.pass = r.ehrhart.degree() <= d && std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
    return r;
}

namespace {

void require_hypersimplex(int k, int n) {
    if (n < 2 || k < 1 || k > n - 1) throw DomainError("hypersimplex: need 1 <= k <= n-1");
}

}  // namespace

PermSpec hypersimplex_spec(int k, int n) {
    require_hypersimplex(k, n);
    PermSpec s;
    s.v.assign(n - k, 0);
    s.v.insert(s.v.end(), k, 1);
    return s;
}

EhrhartPolynomial hypersimplex_ehrhart(int k, int n, int max_power) {
    require_hypersimplex(k, n);
    const int d = n - 1;
    const int top = max_power < 0 ? d : std::min(d, max_power);
    // Integer coefficients of d! * sum; divided out at the end.
    std::vector<BigInt> total(top + 1, 0), term(top + 1);
    for (int i = 0; i <= k; ++i) {
        // C(d + t(k-i) - i, d) * d! as a polynomial in t.
        std::fill(term.begin(), term.end(), BigInt(0));
        term[0] = 1;
        int deg = 0;
        for (int j = 1; j <= d; ++j) {
            const long a = k - i, b = j - i;
            deg = std::min(deg + 1, top);
            for (int e = deg; e >= 1; --e) term[e] = term[e] * b + term[e - 1] * a;
            term[0] *= b;
        }
        const BigInt c = binomial(n, i);
        for (int e = 0; e <= top; ++e) {
            if (i % 2 == 0)
                total[e] += c * term[e];
            else
                total[e] -= c * term[e];
        }
    }
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), d);
    std::vector<Rational> coeffs;
    for (const auto& c : total) coeffs.push_back(make_rational(c, fact));
    return EhrhartPolynomial(std::move(coeffs));
}

BigInt hypersimplex_ehrhart_gf(int k, int n, int t) {
    require_hypersimplex(k, n);
    if (t < 0) throw DomainError("hypersimplex_ehrhart_gf: negative dilation");
    const std::size_t target = static_cast<std::size_t>(k) * t;
    std::vector<BigInt> poly(target + 1, 0);
    poly[0] = 1;
    for (int f = 0; f < n; ++f) {
        std::vector<BigInt> next(target + 1, 0);
        for (std::size_t i = 0; i <= target; ++i) {
            if (poly[i] == 0) continue;
            for (std::size_t e = 0; e <= static_cast<std::size_t>(t) && i + e <= target; ++e) next[i + e] += poly[i];
        }
        poly = std::move(next);
    }
    return poly[target];
}

Rational hypersimplex_linear_coeff(int k, int n) {
    require_hypersimplex(k, n);
    const int d = n - 1;
    Rational r = 0;
    for (int i = 1; i <= d; ++i) r += make_rational(k, i);
    for (int i = 1; i <= k; ++i) r -= make_rational(static_cast<long>(d + 1) * (k - i), static_cast<long>(i) * (d + 1 - i));
    return r;
}

}  // namespace permtodd::ehrhart
