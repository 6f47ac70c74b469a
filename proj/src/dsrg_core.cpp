#include "dsrg/dsrg_core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "dsrg/cyclotomic.hpp"

namespace dsrg {

std::string DsrgParams::to_string() const {
    return "(" + std::to_string(v) + "," + std::to_string(k) + "," +
           std::to_string(mu) + "," + std::to_string(lam) + "," +
           std::to_string(t) + ")";
}

Feasibility duval_feasible(const DsrgParams& p) {
    auto fail = [](std::string why) { return Feasibility{false, std::move(why)}; };
    i64 v = p.v, k = p.k, mu = p.mu, lam = p.lam, t = p.t;
    if (v <= 0)
        return fail("vertex count must be positive");
    if (k * (k + mu - lam) != t + (v - 1) * mu)
        return fail("k(k+mu-lambda) = t+(v-1)mu fails");
    i64 d2 = (mu - lam) * (mu - lam) + 4 * (t - mu);
    if (d2 <= 0 || !is_perfect_square(d2))
        return fail("d^2 = (mu-lambda)^2+4(t-mu) is not a positive square");
    i64 d = isqrt(d2);
    i64 num = 2 * k - (lam - mu) * (v - 1);
    if (num % d != 0)
        return fail("d does not divide 2k-(lambda-mu)(v-1)");
    i64 q = num / d;
    if (mod_floor(q, 2) != mod_floor(v - 1, 2))
        return fail("(2k-(lambda-mu)(v-1))/d has wrong parity");
    if (std::abs(q) > v - 1)
        return fail("|2k-(lambda-mu)(v-1)|/d exceeds v-1");
    if (!(0 <= lam && lam < t && t < k))
        return fail("0 <= lambda < t < k fails");
    if (!(0 < mu && mu <= t))
        return fail("0 < mu <= t fails");
    if (!(-2 * (k - t - 1) <= mu - lam && mu - lam <= 2 * (k - t)))
        return fail("-2(k-t-1) <= mu-lambda <= 2(k-t) fails");
    return Feasibility{true, ""};
}

std::optional<EigenSpectrum> eigen_spectrum(const DsrgParams& p) {
    i64 d2 = (p.mu - p.lam) * (p.mu - p.lam) + 4 * (p.t - p.mu);
    if (d2 < 0 || !is_perfect_square(d2))
        return std::nullopt;
    i64 d = isqrt(d2);
    if ((d - (p.mu - p.lam)) % 2 != 0)
        return std::nullopt;
    EigenSpectrum s;
    s.k = p.k;
    s.d = d;
    s.rho = (-(p.mu - p.lam) + d) / 2;
    s.sigma = (-(p.mu - p.lam) - d) / 2;
    if (s.rho == s.sigma)
        return std::nullopt;
    i64 span = s.rho - s.sigma;
    i64 num_rho = -(p.k + s.sigma * (p.v - 1));
    i64 num_sigma = p.k + s.rho * (p.v - 1);
    if (num_rho % span != 0 || num_sigma % span != 0)
        return std::nullopt;
    s.m_rho = num_rho / span;
    s.m_sigma = num_sigma / span;
    if (s.m_rho <= 0 || s.m_sigma <= 0 || 1 + s.m_rho + s.m_sigma != p.v)
        return std::nullopt;
    return s;
}

DsrgParams complement_params(const DsrgParams& p) {
    i64 w = p.v - 2 * p.k;
    DsrgParams c;
    c.v = p.v;
    c.k = w + (p.k - 1);
    c.lam = w + (p.mu - 2);
    c.t = w + (p.t - 1);
    c.mu = w + p.lam;
    return c;
}

namespace {

std::vector<i64> sorted_unique_mod(i64 n, std::vector<i64> v) {
    for (auto& z : v)
        z = mod_floor(z, n);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

Dihedrant::Dihedrant(i64 n_, std::vector<i64> X_, std::vector<i64> Y_) : n(n_) {
    if (n <= 0)
        throw std::invalid_argument("cyclic part order must be positive");
    X = sorted_unique_mod(n, std::move(X_));
    Y = sorted_unique_mod(n, std::move(Y_));
}

std::string Dihedrant::to_string() const {
    auto list = [](const std::vector<i64>& s) {
        std::string out;
        for (i64 z : s) {
            if (!out.empty())
                out += ',';
            out += std::to_string(z);
        }
        return "{" + out + "}";
    };
    return "Dih(" + std::to_string(n) + "," + list(X) + "," + list(Y) + ")";
}

BitMatrix::BitMatrix(i64 d) : dim(d), words((d + 63) / 64), row_bits(d * words, 0) {}

i64 BitMatrix::row_sum(i64 i) const {
    i64 s = 0;
    for (i64 w = 0; w < words; ++w)
        s += std::popcount(row_bits[i * words + w]);
    return s;
}

i64 BitMatrix::col_sum(i64 j) const {
    i64 s = 0;
    for (i64 i = 0; i < dim; ++i)
        s += get(i, j);
    return s;
}

std::string BitMatrix::to_string() const {
    std::string out;
    for (i64 i = 0; i < dim; ++i) {
        for (i64 j = 0; j < dim; ++j)
            out += get(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

BitMatrix adjacency(const Dihedrant& d) {
    if (std::binary_search(d.X.begin(), d.X.end(), i64{0}))
        throw std::invalid_argument("loop: 0 must not belong to X");
    i64 n = d.n;
    BitMatrix a(2 * n);
    std::vector<char> in_x(n, 0), in_y(n, 0);
    for (i64 z : d.X)
        in_x[z] = 1;
    for (i64 z : d.Y)
        in_y[z] = 1;
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j) {
            i64 fwd = mod_floor(j - i, n);
            i64 bwd = mod_floor(i - j, n);
            if (in_x[fwd])
                a.set(i, j); // x^i -> x^j
            if (in_y[fwd])
                a.set(i, n + j); // x^i -> x^j a
            if (in_y[bwd])
                a.set(n + i, j); // x^i a -> x^j
            if (in_x[bwd])
                a.set(n + i, n + j); // x^i a -> x^j a
        }
    return a;
}

namespace {

/// Entry (i,j) of A^2, via the bitwise dot product of row i and column j.
i64 square_entry(const BitMatrix& a, const std::vector<std::uint64_t>& col_bits,
                 i64 i, i64 j) {
    i64 s = 0;
    for (i64 w = 0; w < a.words; ++w)
        s += std::popcount(a.row_bits[i * a.words + w] & col_bits[j * a.words + w]);
    return s;
}

std::string cell_name(i64 i, i64 j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

MatrixVerdict verify_matrix(const Dihedrant& d) {
    if (std::binary_search(d.X.begin(), d.X.end(), i64{0}))
        return {std::nullopt, "loop: 0 in X"};
    BitMatrix a = adjacency(d);
    i64 v = a.dim;
    i64 k = d.degree();
    for (i64 i = 0; i < v; ++i)
        if (a.row_sum(i) != k)
            return {std::nullopt, "row sum differs from k at row " + std::to_string(i)};
    for (i64 j = 0; j < v; ++j)
        if (a.col_sum(j) != k)
            return {std::nullopt, "column sum differs from k at column " + std::to_string(j)};

    std::vector<std::uint64_t> col_bits(v * a.words, 0);
    for (i64 i = 0; i < v; ++i)
        for (i64 j = 0; j < v; ++j)
            if (a.get(i, j))
                col_bits[j * a.words + i / 64] |= std::uint64_t{1} << (i % 64);

    i64 t = -1, lam = -1, mu = -1;
    for (i64 i = 0; i < v; ++i)
        for (i64 j = 0; j < v; ++j) {
            i64 c = square_entry(a, col_bits, i, j);
            if (i == j) {
                if (t < 0)
                    t = c;
                else if (c != t)
                    return {std::nullopt, "diagonal not constant at " + cell_name(i, j)};
            } else if (a.get(i, j)) {
                if (lam < 0)
                    lam = c;
                else if (c != lam)
                    return {std::nullopt, "edge cells not constant at " + cell_name(i, j)};
            } else {
                if (mu < 0)
                    mu = c;
                else if (c != mu)
                    return {std::nullopt, "non-edge cells not constant at " + cell_name(i, j)};
            }
        }
    DsrgParams p;
    p.v = v;
    p.k = k;
    p.t = t;
    p.lam = lam < 0 ? 0 : lam;
    p.mu = mu < 0 ? 0 : mu;
    return {p, ""};
}

Verdict verify_groupring(const Dihedrant& d, const DsrgParams& p) {
    i64 n = d.n;
    if (p.v != 2 * n)
        return {false, "parameter shape mismatch: v != 2n"};
    if (p.k != d.degree())
        return {false, "parameter shape mismatch: k != |X|+|Y|"};
    auto xbar = CnElem::from_set(n, d.X);
    auto ybar = CnElem::from_set(n, d.Y);
    auto sym = symmetrized(n, d.X);
    auto ones = CnElem::all_ones(n);

    // y-bar * (x-bar + x-bar^rev) = (lambda-mu) y-bar + mu C-bar
    auto lhs1 = cn_mul(ybar, sym);
    auto rhs1 = cn_add(cn_scale(p.lam - p.mu, ybar), cn_scale(p.mu, ones));
    if (lhs1 != rhs1)
        return {false, "rotation-part equation fails"};

    // x-bar^2 + y-bar y-bar^rev = (t-mu) e + (lambda-mu) x-bar + mu C-bar
    auto lhs2 = cn_add(cn_mul(xbar, xbar), cn_autocorr(ybar));
    auto rhs2 = cn_add(cn_add(cn_scale(p.t - p.mu, CnElem::unit(n)),
                              cn_scale(p.lam - p.mu, xbar)),
                       cn_scale(p.mu, ones));
    if (lhs2 != rhs2)
        return {false, "reflection-part equation fails"};
    return {true, ""};
}

Verdict verify_fourier(const Dihedrant& d, const DsrgParams& p) {
    i64 n = d.n;
    if (p.v != 2 * n)
        return {false, "parameter shape mismatch: v != 2n"};
    if (p.k != d.degree())
        return {false, "parameter shape mismatch: k != |X|+|Y|"};
    Spectrum fx = fourier(d.x_set());
    Spectrum fy = fourier(d.y_set());
    bool self_paired = d.X == d.Y;
    if (self_paired && p.t != p.mu)
        return {false, "self-paired connection set requires t = mu"};
    for (i64 z = 0; z < n; ++z) {
        const CycInt& r = fx.values[z];
        const CycInt& ty = fy.values[z];
        CycInt q = cyc_add(r, conjugate(r));
        i64 delta0 = z == 0 ? 1 : 0;

        // t-spec * (r + conj r) = mu n [z=0] + (lambda-mu) t-spec
        CycInt lhs1 = cyc_mul(ty, q);
        CycInt rhs1 = cyc_add(CycInt::integer(n, p.mu * n * delta0),
                              cyc_scale(p.lam - p.mu, ty));
        if (!cyc_equal(lhs1, rhs1))
            return {false, "first spectral equation fails at z=" + std::to_string(z)};

        // r^2 + |t-spec|^2 = (t-mu) + mu n [z=0] + (lambda-mu) r
        CycInt lhs2 = cyc_add(cyc_mul(r, r), cyc_mul(ty, conjugate(ty)));
        CycInt rhs2 = cyc_add(
            CycInt::integer(n, (p.t - p.mu) + p.mu * n * delta0),
            cyc_scale(p.lam - p.mu, r));
        if (!cyc_equal(lhs2, rhs2))
            return {false, "second spectral equation fails at z=" + std::to_string(z)};

        if (self_paired) {
            CycInt lhs3 = cyc_mul(r, q);
            CycInt rhs3 = cyc_add(CycInt::integer(n, p.mu * n * delta0),
                                  cyc_scale(p.lam - p.mu, r));
            if (!cyc_equal(lhs3, rhs3))
                return {false, "self-paired spectral equation fails at z=" + std::to_string(z)};
        }
    }
    return {true, ""};
}

Dihedrant transform(const Dihedrant& d, i64 b, i64 shift) {
    b = mod_floor(b, d.n);
    if (std::gcd(b, d.n) != 1)
        throw std::invalid_argument("transform multiplier must be a unit of Z_n");
    std::vector<i64> nx, ny;
    nx.reserve(d.X.size());
    ny.reserve(d.Y.size());
    for (i64 z : d.X)
        nx.push_back(mod_floor(b * z, d.n));
    for (i64 z : d.Y)
        ny.push_back(mod_floor(shift + b * z, d.n));
    return Dihedrant(d.n, std::move(nx), std::move(ny));
}

std::vector<i64> units_of(i64 n) {
    std::vector<i64> u;
    for (i64 b = 0; b < n; ++b)
        if (std::gcd(b, n) == 1)
            u.push_back(b);
    return u;
}

namespace {

std::uint64_t set_mask(i64 n, const std::vector<i64>& s) {
    std::uint64_t m = 0;
    for (i64 z : s)
        m |= std::uint64_t{1} << z;
    return m;
}

} // namespace

CanonicalForm canonical_form(const Dihedrant& d) {
    if (d.n > 64)
        throw std::invalid_argument("canonical form requires n <= 64");
    CanonicalForm best{~std::uint64_t{0}, ~std::uint64_t{0}};
    for (i64 b : units_of(d.n))
        for (i64 shift = 0; shift < d.n; ++shift) {
            Dihedrant e = transform(d, b, shift);
            CanonicalForm c{set_mask(e.n, e.X), set_mask(e.n, e.Y)};
            best = std::min(best, c);
        }
    return best;
}

CanonicalForm canonical_form_in_family(const Dihedrant& d, bool self_paired) {
    if (!self_paired)
        return canonical_form(d);
    if (d.n > 64)
        throw std::invalid_argument("canonical form requires n <= 64");
    CanonicalForm best{~std::uint64_t{0}, ~std::uint64_t{0}};
    for (i64 b : units_of(d.n)) {
        Dihedrant e = transform(d, b, 0);
        CanonicalForm c{set_mask(e.n, e.X), set_mask(e.n, e.Y)};
        best = std::min(best, c);
    }
    return best;
}

Dihedrant complement_dihedrant(const Dihedrant& d) {
    std::vector<i64> nx, ny;
    std::vector<char> in_x(d.n, 0), in_y(d.n, 0);
    for (i64 z : d.X)
        in_x[z] = 1;
    for (i64 z : d.Y)
        in_y[z] = 1;
    for (i64 z = 1; z < d.n; ++z)
        if (!in_x[z])
            nx.push_back(z);
    for (i64 z = 0; z < d.n; ++z)
        if (!in_y[z])
            ny.push_back(z);
    return Dihedrant(d.n, std::move(nx), std::move(ny));
}

} // namespace dsrg
