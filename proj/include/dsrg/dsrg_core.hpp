#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsrg/groupring.hpp"
#include "dsrg/residue.hpp"

namespace dsrg {

/// Parameter tuple (v, k, mu, lambda, t) of a directed strongly regular
/// graph on v vertices.
struct DsrgParams {
    i64 v = 0;
    i64 k = 0;
    i64 mu = 0;
    i64 lam = 0;
    i64 t = 0;

    bool operator==(const DsrgParams&) const = default;
    /// 0 < t < k: excludes undirected SRGs (t = k) and tournaments (t = 0).
    bool genuine() const { return 0 < t && t < k; }
    std::string to_string() const;
};

struct Feasibility {
    bool ok = false;
    std::string reason; // first violated condition when not feasible
};

/// Necessary parameter conditions: the degree/path-count identity, the
/// discriminant and divisibility constraints on d, and the inequality chain
/// for genuine parameter tuples.
Feasibility duval_feasible(const DsrgParams& p);

struct EigenSpectrum {
    i64 k = 0;
    i64 rho = 0;
    i64 sigma = 0;
    i64 m_rho = 0;
    i64 m_sigma = 0;
    i64 d = 0;
};

/// Integer eigenvalues k > rho > sigma and their multiplicities; empty when
/// the discriminant is not a perfect square or a multiplicity is not a
/// positive integer.
std::optional<EigenSpectrum> eigen_spectrum(const DsrgParams& p);

/// Parameters of the complement graph.
DsrgParams complement_params(const DsrgParams& p);

/// Cayley graph Cay(D_n, x^X u x^Y a) encoded by (n, X, Y); X, Y are plain
/// subsets of Z_n, held sorted.
struct Dihedrant {
    i64 n = 1;
    std::vector<i64> X;
    std::vector<i64> Y;

    Dihedrant() = default;
    Dihedrant(i64 n, std::vector<i64> X, std::vector<i64> Y);

    i64 vertex_count() const { return 2 * n; }
    i64 degree() const { return static_cast<i64>(X.size() + Y.size()); }
    ZnMultiset x_set() const { return ZnMultiset::from_elements(n, X); }
    ZnMultiset y_set() const { return ZnMultiset::from_elements(n, Y); }
    bool operator==(const Dihedrant&) const = default;
    std::string to_string() const;
};

/// Dense 0/1 adjacency matrix with rows additionally held as bitmasks.
struct BitMatrix {
    i64 dim = 0;
    i64 words = 0;
    std::vector<std::uint64_t> row_bits; // dim * words

    explicit BitMatrix(i64 dim);
    bool get(i64 i, i64 j) const {
        return row_bits[i * words + j / 64] >> (j % 64) & 1;
    }
    void set(i64 i, i64 j) { row_bits[i * words + j / 64] |= std::uint64_t{1} << (j % 64); }
    i64 row_sum(i64 i) const;
    i64 col_sum(i64 j) const;
    /// Row-major 0/1 text, one row per line.
    std::string to_string() const;
};

/// Vertex order x^0..x^(n-1), x^0 a..x^(n-1) a. Throws when 0 is in X (loop).
BitMatrix adjacency(const Dihedrant& d);

struct MatrixVerdict {
    std::optional<DsrgParams> params;
    std::string detail; // first failing cell / reason when empty
};

/// Ground-truth verifier: builds the adjacency matrix, checks regularity,
/// and reads (t, lambda, mu) off A^2 with constancy checks. Empty when the
/// graph is not a DSRG. Non-genuine parameter tuples are reported, not
/// rejected; use params->genuine() to classify.
MatrixVerdict verify_matrix(const Dihedrant& d);

struct Verdict {
    bool ok = false;
    std::string detail;
};

/// Group-ring verifier (exact integer convolutions in Z[C_n]).
Verdict verify_groupring(const Dihedrant& d, const DsrgParams& p);

/// Fourier verifier (exact arithmetic in Z[zeta_n] at every frequency).
/// For X == Y additionally requires t == mu and the one-equation form.
Verdict verify_fourier(const Dihedrant& d, const DsrgParams& p);

/// Isomorphic image Dih(n, bX, shift + bY); b must be a unit of Z_n.
Dihedrant transform(const Dihedrant& d, i64 b, i64 shift);

struct CanonicalForm {
    std::uint64_t xmask = 0;
    std::uint64_t ymask = 0;

    auto operator<=>(const CanonicalForm&) const = default;
};

/// Least (xmask, ymask) pair over the full transform family
/// (b unit, shift in Z_n). Requires n <= 64.
CanonicalForm canonical_form(const Dihedrant& d);

/// Least (xmask, ymask) over the transform subfamily that keeps the search
/// universe: for self-paired searches (Y = X) only b acts (shift = 0);
/// otherwise the full family.
CanonicalForm canonical_form_in_family(const Dihedrant& d, bool self_paired);

/// Complement dihedrant Dih(n, Z_n \ {0} \ X, Z_n \ Y).
Dihedrant complement_dihedrant(const Dihedrant& d);

/// Units of Z_n in ascending order.
std::vector<i64> units_of(i64 n);

} // namespace dsrg
