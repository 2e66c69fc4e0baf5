#ifndef SUBRAO_MODREP_HPP
#define SUBRAO_MODREP_HPP

// Unipotent structure of modules over K[Z/p] and K[Z/p x Z/p] in
// characteristic p, from ranks of powers of (sigma - 1).

#include <subrao/errors.hpp>
#include <subrao/linalg.hpp>
#include <subrao/scalar.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace subrao {

/// Multiplicities of Jordan blocks J_l, 1 <= l <= p.
class JordanProfile {
public:
    JordanProfile() = default;
    explicit JordanProfile(std::map<std::size_t, std::size_t> mult) {
        for (auto [l, c] : mult)
            if (c) mult_[l] = c;
    }

    void add(std::size_t block, std::size_t count = 1) {
        if (count) mult_[block] += count;
    }
    JordanProfile& operator+=(const JordanProfile& o) {
        for (auto [l, c] : o.mult_) add(l, c);
        return *this;
    }
    /// Direct sum of k copies.
    JordanProfile times(std::size_t k) const {
        JordanProfile r;
        for (auto [l, c] : mult_) r.add(l, c * k);
        return r;
    }

    std::size_t multiplicity(std::size_t block) const {
        auto it = mult_.find(block);
        return it == mult_.end() ? 0 : it->second;
    }
    const std::map<std::size_t, std::size_t>& multiplicities() const { return mult_; }
    std::size_t dimension() const {
        std::size_t d = 0;
        for (auto [l, c] : mult_) d += l * c;
        return d;
    }
    std::size_t block_count() const {
        std::size_t d = 0;
        for (auto [l, c] : mult_) d += c;
        return d;
    }
    friend bool operator==(const JordanProfile&, const JordanProfile&) = default;

    /// e.g. "J_5^7 + J_2^5"; the zero module prints as "0".
    std::string to_string() const {
        if (mult_.empty()) return "0";
        std::string s;
        for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "J_" + std::to_string(it->first);
            if (it->second != 1) s += "^" + std::to_string(it->second);
        }
        return s;
    }

private:
    std::map<std::size_t, std::size_t> mult_;
};

inline std::ostream& operator<<(std::ostream& os, const JordanProfile& j) { return os << j.to_string(); }

/// table[a][b] = rank of (sigma_A - 1)^a (sigma_B - 1)^b, 0 <= a, b <= p-1.
struct RankProfile {
    std::vector<std::vector<std::size_t>> table;

    static RankProfile zero(std::uint32_t p) { return {std::vector<std::vector<std::size_t>>(p, std::vector<std::size_t>(p, 0))}; }
    std::size_t at(std::size_t a, std::size_t b) const { return table[a][b]; }
    RankProfile& operator+=(const RankProfile& o) {
        for (std::size_t a = 0; a < table.size(); ++a)
            for (std::size_t b = 0; b < table.size(); ++b) table[a][b] += o.table[a][b];
        return *this;
    }
    friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

template <class K>
Matrix<K> minus_identity(const Matrix<K>& m) {
    Matrix<K> r = m;
    const K one = m.zero().constant(1);
    for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) -= one;
    return r;
}

/// Ranks of (sigma - 1)^k for k = 0..p, by repeated image computation.
/// Throws NotOrderP unless (sigma - 1)^p = 0, which is sigma^p = 1 in characteristic p.
template <class K>
std::vector<std::size_t> power_ranks(const Matrix<K>& sigma, std::uint32_t p) {
    if (sigma.rows() != sigma.cols()) throw DimensionMismatch("power_ranks: non-square matrix");
    const Matrix<K> x = minus_identity(sigma);
    std::vector<std::size_t> r{sigma.rows()};
    Matrix<K> w = x;
    for (std::uint32_t k = 1; k <= p; ++k) {
        w = row_space_basis(w);
        r.push_back(w.rows());
        if (w.rows() == 0) break;
        if (k < p) w = w * x;
    }
    if (r.back() != 0) throw NotOrderP();
    r.resize(p + 2, 0);
    return r;
}

inline JordanProfile profile_from_ranks(const std::vector<std::size_t>& r, std::uint32_t p) {
    JordanProfile j;
    for (std::size_t l = 1; l <= p; ++l) {
        const long m = static_cast<long>(r[l - 1]) - 2 * static_cast<long>(r[l]) + static_cast<long>(r[l + 1]);
        if (m < 0) throw std::logic_error("negative Jordan multiplicity");
        j.add(l, static_cast<std::size_t>(m));
    }
    return j;
}

template <class K>
JordanProfile jordan_profile(const Matrix<K>& sigma, std::uint32_t p) {
    return profile_from_ranks(power_ranks(sigma, p), p);
}

/// Row-convention Jordan block: e_k -> e_k + e_{k+1}.
inline Matrix<Fp> jordan_block(std::size_t l, std::uint32_t p) {
    Matrix<Fp> m = Matrix<Fp>::identity(l, Fp(0, p));
    for (std::size_t k = 0; k + 1 < l; ++k) m(k, k + 1) = Fp(1, p);
    return m;
}

/// J_a (x) J_b with the diagonal action.
inline JordanProfile tensor_profile(std::size_t a, std::size_t b, std::uint32_t p) {
    require_odd_prime(p);
    if (a < 1 || b < 1 || a > p || b > p) throw std::out_of_range("block sizes must lie in [1, p]");
    return jordan_profile(kronecker(jordan_block(a, p), jordan_block(b, p)), p);
}

template <class K>
RankProfile rank_profile(const Matrix<K>& sigma_A, const Matrix<K>& sigma_B, std::uint32_t p) {
    if (sigma_A.rows() != sigma_B.rows() || sigma_A.rows() != sigma_A.cols() || sigma_B.rows() != sigma_B.cols())
        throw DimensionMismatch("rank_profile: generator shapes differ");
    RankProfile rp = RankProfile::zero(p);
    if (sigma_A.rows() == 0) return rp;
    if (!(sigma_A * sigma_B == sigma_B * sigma_A)) throw GeneratorsDoNotCommute();
    power_ranks(sigma_B, p);  // order check
    const Matrix<K> xa = minus_identity(sigma_A), xb = minus_identity(sigma_B);
    Matrix<K> wa = Matrix<K>::identity(sigma_A.rows(), sigma_A.zero());
    for (std::uint32_t a = 0; a <= p; ++a) {
        if (a > 0) wa = row_space_basis(wa * xa);
        if (a == p) {
            if (wa.rows() != 0) throw NotOrderP();
            break;
        }
        rp.table[a][0] = wa.rows();
        Matrix<K> w = wa;
        for (std::uint32_t b = 1; b < p && w.rows() > 0; ++b) {
            w = row_space_basis(w * xb);
            rp.table[a][b] = w.rows();
        }
    }
    return rp;
}

/// Rank of the norm-type element (sigma_A - 1)^{p-1} (sigma_B - 1)^{p-1}.
template <class K>
std::size_t free_summand_count(const Matrix<K>& sigma_A, const Matrix<K>& sigma_B, std::uint32_t p) {
    return rank_profile(sigma_A, sigma_B, p).at(p - 1, p - 1);
}

enum class Subgroup { A, B, G };

inline const char* subgroup_name(Subgroup s) {
    switch (s) {
        case Subgroup::A: return "A";
        case Subgroup::B: return "B";
        case Subgroup::G: return "G";
    }
    return "?";
}


// ---------------------------------------------------------------------------
// Reference modules

enum class ReferenceKind { Jordan, GroupAlgebra, QuotientByA, QuotientByB, InducedFromA, InducedFromB };

struct ReferenceModule {
    ReferenceKind kind = ReferenceKind::GroupAlgebra;
    std::size_t param = 0;  // block size or quotient exponent; unused for K[G]

    static ReferenceModule jordan(std::size_t l) { return {ReferenceKind::Jordan, l}; }
    static ReferenceModule group_algebra() { return {ReferenceKind::GroupAlgebra, 0}; }
    static ReferenceModule quotient_by_A(std::size_t k) { return {ReferenceKind::QuotientByA, k}; }
    static ReferenceModule quotient_by_B(std::size_t k) { return {ReferenceKind::QuotientByB, k}; }
    static ReferenceModule induced_from_A(std::size_t l) { return {ReferenceKind::InducedFromA, l}; }
    static ReferenceModule induced_from_B(std::size_t l) { return {ReferenceKind::InducedFromB, l}; }

    bool bicyclic() const { return kind != ReferenceKind::Jordan; }

    std::size_t dimension(std::uint32_t p) const {
        switch (kind) {
            case ReferenceKind::Jordan: return param;
            case ReferenceKind::GroupAlgebra: return std::size_t{p} * p;
            default: return param * p;
        }
    }

    std::string name() const {
        const std::string k = std::to_string(param);
        switch (kind) {
            case ReferenceKind::Jordan: return "J_" + k;
            case ReferenceKind::GroupAlgebra: return "K[G]";
            case ReferenceKind::QuotientByA: return "K[G]/(eA-1)^" + k;
            case ReferenceKind::QuotientByB: return "K[G]/(eB-1)^" + k;
            case ReferenceKind::InducedFromA: return "Ind_A^G(J_" + k + ")";
            case ReferenceKind::InducedFromB: return "Ind_B^G(J_" + k + ")";
        }
        return "?";
    }

    /// Generator matrices (sigma_A, sigma_B) over F_p. K[G] = J_p (x) J_p;
    /// K[G]/(eA-1)^k and Ind_A^G(J_k) are J_k (x) K[B]; symmetrically for B.
    std::pair<Matrix<Fp>, Matrix<Fp>> generators(std::uint32_t p) const {
        require_odd_prime(p);
        if (kind == ReferenceKind::Jordan) throw std::invalid_argument("J_l is a cyclic module");
        if (kind != ReferenceKind::GroupAlgebra && (param < 1 || param > p))
            throw std::out_of_range("reference parameter outside [1, p]");
        std::size_t la = p, lb = p;
        if (kind == ReferenceKind::QuotientByA || kind == ReferenceKind::InducedFromA) la = param;
        if (kind == ReferenceKind::QuotientByB || kind == ReferenceKind::InducedFromB) lb = param;
        const Fp z(0, p);
        return {kronecker(jordan_block(la, p), Matrix<Fp>::identity(lb, z)),
                kronecker(Matrix<Fp>::identity(la, z), jordan_block(lb, p))};
    }

    friend bool operator==(const ReferenceModule&, const ReferenceModule&) = default;
    friend auto operator<=>(const ReferenceModule& a, const ReferenceModule& b) {
        return std::pair{static_cast<int>(a.kind), a.param} <=> std::pair{static_cast<int>(b.kind), b.param};
    }
};

inline RankProfile reference_rank_profile(const ReferenceModule& m, std::uint32_t p) {
    auto [a, b] = m.generators(p);
    return rank_profile(a, b, p);
}

/// Sum of the reference profiles of a claimed decomposition.
inline RankProfile claimed_rank_profile(const std::vector<ReferenceModule>& claimed, std::uint32_t p) {
    std::map<ReferenceModule, RankProfile> cache;
    RankProfile total = RankProfile::zero(p);
    for (const auto& m : claimed) {
        auto it = cache.find(m);
        if (it == cache.end()) it = cache.emplace(m, reference_rank_profile(m, p)).first;
        total += it->second;
    }
    return total;
}

/// True iff dimensions, rank profiles and norm ranks of the computed module
/// agree with the direct sum of the claimed reference modules.
inline bool match_decomposition(const RankProfile& profile, std::size_t dimension,
                                const std::vector<ReferenceModule>& claimed, std::uint32_t p) {
    std::size_t dim = 0, free = 0;
    for (const auto& m : claimed) {
        dim += m.dimension(p);
        if (m.kind == ReferenceKind::GroupAlgebra) ++free;
    }
    if (dim != dimension || profile.at(0, 0) != dimension) return false;
    if (profile.at(p - 1, p - 1) != free) return false;
    return profile == claimed_rank_profile(claimed, p);
}

/// Checks that all multisets of {K[G], K[G]/(eA-1)^k, K[G]/(eB-1)^k : 1 <= k < p}
/// of total dimension <= max_dim have pairwise distinct rank profiles. Returns
/// the number of multisets examined.
inline std::size_t rank_profile_separation(std::uint32_t p, std::size_t max_dim, bool* separated) {
    std::vector<ReferenceModule> kinds{ReferenceModule::group_algebra()};
    for (std::size_t k = 1; k < p; ++k) kinds.push_back(ReferenceModule::quotient_by_A(k));
    for (std::size_t k = 1; k < p; ++k) kinds.push_back(ReferenceModule::quotient_by_B(k));
    std::vector<RankProfile> base;
    for (const auto& k : kinds) base.push_back(reference_rank_profile(k, p));

    std::set<std::vector<std::vector<std::size_t>>> seen;
    std::size_t count = 0;
    bool ok = true;
    RankProfile acc = RankProfile::zero(p);
    // depth-first over non-decreasing kind indices
    auto rec = [&](auto&& self, std::size_t first, std::size_t dim) -> void {
        ++count;
        if (!seen.insert(acc.table).second) ok = false;
        for (std::size_t t = first; t < kinds.size(); ++t) {
            const std::size_t d = kinds[t].dimension(p);
            if (dim + d > max_dim) continue;
            acc += base[t];
            self(self, t, dim + d);
            for (std::size_t a = 0; a < p; ++a)
                for (std::size_t b = 0; b < p; ++b) acc.table[a][b] -= base[t].table[a][b];
        }
    };
    rec(rec, 0, 0);
    if (separated) *separated = ok;
    return count;
}

}  // namespace subrao

#endif  // SUBRAO_MODREP_HPP
