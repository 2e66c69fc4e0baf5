#ifndef SUBRAO_FREEGROUP_HPP
#define SUBRAO_FREEGROUP_HPP

// Words in Gamma = [A, B], free on e_{i,j} = [eA^i, eB^j] = eA^i eB^j eA^-i eB^-j
// with 1 <= i, j <= p-1, and the conjugation action of the coset
// representatives eA^a eB^b of N = A * B.

#include <subrao/errors.hpp>
#include <subrao/linalg.hpp>
#include <subrao/scalar.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <regex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subrao {

struct Letter {
    int i = 1;
    int j = 1;
    long exp = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word, stored as runs e_{i,j}^k with k != 0 and no two
/// neighbouring runs on the same generator.
class Word {
public:
    Word() = default;
    explicit Word(std::uint32_t p) : p_(p) {}

    static Word letter(std::uint32_t p, int i, int j, long exp = 1) {
        if (i < 1 || j < 1 || i >= static_cast<int>(p) || j >= static_cast<int>(p))
            throw std::out_of_range("letter index outside [1, p-1]");
        Word w(p);
        if (exp != 0) w.runs_.push_back({i, j, exp});
        return w;
    }

    std::uint32_t modulus() const { return p_; }
    bool empty() const { return runs_.empty(); }
    const std::vector<Letter>& letters() const { return runs_; }
    /// Number of unit letters.
    std::size_t length() const {
        std::size_t n = 0;
        for (const auto& r : runs_) n += static_cast<std::size_t>(std::labs(r.exp));
        return n;
    }

    /// Appends e_{i,j}^k, reducing at the seam.
    void push_back(const Letter& l) {
        if (l.exp == 0) return;
        if (!runs_.empty() && runs_.back().i == l.i && runs_.back().j == l.j) {
            runs_.back().exp += l.exp;
            if (runs_.back().exp == 0) runs_.pop_back();
        } else {
            runs_.push_back(l);
        }
    }

    friend Word operator*(const Word& u, const Word& v) {
        if (!u.empty() && !v.empty() && u.p_ != v.p_) throw MixedFieldOperands();
        Word r = u;
        if (r.p_ == 0) r.p_ = v.p_;
        for (const auto& l : v.runs_) r.push_back(l);
        return r;
    }
    Word inverse() const {
        Word r(p_);
        for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) r.runs_.push_back({it->i, it->j, -it->exp});
        return r;
    }
    Word pow(long k) const {
        Word base = k < 0 ? inverse() : *this, r(p_);
        for (long t = 0; t < std::labs(k); ++t) r = r * base;
        return r;
    }
    friend bool operator==(const Word& u, const Word& v) { return u.runs_ == v.runs_; }

    /// Debug format: e[2,1]*e[1,1]^-1; the empty word prints as 1.
    std::string to_string() const {
        if (runs_.empty()) return "1";
        std::string s;
        for (const auto& r : runs_) {
            if (!s.empty()) s += "*";
            s += "e[" + std::to_string(r.i) + "," + std::to_string(r.j) + "]";
            if (r.exp != 1) s += "^" + std::to_string(r.exp);
        }
        return s;
    }
    static Word parse(std::uint32_t p, const std::string& text) {
        Word w(p);
        if (text == "1" || text.empty()) return w;
        static const std::regex tok(R"(e\[(\d+),(\d+)\](?:\^(-?\d+))?)");
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t star = text.find('*', pos);
            std::string t = text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
            std::smatch m;
            if (!std::regex_match(t, m, tok)) throw std::invalid_argument("bad word token: " + t);
            long e = m[3].matched ? std::stol(m[3].str()) : 1;
            w = w * letter(p, std::stoi(m[1].str()), std::stoi(m[2].str()), e);
            if (star == std::string::npos) break;
            pos = star + 1;
        }
        return w;
    }

private:
    std::uint32_t p_ = 0;
    std::vector<Letter> runs_;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

/// Coset eA^a eB^b of Gamma in N, 0 <= a, b < p.
struct CosetRep {
    unsigned a = 0;
    unsigned b = 0;
    friend bool operator==(const CosetRep&, const CosetRep&) = default;
};

/// Index of e_{i,j} in [0, (p-1)^2): i runs fastest.
inline std::size_t letter_index(std::uint32_t p, int i, int j) {
    return static_cast<std::size_t>(j - 1) * (p - 1) + static_cast<std::size_t>(i - 1);
}

namespace detail {

// eA e_{i,j} eA^-1 = e_{i+1,j} e_{1,j}^-1, with e_{p,j} = 1
inline Word conj_A(std::uint32_t p, int i, int j) {
    Word w(p);
    if (i + 1 < static_cast<int>(p)) w.push_back({i + 1, j, 1});
    w.push_back({1, j, -1});
    return w;
}

// eB e_{i,j} eB^-1 = e_{i,1}^-1 e_{i,j+1}, with e_{i,p} = 1
inline Word conj_B(std::uint32_t p, int i, int j) {
    Word w(p);
    w.push_back({i, 1, -1});
    if (j + 1 < static_cast<int>(p)) w.push_back({i, j + 1, 1});
    return w;
}

inline Word apply_letterwise(const Word& w, Word (*rule)(std::uint32_t, int, int)) {
    const std::uint32_t p = w.modulus();
    Word out(p);
    for (const auto& r : w.letters()) out = out * rule(p, r.i, r.j).pow(r.exp);
    return out;
}

}  // namespace detail

/// rep * w * rep^-1 for any word w: eB-conjugation b times, then eA-conjugation a times.
inline Word conjugate(const CosetRep& rep, const Word& w) {
    Word r = w;
    for (unsigned t = 0; t < rep.b; ++t) r = detail::apply_letterwise(r, detail::conj_B);
    for (unsigned t = 0; t < rep.a; ++t) r = detail::apply_letterwise(r, detail::conj_A);
    return r;
}

/// rep * e_{i,j} * rep^-1.
inline Word conjugate_basis(std::uint32_t p, const CosetRep& rep, int i, int j) {
    return conjugate(rep, Word::letter(p, i, j));
}

/// act supplies forward(i, j) and backward(i, j), the action matrices of
/// e_{i,j} and its inverse.
/// d(w) for the derivation with d(e_{i,j}) = values[letter_index(i, j)], by
/// d(u e) = d(u) act(e) + d(e) and d(u e^-1) = (d(u) - d(e)) act(e^-1).
template <class K, class Act>
Vector<K> evaluate_derivation(std::span<const Vector<K>> values, const Word& w, const Act& act, const K& like) {
    const std::uint32_t p = w.modulus();
    const std::size_t dim = values.empty() ? 0 : values[0].size();
    Vector<K> d(dim, like.constant(0));
    for (const auto& r : w.letters()) {
        const auto& v = values[letter_index(p, r.i, r.j)];
        if (r.exp > 0) {
            const Matrix<K>& m = act.forward(r.i, r.j);
            for (long t = 0; t < r.exp; ++t) {
                d = row_times(std::span<const K>(d), m);
                for (std::size_t k = 0; k < dim; ++k) d[k] += v[k];
            }
        } else {
            const Matrix<K>& m = act.backward(r.i, r.j);
            for (long t = 0; t < -r.exp; ++t) {
                for (std::size_t k = 0; k < dim; ++k) d[k] -= v[k];
                d = row_times(std::span<const K>(d), m);
            }
        }
    }
    return d;
}

struct FoxTerm {
    int sign;
    Word suffix;
    friend bool operator==(const FoxTerm&, const FoxTerm&) = default;
};

/// Fox expansion of w with respect to e_{i,j}: d(w) = sum sign * d(e_{i,j}) act(suffix)
/// for any derivation vanishing on the other basis letters.
inline std::vector<FoxTerm> fox_coefficients(const Word& w, int i, int j) {
    const std::uint32_t p = w.modulus();
    std::vector<FoxTerm> out;
    // unit letters, left to right
    std::vector<Letter> units;
    for (const auto& r : w.letters())
        for (long t = 0; t < std::labs(r.exp); ++t) units.push_back({r.i, r.j, r.exp > 0 ? 1 : -1});
    Word suffix(p);
    for (std::size_t k = units.size(); k-- > 0;) {
        const Letter& u = units[k];
        if (u.i == i && u.j == j) {
            if (u.exp > 0)
                out.push_back({+1, suffix});
            else
                out.push_back({-1, Word::letter(p, i, j, -1) * suffix});
        }
        suffix = Word::letter(p, u.i, u.j, u.exp) * suffix;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// N = A * B as reduced alternating words; used to check the rewriting rules.

struct Syllable {
    char gen;  // 'A' or 'B'
    unsigned exp;  // 1..p-1
    friend bool operator==(const Syllable&, const Syllable&) = default;
};

class NWord {
public:
    explicit NWord(std::uint32_t p) : p_(p) {}
    static NWord gen(std::uint32_t p, char g, long k) {
        NWord w(p);
        w.push_back({g, static_cast<unsigned>(((k % static_cast<long>(p)) + p) % p)});
        return w;
    }
    static NWord rep(std::uint32_t p, const CosetRep& c) { return gen(p, 'A', c.a) * gen(p, 'B', c.b); }
    /// e_{i,j}^k expanded as a commutator word.
    static NWord basis(std::uint32_t p, int i, int j, long k = 1) {
        NWord e = gen(p, 'A', i) * gen(p, 'B', j) * gen(p, 'A', -i) * gen(p, 'B', -j);
        return e.pow(k);
    }
    static NWord from_gamma(const Word& w) {
        NWord r(w.modulus());
        for (const auto& l : w.letters()) r = r * basis(w.modulus(), l.i, l.j, l.exp);
        return r;
    }

    const std::vector<Syllable>& syllables() const { return s_; }
    bool is_identity() const { return s_.empty(); }

    void push_back(Syllable x) {
        if (x.exp % p_ == 0) return;
        if (!s_.empty() && s_.back().gen == x.gen) {
            s_.back().exp = (s_.back().exp + x.exp) % p_;
            if (s_.back().exp == 0) s_.pop_back();
        } else {
            s_.push_back({x.gen, x.exp % p_});
        }
    }
    friend NWord operator*(const NWord& u, const NWord& v) {
        NWord r = u;
        for (const auto& x : v.s_) r.push_back(x);
        return r;
    }
    NWord inverse() const {
        NWord r(p_);
        for (auto it = s_.rbegin(); it != s_.rend(); ++it) r.push_back({it->gen, p_ - it->exp});
        return r;
    }
    NWord pow(long k) const {
        NWord base = k < 0 ? inverse() : *this, r(p_);
        for (long t = 0; t < std::labs(k); ++t) r = r * base;
        return r;
    }
    friend bool operator==(const NWord& u, const NWord& v) { return u.s_ == v.s_; }

    /// Writes this element as gamma * eA^a eB^b with gamma in Gamma, using
    /// eB^b eA^x = e_{x,b}^-1 eA^x eB^b.
    std::pair<Word, CosetRep> split() const {
        Word gamma(p_);
        CosetRep c;
        for (const auto& x : s_) {
            if (x.gen == 'B') {
                c.b = (c.b + x.exp) % p_;
                continue;
            }
            if (c.b != 0) gamma = gamma * conjugate(CosetRep{c.a, 0}, Word::letter(p_, static_cast<int>(x.exp), static_cast<int>(c.b), -1));
            c.a = (c.a + x.exp) % p_;
        }
        return {gamma, c};
    }

    std::string to_string() const {
        if (s_.empty()) return "1";
        std::string out;
        for (const auto& x : s_) out += std::string(1, x.gen) + "^" + std::to_string(x.exp) + " ";
        out.pop_back();
        return out;
    }

private:
    std::uint32_t p_;
    std::vector<Syllable> s_;
};

inline std::ostream& operator<<(std::ostream& os, const NWord& w) { return os << w.to_string(); }

}  // namespace subrao

#endif  // SUBRAO_FREEGROUP_HPP
