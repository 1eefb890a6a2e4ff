#pragma once

// OGD under a loss quadratic in w is affine per step:
//   w' = w - eta (2 A w + b)   ==   (w', 1) = M (w, 1),  M = I - eta [[2A, b], [0, 0]]
// so tau-1 steps cycling through T points are (M^T...M^1)^q * prefix, with
// the power taken by repeated squaring.

#include <bit>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "json.hpp"
#include "program_io.hpp"
#include "rational.hpp"

namespace ogdforge {

struct QuadraticTerm {
    std::vector<std::vector<Rational>> A;  // symmetric d x d
    std::vector<Rational> b;
    Rational c;
    std::size_t dim() const { return b.size(); }
};

// f(w) = sum A_ij w_i w_j + sum b_i w_i + c; A is symmetrized here.
inline QuadraticTerm quadratic_term(std::vector<std::vector<Rational>> A, std::vector<Rational> b, Rational c) {
    std::size_t d = b.size();
    if (A.size() != d) throw DimensionError("quadratic term: A and b disagree on dimension");
    for (const auto& row : A)
        if (row.size() != d) throw DimensionError("quadratic term: A is not square");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Rational s = (A[i][j] + A[j][i]) / Rational(2);
            A[i][j] = s;
            A[j][i] = s;
        }
    return {std::move(A), std::move(b), std::move(c)};
}

struct LsPoint {
    std::vector<Rational> x;
    Rational y;
};

// (w.x - y)^2: A = x x^T, b = -2 y x, c = y^2
inline QuadraticTerm least_squares_term(const LsPoint& p) {
    std::size_t d = p.x.size();
    std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d));
    std::vector<Rational> b(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) A[i][j] = p.x[i] * p.x[j];
        b[i] = Rational(-2) * p.y * p.x[i];
    }
    return {std::move(A), std::move(b), p.y * p.y};
}

// ---------------------------------------------------------------- matrices

template <class T>
struct Mat {
    std::size_t n = 0;
    std::vector<T> a;
    Mat() = default;
    explicit Mat(std::size_t n_, const T& zero) : n(n_), a(n_ * n_, zero) {}
    T& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    friend bool operator==(const Mat&, const Mat&) = default;
};

using RMat = Mat<Rational>;

struct FfStats {
    std::size_t matmuls = 0;  // matrix-matrix and matrix-vector products
    std::size_t squarings = 0;
    std::size_t max_bits = 0;
};

inline constexpr std::size_t kExactBitCap = 1000000;

namespace detail {

inline RMat identity(std::size_t n) {
    RMat m(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

inline void note_bits(const RMat& m, FfStats* st) {
    std::size_t b = 0;
    for (const auto& e : m.a) b = std::max(b, e.bit_length());
    if (st) st->max_bits = std::max(st->max_bits, b);
    if (b > kExactBitCap)
        throw PrecisionLimit("exact fast-forward entries exceed " + std::to_string(kExactBitCap) +
                             " bits; use the modular mode");
}

inline RMat mul(const RMat& x, const RMat& y, FfStats* st) {
    RMat r(x.n, Rational(0));
    mpq_class acc, t;
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = 0; j < x.n; ++j) {
            acc = 0;
            for (std::size_t k = 0; k < x.n; ++k) {
                if (x(i, k).is_zero() || y(k, j).is_zero()) continue;
                mpq_mul(t.get_mpq_t(), x(i, k).raw().get_mpq_t(), y(k, j).raw().get_mpq_t());
                acc += t;
            }
            r(i, j) = Rational(acc);
        }
    if (st) ++st->matmuls;
    note_bits(r, st);
    return r;
}

inline std::vector<Rational> mul(const RMat& m, const std::vector<Rational>& v, FfStats* st) {
    std::vector<Rational> r(m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t k = 0; k < m.n; ++k)
            if (!m(i, k).is_zero() && !v[k].is_zero()) r[i] += m(i, k) * v[k];
    if (st) ++st->matmuls;
    return r;
}

} // namespace detail

inline RMat build_step_matrix(const QuadraticTerm& q, const Rational& eta) {
    std::size_t d = q.dim();
    RMat m = detail::identity(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m(i, j) -= eta * Rational(2) * q.A[i][j];
        m(i, d) -= eta * q.b[i];
    }
    return m;
}

namespace detail {
inline void check_ff_args(const std::vector<QuadraticTerm>& terms, std::size_t d, std::size_t tau) {
    if (tau < 1) throw ValidationError("tau must be >= 1");
    if (terms.empty()) throw ValidationError("fast-forward needs at least one point");
    for (const auto& t : terms)
        if (t.dim() != d) throw DimensionError("point dimension differs from w1");
}
} // namespace detail

// w^tau: state after tau-1 steps, starting at w1 and cycling the terms.
inline std::vector<Rational> fast_forward(const std::vector<QuadraticTerm>& terms, const std::vector<Rational>& w1,
                                          const Rational& eta, std::size_t tau, FfStats* st = nullptr) {
    const std::size_t d = w1.size();
    detail::check_ff_args(terms, d, tau);
    if (tau == 1) return w1;
    const std::size_t T = terms.size(), steps = tau - 1, q = steps / T, r = steps % T;

    // prefix products P_k = M^k ... M^1; P_T is the full pass
    RMat prefix_r, pass;
    RMat cur = build_step_matrix(terms[0], eta);
    if (r == 1) prefix_r = cur;
    for (std::size_t k = 2; k <= (q > 0 ? T : r); ++k) {
        cur = detail::mul(build_step_matrix(terms[k - 1], eta), cur, st);
        if (k == r) prefix_r = cur;
    }
    if (q > 0) pass = std::move(cur);

    std::vector<Rational> v = w1;
    v.push_back(Rational(1));
    for (std::size_t e = q; e > 0;) {
        if (e & 1U) v = detail::mul(pass, v, st);
        e >>= 1U;
        if (e) {
            pass = detail::mul(pass, pass, st);
            if (st) ++st->squarings;
        }
    }
    if (r > 0) v = detail::mul(prefix_r, v, st);
    v.pop_back();
    return v;
}

// Reference: one explicit gradient step at a time.
inline std::vector<Rational> naive_quadratic(const std::vector<QuadraticTerm>& terms, std::vector<Rational> w,
                                             const Rational& eta, std::size_t tau) {
    detail::check_ff_args(terms, w.size(), tau);
    const std::size_t d = w.size();
    for (std::size_t t = 0; t + 1 < tau; ++t) {
        const auto& q = terms[t % terms.size()];
        std::vector<Rational> g(d);
        for (std::size_t k = 0; k < d; ++k) {
            Rational s = q.b[k];
            for (std::size_t i = 0; i < d; ++i)
                if (!q.A[i][k].is_zero() && !w[i].is_zero()) s += Rational(2) * q.A[i][k] * w[i];
            g[k] = s;
        }
        for (std::size_t k = 0; k < d; ++k) w[k] -= eta * g[k];
    }
    return w;
}

// Least squares straight from the loss: grad = 2 (w.x - y) x.
inline std::vector<Rational> naive_least_squares(const std::vector<LsPoint>& pts, std::vector<Rational> w,
                                                 const Rational& eta, std::size_t tau) {
    if (tau < 1) throw ValidationError("tau must be >= 1");
    if (pts.empty()) throw ValidationError("need at least one point");
    for (std::size_t t = 0; t + 1 < tau; ++t) {
        const auto& p = pts[t % pts.size()];
        if (p.x.size() != w.size()) throw DimensionError("point dimension differs from w1");
        Rational z;
        for (std::size_t i = 0; i < w.size(); ++i) z += p.x[i] * w[i];
        Rational g = Rational(2) * eta * (z - p.y);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= g * p.x[i];
    }
    return w;
}

// ---------------------------------------------------------------- mod p

namespace modp {

inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    for (; e; e >>= 1U, a = mulm(a, a, p))
        if (e & 1U) r = mulm(r, a, p);
    return r;
}

// deterministic for all 64-bit n
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powm(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s && comp; ++i) {
            x = mulm(x, x, n);
            if (x == n - 1) comp = false;
        }
        if (comp) return false;
    }
    return true;
}

inline std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

inline std::uint64_t from_rational(const Rational& q, std::uint64_t p) {
    std::uint64_t den = reduce(q.den(), p);
    if (den == 0) throw ModulusError("denominator of " + q.str() + " is divisible by " + std::to_string(p));
    return mulm(reduce(q.num(), p), powm(den, p - 2, p), p);
}

using M = Mat<std::uint64_t>;

inline M mul(const M& x, const M& y, std::uint64_t p, FfStats* st) {
    M r(x.n, 0);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            std::uint64_t a = x(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < x.n; ++j) r(i, j) = (r(i, j) + mulm(a, y(k, j), p)) % p;
        }
    if (st) ++st->matmuls;
    return r;
}

inline std::vector<std::uint64_t> mul(const M& m, const std::vector<std::uint64_t>& v, std::uint64_t p, FfStats* st) {
    std::vector<std::uint64_t> r(m.n, 0);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t k = 0; k < m.n; ++k) r[i] = (r[i] + mulm(m(i, k), v[k], p)) % p;
    if (st) ++st->matmuls;
    return r;
}

} // namespace modp

inline void check_modulus(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 62)) throw ModulusError("modulus must be below 2^62");
    if (!modp::is_prime(p)) throw ModulusError(std::to_string(p) + " is not prime");
}

inline std::vector<std::uint64_t> to_mod(const std::vector<Rational>& v, std::uint64_t p) {
    std::vector<std::uint64_t> r;
    r.reserve(v.size());
    for (const auto& e : v) r.push_back(modp::from_rational(e, p));
    return r;
}

inline std::vector<std::uint64_t> fast_forward_mod(const std::vector<QuadraticTerm>& terms,
                                                   const std::vector<Rational>& w1, const Rational& eta,
                                                   std::size_t tau, std::uint64_t p, FfStats* st = nullptr) {
    check_modulus(p);
    const std::size_t d = w1.size();
    detail::check_ff_args(terms, d, tau);
    std::vector<std::uint64_t> v = to_mod(w1, p);
    // reduce every step matrix up front so bad denominators surface even at tau = 1
    std::vector<modp::M> steps;
    for (const auto& t : terms) {
        RMat m = build_step_matrix(t, eta);
        modp::M mm(d + 1, 0);
        for (std::size_t i = 0; i < m.a.size(); ++i) mm.a[i] = modp::from_rational(m.a[i], p);
        steps.push_back(std::move(mm));
    }
    if (tau == 1) return v;
    const std::size_t T = terms.size(), n = tau - 1, q = n / T, r = n % T;
    modp::M prefix_r, pass, cur = steps[0];
    if (r == 1) prefix_r = cur;
    for (std::size_t k = 2; k <= (q > 0 ? T : r); ++k) {
        cur = modp::mul(steps[k - 1], cur, p, st);
        if (k == r) prefix_r = cur;
    }
    if (q > 0) pass = std::move(cur);
    v.push_back(1 % p);
    for (std::size_t e = q; e > 0;) {
        if (e & 1U) v = modp::mul(pass, v, p, st);
        e >>= 1U;
        if (e) {
            pass = modp::mul(pass, pass, p, st);
            if (st) ++st->squarings;
        }
    }
    if (r > 0) v = modp::mul(prefix_r, v, p, st);
    v.pop_back();
    return v;
}

// 2T + 2 ceil(log2 tau): what the count above never exceeds
inline std::size_t matmul_budget(std::size_t T, std::size_t tau) {
    std::size_t lg = tau <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(tau - 1));
    return 2 * T + 2 * lg;
}

// ---------------------------------------------------------------- barrier

// Exact rank by fraction-free-ish elimination over the rationals.
inline std::size_t rank(std::vector<std::vector<Rational>> m) {
    std::size_t r = 0, rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

struct AffineWitness {
    bool affine_realizable = true;
    std::size_t rank_coeff = 0, rank_augmented = 0;
    std::vector<Rational> certificate;  // y with y^T [x1 x2 1] = 0 and y^T target != 0
};

// Can out = a1 x1 + a2 x2 + c hold on all four ±1 input pairs? For NAND
// the system is inconsistent, so no composition of affine steps computes it.
inline AffineWitness affine_gate_witness(Bit (*gate)(Bit, Bit)) {
    std::vector<std::vector<Rational>> coeff, aug;
    std::vector<Rational> target;
    for (Bit a : {Bit::True, Bit::False})
        for (Bit b : {Bit::True, Bit::False}) {
            Rational x1(a == Bit::True ? 1 : -1), x2(b == Bit::True ? 1 : -1);
            Rational out(gate(a, b) == Bit::True ? 1 : -1);
            coeff.push_back({x1, x2, Rational(1)});
            aug.push_back({x1, x2, Rational(1), out});
            target.push_back(out);
        }
    AffineWitness w;
    w.rank_coeff = rank(coeff);
    w.rank_augmented = rank(aug);
    w.affine_realizable = w.rank_coeff == w.rank_augmented;
    if (!w.affine_realizable) {
        // the left null vector of the coefficient matrix on {TT, TF, FT, FF}
        std::vector<Rational> y{Rational(1), Rational(-1), Rational(-1), Rational(1)};
        Rational yt;
        for (std::size_t i = 0; i < 4; ++i) yt += y[i] * target[i];
        for (std::size_t c = 0; c < 3; ++c) {
            Rational s;
            for (std::size_t i = 0; i < 4; ++i) s += y[i] * coeff[i][c];
            if (!s.is_zero()) throw ArithmeticError("certificate is not a left null vector");
        }
        if (yt.is_zero()) throw ArithmeticError("certificate does not separate the target");
        w.certificate = y;
    }
    return w;
}

inline AffineWitness nand_affine_witness() { return affine_gate_witness(&nand); }

// ---------------------------------------------------------------- files

// header {"model": {"kind": "least-squares", "eta": "1/10"}, "d": 2, "w1": ["0","1"]}
// then one {"x": {"0": "1"}, "y": "2"} per line
struct PointsFile {
    Rational eta{1};
    std::vector<Rational> w1;
    std::vector<LsPoint> points;
};

inline PointsFile read_points(std::istream& in) {
    PointsFile pf;
    std::string line;
    std::size_t lineno = 0, d = 0;
    bool have_header = false;
    try {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            json j = json::parse(line);
            if (!have_header) {
                std::string kind = j.at("model").at("kind").get<std::string>();
                if (kind != "least-squares")
                    throw ValidationError("fast-forward needs a quadratic model (least-squares), got '" + kind + "'");
                if (j["model"].contains("eta")) pf.eta = rational_from_json(j["model"]["eta"]);
                d = j.at("d").get<std::size_t>();
                pf.w1 = j.contains("w1") ? rationals_from_json(j["w1"]) : std::vector<Rational>(d);
                if (pf.w1.size() != d) throw DimensionError("w1 has the wrong dimension");
                have_header = true;
                continue;
            }
            Example ex = example_from_json(j);
            if (ex.x.extent() > d) throw DimensionError("point exceeds dimension " + std::to_string(d));
            LsPoint p{std::vector<Rational>(d), ex.y};
            for (const auto& [i, v] : ex.x) p.x[i] = v;
            pf.points.push_back(std::move(p));
        }
    } catch (const json::exception& e) {
        throw ValidationError("points line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!have_header) throw ValidationError("points file has no header");
    if (pf.eta.sign() <= 0) throw ParameterError("eta must be positive");
    return pf;
}

inline PointsFile load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read points file '" + path + "'");
    return read_points(in);
}

inline std::vector<QuadraticTerm> terms_of(const std::vector<LsPoint>& pts) {
    std::vector<QuadraticTerm> t;
    t.reserve(pts.size());
    for (const auto& p : pts) t.push_back(least_squares_term(p));
    return t;
}

} // namespace ogdforge
