#include <gtest/gtest.h>

#include <chrono>
#include <random>
#include <sstream>

#include "ogdforge/fastforward.hpp"
#include "ogdforge/verify.hpp"

using namespace ogdforge;

namespace {
using V = std::vector<Rational>;
LsPoint pt(V x, Rational y) { return {std::move(x), y}; }
std::vector<LsPoint> random_points(std::mt19937_64& rng, std::size_t d, std::size_t T) {
    std::vector<LsPoint> out;
    auto r = [&] { return Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(1 + rng() % 3)); };
    for (std::size_t t = 0; t < T; ++t) {
        V x;
        for (std::size_t i = 0; i < d; ++i) x.push_back(r());
        out.push_back(pt(x, r()));
    }
    return out;
}
} // namespace

TEST(StepMatrix, Examples) {
    RMat zero = build_step_matrix(least_squares_term(pt({0, 0}, 3)), Rational(1));
    EXPECT_EQ(zero, detail::identity(3));

    RMat neg = build_step_matrix(least_squares_term(pt({1}, 0)), Rational(1));
    EXPECT_EQ(neg(0, 0), Rational(-1));
    EXPECT_EQ(neg(0, 1), Rational(0));
    EXPECT_EQ(neg(1, 0), Rational(0));
    EXPECT_EQ(neg(1, 1), Rational(1));

    RMat fit = build_step_matrix(least_squares_term(pt({1}, 1)), Rational(1, 2));
    for (const Rational& w : {Rational(-5), Rational(0), Rational(7, 3)}) {
        auto out = detail::mul(fit, V{w, 1}, nullptr);
        EXPECT_EQ(out[0], Rational(1));
        EXPECT_EQ(out[1], Rational(1));
    }
}

TEST(StepMatrix, Symmetrizes) {
    QuadraticTerm q = quadratic_term({{1, 4}, {0, 1}}, {0, 0}, 0);
    EXPECT_EQ(q.A[0][1], Rational(2));
    EXPECT_EQ(q.A[1][0], Rational(2));
    EXPECT_THROW(quadratic_term({{1, 2}}, {0, 0}, 0), DimensionError);
}

TEST(StepMatrix, CompositionLaw) {
    std::mt19937_64 rng(4);
    auto pts = random_points(rng, 3, 2);
    Rational eta(1, 7);
    RMat m1 = build_step_matrix(least_squares_term(pts[0]), eta);
    RMat m2 = build_step_matrix(least_squares_term(pts[1]), eta);
    RMat both = detail::mul(m2, m1, nullptr);
    V w{1, Rational(-2, 3), 5};
    V h = w;
    h.push_back(1);
    auto via = detail::mul(both, h, nullptr);
    via.pop_back();
    EXPECT_EQ(via, naive_least_squares(pts, w, eta, 3));
}

TEST(FastForward, Examples) {
    std::mt19937_64 rng(8);
    auto pts = random_points(rng, 3, 5);
    auto terms = terms_of(pts);
    V w1{1, 0, Rational(-1, 2)};
    Rational eta(1, 10);
    EXPECT_EQ(fast_forward(terms, w1, eta, 1), w1);
    EXPECT_EQ(fast_forward(terms, w1, eta, 6), naive_least_squares(pts, w1, eta, 6));
    FfStats st;
    EXPECT_EQ(fast_forward(terms, w1, eta, 10000, &st), naive_least_squares(pts, w1, eta, 10000));
    EXPECT_LE(st.matmuls, matmul_budget(5, 10000));
}

TEST(FastForward, MatchesNaiveOnRandomInstances) {
    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 40; ++rep) {
        std::size_t d = 1 + rng() % 4, T = 1 + rng() % 8, tau = 1 + rng() % 300;
        auto pts = random_points(rng, d, T);
        V w1(d);
        for (auto& w : w1) w = Rational(static_cast<long>(rng() % 5) - 2);
        Rational eta(1, static_cast<long>(8 + rng() % 8));
        FfStats st;
        auto terms = terms_of(pts);
        ASSERT_EQ(fast_forward(terms, w1, eta, tau, &st), naive_least_squares(pts, w1, eta, tau));
        EXPECT_EQ(naive_quadratic(terms, w1, eta, tau), naive_least_squares(pts, w1, eta, tau));
        EXPECT_LE(st.matmuls, matmul_budget(T, tau)) << "T=" << T << " tau=" << tau;
    }
}

TEST(FastForward, Errors) {
    auto terms = terms_of({pt({1}, 0)});
    EXPECT_THROW(fast_forward(terms, {0}, 1, 0), ValidationError);
    EXPECT_THROW(fast_forward({}, {0}, 1, 3), ValidationError);
    EXPECT_THROW(fast_forward(terms, {0, 0}, 1, 3), DimensionError);
}

TEST(FastForward, PrecisionLimit) {
    // each step multiplies w by 1 - 2*10^6; 2^17 steps need ~2.7M bits
    auto terms = terms_of({pt({1000}, 1)});
    EXPECT_THROW(fast_forward(terms, {1}, 1, (std::size_t{1} << 17) + 1), PrecisionLimit);
    auto m = fast_forward_mod(terms, {1}, 1, (std::size_t{1} << 17) + 1, 1000000007ULL);
    EXPECT_EQ(m.size(), 1U);
}

TEST(ModP, Primality) {
    EXPECT_TRUE(modp::is_prime(2));
    EXPECT_TRUE(modp::is_prime(1000000007ULL));
    EXPECT_TRUE(modp::is_prime(2305843009213693951ULL));  // 2^61 - 1
    EXPECT_FALSE(modp::is_prime(1));
    EXPECT_FALSE(modp::is_prime(561));  // Carmichael
    EXPECT_FALSE(modp::is_prime(1000000007ULL * 3));
    EXPECT_EQ(modp::from_rational(Rational(1, 2), 7), 4U);
    EXPECT_EQ(modp::from_rational(Rational(-1), 7), 6U);
}

TEST(ModP, AgreesWithExact) {
    std::mt19937_64 rng(23);
    const std::uint64_t p = 2305843009213693951ULL;
    for (int rep = 0; rep < 15; ++rep) {
        std::size_t d = 1 + rng() % 3, T = 1 + rng() % 6, tau = 1 + rng() % 2000;
        auto pts = random_points(rng, d, T);
        V w1(d, Rational(1, 3));
        Rational eta(1, 9);
        auto terms = terms_of(pts);
        EXPECT_EQ(fast_forward_mod(terms, w1, eta, tau, p), to_mod(fast_forward(terms, w1, eta, tau), p));
    }
    auto terms = terms_of({pt({1, 2}, 1)});
    EXPECT_EQ(fast_forward_mod(terms, {Rational(1, 2), 3}, 1, 1, 101), to_mod({Rational(1, 2), 3}, 101));
}

TEST(ModP, HugeTauIsFast) {
    std::mt19937_64 rng(29);
    auto terms = terms_of(random_points(rng, 4, 8));
    FfStats st;
    auto t0 = std::chrono::steady_clock::now();
    auto w = fast_forward_mod(terms, V(4, Rational(1)), Rational(1, 10), 1000000000ULL, 1000000007ULL, &st);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_EQ(w.size(), 4U);
    EXPECT_LT(secs, 10.0);
    EXPECT_LE(st.matmuls, matmul_budget(8, 1000000000ULL));
}

TEST(ModP, Errors) {
    auto terms = terms_of({pt({1}, 1)});
    EXPECT_THROW(fast_forward_mod(terms, {0}, 1, 5, 15), ModulusError);
    EXPECT_THROW(fast_forward_mod(terms, {0}, 1, 5, std::uint64_t{1} << 62), ModulusError);
    // 1/7 has no inverse mod 7, even at tau = 1
    EXPECT_THROW(fast_forward_mod(terms, {0}, Rational(1, 7), 1, 7), ModulusError);
    EXPECT_THROW(fast_forward_mod(terms, {Rational(1, 7)}, 1, 3, 7), ModulusError);
}

TEST(Budget, Formula) {
    EXPECT_EQ(matmul_budget(5, 1), 10U);
    EXPECT_EQ(matmul_budget(5, 2), 12U);
    EXPECT_EQ(matmul_budget(3, 1025), 6U + 22U);
}

TEST(Witness, NandIsNotAffine) {
    AffineWitness w = nand_affine_witness();
    EXPECT_FALSE(w.affine_realizable);
    EXPECT_EQ(w.rank_coeff, 3U);
    EXPECT_EQ(w.rank_augmented, 4U);
    EXPECT_EQ(w.certificate, (V{1, -1, -1, 1}));
}

TEST(Witness, ProjectionIsAffine) {
    AffineWitness w = affine_gate_witness(+[](Bit a, Bit) { return a; });
    EXPECT_TRUE(w.affine_realizable);
    EXPECT_EQ(w.rank_coeff, w.rank_augmented);
    EXPECT_TRUE(w.certificate.empty());
    EXPECT_FALSE(affine_gate_witness(+[](Bit a, Bit b) { return a == b ? Bit::True : Bit::False; }).affine_realizable);
}

TEST(Points, ReadFile) {
    std::stringstream f(R"({"model":{"kind":"least-squares","eta":"1/10"},"d":2,"w1":["0","1"]})" "\n"
                        R"({"x":{"0":"1"},"y":"2"})" "\n"
                        R"({"x":{"1":"-1/2","0":"3"},"y":"0"})" "\n");
    PointsFile pf = read_points(f);
    EXPECT_EQ(pf.eta, Rational(1, 10));
    EXPECT_EQ(pf.w1, (V{0, 1}));
    ASSERT_EQ(pf.points.size(), 2U);
    EXPECT_EQ(pf.points[1].x, (V{3, Rational(-1, 2)}));
    std::stringstream hinge(R"({"model":{"kind":"hinge"},"d":1})" "\n");
    EXPECT_THROW(read_points(hinge), ValidationError);
    std::stringstream wide(R"({"model":{"kind":"least-squares"},"d":1})" "\n" R"({"x":{"3":"1"},"y":"0"})" "\n");
    EXPECT_THROW(read_points(wide), DimensionError);
}

TEST(Suite, SmallRun) {
    auto rep = verify_fastforward_suite(3, 6);
    EXPECT_TRUE(rep.ok()) << rep.text();
}
