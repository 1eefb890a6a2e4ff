#include <gtest/gtest.h>

#include <random>

#include "ogdforge/expr.hpp"
#include "ogdforge/rational.hpp"
#include "ogdforge/sparse_vec.hpp"

using namespace ogdforge;

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(3, 6).str(), "1/2");
    EXPECT_EQ(Rational(4, -8).str(), "-1/2");
    EXPECT_EQ(Rational::parse(" 7 / 14 ").str(), "1/2");
    EXPECT_EQ(Rational::parse("-13/4").str(), "-13/4");
    EXPECT_EQ(Rational::parse("+3").str(), "3");
    EXPECT_EQ(Rational::parse("0/5").str(), "0");
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 2), Rational(1));
    EXPECT_EQ(Rational(-13, 4) * Rational(-1), Rational(13, 4));
    EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
    EXPECT_EQ(-Rational(5, 7), Rational(-5, 7));
    EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
    EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
    EXPECT_EQ(Rational(-3, 4).abs(), Rational(3, 4));
    EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
    EXPECT_TRUE(Rational(-1, 2) < Rational(-1, 3));
    EXPECT_EQ(Rational(5, 3).bit_length(), 5U);
}

TEST(Rational, Errors) {
    EXPECT_THROW(Rational(1, 0), ArithmeticError);
    EXPECT_THROW(Rational(1) / Rational(0), ArithmeticError);
    EXPECT_THROW(Rational(0).inverse(), ArithmeticError);
    EXPECT_THROW(Rational::parse("1/0"), ArithmeticError);
    EXPECT_THROW(Rational::parse("0.5"), ValidationError);
    EXPECT_THROW(Rational::parse(""), ValidationError);
    EXPECT_THROW(Rational::parse("1/-"), ValidationError);
}

TEST(Rational, RoundTripProperty) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
    for (int i = 0; i < 2000; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        EXPECT_EQ((a + b) - b, a);
        if (!b.is_zero()) {
            EXPECT_EQ((a * b) / b, a);
        }
        EXPECT_EQ(Rational::parse(a.str()), a);
        EXPECT_EQ(Rational(a.raw()).str(), a.str());  // canonicalization is idempotent
        EXPECT_TRUE((a < b) + (b < a) + (a == b) == 1);
    }
}

TEST(SparseVec, ZeroEntriesAreNotStored) {
    SparseVec v{{0, Rational(1)}, {3, Rational(0)}};
    EXPECT_EQ(v.nnz(), 1U);
    v.set(0, Rational(0));
    EXPECT_TRUE(v.empty());
    EXPECT_EQ(v.extent(), 0U);
    v.set(4, Rational(2));
    EXPECT_EQ(v.extent(), 5U);
    EXPECT_EQ(v.get(2), Rational(0));
    EXPECT_EQ(v.scaled(Rational(0)).nnz(), 0U);
}

TEST(SparseVec, Dot) {
    EXPECT_EQ(dot(SparseVec{{0, Rational(-2)}}, {Rational(1), Rational(5)}), Rational(-2));
    EXPECT_EQ(dot(SparseVec{}, {Rational(3), Rational(4)}), Rational(0));
    EXPECT_EQ(dot(SparseVec{{0, Rational(-2)}, {1, Rational(1)}}, {Rational(-1), Rational(0)}), Rational(2));
    EXPECT_THROW(dot(SparseVec{{2, Rational(1)}}, {Rational(1), Rational(1)}), DimensionError);
}

TEST(Expr, Grammar) {
    Env env{{"a", Rational(4, 5)}, {"e1", Rational(1, 2)}, {"e2", Rational(3)}};
    EXPECT_EQ(eval_expr("1/(2 e1 a^2)", env), Rational(25, 16));
    // implicit product and '/' share a level, left to right
    EXPECT_EQ(eval_expr("e1 a^3/2", env), Rational(16, 125));
    EXPECT_EQ(eval_expr("a^2/e1 + e1 a^3/2", env), Rational(32, 25) + Rational(16, 125));
    EXPECT_EQ(eval_expr("-2 a^6/e2", env), Rational(-2) * Rational(4, 5).pow(6) / Rational(3));
    EXPECT_EQ(eval_expr("47 + 1272583/3125000"), Rational(148147583, 3125000));
    EXPECT_EQ(eval_expr("-(1 - 3)"), Rational(2));
    EXPECT_THROW(eval_expr("x + 1"), ValidationError);
    EXPECT_THROW(eval_expr("1 +"), ValidationError);
    EXPECT_THROW(eval_expr("1/0"), ArithmeticError);
}

TEST(Expr, Symbols) {
    std::set<std::string> s;
    Expr::parse("a^2/e1 + e1 a^3/2 - rho").collect_symbols(s);
    EXPECT_EQ(s, (std::set<std::string>{"a", "e1", "rho"}));
}
