#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfore/scalar.hpp"

using namespace hopfore;

namespace {

Scalar rq(const FieldSpec& f, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    switch (f.kind) {
    case FieldKind::Rationals:
        return Scalar::from_mpq(f, mpq_class(num(rng), den(rng)));
    case FieldKind::PrimeField:
        return Scalar::from_int(f, num(rng));
    case FieldKind::RationalFunctions: {
        // low-degree random numerator and denominator
        std::vector<mpq_class> nc, dc;
        std::uniform_int_distribution<int> deg(0, 2);
        int nd = deg(rng), dd = deg(rng);
        for (int i = 0; i <= nd; ++i) nc.emplace_back(num(rng));
        for (int i = 0; i < dd; ++i) dc.emplace_back(num(rng));
        dc.emplace_back(den(rng)); // nonzero lead
        return Scalar::from_ratfun(f, RatFun(QPoly(nc), QPoly(dc)));
    }
    }
    return Scalar::zero(f);
}

void field_axioms(const FieldSpec& f, unsigned seed) {
    std::mt19937 rng(seed);
    const Scalar z = Scalar::zero(f), o = Scalar::one(f);
    for (int t = 0; t < 60; ++t) {
        Scalar a = rq(f, rng), b = rq(f, rng), c = rq(f, rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + z == a);
        CHECK(a * o == a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) {
            CHECK((a * a.inv()).is_one());
            CHECK(a.pow(-2) == (a * a).inv());
        }
    }
}

} // namespace

TEST_CASE("rational arithmetic canonical values") {
    FieldSpec f = FieldSpec::Q();
    Scalar a = Scalar::from_mpq(f, mpq_class(3, 2));
    Scalar b = Scalar::from_mpq(f, mpq_class(1, 2));
    CHECK((a + b) == Scalar::from_int(f, 2));
    CHECK((a + b).str() == "2");
    CHECK(Scalar::from_mpq(f, mpq_class(4, 6)).str() == "2/3");
}

TEST_CASE("prime field arithmetic") {
    FieldSpec f = FieldSpec::Fp(3);
    Scalar two = Scalar::from_int(f, 2);
    CHECK((two * two).is_one());
    CHECK(Scalar::from_int(f, -1) == two);
    CHECK(two.inv() == two);
    CHECK(FieldSpec::Fp(3).characteristic() == 3);
    CHECK_THROWS_AS(FieldSpec::Fp(4), Error);
    // rational embedding reduces mod p
    CHECK(Scalar::from_mpq(f, mpq_class(-1, 2)) == Scalar::from_int(f, 1));
}

TEST_CASE("rational function field") {
    FieldSpec f = FieldSpec::Qt("q");
    Scalar q = Scalar::variable(f);
    Scalar lhs = (q - q.inv()) * q;
    Scalar rhs = q * q - Scalar::one(f);
    CHECK(lhs == rhs);
    CHECK(lhs.str() == "q^2 - 1");
    // canonicalization across different factorizations
    Scalar a = (q * q - Scalar::one(f)) / (q - Scalar::one(f));
    Scalar b = q + Scalar::one(f);
    CHECK(a == b);
    // denominators are kept monic and reduced
    Scalar c = (q + q) / (q * q * Scalar::from_int(f, 2));
    CHECK(c == q.inv());
    CHECK(c.str() == "(1)/(q)");
}

TEST_CASE("specialization Q(q) -> Q") {
    FieldSpec f = FieldSpec::Qt("q");
    Scalar q = Scalar::variable(f);
    Scalar s = (Scalar::one(f) - q.pow(-2)); // pinned residual shape
    CHECK(s.specialize_q(mpq_class(2)) == Scalar::from_mpq(FieldSpec::Q(), mpq_class(3, 4)));
    CHECK_THROWS_AS(q.inv().specialize_q(mpq_class(0)), Error);
}

TEST_CASE("field mismatch is rejected") {
    Scalar a = Scalar::one(FieldSpec::Q());
    Scalar b = Scalar::one(FieldSpec::Fp(3));
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(Scalar::one(FieldSpec::Q()).inv() + Scalar::one(FieldSpec::Qt()), Error);
    CHECK_THROWS_AS(Scalar::zero(FieldSpec::Q()).inv(), Error);
}

TEST_CASE("field axioms hold on random samples") {
    field_axioms(FieldSpec::Q(), 1);
    field_axioms(FieldSpec::Fp(2), 2);
    field_axioms(FieldSpec::Fp(3), 3);
    field_axioms(FieldSpec::Fp(7), 4);
    field_axioms(FieldSpec::Qt("q"), 5);
}

TEST_CASE("solve_linear pinned examples") {
    FieldSpec f = FieldSpec::Q();
    auto s1 = solve_linear({{Scalar::one(f)}}, {Scalar::from_int(f, 5)}, f);
    REQUIRE(s1.has_value());
    CHECK(s1->particular[0] == Scalar::from_int(f, 5));
    CHECK(s1->kernel.empty());

    // one equation, two unknowns: x + y = 1
    auto s2 = solve_linear({{Scalar::one(f), Scalar::one(f)}}, {Scalar::one(f)}, f);
    REQUIRE(s2.has_value());
    CHECK(s2->kernel.size() == 1);

    // F3: 2x = 1 -> x = 2
    FieldSpec f3 = FieldSpec::Fp(3);
    auto s3 = solve_linear({{Scalar::from_int(f3, 2)}}, {Scalar::one(f3)}, f3);
    REQUIRE(s3.has_value());
    CHECK(s3->particular[0] == Scalar::from_int(f3, 2));

    // inconsistent: 0x = 1
    CHECK_FALSE(solve_linear({{Scalar::zero(f)}}, {Scalar::one(f)}, f).has_value());
}

TEST_CASE("solve_linear solutions re-verify by substitution") {
    for (FieldSpec f : {FieldSpec::Q(), FieldSpec::Fp(5), FieldSpec::Qt("q")}) {
        std::mt19937 rng(42);
        for (int t = 0; t < 20; ++t) {
            std::uniform_int_distribution<size_t> dim(1, 4);
            size_t rows = dim(rng), cols = dim(rng);
            std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols, Scalar::zero(f)));
            std::vector<Scalar> x0(cols, Scalar::zero(f));
            for (auto& v : x0) v = rq(f, rng);
            for (auto& row : a)
                for (auto& e : row) e = rq(f, rng);
            std::vector<Scalar> b(rows, Scalar::zero(f));
            for (size_t i = 0; i < rows; ++i)
                for (size_t j = 0; j < cols; ++j) b[i] += a[i][j] * x0[j];
            auto sol = solve_linear(a, b, f);
            REQUIRE(sol.has_value());
            // particular solves the system
            for (size_t i = 0; i < rows; ++i) {
                Scalar acc = Scalar::zero(f);
                for (size_t j = 0; j < cols; ++j) acc += a[i][j] * sol->particular[j];
                CHECK(acc == b[i]);
            }
            // kernel vectors solve the homogeneous system
            for (const auto& v : sol->kernel) {
                for (size_t i = 0; i < rows; ++i) {
                    Scalar acc = Scalar::zero(f);
                    for (size_t j = 0; j < cols; ++j) acc += a[i][j] * v[j];
                    CHECK(acc.is_zero());
                }
            }
        }
    }
}

TEST_CASE("polynomial helpers") {
    QPoly x = QPoly::variable();
    QPoly p = x * x - QPoly(mpq_class(1));
    QPoly g = QPoly::gcd(p, x - QPoly(mpq_class(1)));
    CHECK(g == (x - QPoly(mpq_class(1))));
    auto [q, r] = p.divmod(x + QPoly(mpq_class(1)));
    CHECK(r.is_zero());
    CHECK(q == (x - QPoly(mpq_class(1))));
    CHECK(p.eval(mpq_class(3)) == mpq_class(8));
}
