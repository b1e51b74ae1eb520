#include "spinh/clifford.hpp"
#include "spinh/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace spinh;

namespace {

// Independent oracle: concatenate index words, bubble-sort with a sign per swap, cancel squares.
std::pair<int, Blade> word_product(const Signature& sig, Blade a, Blade b)
{
    std::vector<int> w;
    for (int i = 0; i < 32; ++i)
        if (a >> i & 1)
            w.push_back(i);
    for (int i = 0; i < 32; ++i)
        if (b >> i & 1)
            w.push_back(i);
    int sign = 1;
    for (std::size_t pass = 0; pass < w.size(); ++pass)
        for (std::size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k] > w[k + 1]) {
                std::swap(w[k], w[k + 1]);
                sign = -sign;
            }
    Blade out = 0;
    for (std::size_t k = 0; k < w.size();) {
        if (k + 1 < w.size() && w[k] == w[k + 1]) {
            if (w[k] < sig.r)
                sign = -sign;
            k += 2;
        } else {
            out |= Blade(1) << w[k];
            ++k;
        }
    }
    return {sign, out};
}

CliffordElement random_element(const Signature& sig, std::mt19937_64& rng, int terms = 4)
{
    CliffordElement x(sig);
    std::uniform_int_distribution<Blade> blade(0, (Blade(1) << sig.n()) - 1);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    for (int t = 0; t < terms; ++t)
        x.add_term(blade(rng), make_rational(num(rng), den(rng)));
    return x;
}

CliffordElement homogeneous(const CliffordElement& x, int parity)
{
    CliffordElement out(x.signature());
    for (auto& [b, c] : x.terms())
        if ((blade_grade(b) & 1) == parity)
            out.add_term(b, c);
    return out;
}

} // namespace

TEST_CASE("blade product sign agrees with word reduction oracle")
{
    for (int n = 0; n <= 6; ++n)
        for (int r = 0; r <= n; ++r) {
            Signature sig{r, n - r};
            for (Blade a = 0; a < (Blade(1) << n); ++a)
                for (Blade b = 0; b < (Blade(1) << n); ++b) {
                    auto [s, c] = word_product(sig, a, b);
                    REQUIRE(blade_product_sign(sig, a, b) == s);
                    REQUIRE((a ^ b) == c);
                }
        }
}

TEST_CASE("blade_mul examples")
{
    Signature cl2{2, 0};
    auto e1 = CliffordElement::generator(cl2, 1);
    auto e2 = CliffordElement::generator(cl2, 2);
    CHECK(e1 * e1 == CliffordElement::scalar(cl2, -1));
    auto e12 = e1 * e2;
    CHECK(e12 * e12 == CliffordElement::scalar(cl2, -1));
    auto w4 = volume_element({4, 0});
    CHECK(w4 * w4 == CliffordElement::scalar({4, 0}, 1));
    CHECK_THROWS_AS(blade_mul(e1, CliffordElement::generator({3, 0}, 1)), DomainError);
}

TEST_CASE("volume element square law")
{
    auto w11 = volume_element({1, 1});
    CHECK(w11 * w11 == CliffordElement::scalar({1, 1}, 1));
    auto w3 = volume_element({3, 0});
    CHECK(volume_square_sign({3, 0}) == 1);
    CHECK(w3 * w3 == CliffordElement::scalar({3, 0}, 1));
    for (int n = 0; n <= 10; ++n)
        for (int r = 0; r <= n; ++r) {
            Signature sig{r, n - r};
            auto w = volume_element(sig);
            CHECK(w * w == CliffordElement::scalar(sig, volume_square_sign(sig)));
        }
    // definite case reduces to (-1)^{n(n+1)/2}
    for (int n = 0; n <= 20; ++n)
        CHECK(volume_square_sign({n, 0}) == ((n * (n + 1) / 2) % 2 ? -1 : 1));
}

TEST_CASE("volume element commutation with generators")
{
    for (int n = 1; n <= 9; ++n) {
        Signature sig{n, 0};
        auto w = volume_element(sig);
        int s = (n - 1) % 2 ? -1 : 1;
        for (int i = 1; i <= n; ++i) {
            auto e = CliffordElement::generator(sig, i);
            CHECK(e * w == (w * e) * Rational(s));
        }
        if (n % 2) {
            std::mt19937_64 rng(n);
            auto x = random_element(sig, rng, 6);
            CHECK(x * w == w * x);
        }
    }
}

TEST_CASE("transpose")
{
    Signature cl3{3, 0};
    auto e1 = CliffordElement::generator(cl3, 1);
    auto e2 = CliffordElement::generator(cl3, 2);
    auto e3 = CliffordElement::generator(cl3, 3);
    CHECK(transpose(e1 * e2) == e2 * e1);
    CHECK(transpose(e1 * e2) == (e1 * e2) * Rational(-1));
    CHECK(transpose(CliffordElement::scalar(cl3, 1)) == CliffordElement::scalar(cl3, 1));
    // reversal oracle through blade_mul
    CHECK(transpose(e1 * e2 * e3) == e3 * e2 * e1);
    CHECK(transpose(e1 * e2 * e3) == (e1 * e2 * e3) * Rational(-1));
}

TEST_CASE("algebra laws on random elements")
{
    std::mt19937_64 rng(20261016);
    for (int iter = 0; iter < 300; ++iter) {
        int n = iter % 7;
        Signature sig{static_cast<int>(rng() % (n + 1)), 0};
        sig.s = n - sig.r;
        auto a = random_element(sig, rng), b = random_element(sig, rng), c = random_element(sig, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(transpose(a * b) == transpose(b) * transpose(a));
        CHECK(transpose(transpose(a)) == a);
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) {
                auto prod = homogeneous(a, p) * homogeneous(b, q);
                if (!prod.is_zero())
                    CHECK(prod.parity() == (p + q) % 2);
            }
    }
}

TEST_CASE("generator relations per signature")
{
    for (int n = 1; n <= 6; ++n)
        for (int r = 0; r <= n; ++r) {
            Signature sig{r, n - r};
            for (int i = 1; i <= n; ++i) {
                auto ei = CliffordElement::generator(sig, i);
                CHECK(ei * ei == CliffordElement::scalar(sig, i <= r ? -1 : 1));
                for (int j = i + 1; j <= n; ++j) {
                    auto ej = CliffordElement::generator(sig, j);
                    CHECK((ei * ej + ej * ei).is_zero());
                }
            }
        }
}

TEST_CASE("classification reproduces the algebra table")
{
    // rows n = 0..8; columns Cl, CCl, Clh, CClh
    const char* table[9][4] = {
        {"R", "C", "H", "C(2)"},
        {"C", "C+C", "C(2)", "C(2)+C(2)"},
        {"H", "C(2)", "R(4)", "C(4)"},
        {"H+H", "C(2)+C(2)", "R(4)+R(4)", "C(4)+C(4)"},
        {"H(2)", "C(4)", "R(8)", "C(8)"},
        {"C(4)", "C(4)+C(4)", "C(8)", "C(8)+C(8)"},
        {"R(8)", "C(8)", "H(8)", "C(16)"},
        {"R(8)+R(8)", "C(8)+C(8)", "H(8)+H(8)", "C(16)+C(16)"},
        {"R(16)", "C(16)", "H(16)", "C(32)"},
    };
    const Variant vs[4] = {Variant::Cl, Variant::CCl, Variant::Clh, Variant::CClh};
    for (int n = 0; n <= 8; ++n)
        for (int v = 0; v < 4; ++v)
            CHECK(classify(n, vs[v]).str() == table[n][v]);
    CHECK(classify(14, Variant::Cl).str() == "R(128)");
    CHECK(classify(6, Variant::Clh).str() == "H(8)");
    CHECK(classify(0, Variant::CClh).str() == "C(2)");
}

TEST_CASE("classification dimension audit and Morita shift")
{
    for (int n = 0; n <= 32; ++n) {
        CHECK(classify(n, Variant::Cl).real_dimension() == (std::uint64_t(1) << n));
        CHECK(classify(n, Variant::CCl).real_dimension() == (std::uint64_t(1) << (n + 1)));
        CHECK(classify(n, Variant::Clh).real_dimension() == (std::uint64_t(1) << (n + 2)));
        CHECK(classify(n, Variant::CClh).real_dimension() == (std::uint64_t(1) << (n + 3)));
        auto a = classify(n + 4, Variant::Cl), b = classify(n, Variant::Clh);
        CHECK(a.field == b.field);
        CHECK(a.simple == b.simple);
        CHECK(a.size == 2 * b.size);
        // periodicity of the complex algebras
        auto c2 = classify(n + 2, Variant::CCl), c0 = classify(n, Variant::CCl);
        CHECK(c2.size == 2 * c0.size);
        CHECK(c2.simple == c0.simple);
    }
}

TEST_CASE("center oracle: splitting and complex structure from the volume element")
{
    for (int n = 0; n <= 16; ++n) {
        Signature sig{n, 0};
        auto w = volume_element(sig);
        int sq = sgn((w * w).coeff(0));
        auto d = classify(n, Variant::Cl);
        bool odd = n % 2;
        CHECK(d.simple == !(odd && sq == 1));
        CHECK((d.field == Field::C) == (odd && sq == -1));
    }
}

TEST_CASE("indefinite classification")
{
    CHECK(classify_indefinite(1, 1, false).str() == "R(2)");
    CHECK(classify_indefinite(5, 1, false).str() == "H(4)");
    CHECK(classify_indefinite(4, 0, true).str() == "R(8)");
    for (int r = 0; r <= 12; ++r)
        for (int s = 0; s <= 12; ++s) {
            auto d = classify_indefinite(r, s, false);
            CHECK(d.real_dimension() == (std::uint64_t(1) << (r + s)));
            auto up = classify_indefinite(r + 1, s + 1, false);
            CHECK(up.field == d.field);
            CHECK(up.simple == d.simple);
            CHECK(up.size == 2 * d.size);
            auto h = classify_indefinite(r + 4, s, true);
            auto shifted = tensor(d, AlgebraDescriptor{Field::R, 8, true});
            CHECK(h == shifted);
            CHECK(classify_indefinite(r, s, true) == tensor(d, AlgebraDescriptor{Field::H, 1, true}));
        }
    for (int n = 0; n <= 20; ++n) {
        CHECK(classify_indefinite(n, 0, false) == classify(n, Variant::Cl));
        CHECK(classify_indefinite(n, 0, true) == classify(n, Variant::Clh));
    }
}

TEST_CASE("indefinite center oracle")
{
    for (int r = 0; r <= 8; ++r)
        for (int s = 0; s <= 8; ++s) {
            int n = r + s;
            auto d = classify_indefinite(r, s, false);
            int sq = volume_square_sign({r, s});
            CHECK(d.simple == !(n % 2 && sq == 1));
            CHECK((d.field == Field::C) == (n % 2 && sq == -1));
        }
}

TEST_CASE("graded tensor check")
{
    auto a = graded_tensor_check(1, 1);
    CHECK(a.pass());
    CHECK(a.dim_source == 4);
    auto b = graded_tensor_check(4, 4);
    CHECK(b.pass());
    CHECK(b.dim_target == 256);
    auto c = graded_tensor_check(2, 3);
    CHECK(c.pass());
    CHECK(c.grading_ok);
    CHECK(graded_tensor_check(6, 6).pass());
    CHECK_THROWS_AS(graded_tensor_check(7, 6), DomainError);
    CHECK(graded_tensor_check(7, 6, 13).pass());
}

TEST_CASE("descriptor and parse helpers")
{
    CHECK(parse_variant("CClh") == Variant::CClh);
    CHECK_THROWS_AS(parse_variant("Pin"), DomainError);
    CHECK(parse_field("H") == Field::H);
    CHECK_THROWS_AS(classify(-1, Variant::Cl), DomainError);
    CHECK(tensor(AlgebraDescriptor{Field::H, 1, true}, AlgebraDescriptor{Field::H, 1, true}).str() == "R(4)");
    CHECK(tensor(AlgebraDescriptor{Field::C, 1, true}, AlgebraDescriptor{Field::H, 2, true}).str() == "C(4)");
    CHECK_THROWS_AS(tensor(AlgebraDescriptor{Field::C, 1, false}, AlgebraDescriptor{Field::C, 1, true}), DomainError);
}
