#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzv/basis.hpp"
#include "mzv/operators.hpp"
#include "mzv/parse.hpp"
#include "mzv/verify.hpp"

#include <random>

using namespace mzv;

namespace {

Element E(const char* text) { return parse_element(text); }
const Scalar c = Scalar::c();

} // namespace

TEST_CASE("tau reverses and swaps") {
    CHECK(tau(E("xxy")) == E("xyy"));
    CHECK(tau(E("xy")) == E("xy"));
    CHECK(tau(E("xxyy")) == E("xxyy"));
    CHECK(tau(E("(1+c)*xxy - y")) == E("(1+c)*xyy - x"));
}

TEST_CASE("epsilon substitutes x -> x+y, y -> -y") {
    CHECK(epsilon(E("y")) == E("-y"));
    CHECK(epsilon(E("xy")) == E("-xy - yy"));
    CHECK(epsilon(E("2*yy + xy")) == E("yy - xy"));
}

TEST_CASE("derivations extend letter images by Leibniz") {
    LinearOperator d1 = derivation_dn(1);
    CHECK(d1.apply(E("xy")) == E("xyy - xxy"));
    CHECK(degree_op().apply(E("xxy")) == E("3*xxy"));
    CHECK(derivation_dn(2).apply(E("x")) == E("xxy + xyy"));
    CHECK(derivation_Dn(1).apply(E("xyy")) == E("xxyy + xyxy"));
    CHECK(derivation_Dbar(2).apply(E("x")) == E("xyy"));

    // linearity over Q[c] on a random combination
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        Element a(Word::from_bits(rng() & 15, 4)), b(Word::from_bits(rng() & 7, 3));
        Scalar alpha = Scalar::monomial(Rat((int)(rng() % 7) - 3, 1 + (int)(rng() % 4)), rng() % 3);
        Element combo = a.scaled(alpha) + b;
        CHECK(d1.apply(combo) == d1.apply(a).scaled(alpha) + d1.apply(b));
    }
}

TEST_CASE("twisted theta matches its defining values") {
    CHECK(theta_twisted(ThetaVariant::Standard, E("x")) == E("xx + 1/2*xy + 1/2*yx"));
    // degree-1 coefficient of theta_c(xy) is d1(x) H(y) = xyy
    Element txy = theta_twisted(ThetaVariant::Standard, E("xy"));
    CHECK(txy.c_coefficient(1) == E("xyy"));
    // theta-hat^c - theta^{-c} on xy equals c d1(H-1)(xy) = c (xyy - xxy)
    Element diff = theta_twisted(ThetaVariant::Hat, E("xy"), c) -
                   theta_twisted(ThetaVariant::Standard, E("xy"), -c);
    CHECK(diff == E("(c)*xyy - (c)*xxy"));
    // at c = 0 both reduce to the ordinary theta
    CHECK(theta_twisted(ThetaVariant::Standard, E("xyx")).c_coefficient(0) ==
          theta_op().apply(E("xyx")));
}

TEST_CASE("quasi-derivations specialize correctly") {
    CHECK(quasi_derivation(ThetaVariant::Standard, 1).apply(E("y")) == E("-xy"));
    CHECK(quasi_derivation(ThetaVariant::Standard, 2).apply(E("x")).c_coefficient(0) ==
          E("xxy + xyy"));
    // d_n^{(c)}(z) = 0
    for (int n = 1; n <= 4; ++n) {
        CHECK(quasi_derivation(ThetaVariant::Standard, n).apply(E("x + y")).is_zero());
    }
    // [d_n^{(c)}, R_z] = 0 on all words of weight <= 5
    Element z = E("x + y");
    for (int n = 1; n <= 4; ++n) {
        LinearOperator dn = quasi_derivation(ThetaVariant::Standard, n);
        for (int k = 0; k <= 5; ++k)
            for (const Word& w : basis_words(k, Subalgebra::H))
                CHECK(dn.apply(concat_mul(Element(w), z)) == concat_mul(dn.apply_word(w), z));
    }
}

TEST_CASE("phi family follows its recursion") {
    LinearOperator phi0 = phi_op(0);
    for (const Word& w : basis_words(4, Subalgebra::H)) CHECK(phi0.apply_word(w) == Element(w));

    CHECK(phi_op(1).apply(E("y")) == E("yx + yy - (c)*xy"));

    // R_z phi_2 = (1/2) ad(theta_c)^2 (R_z) on words <= 5
    LinearOperator phi2 = phi_op(2);
    LinearOperator rhs =
        ad_power(theta_twisted_op(ThetaVariant::Standard), mul_op(Side::Right, E("x+y")), 2);
    for (int k = 0; k <= 5; ++k)
        for (const Word& w : basis_words(k, Subalgebra::H))
            CHECK(concat_mul(phi2.apply_word(w), E("x+y")) ==
                  rhs.apply(Element(w)).scaled(Rat(1, 2)));
}

TEST_CASE("psi family") {
    LinearOperator psi1 = psi_op(1);
    for (const Word& w : basis_words(3, Subalgebra::H))
        CHECK(psi1.apply(Element(w)) == Element(concat(w, Word("xy"))));
    CHECK(psi_op(2).apply(Element::unit()) == E("xxy + xyy + (c)*xyy"));
    // (A_2): [d_2^{(c)}, R_x] = psi_2^{(c)} on words of weight <= 5
    LinearOperator d2 = quasi_derivation(ThetaVariant::Standard, 2);
    LinearOperator psi2 = psi_op(2);
    for (int k = 0; k <= 5; ++k)
        for (const Word& w : basis_words(k, Subalgebra::H)) {
            Element lhs = d2.apply(Element(concat(w, Word::letter_x()))) -
                          d2.apply_word(w).word_concat(Word(), Word::letter_x());
            CHECK(lhs == psi2.apply(Element(w)));
        }
}

TEST_CASE("multiplication operators") {
    CHECK(mul_op(Side::Left, Word::letter_x()).apply(E("yy")) == E("xyy"));
    CHECK(mul_op(Side::Right, Word("xy")).apply(E("y")) == E("yxy"));
    // R_{ww'} = R_{w'} R_w
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        Word a = Word::from_bits(rng() & 7, 3), b = Word::from_bits(rng() & 3, 2);
        Word v = Word::from_bits(rng() & 15, 4);
        Element lhs = mul_op(Side::Right, concat(a, b)).apply(Element(v));
        Element rhs = mul_op(Side::Right, b).apply(mul_op(Side::Right, a).apply(Element(v)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exact division strips a letter or reports the offender") {
    CHECK(exact_divide(Side::Left, 0, E("xyy - xxy")) == E("yy - xy"));
    Element d2y = quasi_derivation(ThetaVariant::Standard, 2).apply(E("y"));
    CHECK(d2y.in(Subalgebra::H0));
    Element stripped = exact_divide(Side::Right, 1, d2y);
    CHECK(stripped.word_concat(Word(), Word::letter_y()) == d2y);
    CHECK_THROWS_AS(exact_divide(Side::Left, 0, E("yy")), DivisionError);
}

TEST_CASE("truncated substitution endomorphisms") {
    CHECK(delta_endo(4).apply(E("x")) == E("x + xy + xyy + xyyy"));
    CHECK(cap_phi_endo(3).apply(E("x + y")) == E("x + y - xy - yy + xyy + yyy"));
    CHECK(sigma_endo(4).apply(E("xy")) == E("xy + xxy + xxxy"));
    CHECK(sigma_inv_endo(6).apply(E("xy")) == E("xy - xxy"));
    CHECK_THROWS_AS(delta_endo(3).apply(E("xxyy")), TruncationError);
}

TEST_CASE("sigma_l by the composition formula") {
    CHECK(sigma_l_direct(1, E("xy")) == E("xxy"));
    CHECK(sigma_l_direct(1, E("xyy")) == E("xxyy + xyxy"));
    CHECK(sigma_l_direct(0, E("xyy + (c)*xy")) == E("xyy + (c)*xy"));
    CHECK(sigma_l_direct(2, E("1")).is_zero());
    CHECK(sigma_l_direct(0, E("1")) == Element::unit());
    CHECK_THROWS_AS(sigma_l_direct(1, E("yx")), DomainError);
}

TEST_CASE("exp of a weighted derivation family") {
    LinearOperator expD = exp_derivation([](int n) { return derivation_Dn(n); }, {6});
    Element full = expD.apply(E("xyy"));
    CHECK(full.weight_component(3) == E("xyy")); // l = 0 piece
    CHECK(full.weight_component(4) == sigma_l_direct(1, E("xyy")));
    CHECK(full.weight_component(6) == sigma_l_direct(3, E("xyy")));

    LinearOperator expd = exp_derivation([](int n) { return derivation_dn(n); }, {4});
    CHECK(expd.apply(E("x")) == delta_endo(4).apply(E("x")));

    // weight_component example through the truncated automorphism
    CHECK(delta_endo(4).apply(E("x")).weight_component(3) == E("xyy"));
}

TEST_CASE("weight shifts propagate through the compositional structure") {
    CHECK(tau_op().weight_shift() == 0);
    CHECK(derivation_dn(3).weight_shift() == 3);
    CHECK(theta_twisted_op(ThetaVariant::Standard).weight_shift() == 1);
    CHECK(quasi_derivation(ThetaVariant::Standard, 4).weight_shift() == 4);
    CHECK(phi_op(3).weight_shift() == 3);
    CHECK(psi_op(3).weight_shift() == 4); // R_y phi_2 R_x
    CHECK(mul_op(Side::Right, Word("xy")).weight_shift() == 2);
    CHECK(!delta_endo(6).weight_shift().has_value()); // mixed
}

TEST_CASE("operator identity suite at reduced bounds") {
    VerifyOptions opts;
    opts.max_weight = 5;
    opts.n_max = 3;
    opts.comm_output_cap = 10;
    for (const auto& r : suite_operators(opts)) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
