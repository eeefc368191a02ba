#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzv/basis.hpp"
#include "mzv/parse.hpp"
#include "mzv/products.hpp"

using namespace mzv;

namespace {
Element E(const char* text) { return parse_element(text); }
}

TEST_CASE("harmonic product base cases") {
    CHECK(harmonic_mul(E("y"), E("y")) == E("2*yy + xy"));
    CHECK(harmonic_mul(E("xy"), E("y")) == E("xyy + yxy + xxy"));
    for (const Word& w : basis_words(4, Subalgebra::H1)) {
        CHECK(harmonic_mul(Element::unit(), Element(w)) == Element(w));
        CHECK(harmonic_mul(Element(w), Element::unit()) == Element(w));
    }
    CHECK_THROWS_AS(harmonic_mul(E("yx"), E("y")), DomainError);
}

TEST_CASE("harmonic product is commutative and associative") {
    // all triples of H1 basis words with total weight <= 9
    for (int a = 1; a <= 7; ++a) {
        for (const Word& wa : basis_words(a, Subalgebra::H1)) {
            Element ea(wa);
            for (int b = 1; a + b <= 8; ++b) {
                for (const Word& wb : basis_words(b, Subalgebra::H1)) {
                    Element eb(wb);
                    Element ab = harmonic_mul(ea, eb);
                    CHECK(ab == harmonic_mul(eb, ea));
                    for (int cw = 1; a + b + cw <= 9; ++cw) {
                        for (const Word& wc : basis_words(cw, Subalgebra::H1)) {
                            Element ec(wc);
                            CHECK(harmonic_mul(ab, ec) == harmonic_mul(ea, harmonic_mul(eb, ec)));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("shuffle product") {
    CHECK(shuffle_mul(E("x"), E("y")) == E("xy + yx"));
    CHECK(shuffle_mul(E("xy"), E("y")) == E("2*xyy + yxy"));
    CHECK(shuffle_mul(Element::unit(), E("xyx")) == E("xyx"));

    // commutativity and associativity on H words, total weight <= 7
    for (int a = 1; a <= 5; ++a) {
        for (const Word& wa : basis_words(a, Subalgebra::H)) {
            Element ea(wa);
            for (int b = 1; a + b <= 6; ++b) {
                for (const Word& wb : basis_words(b, Subalgebra::H)) {
                    Element eb(wb);
                    Element ab = shuffle_mul(ea, eb);
                    CHECK(ab == shuffle_mul(eb, ea));
                    for (int cw = 1; a + b + cw <= 7; ++cw) {
                        for (const Word& wc : basis_words(cw, Subalgebra::H)) {
                            CHECK(shuffle_mul(ab, Element(wc)) ==
                                  shuffle_mul(ea, shuffle_mul(eb, Element(wc))));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("both products are weight-additive and agree on constants") {
    for (int a = 1; a <= 4; ++a)
        for (const Word& wa : basis_words(a, Subalgebra::H1))
            for (int b = 1; b <= 4; ++b)
                for (const Word& wb : basis_words(b, Subalgebra::H1)) {
                    Element h = harmonic_mul(Element(wa), Element(wb));
                    Element s = shuffle_mul(Element(wa), Element(wb));
                    CHECK(h.homogeneous_of(a + b));
                    CHECK(s.homogeneous_of(a + b));
                }
    Element half = Element(Word(), Scalar(Rat(1, 2)));
    Element three(Word(), Scalar(3));
    CHECK(harmonic_mul(half, three) == Element(Word(), Scalar(Rat(3, 2))));
    CHECK(shuffle_mul(half, three) == Element(Word(), Scalar(Rat(3, 2))));
}

TEST_CASE("harmonic operator") {
    LinearOperator hy = harmonic_op(E("y"));
    CHECK(hy.apply(Element::unit()) == E("y"));
    CHECK(hy.apply(E("xy")) == E("xyy + yxy + xxy"));
    CHECK(harmonic_op(Element::unit()).apply(E("xyy")) == E("xyy"));

    // the harmonic product rule as an operator identity, small instance:
    // [H_{z_1 y}, L_{z_1}](v) = L_{z_1} H_y L_{z_1}(v) + L_{z_2} H_y(v)
    Element z1y = E("yy");
    for (const Word& v : basis_words(3, Subalgebra::H1)) {
        Element ev(v);
        Element lhs = harmonic_mul(z1y, ev.word_concat(Word("y"), Word())) -
                      harmonic_mul(z1y, ev).word_concat(Word("y"), Word());
        Element rhs = harmonic_mul(E("y"), ev.word_concat(Word("y"), Word()))
                          .word_concat(Word("y"), Word()) +
                      harmonic_mul(E("y"), ev).word_concat(Word("xy"), Word());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("harmonic product extends bilinearly over Q[c]") {
    Element a = E("(c)*y + xy");
    Element b = E("(1+c)*y");
    Element prod = harmonic_mul(a, b);
    Element expect = harmonic_mul(E("y"), E("y")).scaled(Scalar::c() * (Scalar(1) + Scalar::c())) +
                     harmonic_mul(E("xy"), E("y")).scaled(Scalar(1) + Scalar::c());
    CHECK(prod == expect);
}
