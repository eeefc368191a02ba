#ifndef MZV_ELEMENT_HPP
#define MZV_ELEMENT_HPP

#include "mzv/scalar.hpp"
#include "mzv/word.hpp"

#include <unordered_map>
#include <vector>

namespace mzv {

enum class Subalgebra { H, H1, H0 };

struct Term {
    Word word;
    Scalar coeff;
};

// An element of the word algebra H tensored with Q[c]: a normalized finite
// map Word -> Scalar.  Terms are kept sorted in canonical (weight, lex)
// order with no zero coefficients.
class Element {
public:
    Element() = default;
    explicit Element(const Word& w) { terms_.push_back({w, Scalar(1)}); }
    Element(const Word& w, Scalar s) {
        if (!s.is_zero()) terms_.push_back({w, std::move(s)});
    }
    static Element unit() { return Element(Word()); }
    static Element zero() { return Element(); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    Scalar coefficient(const Word& w) const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { a += b; return a; }
    friend Element operator-(Element a, const Element& b) { a -= b; return a; }
    Element operator-() const;

    Element scaled(const Scalar& s) const;
    Element scaled(const Rat& r) const;

    friend Element concat_mul(const Element& a, const Element& b);
    // concatenate a fixed word on one or both sides (order-preserving)
    Element word_concat(const Word& left, const Word& right) const;

    Element weight_component(int k) const;
    int min_weight() const; // -1 on zero
    int max_weight() const; // -1 on zero
    bool homogeneous_of(int k) const;

    Subalgebra classify() const;
    bool in(Subalgebra tag) const;

    // slice of the Q[c] structure: the element whose coefficients are the
    // rational coefficients of c^j
    Element c_coefficient(int j) const;
    int c_degree() const; // max degree over all terms, -1 on zero
    Element eval_c(const Rat& v) const;

    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    // internal: assumes sorted, normalized input
    static Element from_sorted(std::vector<Term> terms) {
        Element e;
        e.terms_ = std::move(terms);
        return e;
    }

private:
    std::vector<Term> terms_;
};

// Accumulates terms in arbitrary order, then builds a normalized Element.
class ElementBuilder {
public:
    void add(const Word& w, const Scalar& s) {
        if (s.is_zero()) return;
        acc_[w.packed()] += s;
    }
    void add(const Word& w, const Rat& r) {
        if (r == 0) return;
        acc_[w.packed()] += Scalar(r);
    }
    void add(const Element& e) {
        for (const auto& t : e.terms()) add(t.word, t.coeff);
    }
    void add_scaled(const Element& e, const Scalar& s) {
        if (s.is_zero()) return;
        for (const auto& t : e.terms()) add(t.word, t.coeff * s);
    }
    void add_scaled(const Element& e, const Rat& r) {
        if (r == 0) return;
        for (const auto& t : e.terms()) {
            Scalar sc = t.coeff;
            sc *= r;
            add(t.word, sc);
        }
    }
    Element build();

private:
    std::unordered_map<std::uint64_t, Scalar> acc_;
};

Element truncate_weight(const Element& e, int max_weight);

} // namespace mzv

#endif
