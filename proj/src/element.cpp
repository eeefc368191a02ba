#include "mzv/element.hpp"

#include <algorithm>

namespace mzv {

Scalar Element::coefficient(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Word& v) { return t.word < v; });
    if (it != terms_.end() && it->word == w) return it->coeff;
    return Scalar();
}

Element& Element::operator+=(const Element& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae && b != be) {
        if (a->word < b->word) {
            out.push_back(std::move(*a));
            ++a;
        } else if (b->word < a->word) {
            out.push_back(*b);
            ++b;
        } else {
            Scalar s = std::move(a->coeff);
            s += b->coeff;
            if (!s.is_zero()) out.push_back({a->word, std::move(s)});
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), std::make_move_iterator(a), std::make_move_iterator(ae));
    out.insert(out.end(), b, be);
    terms_ = std::move(out);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    *this += o.operator-();
    return *this;
}

Element Element::operator-() const {
    Element e(*this);
    for (auto& t : e.terms_) t.coeff = -t.coeff;
    return e;
}

Element Element::scaled(const Scalar& s) const {
    if (s.is_zero()) return Element();
    Element e;
    e.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Scalar c = t.coeff * s;
        if (!c.is_zero()) e.terms_.push_back({t.word, std::move(c)});
    }
    return e;
}

Element Element::scaled(const Rat& r) const {
    if (r == 0) return Element();
    Element e(*this);
    for (auto& t : e.terms_) t.coeff *= r;
    return e;
}

Element concat_mul(const Element& a, const Element& b) {
    if (a.is_zero() || b.is_zero()) return Element();
    // single-term fast path keeps the order
    if (a.size() == 1)
        return b.word_concat(a.terms()[0].word, Word()).scaled(a.terms()[0].coeff);
    if (b.size() == 1)
        return a.word_concat(Word(), b.terms()[0].word).scaled(b.terms()[0].coeff);
    ElementBuilder acc;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            acc.add(concat(ta.word, tb.word), ta.coeff * tb.coeff);
    return acc.build();
}

Element Element::word_concat(const Word& left, const Word& right) const {
    // appending the same prefix/suffix to every term preserves canonical order
    Element e;
    e.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        e.terms_.push_back({concat(concat(left, t.word), right), t.coeff});
    return e;
}

Element Element::weight_component(int k) const {
    Element e;
    for (const auto& t : terms_)
        if (t.word.weight() == k) e.terms_.push_back(t);
    return e;
}

int Element::min_weight() const {
    return terms_.empty() ? -1 : terms_.front().word.weight();
}

int Element::max_weight() const {
    return terms_.empty() ? -1 : terms_.back().word.weight();
}

bool Element::homogeneous_of(int k) const {
    for (const auto& t : terms_)
        if (t.word.weight() != k) return false;
    return true;
}

Subalgebra Element::classify() const {
    bool h0 = true, h1 = true;
    for (const auto& t : terms_) {
        if (!t.word.in_h0()) h0 = false;
        if (!t.word.in_h1()) h1 = false;
    }
    if (h0) return Subalgebra::H0;
    if (h1) return Subalgebra::H1;
    return Subalgebra::H;
}

bool Element::in(Subalgebra tag) const {
    switch (tag) {
    case Subalgebra::H: return true;
    case Subalgebra::H1:
        for (const auto& t : terms_)
            if (!t.word.in_h1()) return false;
        return true;
    case Subalgebra::H0:
        for (const auto& t : terms_)
            if (!t.word.in_h0()) return false;
        return true;
    }
    return false;
}

Element Element::c_coefficient(int j) const {
    Element e;
    for (const auto& t : terms_) {
        const Rat& q = t.coeff.coeff(j);
        if (q != 0) e.terms_.push_back({t.word, Scalar(q)});
    }
    return e;
}

int Element::c_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.coeff.degree());
    return d;
}

Element Element::eval_c(const Rat& v) const {
    Element e;
    for (const auto& t : terms_) {
        Rat q = t.coeff.eval(v);
        if (q != 0) e.terms_.push_back({t.word, Scalar(std::move(q))});
    }
    return e;
}

bool operator==(const Element& a, const Element& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].word != b.terms_[i].word || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Element ElementBuilder::build() {
    std::vector<Term> out;
    out.reserve(acc_.size());
    for (auto& [packed, s] : acc_)
        if (!s.is_zero()) out.push_back({Word::from_packed(packed), std::move(s)});
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.word < b.word; });
    acc_.clear();
    return Element::from_sorted(std::move(out));
}

Element truncate_weight(const Element& e, int max_weight) {
    std::vector<Term> out;
    for (const auto& t : e.terms()) {
        if (t.word.weight() > max_weight) break; // terms are weight-sorted
        out.push_back(t);
    }
    return Element::from_sorted(std::move(out));
}

} // namespace mzv
