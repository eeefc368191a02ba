#include "mzv/products.hpp"

#include <mutex>
#include <unordered_map>

namespace mzv {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
        std::uint64_t v = p.first * 0x9e3779b97f4a7c15ULL ^ p.second;
        v ^= v >> 33;
        v *= 0xff51afd7ed558ccdULL;
        v ^= v >> 29;
        return static_cast<std::size_t>(v);
    }
};

// leading z-letter of a nonempty H1 word: returns k and the remainder of z_k r
std::pair<int, Word> strip_z(const Word& w) {
    int k = 1;
    while (w.letter_at(k - 1) == 0) ++k;
    return {k, w.suffix(w.weight() - k)};
}

class HarmonicCtx {
public:
    Element mul(const Word& a, const Word& b) {
        if (a.empty()) return Element(b);
        if (b.empty()) return Element(a);
        // commutative: canonical operand order doubles memo hits
        const Word &lo = a < b ? a : b, &hi = a < b ? b : a;
        auto key = std::make_pair(lo.packed(), hi.packed());
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        auto [k, ra] = strip_z(lo);
        auto [l, rb] = strip_z(hi);
        Element res = mul(ra, hi).word_concat(Word::z(k), Word()) +
                      mul(lo, rb).word_concat(Word::z(l), Word()) +
                      mul(ra, rb).word_concat(Word::z(k + l), Word());
        std::lock_guard<std::mutex> lock(mu_);
        return memo_.emplace(key, std::move(res)).first->second;
    }

private:
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Element, PairHash> memo_;
    std::mutex mu_;
};

HarmonicCtx& harmonic_ctx() {
    static HarmonicCtx ctx;
    return ctx;
}

class ShuffleCtx {
public:
    Element mul(const Word& a, const Word& b) {
        if (a.empty()) return Element(b);
        if (b.empty()) return Element(a);
        const Word &lo = a < b ? a : b, &hi = a < b ? b : a;
        auto key = std::make_pair(lo.packed(), hi.packed());
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        Element res = mul(lo.drop_first(), hi).word_concat(lo.prefix(1), Word()) +
                      mul(lo, hi.drop_first()).word_concat(hi.prefix(1), Word());
        std::lock_guard<std::mutex> lock(mu_);
        return memo_.emplace(key, std::move(res)).first->second;
    }

private:
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Element, PairHash> memo_;
    std::mutex mu_;
};

ShuffleCtx& shuffle_ctx() {
    static ShuffleCtx ctx;
    return ctx;
}

void require_h1(const Element& e, const char* who) {
    for (const auto& t : e.terms())
        if (!t.word.in_h1())
            throw DomainError(std::string(who) + " operand outside H1: word " + t.word.str());
}

} // namespace

Element harmonic_mul(const Element& a, const Element& b) {
    require_h1(a, "harmonic product");
    require_h1(b, "harmonic product");
    ElementBuilder acc;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            acc.add_scaled(harmonic_ctx().mul(ta.word, tb.word), ta.coeff * tb.coeff);
    return acc.build();
}

Element shuffle_mul(const Element& a, const Element& b) {
    ElementBuilder acc;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            acc.add_scaled(shuffle_ctx().mul(ta.word, tb.word), ta.coeff * tb.coeff);
    return acc.build();
}

LinearOperator harmonic_op(const Element& w) {
    require_h1(w, "harmonic operator");
    Element ww = w;
    return LinearOperator::from_elem_action(
        "Hop", [ww](const Element& e) { return harmonic_mul(ww, e); });
}

Element one_over_one_plus_y(int W) {
    ElementBuilder acc;
    Rat s(1);
    for (int j = 0; j <= W; ++j) {
        acc.add(Word::from_bits(j == 0 ? 0 : ((std::uint64_t(1) << j) - 1), j), s);
        s = -s;
    }
    return acc.build();
}

} // namespace mzv
