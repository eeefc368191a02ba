#include "mzv/parse.hpp"

#include <cctype>

namespace mzv {

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char get() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        return s_[pos_++];
    }
    bool accept(char ch) {
        if (peek() == ch) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char ch) {
        if (!accept(ch)) fail(std::string("expected '") + ch + "'");
    }
    std::size_t pos() const { return pos_; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
    }

    mpz_class integer() {
        skip_ws();
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits.push_back(s_[pos_++]);
        if (digits.empty()) fail("expected digits");
        return mpz_class(digits);
    }

    bool digit_next() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    Rat rational() {
        mpz_class num = integer();
        if (accept('/')) {
            mpz_class den = integer();
            if (den == 0) fail("zero denominator");
            Rat q(num, den);
            q.canonicalize();
            return q;
        }
        return Rat(num);
    }

    // a sum of monomials: [rational]['c'['^' int]], at least one part each
    Scalar poly() {
        Scalar out;
        bool first = true;
        for (;;) {
            int sign = 1;
            skip_ws();
            if (accept('-'))
                sign = -1;
            else if (accept('+')) {
                // explicit plus
            } else if (!first) {
                break;
            }
            Rat coeff(1);
            bool have_coeff = false;
            if (digit_next()) {
                coeff = rational();
                have_coeff = true;
            }
            int power = 0;
            if (accept('c')) {
                power = 1;
                if (accept('^')) power = static_cast<int>(integer().get_si());
            } else if (!have_coeff) {
                fail("expected coefficient or 'c'");
            }
            if (sign < 0) coeff = -coeff;
            out += Scalar::monomial(coeff, power);
            first = false;
            skip_ws();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
        }
        return out;
    }

    Word word() {
        skip_ws();
        if (accept('1')) return Word();
        std::string letters;
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 'y'))
                letters.push_back(s_[pos_++]);
            else
                break;
        }
        if (letters.empty()) fail("expected word");
        return Word(letters);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Element parse_element(std::string_view text) {
    Lexer lex(text);
    ElementBuilder acc;
    bool first = true;
    while (!lex.done()) {
        int sign = 1;
        if (lex.accept('-'))
            sign = -1;
        else if (lex.accept('+')) {
            if (first) lex.fail("leading '+'");
        } else if (!first) {
            lex.fail("expected '+' or '-'");
        }
        Scalar coeff(1);
        Word w;
        char ch = lex.peek();
        if (ch == '(') {
            lex.get();
            coeff = lex.poly();
            lex.expect(')');
            if (lex.accept('*')) w = lex.word();
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            // "1" is both a rational and the empty word; either way the
            // term is the constant, possibly followed by '*word'
            coeff = Scalar(lex.rational());
            if (lex.accept('*')) w = lex.word();
        } else if (ch == 'x' || ch == 'y') {
            w = lex.word();
        } else {
            lex.fail("expected term");
        }
        if (sign < 0) coeff = -coeff;
        acc.add(w, coeff);
        first = false;
    }
    if (first) {
        Lexer l2(text);
        l2.fail("empty element");
    }
    return acc.build();
}

Word parse_word(std::string_view text) {
    std::string letters;
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '1') {
        ++i;
    } else {
        while (i < text.size() && (text[i] == 'x' || text[i] == 'y'))
            letters.push_back(text[i++]);
        if (letters.empty()) throw ParseError("expected word at position 0", i);
    }
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size()) throw ParseError("trailing characters after word", i);
    return letters.empty() ? Word() : Word(letters);
}

std::string format_element(const Element& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : e.terms()) {
        std::string body;
        bool neg = false;
        if (t.coeff.is_rational()) {
            const Rat& q = t.coeff.rat();
            neg = q < 0;
            Rat mag = neg ? Rat(-q) : q;
            if (t.word.empty()) {
                body = rat_str(mag);
            } else if (mag == 1) {
                body = t.word.str();
            } else {
                body = rat_str(mag) + "*" + t.word.str();
            }
        } else {
            body = "(" + t.coeff.str() + ")";
            if (!t.word.empty()) body += "*" + t.word.str();
        }
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

} // namespace mzv
