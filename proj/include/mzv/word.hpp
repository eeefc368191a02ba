#ifndef MZV_WORD_HPP
#define MZV_WORD_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

// A word over the alphabet {x, y}; the empty word stands for 1.
//
// Letters are bit-packed, x = 0 and y = 1, with the leftmost letter in the
// most significant position of a length-bit field.  For words of equal
// length the packed value compares exactly like lexicographic order with
// x < y, so (length, bits) is the canonical basis order.
class Word {
public:
    static constexpr int kMaxLen = 48;

    constexpr Word() = default;

    explicit Word(std::string_view letters) {
        for (char ch : letters) {
            if (ch == 'x')
                append_bit(0);
            else if (ch == 'y')
                append_bit(1);
            else
                assert(false && "word letters must be x or y");
        }
    }

    static Word letter_x() { return Word(0, 1); }
    static Word letter_y() { return Word(1, 1); }
    static Word letter(int bit) { return Word(static_cast<std::uint64_t>(bit & 1), 1); }

    // x^{k-1} y
    static Word z(int k) {
        assert(k >= 1);
        return Word(1, k);
    }

    static Word from_bits(std::uint64_t bits, int len) { return Word(bits, len); }

    int weight() const { return len_; }
    int depth() const { return std::popcount(bits_); }
    bool empty() const { return len_ == 0; }

    // letter i counted from the left: 0 = x, 1 = y
    int letter_at(int i) const {
        assert(i >= 0 && i < len_);
        return static_cast<int>((bits_ >> (len_ - 1 - i)) & 1u);
    }
    int first_letter() const { return letter_at(0); }
    int last_letter() const { return static_cast<int>(bits_ & 1u); }

    std::uint64_t bits() const { return bits_; }

    std::uint64_t packed() const {
        return (static_cast<std::uint64_t>(len_) << kMaxLen) | bits_;
    }
    static Word from_packed(std::uint64_t p) {
        return Word(p & ((std::uint64_t(1) << kMaxLen) - 1), static_cast<int>(p >> kMaxLen));
    }

    friend Word concat(const Word& a, const Word& b) {
        assert(a.len_ + b.len_ <= kMaxLen);
        return Word((a.bits_ << b.len_) | b.bits_, a.len_ + b.len_);
    }

    Word prefix(int n) const {
        assert(n >= 0 && n <= len_);
        return Word(bits_ >> (len_ - n), n);
    }
    Word suffix(int n) const {
        assert(n >= 0 && n <= len_);
        return Word(bits_ & mask(n), n);
    }
    Word drop_first() const { return suffix(len_ - 1); }
    Word drop_last() const { return prefix(len_ - 1); }

    // reverse the word and swap x <-> y (the anti-automorphism tau)
    Word reversed_swapped() const {
        std::uint64_t b = ~bits_ & mask(len_);
        std::uint64_t r = 0;
        for (int i = 0; i < len_; ++i) {
            r = (r << 1) | (b & 1u);
            b >>= 1;
        }
        return Word(r, len_);
    }

    bool starts_with_x() const { return len_ > 0 && first_letter() == 0; }
    bool ends_with_y() const { return len_ > 0 && last_letter() == 1; }

    // member of Q + Hy (resp. Q + xHy)
    bool in_h1() const { return empty() || ends_with_y(); }
    bool in_h0() const { return empty() || (starts_with_x() && ends_with_y()); }

    // z-letter factorization of an H1 word: xyy -> {2, 1}. Empty for 1.
    // Must not be called on words outside H1.
    std::vector<int> z_parts() const {
        assert(in_h1());
        std::vector<int> parts;
        int run = 0;
        for (int i = 0; i < len_; ++i) {
            ++run;
            if (letter_at(i) == 1) {
                parts.push_back(run);
                run = 0;
            }
        }
        return parts;
    }

    static Word from_z_parts(const std::vector<int>& parts) {
        Word w;
        for (int k : parts) w = concat(w, z(k));
        return w;
    }

    std::string str() const {
        if (len_ == 0) return "1";
        std::string s;
        s.reserve(len_);
        for (int i = 0; i < len_; ++i) s.push_back(letter_at(i) ? 'y' : 'x');
        return s;
    }

    friend bool operator==(const Word& a, const Word& b) {
        return a.bits_ == b.bits_ && a.len_ == b.len_;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b) { return a.packed() < b.packed(); }

private:
    Word(std::uint64_t bits, int len) : bits_(bits), len_(len) {}

    static std::uint64_t mask(int n) {
        return n == 0 ? 0 : (~std::uint64_t(0) >> (64 - n));
    }
    void append_bit(int b) {
        assert(len_ < kMaxLen);
        bits_ = (bits_ << 1) | static_cast<std::uint64_t>(b);
        ++len_;
    }

    std::uint64_t bits_ = 0;
    int len_ = 0;
};

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::uint64_t v = w.packed();
        v ^= v >> 33;
        v *= 0xff51afd7ed558ccdULL;
        v ^= v >> 33;
        return static_cast<std::size_t>(v);
    }
};

} // namespace mzv

#endif
