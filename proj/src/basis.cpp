#include "mzv/basis.hpp"

#include <cassert>

namespace mzv {

std::vector<Word> basis_words(int k, Subalgebra tag) {
    assert(k >= 0);
    std::vector<Word> out;
    if (k == 0) {
        out.push_back(Word());
        return out;
    }
    switch (tag) {
    case Subalgebra::H:
        out.reserve(std::size_t(1) << k);
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << k); ++b)
            out.push_back(Word::from_bits(b, k));
        break;
    case Subalgebra::H1:
        out.reserve(std::size_t(1) << (k - 1));
        for (std::uint64_t b = 1; b < (std::uint64_t(1) << k); b += 2)
            out.push_back(Word::from_bits(b, k));
        break;
    case Subalgebra::H0:
        if (k < 2) return out;
        out.reserve(std::size_t(1) << (k - 2));
        for (std::uint64_t b = 1; b < (std::uint64_t(1) << (k - 1)); b += 2)
            out.push_back(Word::from_bits(b, k));
        break;
    }
    return out;
}

std::size_t h0_index(const Word& w) {
    assert(w.in_h0() && !w.empty());
    return static_cast<std::size_t>((w.bits() - 1) / 2);
}

} // namespace mzv
