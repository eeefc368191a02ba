#ifndef MZV_BASIS_HPP
#define MZV_BASIS_HPP

#include "mzv/element.hpp"
#include "mzv/word.hpp"

#include <cstddef>
#include <vector>

namespace mzv {

// All words of weight k in the tagged subalgebra, canonical (lex) order.
// Counts: 2^k for H (k >= 0), 2^{k-1} for H1 (k >= 1), 2^{k-2} for H0
// (k >= 2); the empty word belongs to all three.
std::vector<Word> basis_words(int k, Subalgebra tag);

// Index of a weight-k H0 word in basis_words(k, H0).
std::size_t h0_index(const Word& w);

} // namespace mzv

#endif
