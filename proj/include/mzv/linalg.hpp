#ifndef MZV_LINALG_HPP
#define MZV_LINALG_HPP

#include "mzv/element.hpp"
#include "mzv/errors.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mzv {

// Dense rational matrix; rows are relation vectors in the canonical
// weight-k H0 word basis (columns in canonical order).
struct QMatrix {
    std::size_t cols = 0;
    std::vector<std::vector<Rat>> rows;
};

// Coordinates of weight-homogeneous H0 elements with rational scalars.
// Throws WeightMismatch on a wrong-weight vector, DomainError if a word
// falls outside H0, and requires c-free (degree <= 0) coefficients.
QMatrix relation_matrix(const std::vector<Element>& vectors, int weight);

enum class RankMethod { FractionFree, ModularCertified };

struct RankReport {
    std::size_t rank = 0;
    RankMethod method = RankMethod::FractionFree;
    std::vector<std::uint64_t> primes_used;
};

// Exact rank by fraction-free (Bareiss) elimination on integer-scaled rows.
// Deterministic: pivots by first nonzero canonical column.
std::size_t rank_fraction_free(const QMatrix& m);

// Default certified path: ranks modulo deterministic word-sized primes
// until two agree, then an exact fraction-free confirmation on the pivot
// rows extracted from the modular elimination.  Falls back to full
// fraction-free elimination if the confirmation disagrees.
RankReport rank(const QMatrix& m, std::uint64_t seed = 0, int jobs = 1);

// Exact span membership with certificates.  Built once from a basis list,
// then queried repeatedly; certificates are coefficients over the original
// basis vectors.
class SpanChecker {
public:
    SpanChecker(const std::vector<Element>& basis, int weight);

    std::size_t rank() const { return echelon_.size(); }
    int weight() const { return weight_; }

    bool contains(const Element& v) const;
    // nullopt if v is outside the span
    std::optional<std::vector<Rat>> certificate(const Element& v) const;

private:
    std::vector<Rat> coords(const Element& v) const;

    int weight_;
    std::size_t cols_;
    std::size_t n_basis_;
    std::vector<std::vector<Rat>> echelon_;  // reduced rows
    std::vector<std::size_t> pivot_col_;
    std::vector<std::vector<Rat>> combo_;    // echelon row as combo of basis rows
};

// Convenience wrapper: true with certificate coefficients, or nullopt.
std::optional<std::vector<Rat>> in_span(const std::vector<Element>& basis, const Element& v);

} // namespace mzv

#endif
