#ifndef MZV_RELATIONS_HPP
#define MZV_RELATIONS_HPP

#include "mzv/element.hpp"
#include "mzv/linalg.hpp"

#include <string>
#include <vector>

namespace mzv {

enum class Family { Duality, Derivation, QuasiDerivation, Ohno, KawashimaLinear };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// A family of weight-k vectors in H0, each conjecturally in ker Z, with
// purely rational coefficients (c eliminated by coefficient extraction) and
// a per-vector provenance record.
struct RelationSet {
    Family family;
    int weight = 0;
    std::vector<Element> vectors;
    std::vector<std::string> provenance;
};

RelationSet gen_duality(int k);             // (1 - tau) on the H0 basis
RelationSet gen_derivation(int k);          // d_n on lower-weight H0 bases
RelationSet gen_quasi_derivation(int k);    // c-coefficients of d_n^{(c)}
RelationSet gen_ohno(int k);                // sigma_l (1 - tau)
RelationSet gen_kawashima_linear(int k);    // x eps(w1 * w2), unordered pairs
RelationSet generate(Family f, int k);

// one line per vector: "<family> <weight> <provenance> : <element>"
std::string dump_relations(const RelationSet& rs);

QMatrix relation_matrix(const RelationSet& rs);
RankReport rank_union(const std::vector<const RelationSet*>& sets, std::uint64_t seed = 0,
                      int jobs = 1);

// w(n,c) = eps Lx^{-1} tau d_n^{(c)}(y), the element with
// d_n^{(c)} chi_x = chi_x H_w on H1
Element key_prop_witness(int n, const Scalar& cparam = Scalar::c());

struct KeyPropReport {
    bool ok = true;
    std::vector<std::string> violations;
};
// checks d_n^{(c)}(chi_x(v)) == chi_x(w * v) for every H1 basis word of
// weight <= W, symbolic c
KeyPropReport verify_key_prop(int n, int W);

struct InclusionReport {
    bool ok = true;
    std::size_t rank_link = 0;
    std::size_t rank_quasi = 0;
    std::size_t rank_union = 0;
    std::vector<std::string> failures; // provenance of non-member vectors
};
// membership of every quasi-derivation vector (and every duality vector)
// in the Q-span of the linear-Kawashima vectors at weight k
InclusionReport check_inclusion(int k);

struct ZetaApprox {
    long double value = 0;
    long long terms = 0;
    long double tail_bound = 0;
};
// truncated nested series over m1 > ... > mn with m1 <= N, via the
// cumulative-sum recurrence; DomainError for non-admissible words
ZetaApprox zeta_numeric(const Word& w, long long N);

struct NumericReport {
    bool ok = true;
    std::vector<std::string> flagged;
};
NumericReport numeric_check(const RelationSet& rs, long long N, double tol, int jobs = 1);

} // namespace mzv

#endif
