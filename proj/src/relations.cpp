#include "mzv/relations.hpp"

#include "mzv/basis.hpp"
#include "mzv/operators.hpp"
#include "mzv/parallel.hpp"
#include "mzv/parse.hpp"
#include "mzv/products.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace mzv {

const char* family_name(Family f) {
    switch (f) {
    case Family::Duality: return "duality";
    case Family::Derivation: return "dn";
    case Family::QuasiDerivation: return "dnc";
    case Family::Ohno: return "ohno";
    case Family::KawashimaLinear: return "link";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "duality") return Family::Duality;
    if (name == "dn" || name == "derivation") return Family::Derivation;
    if (name == "dnc" || name == "quasi") return Family::QuasiDerivation;
    if (name == "ohno") return Family::Ohno;
    if (name == "link" || name == "kawashima") return Family::KawashimaLinear;
    throw DomainError("unknown relation family: " + name);
}

RelationSet gen_duality(int k) {
    assert(k >= 2);
    RelationSet rs{Family::Duality, k, {}, {}};
    for (const Word& w : basis_words(k, Subalgebra::H0)) {
        rs.vectors.push_back(Element(w) - Element(tau_word(w)));
        rs.provenance.push_back("w=" + w.str());
    }
    return rs;
}

RelationSet gen_derivation(int k) {
    assert(k >= 3);
    RelationSet rs{Family::Derivation, k, {}, {}};
    for (int n = 1; n <= k - 2; ++n) {
        LinearOperator dn = derivation_dn(n);
        for (const Word& w : basis_words(k - n, Subalgebra::H0)) {
            rs.vectors.push_back(dn.apply_word(w));
            rs.provenance.push_back("n=" + std::to_string(n) + " w=" + w.str());
        }
    }
    return rs;
}

RelationSet gen_quasi_derivation(int k) {
    assert(k >= 3);
    RelationSet rs{Family::QuasiDerivation, k, {}, {}};
    for (int n = 1; n <= k - 2; ++n) {
        LinearOperator dnc = quasi_derivation(ThetaVariant::Standard, n);
        const auto words = basis_words(k - n, Subalgebra::H0);
        std::vector<Element> images(words.size());
        parallel_for(words.size(), 0, [&](std::size_t i) {
            images[i] = dnc.apply_word(words[i]);
        });
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (int j = 0; j <= n - 1; ++j) {
                rs.vectors.push_back(images[i].c_coefficient(j));
                rs.provenance.push_back("n=" + std::to_string(n) + " j=" + std::to_string(j) +
                                        " w=" + words[i].str());
            }
        }
    }
    return rs;
}

RelationSet gen_ohno(int k) {
    assert(k >= 3);
    RelationSet rs{Family::Ohno, k, {}, {}};
    for (int l = 0; l <= k - 2; ++l) {
        for (const Word& w : basis_words(k - l, Subalgebra::H0)) {
            Element src = Element(w) - Element(tau_word(w));
            rs.vectors.push_back(sigma_l_direct(l, src));
            rs.provenance.push_back("l=" + std::to_string(l) + " w=" + w.str());
        }
    }
    return rs;
}

RelationSet gen_kawashima_linear(int k) {
    assert(k >= 3);
    RelationSet rs{Family::KawashimaLinear, k, {}, {}};
    // unordered pairs of Hy words with weights summing to k-1
    struct Job {
        Word w1, w2;
    };
    std::vector<Job> jobs;
    for (int a = 1; a <= (k - 1) / 2; ++a) {
        int b = k - 1 - a;
        auto basis_a = basis_words(a, Subalgebra::H1);
        auto basis_b = basis_words(b, Subalgebra::H1);
        for (const Word& w1 : basis_a) {
            for (const Word& w2 : basis_b) {
                if (a == b && w2 < w1) continue;
                jobs.push_back({w1, w2});
            }
        }
    }
    rs.vectors.resize(jobs.size());
    parallel_for(jobs.size(), 0, [&](std::size_t i) {
        Element prod = harmonic_mul(Element(jobs[i].w1), Element(jobs[i].w2));
        rs.vectors[i] = epsilon(prod).word_concat(Word::letter_x(), Word());
    });
    for (const auto& j : jobs)
        rs.provenance.push_back("w1=" + j.w1.str() + " w2=" + j.w2.str());
    return rs;
}

RelationSet generate(Family f, int k) {
    switch (f) {
    case Family::Duality: return gen_duality(k);
    case Family::Derivation: return gen_derivation(k);
    case Family::QuasiDerivation: return gen_quasi_derivation(k);
    case Family::Ohno: return gen_ohno(k);
    case Family::KawashimaLinear: return gen_kawashima_linear(k);
    }
    throw DomainError("bad family");
}

std::string dump_relations(const RelationSet& rs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < rs.vectors.size(); ++i)
        os << family_name(rs.family) << ' ' << rs.weight << ' ' << rs.provenance[i] << " : "
           << format_element(rs.vectors[i]) << '\n';
    return os.str();
}

QMatrix relation_matrix(const RelationSet& rs) { return relation_matrix(rs.vectors, rs.weight); }

RankReport rank_union(const std::vector<const RelationSet*>& sets, std::uint64_t seed, int jobs) {
    if (sets.empty()) return {};
    int k = sets.front()->weight;
    for (const auto* s : sets)
        if (s->weight != k) throw WeightMismatch("rank_union over mixed weights");
    QMatrix all;
    all.cols = std::size_t(1) << (k - 2);
    for (const auto* s : sets) {
        QMatrix m = relation_matrix(*s);
        for (auto& row : m.rows) all.rows.push_back(std::move(row));
    }
    return rank(all, seed, jobs);
}

// ---------------------------------------------------------- key proposition

Element key_prop_witness(int n, const Scalar& cparam) {
    assert(n >= 1);
    LinearOperator dnc = cparam == Scalar::c()
                             ? quasi_derivation(ThetaVariant::Standard, n)
                             : quasi_derivation(ThetaVariant::Standard, n, cparam);
    Element img = dnc.apply_word(Word::letter_y());
    // the image is guaranteed to land in H0, so the head x strips exactly
    return epsilon(exact_divide(Side::Left, 0, tau(img)));
}

namespace {

Element chi_x(const Element& e) {
    return tau(epsilon(e).word_concat(Word::letter_x(), Word()));
}

} // namespace

KeyPropReport verify_key_prop(int n, int W) {
    KeyPropReport rep;
    LinearOperator dnc = quasi_derivation(ThetaVariant::Standard, n);
    Element w = key_prop_witness(n);
    for (int k = 0; k <= W; ++k) {
        for (const Word& v : basis_words(k, Subalgebra::H1)) {
            Element lhs = dnc.apply(chi_x(Element(v)));
            Element rhs = chi_x(harmonic_mul(w, Element(v)));
            if (lhs != rhs) {
                rep.ok = false;
                rep.violations.push_back("n=" + std::to_string(n) + " v=" + v.str());
            }
        }
    }
    return rep;
}

InclusionReport check_inclusion(int k) {
    InclusionReport rep;
    RelationSet link = gen_kawashima_linear(k);
    RelationSet quasi = gen_quasi_derivation(k);
    RelationSet dual = gen_duality(k);
    SpanChecker span(link.vectors, k);
    rep.rank_link = span.rank();
    for (std::size_t i = 0; i < quasi.vectors.size(); ++i) {
        if (!span.contains(quasi.vectors[i])) {
            rep.ok = false;
            rep.failures.push_back(std::string(family_name(quasi.family)) + " " +
                                   quasi.provenance[i]);
        }
    }
    for (std::size_t i = 0; i < dual.vectors.size(); ++i) {
        if (!span.contains(dual.vectors[i])) {
            rep.ok = false;
            rep.failures.push_back(std::string(family_name(dual.family)) + " " +
                                   dual.provenance[i]);
        }
    }
    rep.rank_quasi = rank(relation_matrix(quasi)).rank;
    rep.rank_union = rank_union({&quasi, &link}).rank;
    if (rep.rank_union != rep.rank_link) rep.ok = false;
    return rep;
}

// ----------------------------------------------------------- numeric sanity

ZetaApprox zeta_numeric(const Word& w, long long N) {
    if (!w.in_h0() || w.empty())
        throw DomainError("inadmissible index: word " + w.str() + " is not in xHy");
    if (N < 10) throw DomainError("truncation N must be at least 10");
    std::vector<int> exps = w.z_parts(); // k_1, ..., k_n with k_1 >= 2
    const int depth = static_cast<int>(exps.size());
    // f[m] = sum over chains of the remaining indices below m
    std::vector<long double> f(static_cast<std::size_t>(N) + 1, 1.0L);
    for (int j = depth - 1; j >= 0; --j) {
        long double acc = 0.0L;
        std::vector<long double> next(static_cast<std::size_t>(N) + 1, 0.0L);
        for (long long m = 1; m <= N; ++m) {
            // next[m] = sum_{m' < m} m'^{-k_j} f[m'], computed cumulatively
            next[m] = acc;
            acc += std::pow(static_cast<long double>(m), -static_cast<long double>(exps[j])) *
                   f[m];
        }
        if (j == 0) {
            ZetaApprox out;
            out.value = acc; // sum over m_1 <= N
            out.terms = N;
            long double logN = std::log(static_cast<long double>(N));
            out.tail_bound = std::pow(logN + 1.0L, depth - 1) /
                             ((exps[0] - 1) * std::pow(static_cast<long double>(N),
                                                       static_cast<long double>(exps[0] - 1)));
            return out;
        }
        f = std::move(next);
    }
    throw DomainError("empty index");
}

NumericReport numeric_check(const RelationSet& rs, long long N, double tol, int jobs) {
    NumericReport rep;
    std::vector<long double> values(rs.vectors.size(), 0.0L);
    parallel_for(rs.vectors.size(), jobs, [&](std::size_t i) {
        long double acc = 0.0L;
        for (const auto& t : rs.vectors[i].terms()) {
            if (!t.coeff.is_rational())
                throw DomainError("numeric check on a vector with residual c");
            acc += static_cast<long double>(t.coeff.rat().get_d()) *
                   zeta_numeric(t.word, N).value;
        }
        values[i] = acc;
    });
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (std::fabs(static_cast<double>(values[i])) > tol) {
            rep.ok = false;
            std::ostringstream os;
            os << rs.provenance[i] << " -> " << static_cast<double>(values[i]);
            rep.flagged.push_back(os.str());
        }
    }
    return rep;
}

} // namespace mzv
