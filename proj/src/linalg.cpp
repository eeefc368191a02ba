#include "mzv/linalg.hpp"

#include "mzv/basis.hpp"
#include "mzv/parallel.hpp"

#include <algorithm>
#include <cassert>

namespace mzv {

QMatrix relation_matrix(const std::vector<Element>& vectors, int weight) {
    if (weight < 2) throw DomainError("relation matrix needs weight >= 2");
    QMatrix m;
    m.cols = std::size_t(1) << (weight - 2);
    m.rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        std::vector<Rat> row(m.cols, Rat(0));
        for (const auto& t : v.terms()) {
            if (t.word.weight() != weight)
                throw WeightMismatch("vector term of weight " +
                                     std::to_string(t.word.weight()) + " in weight-" +
                                     std::to_string(weight) + " matrix");
            if (!t.word.in_h0())
                throw DomainError("word " + t.word.str() + " is not in H0");
            if (!t.coeff.is_rational())
                throw DomainError("relation vector has residual c coefficient");
            row[h0_index(t.word)] = t.coeff.rat();
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

namespace {

// rows scaled to integers by the LCM of denominators
std::vector<std::vector<mpz_class>> integer_rows(const QMatrix& m) {
    std::vector<std::vector<mpz_class>> out;
    out.reserve(m.rows.size());
    for (const auto& row : m.rows) {
        mpz_class lcm(1);
        for (const auto& q : row)
            if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<mpz_class> irow(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0) continue;
            irow[j] = row[j].get_num() * (lcm / row[j].get_den());
        }
        out.push_back(std::move(irow));
    }
    return out;
}

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
    const std::size_t nrows = a.size();
    mpz_class prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < nrows; ++col) {
        std::size_t piv = r;
        while (piv < nrows && a[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        if (piv != r) std::swap(a[piv], a[r]);
        const mpz_class& p = a[r][col];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            const mpz_class f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                mpz_class t = a[i][j] * p - f * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
        }
        prev = p;
        ++r;
    }
    return r;
}

// ---- modular path ----

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for n < 3.3e24
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 splitmix(u64& state) {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// deterministic sequence of distinct ~62-bit primes derived from the seed
std::vector<u64> prime_sequence(u64 seed, std::size_t count) {
    std::vector<u64> primes;
    u64 state = seed ^ 0xa076bd5f9ad0c1ecULL;
    while (primes.size() < count) {
        u64 cand = (splitmix(state) >> 2) | (u64(1) << 61) | 1;
        while (!is_prime(cand)) cand += 2;
        if (std::find(primes.begin(), primes.end(), cand) == primes.end())
            primes.push_back(cand);
    }
    return primes;
}

u64 inv_mod(u64 a, u64 p) { return powmod(a, p - 2, p); }

struct ModularResult {
    bool usable = false;             // false if a denominator vanished mod p
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};

ModularResult modular_rank(const QMatrix& m, u64 p) {
    ModularResult res;
    const std::size_t nrows = m.rows.size(), cols = m.cols;
    std::vector<std::vector<u64>> a(nrows, std::vector<u64>(cols, 0));
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const Rat& q = m.rows[i][j];
            if (q == 0) continue;
            u64 den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
            if (den == 0) return res; // bad prime for this matrix
            u64 num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
            a[i][j] = mulmod(num, inv_mod(den, p), p);
        }
    std::vector<std::size_t> order(nrows);
    for (std::size_t i = 0; i < nrows; ++i) order[i] = i;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < nrows; ++col) {
        std::size_t piv = r;
        while (piv < nrows && a[order[piv]][col] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(order[piv], order[r]);
        const std::size_t pr = order[r];
        u64 inv = inv_mod(a[pr][col], p);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            const std::size_t ri = order[i];
            if (a[ri][col] == 0) continue;
            u64 f = mulmod(a[ri][col], inv, p);
            for (std::size_t j = col; j < cols; ++j) {
                u64 sub = mulmod(f, a[pr][j], p);
                a[ri][j] = (a[ri][j] >= sub) ? a[ri][j] - sub : a[ri][j] + p - sub;
            }
        }
        res.pivot_rows.push_back(pr);
        ++r;
    }
    res.usable = true;
    res.rank = r;
    return res;
}

} // namespace

std::size_t rank_fraction_free(const QMatrix& m) {
    return bareiss_rank(integer_rows(m), m.cols);
}

RankReport rank(const QMatrix& m, std::uint64_t seed, int jobs) {
    RankReport rep;
    if (m.rows.empty() || m.cols == 0) {
        rep.method = RankMethod::ModularCertified;
        return rep;
    }
    const std::size_t max_primes = 8;
    auto primes = prime_sequence(seed, max_primes);
    std::vector<ModularResult> results(max_primes);
    std::size_t tried = 0;
    std::size_t agree_a = max_primes, agree_b = max_primes;
    while (tried < max_primes) {
        // evaluate the next batch of primes in parallel
        std::size_t batch = std::min<std::size_t>(std::max(jobs, 1), max_primes - tried);
        parallel_for(batch, jobs, [&](std::size_t i) {
            results[tried + i] = modular_rank(m, primes[tried + i]);
        });
        tried += batch;
        for (std::size_t i = 0; i < tried && agree_b == max_primes; ++i) {
            if (!results[i].usable) continue;
            for (std::size_t j = i + 1; j < tried; ++j) {
                if (!results[j].usable) continue;
                if (results[i].rank == results[j].rank) {
                    agree_a = i;
                    agree_b = j;
                    break;
                }
            }
        }
        if (agree_b < max_primes) break;
    }
    if (agree_b < max_primes) {
        const ModularResult& lead = results[agree_a];
        // exact confirmation on the extracted row basis
        QMatrix sub;
        sub.cols = m.cols;
        std::vector<std::size_t> rows_sorted = lead.pivot_rows;
        std::sort(rows_sorted.begin(), rows_sorted.end());
        for (std::size_t ri : rows_sorted) sub.rows.push_back(m.rows[ri]);
        if (rank_fraction_free(sub) == lead.rank) {
            rep.rank = lead.rank;
            rep.method = RankMethod::ModularCertified;
            rep.primes_used = {primes[agree_a], primes[agree_b]};
            return rep;
        }
    }
    // disagreement or unusable primes: authoritative exact elimination
    rep.rank = rank_fraction_free(m);
    rep.method = RankMethod::FractionFree;
    return rep;
}

SpanChecker::SpanChecker(const std::vector<Element>& basis, int weight)
    : weight_(weight), cols_(std::size_t(1) << (weight - 2)), n_basis_(basis.size()) {
    QMatrix m = relation_matrix(basis, weight);
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        std::vector<Rat> row = std::move(m.rows[i]);
        std::vector<Rat> combo(n_basis_, Rat(0));
        combo[i] = 1;
        // reduce by existing echelon rows
        for (std::size_t e = 0; e < echelon_.size(); ++e) {
            const Rat& f = row[pivot_col_[e]];
            if (f == 0) continue;
            Rat factor = f;
            for (std::size_t j = 0; j < cols_; ++j)
                if (echelon_[e][j] != 0) row[j] -= factor * echelon_[e][j];
            for (std::size_t j = 0; j < n_basis_; ++j)
                if (combo_[e][j] != 0) combo[j] -= factor * combo_[e][j];
        }
        std::size_t lead = 0;
        while (lead < cols_ && row[lead] == 0) ++lead;
        if (lead == cols_) continue;
        // normalize leading entry to 1
        Rat inv = 1 / row[lead];
        for (auto& q : row) q *= inv;
        for (auto& q : combo) q *= inv;
        // keep echelon rows mutually reduced
        for (std::size_t e = 0; e < echelon_.size(); ++e) {
            const Rat f = echelon_[e][lead];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (row[j] != 0) echelon_[e][j] -= f * row[j];
            for (std::size_t j = 0; j < n_basis_; ++j)
                if (combo[j] != 0) combo_[e][j] -= f * combo[j];
        }
        echelon_.push_back(std::move(row));
        combo_.push_back(std::move(combo));
        pivot_col_.push_back(lead);
    }
}

std::vector<Rat> SpanChecker::coords(const Element& v) const {
    std::vector<Rat> row(cols_, Rat(0));
    for (const auto& t : v.terms()) {
        if (t.word.weight() != weight_)
            throw WeightMismatch("query vector weight differs from span weight");
        if (!t.word.in_h0()) throw DomainError("word " + t.word.str() + " is not in H0");
        if (!t.coeff.is_rational())
            throw DomainError("query vector has residual c coefficient");
        row[h0_index(t.word)] = t.coeff.rat();
    }
    return row;
}

bool SpanChecker::contains(const Element& v) const {
    std::vector<Rat> row = coords(v);
    for (std::size_t e = 0; e < echelon_.size(); ++e) {
        const Rat& f = row[pivot_col_[e]];
        if (f == 0) continue;
        Rat factor = f;
        for (std::size_t j = 0; j < cols_; ++j)
            if (echelon_[e][j] != 0) row[j] -= factor * echelon_[e][j];
    }
    for (const auto& q : row)
        if (q != 0) return false;
    return true;
}

std::optional<std::vector<Rat>> SpanChecker::certificate(const Element& v) const {
    std::vector<Rat> row = coords(v);
    std::vector<Rat> cert(n_basis_, Rat(0));
    for (std::size_t e = 0; e < echelon_.size(); ++e) {
        const Rat& f = row[pivot_col_[e]];
        if (f == 0) continue;
        Rat factor = f;
        for (std::size_t j = 0; j < cols_; ++j)
            if (echelon_[e][j] != 0) row[j] -= factor * echelon_[e][j];
        for (std::size_t j = 0; j < n_basis_; ++j)
            if (combo_[e][j] != 0) cert[j] += factor * combo_[e][j];
    }
    for (const auto& q : row)
        if (q != 0) return std::nullopt;
    return cert;
}

std::optional<std::vector<Rat>> in_span(const std::vector<Element>& basis, const Element& v) {
    int weight = -1;
    for (const auto& b : basis)
        if (!b.is_zero()) {
            weight = b.max_weight();
            break;
        }
    if (weight < 0) weight = v.is_zero() ? 2 : v.max_weight();
    for (const auto& b : basis)
        if (!b.is_zero() && !b.homogeneous_of(weight))
            throw WeightMismatch("basis vectors have mixed weights");
    if (!v.is_zero() && !v.homogeneous_of(weight))
        throw WeightMismatch("query vector weight differs from basis weight");
    SpanChecker checker(basis, weight);
    return checker.certificate(v);
}

} // namespace mzv
