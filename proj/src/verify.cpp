#include "mzv/verify.hpp"

#include "mzv/basis.hpp"
#include "mzv/linalg.hpp"
#include "mzv/operators.hpp"
#include "mzv/parallel.hpp"
#include "mzv/parse.hpp"
#include "mzv/products.hpp"
#include "mzv/relations.hpp"

#include <atomic>
#include <mutex>
#include <random>
#include <sstream>

namespace mzv {

namespace {

// Collects per-case outcomes into one CheckResult, keeping the first
// counterexample; thread-safe so cases can run under parallel_for.
class Collector {
public:
    void fail(const std::string& counterexample) {
        std::lock_guard<std::mutex> lock(mu_);
        // keep the lexicographically smallest case so the report does not
        // depend on thread scheduling
        if (fails_ == 0 || counterexample < first_) first_ = counterexample;
        ++fails_;
    }
    void require(bool ok, const std::function<std::string()>& cx) {
        if (!ok) fail(cx());
    }
    CheckResult done(std::string name) const {
        CheckResult r;
        r.name = std::move(name);
        r.pass = fails_ == 0;
        if (fails_ > 0) {
            r.detail = first_;
            if (fails_ > 1) r.detail += " (+" + std::to_string(fails_ - 1) + " more)";
        }
        return r;
    }

private:
    mutable std::mutex mu_;
    std::string first_;
    int fails_ = 0;
};

std::vector<Word> words_up_to(int W, Subalgebra tag = Subalgebra::H) {
    std::vector<Word> out;
    for (int k = 0; k <= W; ++k)
        for (const Word& w : basis_words(k, tag)) out.push_back(w);
    return out;
}

Element z_elem() { return Element(Word::letter_x()) + Element(Word::letter_y()); }

// ------------------------------------------------------------------- core

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    Rat q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

Scalar random_scalar(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    Scalar s;
    int d = deg(rng);
    for (int j = 0; j <= d; ++j) s += Scalar::monomial(random_rat(rng), j);
    return s;
}

Word random_word(std::mt19937_64& rng, int max_weight) {
    std::uniform_int_distribution<int> len(0, max_weight);
    int k = len(rng);
    std::uniform_int_distribution<std::uint64_t> bits(0, k == 0 ? 0 : (std::uint64_t(1) << k) - 1);
    return Word::from_bits(bits(rng), k);
}

Element random_element(std::mt19937_64& rng, int max_terms, int max_weight, int max_deg) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    ElementBuilder acc;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) acc.add(random_word(rng, max_weight), random_scalar(rng, max_deg));
    return acc.build();
}

} // namespace

std::vector<CheckResult> suite_core(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opts.seed ^ 0x5eedfeedULL);

    {
        Collector c;
        for (int k = 0; k <= 14; ++k) {
            std::size_t h = basis_words(k, Subalgebra::H).size();
            std::size_t h1 = basis_words(k, Subalgebra::H1).size();
            std::size_t h0 = basis_words(k, Subalgebra::H0).size();
            c.require(h == (std::size_t(1) << k), [&] { return "H count at k=" + std::to_string(k); });
            std::size_t want1 = k == 0 ? 1 : (std::size_t(1) << (k - 1));
            c.require(h1 == want1, [&] { return "H1 count at k=" + std::to_string(k); });
            std::size_t want0 = k == 0 ? 1 : (k == 1 ? 0 : (std::size_t(1) << (k - 2)));
            c.require(h0 == want0, [&] { return "H0 count at k=" + std::to_string(k); });
        }
        out.push_back(c.done("core/basis-counts"));
    }
    {
        Collector c;
        for (int i = 0; i < 200; ++i) {
            Scalar a = random_scalar(rng, 6), b = random_scalar(rng, 6), d = random_scalar(rng, 6);
            c.require((a + b) * d == a * d + b * d, [&] { return "distributivity case " + std::to_string(i); });
            c.require((a * b) * d == a * (b * d), [&] { return "mul associativity case " + std::to_string(i); });
            c.require(a * b == b * a, [&] { return "mul commutativity case " + std::to_string(i); });
            c.require((a + b) + d == a + (b + d), [&] { return "add associativity case " + std::to_string(i); });
        }
        out.push_back(c.done("core/scalar-ring-laws"));
    }
    {
        Collector c;
        for (int i = 0; i < 1000; ++i) {
            Element e = random_element(rng, 6, 8, 3);
            Element back = parse_element(format_element(e));
            c.require(back == e, [&] { return "round-trip failed for: " + format_element(e); });
        }
        out.push_back(c.done("core/parse-format-round-trip"));
    }
    {
        Collector c;
        for (int i = 0; i < 200; ++i) {
            Element a = random_element(rng, 4, 4, 2);
            Element b = random_element(rng, 4, 4, 2);
            Element d = random_element(rng, 4, 4, 2);
            c.require(concat_mul(concat_mul(a, b), d) == concat_mul(a, concat_mul(b, d)),
                      [&] { return "concat associativity case " + std::to_string(i); });
            c.require(concat_mul(Element::unit(), a) == a && concat_mul(a, Element::unit()) == a,
                      [&] { return "concat unit case " + std::to_string(i); });
        }
        for (int i = 0; i < 200; ++i) {
            Word a = random_word(rng, 6), b = random_word(rng, 6);
            c.require(concat(a, b).weight() == a.weight() + b.weight(),
                      [&] { return "weight additivity " + a.str() + "," + b.str(); });
        }
        out.push_back(c.done("core/concat-product"));
    }
    return out;
}

// -------------------------------------------------------------- operators

namespace {

int sgn_letter(int letter) { return letter == 0 ? 1 : -1; }

// d1(w) scaled by (weight factor), used by the split-independence check
Element d1_word(const Word& w) { return derivation_dn(1).apply_word(w); }

} // namespace

std::vector<CheckResult> suite_operators(const VerifyOptions& opts) {
    const int W = opts.max_weight;
    const int N = opts.n_max;
    std::vector<CheckResult> out;
    const auto all_words = words_up_to(W);

    auto for_words = [&](const std::vector<Word>& ws, Collector& c,
                         const std::function<void(const Word&, Collector&)>& fn) {
        parallel_for(ws.size(), opts.jobs, [&](std::size_t i) { fn(ws[i], c); });
    };

    { // tau
        Collector c;
        for_words(all_words, c, [&](const Word& w, Collector& cc) {
            cc.require(tau(tau(Element(w))) == Element(w), [&] { return "w=" + w.str(); });
        });
        out.push_back(c.done("op/tau-involution"));
    }
    {
        Collector c;
        for (int ka = 0; ka <= std::min(W, 8); ++ka)
            for (const Word& a : basis_words(ka, Subalgebra::H))
                for (int kb = 0; ka + kb <= std::min(W, 8); ++kb)
                    for (const Word& b : basis_words(kb, Subalgebra::H)) {
                        if (tau(concat_mul(Element(a), Element(b))) !=
                            concat_mul(tau(Element(b)), tau(Element(a))))
                            c.fail("a=" + a.str() + " b=" + b.str());
                    }
        out.push_back(c.done("op/tau-anti-multiplicative"));
    }
    { // epsilon
        Collector c;
        for_words(all_words, c, [&](const Word& w, Collector& cc) {
            cc.require(epsilon(epsilon(Element(w))) == Element(w), [&] { return "w=" + w.str(); });
        });
        out.push_back(c.done("op/eps-involution"));
    }
    {
        Collector c;
        for (int ka = 0; ka <= std::min(W, 7); ++ka)
            for (const Word& a : basis_words(ka, Subalgebra::H))
                for (int kb = 0; ka + kb <= std::min(W, 7); ++kb)
                    for (const Word& b : basis_words(kb, Subalgebra::H)) {
                        if (epsilon(concat_mul(Element(a), Element(b))) !=
                            concat_mul(epsilon(Element(a)), epsilon(Element(b))))
                            c.fail("a=" + a.str() + " b=" + b.str());
                    }
        out.push_back(c.done("op/eps-multiplicative"));
    }
    { // eps Lx = Lz eps, eps Ly = -Ly eps, tau Lx = Ry tau, tau Ly = Rx tau
        Collector c;
        const Element z = z_elem();
        for_words(all_words, c, [&](const Word& w, Collector& cc) {
            Element e(w);
            Element lx = e.word_concat(Word::letter_x(), Word());
            Element ly = e.word_concat(Word::letter_y(), Word());
            cc.require(epsilon(lx) == concat_mul(z, epsilon(e)), [&] { return "eps.Lx w=" + w.str(); });
            cc.require(epsilon(ly) == -epsilon(e).word_concat(Word::letter_y(), Word()),
                       [&] { return "eps.Ly w=" + w.str(); });
            cc.require(tau(lx) == tau(e).word_concat(Word(), Word::letter_y()),
                       [&] { return "tau.Lx w=" + w.str(); });
            cc.require(tau(ly) == tau(e).word_concat(Word(), Word::letter_x()),
                       [&] { return "tau.Ly w=" + w.str(); });
        });
        out.push_back(c.done("op/intertwining-rules"));
    }
    // split independence of the twisted-Leibniz rules: the two-factor rule
    // evaluated at every split point must agree with the operator value
    for (ThetaVariant variant : {ThetaVariant::Standard, ThetaVariant::Hat}) {
        Collector c;
        const Scalar cc_param = Scalar::c();
        for_words(all_words, c, [&](const Word& w, Collector& cc) {
            if (w.weight() < 2) return;
            Element direct = theta_twisted(variant, Element(w), cc_param);
            for (int split = 1; split < w.weight(); ++split) {
                Word w1 = w.prefix(split), w2 = w.suffix(w.weight() - split);
                Element lhs = theta_twisted(variant, Element(w1), cc_param).word_concat(Word(), w2) +
                              theta_twisted(variant, Element(w2), cc_param).word_concat(w1, Word());
                if (variant == ThetaVariant::Standard) {
                    lhs += d1_word(w1).word_concat(Word(), w2).scaled(cc_param * Rat(w2.weight()));
                } else {
                    lhs += d1_word(w2).word_concat(w1, Word()).scaled(cc_param * Rat(w1.weight()));
                }
                if (lhs != direct) {
                    cc.fail("w=" + w.str() + " split=" + std::to_string(split));
                    return;
                }
            }
        });
        out.push_back(c.done(variant == ThetaVariant::Standard ? "op/theta-split-independence"
                                                               : "op/theta-hat-split-independence"));
    }
    { // c = 0 reduction of the quasi-derivation
        Collector c;
        for (int n = 1; n <= N; ++n) {
            LinearOperator dnc = quasi_derivation(ThetaVariant::Standard, n);
            LinearOperator dn = derivation_dn(n);
            for_words(all_words, c, [&](const Word& w, Collector& cc) {
                cc.require(dnc.apply_word(w).c_coefficient(0) == dn.apply_word(w),
                           [&] { return "n=" + std::to_string(n) + " w=" + w.str(); });
            });
        }
        out.push_back(c.done("op/quasi-c0-reduction"));
    }
    { // last-letter rule: d_n^c(wu) = d_n^c(w)u + sgn(u) psi_n^c(w)
        Collector c;
        const auto words = words_up_to(W - 1);
        for (int n = 1; n <= N; ++n) {
            LinearOperator dnc = quasi_derivation(ThetaVariant::Standard, n);
            LinearOperator psin = psi_op(n);
            for_words(words, c, [&](const Word& w, Collector& cc) {
                Element dw = dnc.apply_word(w);
                Element psiw = psin.apply(Element(w));
                for (int u = 0; u <= 1; ++u) {
                    Word wu = concat(w, Word::letter(u));
                    Element lhs = dnc.apply_word(wu);
                    Element rhs = dw.word_concat(Word(), Word::letter(u)) +
                                  psiw.scaled(Rat(sgn_letter(u)));
                    if (lhs != rhs)
                        cc.fail("n=" + std::to_string(n) + " w=" + w.str() + " u=" +
                                (u ? "y" : "x"));
                }
            });
        }
        out.push_back(c.done("op/last-letter-rule-psi"));
    }
    { // [d_n^c, R_z] = 0
        Collector c;
        const auto words = words_up_to(W - 1);
        const Element z = z_elem();
        for (int n = 1; n <= N; ++n) {
            LinearOperator dnc = quasi_derivation(ThetaVariant::Standard, n);
            for_words(words, c, [&](const Word& w, Collector& cc) {
                Element lhs = dnc.apply(concat_mul(Element(w), z));
                Element rhs = concat_mul(dnc.apply_word(w), z);
                cc.require(lhs == rhs, [&] { return "n=" + std::to_string(n) + " w=" + w.str(); });
            });
        }
        out.push_back(c.done("op/Rz-commutation"));
    }
    { // cross-oracle: d_n^c(wu) = d_n^c(w)u + sgn(u) phi_{n-1}^c(wx)y
      // checked against the ad-power evaluation
        Collector c;
        const auto words = words_up_to(W - 1);
        for (int n = 1; n <= N; ++n) {
            LinearOperator dnc = quasi_derivation(ThetaVariant::Standard, n);
            LinearOperator phin = phi_op(n - 1);
            for_words(words, c, [&](const Word& w, Collector& cc) {
                Element dw = dnc.apply_word(w);
                Element ph = phin.apply(Element(concat(w, Word::letter_x())))
                                 .word_concat(Word(), Word::letter_y());
                for (int u = 0; u <= 1; ++u) {
                    Element lhs = dnc.apply_word(concat(w, Word::letter(u)));
                    Element rhs = dw.word_concat(Word(), Word::letter(u)) +
                                  ph.scaled(Rat(sgn_letter(u)));
                    if (lhs != rhs)
                        cc.fail("n=" + std::to_string(n) + " w=" + w.str() + " u=" +
                                (u ? "y" : "x"));
                }
            });
        }
        out.push_back(c.done("op/last-letter-rule-phi"));
    }
    { // Ry^{-1} d_n^c Ry = d_n^c - phi_{n-1}^c Rx on H1
        Collector c;
        const auto h1 = words_up_to(W - 1, Subalgebra::H1);
        for (int n = 1; n <= N; ++n) {
            LinearOperator dnc = quasi_derivation(ThetaVariant::Standard, n);
            LinearOperator phin = phi_op(n - 1);
            for_words(h1, c, [&](const Word& v, Collector& cc) {
                Element lhs = exact_divide(Side::Right, 1,
                                           dnc.apply_word(concat(v, Word::letter_y())));
                Element rhs = dnc.apply_word(v) -
                              phin.apply(Element(concat(v, Word::letter_x())));
                cc.require(lhs == rhs, [&] { return "n=" + std::to_string(n) + " v=" + v.str(); });
            });
        }
        out.push_back(c.done("op/Ry-conjugation"));
    }
    { // R_z phi_n^c = (1/n!) ad(theta_c)^n (R_z); the word bound keeps
      // the composite output weight within the configured cap
        Collector c;
        const Element z = z_elem();
        LinearOperator th = theta_twisted_op(ThetaVariant::Standard);
        for (int n = 1; n <= N; ++n) {
            LinearOperator phin = phi_op(n);
            LinearOperator rhs_op = ad_power(th, mul_op(Side::Right, z), n);
            Rat scale(1);
            for (int i = 2; i <= n; ++i) scale /= i;
            int wcap = std::min(W, opts.comm_output_cap - n - 1);
            const auto words = words_up_to(wcap);
            for_words(words, c, [&](const Word& w, Collector& cc) {
                Element lhs = concat_mul(phin.apply(Element(w)), z);
                Element rhs = rhs_op.apply(Element(w)).scaled(scale);
                cc.require(lhs == rhs, [&] { return "n=" + std::to_string(n) + " w=" + w.str(); });
            });
        }
        out.push_back(c.done("op/Rz-phi-ad-formula"));
    }
    { // [d_n^{(c)}, d_m^{(c')}] = 0 with independent symbolic
      // parameters, verified coefficient-by-coefficient in (c, c')
        Collector c;
        for (int n = 1; n <= N; ++n) {
            for (int m = n; m <= N; ++m) {
                LinearOperator dn = quasi_derivation(ThetaVariant::Standard, n);
                LinearOperator dm = quasi_derivation(ThetaVariant::Standard, m);
                // outer applications above the shared-memo range go through
                // unmemoized element-level operators: the ad chains are then
                // shared per element instead of per word, which bounds memory
                LinearOperator dn_raw = quasi_derivation(ThetaVariant::Standard, n, Scalar::c(), false);
                LinearOperator dm_raw = quasi_derivation(ThetaVariant::Standard, m, Scalar::c(), false);
                int wcap = std::min(W, opts.comm_output_cap - n - m);
                const auto words = words_up_to(wcap);
                for_words(words, c, [&](const Word& w, Collector& cc) {
                    const LinearOperator& outer_n = w.weight() + m <= 12 ? dn : dn_raw;
                    const LinearOperator& outer_m = w.weight() + n <= 12 ? dm : dm_raw;
                    Element em = dm.apply_word(w); // inner parameter plays c'
                    Element en = dn.apply_word(w);
                    std::vector<Element> gj(static_cast<std::size_t>(n));
                    for (int j = 0; j <= n - 1; ++j)
                        gj[static_cast<std::size_t>(j)] = outer_m.apply(en.c_coefficient(j));
                    for (int k = 0; k <= m - 1; ++k) {
                        Element fk = outer_n.apply(em.c_coefficient(k));
                        for (int j = 0; j <= n - 1; ++j) {
                            Element lhs = fk.c_coefficient(j);
                            Element rhs = gj[static_cast<std::size_t>(j)].c_coefficient(k);
                            if (lhs != rhs)
                                cc.fail("n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                        " w=" + w.str() + " c^" + std::to_string(j) + " c'^" +
                                        std::to_string(k));
                        }
                    }
                });
            }
        }
        out.push_back(c.done("op/comm-quasi-derivations"));
    }
    { // image containment in H0 and H1
        Collector c;
        std::vector<Word> h0_words = words_up_to(W, Subalgebra::H0);
        std::vector<Word> h1_words = words_up_to(W, Subalgebra::H1);
        for (int n = 1; n <= N; ++n) {
            LinearOperator dnc = quasi_derivation(ThetaVariant::Standard, n);
            c.require(dnc.apply(Element(Word::letter_x())).in(Subalgebra::H0),
                      [&] { return "n=" + std::to_string(n) + " on x"; });
            c.require(dnc.apply(Element(Word::letter_y())).in(Subalgebra::H0),
                      [&] { return "n=" + std::to_string(n) + " on y"; });
            for_words(h0_words, c, [&](const Word& w, Collector& cc) {
                cc.require(dnc.apply_word(w).in(Subalgebra::H0),
                           [&] { return "n=" + std::to_string(n) + " w=" + w.str(); });
            });
            for_words(h1_words, c, [&](const Word& w, Collector& cc) {
                cc.require(dnc.apply_word(w).in(Subalgebra::H1),
                           [&] { return "H1: n=" + std::to_string(n) + " w=" + w.str(); });
            });
        }
        out.push_back(c.done("op/image-containment"));
    }
    { // theta-hat^c = theta^{-c} + c d1 (H - 1)
        Collector c;
        const Scalar cpos = Scalar::c(), cneg = -Scalar::c();
        for_words(all_words, c, [&](const Word& w, Collector& cc) {
            Element lhs = theta_twisted(ThetaVariant::Hat, Element(w), cpos);
            Element rhs = theta_twisted(ThetaVariant::Standard, Element(w), cneg) +
                          d1_word(w).scaled(cpos * Rat(w.weight() - 1));
            cc.require(lhs == rhs, [&] { return "w=" + w.str(); });
        });
        out.push_back(c.done("op/theta-hat-decomposition"));
    }
    { // theta-hat^c = tau theta^{-c} tau
        Collector c;
        const Scalar cpos = Scalar::c(), cneg = -Scalar::c();
        for_words(all_words, c, [&](const Word& w, Collector& cc) {
            Element lhs = theta_twisted(ThetaVariant::Hat, Element(w), cpos);
            Element rhs = tau(theta_twisted(ThetaVariant::Standard, tau(Element(w)), cneg));
            cc.require(lhs == rhs, [&] { return "w=" + w.str(); });
        });
        out.push_back(c.done("op/theta-hat-tau-conjugation"));
    }
    { // dhat_n^c = -tau d_n^{-c} tau
        Collector c;
        const Scalar cneg = -Scalar::c();
        for (int n = 1; n <= N; ++n) {
            LinearOperator dhat = quasi_derivation(ThetaVariant::Hat, n);
            LinearOperator dneg = quasi_derivation(ThetaVariant::Standard, n, cneg);
            for_words(all_words, c, [&](const Word& w, Collector& cc) {
                Element lhs = dhat.apply_word(w);
                Element rhs = -tau(dneg.apply(tau(Element(w))));
                cc.require(lhs == rhs, [&] { return "n=" + std::to_string(n) + " w=" + w.str(); });
            });
        }
        out.push_back(c.done("op/hat-quasi-tau-conjugation"));
    }
    { // explicit polynomials for dhat_2, dhat_3, dhat_4
        Collector c;
        const Scalar cc_ = Scalar::c(), cneg = -Scalar::c();
        LinearOperator d1 = derivation_dn(1);
        LinearOperator d2n = quasi_derivation(ThetaVariant::Standard, 2, cneg);
        LinearOperator d3n = quasi_derivation(ThetaVariant::Standard, 3, cneg);
        LinearOperator d4n = quasi_derivation(ThetaVariant::Standard, 4, cneg);
        LinearOperator h2 = quasi_derivation(ThetaVariant::Hat, 2);
        LinearOperator h3 = quasi_derivation(ThetaVariant::Hat, 3);
        LinearOperator h4 = quasi_derivation(ThetaVariant::Hat, 4);
        for_words(all_words, c, [&](const Word& w, Collector& cc) {
            Element e(w);
            if (N >= 2) {
                Element rhs = d2n.apply(e) + d1.apply(d1.apply(e)).scaled(cc_);
                if (h2.apply(e) != rhs) cc.fail("dhat2 w=" + w.str());
            }
            if (N >= 3) {
                Element rhs = d3n.apply(e) + d1.apply(d2n.apply(e)).scaled(cc_ * Rat(2)) +
                              d1.apply(d1.apply(d1.apply(e))).scaled(cc_ * cc_);
                if (h3.apply(e) != rhs) cc.fail("dhat3 w=" + w.str());
            }
            if (N >= 4) {
                Element rhs = d4n.apply(e) +
                              d1.apply(d3n.apply(e)).scaled(cc_ * Rat(7, 3)) +
                              d2n.apply(d2n.apply(e)).scaled(cc_ * Rat(2, 3)) +
                              d1.apply(d1.apply(d2n.apply(e))).scaled(cc_ * cc_ * Rat(3)) +
                              d1.apply(d1.apply(d1.apply(d1.apply(e)))).scaled(cc_ * cc_ * cc_);
                if (h4.apply(e) != rhs) cc.fail("dhat4 w=" + w.str());
            }
        });
        out.push_back(c.done("op/hat-explicit-polynomials"));
    }
    { // hat-variant relations add nothing: every c-coefficient of
      // dhat_n^{(c)} on the H0 basis lies in the quasi-derivation span
        Collector c;
        for (int mu = 3; mu <= std::min(W, 8); ++mu) {
            SpanChecker span(gen_quasi_derivation(mu).vectors, mu);
            for (int n = 1; n <= mu - 2; ++n) {
                LinearOperator dhat = quasi_derivation(ThetaVariant::Hat, n);
                for (const Word& w : basis_words(mu - n, Subalgebra::H0)) {
                    Element img = dhat.apply_word(w);
                    for (int j = 0; j <= n - 1; ++j) {
                        if (!span.contains(img.c_coefficient(j)))
                            c.fail("mu=" + std::to_string(mu) + " n=" + std::to_string(n) +
                                   " j=" + std::to_string(j) + " w=" + w.str());
                    }
                }
            }
        }
        out.push_back(c.done("op/hat-relations-in-quasi-span"));
    }
    { // [H_{z_k w}, L_{z_l}] = L_{z_k} H_w L_{z_l} + L_{z_{k+l}} H_w
        Collector c;
        int total = std::min(W + 1, 9);
        for (int k = 1; k <= total - 2; ++k) {
            for (int l = 1; k + l <= total - 1; ++l) {
                for (int wk = 0; k + l + wk <= total; ++wk) {
                    for (const Word& w : basis_words(wk, Subalgebra::H1)) {
                        Element zkw(concat(Word::z(k), w));
                        for (int vk = 0; k + l + wk + vk <= total; ++vk) {
                            for (const Word& v : basis_words(vk, Subalgebra::H1)) {
                                Element ev(v);
                                Element zl_v = ev.word_concat(Word::z(l), Word());
                                Element lhs = harmonic_mul(zkw, zl_v) -
                                              harmonic_mul(zkw, ev).word_concat(Word::z(l), Word());
                                Element rhs =
                                    harmonic_mul(Element(w), zl_v).word_concat(Word::z(k), Word()) +
                                    harmonic_mul(Element(w), ev).word_concat(Word::z(k + l), Word());
                                if (lhs != rhs)
                                    c.fail("k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                           " w=" + w.str() + " v=" + v.str());
                            }
                        }
                    }
                }
            }
        }
        out.push_back(c.done("op/harmonic-operator-rule"));
    }
    return out;
}

// ---------------------------------------------------------------- keyprop

std::vector<CheckResult> suite_keyprop(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    {
        Collector c;
        c.require(key_prop_witness(1) == Element(Word::letter_y()), [] {
            return std::string("w(1,c) != y");
        });
        for (int n = 1; n <= opts.keyprop_nmax; ++n) {
            Element w = key_prop_witness(n);
            bool hy = w.in(Subalgebra::H1) && !w.is_zero() && w.min_weight() >= 1;
            c.require(hy, [&] { return "w(" + std::to_string(n) + ",c) not in Hy"; });
        }
        out.push_back(c.done("keyprop/witness-form"));
    }
    for (int n = 1; n <= opts.keyprop_nmax; ++n) {
        Collector c;
        KeyPropReport rep = verify_key_prop(n, opts.keyprop_weight);
        for (const auto& v : rep.violations) c.fail(v);
        out.push_back(c.done("keyprop/diagram-n" + std::to_string(n)));
    }
    return out;
}

// -------------------------------------------------------------- inclusion

std::vector<CheckResult> suite_inclusion(const VerifyOptions& opts,
                                         const std::vector<int>& weights) {
    std::vector<CheckResult> out;
    for (int k : weights) {
        Collector c;
        InclusionReport rep = check_inclusion(k);
        for (const auto& f : rep.failures) c.fail(f);
        if (rep.rank_union != rep.rank_link)
            c.fail("rank(quasi u linK)=" + std::to_string(rep.rank_union) +
                   " != rank(linK)=" + std::to_string(rep.rank_link));
        out.push_back(c.done("inclusion/weight-" + std::to_string(k)));
    }
    (void)opts;
    return out;
}

// --------------------------------------------------------------- appendix

std::vector<CheckResult> suite_appendix(const VerifyOptions& opts) {
    const int W = opts.max_weight;
    std::vector<CheckResult> out;
    const auto all_words = words_up_to(W);
    const auto h1_words = words_up_to(W, Subalgebra::H1);

    LinearOperator Delta = delta_endo(W);
    LinearOperator DeltaInv = delta_inv_endo(W);
    LinearOperator Phi = cap_phi_endo(W);
    LinearOperator Sigma = sigma_endo(W);
    LinearOperator SigmaInv = sigma_inv_endo(W);
    LinearOperator SigmaBar = sigma_bar_endo(W);

    {
        Collector c;
        parallel_for(all_words.size(), opts.jobs, [&](std::size_t i) {
            const Word& w = all_words[i];
            Element lhs = Phi.apply_word(w);
            Element rhs = epsilon(Delta.apply(epsilon(Element(w))));
            c.require(lhs == rhs, [&] { return "w=" + w.str(); });
        });
        out.push_back(c.done("appendix/phi-eps-delta-eps"));
    }
    {
        Collector c;
        parallel_for(all_words.size(), opts.jobs, [&](std::size_t i) {
            const Word& w = all_words[i];
            Element lhs = Delta.apply_word(w);
            Element rhs = SigmaBar.apply(SigmaInv.apply_word(w));
            c.require(lhs == rhs, [&] { return "w=" + w.str(); });
        });
        out.push_back(c.done("appendix/delta-sigmabar-sigmainv"));
    }
    {
        Collector c;
        parallel_for(all_words.size(), opts.jobs, [&](std::size_t i) {
            const Word& w = all_words[i];
            Element lhs = DeltaInv.apply(Delta.apply_word(w));
            c.require(lhs == Element(w), [&] { return "w=" + w.str(); });
        });
        out.push_back(c.done("appendix/delta-inverse"));
    }
    { // (1/(1+y)) * v = (1/(1+y)) Phi(v) on the H1 basis, truncated
        Collector c;
        Element series = one_over_one_plus_y(W);
        parallel_for(h1_words.size(), opts.jobs, [&](std::size_t i) {
            const Word& v = h1_words[i];
            Element lhs = truncate_weight(harmonic_mul(series, Element(v)), W);
            Element rhs = truncate_weight(concat_mul(series, Phi.apply_word(v)), W);
            c.require(lhs == rhs, [&] { return "v=" + v.str(); });
        });
        out.push_back(c.done("appendix/harmonic-phi-identity"));
    }
    { // graded pieces of exp(sum D_n/n) equal the direct sigma_l formula
        Collector c;
        LinearOperator expd =
            exp_derivation([](int n) { return derivation_Dn(n); }, {W});
        parallel_for(h1_words.size(), opts.jobs, [&](std::size_t i) {
            const Word& w = h1_words[i];
            Element full = expd.apply(Element(w));
            for (int l = 0; w.weight() + l <= W; ++l) {
                if (full.weight_component(w.weight() + l) != sigma_l_direct(l, Element(w))) {
                    c.fail("w=" + w.str() + " l=" + std::to_string(l));
                    return;
                }
            }
        });
        out.push_back(c.done("appendix/sigma-l-exp-cross-oracle"));
    }
    { // exp(sum d_n/n) equals the substitution characterization of Delta
        Collector c;
        LinearOperator expd =
            exp_derivation([](int n) { return derivation_dn(n); }, {W});
        parallel_for(all_words.size(), opts.jobs, [&](std::size_t i) {
            const Word& w = all_words[i];
            c.require(expd.apply(Element(w)) == Delta.apply_word(w),
                      [&] { return "w=" + w.str(); });
        });
        out.push_back(c.done("appendix/delta-exp-cross-oracle"));
    }
    { // each graded piece of (Delta - 1) maps H0 into the lin-K span
        Collector c;
        for (int mu = 3; mu <= W; ++mu) {
            RelationSet link = gen_kawashima_linear(mu);
            SpanChecker span(link.vectors, mu);
            for (int kappa = 2; kappa < mu; ++kappa) {
                for (const Word& w : basis_words(kappa, Subalgebra::H0)) {
                    Element piece = Delta.apply_word(w).weight_component(mu);
                    if (piece.is_zero()) continue;
                    if (!span.contains(piece))
                        c.fail("mu=" + std::to_string(mu) + " w=" + w.str());
                }
            }
        }
        out.push_back(c.done("appendix/delta-graded-into-linK"));
    }
    { // span(Ohno) = span(duality u derivation) via three equal ranks
        Collector c;
        int kmax = W >= 8 ? 9 : W;
        for (int k = 3; k <= kmax; ++k) {
            RelationSet ohno = gen_ohno(k);
            RelationSet dual = gen_duality(k);
            RelationSet deriv = gen_derivation(k);
            std::size_t r_ohno = rank(relation_matrix(ohno), opts.seed, opts.jobs).rank;
            std::size_t r_dd = rank_union({&dual, &deriv}, opts.seed, opts.jobs).rank;
            std::size_t r_all = rank_union({&ohno, &dual, &deriv}, opts.seed, opts.jobs).rank;
            if (!(r_ohno == r_dd && r_dd == r_all))
                c.fail("k=" + std::to_string(k) + " ranks " + std::to_string(r_ohno) + "," +
                       std::to_string(r_dd) + "," + std::to_string(r_all));
        }
        out.push_back(c.done("appendix/ohno-equals-duality-derivation"));
    }
    return out;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };
    std::vector<int> incl_weights;
    for (int k = 3; k <= std::min(opts.max_weight, 8); ++k) incl_weights.push_back(k);
    if (name == "core")
        append(suite_core(opts));
    else if (name == "operators")
        append(suite_operators(opts));
    else if (name == "keyprop")
        append(suite_keyprop(opts));
    else if (name == "inclusion")
        append(suite_inclusion(opts, incl_weights));
    else if (name == "appendix")
        append(suite_appendix(opts));
    else if (name == "all") {
        append(suite_core(opts));
        append(suite_operators(opts));
        append(suite_keyprop(opts));
        append(suite_inclusion(opts, incl_weights));
        append(suite_appendix(opts));
    } else {
        throw DomainError("unknown suite: " + name);
    }
    return out;
}

} // namespace mzv
