#ifndef MZV_OPERATORS_HPP
#define MZV_OPERATORS_HPP

#include "mzv/element.hpp"
#include "mzv/errors.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace mzv {

// A weight-graded Q[c]-linear endomorphism of the word algebra, built
// compositionally.  Operators are immutable and cheap to copy (copies share
// the underlying action and memo table); applying them concurrently from
// several threads is safe.
class LinearOperator {
public:
    using WordAction = std::function<Element(const Word&)>;
    using ElemAction = std::function<Element(const Element&)>;

    LinearOperator() = default;

    static LinearOperator from_word_action(std::string desc, WordAction act,
                                           bool memoize = false, int memo_weight_cap = 64,
                                           std::optional<int> weight_shift = std::nullopt);
    static LinearOperator from_elem_action(std::string desc, ElemAction act,
                                           std::optional<int> weight_shift = std::nullopt);

    // wrap any operator with a per-word memo table (inputs above the weight
    // cap bypass the table to bound memory)
    LinearOperator with_word_memo(std::string desc, int memo_weight_cap = 64) const;

    bool valid() const { return impl_ != nullptr; }
    const std::string& descriptor() const;
    // uniform weight raise, or nullopt for mixed
    std::optional<int> weight_shift() const;

    Element apply(const Element& e) const;
    Element apply_word(const Word& w) const;
    Element operator()(const Element& e) const { return apply(e); }
    Element operator()(const Word& w) const { return apply_word(w); }

    LinearOperator scaled(const Scalar& s) const;
    LinearOperator scaled(const Rat& r) const;

    friend LinearOperator compose(const LinearOperator& after, const LinearOperator& first);
    friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b);
    friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b);
    friend LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

private:
    struct Impl;
    explicit LinearOperator(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<Impl> impl_;
};

LinearOperator identity_op();

// ---- (anti)automorphisms ----

Word tau_word(const Word& w);
Element tau(const Element& e);          // reverse-and-swap anti-automorphism
Element epsilon(const Element& e);      // x -> x+y, y -> -y automorphism
LinearOperator tau_op();
LinearOperator epsilon_op();

// ---- derivations ----

// the unique Leibniz extension of the letter images
LinearOperator derivation(std::string desc, Element img_x, Element img_y);
LinearOperator derivation_dn(int n);    // x -> x z^{n-1} y, y -> -x z^{n-1} y
LinearOperator degree_op();             // w -> deg(w) w
LinearOperator theta_op();              // x -> (xz+zx)/2, y -> (yz+zy)/2
LinearOperator derivation_Dn(int n);    // x -> 0, y -> x^n y
LinearOperator derivation_Dbar(int n);  // x -> x y^n, y -> 0

// ---- twisted-Leibniz maps and quasi-derivations ----

enum class ThetaVariant { Standard, Hat };

// standard: t(ww') = t(w)w' + w t(w') + c d1(w) H(w')
// hat:      t(ww') = t(w)w' + w t(w') + c H(w) d1(w')
LinearOperator theta_twisted_op(ThetaVariant variant, Scalar cparam = Scalar::c());
Element theta_twisted(ThetaVariant variant, const Element& e, const Scalar& cparam = Scalar::c());

// sum_{j} (-1)^j binom(k,j) A^{k-j} B A^j, with the A-chains shared
LinearOperator ad_power(const LinearOperator& a, const LinearOperator& b, int k);

// (1/(n-1)!) ad(theta_c)^{n-1}(d1); per-word memoized.  The symbolic-c
// instance is cached per (variant, n) so repeated callers share images.
LinearOperator quasi_derivation(ThetaVariant variant, int n);
LinearOperator quasi_derivation(ThetaVariant variant, int n, const Scalar& cparam,
                                bool memoize = true);

// phi_0 = id, phi_n = (1/n)([theta_c, phi_{n-1}] + (R_z phi_{n-1}
//                     + phi_{n-1} R_z)/2 + c d1 phi_{n-1})
LinearOperator phi_op(int n);
LinearOperator phi_op(int n, const Scalar& cparam, bool memoize = true);

// psi_n = R_y phi_{n-1} R_x
LinearOperator psi_op(int n);
LinearOperator psi_op(int n, const Scalar& cparam, bool memoize = true);

// ---- multiplication and division ----

enum class Side { Left, Right };

LinearOperator mul_op(Side side, const Element& w);
LinearOperator mul_op(Side side, const Word& w);

// strips the given head (resp. tail) letter from every term;
// throws DivisionError naming the first offending word
Element exact_divide(Side side, int letter, const Element& e);

// ---- completion automorphisms, truncated ----

struct TruncationBound {
    int W;
};

// multiplicative extension of truncated letter images, exact in all output
// weights <= W; throws TruncationError on inputs of weight > W
LinearOperator substitution_endo(std::string desc, Element img_x, Element img_y,
                                 TruncationBound bound);

LinearOperator delta_endo(int W);      // x -> x(1-y)^{-1}, z -> z
LinearOperator delta_inv_endo(int W);  // x -> x(1+y)^{-1}, z -> z
LinearOperator cap_phi_endo(int W);    // x -> x, z -> z(1+y)^{-1}
LinearOperator sigma_endo(int W);      // x -> x, y -> (1-x)^{-1} y
LinearOperator sigma_inv_endo(int W);  // x -> x, y -> (1-x) y
LinearOperator sigma_bar_endo(int W);  // x -> x(1-y)^{-1}, y -> y

// weight-(k+l) piece of sigma on H1 by the composition formula
Element sigma_l_direct(int l, const Element& e);

// exp(sum_n family(n)/n) truncated at W; family(n) must raise weight by n
LinearOperator exp_derivation(const std::function<LinearOperator(int)>& family,
                              TruncationBound bound);

} // namespace mzv

#endif
