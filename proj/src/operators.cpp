#include "mzv/operators.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <unordered_map>

namespace mzv {

// ---------------------------------------------------------------- operator core

struct LinearOperator::Impl {
    std::string desc;
    WordAction word_action;
    ElemAction elem_action;
    bool memo = false;
    int memo_cap = 64;
    std::optional<int> shift;
    mutable std::unordered_map<std::uint64_t, Element> table;
    mutable std::mutex mu;
};

LinearOperator LinearOperator::from_word_action(std::string desc, WordAction act, bool memoize,
                                                int memo_weight_cap,
                                                std::optional<int> weight_shift) {
    auto impl = std::make_shared<Impl>();
    impl->desc = std::move(desc);
    impl->word_action = std::move(act);
    impl->memo = memoize;
    impl->memo_cap = memo_weight_cap;
    impl->shift = weight_shift;
    return LinearOperator(std::move(impl));
}

LinearOperator LinearOperator::from_elem_action(std::string desc, ElemAction act,
                                                std::optional<int> weight_shift) {
    auto impl = std::make_shared<Impl>();
    impl->desc = std::move(desc);
    impl->elem_action = std::move(act);
    impl->shift = weight_shift;
    return LinearOperator(std::move(impl));
}

LinearOperator LinearOperator::with_word_memo(std::string desc, int memo_weight_cap) const {
    LinearOperator inner = *this;
    return from_word_action(
        std::move(desc), [inner](const Word& w) { return inner.apply(Element(w)); }, true,
        memo_weight_cap, inner.weight_shift());
}

const std::string& LinearOperator::descriptor() const { return impl_->desc; }

std::optional<int> LinearOperator::weight_shift() const { return impl_->shift; }

Element LinearOperator::apply_word(const Word& w) const {
    const Impl& im = *impl_;
    if (!im.word_action) return im.elem_action(Element(w));
    if (!im.memo || w.weight() > im.memo_cap) return im.word_action(w);
    {
        std::lock_guard<std::mutex> lock(im.mu);
        auto it = im.table.find(w.packed());
        if (it != im.table.end()) return it->second;
    }
    Element value = im.word_action(w);
    {
        std::lock_guard<std::mutex> lock(im.mu);
        im.table.emplace(w.packed(), value);
    }
    return value;
}

Element LinearOperator::apply(const Element& e) const {
    const Impl& im = *impl_;
    if (!im.word_action) return im.elem_action(e);
    ElementBuilder acc;
    for (const auto& t : e.terms()) acc.add_scaled(apply_word(t.word), t.coeff);
    return acc.build();
}

LinearOperator LinearOperator::scaled(const Scalar& s) const {
    LinearOperator self = *this;
    Scalar k = s;
    return from_elem_action(
        "(" + impl_->desc + ")*scalar",
        [self, k](const Element& e) { return self.apply(e).scaled(k); }, weight_shift());
}

LinearOperator LinearOperator::scaled(const Rat& r) const { return scaled(Scalar(r)); }

namespace {

std::optional<int> shift_sum(const std::optional<int>& a, const std::optional<int>& b) {
    if (a && b) return *a + *b;
    return std::nullopt;
}

std::optional<int> shift_merge(const std::optional<int>& a, const std::optional<int>& b) {
    if (a && b && *a == *b) return a;
    return std::nullopt;
}

} // namespace

LinearOperator compose(const LinearOperator& after, const LinearOperator& first) {
    LinearOperator a = after, b = first;
    return LinearOperator::from_elem_action(
        a.descriptor() + "." + b.descriptor(),
        [a, b](const Element& e) { return a.apply(b.apply(e)); },
        shift_sum(a.weight_shift(), b.weight_shift()));
}

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
    LinearOperator x = a, y = b;
    return LinearOperator::from_elem_action(
        x.descriptor() + "+" + y.descriptor(),
        [x, y](const Element& e) { return x.apply(e) + y.apply(e); },
        shift_merge(x.weight_shift(), y.weight_shift()));
}

LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
    LinearOperator x = a, y = b;
    return LinearOperator::from_elem_action(
        x.descriptor() + "-" + y.descriptor(),
        [x, y](const Element& e) { return x.apply(e) - y.apply(e); },
        shift_merge(x.weight_shift(), y.weight_shift()));
}

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
    LinearOperator x = a, y = b;
    return LinearOperator::from_elem_action(
        "[" + x.descriptor() + "," + y.descriptor() + "]",
        [x, y](const Element& e) { return x.apply(y.apply(e)) - y.apply(x.apply(e)); },
        shift_sum(x.weight_shift(), y.weight_shift()));
}

LinearOperator identity_op() {
    return LinearOperator::from_elem_action("id", [](const Element& e) { return e; }, 0);
}

// ------------------------------------------------------------ automorphisms

Word tau_word(const Word& w) { return w.reversed_swapped(); }

Element tau(const Element& e) {
    std::vector<Term> out;
    out.reserve(e.size());
    for (const auto& t : e.terms()) out.push_back({tau_word(t.word), t.coeff});
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.word < b.word; });
    return Element::from_sorted(std::move(out));
}

namespace {

// epsilon on words, memoized over suffixes: eps(u w) = eps(u) eps(w)
class EpsilonCtx {
public:
    Element apply(const Word& w) {
        if (w.empty()) return Element::unit();
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(w.packed());
            if (it != memo_.end()) return it->second;
        }
        Element rest = apply(w.drop_first());
        Element img;
        if (w.first_letter() == 0) {
            img = rest.word_concat(Word::letter_x(), Word()) +
                  rest.word_concat(Word::letter_y(), Word());
        } else {
            img = -rest.word_concat(Word::letter_y(), Word());
        }
        std::lock_guard<std::mutex> lock(mu_);
        return memo_.emplace(w.packed(), std::move(img)).first->second;
    }

private:
    std::unordered_map<std::uint64_t, Element> memo_;
    std::mutex mu_;
};

EpsilonCtx& epsilon_ctx() {
    static EpsilonCtx ctx;
    return ctx;
}

} // namespace

Element epsilon(const Element& e) {
    ElementBuilder acc;
    for (const auto& t : e.terms()) acc.add_scaled(epsilon_ctx().apply(t.word), t.coeff);
    return acc.build();
}

LinearOperator tau_op() {
    return LinearOperator::from_elem_action("tau", [](const Element& e) { return tau(e); }, 0);
}

LinearOperator epsilon_op() {
    return LinearOperator::from_elem_action("eps", [](const Element& e) { return epsilon(e); },
                                            0);
}

// -------------------------------------------------------------- derivations

LinearOperator derivation(std::string desc, Element img_x, Element img_y) {
    std::optional<int> shift;
    for (const Element* img : {&img_x, &img_y}) {
        if (img->is_zero()) continue;
        if (!img->homogeneous_of(img->max_weight()) ||
            (shift && *shift != img->max_weight() - 1)) {
            shift.reset();
            break;
        }
        shift = img->max_weight() - 1;
    }
    return LinearOperator::from_word_action(
        std::move(desc),
        [img_x, img_y](const Word& w) {
            ElementBuilder acc;
            for (int i = 0; i < w.weight(); ++i) {
                const Element& img = w.letter_at(i) == 0 ? img_x : img_y;
                acc.add(img.word_concat(w.prefix(i), w.suffix(w.weight() - 1 - i)));
            }
            return acc.build();
        },
        false, 64, shift);
}

namespace {

Element z_element() { return Element(Word::letter_x()) + Element(Word::letter_y()); }

Element z_power(int k) {
    Element p = Element::unit();
    for (int i = 0; i < k; ++i) p = concat_mul(p, z_element());
    return p;
}

Element xzy(int n) {
    // x z^{n-1} y
    return z_power(n - 1).word_concat(Word::letter_x(), Word::letter_y());
}

} // namespace

LinearOperator derivation_dn(int n) {
    assert(n >= 1);
    Element img = xzy(n);
    return derivation("d" + std::to_string(n), img, -img);
}

LinearOperator degree_op() {
    return LinearOperator::from_word_action(
        "H", [](const Word& w) { return Element(w, Scalar(Rat(w.weight()))); }, false, 64, 0);
}

LinearOperator theta_op() {
    Element x(Word::letter_x()), y(Word::letter_y()), z = z_element();
    Element tx = (concat_mul(x, z) + concat_mul(z, x)).scaled(Rat(1, 2));
    Element ty = (concat_mul(y, z) + concat_mul(z, y)).scaled(Rat(1, 2));
    return derivation("theta", tx, ty);
}

LinearOperator derivation_Dn(int n) {
    assert(n >= 1);
    return derivation("D" + std::to_string(n), Element(), Element(Word::z(n + 1)));
}

LinearOperator derivation_Dbar(int n) {
    assert(n >= 1);
    return derivation("Dbar" + std::to_string(n), Element(tau_word(Word::z(n + 1))), Element());
}

// ---------------------------------------------------- twisted-Leibniz maps

namespace {

// Unrolled from the letter-wise rule: for w = u_1..u_k,
//   theta_c(w)    = sum_i pre theta(u_i) suf + c sum_i (k-i) pre d1(u_i) suf
//   thetahat_c(w) = sum_i pre theta(u_i) suf + c sum_i (i-1) pre d1(u_i) suf
// where d1(u) = sgn(u) xy and pre/suf are the flanking subwords.
Element theta_twisted_word(ThetaVariant variant, const Scalar& cparam, const Word& w) {
    static const Element tx = [] {
        Element x(Word::letter_x()), z = z_element();
        return (concat_mul(x, z) + concat_mul(z, x)).scaled(Rat(1, 2));
    }();
    static const Element ty = [] {
        Element y(Word::letter_y()), z = z_element();
        return (concat_mul(y, z) + concat_mul(z, y)).scaled(Rat(1, 2));
    }();
    const int k = w.weight();
    ElementBuilder acc;
    const Word xy = Word("xy");
    for (int i = 0; i < k; ++i) {
        Word pre = w.prefix(i), suf = w.suffix(k - 1 - i);
        int u = w.letter_at(i);
        acc.add((u == 0 ? tx : ty).word_concat(pre, suf));
        int mult = variant == ThetaVariant::Standard ? (k - 1 - i) : i;
        if (mult != 0) {
            Scalar co = cparam * Rat(u == 0 ? mult : -mult);
            acc.add(concat(concat(pre, xy), suf), co);
        }
    }
    return acc.build();
}

} // namespace

LinearOperator theta_twisted_op(ThetaVariant variant, Scalar cparam) {
    std::string desc = variant == ThetaVariant::Standard ? "thetac" : "thetahatc";
    return LinearOperator::from_word_action(
        desc,
        [variant, cparam](const Word& w) { return theta_twisted_word(variant, cparam, w); },
        false, 64, 1);
}

Element theta_twisted(ThetaVariant variant, const Element& e, const Scalar& cparam) {
    ElementBuilder acc;
    for (const auto& t : e.terms())
        acc.add_scaled(theta_twisted_word(variant, cparam, t.word), t.coeff);
    return acc.build();
}

// -------------------------------------------------------------- ad powers

namespace {

unsigned long binom(int n, int k) {
    unsigned long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long>(n - k + i) / i;
    return r;
}

} // namespace

LinearOperator ad_power(const LinearOperator& a, const LinearOperator& b, int k) {
    assert(k >= 0);
    LinearOperator ao = a, bo = b;
    std::optional<int> shift;
    if (ao.weight_shift() && bo.weight_shift())
        shift = k * *ao.weight_shift() + *bo.weight_shift();
    return LinearOperator::from_elem_action(
        "ad(" + a.descriptor() + ")^" + std::to_string(k) + "(" + b.descriptor() + ")",
        [ao, bo, k](const Element& e) {
            Element result;
            Element tj = e; // A^j(e)
            for (int j = 0; j <= k; ++j) {
                Element u = bo.apply(tj);
                for (int i = 0; i < k - j; ++i) u = ao.apply(u);
                Rat coeff(binom(k, j));
                if (j & 1) coeff = -coeff;
                result += u.scaled(coeff);
                if (j < k) tj = ao.apply(tj);
            }
            return result;
        },
        shift);
}

// ------------------------------------------------------- quasi-derivations

namespace {

Rat inv_factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rat(1) / Rat(f);
}

LinearOperator quasi_raw(ThetaVariant variant, int n, const Scalar& cparam) {
    LinearOperator th = theta_twisted_op(variant, cparam);
    LinearOperator d1 = derivation_dn(1);
    if (n == 1) return d1;
    return ad_power(th, d1, n - 1).scaled(inv_factorial(n - 1));
}

std::string quasi_desc(ThetaVariant v, int n) {
    return (v == ThetaVariant::Standard ? "d" : "dhat") + std::to_string(n) + "c";
}

} // namespace

LinearOperator quasi_derivation(ThetaVariant variant, int n, const Scalar& cparam,
                                bool memoize) {
    assert(n >= 1);
    LinearOperator raw = quasi_raw(variant, n, cparam);
    if (!memoize) return raw;
    // images of words beyond weight 12 are large; recompute those instead of
    // pinning them in the table
    return raw.with_word_memo(quasi_desc(variant, n), 12);
}

LinearOperator quasi_derivation(ThetaVariant variant, int n) {
    static std::map<std::pair<int, int>, LinearOperator> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(variant == ThetaVariant::Hat ? 1 : 0, n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, quasi_derivation(variant, n, Scalar::c(), true)).first;
    return it->second;
}

// ------------------------------------------------------------- phi and psi

namespace {

LinearOperator phi_raw(int n, const Scalar& cparam, bool memoize) {
    if (n == 0) return identity_op();
    LinearOperator prev = phi_op(n - 1, cparam, memoize);
    LinearOperator th = theta_twisted_op(ThetaVariant::Standard, cparam);
    LinearOperator rz = mul_op(Side::Right, z_element());
    LinearOperator d1 = derivation_dn(1);
    LinearOperator expr = commutator(th, prev) +
                          (compose(rz, prev) + compose(prev, rz)).scaled(Rat(1, 2)) +
                          compose(d1, prev).scaled(cparam);
    return expr.scaled(Rat(1, n));
}

} // namespace

LinearOperator phi_op(int n, const Scalar& cparam, bool memoize) {
    assert(n >= 0);
    LinearOperator raw = phi_raw(n, cparam, memoize);
    if (!memoize || n == 0) return raw;
    return raw.with_word_memo("phi" + std::to_string(n), 14);
}

LinearOperator phi_op(int n) {
    static std::map<int, LinearOperator> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, phi_op(n, Scalar::c(), true)).first;
    return it->second;
}

LinearOperator psi_op(int n, const Scalar& cparam, bool memoize) {
    assert(n >= 1);
    LinearOperator rx = mul_op(Side::Right, Word::letter_x());
    LinearOperator ry = mul_op(Side::Right, Word::letter_y());
    return compose(ry, compose(phi_op(n - 1, cparam, memoize), rx));
}

LinearOperator psi_op(int n) { return psi_op(n, Scalar::c(), true); }

// --------------------------------------------------- multiplication, division

LinearOperator mul_op(Side side, const Element& w) {
    Element ww = w;
    std::optional<int> shift;
    if (!ww.is_zero() && ww.homogeneous_of(ww.max_weight())) shift = ww.max_weight();
    if (side == Side::Left)
        return LinearOperator::from_elem_action(
            "L", [ww](const Element& e) { return concat_mul(ww, e); }, shift);
    return LinearOperator::from_elem_action(
        "R", [ww](const Element& e) { return concat_mul(e, ww); }, shift);
}

LinearOperator mul_op(Side side, const Word& w) {
    Word ww = w;
    if (side == Side::Left)
        return LinearOperator::from_elem_action(
            "L" + w.str(), [ww](const Element& e) { return e.word_concat(ww, Word()); },
            w.weight());
    return LinearOperator::from_elem_action(
        "R" + w.str(), [ww](const Element& e) { return e.word_concat(Word(), ww); }, w.weight());
}

Element exact_divide(Side side, int letter, const Element& e) {
    std::vector<Term> out;
    out.reserve(e.size());
    for (const auto& t : e.terms()) {
        const Word& w = t.word;
        bool ok = !w.empty() && (side == Side::Left ? w.first_letter() == letter
                                                    : w.last_letter() == letter);
        if (!ok)
            throw DivisionError("term " + w.str() + " does not " +
                                (side == Side::Left ? "start" : "end") + " with letter " +
                                (letter ? "y" : "x"));
        out.push_back({side == Side::Left ? w.drop_first() : w.drop_last(), t.coeff});
    }
    // stripping a shared head/tail letter preserves canonical order
    return Element::from_sorted(std::move(out));
}

// ------------------------------------------- truncated completion automorphisms

LinearOperator substitution_endo(std::string desc, Element img_x, Element img_y,
                                 TruncationBound bound) {
    const int W = bound.W;
    Element ix = truncate_weight(img_x, W), iy = truncate_weight(img_y, W);
    std::string name = desc + "@" + std::to_string(W);
    return LinearOperator::from_word_action(
        name,
        [ix, iy, W, name](const Word& w) {
            if (w.weight() > W)
                throw TruncationError(name + " applied to weight-" +
                                      std::to_string(w.weight()) + " word beyond bound " +
                                      std::to_string(W));
            Element acc = Element::unit();
            for (int i = 0; i < w.weight(); ++i) {
                acc = truncate_weight(concat_mul(acc, w.letter_at(i) == 0 ? ix : iy), W);
                if (acc.is_zero()) break;
            }
            return acc;
        },
        true, W);
}

namespace {

// prefix * (sign*y)^0..  truncated geometric tail in the given letter
Element geometric(const Element& prefix, const Word& ratio, int sign, int W) {
    Element out;
    Element cur = truncate_weight(prefix, W);
    Rat s(1);
    while (!cur.is_zero()) {
        out += cur.scaled(s);
        cur = truncate_weight(cur.word_concat(Word(), ratio), W);
        if (sign < 0) s = -s;
    }
    return out;
}

} // namespace

LinearOperator delta_endo(int W) {
    Element ix = geometric(Element(Word::letter_x()), Word::letter_y(), +1, W);
    Element iy = z_element() - ix;
    return substitution_endo("Delta", ix, iy, {W});
}

LinearOperator delta_inv_endo(int W) {
    // exp(-sum d_n/n), the inverse of the exponential form of Delta
    LinearOperator inv = exp_derivation(
        [](int n) { return derivation_dn(n).scaled(Rat(-1)); }, {W});
    return inv.with_word_memo("Deltainv@" + std::to_string(W), W);
}

LinearOperator cap_phi_endo(int W) {
    Element iz = geometric(z_element(), Word::letter_y(), -1, W);
    Element iy = iz - Element(Word::letter_x());
    return substitution_endo("Phi", Element(Word::letter_x()), iy, {W});
}

LinearOperator sigma_endo(int W) {
    // y -> (1-x)^{-1} y: x-runs in front of y
    Element iy;
    for (int j = 0; j + 1 <= W; ++j) iy += Element(Word::z(j + 1));
    return substitution_endo("sigma", Element(Word::letter_x()), iy, {W});
}

LinearOperator sigma_inv_endo(int W) {
    Element iy = Element(Word::letter_y()) - Element(Word("xy"));
    return substitution_endo("sigmainv", Element(Word::letter_x()), iy, {W});
}

LinearOperator sigma_bar_endo(int W) {
    Element ix = geometric(Element(Word::letter_x()), Word::letter_y(), +1, W);
    return substitution_endo("sigmabar", ix, Element(Word::letter_y()), {W});
}

// ------------------------------------------------------------ sigma_l direct

namespace {

void compositions(int l, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 1) {
        cur.push_back(l);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= l; ++e) {
        cur.push_back(e);
        compositions(l - e, parts - 1, cur, emit);
        cur.pop_back();
    }
}

} // namespace

Element sigma_l_direct(int l, const Element& e) {
    assert(l >= 0);
    ElementBuilder acc;
    for (const auto& t : e.terms()) {
        if (!t.word.in_h1())
            throw DomainError("sigma_l needs an H1 element, got word " + t.word.str());
        if (t.word.empty()) {
            if (l == 0) acc.add(t.word, t.coeff);
            continue;
        }
        std::vector<int> parts = t.word.z_parts();
        if (l == 0) {
            acc.add(t.word, t.coeff);
            continue;
        }
        std::vector<int> cur;
        compositions(l, static_cast<int>(parts.size()), cur,
                     [&](const std::vector<int>& es) {
                         std::vector<int> shifted(parts);
                         for (std::size_t i = 0; i < parts.size(); ++i) shifted[i] += es[i];
                         acc.add(Word::from_z_parts(shifted), t.coeff);
                     });
    }
    return acc.build();
}

// ------------------------------------------------------------ exp of derivations

LinearOperator exp_derivation(const std::function<LinearOperator(int)>& family,
                              TruncationBound bound) {
    const int W = bound.W;
    std::vector<LinearOperator> ops;
    for (int n = 1; n <= W; ++n) ops.push_back(family(n));
    return LinearOperator::from_elem_action("exp@" + std::to_string(W), [ops, W](const Element& e) {
        if (e.max_weight() > W)
            throw TruncationError("exp applied to weight-" + std::to_string(e.max_weight()) +
                                  " input beyond bound " + std::to_string(W));
        auto total = [&](const Element& v) {
            Element out;
            for (std::size_t n = 0; n < ops.size(); ++n)
                out += truncate_weight(ops[n].apply(v), W).scaled(Rat(1, static_cast<int>(n + 1)));
            return out;
        };
        Element sum = e;
        Element term = sum;
        for (int m = 1; !term.is_zero(); ++m) {
            term = total(term).scaled(Rat(1, m));
            sum += term;
        }
        return sum;
    });
}

} // namespace mzv
