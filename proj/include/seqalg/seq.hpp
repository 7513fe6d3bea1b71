#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seqalg/field.hpp"

namespace seqalg {

// Lazily evaluated, memoized coefficient stream over a coefficient field C.
// A Seq is a cheap shared handle to an immutable cell; each coefficient is
// computed at most once (write-once memo).  A per-index in-progress flag
// turns circular demand (an unproductive self-reference) into an error
// instead of unbounded recursion.
//
// Sequences may carry a finite-length marker: indices at or beyond the
// marker are zero and are answered without running the producer.  The
// marker is an upper bound on the support, not a canonical degree.
template <class C>
class Seq {
public:
    using Producer = std::function<C(std::uint64_t)>;

    // The zero sequence (finite, length 0).
    Seq() : cell_(std::make_shared<Cell>()) {
        cell_->finite_len = 0;
    }

    // Scalar embedding: a constant is the one-term sequence [a].
    Seq(const C& a) : Seq(from_coeffs({a})) {}
    Seq(long n) : Seq(C(field_traits<C>::from_integer(Integer(n)))) {}

    static Seq from_coeffs(std::vector<C> cs, bool finite = true) {
        Seq s = make(
            [cs](std::uint64_t n) {
                return n < cs.size() ? cs[n] : field_traits<C>::zero();
            },
            finite ? std::optional<std::uint64_t>(cs.size()) : std::nullopt);
        return s;
    }

    static Seq from_fn(Producer f,
                       std::optional<std::uint64_t> finite_len = std::nullopt) {
        return make(std::move(f), finite_len);
    }

    static Seq zero() { return Seq(); }
    static Seq one() { return Seq(C(field_traits<C>::one())); }
    static Seq x() {
        return from_coeffs({field_traits<C>::zero(), field_traits<C>::one()});
    }
    // The infinite constant stream [a, a, a, ...].
    static Seq repeat(const C& a) {
        return make([a](std::uint64_t) { return a; }, std::nullopt);
    }

    static Seq cons(const C& head, const Seq& tail) {
        std::optional<std::uint64_t> len;
        if (tail.finite_len()) len = *tail.finite_len() + 1;
        return make(
            [head, tail](std::uint64_t n) {
                return n == 0 ? head : tail.nth(n - 1);
            },
            len);
    }

    // Suspends construction of a sequence until its first coefficient is
    // demanded.  This is what keeps recursive definitions from unrolling
    // eagerly at build time.
    static Seq defer(std::function<Seq()> mk) {
        auto state = std::make_shared<DeferState>();
        state->make = std::move(mk);
        return make([state](std::uint64_t n) {
            if (!state->inner) {
                state->inner = state->make();
                state->make = nullptr;
            }
            return state->inner->nth(n);
        });
    }

    // Placeholder for self-referential definitions; see fix() below.
    static Seq unbound() {
        Seq s;
        s.cell_ = std::make_shared<Cell>();
        return s;
    }

    void bind(const Seq& body) {
        Seq b = body;
        cell_->produce = [b](std::uint64_t n) { return b.nth(n); };
    }

    C nth(std::uint64_t n) const {
        Cell& c = *cell_;
        if (c.finite_len && n >= *c.finite_len) return field_traits<C>::zero();
        if (n < c.memo.size() && c.memo[n]) return *c.memo[n];
        if (n < c.busy.size() && c.busy[n])
            throw Error(ErrorKind::NonProductive,
                        "sequence coefficient " + std::to_string(n) +
                            " depends on itself");
        if (!c.produce)
            throw Error(ErrorKind::NonProductive,
                        "demand on an unbound sequence placeholder");
        if (c.memo.size() <= n) {
            c.memo.resize(n + 1);
            c.busy.resize(n + 1, false);
        }
        c.busy[n] = true;
        BusyGuard guard{&c, n};
        C v = c.produce(n);
        c.memo[n] = v;
        return v;
    }

    std::optional<std::uint64_t> finite_len() const { return cell_->finite_len; }
    bool is_finite() const { return cell_->finite_len.has_value(); }

    std::vector<C> take(std::size_t n) const {
        std::vector<C> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(nth(i));
        return out;
    }

    std::vector<Integer> take_whole(std::size_t n) const {
        std::vector<Integer> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(field_traits<C>::to_whole(nth(i)));
        return out;
    }

    Seq tail() const { return drop(*this, 1); }

private:
    struct Cell {
        Producer produce;
        std::optional<std::uint64_t> finite_len;
        std::vector<std::optional<C>> memo;
        std::vector<bool> busy;
    };

    struct DeferState {
        std::function<Seq()> make;
        std::optional<Seq> inner;
    };

    struct BusyGuard {
        Cell* c;
        std::uint64_t n;
        ~BusyGuard() { c->busy[n] = false; }
    };

    static Seq make(Producer f, std::optional<std::uint64_t> len = std::nullopt) {
        Seq s;
        s.cell_ = std::make_shared<Cell>();
        s.cell_->produce = std::move(f);
        s.cell_->finite_len = len;
        return s;
    }

    std::shared_ptr<Cell> cell_;

    template <class D, class F>
    friend Seq<D> fix(F&& builder);
};

// ---- zero test for sequences used as coefficients --------------------------

template <class C>
bool seq_is_zero(const Seq<C>& s) {
    if (!s.is_finite()) return false; // conservatively nonzero: undecidable
    std::uint64_t len = *s.finite_len();
    for (std::uint64_t i = 0; i < len; ++i)
        if (!field_traits<C>::is_zero(s.nth(i))) return false;
    return true;
}

template <class C>
std::string seq_to_string(const Seq<C>& s, std::size_t n);

// Polynomials over C are finite sequences; they serve as the coefficient
// field of two-variable sequences.  Division of polynomials is not closed,
// so exact_zero_test is off and the engine never runs polynomial long
// division with these coefficients.
template <class C>
struct field_traits<Seq<C>> {
    static constexpr bool exact_zero_test = false;
    static Seq<C> zero() { return Seq<C>::zero(); }
    static Seq<C> one() { return Seq<C>::one(); }
    static Seq<C> from_integer(const Integer& n) {
        return Seq<C>(C(field_traits<C>::from_integer(n)));
    }
    static bool is_zero(const Seq<C>& s) { return seq_is_zero(s); }
    static bool is_one(const Seq<C>& s) {
        if (!s.is_finite()) return false;
        if (!field_traits<C>::is_one(s.nth(0))) return false;
        std::uint64_t len = *s.finite_len();
        for (std::uint64_t i = 1; i < len; ++i)
            if (!field_traits<C>::is_zero(s.nth(i))) return false;
        return true;
    }
    static Integer to_whole(const Seq<C>& s) {
        if (!is_zero(drop(s, 1)))
            throw Error(ErrorKind::NotWhole, "non-constant polynomial");
        return field_traits<C>::to_whole(s.nth(0));
    }
    static std::string to_string(const Seq<C>& s) {
        std::uint64_t len = s.is_finite() ? *s.finite_len() : 8;
        return seq_to_string(s, static_cast<std::size_t>(len));
    }
};

// ---- basic combinators ------------------------------------------------------

template <class C>
Seq<C> drop(const Seq<C>& f, std::uint64_t k) {
    std::optional<std::uint64_t> len;
    if (f.finite_len()) len = *f.finite_len() > k ? *f.finite_len() - k : 0;
    return Seq<C>::from_fn([f, k](std::uint64_t n) { return f.nth(n + k); }, len);
}

// Multiplication by x^k.
template <class C>
Seq<C> shift(const Seq<C>& f, std::uint64_t k) {
    std::optional<std::uint64_t> len;
    if (f.finite_len()) len = *f.finite_len() + k;
    return Seq<C>::from_fn(
        [f, k](std::uint64_t n) {
            return n < k ? field_traits<C>::zero() : f.nth(n - k);
        },
        len);
}

template <class C>
Seq<C> operator+(const Seq<C>& f, const Seq<C>& g) {
    std::optional<std::uint64_t> len;
    if (f.finite_len() && g.finite_len())
        len = std::max(*f.finite_len(), *g.finite_len());
    return Seq<C>::from_fn(
        [f, g](std::uint64_t n) { return f.nth(n) + g.nth(n); }, len);
}

template <class C>
Seq<C> operator-(const Seq<C>& f) {
    return Seq<C>::from_fn([f](std::uint64_t n) { return -f.nth(n); },
                           f.finite_len());
}

template <class C>
Seq<C> operator-(const Seq<C>& f, const Seq<C>& g) {
    std::optional<std::uint64_t> len;
    if (f.finite_len() && g.finite_len())
        len = std::max(*f.finite_len(), *g.finite_len());
    return Seq<C>::from_fn(
        [f, g](std::uint64_t n) { return f.nth(n) - g.nth(n); }, len);
}

template <class C>
Seq<C> scalar_mul(const C& a, const Seq<C>& f) {
    return Seq<C>::from_fn([a, f](std::uint64_t n) { return a * f.nth(n); },
                           f.finite_len());
}

// Convolution product.  The inner loop first skips the zero prefix of the
// left factor without touching the right factor at all; this makes products
// such as x * s "one coefficient ahead" and keeps guarded self-referential
// definitions productive.
template <class C>
Seq<C> operator*(const Seq<C>& f, const Seq<C>& g) {
    std::optional<std::uint64_t> len;
    if (f.finite_len() && g.finite_len()) {
        if (*f.finite_len() == 0 || *g.finite_len() == 0)
            len = 0;
        else
            len = *f.finite_len() + *g.finite_len() - 1;
    } else if ((f.finite_len() && *f.finite_len() == 0) ||
               (g.finite_len() && *g.finite_len() == 0)) {
        len = 0; // annihilation by the zero polynomial
    }
    return Seq<C>::from_fn(
        [f, g](std::uint64_t n) {
            std::uint64_t k = 0;
            while (k <= n && field_traits<C>::is_zero(f.nth(k))) ++k;
            if (k > n) return field_traits<C>::zero();
            C acc = field_traits<C>::zero();
            for (std::uint64_t j = k; j <= n; ++j) {
                C fj = f.nth(j);
                if (field_traits<C>::is_zero(fj)) continue;
                acc = acc + fj * g.nth(n - j);
            }
            return acc;
        },
        len);
}

// ---- division ---------------------------------------------------------------

namespace detail {

// Trimmed coefficient list of a finite sequence (exactly zero-testable C
// only); empty result means the zero polynomial.
template <class C>
std::vector<C> trimmed_coeffs(const Seq<C>& f) {
    std::vector<C> cs = f.take(static_cast<std::size_t>(*f.finite_len()));
    while (!cs.empty() && field_traits<C>::is_zero(cs.back())) cs.pop_back();
    return cs;
}

// Classic long division of finite polynomials.  Returns the quotient when
// the division is exact, nothing otherwise.
template <class C>
std::optional<std::vector<C>> poly_exact_div(std::vector<C> f,
                                             const std::vector<C>& g) {
    if (f.size() < g.size()) return std::nullopt;
    std::size_t qlen = f.size() - g.size() + 1;
    std::vector<C> q(qlen, field_traits<C>::zero());
    for (std::size_t i = qlen; i-- > 0;) {
        C c = f[i + g.size() - 1] / g.back();
        q[i] = c;
        if (!field_traits<C>::is_zero(c))
            for (std::size_t j = 0; j < g.size(); ++j)
                f[i + j] = f[i + j] - c * g[j];
    }
    for (const C& r : f)
        if (!field_traits<C>::is_zero(r)) return std::nullopt;
    return q;
}

} // namespace detail

// Quotient of formal power series.  Leading zeros cancel pairwise; a
// nonzero numerator head over a zero denominator head is a division by
// zero.  When both operands are finite polynomials over an exactly
// zero-testable field and the division is exact, the quotient is returned
// as a finite polynomial (this keeps x/x == 1 a polynomial, which the
// two-variable layer depends on).
template <class C>
Seq<C> operator/(const Seq<C>& f, const Seq<C>& g) {
    if (g.is_finite() && field_traits<C>::exact_zero_test) {
        std::vector<C> gc = detail::trimmed_coeffs(g);
        if (gc.empty())
            throw Error(ErrorKind::DivideByZero, "division by the zero polynomial");
        if (f.is_finite()) {
            std::vector<C> fc = detail::trimmed_coeffs(f);
            if (fc.empty()) return Seq<C>::zero();
            if (auto q = detail::poly_exact_div(fc, gc))
                return Seq<C>::from_coeffs(std::move(*q));
        }
    }

    struct State {
        bool init = false;
        bool zero_result = false;
        std::uint64_t shift = 0;
        std::vector<C> q;
    };
    auto st = std::make_shared<State>();
    Seq<C> fs = f, gs = g;
    return Seq<C>::from_fn([st, fs, gs](std::uint64_t n) {
        if (!st->init) {
            std::uint64_t k = 0;
            for (;; ++k) {
                if (gs.finite_len() && k >= *gs.finite_len())
                    throw Error(ErrorKind::DivideByZero,
                                "division by the zero polynomial");
                if (!field_traits<C>::is_zero(gs.nth(k))) {
                    st->shift = k;
                    break;
                }
                if (fs.finite_len() && k >= *fs.finite_len()) {
                    st->zero_result = true; // 0 / g == 0
                    break;
                }
                if (!field_traits<C>::is_zero(fs.nth(k)))
                    throw Error(ErrorKind::DivideByZero,
                                "quotient head divides by zero");
            }
            st->init = true;
        }
        if (st->zero_result) return field_traits<C>::zero();
        C g0 = gs.nth(st->shift);
        while (st->q.size() <= n) {
            std::uint64_t m = st->q.size();
            C acc = fs.nth(m + st->shift);
            for (std::uint64_t j = 0; j < m; ++j) {
                if (field_traits<C>::is_zero(st->q[j])) continue;
                acc = acc - st->q[j] * gs.nth(m - j + st->shift);
            }
            st->q.push_back(acc / g0);
        }
        return st->q[n];
    });
}

// ---- fixpoints ---------------------------------------------------------------

// Solves s = builder(s) for a self-referential sequence definition.  The
// builder receives a placeholder handle and must return a sequence whose
// coefficient n only demands placeholder coefficients below n; otherwise
// demanding a coefficient raises NonProductive.
template <class C, class F>
Seq<C> fix(F&& builder) {
    Seq<C> p = Seq<C>::unbound();
    p.bind(builder(p));
    return p;
}

// ---- square root --------------------------------------------------------------

template <class C>
Seq<C> sqroot(const Seq<C>& f) {
    return Seq<C>::defer([f]() {
        std::uint64_t s = 0;
        while (field_traits<C>::is_zero(f.nth(2 * s))) {
            if (f.finite_len() && 2 * s >= *f.finite_len()) break;
            if (!field_traits<C>::is_zero(f.nth(2 * s + 1)))
                throw Error(ErrorKind::NotASquareRootDomain,
                            "odd-order zero has no square root");
            ++s;
        }
        if (seq_is_zero(f)) return Seq<C>::zero();
        if (!field_traits<C>::is_one(f.nth(2 * s)))
            throw Error(ErrorKind::NotASquareRootDomain,
                        "square root requires unit head after cancellation");
        Seq<C> rest = drop(f, 2 * s + 1);
        Seq<C> r = fix<C>([rest](const Seq<C>& r) {
            return Seq<C>::cons(field_traits<C>::one(),
                                rest / (Seq<C>::one() + r));
        });
        return shift(r, s);
    });
}

// ---- composition ---------------------------------------------------------------

// f o g.  A finite f is evaluated by Horner's rule, valid for any g.  An
// infinite f requires g with zero head; composing an infinite f with a
// nonzero-head g would demand infinitely many coefficients for a single
// output coefficient.
template <class C>
Seq<C> compose(const Seq<C>& f, const Seq<C>& g) {
    if (f.is_finite()) {
        std::uint64_t len = *f.finite_len();
        if (len == 0) return Seq<C>::zero();
        Seq<C> r(f.nth(len - 1));
        for (std::uint64_t k = len - 1; k-- > 0;)
            r = Seq<C>(f.nth(k)) + g * r;
        return r;
    }
    return Seq<C>::defer([f, g]() {
        if (!field_traits<C>::is_zero(g.nth(0)))
            throw Error(ErrorKind::NonTerminatingComposition,
                        "composition of an infinite series with a series whose "
                        "head is nonzero");
        return Seq<C>::cons(f.nth(0), g.tail() * compose(f.tail(), g));
    });
}

// ---- compositional inverse ------------------------------------------------------

// Compositional inverse of f with f = 0 + f1 x + ..., f1 invertible:
// the unique g with (f o g) = x (and (g o f) = x).
template <class C>
Seq<C> converse(const Seq<C>& f) {
    return Seq<C>::defer([f]() {
        if (!field_traits<C>::is_zero(f.nth(0)))
            throw Error(ErrorKind::NotConversible,
                        "compositional inverse requires zero head");
        if (field_traits<C>::is_zero(f.nth(1)))
            throw Error(ErrorKind::NotConversible,
                        "compositional inverse requires invertible x-coefficient");
        Seq<C> ft = f.tail();
        return fix<C>([ft](const Seq<C>& g) {
            return Seq<C>::cons(field_traits<C>::zero(),
                                Seq<C>::one() / compose(ft, g));
        });
    });
}

// ---- integer powers ----------------------------------------------------------

template <class C>
Seq<C> pow_int(const Seq<C>& f, long e) {
    if (e < 0) return Seq<C>::one() / pow_int(f, -e);
    Seq<C> r = Seq<C>::one();
    for (long i = 0; i < e; ++i) r = r * f;
    return r;
}

// ---- finite-sequence utilities -------------------------------------------------

// Canonical reversal of a polynomial's coefficient list (trailing zeros
// trimmed first).  Errors on sequences without a finite-length marker.
template <class C>
Seq<C> reverse_poly(const Seq<C>& p) {
    if (!p.is_finite())
        throw Error(ErrorKind::InfiniteInput, "cannot reverse an infinite sequence");
    std::vector<C> cs = p.take(static_cast<std::size_t>(*p.finite_len()));
    while (!cs.empty() && field_traits<C>::is_zero(cs.back())) cs.pop_back();
    std::reverse(cs.begin(), cs.end());
    return Seq<C>::from_coeffs(std::move(cs));
}

template <class C>
bool prefix_eq(const Seq<C>& f, const Seq<C>& g, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (!(f.nth(i) == g.nth(i))) return false;
    return true;
}

template <class C>
std::string seq_to_string(const Seq<C>& s, std::size_t n) {
    std::string out = "[";
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ",";
        out += field_traits<C>::to_string(s.nth(i));
    }
    out += "]";
    return out;
}

} // namespace seqalg
