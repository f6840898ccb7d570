// Exact coefficient arithmetic for the cyclotomic engine:
// the ring Z[q^{+-1}, Q_1..Q_r], its fraction field, prime-field and
// rational specializations, and a unified runtime scalar used by the
// linear algebra layer.
#ifndef AK_COEFF_HPP
#define AK_COEFF_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ak {

using Int = mpz_class;
using Rat = mpq_class;

// A monomial q^qe * Q_1^qs[0] * ... * Q_r^qs[r-1].  qe may be negative
// (q is a unit); the Q exponents are non-negative.
struct Monomial {
    int qe = 0;
    std::vector<int> qs;

    int total_degree() const {
        int d = qe;
        for (int e : qs) d += e;
        return d;
    }
    // Graded lex: grade first, then (qe, qs) lexicographically.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        if (a.qe != b.qe) return a.qe < b.qe;
        return a.qs < b.qs;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.qe == b.qe && a.qs == b.qs;
    }
    Monomial times(const Monomial& o) const {
        Monomial m = *this;
        m.qe += o.qe;
        for (size_t i = 0; i < qs.size(); ++i) m.qs[i] += o.qs[i];
        return m;
    }
    // Division in the Laurent sense: q exponents always divide.
    std::optional<Monomial> divided_by(const Monomial& o) const {
        Monomial m = *this;
        m.qe -= o.qe;
        for (size_t i = 0; i < qs.size(); ++i) {
            m.qs[i] -= o.qs[i];
            if (m.qs[i] < 0) return std::nullopt;
        }
        return m;
    }
};

// Sparse element of Z[q^{+-1}, Q_1..Q_r]; no zero coefficients stored,
// terms ordered by the fixed monomial order (so printing is canonical).
class Coeff {
public:
    Coeff() : r_(0) {}
    explicit Coeff(int r) : r_(r) {}

    static Coeff zero(int r) { return Coeff(r); }
    static Coeff from_int(int r, const Int& c) {
        Coeff a(r);
        if (c != 0) a.terms_[Monomial{0, std::vector<int>(r, 0)}] = c;
        return a;
    }
    static Coeff one(int r) { return from_int(r, 1); }
    static Coeff q_pow(int r, int e, const Int& c = 1) {
        Coeff a(r);
        if (c != 0) a.terms_[Monomial{e, std::vector<int>(r, 0)}] = c;
        return a;
    }
    // Q_s, 1-based s.
    static Coeff Q(int r, int s, int e = 1) {
        Coeff a(r);
        Monomial m{0, std::vector<int>(r, 0)};
        m.qs[s - 1] = e;
        a.terms_[m] = 1;
        return a;
    }

    int rank() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->second == 1 &&
               terms_.begin()->first == Monomial{0, std::vector<int>(r_, 0)};
    }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    size_t num_terms() const { return terms_.size(); }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Coeff operator-() const {
        Coeff a(r_);
        for (auto& [m, c] : terms_) a.terms_[m] = -c;
        return a;
    }
    Coeff& operator+=(const Coeff& o) {
        check_rank(o);
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Coeff& operator-=(const Coeff& o) {
        check_rank(o);
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(const Coeff& a, const Coeff& b) {
        a.check_rank(b);
        Coeff p(a.r_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) p.add_term(ma.times(mb), ca * cb);
        return p;
    }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
    friend bool operator==(const Coeff& a, const Coeff& b) {
        return a.r_ == b.r_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

    Coeff pow(int e) const {
        Coeff p = one(r_);
        for (int i = 0; i < e; ++i) p *= *this;
        return p;
    }

    const Int& leading_int() const { return terms_.rbegin()->second; }
    const Monomial& leading_monomial() const { return terms_.rbegin()->first; }

    // Exact division test; returns the quotient iff o divides *this.
    std::optional<Coeff> divided_by(const Coeff& o) const {
        check_rank(o);
        if (o.is_zero()) throw std::domain_error("Coeff: division by zero");
        Coeff rem = *this, quot(r_);
        while (!rem.is_zero()) {
            auto mono = rem.leading_monomial().divided_by(o.leading_monomial());
            if (!mono) return std::nullopt;
            Int c, r;
            mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(),
                        rem.leading_int().get_mpz_t(),
                        o.leading_int().get_mpz_t());
            if (r != 0) return std::nullopt;
            Coeff t(r_);
            t.terms_[*mono] = c;
            quot += t;
            rem -= t * o;
        }
        return quot;
    }

    // gcd of the integer coefficients (non-negative; 0 for the zero poly).
    Int content() const {
        Int g = 0;
        for (auto& [m, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        return g;
    }
    // Componentwise-minimal monomial factor (q exponent included: q is a unit).
    Monomial monomial_content() const {
        Monomial g{0, std::vector<int>(r_, 0)};
        bool first = true;
        for (auto& [m, c] : terms_) {
            if (first) {
                g = m;
                first = false;
            } else {
                g.qe = std::min(g.qe, m.qe);
                for (int i = 0; i < r_; ++i) g.qs[i] = std::min(g.qs[i], m.qs[i]);
            }
        }
        return g;
    }
    Coeff divide_monomial(const Monomial& g) const {
        Coeff a(r_);
        for (auto& [m, c] : terms_) a.terms_[*m.divided_by(g)] = c;
        return a;
    }
    Coeff divide_int(const Int& g) const {
        Coeff a(r_);
        for (auto& [m, c] : terms_) a.terms_[m] = c / g;
        return a;
    }

    // The generic involution on coefficients: q -> -q^{-1}, Q_s -> Q_{r-s+1}.
    Coeff primed() const {
        Coeff a(r_);
        for (auto& [m, c] : terms_) {
            Monomial pm{-m.qe, std::vector<int>(m.qs.rbegin(), m.qs.rend())};
            a.add_term(pm, (m.qe % 2 == 0) ? c : -c);
        }
        return a;
    }

    std::string str() const;
    static Coeff parse(int r, const std::string& s);

private:
    void check_rank(const Coeff& o) const {
        if (r_ != o.r_) throw std::invalid_argument("Coeff: parameter rank mismatch");
    }
    int r_;
    std::map<Monomial, Int> terms_;
};

// Prime-field element (small prime, value reduced to [0,p)).
struct Fp {
    long v = 0;
    long p = 0;

    static long inv_mod(long a, long p) {
        long t = 0, nt = 1, r = p, nr = a % p;
        if (nr < 0) nr += p;
        while (nr != 0) {
            long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        if (r != 1) throw std::domain_error("Fp: element not invertible");
        return t < 0 ? t + p : t;
    }
    friend Fp operator+(Fp a, Fp b) { return {(a.v + b.v) % a.p, a.p}; }
    friend Fp operator-(Fp a, Fp b) { return {((a.v - b.v) % a.p + a.p) % a.p, a.p}; }
    friend Fp operator*(Fp a, Fp b) { return {(a.v * b.v) % a.p, a.p}; }
    friend Fp operator/(Fp a, Fp b) { return {(a.v * inv_mod(b.v, b.p)) % a.p, a.p}; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v && a.p == b.p; }
};

// Lazily reduced fraction num/den of Coeffs.  Full multivariate gcd is
// deliberately avoided: reduction strips integer content, unit monomial
// factors and tries exact division, which is enough at desk scale.
class Ratio {
public:
    Ratio() = default;
    explicit Ratio(Coeff n) : num_(std::move(n)), den_(Coeff::one(num_.rank())) {}
    Ratio(Coeff n, Coeff d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("Ratio: zero denominator");
        reduce();
    }

    const Coeff& num() const { return num_; }
    const Coeff& den() const { return den_; }
    int rank() const { return num_.rank(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend Ratio operator+(const Ratio& a, const Ratio& b) {
        if (a.den_ == b.den_) return Ratio(a.num_ + b.num_, a.den_);
        return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Ratio operator-(const Ratio& a, const Ratio& b) {
        if (a.den_ == b.den_) return Ratio(a.num_ - b.num_, a.den_);
        return Ratio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Ratio operator*(const Ratio& a, const Ratio& b) {
        return Ratio(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Ratio operator/(const Ratio& a, const Ratio& b) {
        if (b.is_zero()) throw std::domain_error("Ratio: division by zero");
        return Ratio(a.num_ * b.den_, a.den_ * b.num_);
    }
    Ratio operator-() const { return Ratio(-num_, den_); }
    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Coeff::one(num_.rank());
            return;
        }
        if (auto q = num_.divided_by(den_)) {
            num_ = std::move(*q);
            den_ = Coeff::one(num_.rank());
        } else {
            Monomial gm = num_.monomial_content();
            Monomial gd = den_.monomial_content();
            Monomial g{std::min(gm.qe, gd.qe), gm.qs};
            for (size_t i = 0; i < g.qs.size(); ++i) g.qs[i] = std::min(gm.qs[i], gd.qs[i]);
            num_ = num_.divide_monomial(g);
            Monomial dg{gd.qe - g.qe, gd.qs};
            for (size_t i = 0; i < g.qs.size(); ++i) dg.qs[i] = gd.qs[i] - g.qs[i];
            (void)dg;
            den_ = den_.divide_monomial(g);
            Int c = num_.content(), d = den_.content(), gg;
            mpz_gcd(gg.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
            if (gg > 1) {
                num_ = num_.divide_int(gg);
                den_ = den_.divide_int(gg);
            }
        }
        if (den_.leading_int() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
    Coeff num_, den_;
};

// A choice of target field and parameter values q, Q_1..Q_r.
struct Specialization {
    bool prime_field = false;
    long p = 0;
    Rat qv;
    std::vector<Rat> Qv;
    bool distinct_Q = false;
    bool nonzero_Q = false;

    int rank() const { return static_cast<int>(Qv.size()); }

    long reduce_mod_p(const Rat& x) const {
        Int n = x.get_num(), d = x.get_den();
        long nv = static_cast<long>(mpz_fdiv_ui(n.get_mpz_t(), p));
        long dv = static_cast<long>(mpz_fdiv_ui(d.get_mpz_t(), p));
        return (nv * Fp::inv_mod(dv, p)) % p;
    }

    void validate_and_flag() {
        if (prime_field) {
            if (p < 2) throw std::invalid_argument("Specialization: bad prime");
            if (reduce_mod_p(qv) == 0)
                throw std::invalid_argument("Specialization: q not invertible");
            distinct_Q = true;
            nonzero_Q = true;
            for (size_t i = 0; i < Qv.size(); ++i) {
                if (reduce_mod_p(Qv[i]) == 0) nonzero_Q = false;
                for (size_t j = i + 1; j < Qv.size(); ++j)
                    if (reduce_mod_p(Qv[i]) == reduce_mod_p(Qv[j])) distinct_Q = false;
            }
        } else {
            if (qv == 0) throw std::invalid_argument("Specialization: q not invertible");
            distinct_Q = true;
            nonzero_Q = true;
            for (size_t i = 0; i < Qv.size(); ++i) {
                if (Qv[i] == 0) nonzero_Q = false;
                for (size_t j = i + 1; j < Qv.size(); ++j)
                    if (Qv[i] == Qv[j]) distinct_Q = false;
            }
        }
    }

    Rat eval_rat(const Coeff& c) const {
        Rat acc = 0;
        for (auto& [m, z] : c.terms()) {
            Rat t(z);
            Rat qp = 1;
            int e = m.qe;
            Rat base = e >= 0 ? qv : Rat(1) / qv;
            for (int i = 0; i < std::abs(e); ++i) qp *= base;
            t *= qp;
            for (int s = 0; s < c.rank(); ++s)
                for (int i = 0; i < m.qs[s]; ++i) t *= Qv[s];
            acc += t;
        }
        acc.canonicalize();
        return acc;
    }
    Fp eval_fp(const Coeff& c) const {
        long qm = reduce_mod_p(qv);
        long qi = Fp::inv_mod(qm, p);
        Fp acc{0, p};
        for (auto& [m, z] : c.terms()) {
            long base = m.qe >= 0 ? qm : qi;
            Fp t{static_cast<long>(mpz_fdiv_ui(z.get_mpz_t(), p)), p};
            for (int i = 0; i < std::abs(m.qe); ++i) t = t * Fp{base, p};
            for (int s = 0; s < c.rank(); ++s)
                for (int i = 0; i < m.qs[s]; ++i)
                    t = t * Fp{reduce_mod_p(Qv[s]), p};
            acc = acc + t;
        }
        return acc;
    }

    // Accepts "q=2,Q1=3,Q2=5,field=Q" or "field=F5"; unset values default
    // to q=1, Q_s=s.
    static Specialization parse(int r, const std::string& s);
    std::string str() const;
};

// The working coefficient domain: the generic fraction field or a
// specialized field.  All Scalars are tagged by construction through a
// Domain, so mode mixing is a programming error that throws.
class Scalar;
struct Domain {
    enum class Kind { Generic, Rational, PrimeField };
    Kind kind = Kind::Generic;
    int r = 1;
    std::shared_ptr<const Specialization> spec;

    static Domain generic(int r) { return Domain{Kind::Generic, r, nullptr}; }
    static Domain specialized(std::shared_ptr<const Specialization> s) {
        return Domain{s->prime_field ? Kind::PrimeField : Kind::Rational,
                      s->rank(), std::move(s)};
    }
    bool is_generic() const { return kind == Kind::Generic; }
    bool operator==(const Domain& o) const {
        return kind == o.kind && r == o.r && spec == o.spec;
    }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_coeff(const Coeff& c) const;
    // Convenience symbols in the working domain.
    Scalar q(int e = 1) const;
    Scalar Q(int s) const;
};

class Scalar {
public:
    Scalar() : v_(Ratio(Coeff::zero(1))) {}
    explicit Scalar(Ratio r) : v_(std::move(r)) {}
    explicit Scalar(Rat r) : v_(std::move(r)) {}
    explicit Scalar(Fp f) : v_(f) {}

    bool is_zero() const {
        if (auto* r = std::get_if<Ratio>(&v_)) return r->is_zero();
        if (auto* r = std::get_if<Rat>(&v_)) return *r == 0;
        return std::get<Fp>(v_).v == 0;
    }
    bool is_generic() const { return std::holds_alternative<Ratio>(v_); }
    const Ratio& ratio() const { return std::get<Ratio>(v_); }
    const Rat& rational() const { return std::get<Rat>(v_); }
    Fp fp() const { return std::get<Fp>(v_); }

#define AK_SCALAR_BINOP(op)                                                    \
    friend Scalar operator op(const Scalar& a, const Scalar& b) {              \
        if (a.v_.index() != b.v_.index())                                      \
            throw std::invalid_argument("Scalar: mixed coefficient domains");  \
        if (auto* x = std::get_if<Ratio>(&a.v_))                               \
            return Scalar(*x op std::get<Ratio>(b.v_));                        \
        if (auto* x = std::get_if<Rat>(&a.v_)) {                               \
            Rat rr = *x op std::get<Rat>(b.v_);                                \
            rr.canonicalize();                                                 \
            return Scalar(rr);                                                 \
        }                                                                      \
        return Scalar(std::get<Fp>(a.v_) op std::get<Fp>(b.v_));               \
    }
    AK_SCALAR_BINOP(+)
    AK_SCALAR_BINOP(-)
    AK_SCALAR_BINOP(*)
    AK_SCALAR_BINOP(/)
#undef AK_SCALAR_BINOP

    Scalar operator-() const {
        if (auto* x = std::get_if<Ratio>(&v_)) return Scalar(-*x);
        if (auto* x = std::get_if<Rat>(&v_)) return Scalar(Rat(-*x));
        Fp f = std::get<Fp>(v_);
        return Scalar(Fp{(f.p - f.v) % f.p, f.p});
    }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.v_.index() != b.v_.index())
            throw std::invalid_argument("Scalar: mixed coefficient domains");
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const {
        if (auto* x = std::get_if<Ratio>(&v_)) return x->str();
        if (auto* x = std::get_if<Rat>(&v_)) return x->get_str();
        return std::to_string(std::get<Fp>(v_).v);
    }

private:
    std::variant<Ratio, Rat, Fp> v_;
};

inline Scalar Domain::zero() const { return from_int(0); }
inline Scalar Domain::one() const { return from_int(1); }
inline Scalar Domain::from_int(long v) const {
    switch (kind) {
        case Kind::Generic: return Scalar(Ratio(Coeff::from_int(r, v)));
        case Kind::Rational: return Scalar(Rat(v));
        default: {
            long m = v % spec->p;
            return Scalar(Fp{m < 0 ? m + spec->p : m, spec->p});
        }
    }
}
inline Scalar Domain::from_coeff(const Coeff& c) const {
    switch (kind) {
        case Kind::Generic: return Scalar(Ratio(c));
        case Kind::Rational: return Scalar(spec->eval_rat(c));
        default: return Scalar(spec->eval_fp(c));
    }
}
inline Scalar Domain::q(int e) const { return from_coeff(Coeff::q_pow(r, e)); }
inline Scalar Domain::Q(int s) const { return from_coeff(Coeff::Q(r, s)); }

}  // namespace ak

#endif
