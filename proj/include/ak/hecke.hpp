// The cyclotomic Hecke algebra H_{r,n}: normal-form arithmetic in the
// basis L_1^{a_1}...L_n^{a_n} T_w, the involutions * and ', the
// distinguished cellular elements, the trace form and its pairing.
#ifndef AK_HECKE_HPP
#define AK_HECKE_HPP

#include "ak/coeff.hpp"
#include "ak/comb.hpp"
#include "ak/linalg.hpp"

#include <array>
#include <map>
#include <memory>
#include <vector>

namespace ak {

// Precomputed data for the symmetric group S_n (n small): one-line forms,
// lengths, canonical reduced words, generator products and inverses.
struct SymGroup {
    int n;
    std::vector<std::vector<int>> oneline;
    std::map<std::vector<int>, int> index_of;
    std::vector<int> len;
    std::vector<std::vector<int>> word;  // lexicographically smallest reduced word
    std::vector<int> inv;
    // rgen[w][i-1] = index of w*s_i; lgen[w][i-1] = index of s_i*w.
    std::vector<std::vector<int>> rgen, lgen;

    size_t size() const { return oneline.size(); }
    Perm perm(int idx) const { return Perm{oneline[idx]}; }
    int idx(const Perm& p) const { return index_of.at(p.w); }

    static const SymGroup& get(int n);
};

struct HKey {
    std::vector<int8_t> a;
    int w;
    bool operator<(const HKey& o) const {
        if (a != o.a) return a < o.a;
        return w < o.w;
    }
    bool operator==(const HKey& o) const { return a == o.a && w == o.w; }
};

class Algebra;

class HElem {
public:
    HElem() : A_(nullptr) {}
    explicit HElem(const Algebra* A) : A_(A) {}

    const Algebra* algebra() const { return A_; }
    const std::map<HKey, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t num_terms() const { return t_.size(); }

    void add_term(const HKey& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(k, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    HElem& operator+=(const HElem& o) {
        check(o);
        for (auto& [k, c] : o.t_) add_term(k, c);
        return *this;
    }
    HElem& operator-=(const HElem& o) {
        check(o);
        for (auto& [k, c] : o.t_) add_term(k, -c);
        return *this;
    }
    friend HElem operator+(HElem a, const HElem& b) { return a += b; }
    friend HElem operator-(HElem a, const HElem& b) { return a -= b; }
    HElem scaled(const Scalar& c) const {
        HElem out(A_);
        if (c.is_zero()) return out;
        for (auto& [k, v] : t_) out.t_.emplace(k, v * c);
        return out;
    }
    bool operator==(const HElem& o) const { return t_ == o.t_; }
    bool operator!=(const HElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check(const HElem& o) const {
        if (A_ != o.A_) throw std::invalid_argument("HElem: ambient algebra mismatch");
    }
    const Algebra* A_;
    std::map<HKey, Scalar> t_;
};

// Ambient algebra context: parameters, working domain, and the caches
// driving normal-form multiplication.
class Algebra {
public:
    Algebra(int n, int r, Domain dom);

    const int n, r;
    const Domain dom;
    const SymGroup& sg;

    size_t dim() const { return dim_; }

    Scalar xi() const { return xi_; }  // q - q^{-1}

    HElem zero() const { return HElem(this); }
    HElem one() const;
    HElem basis(const std::vector<int8_t>& a, int w) const;
    HElem gen_T(int i) const;  // T_i, 0 <= i < n
    HElem gen_L(int k) const;  // L_k, 1 <= k <= n

    HElem rmul_gen(const HElem& h, int i) const;
    HElem rmul_L(const HElem& h, int k) const;
    HElem mul(const HElem& a, const HElem& b) const;
    HElem star(const HElem& h) const;
    HElem prime(const HElem& h) const;

    Scalar tau(const HElem& h) const;
    Scalar pair(const HElem& a, const HElem& b) const;

    // Fixed coordinatization of H on the normal-form basis.
    size_t key_index(const HKey& k) const;
    HKey index_key(size_t idx) const;
    Vec to_vec(const HElem& h) const;
    HElem from_vec(const Vec& v) const;

    HElem parse(const std::string& expr) const;

private:
    struct PushTerm {
        Scalar c;
        int m;  // single L factor position
        int u;  // permutation index
    };
    // Normal form of T_w L_k as a sum of c * L_m T_u, memoized.
    const std::vector<PushTerm>& push_L(int w, int k) const;
    // h -> T_i h, exchange formulas plus the left Hecke rule.
    HElem lmul_gen(int i, const HElem& h) const;
    HElem rmul_word(HElem h, const std::vector<int>& word) const;

    size_t dim_;
    Scalar xi_;
    std::vector<HElem> Lr_;  // Lr_[k] = normal form of L_{k+1}^r
    mutable std::map<std::pair<int, int>, std::vector<PushTerm>> push_cache_;
};

// Shared algebra instances (keyed by n, r, domain), so that cell caches
// are reused across calls.
std::shared_ptr<Algebra> make_algebra(int n, int r, const Domain& dom);

// --- distinguished elements ------------------------------------------------

// Young subgroup S_lambda member indices.
std::vector<int> young_subgroup(const Algebra& A, const MultiComp& lambda);

HElem x_elem(const Algebra& A, const MultiComp& lambda);
HElem y_elem(const Algebra& A, const MultiComp& lambda);
HElem u_plus(const Algebra& A, const MultiComp& lambda);
HElem u_minus(const Algebra& A, const MultiComp& lambda);
HElem build_m(const Algebra& A, const MultiComp& lambda);
HElem build_n(const Algebra& A, const MultiComp& lambda);

HElem T_of(const Algebra& A, const Perm& w);

HElem build_mst(const Algebra& A, const Tableau& s, const Tableau& t);
HElem build_nst(const Algebra& A, const Tableau& s, const Tableau& t);
// Semistandard sums; the first/second argument may independently be a
// typed (semistandard) tableau or a standard one.
HElem build_mST(const Algebra& A, const Tableau& S, const Tableau& T);
HElem build_nST(const Algebra& A, const Tableau& S, const Tableau& T);

Scalar Q_lambda_scalar(const Algebra& A, const MultiComp& lambda);

}  // namespace ak

#endif
