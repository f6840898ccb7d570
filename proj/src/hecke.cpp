#include "ak/hecke.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <tuple>

namespace ak {

// ---------------------------------------------------------------------------
// SymGroup

const SymGroup& SymGroup::get(int n) {
    static std::map<int, std::unique_ptr<SymGroup>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    auto g = std::make_unique<SymGroup>();
    g->n = n;
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    do {
        g->index_of[v] = static_cast<int>(g->oneline.size());
        g->oneline.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    size_t N = g->oneline.size();
    g->len.resize(N);
    g->word.resize(N);
    g->inv.resize(N);
    g->rgen.assign(N, std::vector<int>(std::max(0, n - 1)));
    g->lgen.assign(N, std::vector<int>(std::max(0, n - 1)));
    for (size_t w = 0; w < N; ++w) {
        Perm p{g->oneline[w]};
        g->len[w] = p.length();
        g->word[w] = p.reduced_word();
        g->inv[w] = g->index_of.at(p.inverse().w);
        for (int i = 1; i < n; ++i) {
            Perm s = Perm::transposition(n, i);
            g->rgen[w][i - 1] = g->index_of.at((p * s).w);
            g->lgen[w][i - 1] = g->index_of.at((s * p).w);
        }
    }
    auto& ref = *g;
    cache.emplace(n, std::move(g));
    return ref;
}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(int n_, int r_, Domain dom_)
    : n(n_), r(r_), dom(std::move(dom_)), sg(SymGroup::get(n_)) {
    if (n < 1 || r < 1) throw std::invalid_argument("Algebra: need n >= 1, r >= 1");
    if (dom.r != r) throw std::invalid_argument("Algebra: domain rank != r");
    dim_ = sg.size();
    for (int i = 0; i < n; ++i) dim_ *= static_cast<size_t>(r);
    xi_ = dom.from_coeff(Coeff::q_pow(r, 1) - Coeff::q_pow(r, -1));

    // Bootstrap the normal forms of L_k^r.  For k = 1 this is the
    // characteristic polynomial relation
    //   L_1^r = sum_{i=1}^r (-1)^{i+1} e_i(Q_1..Q_r) L_1^{r-i};
    // for k > 1 the exchange identity
    //   L_k^r = T_{k-1} L_{k-1}^r T_{k-1}
    //           + (q-q^{-1}) sum_{j=1}^{r-1} T_{k-1} L_{k-1}^{r-j} L_k^j,
    // whose right-hand sides only involve exponents < r.
    Lr_.resize(n);
    {
        std::vector<Coeff> e(r + 1, Coeff::zero(r));
        e[0] = Coeff::one(r);
        for (int s = 1; s <= r; ++s)
            for (int i = s; i >= 1; --i) e[i] += e[i - 1] * Coeff::Q(r, s);
        HElem h(this);
        for (int i = 1; i <= r; ++i) {
            Coeff c = (i % 2 == 1) ? e[i] : -e[i];
            std::vector<int8_t> a(n, 0);
            a[0] = static_cast<int8_t>(r - i);
            h.add_term(HKey{a, sg.index_of.at(Perm::id(n).w)}, dom.from_coeff(c));
        }
        Lr_[0] = h;
    }
    for (int k = 2; k <= n; ++k) {
        HElem h = rmul_gen(lmul_gen(k - 1, Lr_[k - 2]), k - 1);
        for (int j = 1; j <= r - 1; ++j) {
            std::vector<int8_t> a(n, 0);
            a[k - 2] = static_cast<int8_t>(r - j);
            a[k - 1] = static_cast<int8_t>(j);
            h += lmul_gen(k - 1, basis(a, 0)).scaled(xi_);
        }
        Lr_[k - 1] = h;
    }
}

HElem Algebra::one() const {
    return basis(std::vector<int8_t>(n, 0), sg.index_of.at(Perm::id(n).w));
}

HElem Algebra::basis(const std::vector<int8_t>& a, int w) const {
    if (static_cast<int>(a.size()) != n)
        throw std::invalid_argument("Algebra: exponent vector length != n");
    for (int8_t e : a)
        if (e < 0 || e >= r)
            throw std::invalid_argument("Algebra: exponent out of normal-form range");
    HElem h(this);
    h.add_term(HKey{a, w}, dom.one());
    return h;
}

HElem Algebra::gen_T(int i) const {
    if (i < 0 || i >= n) throw std::invalid_argument("Algebra: generator index");
    if (i == 0) return gen_L(1);
    return basis(std::vector<int8_t>(n, 0), sg.index_of.at(Perm::transposition(n, i).w));
}

HElem Algebra::gen_L(int k) const {
    if (k < 1 || k > n) throw std::invalid_argument("Algebra: L index");
    return rmul_L(one(), k);
}

HElem Algebra::rmul_gen(const HElem& h, int i) const {
    if (i < 0 || i >= n) throw std::invalid_argument("rmul_gen: index out of range");
    if (i == 0) return rmul_L(h, 1);
    HElem out(this);
    for (auto& [k, c] : h.terms()) {
        int u = sg.rgen[k.w][i - 1];
        if (sg.len[u] > sg.len[k.w]) {
            out.add_term(HKey{k.a, u}, c);
        } else {
            out.add_term(HKey{k.a, u}, c);
            out.add_term(k, c * xi_);
        }
    }
    return out;
}

HElem Algebra::lmul_gen(int i, const HElem& h) const {
    // T_i * (L^a T_w): exchange T_i through the exponents at positions
    // i, i+1, then the left Hecke rule on T_w.
    HElem out(this);
    auto emit = [&](const std::vector<int8_t>& a, int w, const Scalar& c, bool hasT) {
        if (!hasT) {
            out.add_term(HKey{a, w}, c);
            return;
        }
        int u = sg.lgen[w][i - 1];
        if (sg.len[u] > sg.len[w]) {
            out.add_term(HKey{a, u}, c);
        } else {
            out.add_term(HKey{a, u}, c);
            out.add_term(HKey{a, w}, c * xi_);
        }
    };
    for (auto& [k, c] : h.terms()) {
        int A = k.a[i - 1], B = k.a[i];
        if (A == B) {
            emit(k.a, k.w, c, true);
        } else if (A < B) {
            std::vector<int8_t> a = k.a;
            a[i - 1] = static_cast<int8_t>(B);
            a[i] = static_cast<int8_t>(A);
            emit(a, k.w, c, true);
            for (int j = 1; j <= B - A; ++j) {
                std::vector<int8_t> b = k.a;
                b[i - 1] = static_cast<int8_t>(B - j);
                b[i] = static_cast<int8_t>(A + j);
                emit(b, k.w, c * xi_, false);
            }
        } else {
            std::vector<int8_t> a = k.a;
            a[i - 1] = static_cast<int8_t>(B);
            a[i] = static_cast<int8_t>(A);
            emit(a, k.w, c, true);
            for (int j = 1; j <= A - B; ++j) {
                std::vector<int8_t> b = k.a;
                b[i - 1] = static_cast<int8_t>(A - j);
                b[i] = static_cast<int8_t>(B + j);
                emit(b, k.w, -(c * xi_), false);
            }
        }
    }
    return out;
}

const std::vector<Algebra::PushTerm>& Algebra::push_L(int w, int k) const {
    auto key = std::make_pair(w, k);
    auto it = push_cache_.find(key);
    if (it != push_cache_.end()) return it->second;

    std::map<std::pair<int, int>, Scalar> acc;
    auto add = [&](int m, int u, const Scalar& c) {
        auto [pos, fresh] = acc.try_emplace(std::make_pair(m, u), c);
        if (!fresh) pos->second = pos->second + c;
    };
    if (sg.word[w].empty()) {
        add(k, w, dom.one());
    } else {
        int j = sg.word[w].back();
        int wp = sg.rgen[w][j - 1];  // w = wp * s_j
        auto append_Tj = [&](const std::vector<PushTerm>& f, const Scalar& scale) {
            for (auto& t : f) {
                int u = sg.rgen[t.u][j - 1];
                if (sg.len[u] > sg.len[t.u]) {
                    add(t.m, u, t.c * scale);
                } else {
                    add(t.m, u, t.c * scale);
                    add(t.m, t.u, t.c * scale * xi_);
                }
            }
        };
        if (k != j && k != j + 1) {
            append_Tj(push_L(wp, k), dom.one());
        } else if (k == j) {
            // T_j L_j = L_{j+1} T_j - (q-q^{-1}) L_{j+1}
            const auto& f = push_L(wp, j + 1);
            append_Tj(f, dom.one());
            for (auto& t : f) add(t.m, t.u, -(t.c * xi_));
        } else {
            // T_j L_{j+1} = L_j T_j + (q-q^{-1}) L_{j+1}
            append_Tj(push_L(wp, j), dom.one());
            for (auto& t : push_L(wp, j + 1)) add(t.m, t.u, t.c * xi_);
        }
    }
    std::vector<PushTerm> out;
    for (auto& [mu, c] : acc)
        if (!c.is_zero()) out.push_back(PushTerm{c, mu.first, mu.second});
    return push_cache_.emplace(key, std::move(out)).first->second;
}

HElem Algebra::rmul_word(HElem h, const std::vector<int>& word) const {
    for (int i : word) h = rmul_gen(h, i);
    return h;
}

HElem Algebra::rmul_L(const HElem& h, int k) const {
    if (k < 1 || k > n) throw std::invalid_argument("rmul_L: index out of range");

    // Normal form of c * L^f T_v for an arbitrary non-negative exponent
    // vector f; overflow at the largest offending position is reduced via
    // the L_k^r table (supported on positions <= k), so the exponent
    // vector strictly decreases lexicographically from the top position.
    std::function<HElem(std::vector<int>, int, const Scalar&, int)> reduce =
        [&](std::vector<int> f, int v, const Scalar& c, int depth) -> HElem {
        if (depth > 64) throw std::logic_error("rmul_L: reduction depth exceeded");
        int j = -1;
        for (int i = n - 1; i >= 0; --i)
            if (f[i] >= r) {
                j = i;
                break;
            }
        HElem out(this);
        if (j < 0) {
            std::vector<int8_t> a(n);
            for (int i = 0; i < n; ++i) a[i] = static_cast<int8_t>(f[i]);
            out.add_term(HKey{a, v}, c);
            return out;
        }
        std::vector<int> fp = f;
        fp[j] -= r;
        for (auto& [bk, cb] : Lr_[j].terms()) {
            std::vector<int> g = fp;
            for (int i = 0; i < n; ++i) g[i] += bk.a[i];
            out += rmul_word(reduce(g, bk.w, c * cb, depth + 1), sg.word[v]);
        }
        return out;
    };

    HElem out(this);
    for (auto& [key, c] : h.terms()) {
        for (auto& pt : push_L(key.w, k)) {
            Scalar cc = c * pt.c;
            if (key.a[pt.m - 1] + 1 < r) {
                std::vector<int8_t> a = key.a;
                a[pt.m - 1]++;
                out.add_term(HKey{a, pt.u}, cc);
            } else {
                std::vector<int> f(key.a.begin(), key.a.end());
                f[pt.m - 1]++;
                out += reduce(std::move(f), pt.u, cc, 0);
            }
        }
    }
    return out;
}

HElem Algebra::mul(const HElem& a, const HElem& b) const {
    if (a.algebra() != b.algebra() || a.algebra() != this)
        throw std::invalid_argument("mul: ambient algebra mismatch");
    HElem out(this);
    for (auto& [key, c] : b.terms()) {
        HElem tmp = a.scaled(c);
        for (int k = 1; k <= n; ++k)
            for (int e = 0; e < key.a[k - 1]; ++e) tmp = rmul_L(tmp, k);
        out += rmul_word(std::move(tmp), sg.word[key.w]);
    }
    return out;
}

HElem Algebra::star(const HElem& h) const {
    HElem out(this);
    std::vector<int8_t> zero(n, 0);
    for (auto& [key, c] : h.terms()) {
        HElem t = basis(zero, sg.inv[key.w]);
        for (int k = 1; k <= n; ++k)
            for (int e = 0; e < key.a[k - 1]; ++e) t = rmul_L(t, k);
        out += t.scaled(c);
    }
    return out;
}

HElem Algebra::prime(const HElem& h) const {
    if (!dom.is_generic())
        throw std::domain_error("prime: only defined generically");
    HElem out(this);
    for (auto& [key, c] : h.terms()) {
        const Ratio& rr = c.ratio();
        out.add_term(key, Scalar(Ratio(rr.num().primed(), rr.den().primed())));
    }
    return out;
}

Scalar Algebra::tau(const HElem& h) const {
    HKey k{std::vector<int8_t>(n, 0), sg.index_of.at(Perm::id(n).w)};
    auto it = h.terms().find(k);
    return it == h.terms().end() ? dom.zero() : it->second;
}

Scalar Algebra::pair(const HElem& a, const HElem& b) const {
    return tau(mul(a, star(b)));
}

size_t Algebra::key_index(const HKey& k) const {
    size_t ia = 0;
    for (int i = n - 1; i >= 0; --i) ia = ia * r + static_cast<size_t>(k.a[i]);
    return ia * sg.size() + static_cast<size_t>(k.w);
}

HKey Algebra::index_key(size_t idx) const {
    HKey k;
    k.w = static_cast<int>(idx % sg.size());
    size_t ia = idx / sg.size();
    k.a.resize(n);
    for (int i = 0; i < n; ++i) {
        k.a[i] = static_cast<int8_t>(ia % r);
        ia /= r;
    }
    return k;
}

Vec Algebra::to_vec(const HElem& h) const {
    Vec v = zero_vec(dom, dim_);
    for (auto& [k, c] : h.terms()) v[key_index(k)] = c;
    return v;
}

HElem Algebra::from_vec(const Vec& v) const {
    HElem h(this);
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) h.add_term(index_key(i), v[i]);
    return h;
}

std::string HElem::str() const {
    if (t_.empty()) return "0";
    const Algebra& A = *A_;
    std::string out;
    for (auto& [k, c] : t_) {
        std::vector<std::string> factors;
        std::string cs = c.str();
        for (int i = 0; i < A.n; ++i)
            if (k.a[i] > 0)
                factors.push_back("L" + std::to_string(i + 1) +
                                  (k.a[i] > 1 ? "^" + std::to_string(int(k.a[i])) : ""));
        if (A.sg.len[k.w] > 0) factors.push_back("T" + A.sg.perm(k.w).str());
        std::string term;
        if (factors.empty() || cs != "1") {
            term = (cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos)
                       ? "(" + cs + ")"
                       : cs;
        }
        for (auto& f : factors) term += (term.empty() ? "" : "*") + f;
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

HElem Algebra::parse(const std::string& expr) const {
    size_t i = 0;
    auto skip = [&] {
        while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
    };
    auto read_int = [&]() -> int {
        skip();
        size_t start = i;
        if (i < expr.size() && (expr[i] == '-' || expr[i] == '+')) ++i;
        while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) ++i;
        if (start == i) throw std::invalid_argument("HElem parse: expected integer");
        return std::stoi(expr.substr(start, i - start));
    };
    HElem out(this);
    skip();
    while (i < expr.size()) {
        int sign = 1;
        while (i < expr.size() && (expr[i] == '+' || expr[i] == '-')) {
            if (expr[i] == '-') sign = -sign;
            ++i;
            skip();
        }
        HElem term = one().scaled(dom.from_int(sign));
        bool more = true;
        while (more) {
            skip();
            if (i >= expr.size()) throw std::invalid_argument("HElem parse: trailing operator");
            char ch = expr[i];
            if (ch == 'T') {
                ++i;
                int g = read_int();
                term = rmul_gen(term, g);
            } else if (ch == 'L') {
                ++i;
                int k = read_int();
                int e = 1;
                if (i < expr.size() && expr[i] == '^') {
                    ++i;
                    e = read_int();
                }
                for (int x = 0; x < e; ++x) term = rmul_L(term, k);
            } else if (ch == 'q') {
                ++i;
                int e = 1;
                if (i < expr.size() && expr[i] == '^') {
                    ++i;
                    e = read_int();
                }
                term = term.scaled(dom.from_coeff(Coeff::q_pow(r, e)));
            } else if (ch == 'Q') {
                ++i;
                int s = read_int();
                int e = 1;
                if (i < expr.size() && expr[i] == '^') {
                    ++i;
                    e = read_int();
                }
                term = term.scaled(dom.from_coeff(Coeff::Q(r, s, e)));
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                term = term.scaled(dom.from_int(read_int()));
            } else {
                throw std::invalid_argument(std::string("HElem parse: unexpected '") + ch + "'");
            }
            skip();
            if (i < expr.size() && expr[i] == '*') {
                ++i;
                more = true;
            } else {
                more = false;
            }
        }
        out += term;
        skip();
    }
    return out;
}

std::shared_ptr<Algebra> make_algebra(int n, int r, const Domain& dom) {
    using CacheKey = std::tuple<int, int, int, const Specialization*>;
    static std::map<CacheKey, std::shared_ptr<Algebra>> cache;
    CacheKey key{n, r, static_cast<int>(dom.kind), dom.spec.get()};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto a = std::make_shared<Algebra>(n, r, dom);
    cache.emplace(key, a);
    return a;
}

// ---------------------------------------------------------------------------
// Distinguished elements

std::vector<int> young_subgroup(const Algebra& A, const MultiComp& lambda) {
    if (lambda.size() != A.n)
        throw std::invalid_argument("young_subgroup: size mismatch");
    std::vector<int> block;
    int id = 0;
    for (auto& comp : lambda.c)
        for (int p : comp) {
            for (int x = 0; x < p; ++x) block.push_back(id);
            ++id;
        }
    std::vector<int> members;
    for (size_t w = 0; w < A.sg.size(); ++w) {
        bool ok = true;
        for (int k = 0; k < A.n && ok; ++k)
            if (block[A.sg.oneline[w][k] - 1] != block[k]) ok = false;
        if (ok) members.push_back(static_cast<int>(w));
    }
    return members;
}

HElem x_elem(const Algebra& A, const MultiComp& lambda) {
    HElem h = A.zero();
    std::vector<int8_t> zero(A.n, 0);
    for (int w : young_subgroup(A, lambda))
        h.add_term(HKey{zero, w}, A.dom.from_coeff(Coeff::q_pow(A.r, A.sg.len[w])));
    return h;
}

HElem y_elem(const Algebra& A, const MultiComp& lambda) {
    HElem h = A.zero();
    std::vector<int8_t> zero(A.n, 0);
    for (int w : young_subgroup(A, lambda)) {
        int l = A.sg.len[w];
        h.add_term(HKey{zero, w},
                   A.dom.from_coeff(Coeff::q_pow(A.r, -l, l % 2 == 0 ? 1 : -1)));
    }
    return h;
}

HElem u_plus(const Algebra& A, const MultiComp& lambda) {
    HElem h = A.one();
    int before = 0;
    for (int s = 2; s <= A.r; ++s) {
        before += lambda.comp_size(s - 2);
        for (int k = 1; k <= before; ++k) {
            HElem f = A.rmul_L(A.one(), k) - A.one().scaled(A.dom.Q(s));
            h = A.mul(h, f);
        }
    }
    return h;
}

// u_lambda^- = (u_lambda^+)': product over s = 1..r-1 of the factors
// (L_k - Q_s) for k up to |λ^(1)|+...+|λ^(r-s)|.
HElem u_minus(const Algebra& A, const MultiComp& lambda) {
    HElem h = A.one();
    for (int s = 1; s <= A.r - 1; ++s) {
        int cap = 0;
        for (int t = 0; t < A.r - s; ++t) cap += lambda.comp_size(t);
        for (int k = 1; k <= cap; ++k) {
            HElem f = A.rmul_L(A.one(), k) - A.one().scaled(A.dom.Q(s));
            h = A.mul(h, f);
        }
    }
    return h;
}

HElem build_m(const Algebra& A, const MultiComp& lambda) {
    return A.mul(x_elem(A, lambda), u_plus(A, lambda));
}

HElem build_n(const Algebra& A, const MultiComp& lambda) {
    return A.mul(y_elem(A, lambda), u_minus(A, lambda));
}

HElem T_of(const Algebra& A, const Perm& w) {
    return A.basis(std::vector<int8_t>(A.n, 0), A.sg.idx(w));
}

namespace {

HElem build_pair(const Algebra& A, const Tableau& s, const Tableau& t, bool mside) {
    if (!(s.shape == t.shape))
        throw std::invalid_argument("cell element: tableaux shape mismatch");
    HElem core = mside ? build_m(A, s.shape) : build_n(A, s.shape);
    // Standard preimages with the defining weights for each side.
    auto expand = [&](const Tableau& x) {
        std::vector<std::pair<Perm, Coeff>> out;
        if (!x.typed) {
            out.emplace_back(d_perm(x), Coeff::one(A.r));
        } else {
            MultiComp ty = type_of(x);
            for (auto& u : enumerate_std(x.shape))
                if (mu_map(u, ty) == x) {
                    Perm d = d_perm(u);
                    int l = d.length();
                    Coeff c = mside ? Coeff::q_pow(A.r, l)
                                    : Coeff::q_pow(A.r, -l, l % 2 == 0 ? 1 : -1);
                    out.emplace_back(d, c);
                }
            if (out.empty())
                throw std::invalid_argument("cell element: typed tableau has no standard preimage");
        }
        return out;
    };
    HElem out = A.zero();
    for (auto& [ds, cs] : expand(s)) {
        HElem left = A.mul(T_of(A, ds.inverse()), core);
        for (auto& [dt, ct] : expand(t)) {
            HElem full = A.mul(left, T_of(A, dt));
            out += full.scaled(A.dom.from_coeff(cs * ct));
        }
    }
    return out;
}

}  // namespace

HElem build_mst(const Algebra& A, const Tableau& s, const Tableau& t) {
    if (s.typed || t.typed)
        throw std::invalid_argument("build_mst: expects standard tableaux");
    return build_pair(A, s, t, true);
}

HElem build_nst(const Algebra& A, const Tableau& s, const Tableau& t) {
    if (s.typed || t.typed)
        throw std::invalid_argument("build_nst: expects standard tableaux");
    return build_pair(A, s, t, false);
}

HElem build_mST(const Algebra& A, const Tableau& S, const Tableau& T) {
    return build_pair(A, S, T, true);
}

HElem build_nST(const Algebra& A, const Tableau& S, const Tableau& T) {
    return build_pair(A, S, T, false);
}

Scalar Q_lambda_scalar(const Algebra& A, const MultiComp& lambda) {
    return A.dom.from_coeff(Q_lambda(lambda, A.r));
}

}  // namespace ak
