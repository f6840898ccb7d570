#include "ak/comb.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace ak {

int MultiComp::size() const {
    int t = 0;
    for (auto& comp : c)
        for (int p : comp) t += p;
    return t;
}

int MultiComp::comp_size(int s) const {
    int t = 0;
    for (int p : c[s]) t += p;
    return t;
}

bool MultiComp::is_partition() const {
    for (auto& comp : c)
        for (size_t i = 1; i < comp.size(); ++i)
            if (comp[i] > comp[i - 1]) return false;
    return true;
}

void MultiComp::trim() {
    for (auto& comp : c)
        while (!comp.empty() && comp.back() == 0) comp.pop_back();
}

MultiComp MultiComp::conjugate() const {
    MultiComp out;
    for (int s = level() - 1; s >= 0; --s) {
        std::vector<int> col;
        for (int j = 0;; ++j) {
            int cnt = 0;
            for (int p : c[s])
                if (p > j) ++cnt;
            if (cnt == 0) break;
            col.push_back(cnt);
        }
        out.c.push_back(std::move(col));
    }
    return out;
}

MultiComp MultiComp::sorted_components() const {
    MultiComp out = *this;
    for (auto& comp : out.c) std::sort(comp.begin(), comp.end(), std::greater<int>());
    out.trim();
    return out;
}

std::vector<int> MultiComp::dominance_key() const {
    int n = size();
    std::vector<int> key;
    key.reserve(static_cast<size_t>(level()) * n);
    int before = 0;
    for (int s = 0; s < level(); ++s) {
        int acc = before;
        for (int i = 0; i < n; ++i) {
            acc += row(s, i);
            key.push_back(acc);
        }
        before = acc;
    }
    return key;
}

bool dominates(const MultiComp& a, const MultiComp& b) {
    if (a.level() != b.level())
        throw std::invalid_argument("dominates: level mismatch");
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: size mismatch");
    std::vector<int> ka = a.dominance_key(), kb = b.dominance_key();
    for (size_t i = 0; i < ka.size(); ++i)
        if (ka[i] < kb[i]) return false;
    return true;
}

bool total_order_less(const MultiComp& a, const MultiComp& b) {
    std::vector<int> ka = a.dominance_key(), kb = b.dominance_key();
    if (ka != kb) return ka > kb;  // larger prefix sums first
    return a.c < b.c;
}

MultiComp MultiComp::omega(int n, int r) {
    MultiComp out;
    out.c.assign(r, {});
    out.c[r - 1].assign(n, 1);
    return out;
}

namespace {

std::vector<std::vector<int>> partitions_of(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Parts weakly decreasing, generated largest-first.
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

}  // namespace

std::vector<MultiComp> enumerate_multipartitions(int n, int r) {
    if (n < 0 || r < 1)
        throw std::invalid_argument("enumerate_multipartitions: bad parameters");
    std::vector<MultiComp> out;
    MultiComp cur;
    cur.c.assign(r, {});
    std::function<void(int, int)> rec = [&](int s, int rem) {
        if (s == r) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (int m = (s == r - 1 ? rem : 0); m <= rem; ++m)
            for (auto& p : partitions_of(m)) {
                cur.c[s] = p;
                rec(s + 1, rem - m);
            }
        cur.c[s].clear();
    };
    rec(0, n);
    std::sort(out.begin(), out.end(), total_order_less);
    return out;
}

std::vector<MultiComp> saturate(const std::vector<MultiComp>& set, int n, int r) {
    std::vector<MultiComp> out = set;
    for (auto& lam : enumerate_multipartitions(n, r)) {
        bool take = false;
        for (auto& mu : set)
            if (dominates(lam, mu)) {
                take = true;
                break;
            }
        if (take && std::find(out.begin(), out.end(), lam) == out.end())
            out.push_back(lam);
    }
    std::sort(out.begin(), out.end(), total_order_less);
    return out;
}

// ---------------------------------------------------------------------------

Perm Perm::id(int n) {
    Perm p;
    p.w.resize(n);
    for (int i = 0; i < n; ++i) p.w[i] = i + 1;
    return p;
}

Perm Perm::transposition(int n, int i) {
    Perm p = id(n);
    std::swap(p.w[i - 1], p.w[i]);
    return p;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.n() != b.n()) throw std::invalid_argument("Perm: size mismatch");
    Perm p;
    p.w.resize(a.n());
    for (int i = 0; i < a.n(); ++i) p.w[i] = b.w[a.w[i] - 1];
    return p;
}

Perm Perm::inverse() const {
    Perm p;
    p.w.resize(n());
    for (int i = 0; i < n(); ++i) p.w[w[i] - 1] = i + 1;
    return p;
}

int Perm::length() const {
    int inv = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

std::vector<int> Perm::reduced_word() const {
    // Repeatedly strip the smallest left descent: w = s_i * rest.
    std::vector<int> word;
    std::vector<int> v = w;
    bool again = true;
    while (again) {
        again = false;
        for (int i = 1; i < n(); ++i) {
            if (v[i - 1] > v[i]) {
                word.push_back(i);
                std::swap(v[i - 1], v[i]);
                again = true;
                break;
            }
        }
    }
    return word;
}

std::string Perm::str() const {
    std::string s = "[";
    for (int i = 0; i < n(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + "]";
}

// ---------------------------------------------------------------------------

Tableau t_row(const MultiComp& lambda) {
    Tableau t;
    t.shape = lambda;
    t.rows.resize(lambda.level());
    int next = 1;
    for (int s = 0; s < lambda.level(); ++s)
        for (int p : lambda.c[s]) {
            std::vector<int> row(p);
            for (int j = 0; j < p; ++j) row[j] = next++;
            t.rows[s].push_back(std::move(row));
        }
    return t;
}

Tableau conj_tableau(const Tableau& t) {
    Tableau out;
    out.shape = t.shape.conjugate();
    out.typed = t.typed;
    int r = t.shape.level();
    out.rows.resize(r);
    for (int s = 0; s < r; ++s) {
        int src = r - 1 - s;
        for (size_t i = 0; i < out.shape.c[s].size(); ++i) {
            std::vector<int> row(out.shape.c[s][i]);
            for (size_t j = 0; j < row.size(); ++j) row[j] = t.rows[src][j][i];
            out.rows[s].push_back(std::move(row));
        }
    }
    return out;
}

Tableau t_col(const MultiComp& lambda) { return conj_tableau(t_row(lambda.conjugate())); }

Perm d_perm(const Tableau& t) {
    Perm p;
    for (auto& comp : t.rows)
        for (auto& row : comp)
            for (int e : row) p.w.push_back(e);
    return p;
}

Tableau act(const Tableau& t, const Perm& w) {
    Tableau out = t;
    for (auto& comp : out.rows)
        for (auto& row : comp)
            for (int& e : row) e = w.w[e - 1];
    return out;
}

int comp_of(const Tableau& t, int k) {
    for (int s = 0; s < t.shape.level(); ++s)
        for (auto& row : t.rows[s])
            for (int e : row)
                if (e == k) return s + 1;
    throw std::invalid_argument("comp_of: entry not found");
}

Coeff residue(const Tableau& t, int k, int r) {
    for (int s = 0; s < t.shape.level(); ++s)
        for (size_t i = 0; i < t.rows[s].size(); ++i)
            for (size_t j = 0; j < t.rows[s][i].size(); ++j)
                if (t.rows[s][i][j] == k)
                    return Coeff::q_pow(r, 2 * (static_cast<int>(j) - static_cast<int>(i))) *
                           Coeff::Q(r, s + 1);
    throw std::invalid_argument("residue: entry not found");
}

Coeff Q_lambda(const MultiComp& lambda, int r) {
    int n = lambda.size();
    Int sign = (n * (r - 1)) % 2 == 0 ? 1 : -1;
    Coeff out = Coeff::from_int(r, sign);
    for (int s = 0; s < r; ++s) out *= Coeff::Q(r, s + 1).pow(n - lambda.comp_size(s));
    return out;
}

Perm w_lambda(const MultiComp& lambda) { return d_perm(t_col(lambda)); }

namespace {

std::vector<int> std_dominance_key(const Tableau& t) {
    // Concatenated dominance keys of the restriction shapes t|{1..k};
    // injective on standard tableaux of a fixed shape.
    int n = t.n();
    int r = t.shape.level();
    std::vector<int> key;
    for (int k = 1; k <= n; ++k) {
        MultiComp sh;
        sh.c.assign(r, {});
        for (int s = 0; s < r; ++s)
            for (auto& row : t.rows[s]) {
                int cnt = 0;
                for (int e : row)
                    if (e <= k) ++cnt;
                sh.c[s].push_back(cnt);
            }
        int before = 0;
        for (int s = 0; s < r; ++s) {
            int acc = before;
            for (int i = 0; i < n; ++i) {
                acc += sh.row(s, i);
                key.push_back(acc);
            }
            before = acc;
        }
    }
    return key;
}

}  // namespace

bool tab_dominates(const Tableau& a, const Tableau& b) {
    if (!(a.shape == b.shape))
        throw std::invalid_argument("tab_dominates: shape mismatch");
    std::vector<int> ka = std_dominance_key(a), kb = std_dominance_key(b);
    for (size_t i = 0; i < ka.size(); ++i)
        if (ka[i] < kb[i]) return false;
    return true;
}

std::vector<Tableau> enumerate_std(const MultiComp& lambda) {
    if (!lambda.is_partition())
        throw std::invalid_argument("enumerate_std: shape must be a multipartition");
    int n = lambda.size();
    int r = lambda.level();
    Tableau cur;
    cur.shape = lambda;
    cur.rows.resize(r);
    for (int s = 0; s < r; ++s)
        for (int p : lambda.c[s]) cur.rows[s].emplace_back();
    std::vector<Tableau> out;
    std::function<void(int)> rec = [&](int k) {
        if (k > n) {
            out.push_back(cur);
            return;
        }
        for (int s = 0; s < r; ++s)
            for (size_t i = 0; i < cur.rows[s].size(); ++i) {
                size_t filled = cur.rows[s][i].size();
                if (static_cast<int>(filled) >= lambda.c[s][i]) continue;
                if (i > 0 && cur.rows[s][i - 1].size() <= filled) continue;
                cur.rows[s][i].push_back(k);
                rec(k + 1);
                cur.rows[s][i].pop_back();
            }
    };
    rec(1);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return std_dominance_key(a) > std_dominance_key(b);
    });
    return out;
}

Tableau mu_map(const Tableau& t, const MultiComp& mu) {
    if (t.n() != mu.size())
        throw std::invalid_argument("mu_map: size mismatch");
    Tableau tmu = t_row(mu);
    std::vector<int> repl(t.n() + 1);
    for (int s = 0; s < mu.level(); ++s)
        for (size_t i = 0; i < tmu.rows[s].size(); ++i)
            for (int e : tmu.rows[s][i])
                repl[e] = pair_entry(static_cast<int>(i) + 1, s + 1);
    Tableau out = t;
    out.typed = true;
    for (auto& comp : out.rows)
        for (auto& row : comp)
            for (int& e : row) e = repl[e];
    return out;
}

MultiComp type_of(const Tableau& typed) {
    int r = typed.shape.level();
    MultiComp mu;
    mu.c.assign(r, {});
    for (auto& comp : typed.rows)
        for (auto& row : comp)
            for (int e : row) {
                int s = pair_comp(e) - 1, i = pair_row(e) - 1;
                if (static_cast<int>(mu.c[s].size()) <= i) mu.c[s].resize(i + 1, 0);
                mu.c[s][i]++;
            }
    return mu;
}

bool is_semistandard(const Tableau& typed) {
    for (int s = 0; s < typed.shape.level(); ++s) {
        auto& comp = typed.rows[s];
        for (size_t i = 0; i < comp.size(); ++i) {
            for (size_t j = 0; j < comp[i].size(); ++j) {
                int e = comp[i][j];
                if (pair_comp(e) < s + 1) return false;           // (iii)
                if (j > 0 && comp[i][j - 1] > e) return false;    // (i) rows weakly increase
                if (i > 0 && j < comp[i - 1].size() && comp[i - 1][j] >= e)
                    return false;                                 // (ii) columns strictly increase
            }
        }
    }
    return true;
}

std::vector<Tableau> enumerate_sstd(const MultiComp& lambda, const MultiComp& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("enumerate_sstd: size mismatch");
    std::vector<Tableau> out;
    for (auto& t : enumerate_std(lambda)) {
        Tableau typed = mu_map(t, mu);
        if (!is_semistandard(typed)) continue;
        if (std::find(out.begin(), out.end(), typed) == out.end())
            out.push_back(typed);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tableau> enumerate_cstd(const MultiComp& lambda, const MultiComp& mu) {
    std::vector<Tableau> out;
    for (auto& s : enumerate_sstd(lambda.conjugate(), mu)) out.push_back(conj_tableau(s));
    std::sort(out.begin(), out.end());
    return out;
}

bool typed_dominates(const Tableau& a, const Tableau& b) {
    if (!(type_of(a) == type_of(b)))
        throw std::invalid_argument("typed_dominates: type mismatch");
    int r = std::max(a.shape.level(), b.shape.level());
    int n = a.n();
    for (int s = 1; s <= r; ++s)
        for (int i = 1; i <= n; ++i) {
            int cut = pair_entry(i, s);
            auto restrict_shape = [&](const Tableau& t) {
                MultiComp sh;
                sh.c.assign(t.shape.level(), {});
                for (int cs = 0; cs < t.shape.level(); ++cs)
                    for (auto& row : t.rows[cs]) {
                        int cnt = 0;
                        for (int e : row)
                            if (e <= cut) ++cnt;
                        sh.c[cs].push_back(cnt);
                    }
                return sh;
            };
            if (!dominates(restrict_shape(a), restrict_shape(b))) return false;
        }
    return true;
}

namespace {

Tableau dot_extreme(const Tableau& typed, bool first) {
    MultiComp mu = type_of(typed);
    std::vector<Tableau> pre;
    for (auto& t : enumerate_std(typed.shape))
        if (mu_map(t, mu) == typed) pre.push_back(t);
    if (pre.empty())
        throw std::invalid_argument("dot: tableau has no standard preimage");
    const Tableau& cand = first ? pre.front() : pre.back();
    for (auto& t : pre) {
        bool ok = first ? tab_dominates(cand, t) : tab_dominates(t, cand);
        if (!ok)
            throw std::logic_error("dot: no dominance-extreme standard preimage");
    }
    return cand;
}

}  // namespace

Tableau dot_first(const Tableau& typed) { return dot_extreme(typed, true); }
Tableau ddot_last(const Tableau& typed) { return dot_extreme(typed, false); }

// ---------------------------------------------------------------------------
// Serialization.

std::string MultiComp::str() const {
    std::string out = "[";
    for (int s = 0; s < level(); ++s) {
        if (s) out += ",";
        out += "[";
        for (size_t i = 0; i < c[s].size(); ++i)
            out += (i ? "," : "") + std::to_string(c[s][i]);
        out += "]";
    }
    return out + "]";
}

MultiComp MultiComp::parse(const std::string& s) {
    MultiComp out;
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= s.size() || s[i] != c)
            throw std::invalid_argument("MultiComp: expected '" + std::string(1, c) +
                                        "' in '" + s + "'");
        ++i;
    };
    expect('[');
    skip();
    while (i < s.size() && s[i] != ']') {
        expect('[');
        std::vector<int> comp;
        skip();
        while (i < s.size() && s[i] != ']') {
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) throw std::invalid_argument("MultiComp: expected integer");
            comp.push_back(std::stoi(s.substr(start, i - start)));
            skip();
            if (i < s.size() && s[i] == ',') {
                ++i;
                skip();
            }
        }
        expect(']');
        out.c.push_back(std::move(comp));
        skip();
        if (i < s.size() && s[i] == ',') {
            ++i;
            skip();
        }
    }
    expect(']');
    out.trim();
    if (out.c.empty()) throw std::invalid_argument("MultiComp: empty input");
    return out;
}

std::string Tableau::str() const {
    std::string out = shape.str() + ":";
    for (int s = 0; s < shape.level(); ++s) {
        out += s ? "|" : "";
        for (size_t i = 0; i < rows[s].size(); ++i) {
            if (i) out += ";";
            for (size_t j = 0; j < rows[s][i].size(); ++j) {
                if (j) out += ",";
                int e = rows[s][i][j];
                if (typed)
                    out += "(" + std::to_string(pair_row(e)) + "," +
                           std::to_string(pair_comp(e)) + ")";
                else
                    out += std::to_string(e);
            }
        }
    }
    return out;
}

}  // namespace ak
