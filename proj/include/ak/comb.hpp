// Indexing combinatorics: multicompositions and multipartitions with
// dominance and conjugation, standard / row- and column-semistandard
// multitableaux, distinguished permutations and residues.
#ifndef AK_COMB_HPP
#define AK_COMB_HPP

#include "ak/coeff.hpp"

#include <string>
#include <vector>

namespace ak {

// An r-tuple of compositions; multipartition when every component is
// weakly decreasing.  Trailing zero parts are trimmed.
struct MultiComp {
    std::vector<std::vector<int>> c;

    int level() const { return static_cast<int>(c.size()); }
    int size() const;
    int comp_size(int s) const;  // |λ^(s)|, 0-based s
    int row(int s, int i) const {
        return i < static_cast<int>(c[s].size()) ? c[s][i] : 0;
    }
    bool is_partition() const;
    void trim();

    MultiComp conjugate() const;
    // Components sorted into partitions (the ⃗μ rearrangement).
    MultiComp sorted_components() const;

    // Flattened prefix-sum vector; a ⊵ b iff key(a) >= key(b) pointwise.
    std::vector<int> dominance_key() const;

    bool operator==(const MultiComp& o) const { return c == o.c; }
    bool operator!=(const MultiComp& o) const { return !(*this == o); }

    static MultiComp omega(int n, int r);
    static MultiComp parse(const std::string& s);
    std::string str() const;
};

bool dominates(const MultiComp& a, const MultiComp& b);
// Fixed total order refining dominance: true when a strictly precedes b
// (more dominant first).
bool total_order_less(const MultiComp& a, const MultiComp& b);

std::vector<MultiComp> enumerate_multipartitions(int n, int r);
std::vector<MultiComp> saturate(const std::vector<MultiComp>& set, int n, int r);

// ---------------------------------------------------------------------------
// Permutations of {1..n}, one-line notation.
struct Perm {
    std::vector<int> w;  // w[i] = image of i+1

    int n() const { return static_cast<int>(w.size()); }
    static Perm id(int n);
    static Perm transposition(int n, int i);  // s_i, 1 <= i < n
    // Product "a then b" as functions: (a*b)(x) = b(a(x)).
    friend Perm operator*(const Perm& a, const Perm& b);
    Perm inverse() const;
    int length() const;  // inversion count
    std::vector<int> reduced_word() const;  // lexicographically smallest
    bool operator==(const Perm& o) const { return w == o.w; }
    bool operator!=(const Perm& o) const { return !(*this == o); }
    bool operator<(const Perm& o) const { return w < o.w; }
    std::string str() const;
};

// ---------------------------------------------------------------------------
// Multitableaux.  Standard kind: entries are 1..n.  Typed kind: entries
// are pairs (i,s) encoded as s*PAIR_BASE+i so the integer order realises
// the order (i,s) <= (j,t) iff s < t or (s = t and i <= j).
constexpr int PAIR_BASE = 64;
inline int pair_entry(int i, int s) { return s * PAIR_BASE + i; }
inline int pair_row(int e) { return e % PAIR_BASE; }
inline int pair_comp(int e) { return e / PAIR_BASE; }

struct Tableau {
    MultiComp shape;
    bool typed = false;
    std::vector<std::vector<std::vector<int>>> rows;  // [comp][row][col]

    int n() const { return shape.size(); }
    int entry(int s, int i, int j) const { return rows[s][i][j]; }
    bool operator==(const Tableau& o) const {
        return shape == o.shape && typed == o.typed && rows == o.rows;
    }
    bool operator<(const Tableau& o) const { return rows < o.rows; }
    std::string str() const;
};

// Row-reading superstandard tableau t^λ (fills cells 1..n along rows).
Tableau t_row(const MultiComp& lambda);
// t_λ = (t^{λ'})'.
Tableau t_col(const MultiComp& lambda);
// Conjugate tableau: t'(i,j,s) = t(j,i,r-s+1).
Tableau conj_tableau(const Tableau& t);

// d(t): the permutation with t = t^λ · d(t) (entries of t^λ mapped through d).
Perm d_perm(const Tableau& t);
Tableau act(const Tableau& t, const Perm& w);

// Component (1-based) containing entry k of a standard tableau.
int comp_of(const Tableau& t, int k);
// res_t(k) = q^{2(j-i)} Q_s as a Coeff of rank r.
Coeff residue(const Tableau& t, int k, int r);
Coeff Q_lambda(const MultiComp& lambda, int r);
Perm w_lambda(const MultiComp& lambda);

std::vector<Tableau> enumerate_std(const MultiComp& lambda);
// Dominance on same-shape standard tableaux via restriction shapes.
bool tab_dominates(const Tableau& a, const Tableau& b);
// Dominance on same-type typed tableaux via ⪯-prefix shapes.
bool typed_dominates(const Tableau& a, const Tableau& b);

// μ(t): replace entry j by (i,k) when j lies in row i of component k of t^μ.
Tableau mu_map(const Tableau& t, const MultiComp& mu);
MultiComp type_of(const Tableau& typed);
bool is_semistandard(const Tableau& typed);

std::vector<Tableau> enumerate_sstd(const MultiComp& lambda, const MultiComp& mu);
std::vector<Tableau> enumerate_cstd(const MultiComp& lambda, const MultiComp& mu);

// Dominance-greatest / least standard preimage of a typed tableau.
Tableau dot_first(const Tableau& typed);
Tableau ddot_last(const Tableau& typed);

}  // namespace ak

#endif
