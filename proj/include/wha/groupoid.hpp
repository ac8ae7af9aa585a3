#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "wha/errors.hpp"
#include "wha/weak_hopf.hpp"

namespace wha {

// Finite groupoid: every morphism invertible, compose(g,h) defined iff
// source(g) = target(h).
struct FiniteGroupoid {
    struct Morphism {
        std::string id;
        int src = 0;
        int tgt = 0;
    };

    std::string label;
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::vector<std::vector<int>> compose_table;  // -1 when undefined
    std::vector<int> inverse_of;
    std::vector<int> identity_of;  // object -> identity morphism

    size_t size() const { return morphisms.size(); }

    int compose(int g, int h) const { return compose_table[g][h]; }

    bool is_connected() const {
        if (objects.empty()) return false;
        std::vector<int> comp(objects.size(), -1);
        std::vector<int> stack{0};
        comp[0] = 0;
        while (!stack.empty()) {
            int o = stack.back();
            stack.pop_back();
            for (const auto& m : morphisms) {
                int a = m.src, b = m.tgt;
                if (a == o && comp[b] < 0) { comp[b] = 0; stack.push_back(b); }
                if (b == o && comp[a] < 0) { comp[a] = 0; stack.push_back(a); }
            }
        }
        return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
    }

    void validate() const {
        const size_t m = morphisms.size();
        if (objects.empty()) throw Error(ErrorKind::InvalidGroupoid, "no objects");
        if (compose_table.size() != m || inverse_of.size() != m ||
            identity_of.size() != objects.size())
            throw Error(ErrorKind::InvalidGroupoid, "table sizes inconsistent");
        for (size_t g = 0; g < m; ++g) {
            if (morphisms[g].src < 0 || morphisms[g].src >= static_cast<int>(objects.size()) ||
                morphisms[g].tgt < 0 || morphisms[g].tgt >= static_cast<int>(objects.size()))
                throw Error(ErrorKind::InvalidGroupoid, "morphism endpoints out of range");
            for (size_t h = 0; h < m; ++h) {
                bool composable = morphisms[g].src == morphisms[h].tgt;
                int c = compose_table[g][h];
                if (composable != (c >= 0))
                    throw Error(ErrorKind::InvalidGroupoid,
                                "compose defined iff source(g) = target(h) violated at " +
                                    morphisms[g].id + "," + morphisms[h].id);
                if (c >= 0) {
                    if (c >= static_cast<int>(m))
                        throw Error(ErrorKind::InvalidGroupoid, "compose out of range");
                    if (morphisms[c].src != morphisms[h].src || morphisms[c].tgt != morphisms[g].tgt)
                        throw Error(ErrorKind::InvalidGroupoid, "compose endpoints wrong");
                }
            }
        }
        // associativity on composable triples
        for (size_t g = 0; g < m; ++g)
            for (size_t h = 0; h < m; ++h) {
                if (compose(g, h) < 0) continue;
                for (size_t k = 0; k < m; ++k) {
                    if (compose(h, k) < 0) continue;
                    if (compose(compose(g, h), k) != compose(g, compose(h, k)))
                        throw Error(ErrorKind::InvalidGroupoid, "composition not associative");
                }
            }
        // identities and inverses
        for (size_t o = 0; o < objects.size(); ++o) {
            int e = identity_of[o];
            if (e < 0 || e >= static_cast<int>(m) || morphisms[e].src != static_cast<int>(o) ||
                morphisms[e].tgt != static_cast<int>(o))
                throw Error(ErrorKind::InvalidGroupoid, "bad identity morphism");
        }
        for (size_t g = 0; g < m; ++g) {
            if (compose(identity_of[morphisms[g].tgt], g) != static_cast<int>(g) ||
                compose(g, identity_of[morphisms[g].src]) != static_cast<int>(g))
                throw Error(ErrorKind::InvalidGroupoid, "identity law fails");
            int gi = inverse_of[g];
            if (gi < 0 || gi >= static_cast<int>(m))
                throw Error(ErrorKind::InvalidGroupoid, "inverse out of range");
            if (compose(g, gi) != identity_of[morphisms[g].tgt] ||
                compose(gi, g) != identity_of[morphisms[g].src])
                throw Error(ErrorKind::InvalidGroupoid, "inverse law fails");
        }
    }
};

namespace detail {

// Finishes a groupoid whose morphisms and partial data are set: sorts
// morphisms by (source, target, id) and rebuilds the tables.
struct MorphismSpec {
    std::string id;
    int src, tgt;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

inline FiniteGroupoid pair_groupoid(int nobj) {
    if (nobj < 1) throw Error(ErrorKind::InvalidParams, "pair_groupoid: need n >= 1");
    FiniteGroupoid g;
    g.label = "pair(" + std::to_string(nobj) + ")";
    for (int i = 0; i < nobj; ++i) g.objects.push_back("o" + std::to_string(i + 1));
    // one morphism s -> t per ordered pair, ordered by (src, tgt)
    std::vector<std::vector<int>> idx(nobj, std::vector<int>(nobj, -1));
    for (int s = 0; s < nobj; ++s)
        for (int t = 0; t < nobj; ++t) {
            idx[s][t] = static_cast<int>(g.morphisms.size());
            g.morphisms.push_back({g.objects[s] + ">" + g.objects[t], s, t});
        }
    const size_t m = g.morphisms.size();
    g.compose_table.assign(m, std::vector<int>(m, -1));
    g.inverse_of.assign(m, -1);
    g.identity_of.assign(nobj, -1);
    for (int s = 0; s < nobj; ++s) g.identity_of[s] = idx[s][s];
    for (int s = 0; s < nobj; ++s)
        for (int t = 0; t < nobj; ++t) {
            g.inverse_of[idx[s][t]] = idx[t][s];
            for (int u = 0; u < nobj; ++u)
                g.compose_table[idx[u][t]][idx[s][u]] = idx[s][t];
        }
    g.validate();
    return g;
}

// One-object groupoid from a finite group given by its multiplication
// table; element 0 must be the identity.
inline FiniteGroupoid group_groupoid(const std::string& label,
                                     const std::vector<std::string>& names,
                                     const std::vector<std::vector<int>>& table,
                                     const std::vector<int>& inv) {
    FiniteGroupoid g;
    g.label = label;
    g.objects = {"o1"};
    for (const auto& nm : names) g.morphisms.push_back({nm, 0, 0});
    g.compose_table = table;
    g.inverse_of = inv;
    g.identity_of = {0};
    g.validate();
    return g;
}

inline FiniteGroupoid cyclic_group(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidParams, "cyclic_group: need n >= 1");
    int width = static_cast<int>(std::to_string(n - 1).size());
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        std::string d = std::to_string(i);
        names[i] = "g" + std::string(width - static_cast<int>(d.size()), '0') + d;
    }
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) {
        inv[i] = (n - i) % n;
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    return group_groupoid("grp(Z" + std::to_string(n) + ")", names, table, inv);
}

inline FiniteGroupoid symmetric_group(int n) {
    if (n < 1 || n > 4)
        throw Error(ErrorKind::InvalidParams, "symmetric_group: supported for 1 <= n <= 4");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const int m = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    std::vector<std::string> names(m);
    for (int i = 0; i < m; ++i) {
        index[perms[i]] = i;
        for (int v : perms[i]) names[i] += static_cast<char>('1' + v);
    }
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<int> inv(m);
    for (int i = 0; i < m; ++i) {
        std::vector<int> pi_inv(n);
        for (int v = 0; v < n; ++v) pi_inv[perms[i][v]] = v;
        inv[i] = index.at(pi_inv);
        for (int j = 0; j < m; ++j) {
            std::vector<int> comp(n);  // (p_i o p_j)(v) = p_i[p_j[v]]
            for (int v = 0; v < n; ++v) comp[v] = perms[i][perms[j][v]];
            table[i][j] = index.at(comp);
        }
    }
    return group_groupoid("grp(S" + std::to_string(n) + ")", names, table, inv);
}

// Connected groupoid on nobj objects with the given one-object vertex
// group: morphisms (i <- j, h) composing via the group law.
inline FiniteGroupoid connected_groupoid(int nobj, const FiniteGroupoid& vertex) {
    if (nobj < 1) throw Error(ErrorKind::InvalidParams, "connected_groupoid: need n >= 1");
    if (vertex.objects.size() != 1)
        throw Error(ErrorKind::InvalidParams, "vertex group must have one object");
    const int vg = static_cast<int>(vertex.size());
    FiniteGroupoid g;
    g.label = "gpd(" + std::to_string(nobj) + "," +
              (vertex.label.rfind("grp(", 0) == 0
                   ? vertex.label.substr(4, vertex.label.size() - 5)
                   : vertex.label) + ")";
    for (int i = 0; i < nobj; ++i) g.objects.push_back("o" + std::to_string(i + 1));
    auto idx = [&](int s, int t, int h) { return (s * nobj + t) * vg + h; };
    for (int s = 0; s < nobj; ++s)
        for (int t = 0; t < nobj; ++t)
            for (int h = 0; h < vg; ++h)
                g.morphisms.push_back(
                    {g.objects[s] + ">" + g.objects[t] + ":" + vertex.morphisms[h].id, s, t});
    const size_t m = g.morphisms.size();
    g.compose_table.assign(m, std::vector<int>(m, -1));
    g.inverse_of.assign(m, -1);
    g.identity_of.assign(nobj, -1);
    for (int s = 0; s < nobj; ++s) g.identity_of[s] = idx(s, s, 0);
    for (int s = 0; s < nobj; ++s)
        for (int t = 0; t < nobj; ++t)
            for (int h = 0; h < vg; ++h) {
                g.inverse_of[idx(s, t, h)] = idx(t, s, vertex.inverse_of[h]);
                for (int u = 0; u < nobj; ++u)
                    for (int h2 = 0; h2 < vg; ++h2)
                        g.compose_table[idx(u, t, h)][idx(s, u, h2)] =
                            idx(s, t, vertex.compose_table[h][h2]);
            }
    g.validate();
    return g;
}

inline FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    FiniteGroupoid g;
    g.label = "du(" + a.label + "," + b.label + ")";
    for (const auto& o : a.objects) g.objects.push_back("L." + o);
    for (const auto& o : b.objects) g.objects.push_back("R." + o);
    const int oa = static_cast<int>(a.objects.size());
    const int ma = static_cast<int>(a.size()), mb = static_cast<int>(b.size());
    for (const auto& m : a.morphisms) g.morphisms.push_back({"L." + m.id, m.src, m.tgt});
    for (const auto& m : b.morphisms) g.morphisms.push_back({"R." + m.id, m.src + oa, m.tgt + oa});
    g.compose_table.assign(ma + mb, std::vector<int>(ma + mb, -1));
    g.inverse_of.assign(ma + mb, -1);
    for (int i = 0; i < ma; ++i) {
        g.inverse_of[i] = a.inverse_of[i];
        for (int j = 0; j < ma; ++j) g.compose_table[i][j] = a.compose_table[i][j];
    }
    for (int i = 0; i < mb; ++i) {
        g.inverse_of[ma + i] = ma + b.inverse_of[i];
        for (int j = 0; j < mb; ++j) {
            int c = b.compose_table[i][j];
            g.compose_table[ma + i][ma + j] = c < 0 ? -1 : ma + c;
        }
    }
    for (size_t o = 0; o < a.objects.size(); ++o) g.identity_of.push_back(a.identity_of[o]);
    for (size_t o = 0; o < b.objects.size(); ++o) g.identity_of.push_back(ma + b.identity_of[o]);
    g.validate();
    return g;
}

// ---------------------------------------------------------------------------
// Groupoid algebra
// ---------------------------------------------------------------------------

// Basis = morphisms, g.h = composition or 0, Delta(g) = g (x) g, eps = 1,
// S(g) = g^{-1}.
inline WeakHopfAlgebra groupoid_algebra(const FiniteGroupoid& g, int dim_cap = 256) {
    g.validate();
    const size_t n = g.size();
    if (static_cast<int>(n) > dim_cap)
        throw Error(ErrorKind::SizeLimit,
                    "groupoid has " + std::to_string(n) + " morphisms, cap is " +
                        std::to_string(dim_cap));
    WeakHopfAlgebra A;
    A.n = n;
    A.label = g.label;
    A.mult = Tensor3(n, n, n);
    A.comult = Tensor3(n, n, n);
    A.unit = QVec(n, Rational(0));
    A.counit = QVec(n, Rational(1));
    A.antipode = QMatrix(n, n);
    for (size_t i = 0; i < n; ++i) {
        int c;
        for (size_t j = 0; j < n; ++j)
            if ((c = g.compose(static_cast<int>(i), static_cast<int>(j))) >= 0)
                A.mult(i, j, c) = Rational(1);
        A.comult(i, i, i) = Rational(1);
        A.antipode(g.inverse_of[i], i) = Rational(1);
    }
    for (int e : g.identity_of) A.unit[e] = Rational(1);
    return A;
}

}  // namespace wha
