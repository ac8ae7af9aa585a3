#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "wha/errors.hpp"
#include "wha/groupoid.hpp"
#include "wha/weak_hopf.hpp"

namespace wha {

using Json = nlohmann::json;

namespace detail {

inline Rational parse_q(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw Error(ErrorKind::ParseError, where + ": expected rational string");
}

inline QVec parse_qvec(const Json& j, size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n)
        throw Error(ErrorKind::ParseError, where + ": expected array of length " + std::to_string(n));
    QVec v(n);
    for (size_t i = 0; i < n; ++i) v[i] = parse_q(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

inline Tensor3 parse_tensor(const Json& j, size_t d1, size_t d2, size_t d3, const std::string& where) {
    if (!j.is_array() || j.size() != d1)
        throw Error(ErrorKind::ParseError, where + ": expected " + std::to_string(d1) + " slices");
    Tensor3 t(d1, d2, d3);
    for (size_t i = 0; i < d1; ++i) {
        if (!j[i].is_array() || j[i].size() != d2)
            throw Error(ErrorKind::ParseError, where + "[" + std::to_string(i) + "]: bad shape");
        for (size_t a = 0; a < d2; ++a) {
            if (!j[i][a].is_array() || j[i][a].size() != d3)
                throw Error(ErrorKind::ParseError,
                            where + "[" + std::to_string(i) + "][" + std::to_string(a) + "]: bad shape");
            for (size_t b = 0; b < d3; ++b)
                t(i, a, b) = parse_q(j[i][a][b], where);
        }
    }
    return t;
}

inline Json tensor_json(const Tensor3& t) {
    Json j = Json::array();
    for (size_t i = 0; i < t.dim1(); ++i) {
        Json slice = Json::array();
        for (size_t a = 0; a < t.dim2(); ++a) {
            Json row = Json::array();
            for (size_t b = 0; b < t.dim3(); ++b) row.push_back(t(i, a, b).str());
            slice.push_back(row);
        }
        j.push_back(slice);
    }
    return j;
}

inline Json qvec_json(const QVec& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.str());
    return j;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open file " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
    return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Weak Hopf algebra files
// ---------------------------------------------------------------------------

inline Json algebra_to_json(const WeakHopfAlgebra& A) {
    Json j;
    j["dim"] = A.n;
    j["label"] = A.label;
    j["mult"] = detail::tensor_json(A.mult);
    j["unit"] = detail::qvec_json(A.unit);
    j["comult"] = detail::tensor_json(A.comult);
    j["counit"] = detail::qvec_json(A.counit);
    if (A.has_antipode()) {
        Json s = Json::array();
        for (size_t r = 0; r < A.n; ++r) {
            Json row = Json::array();
            for (size_t c = 0; c < A.n; ++c) row.push_back(A.antipode(r, c).str());
            s.push_back(row);
        }
        j["antipode"] = s;
    } else {
        j["antipode"] = nullptr;
    }
    return j;
}

inline void save_algebra(const WeakHopfAlgebra& A, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write file " + path);
    out << algebra_to_json(A).dump(1) << "\n";
}

// Parses and fully validates an algebra file: all axioms must hold exactly,
// and a stored antipode must satisfy the antipode equations. A null
// antipode is recovered by solving them.
inline WeakHopfAlgebra load_algebra(const std::string& path, int dim_cap = 256) {
    Json j = detail::read_json_file(path);
    for (const char* key : {"dim", "mult", "unit", "comult", "counit"})
        if (!j.contains(key)) throw Error(ErrorKind::ParseError, path + ": missing field '" + key + "'");
    WeakHopfAlgebra A;
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        throw Error(ErrorKind::ParseError, "dim: expected positive integer");
    A.n = j["dim"].get<size_t>();
    if (static_cast<int>(A.n) > dim_cap)
        throw Error(ErrorKind::SizeLimit, "dim " + std::to_string(A.n) + " exceeds cap");
    A.label = j.value("label", std::string("loaded"));
    A.mult = detail::parse_tensor(j["mult"], A.n, A.n, A.n, "mult");
    A.unit = detail::parse_qvec(j["unit"], A.n, "unit");
    A.comult = detail::parse_tensor(j["comult"], A.n, A.n, A.n, "comult");
    A.counit = detail::parse_qvec(j["counit"], A.n, "counit");

    bool antipode_given = j.contains("antipode") && !j["antipode"].is_null();
    if (antipode_given) {
        const Json& s = j["antipode"];
        if (!s.is_array() || s.size() != A.n)
            throw Error(ErrorKind::ParseError, "antipode: bad shape");
        A.antipode = QMatrix(A.n, A.n);
        for (size_t r = 0; r < A.n; ++r) {
            if (!s[r].is_array() || s[r].size() != A.n)
                throw Error(ErrorKind::ParseError, "antipode: bad shape");
            for (size_t c = 0; c < A.n; ++c)
                A.antipode(r, c) = detail::parse_q(s[r][c], "antipode");
        }
    } else {
        // check the antipode-free axioms before solving
        WeakHopfAlgebra probe = A;
        AxiomReport pre = verify_axioms(probe);
        for (const auto& c : pre.checks)
            if (!c.pass && c.name.rfind("antipode", 0) != 0)
                throw Error(ErrorKind::AxiomViolation, c.name +
                            (c.witness.empty() ? "" : " at " + c.witness));
        A.antipode = solve_antipode(A);
    }

    AxiomReport rep = verify_axioms(A);
    if (!rep.all_pass)
        throw Error(ErrorKind::AxiomViolation, rep.first_failure());
    return A;
}

// ---------------------------------------------------------------------------
// Groupoid files
// ---------------------------------------------------------------------------

inline Json groupoid_to_json(const FiniteGroupoid& g) {
    Json j;
    j["objects"] = g.objects;
    Json ms = Json::array();
    for (const auto& m : g.morphisms)
        ms.push_back({{"id", m.id}, {"src", g.objects[m.src]}, {"tgt", g.objects[m.tgt]}});
    j["morphisms"] = ms;
    Json comp = Json::array();
    for (size_t a = 0; a < g.size(); ++a)
        for (size_t b = 0; b < g.size(); ++b)
            if (g.compose_table[a][b] >= 0)
                comp.push_back({g.morphisms[a].id, g.morphisms[b].id,
                                g.morphisms[g.compose_table[a][b]].id});
    j["compose"] = comp;
    Json inv = Json::array();
    for (size_t a = 0; a < g.size(); ++a)
        inv.push_back({g.morphisms[a].id, g.morphisms[g.inverse_of[a]].id});
    j["inverse"] = inv;
    return j;
}

inline void save_groupoid(const FiniteGroupoid& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write file " + path);
    out << groupoid_to_json(g).dump(1) << "\n";
}

inline FiniteGroupoid load_groupoid(const std::string& path) {
    Json j = detail::read_json_file(path);
    for (const char* key : {"objects", "morphisms", "compose", "inverse"})
        if (!j.contains(key)) throw Error(ErrorKind::ParseError, path + ": missing field '" + key + "'");
    FiniteGroupoid g;
    g.label = "groupoid:" + path;
    std::map<std::string, int> obj_index, mor_index;
    for (const auto& o : j["objects"]) {
        obj_index[o.get<std::string>()] = static_cast<int>(g.objects.size());
        g.objects.push_back(o.get<std::string>());
    }
    for (const auto& m : j["morphisms"]) {
        FiniteGroupoid::Morphism mor;
        mor.id = m.at("id").get<std::string>();
        auto src = m.at("src").get<std::string>(), tgt = m.at("tgt").get<std::string>();
        if (!obj_index.count(src) || !obj_index.count(tgt))
            throw Error(ErrorKind::ParseError, "morphism " + mor.id + ": unknown object");
        mor.src = obj_index[src];
        mor.tgt = obj_index[tgt];
        if (mor_index.count(mor.id))
            throw Error(ErrorKind::ParseError, "duplicate morphism id " + mor.id);
        mor_index[mor.id] = static_cast<int>(g.morphisms.size());
        g.morphisms.push_back(mor);
    }
    const size_t n = g.size();
    g.compose_table.assign(n, std::vector<int>(n, -1));
    g.inverse_of.assign(n, -1);
    auto mid = [&](const Json& x) {
        auto s = x.get<std::string>();
        auto it = mor_index.find(s);
        if (it == mor_index.end()) throw Error(ErrorKind::ParseError, "unknown morphism id " + s);
        return it->second;
    };
    for (const auto& c : j["compose"]) {
        if (!c.is_array() || c.size() != 3)
            throw Error(ErrorKind::ParseError, "compose entries must be [g,h,gh]");
        g.compose_table[mid(c[0])][mid(c[1])] = mid(c[2]);
    }
    for (const auto& c : j["inverse"]) {
        if (!c.is_array() || c.size() != 2)
            throw Error(ErrorKind::ParseError, "inverse entries must be [g,ginv]");
        g.inverse_of[mid(c[0])] = mid(c[1]);
    }
    // infer identity morphisms
    g.identity_of.assign(g.objects.size(), -1);
    for (size_t e = 0; e < n; ++e) {
        if (g.morphisms[e].src != g.morphisms[e].tgt) continue;
        int o = g.morphisms[e].src;
        bool is_id = true;
        for (size_t h = 0; h < n && is_id; ++h) {
            if (g.morphisms[h].tgt == o && g.compose_table[e][h] != static_cast<int>(h)) is_id = false;
            if (g.morphisms[h].src == o && g.compose_table[h][e] != static_cast<int>(h)) is_id = false;
        }
        if (is_id) g.identity_of[o] = static_cast<int>(e);
    }
    for (size_t o = 0; o < g.objects.size(); ++o)
        if (g.identity_of[o] < 0)
            throw Error(ErrorKind::InvalidGroupoid, "no identity morphism at object " + g.objects[o]);
    g.validate();
    return g;
}

}  // namespace wha
