#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "superdix/algebra.hpp"

namespace fixtures {

using superdix::AlgebraPtr;
using superdix::Parity;
using superdix::Scalar;

struct Bracket {
    std::string left, right;
    std::map<std::string, Scalar> value;
};

/// Builds an algebra from generator labels ("c" odd when listed in `odd`) and
/// the brackets [left, right]; partners are filled in by superskewsymmetry.
inline AlgebraPtr build(const std::string& name, const std::vector<std::string>& even,
                        const std::vector<std::string>& odd, const std::vector<Bracket>& brackets) {
    std::vector<std::string> labels = even;
    labels.insert(labels.end(), odd.begin(), odd.end());
    std::vector<Parity> par(even.size(), Parity::Even);
    par.resize(labels.size(), Parity::Odd);
    std::size_t n = labels.size();
    auto idx = [&](const std::string& s) {
        for (std::size_t i = 0; i < n; ++i)
            if (labels[i] == s) return i;
        throw std::invalid_argument("unknown label " + s);
    };
    std::vector<std::vector<superdix::Vector>> table(n, std::vector<superdix::Vector>(n, superdix::zero_vector(n)));
    for (const auto& b : brackets) {
        auto i = idx(b.left), j = idx(b.right);
        superdix::Vector v = superdix::zero_vector(n);
        for (const auto& [k, c] : b.value) v[idx(k)] = c;
        table[i][j] = v;
        table[j][i] = Scalar(-superdix::sign_of(par[i], par[j])) * v;
    }
    return superdix::make_algebra(name, labels, par, table);
}

inline AlgebraPtr abelian() { return build("abelian", {"a", "b"}, {"c"}, {}); }
inline AlgebraPtr h3() { return build("h3", {"z", "q", "p"}, {}, {{"q", "p", {{"z", 1}}}}); }
inline AlgebraPtr h5() {
    return build("h5", {"z", "q1", "p1", "q2", "p2"}, {}, {{"q1", "p1", {{"z", 1}}}, {"q2", "p2", {{"z", 1}}}});
}
inline AlgebraPtr odd11_zero() { return build("odd11_zero", {"z"}, {"c"}, {}); }
inline AlgebraPtr odd11_clifford() { return build("odd11_clifford", {"z"}, {"c"}, {{"c", "c", {{"z", 1}}}}); }
inline AlgebraPtr superheis_hyp() {
    return build("superheis_hyp", {"z"}, {"c1", "c2"}, {{"c1", "c2", {{"z", 1}}}});
}
inline AlgebraPtr superheis_diag() {
    return build("superheis_diag", {"z"}, {"c1", "c2"}, {{"c1", "c1", {{"z", 1}}}, {"c2", "c2", {{"z", 1}}}});
}
inline AlgebraPtr superheis_13() {
    return build("superheis_13", {"z"}, {"c1", "c2", "c3"},
                 {{"c1", "c2", {{"z", 1}}}, {"c3", "c3", {{"z", 1}}}});
}
inline AlgebraPtr engineered22() {
    return build("engineered22", {"z", "a"}, {"c1", "c2"},
                 {{"a", "c1", {{"c2", 1}}}, {"c1", "c1", {{"z", 1}}}});
}
inline AlgebraPtr hc32() {
    return build("hc32", {"z", "q", "p"}, {"c1", "c2"}, {{"q", "p", {{"z", 1}}}, {"c1", "c2", {{"z", 1}}}});
}
inline AlgebraPtr nonsym32() {
    return build("nonsym32", {"z", "q", "p"}, {"c", "d"},
                 {{"q", "p", {{"z", 1}}}, {"p", "c", {{"d", 1}}}, {"c", "c", {{"q", 2}}}, {"c", "d", {{"z", -1}}}});
}

inline AlgebraPtr heis53() {
    return build("heis53", {"z", "q1", "p1", "q2", "p2"}, {"c1", "c2", "c3"},
                 {{"q1", "p1", {{"z", 1}}},
                  {"q2", "p2", {{"z", 1}}},
                  {"c1", "c2", {{"z", 1}}},
                  {"c3", "c3", {{"z", 1}}}});
}

inline superdix::Functional functional(const AlgebraPtr& g, const std::map<std::string, Scalar>& values) {
    superdix::Vector v = superdix::zero_vector(g->dim());
    for (const auto& [k, c] : values) v[*g->index_of(k)] = c;
    return {*g, v};
}

}  // namespace fixtures
