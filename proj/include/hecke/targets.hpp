#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpoly.hpp"

namespace hecke {

// The six lower-unitriangular patterns that force Schurian-infiniteness.
enum class Target { dagger, dagger1, dagger2, ddagger, club, spade };

inline const std::vector<Target>& all_targets() {
    static const std::vector<Target> t{Target::dagger, Target::dagger1, Target::dagger2, Target::ddagger, Target::club, Target::spade};
    return t;
}

inline std::string to_string(Target t) {
    switch (t) {
    case Target::dagger: return "dagger";
    case Target::dagger1: return "dagger1";
    case Target::dagger2: return "dagger2";
    case Target::ddagger: return "ddagger";
    case Target::club: return "club";
    default: return "spade";
    }
}

inline Target parse_target(const std::string& s) {
    for (auto t : all_targets())
        if (to_string(t) == s) return t;
    throw std::invalid_argument("unknown target matrix '" + s + "'");
}

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Rows given below the diagonal; entries are exponents of v, -1 for zero.
inline PolyMatrix target_matrix(Target t) {
    std::vector<std::vector<int>> low;
    switch (t) {
    case Target::dagger: low = {{}, {1}, {-1, 1}, {1, 2, 1}}; break;
    case Target::dagger1: low = {{}, {1}, {2, 1}, {1, -1, 1}}; break;
    case Target::dagger2: low = {{}, {1}, {2, 1}, {1, 2, 1}}; break;
    case Target::ddagger: low = {{}, {1}, {1, -1}, {2, 1, 1}}; break;
    case Target::club: low = {{}, {-1}, {1, 1}, {1, 1, -1}}; break;
    case Target::spade: low = {{}, {-1}, {1, 1}, {-1, 2, 1}, {2, -1, 1, -1}}; break;
    }
    size_t n = low.size();
    PolyMatrix m(n, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
        for (size_t j = 0; j < low[i].size(); ++j)
            if (low[i][j] >= 0) m[i][j] = LaurentPoly::v(low[i][j]);
    }
    return m;
}

struct TargetMatch {
    Target target;
    std::vector<int> order; // order[k] = index of the input row/column placed k-th
};

inline PolyMatrix permuted(const PolyMatrix& m, const std::vector<int>& order) {
    size_t n = order.size();
    PolyMatrix out(n, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = m[order[i]][order[j]];
    return out;
}

// Tries the given order first, then the reverse, then every other ordering.
inline std::optional<TargetMatch> match_target(const PolyMatrix& m) {
    size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("match_target: matrix is not square");
    if (n != 4 && n != 5) return std::nullopt;
    std::vector<std::vector<int>> orders;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    orders.push_back(id);
    orders.emplace_back(id.rbegin(), id.rend());
    auto perm = id;
    do {
        if (perm != orders[0] && perm != orders[1]) orders.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto& o : orders) {
        auto pm = permuted(m, o);
        for (auto t : all_targets()) {
            auto tm = target_matrix(t);
            if (tm.size() == n && tm == pm) return TargetMatch{t, o};
        }
    }
    return std::nullopt;
}

// Unordered index pairs {i, j} where the target carries v.
inline std::vector<std::pair<int, int>> target_v_pairs(Target t) {
    auto m = target_matrix(t);
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (m[i][j] == LaurentPoly::v(1)) out.push_back({static_cast<int>(j), static_cast<int>(i)});
    return out;
}

} // namespace hecke
