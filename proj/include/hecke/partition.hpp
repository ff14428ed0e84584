#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

// Parts in weakly decreasing order, no zeros. Plain vector so that the
// built-in lexicographic order (a linear extension of dominance) applies.
using Partition = std::vector<int>;

inline Partition make_partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] <= 0) throw std::invalid_argument("partition: parts must be positive");
        if (k > 0 && parts[k] > parts[k - 1])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
    return parts;
}

inline int size(const Partition& l) {
    int s = 0;
    for (int x : l) s += x;
    return s;
}

inline int part(const Partition& l, int row) { // 1-based, zero past the end
    return row >= 1 && row <= static_cast<int>(l.size()) ? l[row - 1] : 0;
}

// "6,4,2^2,1^2"; "-", "0" and "" are the empty partition.
inline Partition parse_partition(std::string_view text) {
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')') t += c;
    if (t.empty() || t == "-" || t == "0" || t == "∅") return {};
    std::vector<int> parts;
    size_t i = 0;
    while (i <= t.size()) {
        size_t j = t.find(',', i);
        if (j == std::string::npos) j = t.size();
        std::string tok = t.substr(i, j - i);
        if (tok.empty()) throw std::invalid_argument("partition: empty part in '" + std::string(text) + "'");
        int val, mult = 1;
        size_t pos = 0;
        try {
            auto caret = tok.find('^');
            val = std::stoi(tok.substr(0, caret), &pos);
            if (pos != (caret == std::string::npos ? tok.size() : caret)) throw std::invalid_argument("");
            if (caret != std::string::npos) {
                std::string m = tok.substr(caret + 1);
                mult = std::stoi(m, &pos);
                if (pos != m.size() || mult < 0) throw std::invalid_argument("");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("partition: cannot parse '" + std::string(text) + "'");
        }
        if (val < 0) throw std::invalid_argument("partition: negative part in '" + std::string(text) + "'");
        for (int k = 0; k < mult; ++k) parts.push_back(val);
        i = j + 1;
    }
    return make_partition(parts);
}

inline std::string to_string(const Partition& l) {
    if (l.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < l.size();) {
        size_t j = i;
        while (j < l.size() && l[j] == l[i]) ++j;
        if (!s.empty()) s += ',';
        s += std::to_string(l[i]);
        if (j - i > 1) s += '^' + std::to_string(j - i);
        i = j;
    }
    return s;
}

inline Partition conjugate(const Partition& l) {
    Partition c(l.empty() ? 0 : l[0], 0);
    for (int x : l)
        for (int k = 0; k < x; ++k) ++c[k];
    return c;
}

// Partial-sum dominance; partitions of different sizes never dominate.
inline bool dominates(const Partition& l, const Partition& m) {
    if (size(l) != size(m)) return false;
    int sl = 0, sm = 0;
    size_t n = std::max(l.size(), m.size());
    for (size_t k = 0; k < n; ++k) {
        sl += k < l.size() ? l[k] : 0;
        sm += k < m.size() ? m[k] : 0;
        if (sl < sm) return false;
    }
    return true;
}

inline bool is_e_regular(const Partition& l, int e) {
    for (size_t i = 0; i + e <= l.size(); ++i)
        if (l[i] == l[i + e - 1]) return false;
    return true;
}

struct Node {
    int row, col;
    friend bool operator==(const Node&, const Node&) = default;
};

inline int mod(int a, int e) { return ((a % e) + e) % e; }

inline int residue(const Node& n, int e) { return mod(n.col - n.row, e); }

struct BoundaryNodes {
    std::vector<Node> addable, removable;
};

// Addable and removable nodes of residue i, top row first.
inline BoundaryNodes boundary_nodes(const Partition& l, int e, int i) {
    BoundaryNodes b;
    int len = static_cast<int>(l.size());
    for (int r = 1; r <= len + 1; ++r) {
        int lr = part(l, r);
        if (r == 1 || part(l, r - 1) > lr) {
            Node a{r, lr + 1};
            if (residue(a, e) == i) b.addable.push_back(a);
        }
        if (lr > 0 && part(l, r + 1) < lr) {
            Node x{r, lr};
            if (residue(x, e) == i) b.removable.push_back(x);
        }
    }
    return b;
}

inline Partition add_node(Partition l, const Node& n) {
    if (n.row < 1 || n.col != part(l, n.row) + 1 || (n.row > 1 && part(l, n.row - 1) < n.col))
        throw std::invalid_argument("add_node: node is not addable");
    if (n.row == static_cast<int>(l.size()) + 1)
        l.push_back(1);
    else
        ++l[n.row - 1];
    return l;
}

inline Partition remove_node(Partition l, const Node& n) {
    if (n.row < 1 || n.col != part(l, n.row) || n.col < 1 || part(l, n.row + 1) >= n.col)
        throw std::invalid_argument("remove_node: node is not removable");
    if (--l[n.row - 1] == 0) l.pop_back();
    return l;
}

enum class Kashiwara { raise, lower };

// Reduced i-signature read from the bottom row upward (addable +, removable
// -), with adjacent "-+" pairs cancelled. What remains is +...+-...-; both
// lists are kept in bottom-up order. Reading top-down instead would produce
// the crystal of e-restricted rather than e-regular partitions.
struct ReducedSignature {
    std::vector<Node> minus, plus;
};

inline ReducedSignature reduced_signature(const Partition& l, int e, int i) {
    auto b = boundary_nodes(l, e, i);
    std::vector<std::pair<int, Node>> seq; // sign: +1 addable, -1 removable
    for (auto& n : b.addable) seq.push_back({1, n});
    for (auto& n : b.removable) seq.push_back({-1, n});
    std::sort(seq.begin(), seq.end(), [](auto& a, auto& c) { return a.second.row > c.second.row; });
    ReducedSignature s;
    std::vector<Node> pending_minus;
    for (auto& [sg, n] : seq) {
        if (sg < 0)
            pending_minus.push_back(n);
        else if (!pending_minus.empty())
            pending_minus.pop_back();
        else
            s.plus.push_back(n);
    }
    s.minus = pending_minus;
    return s;
}

// ẽ_i^k (raise) removes the leftmost uncancelled -, f̃_i^k (lower) adds the
// rightmost uncancelled +; nullopt when fewer than k such nodes exist.
inline std::optional<Partition> kashiwara(Partition l, int e, int i, int k, Kashiwara dir) {
    for (int step = 0; step < k; ++step) {
        auto s = reduced_signature(l, e, i);
        if (dir == Kashiwara::raise) {
            if (s.minus.empty()) return std::nullopt;
            l = remove_node(l, s.minus.front());
        } else {
            if (s.plus.empty()) return std::nullopt;
            l = add_node(l, s.plus.back());
        }
    }
    return l;
}

// Residues of good nodes in removal order, always taking the smallest
// residue with a good node.
inline std::vector<int> good_node_sequence(Partition l, int e) {
    if (!is_e_regular(l, e)) throw std::invalid_argument("good_node_sequence: partition is not e-regular");
    std::vector<int> seq;
    while (!l.empty()) {
        bool found = false;
        for (int i = 0; i < e && !found; ++i) {
            auto s = reduced_signature(l, e, i);
            if (!s.minus.empty()) {
                l = remove_node(l, s.minus.front());
                seq.push_back(i);
                found = true;
            }
        }
        if (!found) throw std::logic_error("good_node_sequence: no good node on a nonempty regular partition");
    }
    return seq;
}

inline Partition mullineux(const Partition& l, int e) {
    if (!is_e_regular(l, e)) throw std::invalid_argument("mullineux: partition is not e-regular");
    auto seq = good_node_sequence(l, e);
    Partition m;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        auto next = kashiwara(m, e, mod(-*it, e), 1, Kashiwara::lower);
        if (!next) throw std::logic_error("mullineux: crystal rebuild failed");
        m = *next;
    }
    return m;
}

// All partitions of n, lexicographically decreasing.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int x = std::min(rem, maxpart); x >= 1; --x) {
            cur.push_back(x);
            self(self, rem - x, x);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace hecke
