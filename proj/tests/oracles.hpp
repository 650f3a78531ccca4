#pragma once

// Independent reference implementations used only by tests.  They work on
// plain strings and brute force, sharing no code paths with the library.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "iwg/rose_map.hpp"

namespace oracle {

// Words over letters a..h with uppercase for inverses.
inline char inv(char c) {
    return std::isupper(static_cast<unsigned char>(c)) ? static_cast<char>(std::tolower(c))
                                                       : static_cast<char>(std::toupper(c));
}

inline std::string reduce(std::string w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i + 1] == inv(w[i])) {
                w.erase(i, 2);
                changed = true;
                break;
            }
        }
    }
    return w;
}

inline std::string invert(const std::string& w) {
    std::string out(w.rbegin(), w.rend());
    for (char& c : out) c = inv(c);
    return out;
}

// images[i] is the image of letter 'a' + i.
inline std::string substitute(const std::vector<std::string>& images, const std::string& w) {
    std::string out;
    for (char c : w) {
        int i = std::tolower(c) - 'a';
        out += std::islower(static_cast<unsigned char>(c)) ? images[i] : invert(images[i]);
    }
    return reduce(out);
}

inline std::string to_word(const iwg::EdgePath& p) {
    std::string out;
    for (iwg::Direction d : p) {
        char c = static_cast<char>('a' + iwg::edge_index(d));
        out += iwg::is_forward(d) ? c : static_cast<char>(std::toupper(c));
    }
    return out;
}

inline iwg::EdgePath from_word(const std::string& w) {
    iwg::EdgePath p;
    for (char c : w) {
        int i = std::tolower(c) - 'a';
        p.push_back(std::islower(static_cast<unsigned char>(c)) ? 2 * i + 1 : 2 * i + 2);
    }
    return p;
}

inline std::vector<std::string> words_of(const iwg::RoseMap& m) {
    std::vector<std::string> out;
    for (const auto& w : m.images()) out.push_back(to_word(w));
    return out;
}

// Direction map from first letters of string images.
inline std::map<int, int> direction_map(const std::vector<std::string>& images) {
    std::map<int, int> dg;
    for (std::size_t i = 0; i < images.size(); ++i) {
        iwg::EdgePath fwd = from_word(images[i]);
        iwg::EdgePath bwd = from_word(invert(images[i]));
        dg[static_cast<int>(2 * i + 1)] = fwd.front();
        dg[static_cast<int>(2 * i + 2)] = bwd.front();
    }
    return dg;
}

// Gates: d ~ d' iff some iterate of Dg (k <= 2n) identifies them.
inline std::set<std::set<int>> gates(const std::vector<std::string>& images) {
    auto dg = direction_map(images);
    int n = static_cast<int>(2 * images.size());
    std::vector<int> root(n + 1);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
    for (int d = 1; d <= n; ++d)
        for (int e = d + 1; e <= n; ++e) {
            int x = d, y = e;
            for (int k = 1; k <= 2 * n; ++k) {
                x = dg[x];
                y = dg[y];
                if (x == y) {
                    root[find(d)] = find(e);
                    break;
                }
            }
        }
    std::map<int, std::set<int>> groups;
    for (int d = 1; d <= n; ++d) groups[find(d)].insert(d);
    std::set<std::set<int>> out;
    for (auto& [r, g] : groups) out.insert(g);
    return out;
}

// Union of turns crossed by g^k(E) for k <= max_power.
inline std::set<std::pair<int, int>> turns_by_iteration(const std::vector<std::string>& images,
                                                        int max_power) {
    std::set<std::pair<int, int>> out;
    std::vector<std::string> cur = images;
    for (int k = 1; k <= max_power; ++k) {
        for (const auto& w : cur) {
            iwg::EdgePath p = from_word(w);
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                int x = iwg::bar(p[i]), y = p[i + 1];
                out.insert({std::min(x, y), std::max(x, y)});
            }
        }
        std::vector<std::string> next;
        for (const auto& w : cur) next.push_back(substitute(images, w));
        cur = std::move(next);
        if (std::any_of(cur.begin(), cur.end(), [](const std::string& w) { return w.size() > 200000; }))
            break;
    }
    return out;
}

// Simple graphs on 0..n-1 as adjacency bitmasks over pairs.
inline std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

inline bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> seen(n, 0), stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [a, b] : edges) {
            int w = a == v ? b : (b == v ? a : -1);
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s; });
}

// Least relabelled edge mask over all n! permutations.
inline std::uint64_t brute_canonical(int n, const std::vector<std::pair<int, int>>& edges) {
    auto pairs = all_pairs(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t mask = 0;
        for (auto [a, b] : edges) {
            int x = std::min(perm[a], perm[b]), y = std::max(perm[a], perm[b]);
            auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(x, y));
            mask |= std::uint64_t{1} << (it - pairs.begin());
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Number of connected isomorphism classes on n vertices.
inline std::size_t connected_class_count(int n) {
    auto pairs = all_pairs(n);
    std::set<std::uint64_t> classes;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((m >> b) & 1u) edges.push_back(pairs[b]);
        if (connected(n, edges)) classes.insert(brute_canonical(n, edges));
    }
    return classes.size();
}

// Number of edge subsets of K_n, over labelled vertices, isomorphic to the
// given graph.
inline std::size_t labelled_copies(int n, const std::vector<std::pair<int, int>>& target) {
    std::uint64_t want = brute_canonical(n, target);
    auto pairs = all_pairs(n);
    std::size_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
        if (static_cast<std::size_t>(__builtin_popcountll(m)) != target.size()) continue;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((m >> b) & 1u) edges.push_back(pairs[b]);
        if (brute_canonical(n, edges) == want) ++count;
    }
    return count;
}

// Random word of generators {a, u} with a not in {u, bar u}.
inline std::vector<iwg::Generator> random_generators(iwg::Rank rank, int count, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(1, rank.directions());
    std::vector<iwg::Generator> out;
    while (static_cast<int>(out.size()) < count) {
        int a = pick(rng), u = pick(rng);
        if (a == u || a == iwg::bar(u)) continue;
        out.emplace_back(rank, a, u);
    }
    return out;
}

}  // namespace oracle
