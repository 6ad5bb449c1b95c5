#pragma once

// Brute-force reference implementations. They share no code with the library:
// shapes are plain vectors of row lengths, fillings are checked cell by cell.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Shape = std::vector<int>;
using Poly = std::vector<std::int64_t>;  // low degree first

inline int shape_size(const Shape& s) { return std::accumulate(s.begin(), s.end(), 0); }

// Visits every filling of the cells of `s` (row-major) with values in
// [lo(row), hi(row)], no ordering constraints imposed.
inline void all_fillings(const Shape& s, const std::function<int(int)>& lo, const std::function<int(int)>& hi,
                         const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> f;
    for (std::size_t r = 0; r < s.size(); ++r) {
        f.emplace_back(static_cast<std::size_t>(s[r]), lo(static_cast<int>(r) + 1));
    }
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < s.size(); ++r) {
        for (std::size_t c = 0; c < static_cast<std::size_t>(s[r]); ++c) {
            cells.emplace_back(r, c);
        }
    }
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            visit(f);
            return;
        }
        const auto [r, c] = cells[i];
        for (int v = lo(static_cast<int>(r) + 1); v <= hi(static_cast<int>(r) + 1); ++v) {
            f[r][c] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

inline bool rows_weak(const std::vector<std::vector<int>>& f) {
    for (const auto& row : f) {
        for (std::size_t c = 1; c < row.size(); ++c) {
            if (row[c - 1] > row[c]) return false;
        }
    }
    return true;
}

inline bool cols_ok(const std::vector<std::vector<int>>& f, bool strict) {
    for (std::size_t r = 1; r < f.size(); ++r) {
        for (std::size_t c = 0; c < f[r].size(); ++c) {
            if (strict ? f[r - 1][c] >= f[r][c] : f[r - 1][c] > f[r][c]) return false;
        }
    }
    return true;
}

inline std::uint64_t count_flagged_ssyt(const Shape& s, int k) {
    std::uint64_t n = 0;
    all_fillings(
        s, [](int) { return 1; }, [k](int r) { return k + r; },
        [&](const auto& f) { n += rows_weak(f) && cols_ok(f, true); });
    return n;
}

inline std::uint64_t count_rpp(const Shape& s, int k) {
    std::uint64_t n = 0;
    all_fillings(
        s, [](int) { return 0; }, [k](int) { return k; },
        [&](const auto& f) { n += rows_weak(f) && cols_ok(f, false); });
    return n;
}

// Barely set-valued: pick a cell, give it {x, y} with x < y, fill the rest with
// singletons; check the set-valued order with max/min comparisons.
inline std::uint64_t count_bssyt(const Shape& s, int k) {
    std::uint64_t n = 0;
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(s.size()); ++r) {
        for (int c = 0; c < s[static_cast<std::size_t>(r)]; ++c) {
            cells.emplace_back(r, c);
        }
    }
    for (const auto& [dr, dc] : cells) {
        const int top = k + dr + 1;
        for (int x = 1; x <= top; ++x) {
            for (int y = x + 1; y <= top; ++y) {
                all_fillings(
                    s, [](int) { return 1; }, [k](int r) { return k + r; },
                    [&](const std::vector<std::vector<int>>& f) {
                        auto lo = [&](std::size_t r, std::size_t c) {
                            return static_cast<int>(r) == dr && static_cast<int>(c) == dc ? x : f[r][c];
                        };
                        auto hi = [&](std::size_t r, std::size_t c) {
                            return static_cast<int>(r) == dr && static_cast<int>(c) == dc ? y : f[r][c];
                        };
                        if (f[static_cast<std::size_t>(dr)][static_cast<std::size_t>(dc)] != 1) {
                            return;  // the doubleton cell's own slot is fixed to one value
                        }
                        for (std::size_t r = 0; r < f.size(); ++r) {
                            for (std::size_t c = 0; c < f[r].size(); ++c) {
                                if (c > 0 && hi(r, c - 1) > lo(r, c)) return;
                                if (r > 0 && hi(r - 1, c) >= lo(r, c)) return;
                            }
                        }
                        ++n;
                    });
            }
        }
    }
    return n;
}

// Subshapes of a shape correspond to lattice paths; count by recursion over rows.
inline std::uint64_t count_subshapes(const Shape& s) {
    std::function<std::uint64_t(std::size_t, int)> rec = [&](std::size_t row, int cap) -> std::uint64_t {
        if (row == s.size()) return 1;
        std::uint64_t n = 0;
        for (int v = 0; v <= std::min(cap, s[row]); ++v) {
            n += rec(row + 1, v);
        }
        return n;
    };
    return rec(0, s.empty() ? 0 : s[0]);
}

inline std::uint64_t binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    std::uint64_t b = 1;
    for (int i = 1; i <= r; ++i) {
        b = b * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    }
    return b;
}

// --- permutations -------------------------------------------------------

using Perm = std::vector<int>;  // one-line, values 1..n

inline int inversions(const Perm& w) {
    int n = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            n += w[i] > w[j];
        }
    }
    return n;
}

inline Perm demazure(const Perm& w, const std::vector<int>& word) {
    Perm u = w;
    for (int i : word) {
        const auto a = static_cast<std::size_t>(i - 1);
        if (u[a] < u[a + 1]) std::swap(u[a], u[a + 1]);
    }
    return u;
}

inline Perm longest(int n) {
    Perm w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return w;
}

inline Perm identity(int n) {
    Perm w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return w;
}

inline Poly poly_mul_linear(const Poly& p, int c) {  // p * (x + c)
    Poly out(p.size() + 1, 0);
    for (std::size_t d = 0; d < p.size(); ++d) {
        out[d + 1] += p[d];
        out[d] += p[d] * c;
    }
    return out;
}

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Sum over every word in [1, n-1]^ell whose Demazure product is w.
inline Poly fk_brute(const Perm& w, int ell) {
    const int n = static_cast<int>(w.size());
    Poly total;
    std::vector<int> word(static_cast<std::size_t>(ell), 1);
    if (n < 2) {
        if (ell == 0) total = {1};
        return total;
    }
    while (true) {
        if (demazure(identity(n), word) == w) {
            Poly p{1};
            for (int i : word) p = poly_mul_linear(p, i);
            if (total.size() < p.size()) total.resize(p.size(), 0);
            for (std::size_t d = 0; d < p.size(); ++d) total[d] += p[d];
        }
        int pos = ell - 1;
        while (pos >= 0 && word[static_cast<std::size_t>(pos)] == n - 1) {
            word[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++word[static_cast<std::size_t>(pos)];
    }
    trim(total);
    return total;
}

// Reduced words of w: remove a right descent and recurse.
inline std::uint64_t reduced_words(const Perm& w) {
    static std::map<Perm, std::uint64_t> memo;
    if (inversions(w) == 0) return 1;
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    std::uint64_t n = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) {
            Perm u = w;
            std::swap(u[i], u[i + 1]);
            n += reduced_words(u);
        }
    }
    memo[w] = n;
    return n;
}

inline std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm w = identity(n);
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Fixed-seed generator of shapes inside a box.
inline Shape random_shape(std::mt19937& rng, int max_rows, int max_cols) {
    std::uniform_int_distribution<int> rows(0, max_rows);
    const int r = rows(rng);
    Shape s;
    int cap = max_cols;
    for (int i = 0; i < r; ++i) {
        std::uniform_int_distribution<int> part(0, cap);
        const int p = part(rng);
        if (p == 0) break;
        s.push_back(p);
        cap = p;
    }
    return s;
}

}  // namespace oracle
