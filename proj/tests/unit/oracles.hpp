#pragma once
// Deliberately naive reference implementations. Nothing here calls into the
// library; tests compare library results against these.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline std::vector<Word> all_perms(int n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Word> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline long displacement(const Word& w) {
    long d = 0;
    for (std::size_t i = 0; i < w.size(); ++i) d += std::labs(w[i] - static_cast<long>(i + 1));
    return d;
}

inline long inversions(const Word& w) {
    long c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
    return c;
}

inline long cycles(const Word& w) {
    std::vector<bool> seen(w.size());
    long c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (std::size_t j = i; !seen[j]; j = w[j] - 1) seen[j] = true;
    }
    return c;
}

inline long descents(const Word& w) {
    long c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) c += w[i] > w[i + 1];
    return c;
}

inline long lr_maxima(const Word& w) {
    long c = 0;
    int best = 0;
    for (int v : w)
        if (v > best) ++c, best = v;
    return c;
}

inline bool shallow(const Word& w) {
    return inversions(w) + static_cast<long>(w.size()) - cycles(w) == displacement(w);
}

// (p . q)(i) = p(q(i))
inline Word compose(const Word& p, const Word& q) {
    Word r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i] - 1];
    return r;
}

inline Word reverse_complement(const Word& w) {
    const int n = static_cast<int>(w.size());
    Word r(w.size());
    for (int i = 0; i < n; ++i) r[i] = n + 1 - w[n - 1 - i];
    return r;
}

enum class Anchored { None, ValueMax4Min1, First3Last2 };

// Every k-subset of positions, compared letter by letter with the pattern.
inline bool contains(const Word& host, const Word& pat, Anchored anchor = Anchored::None) {
    const int n = static_cast<int>(host.size()), k = static_cast<int>(pat.size());
    if (k > n) return false;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        Word idx;
        for (int i = 0; i < n; ++i)
            if (pick[i]) idx.push_back(i);
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = 0; b < k && ok; ++b) ok = (host[idx[a]] < host[idx[b]]) == (pat[a] < pat[b]);
        if (ok && anchor == Anchored::ValueMax4Min1) ok = host[idx[1]] == n && host[idx[2]] == 1;
        if (ok && anchor == Anchored::First3Last2) ok = idx[0] == 0 && idx[3] == n - 1;
        if (ok) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

// Power series of num/den by the defining recurrence; den[0] must be +-1.
inline std::vector<long long> series(const std::vector<long long>& num, const std::vector<long long>& den,
                                     std::size_t order) {
    std::vector<long long> s(order + 1, 0);
    for (std::size_t n = 0; n <= order; ++n) {
        long long v = n < num.size() ? num[n] : 0;
        for (std::size_t k = 1; k <= n && k < den.size(); ++k) v -= den[k] * s[n - k];
        s[n] = v / den[0];
    }
    return s;
}

inline std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline std::uint64_t fib(int m) {
    std::uint64_t a = 0, b = 1;  // F_0, F_1
    for (int i = 0; i < m; ++i) {
        const std::uint64_t t = a + b;
        a = b;
        b = t;
    }
    return a;
}

inline std::uint64_t choose(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c[n][k];
}

}  // namespace oracle
