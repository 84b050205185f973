#include "shallowperm/permutation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>

#include "shallowperm/error.hpp"

namespace shallowperm {

namespace {

// Scratch storage that stays on the stack for the sizes enumeration uses.
template <typename T, std::size_t Inline = 64>
class ScratchBuffer {
public:
    explicit ScratchBuffer(std::size_t n) : size_(n) {
        if (n > Inline) heap_.assign(n, T{});
        else inline_.fill(T{});
    }
    T* data() noexcept { return size_ > Inline ? heap_.data() : inline_.data(); }
    T& operator[](std::size_t i) noexcept { return data()[i]; }

private:
    std::size_t size_;
    std::array<T, Inline> inline_{};
    std::vector<T> heap_;
};

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    if (!is_permutation_word(word_)) {
        throw NotAPermutation("not a permutation of 1.." + std::to_string(word_.size()));
    }
}

Permutation::Permutation(std::initializer_list<int> word)
    : Permutation(std::vector<int>(word)) {}

Permutation Permutation::from_valid_word(std::vector<int> word) noexcept {
    Permutation p;
    p.word_ = std::move(word);
    return p;
}

std::size_t Permutation::position_of(int value) const {
    auto it = std::find(word_.begin(), word_.end(), value);
    if (it == word_.end()) throw std::out_of_range("value not present in permutation");
    return static_cast<std::size_t>(it - word_.begin()) + 1;
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(word_[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << p.to_string();
}

bool is_permutation_word(std::span<const int> word) noexcept {
    const std::size_t n = word.size();
    ScratchBuffer<unsigned char> seen(n + 1);
    for (int v : word) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Permutation parse_permutation(std::string_view text) {
    auto is_delim = [](char c) {
        return c == ',' || std::isspace(static_cast<unsigned char>(c));
    };
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    std::vector<int> word;
    if (text.empty()) return Permutation{};

    const bool delimited = std::any_of(text.begin(), text.end(), is_delim);
    if (!delimited) {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw ParseError("unexpected character '" + std::string(1, c) + "' in permutation");
            }
        }
        if (text.size() >= 10) {
            throw ParseError("digit-string form is limited to n <= 9; use comma-separated values");
        }
        for (char c : text) word.push_back(c - '0');
        return Permutation(std::move(word));
    }

    std::size_t i = 0;
    while (i < text.size()) {
        if (is_delim(text[i])) {
            // Allow "1, 2" but not "1,,2".
            std::size_t commas = 0;
            while (i < text.size() && is_delim(text[i])) commas += text[i++] == ',';
            if (commas > 1 || (word.empty() && commas > 0) || (i == text.size() && commas > 0)) {
                throw ParseError("empty value in permutation list");
            }
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !is_delim(text[j])) ++j;
        std::string_view token = text.substr(i, j - i);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.front() == '-' ||
            token.front() == '+') {
            throw ParseError("malformed value '" + std::string(token) + "'");
        }
        word.push_back(value);
        i = j;
    }
    return Permutation(std::move(word));
}

std::uint64_t displacement(std::span<const int> word) noexcept {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const long diff = static_cast<long>(word[i]) - static_cast<long>(i + 1);
        d += static_cast<std::uint64_t>(diff < 0 ? -diff : diff);
    }
    return d;
}

std::uint64_t inversions(std::span<const int> word) {
    // Fenwick tree over values, scanning right to left: each entry adds the
    // number of smaller values already seen to its right.
    const std::size_t n = word.size();
    ScratchBuffer<std::uint32_t> tree(n + 1);
    std::uint64_t count = 0;
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t v = static_cast<std::size_t>(word[i]) - 1; v > 0; v -= v & (~v + 1))
            count += tree[v];
        for (std::size_t v = static_cast<std::size_t>(word[i]); v <= n; v += v & (~v + 1))
            ++tree[v];
    }
    return count;
}

std::uint64_t cycles(std::span<const int> word) {
    const std::size_t n = word.size();
    ScratchBuffer<unsigned char> seen(n);
    std::uint64_t c = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        ++c;
        for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(word[i]) - 1) seen[i] = 1;
    }
    return c;
}

std::uint64_t descents(std::span<const int> word) noexcept {
    std::uint64_t d = 0;
    for (std::size_t i = 1; i < word.size(); ++i) d += word[i - 1] > word[i];
    return d;
}

std::uint64_t lr_maxima(std::span<const int> word) noexcept {
    std::uint64_t c = 0;
    int best = 0;
    for (int v : word) {
        if (v > best) {
            best = v;
            ++c;
        }
    }
    return c;
}

std::uint64_t rl_minima(std::span<const int> word) noexcept {
    std::uint64_t c = 0;
    int best = static_cast<int>(word.size()) + 1;
    for (std::size_t i = word.size(); i-- > 0;) {
        if (word[i] < best) {
            best = word[i];
            ++c;
        }
    }
    return c;
}

StatVector statistics(std::span<const int> word) {
    StatVector s;
    s.displacement = displacement(word);
    s.inversions = inversions(word);
    s.cycles = cycles(word);
    s.reflection_length = word.size() - s.cycles;
    s.descents = descents(word);
    s.lr_maxima = lr_maxima(word);
    s.rl_minima = rl_minima(word);
    return s;
}

StatVector statistics(const Permutation& p) { return statistics(p.word()); }

bool is_lr_maximum(std::span<const int> word, std::size_t i) noexcept {
    for (std::size_t k = 0; k < i; ++k)
        if (word[k] > word[i]) return false;
    return true;
}

bool is_rl_minimum(std::span<const int> word, std::size_t i) noexcept {
    for (std::size_t k = i + 1; k < word.size(); ++k)
        if (word[k] < word[i]) return false;
    return true;
}

std::string_view to_string(SymmetryKind kind) noexcept {
    switch (kind) {
        case SymmetryKind::Inverse: return "inverse";
        case SymmetryKind::ReverseComplement: return "reverse-complement";
        case SymmetryKind::ReverseComplementInverse: return "reverse-complement-inverse";
    }
    return "?";
}

std::string_view to_string(SymmetryClass cls) noexcept {
    switch (cls) {
        case SymmetryClass::Involution: return "involution";
        case SymmetryClass::Centrosymmetric: return "centrosymmetric";
        case SymmetryClass::Persymmetric: return "persymmetric";
    }
    return "?";
}

SymmetryKind defining_symmetry(SymmetryClass cls) noexcept {
    switch (cls) {
        case SymmetryClass::Involution: return SymmetryKind::Inverse;
        case SymmetryClass::Centrosymmetric: return SymmetryKind::ReverseComplement;
        case SymmetryClass::Persymmetric: return SymmetryKind::ReverseComplementInverse;
    }
    return SymmetryKind::Inverse;
}

Permutation inverse(const Permutation& p) {
    std::vector<int> w(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) w[p.word()[i] - 1] = static_cast<int>(i + 1);
    return Permutation::from_valid_word(std::move(w));
}

Permutation reverse_complement(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    std::vector<int> w(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) w[p.size() - 1 - i] = n + 1 - p.word()[i];
    return Permutation::from_valid_word(std::move(w));
}

Permutation apply_symmetry(const Permutation& p, SymmetryKind kind) {
    switch (kind) {
        case SymmetryKind::Inverse: return inverse(p);
        case SymmetryKind::ReverseComplement: return reverse_complement(p);
        case SymmetryKind::ReverseComplementInverse: return inverse(reverse_complement(p));
    }
    return p;
}

bool is_in_class(std::span<const int> w, SymmetryClass cls) noexcept {
    const std::size_t n = w.size();
    const int np1 = static_cast<int>(n) + 1;
    switch (cls) {
        case SymmetryClass::Involution:
            // w[w[i]] == i
            for (std::size_t i = 0; i < n; ++i)
                if (static_cast<std::size_t>(w[w[i] - 1]) != i + 1) return false;
            return true;
        case SymmetryClass::Centrosymmetric:
            for (std::size_t i = 0; i < n; ++i)
                if (w[n - 1 - i] != np1 - w[i]) return false;
            return true;
        case SymmetryClass::Persymmetric:
            // p = (p^rc)^{-1}  <=>  p_{n+1-p_i} = n+1-i
            for (std::size_t i = 0; i < n; ++i)
                if (w[n - static_cast<std::size_t>(w[i])] != np1 - static_cast<int>(i + 1))
                    return false;
            return true;
    }
    return false;
}

bool is_in_class(const Permutation& p, SymmetryClass cls) noexcept {
    return is_in_class(p.word(), cls);
}

Permutation direct_sum(const Permutation& p, const Permutation& q) {
    std::vector<int> w(p.word().begin(), p.word().end());
    const int shift = static_cast<int>(p.size());
    for (int v : q.word()) w.push_back(v + shift);
    return Permutation::from_valid_word(std::move(w));
}

Permutation skew_sum(const Permutation& p, const Permutation& q) {
    std::vector<int> w;
    w.reserve(p.size() + q.size());
    const int shift = static_cast<int>(q.size());
    for (int v : p.word()) w.push_back(v + shift);
    w.insert(w.end(), q.word().begin(), q.word().end());
    return Permutation::from_valid_word(std::move(w));
}

Permutation reduce(std::span<const int> word) {
    std::vector<std::size_t> order(word.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (word[order[k]] == word[order[k - 1]]) {
            throw DuplicateEntry("value " + std::to_string(word[order[k]]) + " appears twice");
        }
    }
    std::vector<int> w(word.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) w[order[rank]] = static_cast<int>(rank + 1);
    return Permutation::from_valid_word(std::move(w));
}

Permutation identity(std::size_t n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation::from_valid_word(std::move(w));
}

Permutation decreasing(std::size_t n) {
    std::vector<int> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(n - i);
    return Permutation::from_valid_word(std::move(w));
}

Permutation special(SpecialKind kind, std::size_t n) {
    return kind == SpecialKind::Decreasing ? decreasing(n) : identity(n);
}

}  // namespace shallowperm
