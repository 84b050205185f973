#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shallowperm {

/// A permutation of {1, ..., n} in one-line notation.
///
/// Values and positions are 1-based in every public accessor; `word()`
/// exposes the raw one-line word (index 0 holds the value at position 1).
/// The empty permutation (n = 0) is a valid value.
class Permutation {
public:
    Permutation() = default;

    /// Throws NotAPermutation unless `word` is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> word);
    Permutation(std::initializer_list<int> word);

    /// Skips validation. Callers must guarantee the invariant.
    static Permutation from_valid_word(std::vector<int> word) noexcept;

    std::size_t size() const noexcept { return word_.size(); }
    bool empty() const noexcept { return word_.empty(); }

    /// Value at 1-based position `i`.
    int at(std::size_t i) const { return word_.at(i - 1); }

    std::span<const int> word() const noexcept { return word_; }

    /// 1-based position holding `value`.
    std::size_t position_of(int value) const;

    /// Canonical text form: comma separated, no whitespace ("4,2,1,6,3,5").
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.word_ <=> b.word_;
    }

private:
    std::vector<int> word_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// True iff `word` is a rearrangement of 1..word.size().
bool is_permutation_word(std::span<const int> word) noexcept;

/// Accepts "4,2,1,6,3,5", "4 2 1 6 3 5" or the digit string "421635".
/// Digit strings are only legal when every value is at most 9.
Permutation parse_permutation(std::string_view text);

struct StatVector {
    std::uint64_t displacement = 0;       // D
    std::uint64_t inversions = 0;         // I
    std::uint64_t cycles = 0;             // cyc
    std::uint64_t reflection_length = 0;  // T = n - cyc
    std::uint64_t descents = 0;
    std::uint64_t lr_maxima = 0;
    std::uint64_t rl_minima = 0;

    friend bool operator==(const StatVector&, const StatVector&) = default;
};

// Word-level statistics. These take raw one-line words so enumeration loops
// can evaluate them on a scratch buffer without constructing a Permutation.
std::uint64_t displacement(std::span<const int> word) noexcept;
std::uint64_t inversions(std::span<const int> word);  // O(n log n)
std::uint64_t cycles(std::span<const int> word);
std::uint64_t descents(std::span<const int> word) noexcept;
std::uint64_t lr_maxima(std::span<const int> word) noexcept;
std::uint64_t rl_minima(std::span<const int> word) noexcept;

StatVector statistics(std::span<const int> word);
StatVector statistics(const Permutation& p);

/// Entry at 0-based index `i` exceeds every entry before it.
bool is_lr_maximum(std::span<const int> word, std::size_t i) noexcept;
/// Entry at 0-based index `i` is below every entry after it.
bool is_rl_minimum(std::span<const int> word, std::size_t i) noexcept;

enum class SymmetryKind { Inverse, ReverseComplement, ReverseComplementInverse };
enum class SymmetryClass { Involution, Centrosymmetric, Persymmetric };

std::string_view to_string(SymmetryKind kind) noexcept;
std::string_view to_string(SymmetryClass cls) noexcept;

/// The symmetry whose fixed points form `cls`.
SymmetryKind defining_symmetry(SymmetryClass cls) noexcept;

Permutation inverse(const Permutation& p);
Permutation reverse_complement(const Permutation& p);
Permutation apply_symmetry(const Permutation& p, SymmetryKind kind);

/// Fixed-point test evaluated directly on the word, without allocation.
bool is_in_class(std::span<const int> word, SymmetryClass cls) noexcept;
bool is_in_class(const Permutation& p, SymmetryClass cls) noexcept;

Permutation direct_sum(const Permutation& p, const Permutation& q);
Permutation skew_sum(const Permutation& p, const Permutation& q);

/// Standardizes a word of distinct integers. Throws DuplicateEntry.
Permutation reduce(std::span<const int> word);

Permutation identity(std::size_t n);
Permutation decreasing(std::size_t n);

enum class SpecialKind { Decreasing, Identity };
Permutation special(SpecialKind kind, std::size_t n);

}  // namespace shallowperm
