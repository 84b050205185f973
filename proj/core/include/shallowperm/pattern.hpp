#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shallowperm/permutation.hpp"

namespace shallowperm {

/// Extra constraint pinning one pattern letter to an extreme of the host.
enum class Anchor : std::uint8_t {
    ValueMax = 1,  // matched by the host's value n
    ValueMin = 2,  // matched by the host's value 1
    PosFirst = 4,  // matched at host position 1
    PosLast = 8,   // matched at host position n
};

/// A classical pattern of length <= 4 with optional per-letter anchors.
class PatternSpec {
public:
    static constexpr std::size_t kMaxLength = 4;

    /// Anchor-free pattern. Throws InvalidPatternSpec when too long.
    explicit PatternSpec(Permutation pattern);

    /// `anchors[i]` is a bitwise OR of Anchor values for letter i (0-based).
    PatternSpec(Permutation pattern, std::vector<std::uint8_t> anchors);

    /// 3412 with the "4" equal to n and the "1" equal to 1.
    static PatternSpec value_anchored_3412();
    /// 3412 with the "3" in the first position and the "2" in the last.
    static PatternSpec position_anchored_3412();

    const Permutation& pattern() const noexcept { return pattern_; }
    std::span<const std::uint8_t> anchors() const noexcept { return anchors_; }
    bool has_anchor(std::size_t letter, Anchor a) const noexcept {
        return anchors_[letter] & static_cast<std::uint8_t>(a);
    }
    bool is_classical() const noexcept;

    /// "132", or one of the reserved names "3n12" / "u3412".
    std::string name() const;

    friend bool operator==(const PatternSpec&, const PatternSpec&) = default;

private:
    Permutation pattern_;
    std::vector<std::uint8_t> anchors_;
};

/// Parses "132", "3412", the reserved "3n12" and "u3412". Throws ParseError.
PatternSpec parse_pattern_spec(std::string_view text);

/// Strictly increasing 1-based host positions, one per pattern letter.
struct Occurrence {
    std::vector<std::size_t> indices;
    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Lexicographically least occurrence by index tuple, or nullopt.
std::optional<Occurrence> find_occurrence(std::span<const int> host, const PatternSpec& spec);
std::optional<Occurrence> find_occurrence(const Permutation& host, const PatternSpec& spec);

/// Checks an index tuple against the order and anchor constraints.
bool is_occurrence(std::span<const int> host, const PatternSpec& spec, const Occurrence& occ);

bool contains(std::span<const int> host, const PatternSpec& spec);
bool avoids(std::span<const int> host, std::span<const PatternSpec> specs);
bool avoids(const Permutation& host, std::span<const PatternSpec> specs);
bool avoids(const Permutation& host, const PatternSpec& spec);

}  // namespace shallowperm
