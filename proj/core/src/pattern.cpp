#include "shallowperm/pattern.hpp"

#include <array>

#include "shallowperm/error.hpp"

namespace shallowperm {

namespace {

constexpr auto bit(Anchor a) { return static_cast<std::uint8_t>(a); }

void validate(const Permutation& pattern, std::span<const std::uint8_t> anchors) {
    const std::size_t m = pattern.size();
    if (m == 0 || m > PatternSpec::kMaxLength) {
        throw InvalidPatternSpec("pattern length must be 1.." +
                                 std::to_string(PatternSpec::kMaxLength));
    }
    if (anchors.size() != m) throw InvalidPatternSpec("one anchor set per pattern letter required");
    std::array<int, 4> uses{};
    for (std::size_t i = 0; i < m; ++i) {
        for (int b = 0; b < 4; ++b) uses[b] += (anchors[i] >> b) & 1;
        if (anchors[i] & ~0x0F) throw InvalidPatternSpec("unknown anchor bit");
        if ((anchors[i] & bit(Anchor::PosFirst)) && i != 0)
            throw InvalidPatternSpec("PosFirst may only anchor the first letter");
        if ((anchors[i] & bit(Anchor::PosLast)) && i + 1 != m)
            throw InvalidPatternSpec("PosLast may only anchor the last letter");
        if ((anchors[i] & bit(Anchor::ValueMax)) && pattern.at(i + 1) != static_cast<int>(m))
            throw InvalidPatternSpec("ValueMax must anchor the pattern's largest letter");
        if ((anchors[i] & bit(Anchor::ValueMin)) && pattern.at(i + 1) != 1)
            throw InvalidPatternSpec("ValueMin must anchor the pattern's smallest letter");
    }
    for (int u : uses)
        if (u > 1) throw InvalidPatternSpec("each anchor kind may be used at most once");
}

}  // namespace

PatternSpec::PatternSpec(Permutation pattern)
    : PatternSpec(pattern, std::vector<std::uint8_t>(pattern.size(), 0)) {}

PatternSpec::PatternSpec(Permutation pattern, std::vector<std::uint8_t> anchors)
    : pattern_(std::move(pattern)), anchors_(std::move(anchors)) {
    validate(pattern_, anchors_);
}

PatternSpec PatternSpec::value_anchored_3412() {
    return PatternSpec(Permutation{3, 4, 1, 2}, {0, bit(Anchor::ValueMax), bit(Anchor::ValueMin), 0});
}

PatternSpec PatternSpec::position_anchored_3412() {
    return PatternSpec(Permutation{3, 4, 1, 2}, {bit(Anchor::PosFirst), 0, 0, bit(Anchor::PosLast)});
}

bool PatternSpec::is_classical() const noexcept {
    for (auto a : anchors_)
        if (a) return false;
    return true;
}

std::string PatternSpec::name() const {
    if (*this == value_anchored_3412()) return "3n12";
    if (*this == position_anchored_3412()) return "u3412";
    std::string s;
    for (int v : pattern_.word()) s += static_cast<char>('0' + v);
    if (!is_classical()) {
        // Generic spelling for anchored specs without a reserved name.
        s += '[';
        for (std::size_t i = 0; i < anchors_.size(); ++i) s += static_cast<char>('0' + anchors_[i]);
        s += ']';
    }
    return s;
}

PatternSpec parse_pattern_spec(std::string_view text) {
    if (text == "3n12") return PatternSpec::value_anchored_3412();
    if (text == "u3412") return PatternSpec::position_anchored_3412();
    if (text.empty() || text.size() > PatternSpec::kMaxLength) {
        throw ParseError("pattern must be 1.." + std::to_string(PatternSpec::kMaxLength) +
                         " digits or a reserved name (3n12, u3412): '" + std::string(text) + "'");
    }
    std::vector<int> word;
    for (char c : text) {
        if (c < '1' || c > '9') throw ParseError("malformed pattern '" + std::string(text) + "'");
        word.push_back(c - '0');
    }
    if (!is_permutation_word(word)) {
        throw ParseError("pattern '" + std::string(text) + "' is not a permutation");
    }
    return PatternSpec(Permutation::from_valid_word(std::move(word)));
}

namespace {

struct Matcher {
    std::span<const int> host;
    std::span<const int> pattern;
    std::span<const std::uint8_t> anchors;
    std::array<std::size_t, PatternSpec::kMaxLength> chosen{};

    bool letter_fits(std::size_t k, std::size_t idx) const {
        const std::size_t n = host.size();
        const auto a = anchors[k];
        const int v = host[idx];
        if ((a & bit(Anchor::PosFirst)) && idx != 0) return false;
        if ((a & bit(Anchor::PosLast)) && idx + 1 != n) return false;
        if ((a & bit(Anchor::ValueMax)) && v != static_cast<int>(n)) return false;
        if ((a & bit(Anchor::ValueMin)) && v != 1) return false;
        for (std::size_t l = 0; l < k; ++l) {
            if ((pattern[l] < pattern[k]) != (host[chosen[l]] < v)) return false;
        }
        return true;
    }

    bool search(std::size_t k, std::size_t from) {
        const std::size_t m = pattern.size();
        if (k == m) return true;
        const std::size_t last = host.size() - (m - k);  // leave room for the rest
        for (std::size_t idx = from; idx <= last; ++idx) {
            if (!letter_fits(k, idx)) continue;
            chosen[k] = idx;
            if (search(k + 1, idx + 1)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<Occurrence> find_occurrence(std::span<const int> host, const PatternSpec& spec) {
    const std::size_t m = spec.pattern().size();
    if (host.size() < m) return std::nullopt;
    Matcher matcher{host, spec.pattern().word(), spec.anchors()};
    if (!matcher.search(0, 0)) return std::nullopt;
    Occurrence occ;
    for (std::size_t k = 0; k < m; ++k) occ.indices.push_back(matcher.chosen[k] + 1);
    return occ;
}

std::optional<Occurrence> find_occurrence(const Permutation& host, const PatternSpec& spec) {
    return find_occurrence(host.word(), spec);
}

bool is_occurrence(std::span<const int> host, const PatternSpec& spec, const Occurrence& occ) {
    const std::size_t m = spec.pattern().size();
    if (occ.indices.size() != m) return false;
    for (std::size_t k = 0; k < m; ++k) {
        if (occ.indices[k] < 1 || occ.indices[k] > host.size()) return false;
        if (k && occ.indices[k] <= occ.indices[k - 1]) return false;
    }
    Matcher matcher{host, spec.pattern().word(), spec.anchors()};
    for (std::size_t k = 0; k < m; ++k) {
        if (!matcher.letter_fits(k, occ.indices[k] - 1)) return false;
        matcher.chosen[k] = occ.indices[k] - 1;
    }
    return true;
}

bool contains(std::span<const int> host, const PatternSpec& spec) {
    if (host.size() < spec.pattern().size()) return false;
    Matcher matcher{host, spec.pattern().word(), spec.anchors()};
    return matcher.search(0, 0);
}

bool avoids(std::span<const int> host, std::span<const PatternSpec> specs) {
    for (const auto& s : specs)
        if (contains(host, s)) return false;
    return true;
}

bool avoids(const Permutation& host, std::span<const PatternSpec> specs) {
    return avoids(host.word(), specs);
}

bool avoids(const Permutation& host, const PatternSpec& spec) {
    return !contains(host.word(), spec);
}

}  // namespace shallowperm
