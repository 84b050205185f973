#include "shallowperm/shallow.hpp"

#include <algorithm>
#include <string>

#include "shallowperm/error.hpp"

namespace shallowperm {

bool is_shallow(std::span<const int> word) {
    const std::uint64_t cyc = cycles(word);
    return inversions(word) + (word.size() - cyc) == displacement(word);
}

bool is_shallow(const Permutation& p) { return is_shallow(p.word()); }

bool achieves_upper_bound(std::span<const int> word) {
    return displacement(word) == 2 * inversions(word);
}

bool achieves_upper_bound(const Permutation& p) { return achieves_upper_bound(p.word()); }

Permutation r_operator(const Permutation& p) {
    const std::size_t n = p.size();
    if (n < 2) throw SizeTooSmall("r_operator needs n >= 2, got n=" + std::to_string(n));
    std::vector<int> w(p.word().begin(), p.word().end());
    const std::size_t j = p.position_of(static_cast<int>(n));
    if (j != n) w[j - 1] = w[n - 1];
    w.pop_back();
    return Permutation::from_valid_word(std::move(w));
}

Permutation l_operator(const Permutation& p) {
    const std::size_t n = p.size();
    if (n < 2) throw SizeTooSmall("l_operator needs n >= 2, got n=" + std::to_string(n));
    std::vector<int> w(p.word().begin(), p.word().end());
    const std::size_t j = p.position_of(1);
    if (j != 1) w[j - 1] = w[0];
    w.erase(w.begin());
    for (int& v : w) --v;
    return Permutation::from_valid_word(std::move(w));
}

std::string_view to_string(StepKind kind) noexcept {
    switch (kind) {
        case StepKind::AppendedMax: return "appended-max";
        case StepKind::LeftToRightMax: return "left-to-right-max";
        case StepKind::RightToLeftMin: return "right-to-left-min";
        case StepKind::Violation: return "violation";
    }
    return "?";
}

ShallowCertificate certify_shallow(const Permutation& p) {
    ShallowCertificate cert;
    cert.subject = p;
    std::vector<int> w(p.word().begin(), p.word().end());
    while (w.size() >= 2) {
        const std::size_t n = w.size();
        const auto it = std::find(w.begin(), w.end(), static_cast<int>(n));
        const std::size_t j = static_cast<std::size_t>(it - w.begin());
        ReductionStep step;
        step.position_of_max = j + 1;
        if (j == n - 1) {
            step.classification = StepKind::AppendedMax;
            w.pop_back();
        } else {
            step.moved_value = w.back();
            w[j] = w.back();
            w.pop_back();
            if (is_lr_maximum(w, j)) step.classification = StepKind::LeftToRightMax;
            else if (is_rl_minimum(w, j)) step.classification = StepKind::RightToLeftMin;
            else {
                step.classification = StepKind::Violation;
                cert.verdict = false;
            }
        }
        cert.steps.push_back(step);
    }
    cert.base = Permutation::from_valid_word(std::move(w));
    return cert;
}

namespace {

Permutation insert_max(const Permutation& t, ExtensionSlot slot) {
    std::vector<int> w(t.word().begin(), t.word().end());
    const int top = static_cast<int>(t.size()) + 1;
    if (slot.is_append()) {
        w.push_back(top);
    } else {
        const std::size_t i = *slot.position;
        w.push_back(w[i - 1]);
        w[i - 1] = top;
    }
    return Permutation::from_valid_word(std::move(w));
}

}  // namespace

Permutation replay(const ShallowCertificate& cert) {
    Permutation current = cert.base;
    for (auto it = cert.steps.rbegin(); it != cert.steps.rend(); ++it) {
        const ExtensionSlot slot = it->moved_value ? ExtensionSlot::at(it->position_of_max)
                                                   : ExtensionSlot::append();
        current = it->classification == StepKind::Violation ? insert_max(current, slot)
                                                            : extend_right(current, slot);
    }
    return current;
}

Permutation extend_right(const Permutation& t, ExtensionSlot slot) {
    if (!slot.is_append()) {
        const std::size_t i = *slot.position;
        if (i < 1 || i > t.size()) {
            throw IllegalSlot("slot position " + std::to_string(i) + " outside 1.." +
                              std::to_string(t.size()));
        }
        if (!is_lr_maximum(t.word(), i - 1) && !is_rl_minimum(t.word(), i - 1)) {
            throw IllegalSlot("entry " + std::to_string(t.at(i)) + " at position " +
                              std::to_string(i) +
                              " is not a left-to-right maximum (a larger entry precedes it) "
                              "and not a right-to-left minimum (a smaller entry follows it)");
        }
    }
    return insert_max(t, slot);
}

std::vector<ExtensionSlot> legal_slots(const Permutation& t) {
    std::vector<ExtensionSlot> slots{ExtensionSlot::append()};
    for (std::size_t i = 1; i <= t.size(); ++i) {
        if (is_lr_maximum(t.word(), i - 1) || is_rl_minimum(t.word(), i - 1))
            slots.push_back(ExtensionSlot::at(i));
    }
    return slots;
}

namespace {

// Depth-first growth of shallow words in a single buffer. Each level marks
// its legal positions before recursing because children temporarily
// overwrite the parent's entries.
class ShallowGrower {
public:
    ShallowGrower(std::size_t target, const WordVisitor& visit) : target_(target), visit_(visit) {
        word_.reserve(target);
        legal_.resize(target + 1);
    }

    void grow_from(std::span<const int> seed) {
        word_.assign(seed.begin(), seed.end());
        recurse();
    }

private:
    void recurse() {
        const std::size_t m = word_.size();
        if (m == target_) {
            visit_(word_);
            return;
        }
        auto& legal = legal_[m];
        legal.assign(m, 0);
        int prefix_max = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (word_[i] > prefix_max) {
                prefix_max = word_[i];
                legal[i] = 1;
            }
        }
        int suffix_min = static_cast<int>(m) + 1;
        for (std::size_t i = m; i-- > 0;) {
            if (word_[i] < suffix_min) {
                suffix_min = word_[i];
                legal[i] = 1;
            }
        }
        const int top = static_cast<int>(m) + 1;
        word_.push_back(top);
        recurse();
        word_.pop_back();
        for (std::size_t i = 0; i < m; ++i) {
            if (!legal_[m][i]) continue;
            const int old = word_[i];
            word_[i] = top;
            word_.push_back(old);
            recurse();
            word_.pop_back();
            word_[i] = old;
        }
    }

    std::size_t target_;
    const WordVisitor& visit_;
    std::vector<int> word_;
    std::vector<std::vector<unsigned char>> legal_;
};

constexpr std::size_t kSplitSize = 6;

}  // namespace

void for_each_shallow(std::size_t n, const WordVisitor& visit) {
    if (n == 0) {
        visit(std::span<const int>{});
        return;
    }
    ShallowGrower grower(n, visit);
    const int one[] = {1};
    grower.grow_from(one);
}

void for_each_shallow_part(std::size_t n, std::size_t part, std::size_t parts,
                           const WordVisitor& visit) {
    if (parts == 0 || part >= parts) throw std::invalid_argument("bad partition index");
    if (n <= kSplitSize) {
        if (part == 0) for_each_shallow(n, visit);
        return;
    }
    std::size_t index = 0;
    ShallowGrower grower(n, visit);
    for_each_shallow(kSplitSize, [&](std::span<const int> ancestor) {
        if (index++ % parts != part) return;
        std::vector<int> seed(ancestor.begin(), ancestor.end());
        grower.grow_from(seed);
    });
}

std::vector<Permutation> generate_shallow(std::size_t n) {
    std::vector<Permutation> out;
    for_each_shallow(n, [&](std::span<const int> w) {
        out.push_back(Permutation::from_valid_word(std::vector<int>(w.begin(), w.end())));
    });
    return out;
}

std::uint64_t count_shallow(std::size_t n) {
    std::uint64_t c = 0;
    for_each_shallow(n, [&](std::span<const int>) { ++c; });
    return c;
}

Permutation wrap_n1(const Permutation& p) {
    const int n = static_cast<int>(p.size()) + 2;
    std::vector<int> w;
    w.reserve(p.size() + 2);
    w.push_back(n);
    for (int v : p.word()) w.push_back(v + 1);
    w.push_back(1);
    return Permutation::from_valid_word(std::move(w));
}

}  // namespace shallowperm
