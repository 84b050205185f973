#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "shallowperm/permutation.hpp"

namespace shallowperm {

/// D(p) = I(p) + T(p): the lower Diaconis-Graham bound is attained.
bool is_shallow(std::span<const int> word);
bool is_shallow(const Permutation& p);

/// D(p) = 2 I(p).
bool achieves_upper_bound(std::span<const int> word);
bool achieves_upper_bound(const Permutation& p);

/// Right reduction: drop a trailing n, or overwrite n with the last entry
/// and drop the last entry. Throws SizeTooSmall for n < 2.
Permutation r_operator(const Permutation& p);

/// Left reduction, the reverse-complement conjugate of r_operator.
Permutation l_operator(const Permutation& p);

enum class StepKind { AppendedMax, LeftToRightMax, RightToLeftMin, Violation };
std::string_view to_string(StepKind kind) noexcept;

struct ReductionStep {
    std::size_t position_of_max = 0;   // 1-based j with p_j = n (before the step)
    std::optional<int> moved_value;    // p_n relocated to position j; absent when j = n
    StepKind classification = StepKind::AppendedMax;

    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

/// Full right-reduction trace of `subject` down to size <= 1.
struct ShallowCertificate {
    Permutation subject;
    std::vector<ReductionStep> steps;  // in reduction order
    Permutation base;                  // what remains after the last step
    bool verdict = true;
};

/// Walks r_operator to size <= 1, classifying every relocation. A moved
/// value that is both a left-to-right maximum and a right-to-left minimum
/// is recorded as LeftToRightMax.
ShallowCertificate certify_shallow(const Permutation& p);

/// Rebuilds the subject from `base` by undoing each step. Violation steps
/// are undone without the slot check extend_right performs.
Permutation replay(const ShallowCertificate& cert);

/// Where extend_right places the new maximum.
struct ExtensionSlot {
    /// std::nullopt means Append; otherwise a 1-based position in the parent.
    std::optional<std::size_t> position;

    static ExtensionSlot append() noexcept { return {}; }
    static ExtensionSlot at(std::size_t i) noexcept { return {i}; }
    bool is_append() const noexcept { return !position.has_value(); }
};

/// Inverse of r_operator. For AtPosition(i) the parent entry t_i must be a
/// left-to-right maximum or a right-to-left minimum of t, otherwise
/// IllegalSlot is thrown naming both failed conditions.
Permutation extend_right(const Permutation& t, ExtensionSlot slot);

/// Every slot extend_right accepts for `t`: Append first, then legal
/// positions in increasing order.
std::vector<ExtensionSlot> legal_slots(const Permutation& t);

/// Visitor over one-line words. The span is only valid during the call.
using WordVisitor = std::function<void(std::span<const int>)>;

/// Streams every shallow permutation of size n exactly once by extending
/// shallow permutations of size n-1 through every legal slot. Memory is
/// O(n^2); no permutation outlives its visit.
void for_each_shallow(std::size_t n, const WordVisitor& visit);

/// Same stream split into independent parts by each word's size-6 ancestor
/// in the reduction tree. Part `k` of `parts` covers the ancestors whose
/// stream index mod `parts` equals k; the union over all parts is exactly
/// for_each_shallow(n).
void for_each_shallow_part(std::size_t n, std::size_t part, std::size_t parts,
                           const WordVisitor& visit);

std::vector<Permutation> generate_shallow(std::size_t n);

/// |T_n| without materializing permutations.
std::uint64_t count_shallow(std::size_t n);

/// n, p_1+1, ..., p_m+1, 1 with n = m + 2.
Permutation wrap_n1(const Permutation& p);

}  // namespace shallowperm
