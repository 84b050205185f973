#pragma once

#include <stdexcept>
#include <string>

namespace shallowperm {

// Base of every exception thrown by the library. `kind()` is the stable
// machine-readable tag used by the CLI when reporting failures.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define SHALLOWPERM_DEFINE_ERROR(Name)                                        \
    class Name : public error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : error(#Name, what) {}        \
    }

// perm-core
SHALLOWPERM_DEFINE_ERROR(ParseError);
SHALLOWPERM_DEFINE_ERROR(NotAPermutation);
SHALLOWPERM_DEFINE_ERROR(DuplicateEntry);

// shallow-engine
SHALLOWPERM_DEFINE_ERROR(SizeTooSmall);
SHALLOWPERM_DEFINE_ERROR(IllegalSlot);

// pattern-engine
SHALLOWPERM_DEFINE_ERROR(InvalidPatternSpec);

// series-oracle
SHALLOWPERM_DEFINE_ERROR(ZeroConstantTerm);
SHALLOWPERM_DEFINE_ERROR(OrderExceeded);
SHALLOWPERM_DEFINE_ERROR(NonIntegerCount);
SHALLOWPERM_DEFINE_ERROR(NegativeDegreeResidue);
SHALLOWPERM_DEFINE_ERROR(OutOfDomain);

// enumeration
SHALLOWPERM_DEFINE_ERROR(SizeCapExceeded);
SHALLOWPERM_DEFINE_ERROR(OracleDomainError);

#undef SHALLOWPERM_DEFINE_ERROR

// Brute-force and constructive enumeration produced different counts. This
// always indicates a bug, so both numbers travel with the exception.
class MethodDisagreement : public error {
public:
    MethodDisagreement(std::size_t n, std::string brute, std::string constructive)
        : error("MethodDisagreement",
                "brute force and constructive counts differ at n=" + std::to_string(n) +
                    ": " + brute + " vs " + constructive),
          n_(n), brute_(std::move(brute)), constructive_(std::move(constructive)) {}

    std::size_t n() const noexcept { return n_; }
    const std::string& brute_force_count() const noexcept { return brute_; }
    const std::string& constructive_count() const noexcept { return constructive_; }

private:
    std::size_t n_;
    std::string brute_;
    std::string constructive_;
};

}  // namespace shallowperm
