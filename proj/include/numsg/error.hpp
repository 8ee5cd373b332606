#ifndef NUMSG_ERROR_HPP
#define NUMSG_ERROR_HPP

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace numsg {

/// Generators whose gcd is not 1 generate a monoid with infinite complement.
class InfiniteComplement : public std::invalid_argument {
public:
    explicit InfiniteComplement(long gcd)
        : std::invalid_argument("infinite complement: generators have gcd " + std::to_string(gcd))
        , gcd_(gcd) {}
    long gcd() const noexcept { return gcd_; }

private:
    long gcd_;
};

/// The complement of a proposed gap set is not additively closed.
/// `a` and `b` are members whose sum is a gap.
class InvalidGapSet : public std::invalid_argument {
public:
    InvalidGapSet(int a, int b)
        : std::invalid_argument("invalid gap set: " + std::to_string(a) + "+" + std::to_string(b) + "=" +
                                std::to_string(a + b) + " but " + std::to_string(a + b) + " is a gap")
        , a_(a)
        , b_(b) {}
    explicit InvalidGapSet(const std::string& what)
        : std::invalid_argument("invalid gap set: " + what) {}

    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }
    std::string witness() const { return std::to_string(a_) + "+" + std::to_string(b_) + "=" + std::to_string(a_ + b_); }

private:
    int a_ = 0;
    int b_ = 0;
};

/// A request that would exceed the configured enumeration budget.
class ResourceLimit : public std::runtime_error {
public:
    ResourceLimit(int genus, int cap, double estimate)
        : std::runtime_error("genus " + std::to_string(genus) + " exceeds the configured cap " +
                             std::to_string(cap) + " (about " + format_estimate(estimate) + " semigroups)")
        , estimate_(estimate) {}
    double estimate() const noexcept { return estimate_; }

private:
    static std::string format_estimate(double e) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", e);
        return buf;
    }
    double estimate_;
};

/// Output or checkpoint file could not be opened or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Checkpoint written under a different configuration.
class CheckpointMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace numsg

#endif  // NUMSG_ERROR_HPP
