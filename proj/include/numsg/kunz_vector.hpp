#ifndef NUMSG_KUNZ_VECTOR_HPP
#define NUMSG_KUNZ_VECTOR_HPP

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace numsg {

/// Apéry profile of a semigroup with multiplicity m >= 2: entry k[i-1] is
/// the coefficient with k_i * m + i the least member congruent to i mod m.
struct KunzVector {
    int m = 2;
    std::vector<int> k;

    int at(int i) const { return k[static_cast<std::size_t>(i - 1)]; }
    int genus() const { return std::accumulate(k.begin(), k.end(), 0); }

    friend bool operator==(const KunzVector&, const KunzVector&) = default;
};

/// One failed inequality of the Kunz system.
///   kMultiplicity: m < 2 or the vector does not have m-1 entries (i = j = 0).
///   kPositive:     k_i < 1 (reported as (i, i)).
///   kAdditive:     k_i + k_j < k_{i+j} with i <= j, i+j <= m-1.
///   kWrapped:      k_i + k_j + 1 < k_{i+j-m} with i <= j, i+j > m.
struct KunzViolation {
    enum class Kind { kMultiplicity, kPositive, kAdditive, kWrapped };
    Kind kind;
    int i;
    int j;
    int target = 0;  // index of the bounded coordinate (i+j or i+j-m)

    std::string describe() const {
        const auto is = std::to_string(i);
        const auto js = std::to_string(j);
        switch (kind) {
            case Kind::kMultiplicity: return "multiplicity must be >= 2 with m-1 coordinates";
            case Kind::kPositive: return "x" + is + " >= 1";
            case Kind::kAdditive: return "x" + std::to_string(target) + " <= x" + is + "+x" + js;
            case Kind::kWrapped: return "x" + std::to_string(target) + " <= x" + is + "+x" + js + "+1";
        }
        return {};
    }

    friend bool operator==(const KunzViolation&, const KunzViolation&) = default;
};

/// Every violated inequality; empty means the vector is the Kunz vector of
/// exactly one numerical semigroup of multiplicity m and genus sum(k).
inline std::vector<KunzViolation> validate(const KunzVector& v) {
    using Kind = KunzViolation::Kind;
    std::vector<KunzViolation> out;
    const int m = v.m;
    if (m < 2 || static_cast<int>(v.k.size()) != m - 1) {
        out.push_back({Kind::kMultiplicity, 0, 0, 0});
        return out;
    }
    for (int i = 1; i < m; ++i)
        if (v.at(i) < 1) out.push_back({Kind::kPositive, i, i, i});
    for (int i = 1; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            const int s = i + j;
            if (s <= m - 1) {
                if (v.at(i) + v.at(j) < v.at(s)) out.push_back({Kind::kAdditive, i, j, s});
            } else if (s > m) {
                if (v.at(i) + v.at(j) + 1 < v.at(s - m)) out.push_back({Kind::kWrapped, i, j, s - m});
            }
        }
    }
    return out;
}

class InvalidKunzVector : public std::invalid_argument {
public:
    explicit InvalidKunzVector(std::vector<KunzViolation> violations)
        : std::invalid_argument(message(violations))
        , violations_(std::move(violations)) {}
    const std::vector<KunzViolation>& violations() const noexcept { return violations_; }

private:
    static std::string message(const std::vector<KunzViolation>& vs) {
        std::string s = "invalid Kunz vector:";
        for (const auto& v : vs) s += " (" + std::to_string(v.i) + "," + std::to_string(v.j) + ") " + v.describe() + ";";
        return s;
    }
    std::vector<KunzViolation> violations_;
};

}  // namespace numsg

#endif  // NUMSG_KUNZ_VECTOR_HPP
