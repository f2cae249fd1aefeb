#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "refsev/ring.hpp"

namespace refsev {

/// Integer partition in multiplicity form: counts()[i] is the number of
/// parts equal to i+1.  Trailing zero counts are trimmed, so equal
/// partitions compare equal.
class Partition {
public:
    Partition() = default;
    static Partition from_counts(std::vector<long> counts);
    /// Partition with `count` parts all equal to `part`.
    static Partition single(int part, long count = 1);
    /// Parse a comma-separated multiplicity list "a1,a2,..." where ai is
    /// the number of parts equal to i.  "" is the empty partition.
    static Partition parse(const std::string& text);

    long count(int part) const;
    int max_part() const { return static_cast<int>(counts_.size()); }
    long weight() const;  // sum of all parts
    long length() const;  // number of parts
    bool empty() const { return counts_.empty(); }
    const std::vector<long>& counts() const { return counts_; }

    Partition with_part(int part, long delta) const; // count may not go negative
    bool contains(const Partition& sub) const;

    /// Product of the factorials of the multiplicities.
    BigInt multiplicity_factorial() const;

    auto operator<=>(const Partition&) const = default;

    std::string str() const; // e.g. "(1^2,3)"

private:
    std::vector<long> counts_;
    void trim();
};

/// All partitions of n in a fixed deterministic order.
std::vector<Partition> partitions_of(long n);

/// Finite multiset of (possibly negative, possibly zero) integers.
class IntMultiset {
public:
    IntMultiset() = default;
    void insert(int value, long multiplicity = 1);

    long size() const;   // number of elements, counted with multiplicity
    long weight() const; // sum of elements
    long count(int value) const;
    bool empty() const { return entries_.empty(); }
    const std::map<int, long>& entries() const { return entries_; }

    /// All distinct sequences obtained by ordering the multiset.
    std::vector<std::vector<int>> orderings() const;
    /// Number of distinct orderings (multinomial coefficient).
    BigInt ordering_count() const;

    /// Parse "v^m" items separated by commas, m omitted meaning 1;
    /// e.g. "-1^2,2^1".  "" is the empty multiset.
    static IntMultiset parse(const std::string& text);
    std::string str() const;

    bool operator==(const IntMultiset&) const = default;

private:
    std::map<int, long> entries_; // value -> multiplicity > 0
};

/// A divergence sequence D = R - L (componentwise) together with the number
/// of ordering pairs (R, L) realizing it.
struct DivergenceProfile {
    std::vector<int> sequence;
    BigInt multiplicity;
};

/// Distinct componentwise differences of orderings of r and l, with
/// realization counts.  Requires |r| = |l|.
std::vector<DivergenceProfile> divergence_profiles(const IntMultiset& r,
                                                   const IntMultiset& l);

} // namespace refsev
