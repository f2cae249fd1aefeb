#include "refsev/combinatorics.hpp"

#include <algorithm>
#include <sstream>

namespace refsev {

void Partition::trim() {
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

Partition Partition::from_counts(std::vector<long> counts) {
    for (long c : counts)
        if (c < 0) throw DomainError("negative part multiplicity");
    Partition p;
    p.counts_ = std::move(counts);
    p.trim();
    return p;
}

Partition Partition::single(int part, long count) {
    if (part <= 0) throw DomainError("partition parts must be positive");
    if (count < 0) throw DomainError("negative part multiplicity");
    std::vector<long> c(static_cast<size_t>(part), 0);
    c[static_cast<size_t>(part) - 1] = count;
    return from_counts(std::move(c));
}

Partition Partition::parse(const std::string& text) {
    std::vector<long> counts;
    if (text.empty()) return {};
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception&) {
            throw DomainError("bad multiplicity list item: '" + item + "'");
        }
        if (pos != item.size() || v < 0)
            throw DomainError("bad multiplicity list item: '" + item + "'");
        counts.push_back(v);
    }
    return from_counts(std::move(counts));
}

long Partition::count(int part) const {
    if (part <= 0 || part > max_part()) return 0;
    return counts_[static_cast<size_t>(part) - 1];
}

long Partition::weight() const {
    long w = 0;
    for (int i = 1; i <= max_part(); ++i) w += i * counts_[static_cast<size_t>(i) - 1];
    return w;
}

long Partition::length() const {
    long n = 0;
    for (long c : counts_) n += c;
    return n;
}

Partition Partition::with_part(int part, long delta) const {
    if (part <= 0) throw DomainError("partition parts must be positive");
    std::vector<long> c = counts_;
    if (part > static_cast<int>(c.size())) c.resize(static_cast<size_t>(part), 0);
    c[static_cast<size_t>(part) - 1] += delta;
    if (c[static_cast<size_t>(part) - 1] < 0)
        throw DomainError("removing absent part from partition");
    return from_counts(std::move(c));
}

bool Partition::contains(const Partition& sub) const {
    for (int i = 1; i <= sub.max_part(); ++i)
        if (sub.count(i) > count(i)) return false;
    return true;
}

BigInt Partition::multiplicity_factorial() const {
    BigInt f = 1;
    for (long c : counts_) f *= factorial(c);
    return f;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int i = 1; i <= max_part(); ++i) {
        long c = count(i);
        if (c == 0) continue;
        if (!first) os << ",";
        first = false;
        os << i;
        if (c > 1) os << "^" << c;
    }
    os << ")";
    return os.str();
}

namespace {

void partitions_rec(long remaining, int max_allowed, std::vector<long>& counts,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::from_counts(counts));
        return;
    }
    for (int part = std::min<long>(max_allowed, remaining); part >= 1; --part) {
        counts[static_cast<size_t>(part) - 1] += 1;
        partitions_rec(remaining - part, part, counts, out);
        counts[static_cast<size_t>(part) - 1] -= 1;
    }
}

} // namespace

std::vector<Partition> partitions_of(long n) {
    if (n < 0) throw DomainError("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<long> counts(static_cast<size_t>(std::max<long>(n, 0)), 0);
    partitions_rec(n, static_cast<int>(n), counts, out);
    return out;
}

void IntMultiset::insert(int value, long multiplicity) {
    if (multiplicity < 0) throw DomainError("negative multiplicity");
    if (multiplicity == 0) return;
    entries_[value] += multiplicity;
}

long IntMultiset::size() const {
    long n = 0;
    for (const auto& [v, m] : entries_) n += m;
    return n;
}

long IntMultiset::weight() const {
    long w = 0;
    for (const auto& [v, m] : entries_) w += static_cast<long>(v) * m;
    return w;
}

long IntMultiset::count(int value) const {
    auto it = entries_.find(value);
    return it == entries_.end() ? 0 : it->second;
}

namespace {

void orderings_rec(std::map<int, long>& remaining, long left,
                   std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
    if (left == 0) {
        out.push_back(prefix);
        return;
    }
    for (auto& [value, mult] : remaining) {
        if (mult == 0) continue;
        mult -= 1;
        prefix.push_back(value);
        orderings_rec(remaining, left - 1, prefix, out);
        prefix.pop_back();
        mult += 1;
    }
}

} // namespace

std::vector<std::vector<int>> IntMultiset::orderings() const {
    std::vector<std::vector<int>> out;
    std::map<int, long> remaining = entries_;
    std::vector<int> prefix;
    orderings_rec(remaining, size(), prefix, out);
    return out;
}

BigInt IntMultiset::ordering_count() const {
    BigInt n = factorial(size());
    for (const auto& [v, m] : entries_) n /= factorial(m);
    return n;
}

IntMultiset IntMultiset::parse(const std::string& text) {
    IntMultiset ms;
    if (text.empty()) return ms;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        std::string vpart = item;
        long mult = 1;
        if (auto caret = item.find('^'); caret != std::string::npos) {
            vpart = item.substr(0, caret);
            std::string mpart = item.substr(caret + 1);
            size_t pos = 0;
            try {
                mult = std::stol(mpart, &pos);
            } catch (const std::exception&) {
                throw DomainError("bad multiset item: '" + item + "'");
            }
            if (pos != mpart.size() || mult <= 0)
                throw DomainError("bad multiset item: '" + item + "'");
        }
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(vpart, &pos);
        } catch (const std::exception&) {
            throw DomainError("bad multiset item: '" + item + "'");
        }
        if (pos != vpart.size())
            throw DomainError("bad multiset item: '" + item + "'");
        ms.insert(static_cast<int>(v), mult);
    }
    return ms;
}

std::string IntMultiset::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, m] : entries_) {
        if (!first) os << ",";
        first = false;
        os << v;
        if (m > 1) os << "^" << m;
    }
    return os.str();
}

std::vector<DivergenceProfile> divergence_profiles(const IntMultiset& r,
                                                   const IntMultiset& l) {
    if (r.size() != l.size())
        throw DomainError("height mismatch: |r|=" + std::to_string(r.size()) +
                          ", |l|=" + std::to_string(l.size()));
    std::map<std::vector<int>, BigInt> acc;
    const auto rs = r.orderings();
    const auto ls = l.orderings();
    for (const auto& R : rs) {
        for (const auto& L : ls) {
            std::vector<int> d(R.size());
            for (size_t j = 0; j < R.size(); ++j) d[j] = R[j] - L[j];
            acc[d] += 1;
        }
    }
    std::vector<DivergenceProfile> out;
    out.reserve(acc.size());
    for (auto& [seq, mult] : acc) out.push_back({seq, mult});
    return out;
}

} // namespace refsev
