#include "refsev/genseries.hpp"

namespace refsev {

GenSeries::GenSeries(std::vector<long> max_orders)
    : max_orders_(std::move(max_orders)) {
    for (long m : max_orders_)
        if (m < 0) throw DomainError("negative truncation order");
}

bool GenSeries::within(const std::vector<long>& e) const {
    if (e.size() != max_orders_.size())
        throw DomainError("exponent vector arity mismatch");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > max_orders_[i]) return false;
    return true;
}

void GenSeries::add(const std::vector<long>& e, const RationalLaurentY& c) {
    if (c.is_zero() || !within(e)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RationalLaurentY GenSeries::coeff(const std::vector<long>& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RationalLaurentY() : it->second;
}

GenSeries GenSeries::one(std::vector<long> max_orders) {
    GenSeries s(std::move(max_orders));
    s.add(std::vector<long>(s.var_count(), 0), RationalLaurentY(1));
    return s;
}

GenSeries& GenSeries::operator+=(const GenSeries& rhs) {
    if (rhs.max_orders_ != max_orders_)
        throw DomainError("series truncation mismatch");
    for (const auto& [e, c] : rhs.terms_) add(e, c);
    return *this;
}

GenSeries GenSeries::operator+(const GenSeries& rhs) const {
    GenSeries r = *this;
    r += rhs;
    return r;
}

GenSeries GenSeries::operator-() const {
    GenSeries r(max_orders_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

GenSeries GenSeries::operator*(const GenSeries& rhs) const {
    if (rhs.max_orders_ != max_orders_)
        throw DomainError("series truncation mismatch");
    GenSeries r(max_orders_);
    std::vector<long> e(max_orders_.size());
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            bool ok = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = e1[i] + e2[i];
                if (e[i] > max_orders_[i]) {
                    ok = false;
                    break;
                }
            }
            if (ok) r.add(e, c1 * c2);
        }
    }
    return r;
}

GenSeries GenSeries::scaled(const RationalLaurentY& c) const {
    GenSeries r(max_orders_);
    if (c.is_zero()) return r;
    for (const auto& [e, coeff] : terms_) r.add(e, coeff * c);
    return r;
}

GenSeries GenSeries::log() const {
    const std::vector<long> zero(max_orders_.size(), 0);
    if (!(coeff(zero) == RationalLaurentY(1)))
        throw DomainError("log requires constant term 1");
    GenSeries g = *this;
    g.add(zero, RationalLaurentY(-1)); // g = this - 1

    // Total order grows with each power of g, so the loop terminates at the
    // sum of the truncation orders.
    long max_total = 0;
    for (long m : max_orders_) max_total += m;

    GenSeries result(max_orders_);
    GenSeries power = GenSeries::one(max_orders_);
    for (long k = 1; k <= max_total; ++k) {
        power = power * g;
        if (power.is_zero()) break;
        RationalLaurentY c(LaurentY(k % 2 == 1 ? 1 : -1), BigInt(k));
        result += power.scaled(c);
    }
    return result;
}

} // namespace refsev
