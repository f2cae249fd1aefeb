#pragma once

#include <map>
#include <string>
#include <vector>

#include "refsev/ring.hpp"

namespace refsev {

/// Truncated formal power series in finitely many bookkeeping variables
/// with RationalLaurentY coefficients.  Exponent vectors are dense; every
/// variable has an inclusive truncation order beyond which products drop
/// terms.
class GenSeries {
public:
    GenSeries() = default;
    explicit GenSeries(std::vector<long> max_orders);

    std::size_t var_count() const { return max_orders_.size(); }
    const std::vector<long>& max_orders() const { return max_orders_; }

    void add(const std::vector<long>& exponents, const RationalLaurentY& c);
    RationalLaurentY coeff(const std::vector<long>& exponents) const;
    const std::map<std::vector<long>, RationalLaurentY>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    static GenSeries one(std::vector<long> max_orders);

    GenSeries& operator+=(const GenSeries& rhs);
    GenSeries operator+(const GenSeries& rhs) const;
    GenSeries operator-() const;
    GenSeries operator*(const GenSeries& rhs) const;
    GenSeries scaled(const RationalLaurentY& c) const;

    /// log(this) for a series with constant term 1, via the alternating
    /// series in (this - 1); exact under the truncation orders provided the
    /// non-constant part has positive order in at least one variable.
    GenSeries log() const;

private:
    std::vector<long> max_orders_;
    std::map<std::vector<long>, RationalLaurentY> terms_;
    bool within(const std::vector<long>& exponents) const;
};

} // namespace refsev
