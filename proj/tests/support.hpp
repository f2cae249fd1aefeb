#pragma once

#include <random>

#include "refsev/combinatorics.hpp"
#include "refsev/fock.hpp"

namespace testsup {

inline long rand_long(std::mt19937_64& g, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline refsev::Partition random_partition(std::mt19937_64& g,
                                          long max_weight) {
    refsev::Partition p;
    long budget = rand_long(g, 0, max_weight);
    while (budget > 0) {
        const int part = static_cast<int>(rand_long(g, 1, budget));
        p = p.with_part(part, 1);
        budget -= part;
    }
    return p;
}

inline refsev::BasisVector random_basis(std::mt19937_64& g,
                                        long max_grading) {
    const long wa = rand_long(g, 0, max_grading);
    refsev::BasisVector v;
    v.a_part = random_partition(g, wa);
    v.b_part = random_partition(g, max_grading - v.a_part.weight());
    return v;
}

inline refsev::FockState random_state(std::mt19937_64& g, long max_grading,
                                      int n_terms) {
    refsev::FockState s;
    for (int t = 0; t < n_terms; ++t) {
        refsev::LaurentY c = refsev::LaurentY::term(
            static_cast<int>(rand_long(g, -2, 2)), rand_long(g, -5, 5));
        s.add(random_basis(g, max_grading), refsev::RationalLaurentY(c));
    }
    return s;
}

/// All basis vectors of grading at most max_grading.
inline std::vector<refsev::BasisVector> basis_up_to(long max_grading) {
    std::vector<refsev::BasisVector> out;
    for (long wa = 0; wa <= max_grading; ++wa)
        for (long wb = 0; wa + wb <= max_grading; ++wb)
            for (const auto& a : refsev::partitions_of(wa))
                for (const auto& b : refsev::partitions_of(wb))
                    out.push_back({a, b});
    return out;
}

} // namespace testsup
