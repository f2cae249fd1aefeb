#pragma once

#include <string>
#include <vector>

#include "refsev/fock.hpp"
#include "refsev/genseries.hpp"
#include "refsev/polygon.hpp"

namespace refsev {

struct ComputeOptions {
    int threads = 0;            // worker cap; 0 = hardware concurrency
    std::size_t max_states = 0; // 0 = FockOps::default_max_states()
    long wick_max_factors = 6;  // operator-word guard for the pairing oracle
};

/// Upper bound for the grading of every Fock state reachable in the
/// matrix-element recursion for this polygon: the bottom degree plus the
/// total positive left slope plus the total negative right slope.
long grading_cap_for(const HTransversePolygon& p);

/// <bra | sum over all interleavings of n_factors operator factors, where
/// exactly h = profile.size() of them are divergence blocks whose values
/// read profile[0..h-1] from the left and the rest are b-diagonal blocks
/// | ket>.  Factors act right to left.
RationalLaurentY profile_matrix_element(const BasisVector& bra,
                                        const BasisVector& ket,
                                        const std::vector<int>& profile,
                                        long n_factors, long grading_cap,
                                        std::size_t max_states = 0);

/// Refined count of cogenus-delta curves in the linear system of the
/// polygon, as a symmetric Laurent polynomial in y (half powers cancel).
LaurentY refined_severi(const HTransversePolygon& p, long delta,
                        const ComputeOptions& opts = {});

/// Refined relative count: curves with tangency profile (alpha, beta) along
/// the bottom boundary -- alpha_i fixed and beta_i moving contacts of order
/// i, with weight(alpha) + weight(beta) = d_bottom.
LaurentY refined_relative(const HTransversePolygon& p, long delta,
                          const Partition& alpha, const Partition& beta,
                          const ComputeOptions& opts = {});

/// Specialization at y = 1 (classical curve count).
BigInt severi_degree(const HTransversePolygon& p, long delta,
                     const ComputeOptions& opts = {});
/// Specialization at y = -1 (tropical real/Welschinger-type count).
BigInt welschinger_degree(const HTransversePolygon& p, long delta,
                          const ComputeOptions& opts = {});

/// For single-right-slope families (all right slopes equal to some m >= 1,
/// all left slopes zero) the divergence-count bookkeeping is redundant: the
/// grading forced by bra and ket already selects the right power.  Returns
/// true when the computation without bookkeeping matches refined_severi.
bool grading_shortcut_check(const HTransversePolygon& p, long delta,
                            const ComputeOptions& opts = {});

/// One row of an irreducible-count table: class (c, d) -- c used only by
/// two-parameter families -- and cogenus delta.
struct IrreducibleEntry {
    long c;
    long d;
    long delta;
    LaurentY value;
};

/// Irreducible refined counts, extracted as coefficients of the formal
/// logarithm of the generating series of the (possibly reducible) counts
/// over all classes componentwise below the grid bound.
std::vector<IrreducibleEntry> irreducible_degrees(const FamilySpec& fam,
                                                  long max_c, long max_d,
                                                  long max_delta,
                                                  const ComputeOptions& opts = {});

struct GenfunOrders {
    long q = 3; // operator-exponential order
    long t = 1; // divergence-count order (curve class)
    long s = 0; // top-boundary order (two-parameter families only)
};

struct GenfunReport {
    bool ok = true;
    long coefficients_checked = 0;
    std::string first_mismatch; // empty when ok
};

/// Expands the family's vacuum-expectation generating function by truncated
/// exponentials and compares every extracted coefficient against
/// refined_severi of the matching class and cogenus.
GenfunReport genfun_verify(const FamilySpec& fam, const GenfunOrders& orders,
                           const ComputeOptions& opts = {});

} // namespace refsev
