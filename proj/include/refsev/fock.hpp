#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "refsev/combinatorics.hpp"
#include "refsev/ring.hpp"

namespace refsev {

/// Basis vector v_{mu,nu} of the bosonic Fock space: the normalized product
/// of a-type creation operators indexed by mu and b-type creation operators
/// indexed by nu applied to the vacuum.
struct BasisVector {
    Partition a_part;
    Partition b_part;

    long grading() const { return a_part.weight() + b_part.weight(); }
    auto operator<=>(const BasisVector&) const = default;
    std::string str() const;
};

/// Finite linear combination of basis vectors with coefficients that are
/// Laurent polynomials in y^(1/2) over the rationals.
class FockState {
public:
    FockState() = default;
    static FockState vacuum();
    static FockState basis(BasisVector v);

    void add(const BasisVector& v, const RationalLaurentY& coeff);
    const std::map<BasisVector, RationalLaurentY>& terms() const {
        return terms_;
    }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    RationalLaurentY coeff(const BasisVector& v) const;

    FockState& operator+=(const FockState& rhs);
    FockState operator+(const FockState& rhs) const;
    FockState scaled(const RationalLaurentY& c) const;
    bool operator==(const FockState&) const = default;

    /// One line per term: "coeff * v_{mu,nu}".
    std::string dump() const;

private:
    std::map<BasisVector, RationalLaurentY> terms_;
};

/// Single deformed-Heisenberg generator: kind A or B, index n != 0; negative
/// index means creation, positive annihilation.  The defining relations are
/// [a_n, a_m] = [b_n, b_m] = 0 and [a_n, b_m] = [n] delta_{n,-m}.
struct GeneratorSymbol {
    enum class Kind { A, B };
    Kind kind;
    int index;

    static GeneratorSymbol a(int n) { return {Kind::A, n}; }
    static GeneratorSymbol b(int n) { return {Kind::B, n}; }
    std::string str() const;
};

/// Apply one generator, using the normal-ordered closed-form action on the
/// normalized basis.
FockState apply_generator(const FockState& s, GeneratorSymbol g);

/// Bilinear pairing fixed by <vacuum|vacuum> = 1 and the adjoint relation
/// <a_n x | y> = <x | a_{-n} y> (same for b).  On basis vectors it is
/// supported on cross-matching pairs: <v_{mu,nu} | v_{nu,mu}> =
/// prod_i [i]^(mu_i + nu_i) / (mu_i! nu_i!).
RationalLaurentY inner_product(const FockState& s1, const FockState& s2);

/// Energy-type block: the sum over k > 0 of b_{-k} b_k.  Preserves grading.
FockState apply_b_diagonal(const FockState& s);

/// Divergence block of value i: the sum of normalized a_{-mu} a_nu over all
/// partition pairs with weight(nu) - weight(mu) = i.  Lowers grading by
/// exactly i; terms whose grading would exceed grading_cap are dropped
/// (they cannot occur below the cap and the cap certifies finiteness).
FockState apply_divergence(const FockState& s, int divergence,
                           long grading_cap);

/// Per-basis-vector actions (building blocks of the above).
FockState b_diagonal_on_basis(const BasisVector& v);
FockState divergence_on_basis(const BasisVector& v, int divergence,
                              long grading_cap);

/// Cached wrapper used by the matrix-element engine.  Caches are per
/// instance, so each worker thread owns its own.
class FockOps {
public:
    explicit FockOps(long grading_cap, std::size_t max_states = 0);

    long grading_cap() const { return grading_cap_; }
    FockState apply_b_diagonal(const FockState& s);
    FockState apply_divergence(const FockState& s, int divergence);

    /// Default state-count guard; reads REFSEV_GUARD_MAX_STATES when set.
    static std::size_t default_max_states();

private:
    long grading_cap_;
    std::size_t max_states_;
    std::map<BasisVector, FockState> b_cache_;
    std::map<std::pair<BasisVector, int>, FockState> div_cache_;
    void check_guard(const FockState& s) const;
};

} // namespace refsev
