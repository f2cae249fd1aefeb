#pragma once

#include <vector>

#include "refsev/polygon.hpp"
#include "refsev/severi.hpp"

namespace refsev {

/// Weighted edge between white vertices (floors), always pointing from the
/// lower to the higher index.
struct FloorEdge {
    int from;
    int to;
    long weight;
    auto operator<=>(const FloorEdge&) const = default;
};

/// Combinatorial floor diagram: one white vertex per floor, ordered top
/// slope sequences R and L, point multiplicities s, a weighted acyclic
/// graph on the white vertices subject to the divergence constraints, and a
/// number of weight-1 elevators running from the top boundary straight to
/// the bottom boundary without touching any floor.
struct FloorDiagram {
    std::vector<int> right_seq;   // chosen ordering R of the right slopes
    std::vector<int> left_seq;    // chosen ordering L of the left slopes
    std::vector<long> sources;    // s_j >= 0, total = d_top - through
    std::vector<FloorEdge> edges; // sorted multiset (parallel edges repeat)
    long through = 0;             // top-to-bottom elevators bypassing floors

    long height() const { return static_cast<long>(right_seq.size()); }
    /// R_j - L_j for white vertex j (1-based).
    long slope_step(int j) const;
    /// Outgoing minus incoming edge weight at white vertex j (1-based).
    long vertex_divergence(int j) const;
    /// Weight-1 sink count of the absolute marking at vertex j:
    /// slope_step(j) + sources[j-1] - vertex_divergence(j).
    long sink_count(int j) const;

    std::string str() const;
};

/// All floor diagrams of the polygon with the given cogenus, iterating the
/// ordering pairs (R, L) explicitly, in a deterministic canonical order.
/// Every unit of the top edge is either a source attached to a floor or a
/// through elevator; both variants are enumerated.  A polygon with no floors
/// (a pure fiber class) yields its single all-elevator diagram at cogenus 0.
std::vector<FloorDiagram> enumerate_floor_diagrams(const HTransversePolygon& p,
                                                   long delta);

/// Number of markings of the diagram: linear orders of the white chain plus
/// all black marking vertices, modulo exchanges of indistinguishable black
/// vertices.
BigInt count_markings(const FloorDiagram& d);
/// Same count by explicit enumeration of the distinct words (test oracle).
BigInt count_markings_bruteforce(const FloorDiagram& d);

/// Product over white-white edges of the squared quantum integer of the
/// weight.
LaurentY diagram_multiplicity(const FloorDiagram& d);

/// Cogenus-delta count assembled from marked floor diagrams.
LaurentY floor_severi(const HTransversePolygon& p, long delta);

/// Relative count from (alpha, beta)-marked diagrams: beta-vertices carry a
/// quantum integer of their contact order, alpha-vertices are pinned to the
/// tail of the marking order.
LaurentY floor_relative(const HTransversePolygon& p, long delta,
                        const Partition& alpha, const Partition& beta);

// ---------------------------------------------------------------------------
// Pairing (vacuum-expectation) oracle
// ---------------------------------------------------------------------------

/// One normalized operator factor of a vacuum-expectation word.
struct WickFactor {
    enum class Kind { Divergence, BDiagonal, BCreation };
    Kind kind = Kind::BDiagonal;
    Partition mu; // Divergence: a-creation exponents
    Partition nu; // Divergence: a-annihilation exponents
    int k = 0;    // BDiagonal / BCreation index (> 0)

    /// Normalized a_{-mu} a_nu.
    static WickFactor divergence(Partition mu, Partition nu);
    /// b_{-k} b_k.
    static WickFactor b_diagonal(int k);
    /// b_{-k}.
    static WickFactor b_creation(int k);
    /// Normalized a_{-beta} (pure creation).
    static WickFactor a_creation(Partition beta);
    /// Normalized a_nu (pure annihilation).
    static WickFactor a_annihilation(Partition nu);
};

/// Vacuum expectation of a product of factors (word order left to right),
/// evaluated by summing over complete pairings: an annihilator of kind a
/// and index n pairs with a later creator of kind b and index -n (and vice
/// versa), each pair contributing the quantum integer [n].
RationalLaurentY wick_vev(const std::vector<WickFactor>& word);

/// Absolute count recomputed by expanding the operator power into explicit
/// words and Wick-evaluating each.  Exponentially expensive; guarded by
/// opts.wick_max_factors on the interleaved factor count.
LaurentY wick_severi(const HTransversePolygon& p, long delta,
                     const ComputeOptions& opts = {});

/// Relative analogue of wick_severi.
LaurentY wick_relative(const HTransversePolygon& p, long delta,
                       const Partition& alpha, const Partition& beta,
                       const ComputeOptions& opts = {});

} // namespace refsev
