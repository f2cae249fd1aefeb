#pragma once

#include <string>
#include <vector>

#include "refsev/combinatorics.hpp"

namespace refsev {

/// Convex lattice polygon with horizontal top and bottom edges (possibly of
/// length zero) and all other edges of integer normal slope, described by
/// the top/bottom edge lengths and the multisets of right/left normal
/// slopes.  The row widths are reconstructed by sorting the right slopes in
/// descending and the left slopes in ascending order from the top row down,
/// which is the unique convex arrangement.
class HTransversePolygon {
public:
    HTransversePolygon(long d_top, long d_bottom, IntMultiset right,
                       IntMultiset left);

    long d_top() const { return d_top_; }
    long d_bottom() const { return d_bottom_; }
    const IntMultiset& right() const { return right_; }
    const IntMultiset& left() const { return left_; }

    long height() const { return static_cast<long>(widths_.size()) - 1; }
    /// Lattice width of each horizontal row, top to bottom (height()+1 rows).
    const std::vector<long>& row_widths() const { return widths_; }
    /// Number of lattice points.
    long lattice_point_count() const;
    /// Dimension of the associated linear system (lattice points - 1).
    long dim_linear_system() const { return lattice_point_count() - 1; }
    long interior_point_count() const;

    std::string str() const;

private:
    long d_top_;
    long d_bottom_;
    IntMultiset right_;
    IntMultiset left_;
    std::vector<long> widths_;
};

namespace presets {

/// Triangle of the degree-d plane curves.
HTransversePolygon p2(long d);
/// Hirzebruch surface, class c*(fiber) + d*(section at infinity), m >= 1.
HTransversePolygon sigma(long m, long c, long d);
/// Weighted projective plane P(1,1,m), degree-d class, m >= 1.
HTransversePolygon wps11m(long m, long d);
/// Weighted projective plane P(1,m-1,m), d times the hyperplane class,
/// m >= 2.
HTransversePolygon wps1mm(long m, long d);

} // namespace presets

/// Identifies one of the preset families, for table/series subcommands.
struct FamilySpec {
    enum class Kind { P2, Sigma, WPS11M, WPS1MM };
    Kind kind = Kind::P2;
    long m = 1; // slope parameter for sigma/wps11m/wps1mm

    bool two_parameter() const { return kind == Kind::Sigma; }
    /// Polygon for class (c, d); c is ignored unless two_parameter().
    HTransversePolygon polygon(long c, long d) const;
    std::string str() const;
};

/// "p2" | "sigma:m=M" | "wps11m:m=M" | "wps1mm:m=M"
FamilySpec parse_family(const std::string& text);

/// Polygon grammar: a preset call "p2:d=3", "sigma:m=1,c=0,d=3",
/// "wps11m:m=2,d=2", "wps1mm:m=3,d=1", or raw data
/// "dt=0;db=3;r=1^3;l=0^3" with r and l as multiset lists.
HTransversePolygon parse_polygon(const std::string& text);

} // namespace refsev
