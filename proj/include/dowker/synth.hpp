#pragma once

#include "dowker/relation.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dowker {

using Rational = boost::rational<long long>;

/// "p/q", an integer, or a finite decimal such as "0.25"; exact.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Fractional part in [0,1).
Rational frac(const Rational& x);

/// Half-open arc [start, start + length) on the circle R/Z.
struct Arc {
	Rational start;
	Rational length;

	bool contains(const Rational& x) const { return frac(x - start) < length; }
};

/// Arcs in generator order, labeled U0, U1, ... in relations.
struct ArcCover {
	std::vector<Arc> arcs;
	std::size_t size() const { return arcs.size(); }
};

/// Sorted, distinct angle fractions in [0,1).
struct SamplePoints {
	std::vector<Rational> points;
	std::size_t size() const { return points.size(); }
};

/// Arcs of the given length centered at i/n + phase. InputError unless
/// n >= 1 and 0 < length < 1.
ArcCover circle_cover(std::size_t n_arcs, const Rational& length, const Rational& phase);

/// i/n, shifted by a seeded offset in [0, 1/(2n)) per point when `seed` is set.
SamplePoints equispaced_points(std::size_t n, std::optional<std::uint64_t> seed = std::nullopt);

/// Intersection of arcs as disjoint half-open intervals of [0,1), merged
/// where they touch (including across 0).
std::vector<std::pair<Rational, Rational>> arc_intersection(const std::vector<Arc>& arcs);

/// Connected components of the intersection on the circle.
std::size_t intersection_components(const std::vector<Arc>& arcs);

/// Least multiplicity of the open arcs over the circle, evaluated at every
/// endpoint and every gap midpoint of the arrangement; 0 if some point is
/// uncovered.
std::size_t fold_number(const ArcCover& u);

/// Least m such that every intersection of at least m arcs is empty or a
/// single arc.
std::size_t goodness_threshold(const ArcCover& u);

/// A(i,x) = 1 iff point x lies in arc i. Rows U0.., columns x0...
Relation cover_point_relation(const ArcCover& u, const SamplePoints& pts);

/// A(i,j) = 1 iff arcs U_i and V_j overlap. Rows U0.., columns V0...
Relation cover_cover_relation(const ArcCover& u, const ArcCover& v);

struct RecParameters {
	/// largest #J_sigma with U_sigma empty (0 if U_sigma is never empty)
	std::size_t p = 0;
	/// smallest #J_sigma with U_sigma nonempty
	std::size_t q = 0;
};

/// Scans every nonempty sigma of U. ResourceError when 2^|U| exceeds
/// `max_subsets`.
RecParameters rec_parameters(const ArcCover& u, const ArcCover& v,
                             std::size_t max_subsets = std::size_t{1} << 20);

}  // namespace dowker
