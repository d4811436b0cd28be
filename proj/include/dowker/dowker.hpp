#pragma once

#include "dowker/complex.hpp"
#include "dowker/homology.hpp"
#include "dowker/relation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dowker {

/// Which Dowker complex of a relation. Column computations are row
/// computations on the transpose.
enum class Side { Row, Column };

std::string to_string(Side side);
Side parse_side(const std::string& text);

/// R(A): maximal faces are the maximal column witness sets I_{j}.
SimplicialComplex row_complex(const Relation& a);
/// C(A) = R(A^T).
SimplicialComplex column_complex(const Relation& a);
SimplicialComplex dowker_complex(const Relation& a, Side side);

/// Number of witnesses of `sigma` (a subset of the side's index set).
/// Throws InputError if sigma is nonempty and has no witness.
std::size_t total_weight(const Relation& a, Side side, const Subset& sigma);
std::size_t total_weight(const Relation& a, Side side, const std::vector<std::string>& sigma);

/// How maximal faces of a weight sublevel complex are found.
enum class SublevelRoute {
	Auto,        ///< cheaper of the two below
	RowSubsets,  ///< depth-first search over faces, pruned by witness count
	ColSubsets,  ///< maximal I_tau over all k-element tau
};

/// Maximal faces of R^A_k = {sigma : #J_sigma >= k} (k >= 1), as subsets of
/// rows(A). Throws ResourceError beyond `budget` visited candidates.
std::vector<Subset> sublevel_maximal_faces(const Relation& a, std::size_t k,
                                           std::size_t budget = default_face_budget(),
                                           SublevelRoute route = SublevelRoute::Auto);

/// R^A_k (side Row) or C^A_l (side Column) as a complex.
SimplicialComplex sublevel_complex(const Relation& a, Side side, std::size_t level,
                                   std::size_t budget = default_face_budget());

/// Total-weight filtration of one Dowker complex. Faces are graded by
/// max_weight - weight + 1, so increasing sublevel sets are the weight
/// sublevel complexes for decreasing k.
struct WeightFiltration {
	Side side = Side::Row;
	FilteredComplex filtered;
	/// Largest vertex weight (0 for an empty complex).
	long max_weight = 0;
	/// weights[d][i] of faces.by_dim[d][i]
	std::vector<std::vector<long>> weights;

	long grade_of_level(long k) const { return max_weight - k + 1; }
	long level_of_grade(long g) const { return max_weight - g + 1; }
};

/// Faces up to `max_dim` with grades; asserts monotone grades (IntegrityError).
WeightFiltration weight_filtration(const Relation& a, Side side, int max_dim,
                                   std::size_t budget = default_face_budget());

/// Barcode in weight coordinates: a bar with birth b and death d represents
/// a class present in the sublevel complexes for d < k <= b; a missing death
/// means the class survives down to k = 1. Needs faces up to max_dim+1.
Barcode weight_barcode(const WeightFiltration& f, std::uint32_t p, int max_dim);

struct DualityReport {
	BettiVector row;
	BettiVector column;
	bool equal = false;
};

/// Betti numbers of R(A) and C(A), each computed directly.
DualityReport duality_check(const Relation& a, std::uint32_t p, int max_dim,
                            std::size_t budget = default_face_budget());

struct PsiReport {
	std::size_t k = 1;
	/// Betti of R(A_{k,1})
	BettiVector level;
	/// Betti of R^A_k
	BettiVector sublevel;
	bool equal = false;
	/// The union map chi -> U chi sends every face of R(A_{k,1}) to a face of
	/// R^A_k, and the witness identity holds on every maximal face.
	bool well_defined = false;
};

/// Compares R(A_{k,1}) (from the materialized level relation) with the
/// sublevel complex R^A_k, and checks the union map on maximal faces.
PsiReport psi_equivalence_check(const Relation& a, std::size_t k, std::uint32_t p, int max_dim,
                                std::size_t budget = default_face_budget());

}  // namespace dowker
