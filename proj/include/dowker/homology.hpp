#pragma once

#include "dowker/complex.hpp"
#include "dowker/relation.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dowker {

/// Unreduced Betti numbers beta_0..beta_d over F_p.
struct BettiVector {
	std::uint32_t p = 2;
	std::vector<std::size_t> values;

	std::size_t operator[](std::size_t d) const { return values[d]; }
	std::size_t size() const { return values.size(); }
	bool operator==(const BettiVector& other) const = default;
	std::string str() const;
};

/// Throws InputError unless p is a prime below 2^31.
void require_prime(std::uint32_t p);

/// Betti numbers from faces enumerated up to at least max_dim+1 (lower if
/// the complex has no faces that high).
BettiVector betti(const GradedFaces& faces, std::uint32_t p, int max_dim);

/// Betti numbers of a complex; materializes faces up to max_dim+1.
BettiVector betti(const SimplicialComplex& x, std::uint32_t p, int max_dim,
                  std::size_t budget = default_face_budget());

/// Betti numbers of R(A), computed on whichever Dowker side has fewer
/// vertices (rows when |I| <= |J|). `force_row` always uses R(A) itself.
BettiVector betti_via_smaller_side(const Relation& a, std::uint32_t p, int max_dim,
                                   bool force_row = false,
                                   std::size_t budget = default_face_budget());

// ---- Persistence ---------------------------------------------------------------

/// Faces with an integer grade each; sublevel sets in increasing grade form
/// the filtration.
struct FilteredComplex {
	IndexSet vertices;
	GradedFaces faces;
	/// grades[d][i] belongs to faces.by_dim[d][i]
	std::vector<std::vector<long>> grades;

	/// Faces with grade <= g, as a graded face list over the same vertices.
	GradedFaces sublevel(long g) const;
};

struct Bar {
	int dim = 0;
	long birth = 0;
	/// nullopt means the class never dies
	std::optional<long> death;

	bool contains(long g) const { return birth <= g && (!death || g < *death); }
	bool operator==(const Bar&) const = default;
};

using Barcode = std::vector<Bar>;

/// Standard column reduction in filtration order (grade, dimension, face
/// order). Reports bars of dimension <= max_dim with birth < death; faces up
/// to max_dim+1 must be present. Throws InputError if some face has a lower
/// grade than one of its facets.
Barcode persistent_barcode(const FilteredComplex& f, std::uint32_t p, int max_dim);

/// `dim,birth,death` with `inf` for classes that never die.
void write_barcode_csv(std::ostream& out, const Barcode& bars);
/// `dim,betti`
void write_betti_csv(std::ostream& out, const BettiVector& b);

// ---- Explicit cell complexes ------------------------------------------------------

/// Chain complex presented by cells and signed facet incidences.
struct DiagonalCellComplex {
	struct Cell {
		/// (index into the cells of dimension d-1, incidence coefficient)
		std::vector<std::pair<Index, int>> boundary;
	};
	std::vector<std::vector<Cell>> cells;

	std::size_t count(int d) const {
		return d >= 0 && d < static_cast<int>(cells.size()) ? cells[d].size() : 0;
	}
	/// Throws IntegrityError if the boundary of a boundary is nonzero mod p.
	void validate(std::uint32_t p) const;
};

/// Homology of the presented chain complex; validates it first.
BettiVector betti_of_cells(const DiagonalCellComplex& d, std::uint32_t p, int max_dim);

}  // namespace dowker
