#pragma once

#include "dowker/complex.hpp"
#include "dowker/homology.hpp"
#include "dowker/relation.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dowker {

/// A_{k,l} on I_l x J_k: (sigma, tau) related iff tau is a subset of J_sigma.
/// Row and column labels are canonical subset encodings over the base sets.
struct LevelRelation {
	Relation base;
	std::size_t k = 1;
	std::size_t l = 1;
	Relation derived;
	/// row_sets[r] is the subset of rows(base) behind derived row r
	std::vector<Subset> row_sets;
	/// col_sets[c] is the subset of cols(base) behind derived column c
	std::vector<Subset> col_sets;
};

/// Full materialization: every sigma with #sigma >= l, every tau with
/// #tau >= k, ordered by subset_less. ResourceError if 2^|I| or 2^|J|
/// exceeds the budget.
LevelRelation level_relation(const Relation& a, std::size_t k, std::size_t l,
                             std::size_t budget = default_face_budget());

/// Restriction of A_{k,l} with the same row complex: rows are the vertices
/// of R(A_{k,l}) and there is one column tau = J_S per maximal face S of
/// R^A_k with #S >= l. Size is governed by the sublevel complex, not 2^|J|.
LevelRelation reduced_level_relation(const Relation& a, std::size_t k, std::size_t l,
                                     std::size_t budget = default_face_budget());

/// R(A_{k,l}) from the reduced level relation.
SimplicialComplex level_complex(const Relation& a, std::size_t k, std::size_t l,
                                std::size_t budget = default_face_budget());

/// Betti numbers of R(A_{k,l}) via betti_via_smaller_side.
BettiVector level_betti(const Relation& a, std::size_t k, std::size_t l, std::uint32_t p,
                        int max_dim, std::size_t budget = default_face_budget());

/// Structural inclusion R(A_{k,l}) in R(A_{k2,l2}), decided on maximal
/// sublevel faces: every maximal S of R^A_k with #S >= l lies in a maximal
/// S' of R^A_{k2} with #S' >= l2.
bool levels_nested(const std::vector<Subset>& faces_k, std::size_t l,
                   const std::vector<Subset>& faces_k2, std::size_t l2);

struct BigradedCell {
	std::size_t k = 1;
	std::size_t l = 1;
	/// nullopt when the cell was skipped
	std::optional<BettiVector> betti;
	std::string skipped_reason;
};

struct BigradedBettiTable {
	std::uint32_t p = 2;
	std::size_t k_max = 0;
	std::size_t l_max = 0;
	int max_dim = 0;
	/// row-major in (k, l), both starting at 1
	std::vector<BigradedCell> cells;

	const BigradedCell& cell(std::size_t k, std::size_t l) const {
		return cells[(k - 1) * l_max + (l - 1)];
	}
	std::optional<std::size_t> value(int dim, std::size_t k, std::size_t l) const;
};

/// beta_i(k,l) for 1 <= k <= k_max, 1 <= l <= l_max. Cells that exceed the
/// budget are kept as skipped entries. Inclusions along both axes are
/// asserted (IntegrityError). `threads` = 0 picks the hardware count.
BigradedBettiTable bigraded_betti(const Relation& a, std::size_t k_max, std::size_t l_max,
                                  std::uint32_t p, int max_dim,
                                  std::size_t budget = default_face_budget(),
                                  unsigned threads = 0);

/// `dim,k,l,betti`, skipped cells as `dim,k,l,SKIPPED(budget)`.
void write_bigraded_csv(std::ostream& out, const BigradedBettiTable& t);

struct RecoveryRow {
	/// 'k': R(A_{k,1}) against R^A_k; 'l': R(A_{1,l}) against C^A_l
	char axis = 'k';
	std::size_t level = 1;
	BettiVector bifiltration;
	BettiVector filtration;
	bool equal = false;
};

struct RecoveryReport {
	std::vector<RecoveryRow> rows;
	bool ok = true;
};

/// Both boundary recoveries for k in 1..|J| and l in 1..|I|.
RecoveryReport boundary_recovery_check(const Relation& a, std::uint32_t p, int max_dim,
                                       std::size_t budget = default_face_budget());

/// Which composable pair the Theorem Application experiment uses.
enum class Convention {
	/// (A_{k,l}, A_{k,1}^T), middle set J_k
	FirstStep,
	/// (A_{1,l}, A_{k,l}^T) as displayed; composable only when k = 1
	Literal,
};

std::string to_string(Convention c);
Convention parse_convention(const std::string& text);

struct ApplicationReport {
	Convention convention = Convention::FirstStep;
	std::size_t k = 1;
	std::size_t l = 1;
	/// Betti of R(A_{k,l})
	BettiVector level;
	/// Betti of the row pair-poset model of the chosen pair
	BettiVector model;
	bool equal = false;
};

/// InputError naming both middle sets when the convention's pair is not
/// composable.
ApplicationReport theorem_application_experiment(const Relation& a, std::size_t k, std::size_t l,
                                                 Convention convention, std::uint32_t p,
                                                 int max_dim,
                                                 std::size_t budget = default_face_budget());

}  // namespace dowker
