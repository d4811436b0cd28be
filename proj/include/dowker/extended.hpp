#pragma once

#include "dowker/complex.hpp"
#include "dowker/homology.hpp"
#include "dowker/relation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dowker {

inline constexpr std::size_t kDefaultPosetBudget = 100'000;
inline constexpr int kDiagonalLevelCap = 4;
inline constexpr std::size_t kDiagonalSizeCap = 4;

/// Pairs (sigma, tau) with sigma a face of R(A) and tau a face of R(B)
/// inside J^A_sigma, ordered by (sigma,tau) <= (sigma',tau') iff sigma'
/// is a subset of sigma and tau of tau'.
struct PairPoset {
	IndexSet first;   ///< rows(A)
	IndexSet second;  ///< rows(B) = cols(A)
	std::vector<Subset> sigmas;
	std::vector<Subset> taus;

	std::size_t size() const { return sigmas.size(); }
	bool leq(Index x, Index y) const {
		return sigmas[y].is_subset_of(sigmas[x]) && taus[x].is_subset_of(taus[y]);
	}
	std::string label(Index x) const;
	/// Successor lists of the strict order.
	StrictOrder strict_order() const;
	/// Full comparison matrix, validated by the Poset constructor.
	Poset to_poset() const;
	std::optional<Index> find(const Subset& sigma, const Subset& tau) const;
};

/// Throws InputError unless cols(A) and rows(B) carry the same labels in the
/// same order.
void require_composable(const Relation& a, const Relation& b);

/// Elements sorted by sigma, then tau, each in subset_less order.
PairPoset grothendieck_row_model(const Relation& a, const Relation& b,
                                 std::size_t budget = kDefaultPosetBudget);
/// Row model of (B^T, A^T): pairs (rho, tau) with rho a face of C(B) and tau
/// a face of C(A) inside the witnesses of rho under B.
PairPoset grothendieck_col_model(const Relation& a, const Relation& b,
                                 std::size_t budget = kDefaultPosetBudget);

/// Betti numbers of the order complex of the model.
BettiVector model_betti(const PairPoset& m, std::uint32_t p, int max_dim,
                        std::size_t budget = default_face_budget());

/// Exact diagonal presentation: cells up to dimension n_max.
struct DiagonalModelSpec {
	Relation a;
	Relation b;
	int n_max = 3;
};

/// Throws ResourceError beyond kDiagonalLevelCap or kDiagonalSizeCap.
DiagonalCellComplex diagonal_model_cells(const DiagonalModelSpec& spec);

struct ExtendedReport {
	BettiVector row_model;
	BettiVector col_model;
	bool equal = false;
	std::optional<BettiVector> oracle;
	bool oracle_agrees = true;
	std::size_t row_elements = 0;
	std::size_t col_elements = 0;
};

/// Row model against column model; with `oracle`, also row model against
/// the diagonal cells (max_dim + 1 levels).
ExtendedReport extended_duality_check(const Relation& a, const Relation& b, std::uint32_t p,
                                      int max_dim, bool oracle = false,
                                      std::size_t budget = kDefaultPosetBudget);

struct FiberCertificate {
	Subset sigma;
	/// Cone apex of R(B restricted to J_sigma x K), as an index into cols(A);
	/// absent when the fiber has no apex (or is empty).
	std::optional<Index> apex;
};

struct CollapseReport {
	std::vector<FiberCertificate> fibers;
	bool all_certified = false;
	BettiVector model;
	BettiVector base;
	bool equal = false;
	/// all_certified implies equal
	bool holds = true;
};

CollapseReport collapse_check(const Relation& a, const Relation& b, std::uint32_t p, int max_dim,
                              std::size_t budget = kDefaultPosetBudget);

/// Image index in the target model of every source element.
struct ModelMap {
	std::vector<Index> image;
};

/// (sigma, tau) -> (a0 sigma, b0 tau) for morphisms a : A -> A' and
/// b : B -> B' with a1 = b0. InputError if the morphisms do not agree on
/// the middle set; IntegrityError if an image is missing from the target or
/// the map is not monotone.
ModelMap induced_model_map(const RelationMorphism& a, const RelationMorphism& b,
                           const PairPoset& source, const PairPoset& target);

}  // namespace dowker
