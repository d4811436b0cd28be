#include "dowker/dowker.hpp"
#include "dowker/error.hpp"
#include "dowker/extended.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace dowker;

namespace {

using V = std::vector<std::size_t>;

Relation complement3() {
	return Relation(IndexSet({"1", "2", "3"}), IndexSet({"a", "b", "c"}),
	                {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

Relation point(const std::string& i, const std::string& j) {
	return Relation(IndexSet({i}), IndexSet({j}), {{1}});
}

// All-ones J x {*}.
Relation augmentation(const IndexSet& j) {
	return Relation(j, IndexSet({"*"}), std::vector<std::vector<int>>(j.size(), {1}));
}

// Composable pair with prescribed sizes; B's rows carry A's column labels.
std::pair<Relation, Relation> random_pair(std::mt19937_64& rng, std::size_t i, std::size_t j,
                                          std::size_t k, double density) {
	const auto ma = oracle::random_matrix(rng, i, j, density);
	const auto mb = oracle::random_matrix(rng, j, k, density);
	return {oracle::to_relation(ma, "i", "j"), oracle::to_relation(mb, "j", "k")};
}

// Number of pairs (sigma, tau) by scanning all masks.
std::size_t brute_pair_count(const Relation& a, const Relation& b) {
	std::size_t n = 0;
	for (std::uint32_t s = 1; s < (1u << a.num_rows()); ++s) {
		const Subset js = row_witnesses(a, Subset(a.num_rows(), s));
		if (js.none()) {
			continue;
		}
		for (std::uint32_t t = 1; t < (1u << a.num_cols()); ++t) {
			const Subset tau(a.num_cols(), t);
			n += tau.is_subset_of(js) && row_witnesses(b, tau).any();
		}
	}
	return n;
}

}  // namespace

TEST_CASE("row model of tiny relations") {
	const auto m = grothendieck_row_model(point("i", "j"), point("j", "k"));
	REQUIRE(m.size() == 1);
	CHECK(m.label(0) == "{i}/{j}");
	CHECK(model_betti(m, 2, 2).values == V{1, 0, 0});

	const Relation a = complement3();
	const auto c = grothendieck_row_model(a, augmentation(a.cols()));
	CHECK(model_betti(c, 2, 1).values == V{1, 1});

	const Relation empty(IndexSet({"1", "2"}), IndexSet({"a"}), {{0}, {0}});
	CHECK(grothendieck_row_model(empty, point("a", "k")).size() == 0);
	CHECK(model_betti(grothendieck_row_model(empty, point("a", "k")), 2, 1).values == V{0, 0});
}

TEST_CASE("column model") {
	const auto m = grothendieck_col_model(point("i", "j"), point("j", "k"));
	CHECK(m.size() == 1);
	CHECK(model_betti(m, 2, 1).values == V{1, 0});

	const Relation a = complement3();
	const Relation b(a.cols(), IndexSet({"x", "y", "z"}), {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
	const auto row = model_betti(grothendieck_row_model(a, b), 2, 2);
	const auto col = model_betti(grothendieck_col_model(a, b), 2, 2);
	const auto diag = betti_of_cells(diagonal_model_cells({a, b, 3}), 2, 2);
	CHECK(row == col);
	CHECK(row == diag);

	const Relation dead(a.cols(), IndexSet({"x"}), {{0}, {0}, {0}});
	CHECK(grothendieck_col_model(a, dead).size() == 0);
}

TEST_CASE("model elements and order") {
	std::mt19937_64 rng(43);
	for (int trial = 0; trial < 40; ++trial) {
		const auto [a, b] = random_pair(rng, 1 + rng() % 4, 1 + rng() % 4, 1 + rng() % 4, 0.6);
		const auto m = grothendieck_row_model(a, b);
		CHECK(m.size() == brute_pair_count(a, b));
		for (Index x = 0; x < m.size(); ++x) {
			CHECK(m.taus[x].is_subset_of(row_witnesses(a, m.sigmas[x])));
			CHECK(m.find(m.sigmas[x], m.taus[x]) == x);
		}
		CHECK_NOTHROW(m.to_poset());
	}
}

TEST_CASE("composability and budgets") {
	CHECK_THROWS_AS(grothendieck_row_model(complement3(), point("z", "k")), InputError);
	const Relation a = complement3();
	CHECK_THROWS_AS(grothendieck_row_model(a, augmentation(a.cols()), 3), ResourceError);
}

TEST_CASE("diagonal cells") {
	const auto one = diagonal_model_cells({point("i", "j"), point("j", "k"), 3});
	CHECK(one.count(0) == 1);
	CHECK(one.count(1) == 0);
	CHECK(betti_of_cells(one, 2, 2).values == V{1, 0, 0});

	const Relation full(IndexSet({"1", "2"}), IndexSet({"a", "b"}), {{1, 1}, {1, 1}});
	const Relation full_b(IndexSet({"a", "b"}), IndexSet({"x", "y"}), {{1, 1}, {1, 1}});
	CHECK(betti_of_cells(diagonal_model_cells({full, full_b, 3}), 2, 2).values == V{1, 0, 0});

	const Relation a = complement3();
	const auto cells = diagonal_model_cells({a, augmentation(a.cols()), 2});
	CHECK(betti_of_cells(cells, 2, 1).values == V{1, 1});
	CHECK_NOTHROW(cells.validate(3));

	CHECK_THROWS_AS(diagonal_model_cells({a, augmentation(a.cols()), 5}), ResourceError);
	const Relation wide(IndexSet::numbered(5), IndexSet({"a"}),
	                    std::vector<std::vector<int>>(5, {1}));
	CHECK_THROWS_AS(diagonal_model_cells({wide, point("a", "k"), 2}), ResourceError);
}

TEST_CASE("extended duality on random pairs") {
	std::mt19937_64 rng(47);
	for (int trial = 0; trial < 25; ++trial) {
		const auto [a, b] = random_pair(rng, 1 + rng() % 4, 1 + rng() % 4, 1 + rng() % 4, 0.55);
		const auto r = extended_duality_check(a, b, 2, 3);
		CHECK(r.equal);
	}
}

TEST_CASE("pair model against the diagonal cells") {
	std::mt19937_64 rng(53);
	for (int trial = 0; trial < 25; ++trial) {
		const auto [a, b] = random_pair(rng, 1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3, 0.6);
		const auto r = extended_duality_check(a, b, 2, 2, true);
		REQUIRE(r.oracle);
		CHECK(r.oracle_agrees);
		CHECK(*r.oracle == r.row_model);
	}
}

TEST_CASE("collapse along the augmentation") {
	const Relation a = complement3();
	const auto r = collapse_check(a, augmentation(a.cols()), 2, 1);
	CHECK(r.all_certified);
	CHECK(r.model.values == V{1, 1});
	CHECK(r.base.values == V{1, 1});
	CHECK(r.holds);
	CHECK(r.fibers.size() == 6);

	std::mt19937_64 rng(59);
	for (int trial = 0; trial < 60; ++trial) {
		const auto mat = oracle::random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 0.5);
		const Relation x = oracle::to_relation(mat);
		const auto c = collapse_check(x, augmentation(x.cols()), 2, 3);
		CHECK(c.all_certified);
		CHECK(c.equal);
		CHECK(c.base.values == oracle::row_betti(mat, 2, 3));
	}

	// a fiber with no faces carries no certificate
	const Relation b(a.cols(), IndexSet({"x"}), {{1}, {1}, {0}});
	const auto partial = collapse_check(a, b, 2, 1);
	CHECK_FALSE(partial.all_certified);
	bool missing = false;
	for (const auto& f : partial.fibers) {
		missing = missing || !f.apex;
	}
	CHECK(missing);
	CHECK(partial.holds);
}

TEST_CASE("induced maps") {
	const Relation a = complement3();
	const Relation b = augmentation(a.cols());
	const auto m = grothendieck_row_model(a, b);
	const auto ida = RelationMorphism::identity(a);
	const auto idb = RelationMorphism::identity(b);
	const auto f = induced_model_map(ida, idb, m, m);
	for (Index x = 0; x < m.size(); ++x) {
		CHECK(f.image[x] == x);
	}

	// inclusion into the all-ones relation
	const Relation big(a.rows(), a.cols(), std::vector<std::vector<int>>(3, {1, 1, 1}));
	const auto mb = grothendieck_row_model(big, b);
	const auto inc = induced_model_map(ida, idb, m, mb);
	for (Index x = 0; x < m.size(); ++x) {
		CHECK(mb.sigmas[inc.image[x]] == m.sigmas[x]);
		CHECK(mb.taus[inc.image[x]] == m.taus[x]);
	}

	// composition: a rotation of the labels applied twice
	const RelationMorphism rot{{1, 2, 0}, {1, 2, 0}};
	const RelationMorphism rotb{{1, 2, 0}, {0}};
	REQUIRE(check_morphism(rot, a, a).ok);
	const auto once = induced_model_map(rot, rotb, m, m);
	const auto twice = induced_model_map(RelationMorphism::compose(rot, rot),
	                                     RelationMorphism::compose(rotb, rotb), m, m);
	for (Index x = 0; x < m.size(); ++x) {
		CHECK(twice.image[x] == once.image[once.image[x]]);
	}

	// the reverse of the inclusion is not a morphism and has no image
	CHECK_THROWS_AS(induced_model_map(ida, idb, mb, m), IntegrityError);
	CHECK_THROWS_AS(induced_model_map(rot, idb, m, m), InputError);
}
