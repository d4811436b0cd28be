#include "dowker/dowker.hpp"
#include "dowker/error.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace dowker;

namespace {

using V = std::vector<std::size_t>;
using Labels = std::vector<std::string>;

Relation complement3() {
	return Relation(IndexSet({"1", "2", "3"}), IndexSet({"a", "b", "c"}),
	                {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

Relation ones(std::size_t r, std::size_t c) {
	return Relation(IndexSet::numbered(r, "i"), IndexSet::numbered(c, "j"),
	                std::vector<std::vector<int>>(r, std::vector<int>(c, 1)));
}

Relation identity(std::size_t n) {
	std::vector<std::vector<int>> bits(n, std::vector<int>(n, 0));
	for (std::size_t i = 0; i < n; ++i) {
		bits[i][i] = 1;
	}
	return Relation(IndexSet::numbered(n, "i"), IndexSet::numbered(n, "j"), bits);
}

std::vector<Labels> faces_of(const SimplicialComplex& x) {
	std::vector<Labels> out;
	for (const auto& f : x.maximal_faces()) {
		out.push_back(x.vertices().labels_of(f));
	}
	return out;
}

}  // namespace

TEST_CASE("row and column complexes") {
	const auto r = row_complex(complement3());
	CHECK(faces_of(r) == std::vector<Labels>{{"1", "2"}, {"1", "3"}, {"2", "3"}});
	CHECK(betti(r, 2, 1).values == V{1, 1});
	CHECK(betti(column_complex(complement3()), 2, 1).values == V{1, 1});

	CHECK(faces_of(row_complex(identity(2))) == std::vector<Labels>{{"i0"}, {"i1"}});
	CHECK(faces_of(column_complex(identity(2))) == std::vector<Labels>{{"j0"}, {"j1"}});
	CHECK(faces_of(row_complex(ones(3, 2))) == std::vector<Labels>{{"i0", "i1", "i2"}});
	CHECK(faces_of(column_complex(ones(1, 3))) == std::vector<Labels>{{"j0", "j1", "j2"}});
}

TEST_CASE("row complex properties") {
	std::mt19937_64 rng(29);
	for (int trial = 0; trial < 100; ++trial) {
		const auto mat = oracle::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 0.4);
		const Relation a = oracle::to_relation(mat);
		CHECK(row_complex(a) == column_complex(transpose(a)));
		const auto x = row_complex(a);
		Labels expected;
		for (Index i = 0; i < a.num_rows(); ++i) {
			if (a.row(i).any()) {
				expected.push_back(a.rows().label(i));
			}
		}
		CHECK(x.vertices().labels() == expected);
		// faces against the brute-force scan
		const auto brute = oracle::row_faces(mat);
		std::size_t n = 0;
		for (const auto& d : brute) {
			n += d.size();
		}
		CHECK(enumerate_faces(x, 8).total() == n);
	}
}

TEST_CASE("total weight") {
	const Relation a = complement3();
	CHECK(total_weight(a, Side::Row, Labels{"1"}) == 2);
	CHECK(total_weight(a, Side::Row, Labels{"1", "2"}) == 1);
	CHECK(total_weight(a, Side::Row, Labels{}) == 3);
	CHECK(total_weight(a, Side::Column, Labels{"a"}) == 2);
	CHECK_THROWS_AS(total_weight(a, Side::Row, Labels{"1", "2", "3"}), InputError);
}

TEST_CASE("weight filtration levels") {
	const Relation a = complement3();
	const auto f = weight_filtration(a, Side::Row, 2);
	CHECK(f.max_weight == 2);
	const auto level2 = betti(f.filtered.sublevel(f.grade_of_level(2)), 2, 1);
	const auto level1 = betti(f.filtered.sublevel(f.grade_of_level(1)), 2, 1);
	CHECK(level2.values == V{3, 0});
	CHECK(level1.values == V{1, 1});

	const auto full = weight_filtration(ones(2, 2), Side::Row, 1);
	CHECK(full.max_weight == 2);
	for (const auto& grades : full.filtered.grades) {
		for (long g : grades) {
			CHECK(g == 1);
		}
	}
	const auto id = weight_filtration(identity(3), Side::Row, 2);
	CHECK(id.filtered.faces.count(0) == 3);
	CHECK(id.filtered.faces.count(1) == 0);
}

TEST_CASE("weight barcode") {
	const auto f = weight_filtration(complement3(), Side::Row, 2);
	const auto bars = weight_barcode(f, 2, 1);
	// three components at k=2, two of them merge at k=1; a loop appears at k=1
	std::size_t finite0 = 0;
	std::size_t infinite0 = 0;
	std::size_t loops = 0;
	for (const auto& b : bars) {
		if (b.dim == 0 && b.death) {
			CHECK(b.birth == 2);
			CHECK(*b.death == 1);
			++finite0;
		} else if (b.dim == 0) {
			CHECK(b.birth == 2);
			++infinite0;
		} else {
			CHECK(b.birth == 1);
			CHECK_FALSE(b.death);
			++loops;
		}
	}
	CHECK(finite0 == 2);
	CHECK(infinite0 == 1);
	CHECK(loops == 1);
}

TEST_CASE("sublevel routes agree with brute force") {
	std::mt19937_64 rng(31);
	for (int trial = 0; trial < 120; ++trial) {
		const auto mat = oracle::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 0.6);
		const Relation a = oracle::to_relation(mat);
		for (std::size_t k = 1; k <= a.num_cols(); ++k) {
			const auto rows = sublevel_maximal_faces(a, k, 1u << 20, SublevelRoute::RowSubsets);
			const auto cols = sublevel_maximal_faces(a, k, 1u << 20, SublevelRoute::ColSubsets);
			CHECK(rows == cols);
			const auto x = sublevel_complex(a, Side::Row, k);
			CHECK(betti(x, 2, 3).values == oracle::betti(oracle::sublevel_faces(mat, k), 2, 3));
		}
	}
	CHECK_THROWS_AS(sublevel_maximal_faces(complement3(), 0), InputError);
	CHECK(sublevel_maximal_faces(complement3(), 4).empty());
}

TEST_CASE("duality check") {
	auto r = duality_check(complement3(), 2, 1);
	CHECK(r.row.values == V{1, 1});
	CHECK(r.column.values == V{1, 1});
	CHECK(r.equal);
	r = duality_check(identity(2), 2, 1);
	CHECK(r.row.values == V{2, 0});
	CHECK(r.equal);

	std::mt19937_64 rng(37);
	for (int trial = 0; trial < 100; ++trial) {
		const auto mat = oracle::random_matrix(rng, 5, 5, 0.3 + 0.1 * (trial % 5));
		const auto d = duality_check(oracle::to_relation(mat), 2, 3);
		CHECK(d.equal);
		CHECK(d.row.values == oracle::row_betti(mat, 2, 3));
		CHECK(d.column.values == oracle::row_betti(oracle::transpose(mat), 2, 3));
	}
}

TEST_CASE("psi comparison") {
	auto r = psi_equivalence_check(complement3(), 2, 2, 1);
	CHECK(r.level.values == V{3, 0});
	CHECK(r.sublevel.values == V{3, 0});
	CHECK(r.equal);
	CHECK(r.well_defined);

	r = psi_equivalence_check(ones(2, 2), 2, 2, 1);
	CHECK(r.level.values == V{1, 0});
	CHECK(r.sublevel.values == V{1, 0});

	std::mt19937_64 rng(41);
	for (int trial = 0; trial < 40; ++trial) {
		const auto mat = oracle::random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 0.6);
		const Relation a = oracle::to_relation(mat);
		const auto k1 = psi_equivalence_check(a, 1, 2, 2);
		CHECK(k1.equal);
		CHECK(k1.well_defined);
		CHECK(k1.sublevel.values == oracle::row_betti(mat, 2, 2));
	}
}

TEST_CASE("side names") {
	CHECK(parse_side("row") == Side::Row);
	CHECK(parse_side("col") == Side::Column);
	CHECK_THROWS_AS(parse_side("diagonal"), InputError);
}
