#include "dowker/complex.hpp"
#include "dowker/error.hpp"
#include "dowker/homology.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <sstream>

using namespace dowker;

namespace {

using Faces = std::vector<std::vector<std::string>>;

SimplicialComplex make(const std::vector<std::string>& verts, const Faces& faces) {
	return from_maximal_faces(IndexSet(verts), faces);
}

const std::vector<std::string> kTri{"1", "2", "3"};

SimplicialComplex boundary_triangle() { return make(kTri, {{"1", "2"}, {"1", "3"}, {"2", "3"}}); }
SimplicialComplex full_triangle() { return make(kTri, {{"1", "2", "3"}}); }

// Random complex on n vertices from a few random faces.
SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t n) {
	std::vector<Subset> faces;
	const std::size_t count = 1 + rng() % 5;
	for (std::size_t f = 0; f < count; ++f) {
		Subset s(n, rng() % (1u << n));
		faces.push_back(s);
	}
	return from_maximal_faces(IndexSet::numbered(n, "v"), faces);
}

}  // namespace

TEST_CASE("maximal faces are kept as an antichain") {
	const auto x = make({"1", "2"}, {{"1", "2"}, {"1"}});
	REQUIRE(x.maximal_faces().size() == 1);
	CHECK(x.vertices().labels_of(x.maximal_faces()[0]) == std::vector<std::string>{"1", "2"});
	CHECK(boundary_triangle().maximal_faces().size() == 3);
	const auto empty = from_maximal_faces(IndexSet{}, std::vector<Subset>{});
	CHECK(empty.empty());
	CHECK(empty.dimension() == -1);
	CHECK_THROWS_AS(make(kTri, {{"4"}}), InputError);
}

TEST_CASE("uncovered vertices are dropped") {
	const auto x = make({"1", "2", "3"}, {{"1", "3"}});
	CHECK(x.vertices().labels() == std::vector<std::string>{"1", "3"});
	CHECK(x.contains(std::vector<std::string>{"3"}));
	CHECK_FALSE(x.contains(std::vector<std::string>{"2"}));
}

TEST_CASE("face enumeration") {
	const auto b = enumerate_faces(boundary_triangle(), 1);
	CHECK(b.count(0) == 3);
	CHECK(b.count(1) == 3);
	const auto f = enumerate_faces(full_triangle(), 2);
	CHECK(f.count(0) == 3);
	CHECK(f.count(1) == 3);
	CHECK(f.count(2) == 1);
	const auto e = enumerate_faces(from_maximal_faces(IndexSet{}, std::vector<Subset>{}), 3);
	CHECK(e.total() == 0);
	CHECK_THROWS_AS(enumerate_faces(full_triangle(), 2, 5), ResourceError);
}

TEST_CASE("face enumeration matches brute force") {
	std::mt19937_64 rng(3);
	for (int trial = 0; trial < 60; ++trial) {
		const std::size_t n = 1 + rng() % 7;
		const auto x = random_complex(rng, n);
		const auto faces = enumerate_faces(x, static_cast<int>(n));
		std::size_t brute = 0;
		for (std::uint32_t s = 1; s < (1u << x.vertices().size()); ++s) {
			brute += x.contains(Subset(x.vertices().size(), s));
		}
		CHECK(faces.total() == brute);
	}
}

TEST_CASE("order complex") {
	const Poset antichain(IndexSet({"x", "y"}), {subset_of(2, {0}), subset_of(2, {1})});
	const auto oc = order_complex(antichain);
	CHECK(oc.maximal_faces().size() == 2);
	CHECK(oc.dimension() == 0);

	const Poset chain(IndexSet({"x", "y"}), {subset_of(2, {0, 1}), subset_of(2, {1})});
	const auto edge = order_complex(chain);
	CHECK(edge.maximal_faces().size() == 1);
	CHECK(edge.dimension() == 1);

	const auto sd = order_complex(face_poset(boundary_triangle()));
	CHECK(betti(sd, 2, 2).values == std::vector<std::size_t>{1, 1, 0});
	CHECK(sd.vertices().size() == 6);
}

TEST_CASE("poset axioms are validated") {
	CHECK_THROWS_AS(Poset(IndexSet({"x"}), {Subset(1)}), InputError);
	CHECK_THROWS_AS(Poset(IndexSet({"x", "y"}), {full_subset(2), full_subset(2)}), InputError);
	// x<y, y<z but not x<z
	CHECK_THROWS_AS(Poset(IndexSet({"x", "y", "z"}),
	                      {subset_of(3, {0, 1}), subset_of(3, {1, 2}), subset_of(3, {2})}),
	                InputError);
}

TEST_CASE("barycentric subdivision preserves Betti numbers") {
	std::mt19937_64 rng(5);
	for (int trial = 0; trial < 40; ++trial) {
		const auto x = random_complex(rng, 1 + rng() % 6);
		const Poset p = face_poset(x);
		const auto direct = betti(x, 2, 3);
		CHECK(betti(order_complex(p), 2, 3) == direct);
		CHECK(betti(chain_faces(strict_order(p), 4), 2, 3) == direct);
	}
}

TEST_CASE("chain faces match the order complex") {
	std::mt19937_64 rng(8);
	for (int trial = 0; trial < 30; ++trial) {
		const auto x = random_complex(rng, 1 + rng() % 5);
		const Poset p = face_poset(x);
		const auto a = chain_faces(strict_order(p), 3);
		const auto b = enumerate_faces(order_complex(p), 3);
		REQUIRE(a.by_dim.size() == b.by_dim.size());
		for (std::size_t d = 0; d < a.by_dim.size(); ++d) {
			REQUIRE(a.by_dim[d].size() == b.by_dim[d].size());
			for (std::size_t f = 0; f < a.by_dim[d].size(); ++f) {
				CHECK(std::equal(a.by_dim[d][f].begin(), a.by_dim[d][f].end(),
				                 b.by_dim[d][f].begin()));
			}
		}
	}
}

TEST_CASE("cone apex") {
	CHECK(cone_apex(full_triangle()) == Index{0});
	CHECK_FALSE(cone_apex(boundary_triangle()));
	CHECK(cone_apex(make({"v"}, {{"v"}})) == Index{0});
}

TEST_CASE("cones are acyclic") {
	std::mt19937_64 rng(21);
	int cones = 0;
	for (int trial = 0; trial < 200; ++trial) {
		const auto x = random_complex(rng, 1 + rng() % 6);
		if (cone_apex(x)) {
			++cones;
			const auto b = betti(x, 2, 4);
			CHECK(b[0] == 1);
			for (std::size_t d = 1; d < b.size(); ++d) {
				CHECK(b[d] == 0);
			}
		}
	}
	CHECK(cones > 10);
}

TEST_CASE("poset extrema") {
	// power set of {1,2}
	const Poset ps(IndexSet({"", "1", "2", "12"}),
	               {full_subset(4), subset_of(4, {1, 3}), subset_of(4, {2, 3}), subset_of(4, {3})});
	CHECK(poset_maximum(ps) == Index{3});
	CHECK(poset_minimum(ps) == Index{0});
	const Poset mixed(IndexSet({"x", "y", "z"}),
	                  {subset_of(3, {0, 1}), subset_of(3, {1}), subset_of(3, {2})});
	CHECK_FALSE(poset_maximum(mixed));
	const Poset single(IndexSet({"s"}), {full_subset(1)});
	CHECK(poset_maximum(single) == Index{0});
	CHECK(poset_minimum(single) == Index{0});
}

TEST_CASE("nerve of a cover") {
	const auto path = make({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
	const Cover two(path, IndexSet({"P", "Q"}),
	                {{subset_of(3, {0, 1})}, {subset_of(3, {1, 2})}});
	const auto n2 = nerve_of_cover(two);
	CHECK(n2.maximal_faces().size() == 1);
	CHECK(n2.dimension() == 1);

	const Cover edges = maximal_face_cover(boundary_triangle());
	const auto n3 = nerve_of_cover(edges);
	CHECK(n3.maximal_faces().size() == 3);
	CHECK(n3.dimension() == 1);

	const Cover one = maximal_face_cover(full_triangle());
	CHECK(nerve_of_cover(one).vertices().size() == 1);
}

TEST_CASE("nerve of maximal faces has the same Betti numbers") {
	std::mt19937_64 rng(13);
	for (int trial = 0; trial < 60; ++trial) {
		const auto x = random_complex(rng, 1 + rng() % 7);
		CHECK(betti(nerve_of_cover(maximal_face_cover(x)), 2, 3) == betti(x, 2, 3));
	}
}

TEST_CASE("goodness certificates") {
	// two edges of the full triangle meeting in vertex 1
	const auto tri = full_triangle();
	const Cover c(make(kTri, {{"1", "2"}, {"1", "3"}}), IndexSet({"E12", "E13"}),
	              {{subset_of(3, {0, 1})}, {subset_of(3, {0, 2})}});
	const auto cert = goodness_certificate(c, 2);
	const auto& pair = cert.at({0, 1});
	CHECK(pair.kind == OverlapKind::Cone);
	CHECK(pair.apex == Index{0});
	CHECK(tri.contains(std::vector<std::string>{"1", "2"}));

	// closed vertex stars of the boundary triangle: star(1) = {12, 13}
	const auto bd = boundary_triangle();
	auto star = [&](Index v) {
		std::vector<Subset> faces;
		for (const auto& f : bd.maximal_faces()) {
			if (f.test(v)) {
				faces.push_back(f);
			}
		}
		return faces;
	};
	const Cover stars(bd, IndexSet({"S1", "S2", "S3"}), {star(0), star(1), star(2)});
	const auto sc = goodness_certificate(stars, 3);
	// star(1) and star(2) share the edge 12 and the vertex 3: two components
	CHECK(sc.at({0, 1}).kind == OverlapKind::Unknown);
	CHECK(stars.intersection(subset_of(3, {0, 1})).size() == 2);
	// maximal-face cover of the same complex: pairwise overlaps are vertices
	const auto mc = goodness_certificate(maximal_face_cover(bd), 3);
	for (const auto& [sel, cert2] : mc) {
		if (sel.size() == 2) {
			CHECK(cert2.kind == OverlapKind::Cone);
		}
		if (sel.size() == 3) {
			CHECK(cert2.kind == OverlapKind::Empty);
		}
	}

	// disconnected overlap: path 1-2-3 against the pair of points {1},{3}
	const auto path = make({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
	const Cover dis(path, IndexSet({"A", "B"}),
	                {{subset_of(3, {0, 1}), subset_of(3, {1, 2})},
	                 {subset_of(3, {0}), subset_of(3, {2})}});
	CHECK(goodness_certificate(dis, 2).at({0, 1}).kind == OverlapKind::Unknown);
}

TEST_CASE("covers are validated") {
	const auto bd = boundary_triangle();
	CHECK_THROWS_AS(Cover(bd, IndexSet({"A"}), {{subset_of(3, {0, 1})}}), InputError);
	CHECK_THROWS_AS(Cover(bd, IndexSet({"A"}), {{full_subset(3)}}), InputError);
}

TEST_CASE("complex text round trip") {
	const auto bd = boundary_triangle();
	std::ostringstream out;
	write_complex(out, bd);
	CHECK(out.str() == "1 2\n1 3\n2 3\n");
	std::istringstream in(out.str());
	CHECK(read_complex(in) == bd);
}

TEST_CASE("subcomplex test") {
	CHECK(is_subcomplex(boundary_triangle(), full_triangle()));
	CHECK_FALSE(is_subcomplex(full_triangle(), boundary_triangle()));
}
