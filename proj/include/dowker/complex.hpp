#pragma once

#include "dowker/relation.hpp"
#include "dowker/subset.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dowker {

/// Default cap on the number of materialized faces (all dimensions together).
inline constexpr std::size_t kDefaultFaceBudget = 2'000'000;

/// Face budget honouring the DOWKER_BUDGET_FACES environment variable.
std::size_t default_face_budget();

/// Faces of one dimension, each a sorted list of `dim+1` vertex indices,
/// stored flat and ordered lexicographically so that lookups are binary
/// searches.
class FaceTable {
public:
	explicit FaceTable(int dim = 0) : dim_(dim) {}

	int dim() const { return dim_; }
	std::size_t width() const { return static_cast<std::size_t>(dim_) + 1; }
	std::size_t size() const { return verts_.size() / width(); }
	bool empty() const { return verts_.empty(); }

	std::span<const Index> operator[](std::size_t i) const {
		return {verts_.data() + i * width(), width()};
	}

	/// Appends without ordering; call finalize() before any lookup.
	void push(std::span<const Index> face);
	/// Sorts and removes duplicates.
	void finalize();
	std::optional<std::size_t> find(std::span<const Index> face) const;

private:
	int dim_;
	std::vector<Index> verts_;
};

/// Faces graded by dimension, `by_dim[d]` holding the d-faces.
struct GradedFaces {
	std::vector<FaceTable> by_dim;

	int top_dim() const { return static_cast<int>(by_dim.size()) - 1; }
	std::size_t total() const;
	std::size_t count(int d) const {
		return d >= 0 && d < static_cast<int>(by_dim.size()) ? by_dim[d].size() : 0;
	}
};

/// Finite abstract simplicial complex stored by its maximal faces.
class SimplicialComplex {
public:
	SimplicialComplex() = default;

	const IndexSet& vertices() const { return vertices_; }
	const std::vector<Subset>& maximal_faces() const { return maximal_; }
	bool empty() const { return maximal_.empty(); }
	/// Largest face dimension, -1 for the empty complex.
	int dimension() const;

	bool contains(const Subset& face) const;
	/// Label-level membership; unknown labels are simply not faces.
	bool contains(const std::vector<std::string>& labels) const;

	/// Incidence of vertices against maximal faces. Its row complex is this
	/// complex; its column complex is the nerve of the maximal faces.
	Relation incidence() const;

	bool operator==(const SimplicialComplex& other) const {
		return vertices_ == other.vertices_ && maximal_ == other.maximal_;
	}

	friend SimplicialComplex from_maximal_faces(IndexSet, std::vector<Subset>);

private:
	IndexSet vertices_;
	std::vector<Subset> maximal_;
};

/// Keeps inclusion-maximal nonempty faces. Vertices not covered by any face
/// are dropped from the vertex set (order of the rest is preserved).
SimplicialComplex from_maximal_faces(IndexSet vertices, std::vector<Subset> faces);
/// Label-level constructor; throws InputError on unknown vertices.
SimplicialComplex from_maximal_faces(const IndexSet& vertices,
                                     const std::vector<std::vector<std::string>>& faces);

/// Every face of dimension <= max_dim exactly once, sorted. Throws
/// ResourceError when more than `budget` faces would be produced.
GradedFaces enumerate_faces(const SimplicialComplex& x, int max_dim,
                            std::size_t budget = default_face_budget());

/// Vertex lying in every maximal face (the least such index), if any.
std::optional<Index> cone_apex(const SimplicialComplex& x);

/// True if every maximal face of `x` (by labels) lies in a face of `y`.
bool is_subcomplex(const SimplicialComplex& x, const SimplicialComplex& y);

/// One maximal face per line, labels separated by spaces.
void write_complex(std::ostream& out, const SimplicialComplex& x);
SimplicialComplex read_complex(std::istream& in);

// ---- Posets --------------------------------------------------------------------

/// Finite partial order given by its full comparison matrix:
/// leq[x].test(y) iff x <= y.
class Poset {
public:
	Poset() = default;
	/// Validates reflexivity, antisymmetry and transitivity (InputError).
	Poset(IndexSet elements, std::vector<Subset> leq);

	const IndexSet& elements() const { return elements_; }
	std::size_t size() const { return elements_.size(); }
	bool leq(Index x, Index y) const { return leq_[x].test(y); }
	bool less(Index x, Index y) const { return x != y && leq(x, y); }
	const Subset& up_set(Index x) const { return leq_[x]; }

private:
	IndexSet elements_;
	std::vector<Subset> leq_;
};

/// Nonempty faces of `x` ordered by inclusion; element labels are the
/// canonical subset encodings.
Poset face_poset(const SimplicialComplex& x, std::size_t budget = default_face_budget());

/// Chains as faces, maximal chains as maximal faces.
SimplicialComplex order_complex(const Poset& p, std::size_t budget = default_face_budget());

/// Strict successor lists: successors[x] = {y : x < y}.
using StrictOrder = std::vector<std::vector<Index>>;
StrictOrder strict_order(const Poset& p);

/// Chains x_0 < ... < x_d with d <= max_dim, as graded faces of the order
/// complex. Equivalent to enumerate_faces(order_complex(p), max_dim) without
/// materializing maximal chains.
GradedFaces chain_faces(const StrictOrder& order, int max_dim,
                        std::size_t budget = default_face_budget());

std::optional<Index> poset_maximum(const Poset& p);
std::optional<Index> poset_minimum(const Poset& p);

// ---- Covers --------------------------------------------------------------------

/// A labeled family of subcomplexes of a common ambient complex. Parts are
/// given by maximal faces over the ambient vertex set.
class Cover {
public:
	/// Validates that every part lies in the ambient complex and that the
	/// parts' faces together exhaust it (InputError otherwise).
	Cover(SimplicialComplex ambient, IndexSet part_labels, std::vector<std::vector<Subset>> parts);

	const SimplicialComplex& ambient() const { return ambient_; }
	const IndexSet& part_labels() const { return labels_; }
	const std::vector<Subset>& part(Index i) const { return parts_[i]; }
	std::size_t size() const { return parts_.size(); }

	/// Maximal faces of the intersection of the selected parts. Empty vector
	/// means an empty intersection.
	std::vector<Subset> intersection(const Subset& selection) const;

private:
	SimplicialComplex ambient_;
	IndexSet labels_;
	std::vector<std::vector<Subset>> parts_;
};

/// Cover of `x` by its maximal faces (each a full simplex).
Cover maximal_face_cover(const SimplicialComplex& x);

/// Vertices are parts; a set of parts is a face iff their intersection is
/// nonempty.
SimplicialComplex nerve_of_cover(const Cover& c, std::size_t budget = default_face_budget());

enum class OverlapKind { Empty, Cone, Unknown };

struct OverlapCertificate {
	OverlapKind kind = OverlapKind::Unknown;
	/// Ambient vertex index of the apex when kind == Cone.
	std::optional<Index> apex;
};

/// For every set of parts up to `size_cap` reached from nonempty overlaps:
/// Empty, Cone(apex), or Unknown. Keys are selections of parts; Unknown
/// makes no claim about contractibility.
std::map<std::vector<Index>, OverlapCertificate> goodness_certificate(const Cover& c,
                                                                      std::size_t size_cap);

}  // namespace dowker
