#pragma once

#include "dowker/subset.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dowker {

/// Ordered list of pairwise distinct labels. Computation uses positions;
/// labels only matter at the I/O boundary.
class IndexSet {
public:
	IndexSet() = default;
	explicit IndexSet(std::vector<std::string> labels);

	/// "0", "1", ... "n-1" (or prefix + number).
	static IndexSet numbered(std::size_t n, std::string_view prefix = "");

	std::size_t size() const { return labels_.size(); }
	bool empty() const { return labels_.empty(); }
	const std::string& label(Index i) const { return labels_[i]; }
	const std::vector<std::string>& labels() const { return labels_; }

	std::optional<Index> find(std::string_view label) const;
	/// Throws InputError naming the unknown label.
	Index at(std::string_view label) const;

	Subset subset(const std::vector<std::string>& labels) const;
	std::vector<std::string> labels_of(const Subset& s) const;
	/// Canonical text encoding of a subset: member labels in index order
	/// joined by '|'. Used to name derived index sets such as I_l.
	std::string encode(const Subset& s) const;

	bool operator==(const IndexSet& other) const { return labels_ == other.labels_; }

private:
	std::vector<std::string> labels_;
	std::unordered_map<std::string, Index> lookup_;
};

/// Binary relation A : I x J -> {0,1}. Rows and columns are both stored as
/// bit sets so that witness queries in either direction are word-parallel.
class Relation {
public:
	Relation() = default;
	Relation(IndexSet rows, IndexSet cols);
	/// `bits[i][j]` is A(i,j). Throws InputError on ragged input.
	Relation(IndexSet rows, IndexSet cols, const std::vector<std::vector<int>>& bits);

	const IndexSet& rows() const { return rows_; }
	const IndexSet& cols() const { return cols_; }
	std::size_t num_rows() const { return rows_.size(); }
	std::size_t num_cols() const { return cols_.size(); }

	bool get(Index i, Index j) const { return row_bits_[i].test(j); }
	void set(Index i, Index j, bool value = true);

	/// {j : A(i,j)=1}
	const Subset& row(Index i) const { return row_bits_[i]; }
	/// {i : A(i,j)=1}
	const Subset& col(Index j) const { return col_bits_[j]; }

	bool operator==(const Relation& other) const;

private:
	IndexSet rows_;
	IndexSet cols_;
	std::vector<Subset> row_bits_;
	std::vector<Subset> col_bits_;
};

/// J_sigma = {j : A(i,j)=1 for all i in sigma}; J_empty = J.
Subset row_witnesses(const Relation& a, const Subset& sigma);
/// I_tau = {i : A(i,j)=1 for all j in tau}; I_empty = I.
Subset col_witnesses(const Relation& a, const Subset& tau);

/// Label-level versions; unknown labels raise InputError.
std::vector<std::string> row_witnesses(const Relation& a, const std::vector<std::string>& sigma);
std::vector<std::string> col_witnesses(const Relation& a, const std::vector<std::string>& tau);

Relation transpose(const Relation& a);

/// Restriction to row/column subsets; labels keep their original order.
Relation restrict(const Relation& a, const Subset& rows, const Subset& cols);
Relation restrict(const Relation& a, const std::vector<std::string>& rows,
                  const std::vector<std::string>& cols);

/// A pair of total maps a0 : rows(A) -> rows(A'), a1 : cols(A) -> cols(A').
struct RelationMorphism {
	std::vector<Index> row_map;
	std::vector<Index> col_map;

	static RelationMorphism identity(const Relation& a);
	/// `second` after `first`.
	static RelationMorphism compose(const RelationMorphism& second, const RelationMorphism& first);
};

struct MorphismCheck {
	bool ok = true;
	/// First (row, col) of the source, in row-major order, with A(i,j)=1 but
	/// A'(a0 i, a1 j)=0.
	std::optional<std::pair<Index, Index>> violation;
};

/// Verifies A(i,j)=1 => A'(a0(i), a1(j))=1 for every pair. Throws InputError
/// if the maps are not total or leave the target's index sets.
MorphismCheck check_morphism(const RelationMorphism& m, const Relation& source,
                             const Relation& target);

// ---- I/O -------------------------------------------------------------------

/// Reads either the dense CSV format (header row of column labels, first
/// column row labels, entries 0/1) or the sparse format (`row col` pairs,
/// one per line). Lines starting with '#' and blank lines are ignored.
/// Parse failures raise InputError("line N: ...").
Relation read_relation(std::istream& in);
Relation read_relation_file(const std::string& path);

/// Dense CSV; the header row begins with an empty corner cell.
void write_relation_csv(std::ostream& out, const Relation& a);

}  // namespace dowker
