#include "dowker/homology.hpp"

#include "dowker/dowker.hpp"
#include "dowker/error.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace dowker {

std::string BettiVector::str() const {
	std::ostringstream s;
	s << '(';
	for (std::size_t d = 0; d < values.size(); ++d) {
		s << (d ? "," : "") << values[d];
	}
	s << ')';
	return s.str();
}

void require_prime(std::uint32_t p) {
	bool prime = p >= 2 && p < (1u << 31);
	for (std::uint32_t q = 2; prime && static_cast<std::uint64_t>(q) * q <= p; ++q) {
		prime = p % q != 0;
	}
	if (!prime) {
		throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
	}
}

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
	std::uint64_t r = 1;
	base %= p;
	while (exp) {
		if (exp & 1) {
			r = r * base % p;
		}
		base = base * base % p;
		exp >>= 1;
	}
	return static_cast<std::uint32_t>(r);
}

std::uint32_t signed_mod(long v, std::uint32_t p) {
	long r = v % static_cast<long>(p);
	return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

/// Sparse column over F_p with strictly increasing row indices and nonzero
/// coefficients.
struct Column {
	std::vector<Index> rows;
	std::vector<std::uint32_t> coef;

	bool empty() const { return rows.empty(); }

	/// Builds a column from unsorted (row, coefficient) entries.
	static Column from_entries(std::vector<std::pair<Index, std::uint32_t>> entries, std::uint32_t p) {
		std::sort(entries.begin(), entries.end());
		Column c;
		for (std::size_t k = 0; k < entries.size();) {
			std::uint64_t sum = 0;
			const auto r = entries[k].first;
			for (; k < entries.size() && entries[k].first == r; ++k) {
				sum += entries[k].second;
			}
			if (sum % p != 0) {
				c.rows.push_back(r);
				c.coef.push_back(static_cast<std::uint32_t>(sum % p));
			}
		}
		return c;
	}
};

/// this - factor * other
Column subtract_multiple(const Column& a, const Column& b, std::uint32_t factor, std::uint32_t p) {
	Column out;
	out.rows.reserve(a.rows.size() + b.rows.size());
	out.coef.reserve(a.rows.size() + b.rows.size());
	std::size_t i = 0;
	std::size_t j = 0;
	auto push = [&](Index r, std::uint64_t c) {
		c %= p;
		if (c != 0) {
			out.rows.push_back(r);
			out.coef.push_back(static_cast<std::uint32_t>(c));
		}
	};
	while (i < a.rows.size() || j < b.rows.size()) {
		if (j == b.rows.size() || (i < a.rows.size() && a.rows[i] < b.rows[j])) {
			push(a.rows[i], a.coef[i]);
			++i;
		} else if (i == a.rows.size() || b.rows[j] < a.rows[i]) {
			push(b.rows[j], p - static_cast<std::uint64_t>(factor) * b.coef[j] % p);
			++j;
		} else {
			push(a.rows[i], a.coef[i] + p - static_cast<std::uint64_t>(factor) * b.coef[j] % p);
			++i;
			++j;
		}
	}
	return out;
}

/// Incremental column reduction keyed on the lowest (largest-index) row.
class Reducer {
public:
	Reducer(std::size_t num_rows, std::uint32_t p) : owner_(num_rows, -1), p_(p) {}

	/// Reduces `c` against the stored columns; stores it when it stays
	/// nonzero. Returns the pivot row in that case.
	std::optional<Index> add(Column c) {
		while (!c.empty()) {
			const auto pivot = c.rows.back();
			const auto o = owner_[pivot];
			if (o < 0) {
				owner_[pivot] = static_cast<long>(stored_.size());
				stored_.push_back(std::move(c));
				return pivot;
			}
			const auto& other = stored_[static_cast<std::size_t>(o)];
			const auto inv = mod_pow(other.coef.back(), p_ - 2, p_);
			const auto factor = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c.coef.back()) * inv % p_);
			c = subtract_multiple(c, other, factor, p_);
		}
		return std::nullopt;
	}

	std::size_t rank() const { return stored_.size(); }

private:
	std::vector<long> owner_;
	std::vector<Column> stored_;
	std::uint32_t p_;
};

Column simplicial_boundary(std::span<const Index> face, const FaceTable& facets, std::uint32_t p) {
	std::vector<std::pair<Index, std::uint32_t>> entries;
	std::vector<Index> facet(face.size() - 1);
	for (std::size_t drop = 0; drop < face.size(); ++drop) {
		std::size_t k = 0;
		for (std::size_t v = 0; v < face.size(); ++v) {
			if (v != drop) {
				facet[k++] = face[v];
			}
		}
		auto row = facets.find(facet);
		if (!row) {
			throw IntegrityError("face list is not closed under taking facets");
		}
		entries.emplace_back(static_cast<Index>(*row), drop % 2 == 0 ? 1u : p - 1);
	}
	return Column::from_entries(std::move(entries), p);
}

}  // namespace

BettiVector betti(const GradedFaces& faces, std::uint32_t p, int max_dim) {
	require_prime(p);
	if (max_dim < 0) {
		throw InputError("max_dim must be nonnegative");
	}
	const int top = std::min(faces.top_dim(), max_dim + 1);
	// rank[d] = rank of the boundary map from d-faces to (d-1)-faces
	std::vector<std::size_t> rank(static_cast<std::size_t>(max_dim) + 3, 0);
	std::vector<bool> cleared;
	for (int d = top; d >= 1; --d) {
		const auto& cols = faces.by_dim[d];
		const auto& rows = faces.by_dim[d - 1];
		Reducer reducer(rows.size(), p);
		std::vector<bool> next_cleared(rows.size(), false);
		for (std::size_t c = 0; c < cols.size(); ++c) {
			// a d-face that is already the pivot of a reduced (d+1)-boundary
			// has a boundary dependent on earlier columns
			if (!cleared.empty() && cleared[c]) {
				continue;
			}
			if (auto pivot = reducer.add(simplicial_boundary(cols[c], rows, p))) {
				next_cleared[*pivot] = true;
			}
		}
		rank[d] = reducer.rank();
		cleared = std::move(next_cleared);
	}
	BettiVector out{p, {}};
	for (int d = 0; d <= max_dim; ++d) {
		const auto n = faces.count(d);
		out.values.push_back(n - rank[d] - rank[d + 1]);
	}
	return out;
}

BettiVector betti(const SimplicialComplex& x, std::uint32_t p, int max_dim, std::size_t budget) {
	require_prime(p);
	if (max_dim < 0) {
		throw InputError("max_dim must be nonnegative");
	}
	return betti(enumerate_faces(x, max_dim + 1, budget), p, max_dim);
}

BettiVector betti_via_smaller_side(const Relation& a, std::uint32_t p, int max_dim, bool force_row,
                                   std::size_t budget) {
	if (force_row || a.num_rows() <= a.num_cols()) {
		return betti(row_complex(a), p, max_dim, budget);
	}
	return betti(column_complex(a), p, max_dim, budget);
}

// ---- Persistence -------------------------------------------------------------------

GradedFaces FilteredComplex::sublevel(long g) const {
	GradedFaces out;
	for (std::size_t d = 0; d < faces.by_dim.size(); ++d) {
		FaceTable t(static_cast<int>(d));
		for (std::size_t i = 0; i < faces.by_dim[d].size(); ++i) {
			if (grades[d][i] <= g) {
				t.push(faces.by_dim[d][i]);
			}
		}
		t.finalize();
		out.by_dim.push_back(std::move(t));
	}
	while (!out.by_dim.empty() && out.by_dim.back().empty()) {
		out.by_dim.pop_back();
	}
	return out;
}

Barcode persistent_barcode(const FilteredComplex& f, std::uint32_t p, int max_dim) {
	require_prime(p);
	if (f.grades.size() != f.faces.by_dim.size()) {
		throw InputError("grades do not match the face list");
	}
	struct Entry {
		long grade;
		int dim;
		Index index;
	};
	std::vector<Entry> order;
	for (std::size_t d = 0; d < f.faces.by_dim.size(); ++d) {
		if (f.grades[d].size() != f.faces.by_dim[d].size()) {
			throw InputError("grades do not match the face list in dimension " + std::to_string(d));
		}
		for (Index i = 0; i < f.faces.by_dim[d].size(); ++i) {
			order.push_back({f.grades[d][i], static_cast<int>(d), i});
		}
	}
	std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
		if (a.grade != b.grade) {
			return a.grade < b.grade;
		}
		if (a.dim != b.dim) {
			return a.dim < b.dim;
		}
		return a.index < b.index;
	});
	std::vector<std::vector<Index>> position(f.faces.by_dim.size());
	for (std::size_t d = 0; d < f.faces.by_dim.size(); ++d) {
		position[d].resize(f.faces.by_dim[d].size());
	}
	for (Index k = 0; k < order.size(); ++k) {
		position[order[k].dim][order[k].index] = k;
	}

	Reducer reducer(order.size(), p);
	std::vector<bool> is_pivot(order.size(), false);
	std::vector<bool> zero_column(order.size(), false);
	Barcode bars;
	for (Index k = 0; k < order.size(); ++k) {
		const auto& e = order[k];
		Column col;
		if (e.dim > 0) {
			auto face = f.faces.by_dim[e.dim][e.index];
			const auto& facets = f.faces.by_dim[e.dim - 1];
			auto local = simplicial_boundary(face, facets, p);
			std::vector<std::pair<Index, std::uint32_t>> entries;
			for (std::size_t r = 0; r < local.rows.size(); ++r) {
				const auto facet_grade = f.grades[e.dim - 1][local.rows[r]];
				if (facet_grade > e.grade) {
					throw InputError("grade of a face is below the grade of one of its facets");
				}
				entries.emplace_back(position[e.dim - 1][local.rows[r]], local.coef[r]);
			}
			col = Column::from_entries(std::move(entries), p);
		}
		if (auto pivot = reducer.add(std::move(col))) {
			is_pivot[*pivot] = true;
			const auto& born = order[*pivot];
			if (born.grade < e.grade && born.dim <= max_dim) {
				bars.push_back({born.dim, born.grade, e.grade});
			}
		} else {
			zero_column[k] = true;
		}
	}
	for (Index k = 0; k < order.size(); ++k) {
		if (zero_column[k] && !is_pivot[k] && order[k].dim <= max_dim) {
			bars.push_back({order[k].dim, order[k].grade, std::nullopt});
		}
	}
	std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
		if (a.dim != b.dim) {
			return a.dim < b.dim;
		}
		if (a.birth != b.birth) {
			return a.birth < b.birth;
		}
		if (a.death.has_value() != b.death.has_value()) {
			return !a.death.has_value();
		}
		return a.death.value_or(0) < b.death.value_or(0);
	});
	return bars;
}

void write_barcode_csv(std::ostream& out, const Barcode& bars) {
	out << "dim,birth,death\n";
	for (const auto& b : bars) {
		out << b.dim << ',' << b.birth << ',';
		if (b.death) {
			out << *b.death;
		} else {
			out << "inf";
		}
		out << '\n';
	}
}

void write_betti_csv(std::ostream& out, const BettiVector& b) {
	out << "dim,betti\n";
	for (std::size_t d = 0; d < b.values.size(); ++d) {
		out << d << ',' << b.values[d] << '\n';
	}
}

// ---- Cell complexes ------------------------------------------------------------------

void DiagonalCellComplex::validate(std::uint32_t p) const {
	require_prime(p);
	for (std::size_t d = 1; d < cells.size(); ++d) {
		for (std::size_t c = 0; c < cells[d].size(); ++c) {
			for (const auto& [facet, coef] : cells[d][c].boundary) {
				if (facet >= cells[d - 1].size()) {
					throw IntegrityError("cell refers to a missing facet in dimension " + std::to_string(d - 1));
				}
				(void)coef;
			}
			if (d < 2) {
				continue;
			}
			std::map<Index, long> sum;
			for (const auto& [facet, coef] : cells[d][c].boundary) {
				for (const auto& [ridge, inner] : cells[d - 1][facet].boundary) {
					sum[ridge] += static_cast<long>(coef) * inner;
				}
			}
			for (const auto& [ridge, total] : sum) {
				if (signed_mod(total, p) != 0) {
					throw IntegrityError("boundary of boundary is nonzero at a cell of dimension " +
					                     std::to_string(d));
				}
			}
		}
	}
}

BettiVector betti_of_cells(const DiagonalCellComplex& cx, std::uint32_t p, int max_dim) {
	cx.validate(p);
	if (max_dim < 0) {
		throw InputError("max_dim must be nonnegative");
	}
	const int top = std::min(static_cast<int>(cx.cells.size()) - 1, max_dim + 1);
	std::vector<std::size_t> rank(static_cast<std::size_t>(max_dim) + 3, 0);
	for (int d = 1; d <= top; ++d) {
		Reducer reducer(cx.cells[d - 1].size(), p);
		for (const auto& cell : cx.cells[d]) {
			std::vector<std::pair<Index, std::uint32_t>> entries;
			for (const auto& [facet, coef] : cell.boundary) {
				entries.emplace_back(facet, signed_mod(coef, p));
			}
			reducer.add(Column::from_entries(std::move(entries), p));
		}
		rank[d] = reducer.rank();
	}
	BettiVector out{p, {}};
	for (int d = 0; d <= max_dim; ++d) {
		out.values.push_back(cx.count(d) - rank[d] - rank[d + 1]);
	}
	return out;
}

}  // namespace dowker
