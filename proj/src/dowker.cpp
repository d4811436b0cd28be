#include "dowker/dowker.hpp"

#include "dowker/bifiltration.hpp"
#include "dowker/error.hpp"

#include <algorithm>
#include <limits>

namespace dowker {

std::string to_string(Side side) { return side == Side::Row ? "row" : "col"; }

Side parse_side(const std::string& text) {
	if (text == "row") {
		return Side::Row;
	}
	if (text == "col" || text == "column") {
		return Side::Column;
	}
	throw InputError("unknown side '" + text + "' (expected row or col)");
}

SimplicialComplex row_complex(const Relation& a) {
	std::vector<Subset> faces;
	faces.reserve(a.num_cols());
	for (Index j = 0; j < a.num_cols(); ++j) {
		faces.push_back(a.col(j));
	}
	return from_maximal_faces(a.rows(), std::move(faces));
}

SimplicialComplex column_complex(const Relation& a) { return row_complex(transpose(a)); }

SimplicialComplex dowker_complex(const Relation& a, Side side) {
	return side == Side::Row ? row_complex(a) : column_complex(a);
}

std::size_t total_weight(const Relation& a, Side side, const Subset& sigma) {
	const Relation b = side == Side::Row ? a : transpose(a);
	if (sigma.size() != b.num_rows()) {
		throw InputError("subset width does not match the relation");
	}
	const auto w = row_witnesses(b, sigma).count();
	if (sigma.any() && w == 0) {
		throw InputError("{" + b.rows().encode(sigma) + "} is not a face of the " +
		                 to_string(side) + " complex");
	}
	return w;
}

std::size_t total_weight(const Relation& a, Side side, const std::vector<std::string>& sigma) {
	const auto& index = side == Side::Row ? a.rows() : a.cols();
	return total_weight(a, side, index.subset(sigma));
}

namespace {

std::uint64_t power_of_two(std::size_t n) {
	return n >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << n;
}

// Faces reached by adding larger indices only; a face is maximal when no
// index at all can be added.
std::vector<Subset> sublevel_by_rows(const Relation& a, std::size_t k, std::size_t budget) {
	const std::size_t n = a.num_rows();
	std::vector<Subset> out;
	std::size_t visited = 0;
	Subset face(n);
	auto dfs = [&](auto& self, Index next, const Subset& witnesses) -> void {
		if (++visited > budget) {
			throw ResourceError("sublevel search exceeded the budget of " +
			                    std::to_string(budget) + " faces");
		}
		bool maximal = true;
		for (Index i = 0; i < n; ++i) {
			if (face.test(i)) {
				continue;
			}
			const Subset w = witnesses & a.row(i);
			if (w.count() < k) {
				continue;
			}
			maximal = false;
			if (i >= next) {
				face.set(i);
				self(self, i + 1, w);
				face.reset(i);
			}
		}
		if (maximal && face.any()) {
			out.push_back(face);
		}
	};
	dfs(dfs, 0, full_subset(a.num_cols()));
	return maximal_elements(std::move(out));
}

std::vector<Subset> sublevel_by_cols(const Relation& a, std::size_t k, std::size_t budget) {
	if (binomial(a.num_cols(), k) > budget) {
		throw ResourceError("sublevel search exceeded the budget of " + std::to_string(budget) +
		                    " faces");
	}
	std::vector<Subset> out;
	for_each_subset_of_size(full_subset(a.num_cols()), k,
	                        [&](const Subset& tau) { out.push_back(col_witnesses(a, tau)); });
	return maximal_nonempty(std::move(out));
}

}  // namespace

std::vector<Subset> sublevel_maximal_faces(const Relation& a, std::size_t k, std::size_t budget,
                                           SublevelRoute route) {
	if (k == 0) {
		throw InputError("weight level must be at least 1");
	}
	if (k > a.num_cols() || a.num_rows() == 0) {
		return {};
	}
	if (route == SublevelRoute::Auto) {
		route = binomial(a.num_cols(), k) <= power_of_two(a.num_rows()) ? SublevelRoute::ColSubsets
		                                                                 : SublevelRoute::RowSubsets;
	}
	return route == SublevelRoute::ColSubsets ? sublevel_by_cols(a, k, budget)
	                                          : sublevel_by_rows(a, k, budget);
}

SimplicialComplex sublevel_complex(const Relation& a, Side side, std::size_t level,
                                   std::size_t budget) {
	const Relation b = side == Side::Row ? a : transpose(a);
	return from_maximal_faces(b.rows(), sublevel_maximal_faces(b, level, budget));
}

WeightFiltration weight_filtration(const Relation& a, Side side, int max_dim, std::size_t budget) {
	const Relation b = side == Side::Row ? a : transpose(a);
	const SimplicialComplex x = row_complex(b);
	WeightFiltration out;
	out.side = side;
	out.filtered.vertices = x.vertices();
	out.filtered.faces = enumerate_faces(x, max_dim, budget);
	const auto& faces = out.filtered.faces;

	std::vector<Index> to_base(x.vertices().size());
	for (Index v = 0; v < to_base.size(); ++v) {
		to_base[v] = b.rows().at(x.vertices().label(v));
	}
	out.weights.resize(faces.by_dim.size());
	for (std::size_t d = 0; d < faces.by_dim.size(); ++d) {
		const auto& table = faces.by_dim[d];
		out.weights[d].resize(table.size());
		for (std::size_t f = 0; f < table.size(); ++f) {
			Subset sigma(b.num_rows());
			for (Index v : table[f]) {
				sigma.set(to_base[v]);
			}
			out.weights[d][f] = static_cast<long>(row_witnesses(b, sigma).count());
		}
	}
	for (long w : out.weights.empty() ? std::vector<long>{} : out.weights[0]) {
		out.max_weight = std::max(out.max_weight, w);
	}
	out.filtered.grades.resize(faces.by_dim.size());
	for (std::size_t d = 0; d < faces.by_dim.size(); ++d) {
		out.filtered.grades[d].resize(out.weights[d].size());
		for (std::size_t f = 0; f < out.weights[d].size(); ++f) {
			out.filtered.grades[d][f] = out.grade_of_level(out.weights[d][f]);
		}
	}

	// every facet must enter no later than its face
	std::vector<Index> facet;
	for (std::size_t d = 1; d < faces.by_dim.size(); ++d) {
		const auto& table = faces.by_dim[d];
		for (std::size_t f = 0; f < table.size(); ++f) {
			const auto face = table[f];
			for (std::size_t drop = 0; drop < face.size(); ++drop) {
				facet.clear();
				for (std::size_t t = 0; t < face.size(); ++t) {
					if (t != drop) {
						facet.push_back(face[t]);
					}
				}
				const auto pos = faces.by_dim[d - 1].find(facet);
				if (!pos || out.filtered.grades[d - 1][*pos] > out.filtered.grades[d][f]) {
					throw IntegrityError("weight filtration is not monotone");
				}
			}
		}
	}
	return out;
}

Barcode weight_barcode(const WeightFiltration& f, std::uint32_t p, int max_dim) {
	Barcode bars = persistent_barcode(f.filtered, p, max_dim);
	for (auto& bar : bars) {
		bar.birth = f.level_of_grade(bar.birth);
		if (bar.death) {
			*bar.death = f.level_of_grade(*bar.death);
		}
	}
	return bars;
}

DualityReport duality_check(const Relation& a, std::uint32_t p, int max_dim, std::size_t budget) {
	DualityReport r;
	r.row = betti(row_complex(a), p, max_dim, budget);
	r.column = betti(column_complex(a), p, max_dim, budget);
	r.equal = r.row == r.column;
	return r;
}

PsiReport psi_equivalence_check(const Relation& a, std::size_t k, std::uint32_t p, int max_dim,
                                std::size_t budget) {
	if (k == 0) {
		throw InputError("weight level must be at least 1");
	}
	PsiReport r;
	r.k = k;
	const LevelRelation lr = level_relation(a, k, 1, budget);
	r.level = betti_via_smaller_side(lr.derived, p, max_dim, false, budget);
	r.sublevel = betti(sublevel_complex(a, Side::Row, k, budget), p, max_dim, budget);
	r.equal = r.level == r.sublevel;

	// psi_k(chi) = union of chi; witnesses of the union are the common
	// witnesses of the members
	r.well_defined = true;
	const SimplicialComplex x = row_complex(lr.derived);
	for (const auto& chi : x.maximal_faces()) {
		Subset uni(a.num_rows());
		Subset common = full_subset(a.num_cols());
		for (Index v : members(chi)) {
			const Index row = lr.derived.rows().at(x.vertices().label(v));
			uni |= lr.row_sets[row];
			common &= row_witnesses(a, lr.row_sets[row]);
		}
		const Subset w = row_witnesses(a, uni);
		if (w != common || w.count() < k) {
			r.well_defined = false;
			break;
		}
	}
	return r;
}

}  // namespace dowker
