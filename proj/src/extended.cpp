#include "dowker/extended.hpp"

#include "dowker/dowker.hpp"
#include "dowker/error.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace dowker {

namespace {

// Nonempty faces of R(rel) restricted to the rows in `allowed`, i.e. subsets
// with at least one common witness.
std::vector<Subset> witnessed_subsets(const Relation& rel, const Subset& allowed,
                                      std::size_t budget, std::size_t& used) {
	std::vector<Subset> out;
	const auto rows = members(allowed);
	Subset face(rel.num_rows());
	auto dfs = [&](auto& self, std::size_t next, const Subset& witnesses) -> void {
		for (std::size_t t = next; t < rows.size(); ++t) {
			const Subset w = witnesses & rel.row(rows[t]);
			if (w.none()) {
				continue;
			}
			if (++used > budget) {
				throw ResourceError("pair model exceeded the budget of " + std::to_string(budget) +
				                    " elements");
			}
			face.set(rows[t]);
			out.push_back(face);
			self(self, t + 1, w);
			face.reset(rows[t]);
		}
	};
	dfs(dfs, 0, full_subset(rel.num_cols()));
	std::sort(out.begin(), out.end(), subset_less);
	return out;
}

bool pair_less(const Subset& s1, const Subset& t1, const Subset& s2, const Subset& t2) {
	if (s1 != s2) {
		return subset_less(s1, s2);
	}
	return subset_less(t1, t2);
}

Subset image_of(const Subset& s, const std::vector<Index>& map, std::size_t width) {
	Subset out(width);
	for (Index i : members(s)) {
		out.set(map[i]);
	}
	return out;
}

}  // namespace

std::string PairPoset::label(Index x) const {
	return "{" + first.encode(sigmas[x]) + "}/{" + second.encode(taus[x]) + "}";
}

StrictOrder PairPoset::strict_order() const {
	StrictOrder order(size());
	for (Index x = 0; x < size(); ++x) {
		for (Index y = 0; y < size(); ++y) {
			if (x != y && leq(x, y)) {
				order[x].push_back(y);
			}
		}
	}
	return order;
}

Poset PairPoset::to_poset() const {
	std::vector<std::string> labels;
	std::vector<Subset> rows;
	for (Index x = 0; x < size(); ++x) {
		labels.push_back(label(x));
		Subset up(size());
		for (Index y = 0; y < size(); ++y) {
			up[y] = leq(x, y);
		}
		rows.push_back(std::move(up));
	}
	return Poset(IndexSet(std::move(labels)), std::move(rows));
}

std::optional<Index> PairPoset::find(const Subset& sigma, const Subset& tau) const {
	std::size_t lo = 0;
	std::size_t hi = size();
	while (lo < hi) {
		const std::size_t mid = (lo + hi) / 2;
		if (pair_less(sigmas[mid], taus[mid], sigma, tau)) {
			lo = mid + 1;
		} else {
			hi = mid;
		}
	}
	if (lo < size() && sigmas[lo] == sigma && taus[lo] == tau) {
		return static_cast<Index>(lo);
	}
	return std::nullopt;
}

void require_composable(const Relation& a, const Relation& b) {
	if (!(a.cols() == b.rows())) {
		throw InputError("relations are not composable: columns of the first (" +
		                 std::to_string(a.num_cols()) + ") differ from rows of the second (" +
		                 std::to_string(b.num_rows()) + ")");
	}
}

PairPoset grothendieck_row_model(const Relation& a, const Relation& b, std::size_t budget) {
	require_composable(a, b);
	PairPoset m;
	m.first = a.rows();
	m.second = b.rows();
	std::size_t used = 0;
	const auto sigmas = witnessed_subsets(a, full_subset(a.num_rows()), budget, used);
	used = 0;
	for (const auto& sigma : sigmas) {
		const Subset w = row_witnesses(a, sigma);
		for (auto& tau : witnessed_subsets(b, w, budget, used)) {
			m.sigmas.push_back(sigma);
			m.taus.push_back(std::move(tau));
		}
	}
	return m;
}

PairPoset grothendieck_col_model(const Relation& a, const Relation& b, std::size_t budget) {
	require_composable(a, b);
	return grothendieck_row_model(transpose(b), transpose(a), budget);
}

BettiVector model_betti(const PairPoset& m, std::uint32_t p, int max_dim, std::size_t budget) {
	return betti(chain_faces(m.strict_order(), max_dim + 1, budget), p, max_dim);
}

DiagonalCellComplex diagonal_model_cells(const DiagonalModelSpec& spec) {
	const Relation& a = spec.a;
	const Relation& b = spec.b;
	require_composable(a, b);
	if (spec.n_max < 0 || spec.n_max > kDiagonalLevelCap) {
		throw ResourceError("diagonal oracle level " + std::to_string(spec.n_max) +
		                    " exceeds the cap of " + std::to_string(kDiagonalLevelCap));
	}
	if (a.num_rows() > kDiagonalSizeCap || a.num_cols() > kDiagonalSizeCap ||
	    b.num_cols() > kDiagonalSizeCap) {
		throw ResourceError("diagonal oracle accepts index sets of at most " +
		                    std::to_string(kDiagonalSizeCap) + " elements");
	}

	// All nonempty subsets with a witness, by brute force over bit masks.
	auto faces_of = [](const Relation& rel) {
		std::vector<Subset> out;
		for (std::uint32_t mask = 1; mask < (1u << rel.num_rows()); ++mask) {
			Subset s(rel.num_rows(), mask);
			if (row_witnesses(rel, s).any()) {
				out.push_back(s);
			}
		}
		return out;
	};
	const auto fa = faces_of(a);
	const auto fb = faces_of(b);

	using Step = std::pair<std::uint16_t, std::uint16_t>;
	using Chain = std::vector<Step>;
	std::vector<std::map<Chain, Index>> index(spec.n_max + 1);
	DiagonalCellComplex out;
	out.cells.resize(spec.n_max + 1);

	Chain chain;
	auto extend = [&](auto& self, const Subset& top_witnesses) -> void {
		const int n = static_cast<int>(chain.size()) - 1;
		auto& slot = index[n];
		slot.emplace(chain, static_cast<Index>(slot.size()));
		if (n == spec.n_max) {
			return;
		}
		const auto [si, ti] = chain.back();
		for (std::uint16_t s = 0; s < fa.size(); ++s) {
			if (!fa[s].is_subset_of(fa[si])) {
				continue;
			}
			for (std::uint16_t t = 0; t < fb.size(); ++t) {
				if ((s == si && t == ti) || !fb[ti].is_subset_of(fb[t]) ||
				    !fb[t].is_subset_of(top_witnesses)) {
					continue;
				}
				chain.emplace_back(s, t);
				self(self, top_witnesses);
				chain.pop_back();
			}
		}
	};
	for (std::uint16_t s = 0; s < fa.size(); ++s) {
		const Subset w = row_witnesses(a, fa[s]);
		for (std::uint16_t t = 0; t < fb.size(); ++t) {
			if (fb[t].is_subset_of(w)) {
				chain.assign(1, Step{s, t});
				extend(extend, w);
			}
		}
	}

	// map order is lexicographic on chains, which fixes the cell order
	for (int n = 0; n <= spec.n_max; ++n) {
		Index next = 0;
		for (auto& [c, id] : index[n]) {
			id = next++;
		}
		out.cells[n].resize(index[n].size());
	}
	for (int n = 1; n <= spec.n_max; ++n) {
		for (const auto& [c, id] : index[n]) {
			auto& cell = out.cells[n][id];
			for (int i = 0; i <= n; ++i) {
				Chain face = c;
				face.erase(face.begin() + i);
				bool degenerate = false;
				for (std::size_t t = 1; t < face.size(); ++t) {
					degenerate = degenerate || face[t] == face[t - 1];
				}
				if (degenerate) {
					continue;
				}
				const auto it = index[n - 1].find(face);
				if (it == index[n - 1].end()) {
					throw IntegrityError("diagonal cell has a face outside the model");
				}
				cell.boundary.emplace_back(it->second, i % 2 == 0 ? 1 : -1);
			}
		}
	}
	while (out.cells.size() > 1 && out.cells.back().empty()) {
		out.cells.pop_back();
	}
	return out;
}

ExtendedReport extended_duality_check(const Relation& a, const Relation& b, std::uint32_t p,
                                      int max_dim, bool oracle, std::size_t budget) {
	ExtendedReport r;
	const PairPoset row = grothendieck_row_model(a, b, budget);
	const PairPoset col = grothendieck_col_model(a, b, budget);
	r.row_elements = row.size();
	r.col_elements = col.size();
	r.row_model = model_betti(row, p, max_dim);
	r.col_model = model_betti(col, p, max_dim);
	r.equal = r.row_model == r.col_model;
	if (oracle) {
		r.oracle = betti_of_cells(diagonal_model_cells({a, b, max_dim + 1}), p, max_dim);
		r.oracle_agrees = *r.oracle == r.row_model;
	}
	return r;
}

CollapseReport collapse_check(const Relation& a, const Relation& b, std::uint32_t p, int max_dim,
                              std::size_t budget) {
	require_composable(a, b);
	CollapseReport r;
	std::size_t used = 0;
	r.all_certified = true;
	for (const auto& sigma : witnessed_subsets(a, full_subset(a.num_rows()), budget, used)) {
		FiberCertificate cert{sigma, std::nullopt};
		const Relation fiber =
		    restrict(b, row_witnesses(a, sigma), full_subset(b.num_cols()));
		const SimplicialComplex x = row_complex(fiber);
		if (const auto apex = cone_apex(x)) {
			cert.apex = a.cols().at(x.vertices().label(*apex));
		}
		r.all_certified = r.all_certified && cert.apex.has_value();
		r.fibers.push_back(std::move(cert));
	}
	r.model = model_betti(grothendieck_row_model(a, b, budget), p, max_dim);
	r.base = betti(row_complex(a), p, max_dim);
	r.equal = r.model == r.base;
	r.holds = !r.all_certified || r.equal;
	return r;
}

ModelMap induced_model_map(const RelationMorphism& a, const RelationMorphism& b,
                           const PairPoset& source, const PairPoset& target) {
	if (a.col_map != b.row_map) {
		throw InputError("morphisms disagree on the middle index set");
	}
	if (a.row_map.size() != source.first.size() || b.row_map.size() != source.second.size()) {
		throw InputError("morphism maps do not match the source model");
	}
	for (Index v : a.row_map) {
		if (v >= target.first.size()) {
			throw InputError("row map leaves the target model");
		}
	}
	for (Index v : b.row_map) {
		if (v >= target.second.size()) {
			throw InputError("middle map leaves the target model");
		}
	}
	ModelMap f;
	f.image.reserve(source.size());
	for (Index x = 0; x < source.size(); ++x) {
		const Subset s = image_of(source.sigmas[x], a.row_map, target.first.size());
		const Subset t = image_of(source.taus[x], b.row_map, target.second.size());
		const auto y = target.find(s, t);
		if (!y) {
			throw IntegrityError("image of " + source.label(x) + " is not in the target model");
		}
		f.image.push_back(*y);
	}
	for (Index x = 0; x < source.size(); ++x) {
		for (Index y = 0; y < source.size(); ++y) {
			if (source.leq(x, y) && !target.leq(f.image[x], f.image[y])) {
				throw IntegrityError("induced map is not monotone at " + source.label(x) + " <= " +
				                     source.label(y));
			}
		}
	}
	return f;
}

}  // namespace dowker
