#include "dowker/bifiltration.hpp"

#include "dowker/dowker.hpp"
#include "dowker/error.hpp"
#include "dowker/extended.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <ostream>
#include <thread>

namespace dowker {

namespace {

void require_levels(std::size_t k, std::size_t l) {
	if (k == 0 || l == 0) {
		throw InputError("levels k and l must be at least 1");
	}
}

void require_power_set(std::size_t n, std::size_t budget, const char* what) {
	if (n >= 63 || (std::uint64_t{1} << n) > budget) {
		throw ResourceError(std::string("the subsets of ") + what + " (2^" + std::to_string(n) +
		                    ") exceed the budget of " + std::to_string(budget));
	}
}

// Subsets of `universe` with at least `min_size` members, in subset_less order.
std::vector<Subset> subsets_at_least(const Subset& universe, std::size_t min_size) {
	std::vector<Subset> out;
	for (std::size_t sz = std::max<std::size_t>(min_size, 1); sz <= universe.count(); ++sz) {
		for_each_subset_of_size(universe, sz, [&](const Subset& s) { out.push_back(s); });
	}
	return out;
}

std::vector<std::string> encode_all(const IndexSet& base, const std::vector<Subset>& sets) {
	std::vector<std::string> labels;
	labels.reserve(sets.size());
	for (const auto& s : sets) {
		labels.push_back(base.encode(s));
	}
	return labels;
}

LevelRelation reduced_from_faces(const Relation& a, std::size_t k, std::size_t l,
                                 const std::vector<Subset>& faces_k, std::size_t budget) {
	LevelRelation out;
	out.base = a;
	out.k = k;
	out.l = l;
	std::vector<Subset> tops;
	std::uint64_t total = 0;
	for (const auto& s : faces_k) {
		if (s.count() >= l) {
			tops.push_back(s);
			total += s.count() >= 63 ? std::numeric_limits<std::uint64_t>::max() / 2
			                         : std::uint64_t{1} << s.count();
			if (total > budget) {
				throw ResourceError("level complex at (k,l)=(" + std::to_string(k) + "," +
				                    std::to_string(l) + ") exceeds the budget of " +
				                    std::to_string(budget) + " vertices");
			}
		}
	}
	for (const auto& s : tops) {
		auto part = subsets_at_least(s, l);
		out.row_sets.insert(out.row_sets.end(), part.begin(), part.end());
		out.col_sets.push_back(row_witnesses(a, s));
	}
	std::sort(out.row_sets.begin(), out.row_sets.end(), subset_less);
	out.row_sets.erase(std::unique(out.row_sets.begin(), out.row_sets.end()), out.row_sets.end());
	std::vector<Index> order(tops.size());
	for (Index c = 0; c < order.size(); ++c) {
		order[c] = c;
	}
	std::sort(order.begin(), order.end(),
	          [&](Index x, Index y) { return subset_less(out.col_sets[x], out.col_sets[y]); });
	std::vector<Subset> sorted_tops;
	std::vector<Subset> sorted_cols;
	for (Index c : order) {
		sorted_tops.push_back(tops[c]);
		sorted_cols.push_back(out.col_sets[c]);
	}
	out.col_sets = std::move(sorted_cols);

	out.derived = Relation(IndexSet(encode_all(a.rows(), out.row_sets)),
	                       IndexSet(encode_all(a.cols(), out.col_sets)));
	for (Index r = 0; r < out.row_sets.size(); ++r) {
		for (Index c = 0; c < sorted_tops.size(); ++c) {
			if (out.row_sets[r].is_subset_of(sorted_tops[c])) {
				out.derived.set(r, c);
			}
		}
	}
	return out;
}

std::string cell_name(std::size_t k, std::size_t l) {
	return "(k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

}  // namespace

LevelRelation level_relation(const Relation& a, std::size_t k, std::size_t l, std::size_t budget) {
	require_levels(k, l);
	require_power_set(a.num_rows(), budget, "rows");
	require_power_set(a.num_cols(), budget, "columns");
	LevelRelation out;
	out.base = a;
	out.k = k;
	out.l = l;
	out.row_sets = subsets_at_least(full_subset(a.num_rows()), l);
	out.col_sets = subsets_at_least(full_subset(a.num_cols()), k);
	out.derived = Relation(IndexSet(encode_all(a.rows(), out.row_sets)),
	                       IndexSet(encode_all(a.cols(), out.col_sets)));
	for (Index r = 0; r < out.row_sets.size(); ++r) {
		const Subset w = row_witnesses(a, out.row_sets[r]);
		for (Index c = 0; c < out.col_sets.size(); ++c) {
			if (out.col_sets[c].is_subset_of(w)) {
				out.derived.set(r, c);
			}
		}
	}
	return out;
}

LevelRelation reduced_level_relation(const Relation& a, std::size_t k, std::size_t l,
                                     std::size_t budget) {
	require_levels(k, l);
	return reduced_from_faces(a, k, l, sublevel_maximal_faces(a, k, budget), budget);
}

SimplicialComplex level_complex(const Relation& a, std::size_t k, std::size_t l,
                                std::size_t budget) {
	return row_complex(reduced_level_relation(a, k, l, budget).derived);
}

BettiVector level_betti(const Relation& a, std::size_t k, std::size_t l, std::uint32_t p,
                        int max_dim, std::size_t budget) {
	return betti_via_smaller_side(reduced_level_relation(a, k, l, budget).derived, p, max_dim,
	                              false, budget);
}

bool levels_nested(const std::vector<Subset>& faces_k, std::size_t l,
                   const std::vector<Subset>& faces_k2, std::size_t l2) {
	for (const auto& s : faces_k) {
		if (s.count() < l) {
			continue;
		}
		const bool inside = std::any_of(faces_k2.begin(), faces_k2.end(), [&](const Subset& t) {
			return t.count() >= l2 && s.is_subset_of(t);
		});
		if (!inside) {
			return false;
		}
	}
	return true;
}

std::optional<std::size_t> BigradedBettiTable::value(int dim, std::size_t k, std::size_t l) const {
	const auto& c = cell(k, l);
	if (!c.betti || dim < 0 || static_cast<std::size_t>(dim) >= c.betti->size()) {
		return std::nullopt;
	}
	return (*c.betti)[dim];
}

BigradedBettiTable bigraded_betti(const Relation& a, std::size_t k_max, std::size_t l_max,
                                  std::uint32_t p, int max_dim, std::size_t budget,
                                  unsigned threads) {
	require_prime(p);
	if (max_dim < 0) {
		throw InputError("max_dim must be nonnegative");
	}
	BigradedBettiTable t;
	t.p = p;
	t.k_max = k_max;
	t.l_max = l_max;
	t.max_dim = max_dim;
	t.cells.resize(k_max * l_max);

	std::vector<std::optional<std::vector<Subset>>> faces(k_max + 1);
	std::vector<std::string> face_error(k_max + 1);
	for (std::size_t k = 1; k <= k_max; ++k) {
		try {
			faces[k] = sublevel_maximal_faces(a, k, budget);
		} catch (const ResourceError& e) {
			face_error[k] = e.what();
		}
	}

	auto compute = [&](std::size_t idx) {
		const std::size_t k = idx / l_max + 1;
		const std::size_t l = idx % l_max + 1;
		auto& c = t.cells[idx];
		c.k = k;
		c.l = l;
		if (!faces[k]) {
			c.skipped_reason = cell_name(k, l) + ": " + face_error[k];
			return;
		}
		try {
			const auto lr = reduced_from_faces(a, k, l, *faces[k], budget);
			c.betti = betti_via_smaller_side(lr.derived, p, max_dim, false, budget);
		} catch (const ResourceError& e) {
			c.skipped_reason = cell_name(k, l) + ": " + e.what();
		}
	};
	if (threads == 0) {
		threads = std::max(1u, std::thread::hardware_concurrency());
	}
	threads = static_cast<unsigned>(std::min<std::size_t>(threads, t.cells.size()));
	if (threads <= 1) {
		for (std::size_t i = 0; i < t.cells.size(); ++i) {
			compute(i);
		}
	} else {
		std::atomic<std::size_t> next{0};
		std::vector<std::thread> pool;
		for (unsigned w = 0; w < threads; ++w) {
			pool.emplace_back([&] {
				for (std::size_t i = next++; i < t.cells.size(); i = next++) {
					compute(i);
				}
			});
		}
		for (auto& th : pool) {
			th.join();
		}
	}

	for (std::size_t k = 1; k <= k_max; ++k) {
		for (std::size_t l = 1; l <= l_max; ++l) {
			if (!faces[k]) {
				continue;
			}
			const bool down_k = k == 1 || !faces[k - 1] || levels_nested(*faces[k], l, *faces[k - 1], l);
			const bool down_l = l == 1 || levels_nested(*faces[k], l, *faces[k], l - 1);
			if (!down_k || !down_l) {
				throw IntegrityError("level complexes are not nested at " + cell_name(k, l));
			}
		}
	}
	return t;
}

void write_bigraded_csv(std::ostream& out, const BigradedBettiTable& t) {
	out << "dim,k,l,betti\n";
	for (int d = 0; d <= t.max_dim; ++d) {
		for (std::size_t k = 1; k <= t.k_max; ++k) {
			for (std::size_t l = 1; l <= t.l_max; ++l) {
				out << d << ',' << k << ',' << l << ',';
				if (const auto v = t.value(d, k, l)) {
					out << *v << '\n';
				} else {
					out << "SKIPPED(budget)\n";
				}
			}
		}
	}
}

RecoveryReport boundary_recovery_check(const Relation& a, std::uint32_t p, int max_dim,
                                       std::size_t budget) {
	RecoveryReport r;
	auto add = [&](char axis, std::size_t level, BettiVector bif, BettiVector fil) {
		RecoveryRow row{axis, level, std::move(bif), std::move(fil), false};
		row.equal = row.bifiltration == row.filtration;
		r.ok = r.ok && row.equal;
		r.rows.push_back(std::move(row));
	};
	for (std::size_t k = 1; k <= a.num_cols(); ++k) {
		const auto lr = level_relation(a, k, 1, budget);
		add('k', k, betti_via_smaller_side(lr.derived, p, max_dim, false, budget),
		    betti(sublevel_complex(a, Side::Row, k, budget), p, max_dim, budget));
	}
	for (std::size_t l = 1; l <= a.num_rows(); ++l) {
		const auto lr = level_relation(a, 1, l, budget);
		add('l', l, betti_via_smaller_side(lr.derived, p, max_dim, false, budget),
		    betti(sublevel_complex(a, Side::Column, l, budget), p, max_dim, budget));
	}
	return r;
}

std::string to_string(Convention c) {
	return c == Convention::FirstStep ? "first-step" : "literal";
}

Convention parse_convention(const std::string& text) {
	if (text == "first-step") {
		return Convention::FirstStep;
	}
	if (text == "literal") {
		return Convention::Literal;
	}
	throw InputError("unknown convention '" + text + "' (expected first-step or literal)");
}

ApplicationReport theorem_application_experiment(const Relation& a, std::size_t k, std::size_t l,
                                                 Convention convention, std::uint32_t p,
                                                 int max_dim, std::size_t budget) {
	require_levels(k, l);
	ApplicationReport r;
	r.convention = convention;
	r.k = k;
	r.l = l;
	r.level = level_betti(a, k, l, p, max_dim, budget);

	Relation first;
	Relation second;
	if (convention == Convention::FirstStep) {
		first = level_relation(a, k, l, budget).derived;
		second = transpose(level_relation(a, k, 1, budget).derived);
	} else {
		if (k != 1) {
			std::uint64_t jk = 0;
			for (std::size_t s = k; s <= a.num_cols(); ++s) {
				jk += binomial(a.num_cols(), s);
			}
			throw InputError("convention literal is not composable: middle sets J_1 (" +
			                 std::to_string((std::uint64_t{1} << a.num_cols()) - 1) +
			                 " subsets) and J_" + std::to_string(k) + " (" + std::to_string(jk) +
			                 " subsets) differ");
		}
		first = level_relation(a, 1, l, budget).derived;
		second = transpose(level_relation(a, k, l, budget).derived);
	}
	r.model = model_betti(grothendieck_row_model(first, second, kDefaultPosetBudget), p, max_dim,
	                      budget);
	r.equal = r.level == r.model;
	return r;
}

}  // namespace dowker
