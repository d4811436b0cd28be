#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dowker {

using Index = std::uint32_t;

/// Subset of a finite index set, one bit per element in index order.
using Subset = boost::dynamic_bitset<std::uint64_t>;

inline Subset empty_subset(std::size_t width) { return Subset(width); }

inline Subset full_subset(std::size_t width) {
	Subset s(width);
	s.set();
	return s;
}

Subset subset_of(std::size_t width, const std::vector<Index>& members);

/// Members in increasing index order.
std::vector<Index> members(const Subset& s);

/// Total order used for every deterministic listing of subsets: by
/// cardinality, then lexicographically on the sorted member lists.
bool subset_less(const Subset& a, const Subset& b);

/// Keeps only inclusion-maximal, pairwise distinct sets, sorted by subset_less.
std::vector<Subset> maximal_elements(std::vector<Subset> sets);

/// Drops empty sets before taking maximal elements.
std::vector<Subset> maximal_nonempty(std::vector<Subset> sets);

/// Calls f(s) for every subset of `universe` with exactly `size` members.
template <class F>
void for_each_subset_of_size(const Subset& universe, std::size_t size, F&& f) {
	const auto elems = members(universe);
	if (size > elems.size()) {
		return;
	}
	std::vector<std::size_t> pick(size);
	for (std::size_t i = 0; i < size; ++i) {
		pick[i] = i;
	}
	Subset current(universe.size());
	while (true) {
		current.reset();
		for (auto p : pick) {
			current.set(elems[p]);
		}
		f(static_cast<const Subset&>(current));
		// advance to the next combination in lexicographic order
		std::size_t i = size;
		while (i > 0 && pick[i - 1] == elems.size() - size + i - 1) {
			--i;
		}
		if (i == 0) {
			return;
		}
		++pick[i - 1];
		for (std::size_t j = i; j < size; ++j) {
			pick[j] = pick[j - 1] + 1;
		}
	}
}

/// Binomial coefficient saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace dowker
