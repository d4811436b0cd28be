#include "dowker/subset.hpp"

#include <algorithm>
#include <limits>

namespace dowker {

Subset subset_of(std::size_t width, const std::vector<Index>& members) {
	Subset s(width);
	for (auto m : members) {
		s.set(m);
	}
	return s;
}

std::vector<Index> members(const Subset& s) {
	std::vector<Index> out;
	out.reserve(s.count());
	for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
		out.push_back(static_cast<Index>(i));
	}
	return out;
}

bool subset_less(const Subset& a, const Subset& b) {
	const auto ca = a.count();
	const auto cb = b.count();
	if (ca != cb) {
		return ca < cb;
	}
	auto i = a.find_first();
	auto j = b.find_first();
	while (i != Subset::npos && j != Subset::npos) {
		if (i != j) {
			return i < j;
		}
		i = a.find_next(i);
		j = b.find_next(j);
	}
	return false;
}

std::vector<Subset> maximal_elements(std::vector<Subset> sets) {
	// Larger sets first so that every candidate is only compared against
	// already accepted (hence not smaller) sets.
	std::sort(sets.begin(), sets.end(), [](const Subset& a, const Subset& b) { return subset_less(b, a); });
	sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
	std::vector<Subset> kept;
	for (auto& s : sets) {
		bool dominated = false;
		for (const auto& k : kept) {
			if (s.is_subset_of(k)) {
				dominated = true;
				break;
			}
		}
		if (!dominated) {
			kept.push_back(std::move(s));
		}
	}
	std::sort(kept.begin(), kept.end(), subset_less);
	return kept;
}

std::vector<Subset> maximal_nonempty(std::vector<Subset> sets) {
	std::erase_if(sets, [](const Subset& s) { return s.none(); });
	return maximal_elements(std::move(sets));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
	if (k > n) {
		return 0;
	}
	k = std::min(k, n - k);
	unsigned __int128 r = 1;
	for (std::uint64_t i = 1; i <= k; ++i) {
		r = r * (n - k + i) / i;
		if (r > std::numeric_limits<std::uint64_t>::max()) {
			return std::numeric_limits<std::uint64_t>::max();
		}
	}
	return static_cast<std::uint64_t>(r);
}

}  // namespace dowker
