#include "dowker/synth.hpp"

#include "dowker/error.hpp"

#include <algorithm>
#include <random>

namespace dowker {

namespace {

using Interval = std::pair<Rational, Rational>;

std::vector<Interval> pieces(const Arc& arc) {
	const Rational lo = frac(arc.start);
	const Rational hi = lo + arc.length;
	if (hi <= Rational(1)) {
		return {{lo, hi}};
	}
	return {{Rational(0), hi - 1}, {lo, Rational(1)}};
}

std::vector<Interval> merge(std::vector<Interval> v) {
	std::sort(v.begin(), v.end());
	std::vector<Interval> out;
	for (const auto& iv : v) {
		if (!out.empty() && out.back().second >= iv.first) {
			out.back().second = std::max(out.back().second, iv.second);
		} else {
			out.push_back(iv);
		}
	}
	return out;
}

bool all_digits(const std::string& s) {
	return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

long long parse_integer(const std::string& s, const std::string& whole) {
	std::string digits = s;
	bool negative = false;
	if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
		negative = digits[0] == '-';
		digits.erase(0, 1);
	}
	if (!all_digits(digits) || digits.size() > 17) {
		throw InputError("'" + whole + "' is not a rational number");
	}
	const long long v = std::stoll(digits);
	return negative ? -v : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
	if (const auto slash = text.find('/'); slash != std::string::npos) {
		const long long den = parse_integer(text.substr(slash + 1), text);
		if (den == 0) {
			throw InputError("'" + text + "' has a zero denominator");
		}
		return Rational(parse_integer(text.substr(0, slash), text), den);
	}
	if (const auto dot = text.find('.'); dot != std::string::npos) {
		const std::string frac_digits = text.substr(dot + 1);
		if (!all_digits(frac_digits) || frac_digits.size() > 15) {
			throw InputError("'" + text + "' is not a rational number");
		}
		long long scale = 1;
		for (std::size_t i = 0; i < frac_digits.size(); ++i) {
			scale *= 10;
		}
		const std::string head = text.substr(0, dot);
		const bool negative = !head.empty() && head[0] == '-';
		const long long whole = head.empty() || head == "-" || head == "+" ? 0 : parse_integer(head, text);
		const Rational magnitude = Rational(negative ? -whole : whole) +
		                           Rational(std::stoll(frac_digits), scale);
		return negative ? -magnitude : magnitude;
	}
	return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& r) {
	if (r.denominator() == 1) {
		return std::to_string(r.numerator());
	}
	return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational frac(const Rational& x) {
	const long long n = x.numerator();
	const long long d = x.denominator();
	long long r = n % d;
	if (r < 0) {
		r += d;
	}
	return Rational(r, d);
}

ArcCover circle_cover(std::size_t n_arcs, const Rational& length, const Rational& phase) {
	if (n_arcs == 0) {
		throw InputError("a cover needs at least one arc");
	}
	if (length <= Rational(0) || length >= Rational(1)) {
		throw InputError("arc length " + to_string(length) + " is not in (0,1)");
	}
	ArcCover u;
	for (std::size_t i = 0; i < n_arcs; ++i) {
		const Rational center = Rational(static_cast<long long>(i), static_cast<long long>(n_arcs)) + phase;
		u.arcs.push_back({frac(center - length / 2), length});
	}
	return u;
}

SamplePoints equispaced_points(std::size_t n, std::optional<std::uint64_t> seed) {
	SamplePoints s;
	std::mt19937_64 rng(seed.value_or(0));
	for (std::size_t i = 0; i < n; ++i) {
		Rational x(static_cast<long long>(i), static_cast<long long>(n));
		if (seed) {
			const auto step = static_cast<long long>(rng() % 1000);
			x += Rational(step, 2000 * static_cast<long long>(n));
		}
		s.points.push_back(x);
	}
	return s;
}

std::vector<std::pair<Rational, Rational>> arc_intersection(const std::vector<Arc>& arcs) {
	std::vector<Interval> current{{Rational(0), Rational(1)}};
	for (const auto& arc : arcs) {
		std::vector<Interval> next;
		for (const auto& a : current) {
			for (const auto& b : pieces(arc)) {
				const Rational lo = std::max(a.first, b.first);
				const Rational hi = std::min(a.second, b.second);
				if (lo < hi) {
					next.emplace_back(lo, hi);
				}
			}
		}
		current = merge(std::move(next));
		if (current.empty()) {
			break;
		}
	}
	return current;
}

std::size_t intersection_components(const std::vector<Arc>& arcs) {
	const auto iv = arc_intersection(arcs);
	if (iv.size() >= 2 && iv.front().first == Rational(0) && iv.back().second == Rational(1)) {
		return iv.size() - 1;
	}
	return iv.size();
}

std::size_t fold_number(const ArcCover& u) {
	if (u.arcs.empty()) {
		return 0;
	}
	std::vector<Rational> ends;
	for (const auto& arc : u.arcs) {
		ends.push_back(frac(arc.start));
		ends.push_back(frac(arc.start + arc.length));
	}
	std::sort(ends.begin(), ends.end());
	ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
	std::vector<Rational> probes = ends;
	for (std::size_t i = 0; i < ends.size(); ++i) {
		const Rational next = i + 1 < ends.size() ? ends[i + 1] : ends.front() + 1;
		probes.push_back(frac((ends[i] + next) / 2));
	}
	std::size_t fold = u.arcs.size();
	for (const auto& x : probes) {
		std::size_t m = 0;
		for (const auto& arc : u.arcs) {
			const Rational d = frac(x - arc.start);
			m += d > Rational(0) && d < arc.length;
		}
		fold = std::min(fold, m);
	}
	return fold;
}

std::size_t goodness_threshold(const ArcCover& u) {
	std::size_t worst = 0;
	std::vector<Arc> chosen;
	auto dfs = [&](auto& self, std::size_t next) -> void {
		for (std::size_t i = next; i < u.arcs.size(); ++i) {
			chosen.push_back(u.arcs[i]);
			const auto comps = intersection_components(chosen);
			if (comps >= 2) {
				worst = std::max(worst, chosen.size());
			}
			if (comps > 0) {
				self(self, i + 1);
			}
			chosen.pop_back();
		}
	};
	dfs(dfs, 0);
	return worst + 1;
}

Relation cover_point_relation(const ArcCover& u, const SamplePoints& pts) {
	Relation a(IndexSet::numbered(u.size(), "U"), IndexSet::numbered(pts.size(), "x"));
	for (Index i = 0; i < u.size(); ++i) {
		for (Index j = 0; j < pts.size(); ++j) {
			if (u.arcs[i].contains(pts.points[j])) {
				a.set(i, j);
			}
		}
	}
	return a;
}

Relation cover_cover_relation(const ArcCover& u, const ArcCover& v) {
	Relation a(IndexSet::numbered(u.size(), "U"), IndexSet::numbered(v.size(), "V"));
	for (Index i = 0; i < u.size(); ++i) {
		for (Index j = 0; j < v.size(); ++j) {
			if (!arc_intersection({u.arcs[i], v.arcs[j]}).empty()) {
				a.set(i, j);
			}
		}
	}
	return a;
}

RecParameters rec_parameters(const ArcCover& u, const ArcCover& v, std::size_t max_subsets) {
	if (u.size() >= 63 || (std::uint64_t{1} << u.size()) > max_subsets) {
		throw ResourceError("rec_parameters scans 2^" + std::to_string(u.size()) +
		                    " subsets, above the cap of " + std::to_string(max_subsets));
	}
	const Relation a = cover_cover_relation(u, v);
	RecParameters r;
	bool have_q = false;
	for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << u.size()); ++mask) {
		Subset sigma(u.size(), mask);
		std::vector<Arc> arcs;
		for (Index i : members(sigma)) {
			arcs.push_back(u.arcs[i]);
		}
		const std::size_t w = row_witnesses(a, sigma).count();
		if (arc_intersection(arcs).empty()) {
			r.p = std::max(r.p, w);
		} else if (!have_q || w < r.q) {
			r.q = w;
			have_q = true;
		}
	}
	return r;
}

}  // namespace dowker
