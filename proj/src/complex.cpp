#include "dowker/complex.hpp"

#include "dowker/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace dowker {

std::size_t default_face_budget() {
	if (const char* env = std::getenv("DOWKER_BUDGET_FACES")) {
		char* end = nullptr;
		const auto v = std::strtoull(env, &end, 10);
		if (end != env && *end == '\0' && v > 0) {
			return static_cast<std::size_t>(v);
		}
	}
	return kDefaultFaceBudget;
}

namespace {

[[noreturn]] void budget_exceeded(std::size_t budget, const std::string& what) {
	throw ResourceError("face budget " + std::to_string(budget) + " exceeded (" + what + ")");
}

}  // namespace

// ---- FaceTable -------------------------------------------------------------------

void FaceTable::push(std::span<const Index> face) {
	verts_.insert(verts_.end(), face.begin(), face.end());
}

void FaceTable::finalize() {
	const auto w = width();
	const auto n = size();
	std::vector<std::size_t> order(n);
	for (std::size_t i = 0; i < n; ++i) {
		order[i] = i;
	}
	auto face = [&](std::size_t i) { return std::span<const Index>(verts_.data() + i * w, w); };
	auto less = [&](std::size_t a, std::size_t b) {
		auto fa = face(a);
		auto fb = face(b);
		return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
	};
	std::sort(order.begin(), order.end(), less);
	std::vector<Index> sorted;
	sorted.reserve(verts_.size());
	for (std::size_t k = 0; k < n; ++k) {
		auto f = face(order[k]);
		if (k > 0 && std::equal(f.begin(), f.end(), face(order[k - 1]).begin())) {
			continue;
		}
		sorted.insert(sorted.end(), f.begin(), f.end());
	}
	verts_ = std::move(sorted);
}

std::optional<std::size_t> FaceTable::find(std::span<const Index> face) const {
	std::size_t lo = 0;
	std::size_t hi = size();
	while (lo < hi) {
		const auto mid = (lo + hi) / 2;
		auto f = (*this)[mid];
		if (std::lexicographical_compare(f.begin(), f.end(), face.begin(), face.end())) {
			lo = mid + 1;
		} else {
			hi = mid;
		}
	}
	if (lo < size()) {
		auto f = (*this)[lo];
		if (std::equal(f.begin(), f.end(), face.begin(), face.end())) {
			return lo;
		}
	}
	return std::nullopt;
}

std::size_t GradedFaces::total() const {
	std::size_t n = 0;
	for (const auto& t : by_dim) {
		n += t.size();
	}
	return n;
}

// ---- SimplicialComplex ---------------------------------------------------------------

int SimplicialComplex::dimension() const {
	int d = -1;
	for (const auto& f : maximal_) {
		d = std::max(d, static_cast<int>(f.count()) - 1);
	}
	return d;
}

bool SimplicialComplex::contains(const Subset& face) const {
	return std::any_of(maximal_.begin(), maximal_.end(),
	                   [&](const Subset& m) { return face.is_subset_of(m); });
}

bool SimplicialComplex::contains(const std::vector<std::string>& labels) const {
	Subset s(vertices_.size());
	for (const auto& l : labels) {
		auto i = vertices_.find(l);
		if (!i) {
			return false;
		}
		s.set(*i);
	}
	return s.none() || contains(s);
}

Relation SimplicialComplex::incidence() const {
	Relation r(vertices_, IndexSet::numbered(maximal_.size(), "F"));
	for (Index f = 0; f < maximal_.size(); ++f) {
		for (auto v : members(maximal_[f])) {
			r.set(v, f);
		}
	}
	return r;
}

SimplicialComplex from_maximal_faces(IndexSet vertices, std::vector<Subset> faces) {
	for (const auto& f : faces) {
		if (f.size() != vertices.size()) {
			throw InputError("face width does not match the vertex set");
		}
	}
	auto maximal = maximal_nonempty(std::move(faces));
	Subset used(vertices.size());
	for (const auto& f : maximal) {
		used |= f;
	}
	SimplicialComplex x;
	if (used.count() == vertices.size()) {
		x.vertices_ = std::move(vertices);
		x.maximal_ = std::move(maximal);
		return x;
	}
	const auto kept = members(used);
	std::vector<std::string> labels;
	std::vector<Index> remap(vertices.size(), 0);
	for (Index k = 0; k < kept.size(); ++k) {
		labels.push_back(vertices.label(kept[k]));
		remap[kept[k]] = k;
	}
	std::vector<Subset> reindexed;
	for (const auto& f : maximal) {
		Subset g(kept.size());
		for (auto v : members(f)) {
			g.set(remap[v]);
		}
		reindexed.push_back(std::move(g));
	}
	x.vertices_ = IndexSet(std::move(labels));
	x.maximal_ = maximal_elements(std::move(reindexed));
	return x;
}

SimplicialComplex from_maximal_faces(const IndexSet& vertices,
                                     const std::vector<std::vector<std::string>>& faces) {
	std::vector<Subset> sets;
	for (const auto& f : faces) {
		if (f.empty()) {
			throw InputError("empty face");
		}
		sets.push_back(vertices.subset(f));
	}
	return from_maximal_faces(vertices, std::move(sets));
}

GradedFaces enumerate_faces(const SimplicialComplex& x, int max_dim, std::size_t budget) {
	if (max_dim < 0) {
		throw InputError("max_dim must be nonnegative");
	}
	GradedFaces out;
	const int top = std::min(max_dim, x.dimension());
	std::size_t total = 0;
	for (int d = 0; d <= top; ++d) {
		FaceTable table(d);
		std::size_t raw = 0;
		for (const auto& m : x.maximal_faces()) {
			const auto c = binomial(m.count(), static_cast<std::uint64_t>(d) + 1);
			if (c > budget) {
				budget_exceeded(budget, "dimension " + std::to_string(d));
			}
			for_each_subset_of_size(m, static_cast<std::size_t>(d) + 1, [&](const Subset& s) {
				const auto v = members(s);
				table.push(v);
			});
			raw += c;
			if (raw > budget) {
				table.finalize();
				raw = table.size();
				if (total + raw > budget) {
					budget_exceeded(budget, "dimension " + std::to_string(d));
				}
			}
		}
		table.finalize();
		total += table.size();
		if (total > budget) {
			budget_exceeded(budget, "dimension " + std::to_string(d));
		}
		out.by_dim.push_back(std::move(table));
	}
	return out;
}

std::optional<Index> cone_apex(const SimplicialComplex& x) {
	if (x.empty()) {
		return std::nullopt;
	}
	Subset common = full_subset(x.vertices().size());
	for (const auto& f : x.maximal_faces()) {
		common &= f;
	}
	const auto first = common.find_first();
	if (first == Subset::npos) {
		return std::nullopt;
	}
	return static_cast<Index>(first);
}

bool is_subcomplex(const SimplicialComplex& x, const SimplicialComplex& y) {
	for (const auto& f : x.maximal_faces()) {
		if (!y.contains(x.vertices().labels_of(f))) {
			return false;
		}
	}
	return true;
}

void write_complex(std::ostream& out, const SimplicialComplex& x) {
	for (const auto& f : x.maximal_faces()) {
		bool first = true;
		for (const auto& l : x.vertices().labels_of(f)) {
			out << (first ? "" : " ") << l;
			first = false;
		}
		out << '\n';
	}
}

SimplicialComplex read_complex(std::istream& in) {
	std::vector<std::string> labels;
	std::unordered_map<std::string, Index> index;
	std::vector<std::vector<Index>> faces;
	std::string line;
	while (std::getline(in, line)) {
		std::istringstream tokens(line);
		std::vector<Index> face;
		std::string tok;
		while (tokens >> tok) {
			if (face.empty() && tok.front() == '#') {
				break;
			}
			auto [it, fresh] = index.emplace(tok, static_cast<Index>(labels.size()));
			if (fresh) {
				labels.push_back(tok);
			}
			face.push_back(it->second);
		}
		if (!face.empty()) {
			faces.push_back(std::move(face));
		}
	}
	std::vector<Subset> sets;
	for (const auto& f : faces) {
		sets.push_back(subset_of(labels.size(), f));
	}
	return from_maximal_faces(IndexSet(std::move(labels)), std::move(sets));
}

// ---- Posets ------------------------------------------------------------------------

Poset::Poset(IndexSet elements, std::vector<Subset> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
	const auto n = elements_.size();
	if (leq_.size() != n) {
		throw InputError("order matrix has wrong number of rows");
	}
	for (Index x = 0; x < n; ++x) {
		if (leq_[x].size() != n) {
			throw InputError("order matrix has wrong row width");
		}
		if (!leq_[x].test(x)) {
			throw InputError("order is not reflexive at '" + elements_.label(x) + "'");
		}
	}
	for (Index x = 0; x < n; ++x) {
		for (auto y : members(leq_[x])) {
			if (y != x && leq_[y].test(x)) {
				throw InputError("order is not antisymmetric on '" + elements_.label(x) + "', '" +
				                 elements_.label(y) + "'");
			}
			if (!leq_[y].is_subset_of(leq_[x])) {
				throw InputError("order is not transitive through '" + elements_.label(y) + "'");
			}
		}
	}
}

Poset face_poset(const SimplicialComplex& x, std::size_t budget) {
	const auto faces = enumerate_faces(x, std::max(x.dimension(), 0), budget);
	std::vector<Subset> sets;
	for (const auto& table : faces.by_dim) {
		for (std::size_t i = 0; i < table.size(); ++i) {
			auto f = table[i];
			sets.push_back(subset_of(x.vertices().size(), std::vector<Index>(f.begin(), f.end())));
		}
	}
	const auto n = sets.size();
	if (n > 0 && n * n / 64 > budget) {
		budget_exceeded(budget, "face poset order matrix");
	}
	std::vector<std::string> labels;
	std::vector<Subset> leq(n, Subset(n));
	for (Index a = 0; a < n; ++a) {
		labels.push_back(x.vertices().encode(sets[a]));
		for (Index b = 0; b < n; ++b) {
			if (sets[a].is_subset_of(sets[b])) {
				leq[a].set(b);
			}
		}
	}
	return Poset(IndexSet(std::move(labels)), std::move(leq));
}

StrictOrder strict_order(const Poset& p) {
	StrictOrder succ(p.size());
	for (Index x = 0; x < p.size(); ++x) {
		for (auto y : members(p.up_set(x))) {
			if (y != x) {
				succ[x].push_back(y);
			}
		}
	}
	return succ;
}

SimplicialComplex order_complex(const Poset& p, std::size_t budget) {
	const auto n = p.size();
	// covering relation: y covers x iff x < y with nothing strictly between
	std::vector<std::vector<Index>> covers(n);
	std::vector<bool> minimal(n, true);
	for (Index x = 0; x < n; ++x) {
		for (auto y : members(p.up_set(x))) {
			if (y == x) {
				continue;
			}
			minimal[y] = false;
			bool between = false;
			for (auto z : members(p.up_set(x))) {
				if (z != x && z != y && p.leq(z, y)) {
					between = true;
					break;
				}
			}
			if (!between) {
				covers[x].push_back(y);
			}
		}
	}
	std::vector<Subset> chains;
	Subset current(n);
	auto walk = [&](auto&& self, Index x) -> void {
		current.set(x);
		if (covers[x].empty()) {
			if (chains.size() >= budget) {
				budget_exceeded(budget, "maximal chains");
			}
			chains.push_back(current);
		}
		for (auto y : covers[x]) {
			self(self, y);
		}
		current.reset(x);
	};
	for (Index x = 0; x < n; ++x) {
		if (minimal[x]) {
			walk(walk, x);
		}
	}
	return from_maximal_faces(p.elements(), std::move(chains));
}

GradedFaces chain_faces(const StrictOrder& order, int max_dim, std::size_t budget) {
	if (max_dim < 0) {
		throw InputError("max_dim must be nonnegative");
	}
	GradedFaces out;
	for (int d = 0; d <= max_dim; ++d) {
		out.by_dim.emplace_back(d);
	}
	std::size_t total = 0;
	std::vector<Index> chain;
	std::vector<Index> sorted;
	auto walk = [&](auto&& self, Index x) -> void {
		chain.push_back(x);
		if (++total > budget) {
			budget_exceeded(budget, "chains");
		}
		sorted = chain;
		std::sort(sorted.begin(), sorted.end());
		out.by_dim[chain.size() - 1].push(sorted);
		if (static_cast<int>(chain.size()) <= max_dim) {
			for (auto y : order[x]) {
				self(self, y);
			}
		}
		chain.pop_back();
	};
	for (Index x = 0; x < order.size(); ++x) {
		walk(walk, x);
	}
	for (auto& t : out.by_dim) {
		t.finalize();
	}
	while (!out.by_dim.empty() && out.by_dim.back().empty()) {
		out.by_dim.pop_back();
	}
	return out;
}

std::optional<Index> poset_maximum(const Poset& p) {
	for (Index x = 0; x < p.size(); ++x) {
		bool top = true;
		for (Index y = 0; y < p.size() && top; ++y) {
			top = p.leq(y, x);
		}
		if (top) {
			return x;
		}
	}
	return std::nullopt;
}

std::optional<Index> poset_minimum(const Poset& p) {
	for (Index x = 0; x < p.size(); ++x) {
		if (p.up_set(x).count() == p.size()) {
			return x;
		}
	}
	return std::nullopt;
}

// ---- Covers ------------------------------------------------------------------------

Cover::Cover(SimplicialComplex ambient, IndexSet part_labels, std::vector<std::vector<Subset>> parts)
    : ambient_(std::move(ambient)), labels_(std::move(part_labels)), parts_(std::move(parts)) {
	if (labels_.size() != parts_.size()) {
		throw InputError("cover has " + std::to_string(parts_.size()) + " parts but " +
		                 std::to_string(labels_.size()) + " labels");
	}
	const auto width = ambient_.vertices().size();
	for (Index i = 0; i < parts_.size(); ++i) {
		for (const auto& f : parts_[i]) {
			if (f.size() != width || !ambient_.contains(f)) {
				throw InputError("part '" + labels_.label(i) + "' is not a subcomplex of the ambient complex");
			}
		}
		parts_[i] = maximal_nonempty(std::move(parts_[i]));
	}
	for (const auto& m : ambient_.maximal_faces()) {
		bool covered = false;
		for (const auto& part : parts_) {
			for (const auto& f : part) {
				if (m.is_subset_of(f)) {
					covered = true;
					break;
				}
			}
			if (covered) {
				break;
			}
		}
		if (!covered) {
			throw InputError("parts do not cover the face {" + ambient_.vertices().encode(m) + "}");
		}
	}
}

std::vector<Subset> Cover::intersection(const Subset& selection) const {
	auto idx = members(selection);
	if (idx.empty()) {
		return ambient_.maximal_faces();
	}
	std::vector<Subset> current = parts_[idx[0]];
	for (std::size_t k = 1; k < idx.size() && !current.empty(); ++k) {
		std::vector<Subset> next;
		for (const auto& f : current) {
			for (const auto& g : parts_[idx[k]]) {
				next.push_back(f & g);
			}
		}
		current = maximal_nonempty(std::move(next));
	}
	return current;
}

Cover maximal_face_cover(const SimplicialComplex& x) {
	std::vector<std::vector<Subset>> parts;
	for (const auto& f : x.maximal_faces()) {
		parts.push_back({f});
	}
	auto labels = IndexSet::numbered(parts.size(), "F");
	return Cover(x, std::move(labels), std::move(parts));
}

SimplicialComplex nerve_of_cover(const Cover& c, std::size_t budget) {
	const auto n = c.size();
	std::vector<Subset> faces;
	Subset selection(n);
	auto walk = [&](auto&& self, Index from, const std::vector<Subset>& current) -> void {
		for (Index j = from; j < n; ++j) {
			selection.set(j);
			std::vector<Subset> next;
			if (selection.count() == 1) {
				next = c.part(j);
			} else {
				for (const auto& f : current) {
					for (const auto& g : c.part(j)) {
						next.push_back(f & g);
					}
				}
				next = maximal_nonempty(std::move(next));
			}
			if (!next.empty()) {
				if (faces.size() >= budget) {
					budget_exceeded(budget, "nerve faces");
				}
				faces.push_back(selection);
				self(self, j + 1, next);
			}
			selection.reset(j);
		}
	};
	walk(walk, 0, {});
	return from_maximal_faces(c.part_labels(), std::move(faces));
}

std::map<std::vector<Index>, OverlapCertificate> goodness_certificate(const Cover& c,
                                                                      std::size_t size_cap) {
	std::map<std::vector<Index>, OverlapCertificate> out;
	const auto n = c.size();
	std::vector<Index> selection;
	auto walk = [&](auto&& self, Index from, const std::vector<Subset>& current) -> void {
		for (Index j = from; j < n; ++j) {
			selection.push_back(j);
			std::vector<Subset> next;
			if (selection.size() == 1) {
				next = c.part(j);
			} else {
				for (const auto& f : current) {
					for (const auto& g : c.part(j)) {
						next.push_back(f & g);
					}
				}
				next = maximal_nonempty(std::move(next));
			}
			OverlapCertificate cert;
			if (next.empty()) {
				cert.kind = OverlapKind::Empty;
			} else {
				Subset common = next.front();
				for (const auto& f : next) {
					common &= f;
				}
				if (common.any()) {
					cert.kind = OverlapKind::Cone;
					cert.apex = static_cast<Index>(common.find_first());
				}
			}
			out.emplace(selection, cert);
			if (!next.empty() && selection.size() < size_cap) {
				self(self, j + 1, next);
			}
			selection.pop_back();
		}
	};
	walk(walk, 0, {});
	return out;
}

}  // namespace dowker
