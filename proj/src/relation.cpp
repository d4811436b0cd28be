#include "dowker/relation.hpp"

#include "dowker/error.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dowker {

// ---- IndexSet ----------------------------------------------------------------

IndexSet::IndexSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
	lookup_.reserve(labels_.size());
	for (Index i = 0; i < labels_.size(); ++i) {
		if (!lookup_.emplace(labels_[i], i).second) {
			throw InputError("duplicate label '" + labels_[i] + "'");
		}
	}
}

IndexSet IndexSet::numbered(std::size_t n, std::string_view prefix) {
	std::vector<std::string> labels;
	labels.reserve(n);
	for (std::size_t i = 0; i < n; ++i) {
		labels.push_back(std::string(prefix) + std::to_string(i));
	}
	return IndexSet(std::move(labels));
}

std::optional<Index> IndexSet::find(std::string_view label) const {
	auto it = lookup_.find(std::string(label));
	if (it == lookup_.end()) {
		return std::nullopt;
	}
	return it->second;
}

Index IndexSet::at(std::string_view label) const {
	if (auto i = find(label)) {
		return *i;
	}
	throw InputError("unknown label '" + std::string(label) + "'");
}

Subset IndexSet::subset(const std::vector<std::string>& labels) const {
	Subset s(size());
	for (const auto& l : labels) {
		s.set(at(l));
	}
	return s;
}

std::vector<std::string> IndexSet::labels_of(const Subset& s) const {
	std::vector<std::string> out;
	for (auto i : members(s)) {
		out.push_back(labels_[i]);
	}
	return out;
}

std::string IndexSet::encode(const Subset& s) const {
	std::string out;
	for (auto i : members(s)) {
		if (!out.empty()) {
			out += '|';
		}
		out += labels_[i];
	}
	return out;
}

// ---- Relation ----------------------------------------------------------------

Relation::Relation(IndexSet rows, IndexSet cols)
    : rows_(std::move(rows)),
      cols_(std::move(cols)),
      row_bits_(rows_.size(), Subset(cols_.size())),
      col_bits_(cols_.size(), Subset(rows_.size())) {}

Relation::Relation(IndexSet rows, IndexSet cols, const std::vector<std::vector<int>>& bits)
    : Relation(std::move(rows), std::move(cols)) {
	if (bits.size() != num_rows()) {
		throw InputError("incidence has " + std::to_string(bits.size()) + " rows, expected " +
		                 std::to_string(num_rows()));
	}
	for (Index i = 0; i < bits.size(); ++i) {
		if (bits[i].size() != num_cols()) {
			throw InputError("incidence row " + std::to_string(i) + " has wrong length");
		}
		for (Index j = 0; j < bits[i].size(); ++j) {
			if (bits[i][j] != 0) {
				set(i, j);
			}
		}
	}
}

void Relation::set(Index i, Index j, bool value) {
	row_bits_[i][j] = value;
	col_bits_[j][i] = value;
}

bool Relation::operator==(const Relation& other) const {
	return rows_ == other.rows_ && cols_ == other.cols_ && row_bits_ == other.row_bits_;
}

Subset row_witnesses(const Relation& a, const Subset& sigma) {
	Subset out = full_subset(a.num_cols());
	for (auto i = sigma.find_first(); i != Subset::npos; i = sigma.find_next(i)) {
		out &= a.row(static_cast<Index>(i));
	}
	return out;
}

Subset col_witnesses(const Relation& a, const Subset& tau) {
	Subset out = full_subset(a.num_rows());
	for (auto j = tau.find_first(); j != Subset::npos; j = tau.find_next(j)) {
		out &= a.col(static_cast<Index>(j));
	}
	return out;
}

std::vector<std::string> row_witnesses(const Relation& a, const std::vector<std::string>& sigma) {
	return a.cols().labels_of(row_witnesses(a, a.rows().subset(sigma)));
}

std::vector<std::string> col_witnesses(const Relation& a, const std::vector<std::string>& tau) {
	return a.rows().labels_of(col_witnesses(a, a.cols().subset(tau)));
}

Relation transpose(const Relation& a) {
	Relation t(a.cols(), a.rows());
	for (Index i = 0; i < a.num_rows(); ++i) {
		for (auto j : members(a.row(i))) {
			t.set(j, i);
		}
	}
	return t;
}

Relation restrict(const Relation& a, const Subset& rows, const Subset& cols) {
	const auto ri = members(rows);
	const auto ci = members(cols);
	std::vector<std::string> rl;
	std::vector<std::string> cl;
	for (auto i : ri) {
		rl.push_back(a.rows().label(i));
	}
	for (auto j : ci) {
		cl.push_back(a.cols().label(j));
	}
	Relation out{IndexSet(std::move(rl)), IndexSet(std::move(cl))};
	for (Index r = 0; r < ri.size(); ++r) {
		for (Index c = 0; c < ci.size(); ++c) {
			if (a.get(ri[r], ci[c])) {
				out.set(r, c);
			}
		}
	}
	return out;
}

Relation restrict(const Relation& a, const std::vector<std::string>& rows,
                  const std::vector<std::string>& cols) {
	return restrict(a, a.rows().subset(rows), a.cols().subset(cols));
}

// ---- Morphisms ----------------------------------------------------------------

RelationMorphism RelationMorphism::identity(const Relation& a) {
	RelationMorphism m;
	for (Index i = 0; i < a.num_rows(); ++i) {
		m.row_map.push_back(i);
	}
	for (Index j = 0; j < a.num_cols(); ++j) {
		m.col_map.push_back(j);
	}
	return m;
}

RelationMorphism RelationMorphism::compose(const RelationMorphism& second,
                                           const RelationMorphism& first) {
	RelationMorphism m;
	for (auto i : first.row_map) {
		m.row_map.push_back(second.row_map.at(i));
	}
	for (auto j : first.col_map) {
		m.col_map.push_back(second.col_map.at(j));
	}
	return m;
}

MorphismCheck check_morphism(const RelationMorphism& m, const Relation& source,
                             const Relation& target) {
	if (m.row_map.size() != source.num_rows() || m.col_map.size() != source.num_cols()) {
		throw InputError("morphism maps are not total on the source index sets");
	}
	for (auto i : m.row_map) {
		if (i >= target.num_rows()) {
			throw InputError("row map leaves the target rows");
		}
	}
	for (auto j : m.col_map) {
		if (j >= target.num_cols()) {
			throw InputError("column map leaves the target columns");
		}
	}
	for (Index i = 0; i < source.num_rows(); ++i) {
		for (auto j : members(source.row(i))) {
			if (!target.get(m.row_map[i], m.col_map[j])) {
				return {false, std::make_pair(i, j)};
			}
		}
	}
	return {};
}

// ---- I/O -----------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
	const auto* ws = " \t\r\n";
	const auto b = s.find_first_not_of(ws);
	if (b == std::string_view::npos) {
		return {};
	}
	const auto e = s.find_last_not_of(ws);
	return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv(const std::string& line) {
	std::vector<std::string> out;
	std::size_t start = 0;
	while (true) {
		auto comma = line.find(',', start);
		out.push_back(trim(std::string_view(line).substr(start, comma - start)));
		if (comma == std::string::npos) {
			break;
		}
		start = comma + 1;
	}
	return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
	throw InputError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Relation read_relation(std::istream& in) {
	std::vector<std::pair<std::size_t, std::string>> lines;
	std::string raw;
	std::size_t number = 0;
	while (std::getline(in, raw)) {
		++number;
		auto t = trim(raw);
		if (t.empty() || t.front() == '#') {
			continue;
		}
		lines.emplace_back(number, std::move(t));
	}
	if (lines.empty()) {
		return Relation(IndexSet{}, IndexSet{});
	}

	if (lines.front().second.find(',') != std::string::npos) {
		auto header = split_csv(lines.front().second);
		std::vector<std::string> col_labels(header.begin() + 1, header.end());
		for (const auto& c : col_labels) {
			if (c.empty()) {
				parse_fail(lines.front().first, "empty column label");
			}
		}
		IndexSet cols;
		try {
			cols = IndexSet(col_labels);
		} catch (const InputError& e) {
			parse_fail(lines.front().first, e.what());
		}
		std::vector<std::string> row_labels;
		std::vector<std::vector<int>> bits;
		for (std::size_t r = 1; r < lines.size(); ++r) {
			const auto& [ln, text] = lines[r];
			auto fields = split_csv(text);
			if (fields.size() != cols.size() + 1) {
				parse_fail(ln, "expected " + std::to_string(cols.size() + 1) + " fields, got " +
				                   std::to_string(fields.size()));
			}
			if (fields[0].empty()) {
				parse_fail(ln, "empty row label");
			}
			std::vector<int> row;
			for (std::size_t f = 1; f < fields.size(); ++f) {
				if (fields[f] == "0") {
					row.push_back(0);
				} else if (fields[f] == "1") {
					row.push_back(1);
				} else {
					parse_fail(ln, "entry '" + fields[f] + "' is not 0 or 1");
				}
			}
			row_labels.push_back(fields[0]);
			bits.push_back(std::move(row));
			for (std::size_t k = 0; k + 1 < row_labels.size(); ++k) {
				if (row_labels[k] == fields[0]) {
					parse_fail(ln, "duplicate row label '" + fields[0] + "'");
				}
			}
		}
		return Relation(IndexSet(std::move(row_labels)), std::move(cols), bits);
	}

	// sparse: `row col` per line
	std::vector<std::string> row_labels;
	std::vector<std::string> col_labels;
	std::unordered_map<std::string, Index> row_index;
	std::unordered_map<std::string, Index> col_index;
	std::vector<std::pair<Index, Index>> pairs;
	for (const auto& [ln, text] : lines) {
		std::istringstream tokens(text);
		std::string r;
		std::string c;
		std::string extra;
		if (!(tokens >> r >> c) || (tokens >> extra)) {
			parse_fail(ln, "expected 'row_label col_label'");
		}
		auto [ri, rnew] = row_index.emplace(r, static_cast<Index>(row_labels.size()));
		if (rnew) {
			row_labels.push_back(r);
		}
		auto [ci, cnew] = col_index.emplace(c, static_cast<Index>(col_labels.size()));
		if (cnew) {
			col_labels.push_back(c);
		}
		pairs.emplace_back(ri->second, ci->second);
	}
	Relation a(IndexSet(std::move(row_labels)), IndexSet(std::move(col_labels)));
	for (auto [i, j] : pairs) {
		a.set(i, j);
	}
	return a;
}

Relation read_relation_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) {
		throw InputError("cannot open '" + path + "'");
	}
	return read_relation(in);
}

void write_relation_csv(std::ostream& out, const Relation& a) {
	for (const auto& c : a.cols().labels()) {
		out << ',' << c;
	}
	out << '\n';
	for (Index i = 0; i < a.num_rows(); ++i) {
		out << a.rows().label(i);
		for (Index j = 0; j < a.num_cols(); ++j) {
			out << ',' << (a.get(i, j) ? '1' : '0');
		}
		out << '\n';
	}
}

}  // namespace dowker
