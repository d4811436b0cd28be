// Command-line front end for the dowker library.
//
// Exit codes: 0 ok, 1 a requested check failed, 2 usage or parse error,
// 3 budget exceeded, 4 internal consistency failure.

#include "dowker/bifiltration.hpp"
#include "dowker/dowker.hpp"
#include "dowker/error.hpp"
#include "dowker/extended.hpp"
#include "dowker/synth.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace dowker;

struct Table {
	std::string name;
	std::vector<std::string> columns;
	std::vector<std::vector<std::string>> rows;
};

// Everything a command prints. CSV and JSON render the same content.
struct Document {
	std::vector<std::string> comments;
	std::vector<Table> tables;
	bool ok = true;
};

bool is_integer(const std::string& s) {
	return !s.empty() && s.size() < 19 &&
	       std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

void render_csv(std::ostream& out, const Document& doc) {
	for (const auto& c : doc.comments) {
		out << "# " << c << '\n';
	}
	for (std::size_t t = 0; t < doc.tables.size(); ++t) {
		if (t > 0) {
			out << '\n';
		}
		const auto& table = doc.tables[t];
		auto line = [&](const std::vector<std::string>& cells) {
			for (std::size_t i = 0; i < cells.size(); ++i) {
				out << (i ? "," : "") << cells[i];
			}
			out << '\n';
		};
		line(table.columns);
		for (const auto& row : table.rows) {
			line(row);
		}
	}
}

void render_json(std::ostream& out, const Document& doc) {
	nlohmann::ordered_json j;
	j["comments"] = doc.comments;
	j["tables"] = nlohmann::ordered_json::array();
	for (const auto& table : doc.tables) {
		nlohmann::ordered_json t;
		t["name"] = table.name;
		t["columns"] = table.columns;
		t["rows"] = nlohmann::ordered_json::array();
		for (const auto& row : table.rows) {
			auto r = nlohmann::ordered_json::array();
			for (const auto& cell : row) {
				if (is_integer(cell)) {
					r.push_back(std::stoll(cell));
				} else {
					r.push_back(cell);
				}
			}
			t["rows"].push_back(std::move(r));
		}
		j["tables"].push_back(std::move(t));
	}
	out << j.dump(2) << '\n';
}

std::string str(std::size_t v) { return std::to_string(v); }

std::string labels_text(const IndexSet& ix, const Subset& s) {
	std::string out;
	for (Index v : members(s)) {
		out += (out.empty() ? "" : " ") + ix.label(v);
	}
	return out;
}

Table betti_table(const std::string& name, const std::vector<std::string>& columns,
                  const std::vector<const BettiVector*>& vectors) {
	Table t{name, columns, {}};
	const std::size_t n = vectors.front()->size();
	for (std::size_t d = 0; d < n; ++d) {
		std::vector<std::string> row{str(d)};
		for (const auto* v : vectors) {
			row.push_back(str((*v)[d]));
		}
		t.rows.push_back(std::move(row));
	}
	return t;
}

struct Options {
	std::string input;
	std::string a_path;
	std::string b_path;
	std::uint32_t p = 2;
	int max_dim = 2;
	std::size_t kmax = 0;
	std::size_t lmax = 0;
	std::size_t k = 0;
	std::size_t l = 0;
	std::size_t budget = 0;
	bool oracle = false;
	std::string convention = "first-step";
	std::string side = "row";
	std::optional<std::uint64_t> seed;
	std::string out;
	bool json = false;
	// synth
	std::size_t arcs = 6;
	std::string length = "1/2";
	std::string phase = "0";
	std::size_t points = 0;
	std::size_t v_arcs = 0;
	std::string v_length = "1/12";
	std::string v_phase = "0";
};

Relation load(const std::string& path) {
	try {
		return read_relation_file(path);
	} catch (const InputError& e) {
		throw InputError(path + ": " + e.what());
	}
}

Document cmd_dowker(const Options& o) {
	const Relation a = load(o.input);
	const Side side = parse_side(o.side);
	const SimplicialComplex x = dowker_complex(a, side);
	Document doc;
	doc.comments.push_back(to_string(side) + " complex, p=" + str(o.p));
	Table faces{"maximal_faces", {"face", "vertices"}, {}};
	for (std::size_t f = 0; f < x.maximal_faces().size(); ++f) {
		faces.rows.push_back({str(f), labels_text(x.vertices(), x.maximal_faces()[f])});
	}
	doc.tables.push_back(std::move(faces));
	const BettiVector b = betti(x, o.p, o.max_dim, o.budget);
	doc.tables.push_back(betti_table("betti", {"dim", "betti"}, {&b}));
	return doc;
}

Document cmd_duality(const Options& o) {
	const Relation a = load(o.input);
	const DualityReport r = duality_check(a, o.p, o.max_dim, o.budget);
	Document doc;
	doc.ok = r.equal;
	doc.tables.push_back(betti_table("duality", {"dim", "row", "col"}, {&r.row, &r.column}));
	return doc;
}

Document cmd_extended(const Options& o) {
	const Relation a = load(o.a_path);
	const Relation b = load(o.b_path);
	const ExtendedReport r = extended_duality_check(a, b, o.p, o.max_dim, o.oracle);
	Document doc;
	doc.ok = r.equal && r.oracle_agrees;
	doc.comments.push_back("row model elements " + str(r.row_elements) + ", column model elements " +
	                       str(r.col_elements));
	if (r.oracle) {
		doc.tables.push_back(betti_table("extended", {"dim", "row_model", "col_model", "oracle"},
		                                 {&r.row_model, &r.col_model, &*r.oracle}));
	} else {
		doc.tables.push_back(
		    betti_table("extended", {"dim", "row_model", "col_model"}, {&r.row_model, &r.col_model}));
	}
	return doc;
}

Document cmd_collapse(const Options& o) {
	const Relation a = load(o.a_path);
	const Relation b = load(o.b_path);
	const CollapseReport r = collapse_check(a, b, o.p, o.max_dim);
	Document doc;
	doc.ok = r.holds;
	Table fibers{"fibers", {"sigma", "apex"}, {}};
	for (const auto& f : r.fibers) {
		fibers.rows.push_back(
		    {labels_text(a.rows(), f.sigma), f.apex ? a.cols().label(*f.apex) : std::string("none")});
	}
	doc.comments.push_back(std::string("all fibers certified: ") + (r.all_certified ? "yes" : "no"));
	doc.tables.push_back(std::move(fibers));
	doc.tables.push_back(betti_table("collapse", {"dim", "model", "base"}, {&r.model, &r.base}));
	return doc;
}

Document cmd_psi(const Options& o) {
	const Relation a = load(o.input);
	Document doc;
	Table t{"psi", {"k", "dim", "level", "sublevel", "well_defined"}, {}};
	const std::size_t lo = o.k ? o.k : 1;
	const std::size_t hi = o.k ? o.k : a.num_cols();
	for (std::size_t k = lo; k <= hi; ++k) {
		const PsiReport r = psi_equivalence_check(a, k, o.p, o.max_dim, o.budget);
		doc.ok = doc.ok && r.equal && r.well_defined;
		for (std::size_t d = 0; d < r.level.size(); ++d) {
			t.rows.push_back({str(k), str(d), str(r.level[d]), str(r.sublevel[d]),
			                  r.well_defined ? "yes" : "no"});
		}
	}
	doc.tables.push_back(std::move(t));
	return doc;
}

Document cmd_bifilt(const Options& o) {
	const Relation a = load(o.input);
	const std::size_t kmax = o.kmax ? o.kmax : a.num_cols();
	const std::size_t lmax = o.lmax ? o.lmax : a.num_rows();
	const BigradedBettiTable t = bigraded_betti(a, kmax, lmax, o.p, o.max_dim, o.budget);
	std::ostringstream csv;
	write_bigraded_csv(csv, t);
	Table table{"bigraded", {}, {}};
	std::istringstream in(csv.str());
	std::string line;
	bool header = true;
	while (std::getline(in, line)) {
		std::vector<std::string> cells;
		std::stringstream ls(line);
		std::string cell;
		while (std::getline(ls, cell, ',')) {
			cells.push_back(cell);
		}
		if (header) {
			table.columns = std::move(cells);
			header = false;
		} else {
			table.rows.push_back(std::move(cells));
		}
	}
	Document doc;
	doc.tables.push_back(std::move(table));
	return doc;
}

Document cmd_barcode(const Options& o) {
	const Relation a = load(o.input);
	const WeightFiltration f = weight_filtration(a, parse_side(o.side), o.max_dim + 1, o.budget);
	const Barcode bars = weight_barcode(f, o.p, o.max_dim);
	Document doc;
	doc.comments.push_back("weight coordinates: a bar is alive for death < k <= birth");
	Table t{"barcode", {"dim", "birth", "death"}, {}};
	for (const auto& bar : bars) {
		t.rows.push_back({str(bar.dim), std::to_string(bar.birth),
		                  bar.death ? std::to_string(*bar.death) : std::string("inf")});
	}
	doc.tables.push_back(std::move(t));
	return doc;
}

Document cmd_recovery(const Options& o) {
	const Relation a = load(o.input);
	const RecoveryReport r = boundary_recovery_check(a, o.p, o.max_dim, o.budget);
	Document doc;
	doc.ok = r.ok;
	Table t{"recovery", {"axis", "level", "dim", "bifiltration", "filtration"}, {}};
	for (const auto& row : r.rows) {
		for (std::size_t d = 0; d < row.bifiltration.size(); ++d) {
			t.rows.push_back({std::string(1, row.axis), str(row.level), str(d),
			                  str(row.bifiltration[d]), str(row.filtration[d])});
		}
	}
	doc.tables.push_back(std::move(t));
	return doc;
}

Document cmd_application(const Options& o) {
	const Relation a = load(o.input);
	const ApplicationReport r = theorem_application_experiment(
	    a, o.k ? o.k : 1, o.l ? o.l : 1, parse_convention(o.convention), o.p, o.max_dim, o.budget);
	Document doc;
	doc.ok = r.equal;
	doc.comments.push_back("convention " + to_string(r.convention) + ", k=" + str(r.k) +
	                       ", l=" + str(r.l));
	doc.tables.push_back(betti_table("application", {"dim", "level", "model"}, {&r.level, &r.model}));
	return doc;
}

Document cmd_synth(const Options& o) {
	const ArcCover u = circle_cover(o.arcs, parse_rational(o.length), parse_rational(o.phase));
	Document doc;
	doc.comments.push_back("cover U: " + str(o.arcs) + " arcs of length " + o.length + ", phase " +
	                       o.phase);
	doc.comments.push_back("fold number " + str(fold_number(u)) + ", goodness threshold " +
	                       str(goodness_threshold(u)));
	Relation rel;
	if (o.v_arcs > 0) {
		const ArcCover v =
		    circle_cover(o.v_arcs, parse_rational(o.v_length), parse_rational(o.v_phase));
		const RecParameters rp = rec_parameters(u, v);
		doc.comments.push_back("cover V: " + str(o.v_arcs) + " arcs of length " + o.v_length +
		                       ", phase " + o.v_phase);
		doc.comments.push_back("separation p=" + str(rp.p) + ", q=" + str(rp.q));
		rel = cover_cover_relation(u, v);
	} else {
		const std::size_t n = o.points ? o.points : 20 * o.arcs;
		const SamplePoints pts = equispaced_points(n, o.seed);
		doc.comments.push_back("sample: " + str(n) + " equispaced points" +
		                       (o.seed ? ", jitter seed " + std::to_string(*o.seed) : std::string()));
		rel = cover_point_relation(u, pts);
	}
	Table t{"relation", {""}, {}};
	for (const auto& label : rel.cols().labels()) {
		t.columns.push_back(label);
	}
	for (Index i = 0; i < rel.num_rows(); ++i) {
		std::vector<std::string> row{rel.rows().label(i)};
		for (Index j = 0; j < rel.num_cols(); ++j) {
			row.push_back(rel.get(i, j) ? "1" : "0");
		}
		t.rows.push_back(std::move(row));
	}
	doc.tables.push_back(std::move(t));
	return doc;
}

int fail(const std::string& kind, const std::string& message, int code) {
	std::cerr << "error[" << kind << "]: " << message << '\n';
	return code;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"Dowker complexes, duality checks and bifiltrations of binary relations"};
	app.require_subcommand(1);
	Options o;

	auto common = [&](CLI::App* sub) {
		sub->add_option("--p", o.p, "field characteristic (prime)")->capture_default_str();
		sub->add_option("--max-dim", o.max_dim, "largest homology dimension")
		    ->capture_default_str()
		    ->check(CLI::NonNegativeNumber);
		sub->add_option("--budget-faces", o.budget, "face budget")->check(CLI::PositiveNumber);
		sub->add_option("--out", o.out, "output path (default stdout)");
		sub->add_flag("--json", o.json, "JSON instead of CSV");
	};
	auto with_input = [&](CLI::App* sub) {
		sub->add_option("--input", o.input, "relation file")->required();
		common(sub);
		return sub;
	};
	auto with_pair = [&](CLI::App* sub) {
		sub->add_option("--a", o.a_path, "first relation I x J")->required();
		sub->add_option("--b", o.b_path, "second relation J x K")->required();
		common(sub);
		return sub;
	};

	auto* dowker = with_input(app.add_subcommand("dowker", "maximal faces and Betti numbers"));
	dowker->add_option("--side", o.side, "row or col")->capture_default_str();
	auto* duality = with_input(app.add_subcommand("duality", "Betti of R(A) against C(A)"));
	auto* extended = with_pair(app.add_subcommand("extended", "row and column pair models"));
	extended->add_flag("--oracle", o.oracle, "also compare against the diagonal cell model");
	auto* collapse = with_pair(app.add_subcommand("collapse", "fiber cone certificates"));
	auto* psi = with_input(app.add_subcommand("psi", "R(A_{k,1}) against R^A_k"));
	psi->add_option("--k", o.k, "weight level (default: all)");
	auto* bifilt = with_input(app.add_subcommand("bifilt", "bigraded Betti table"));
	bifilt->add_option("--kmax", o.kmax, "largest k (default |J|)");
	bifilt->add_option("--lmax", o.lmax, "largest l (default |I|)");
	auto* barcode = with_input(app.add_subcommand("barcode", "weight filtration barcode"));
	barcode->add_option("--side", o.side, "row or col")->capture_default_str();
	auto* recovery = with_input(app.add_subcommand("recovery", "boundary row and column recovery"));
	auto* application =
	    with_input(app.add_subcommand("application", "level complex against a pair model"));
	application->add_option("--k", o.k, "k level (default 1)");
	application->add_option("--l", o.l, "l level (default 1)");
	application->add_option("--convention", o.convention, "first-step or literal")
	    ->capture_default_str();
	auto* synth = app.add_subcommand("synth", "circle cover relations");
	synth->add_option("--arcs", o.arcs, "arcs in U")->capture_default_str();
	synth->add_option("--length", o.length, "arc length of U")->capture_default_str();
	synth->add_option("--phase", o.phase, "phase of U")->capture_default_str();
	synth->add_option("--points", o.points, "sample points (default 20 per arc)");
	synth->add_option("--seed", o.seed, "jitter seed for the sample");
	synth->add_option("--v-arcs", o.v_arcs, "arcs in V (cover-cover relation)");
	synth->add_option("--v-length", o.v_length, "arc length of V")->capture_default_str();
	synth->add_option("--v-phase", o.v_phase, "phase of V")->capture_default_str();
	synth->add_option("--out", o.out, "output path (default stdout)");
	synth->add_flag("--json", o.json, "JSON instead of CSV");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		return fail("usage", e.what(), 2);
	}

	try {
		if (o.budget == 0) {
			o.budget = default_face_budget();
		}
		require_prime(o.p);
		Document doc;
		if (*dowker) doc = cmd_dowker(o);
		else if (*duality) doc = cmd_duality(o);
		else if (*extended) doc = cmd_extended(o);
		else if (*collapse) doc = cmd_collapse(o);
		else if (*psi) doc = cmd_psi(o);
		else if (*bifilt) doc = cmd_bifilt(o);
		else if (*barcode) doc = cmd_barcode(o);
		else if (*recovery) doc = cmd_recovery(o);
		else if (*application) doc = cmd_application(o);
		else doc = cmd_synth(o);

		std::ostringstream buf;
		if (o.json) {
			render_json(buf, doc);
		} else {
			render_csv(buf, doc);
		}
		if (o.out.empty()) {
			std::cout << buf.str();
		} else {
			std::ofstream f(o.out, std::ios::binary);
			if (!f) {
				return fail("input", "cannot write " + o.out, 2);
			}
			f << buf.str();
		}
		if (!doc.ok) {
			std::cerr << "check failed\n";
			return 1;
		}
		return 0;
	} catch (const InputError& e) {
		return fail("input", e.what(), 2);
	} catch (const ResourceError& e) {
		return fail("budget", e.what(), 3);
	} catch (const IntegrityError& e) {
		return fail("integrity", e.what(), 4);
	}
}
