#include "adjflow/cli.hpp"

#include "adjflow/corpus.hpp"
#include "adjflow/cycles.hpp"
#include "adjflow/extensions.hpp"
#include "adjflow/graph.hpp"
#include "adjflow/lattice.hpp"
#include "adjflow/report.hpp"
#include "adjflow/selfcheck.hpp"
#include "adjflow/semigroup.hpp"
#include "adjflow/spectral.hpp"
#include "adjflow/types.hpp"
#include "adjflow/weighted.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace adjflow {

namespace {

std::vector<double> parse_double_list(const std::string& text)
{
	std::vector<double> values;
	std::size_t start = 0;
	while (start <= text.size()) {
		const std::size_t comma = text.find(',', start);
		const std::string item = text.substr(
		    start, comma == std::string::npos ? std::string::npos : comma - start);
		try {
			std::size_t used = 0;
			values.push_back(std::stod(item, &used));
			if (used != item.size())
				throw std::invalid_argument(item);
		} catch (const std::exception&) {
			throw InputError("cannot parse '" + item + "' as a real number");
		}
		if (comma == std::string::npos)
			break;
		start = comma + 1;
	}
	return values;
}

std::vector<long> parse_long_tuple(const std::string& text, int dim)
{
	std::vector<long> values;
	std::size_t start = 0;
	while (start <= text.size()) {
		const std::size_t comma = text.find(',', start);
		const std::string item = text.substr(
		    start, comma == std::string::npos ? std::string::npos : comma - start);
		try {
			std::size_t used = 0;
			values.push_back(std::stol(item, &used));
			if (used != item.size())
				throw std::invalid_argument(item);
		} catch (const std::exception&) {
			throw InputError("cannot parse '" + item + "' as an integer");
		}
		if (comma == std::string::npos)
			break;
		start = comma + 1;
	}
	if (static_cast<int>(values.size()) != dim)
		throw InputError("coordinate tuple '" + text + "' does not have dimension " +
		                 std::to_string(dim));
	return values;
}

std::pair<std::vector<long>, std::vector<long>>
parse_coordinate_pair(const std::string& text, int dim)
{
	const std::size_t colon = text.find(':');
	if (colon == std::string::npos)
		throw InputError("pair '" + text + "' is missing the ':' separator");
	return {parse_long_tuple(text.substr(0, colon), dim),
	        parse_long_tuple(text.substr(colon + 1), dim)};
}

Vector to_vector(const std::vector<double>& values)
{
	Vector v(static_cast<Eigen::Index>(values.size()));
	for (std::size_t i = 0; i < values.size(); ++i)
		v(static_cast<Eigen::Index>(i)) = values[i];
	return v;
}

void write_long_array(JsonWriter& w, const std::vector<long>& values)
{
	w.begin_array();
	for (long v : values)
		w.value(static_cast<long long>(v));
	w.end_array();
}

void write_int_matrix(JsonWriter& w, const IntMatrix& m)
{
	w.begin_array();
	for (Eigen::Index i = 0; i < m.rows(); ++i) {
		w.begin_array();
		for (Eigen::Index j = 0; j < m.cols(); ++j)
			w.value(m(i, j));
		w.end_array();
	}
	w.end_array();
}

void write_graph(JsonWriter& w, const Graph& g)
{
	w.begin_object();
	w.key("vertices");
	write_string_array(w, g.labels());
	w.key("edges");
	w.begin_array();
	for (const Edge& e : g.edges()) {
		w.begin_array();
		w.value(std::string_view(g.label(e.u)));
		w.value(std::string_view(g.label(e.v)));
		w.value(e.weight);
		w.end_array();
	}
	w.end_array();
	w.end_object();
}

Graph load_graph(const std::string& path, InputDigest& digest)
{
	const std::string text = read_file(path);
	digest.add(text);
	return parse_edge_list(text);
}

std::string direction_name(Direction dir)
{
	return dir == Direction::Forward ? "forward" : "backward";
}

int cmd_linegraph(const std::string& file, std::ostream& out)
{
	InputDigest digest;
	const Graph h = load_graph(file, digest);
	const LineGraphMap m = line_graph(h);
	const IntMatrix j = incidence(h, IncidenceKind::Signless);
	const IntMatrix gram = j.transpose() * j;
	const Matrix a = adjacency_matrix(m.line);
	bool identity = true;
	for (Eigen::Index r = 0; r < a.rows() && identity; ++r)
		for (Eigen::Index c = 0; c < a.cols() && identity; ++c)
			identity = a(r, c) ==
			           static_cast<double>(gram(r, c) - (r == c ? 2 : 0));

	JsonWriter w;
	begin_report(w, "linegraph", digest);
	w.key("pre_line");
	write_graph(w, h);
	w.key("line");
	write_graph(w, m.line);
	w.key_value("edge_count_formula",
	            static_cast<long long>(line_graph_edge_count(h)));
	w.key_value("gram_identity_holds", identity);
	w.key_value("degree_variation", degree_variation(h));
	w.end_object();
	out << w.str() << "\n";
	return 0;
}

int cmd_spectrum(const std::string& file, std::ostream& out)
{
	InputDigest digest;
	const Graph g = load_graph(file, digest);
	const EigenDecomposition ed = sym_eigen(adjacency_matrix(g));

	JsonWriter w;
	begin_report(w, "spectrum", digest);
	w.key("labels");
	write_string_array(w, g.labels());
	w.key("eigenvalues");
	write_vector(w, ed.values);
	w.key("eigenvectors");
	write_matrix(w, ed.vectors);
	w.key_value("cluster_tol", ed.cluster_tol);
	w.end_object();
	out << w.str() << "\n";
	return 0;
}

int cmd_evolve(const std::string& file, double t, const std::string& u0_text,
               std::ostream& out)
{
	InputDigest digest;
	const Graph g = load_graph(file, digest);
	const Vector u0 = to_vector(parse_double_list(u0_text));
	const Vector u = evolve(g, u0, t);

	JsonWriter w;
	begin_report(w, "evolve", digest);
	w.key("labels");
	write_string_array(w, g.labels());
	w.key_value("t", t);
	w.key("u0");
	write_vector(w, u0);
	w.key("u");
	write_vector(w, u);
	w.end_object();
	out << w.str() << "\n";
	return 0;
}

int cmd_limit(const std::string& file, const std::string& direction,
              std::optional<double> t, std::ostream& out)
{
	InputDigest digest;
	const Graph g = load_graph(file, digest);
	Direction dir;
	if (direction == "forward")
		dir = Direction::Forward;
	else if (direction == "backward")
		dir = Direction::Backward;
	else
		throw InputError("--direction must be forward or backward");
	const EvolutionReport r = rescaled_limit(g, dir, t);

	JsonWriter w;
	begin_report(w, "limit", digest);
	w.key("labels");
	write_string_array(w, g.labels());
	w.key_value("direction", direction_name(r.direction));
	w.key_value("t", r.t);
	w.key_value("rate", r.rate);
	w.key_value("gap", r.gap);
	w.key_value("envelope_checked", r.envelope_checked);
	w.key_value("regular_uniform", r.regular_uniform);
	w.key_value("residual_max", r.residual_max);
	w.key_value("residual_two", r.residual_two);
	w.key("limit");
	write_matrix(w, r.limit);
	w.key("rescaled");
	write_matrix(w, r.rescaled);
	w.end_object();
	out << w.str() << "\n";
	return 0;
}

int cmd_detect(const std::string& file, std::ostream& out)
{
	InputDigest digest;
	const Graph h = load_graph(file, digest);
	const CycleReport r = detect_cycle_structure(h);

	JsonWriter w;
	begin_report(w, "detect", digest);
	w.key_value("multiplicity", r.multiplicity_formula);
	w.key_value("multiplicity_formula", r.multiplicity_formula);
	w.key_value("multiplicity_spectral", r.multiplicity_spectral);
	w.key_value("classification", to_string(r.classification));
	w.key("line_labels");
	write_string_array(w, r.map.line.labels());
	w.key("eigenbasis");
	write_matrix(w, r.eigenbasis);
	w.key("projector");
	write_matrix(w, r.projector);
	w.end_object();
	out << w.str() << "\n";
	return 0;
}

int cmd_zkernel(const std::string& v_text, const std::string& w_text, double t,
                int dim, std::ostream& out)
{
	if (dim < 1)
		throw InputError("--dim must be at least 1");
	const std::vector<long> v = parse_long_tuple(v_text, dim);
	const std::vector<long> wv = parse_long_tuple(w_text, dim);
	const double value =
	    dim == 1 ? z_kernel(v[0], wv[0], t) : zn_kernel(v, wv, t);

	InputDigest digest;
	JsonWriter w;
	begin_report(w, "zkernel", digest);
	w.key_value("dim", dim);
	w.key("v");
	write_long_array(w, v);
	w.key("w");
	write_long_array(w, wv);
	w.key_value("t", t);
	w.key_value("value", value);
	w.end_object();
	out << w.str() << "\n";
	return 0;
}

std::string join_tuple(const std::vector<long>& values)
{
	std::string s;
	for (std::size_t i = 0; i < values.size(); ++i) {
		if (i > 0)
			s += ' ';
		s += std::to_string(values[i]);
	}
	return s;
}

int cmd_truncate(const std::vector<std::string>& pair_texts, int dim, int radius,
                 double t, const std::string& format, std::ostream& out)
{
	if (dim < 1)
		throw InputError("--dim must be at least 1");
	if (radius < 1)
		throw InputError("--radius must be at least 1");
	std::vector<std::pair<std::vector<long>, std::vector<long>>> pairs;
	for (const std::string& text : pair_texts)
		pairs.push_back(parse_coordinate_pair(text, dim));
	const LatticeSpec spec{dim, radius};
	const TruncationReport r = truncation_compare(spec, pairs, t);
	InputDigest digest;

	if (format == "csv") {
		out << "# " << kToolName << " " << kToolVersion
		    << " truncate input_digest=" << digest.hex() << "\n";
		out << "v,w,t,closed_form,section,abs_gap\n";
		for (const TruncationRow& row : r.rows)
			out << join_tuple(row.v) << ',' << join_tuple(row.w) << ','
			    << format_double(r.t) << ',' << format_double(row.closed_form)
			    << ',' << format_double(row.section) << ','
			    << format_double(row.abs_gap) << "\n";
		return 0;
	}
	if (format != "json")
		throw InputError("--format must be json or csv");

	JsonWriter w;
	begin_report(w, "truncate", digest);
	w.key_value("dim", r.spec.dim);
	w.key_value("radius", r.spec.radius);
	w.key_value("t", r.t);
	w.key("radii");
	w.begin_array();
	for (int rad : r.radii)
		w.value(rad);
	w.end_array();
	w.key("rows");
	w.begin_array();
	for (const TruncationRow& row : r.rows) {
		w.begin_object();
		w.key("v");
		write_long_array(w, row.v);
		w.key("w");
		write_long_array(w, row.w);
		w.key_value("closed_form", row.closed_form);
		w.key_value("section", row.section);
		w.key_value("abs_gap", row.abs_gap);
		w.key_value("monotone_in_radius", row.monotone_in_radius);
		w.end_object();
	}
	w.end_array();
	w.key_value("monotone_all", r.monotone_all);
	w.end_object();
	out << w.str() << "\n";
	return 0;
}

int cmd_weighted(const std::string& file, const std::string& weights_file,
                 std::ostream& out)
{
	InputDigest digest;
	const Graph g = load_graph(file, digest);

	if (weights_file.empty()) {
		const Matrix a = weighted_adjacency_general(g);
		const double maxw = max_weighted_degree(g);
		const double n1 = operator_norm(a, Norm::One);
		const double n2 = operator_norm(a, Norm::Two);
		const double ninf = operator_norm(a, Norm::Inf);
		const double upper = maxw * (1 + 1e-9);

		JsonWriter w;
		begin_report(w, "weighted", digest);
		w.key_value("mode", "general");
		w.key("labels");
		write_string_array(w, g.labels());
		w.key("matrix");
		write_matrix(w, a);
		w.key_value("max_weighted_degree", maxw);
		w.key_value("norm_1", n1);
		w.key_value("norm_2", n2);
		w.key_value("norm_inf", ninf);
		w.key_value("upper_bound_holds",
		            n1 <= upper && n2 <= upper && ninf <= upper);
		w.end_object();
		out << w.str() << "\n";
		return 0;
	}

	const std::string wtext = read_file(weights_file);
	digest.add(wtext);
	const WeightedLineSystem s =
	    make_weighted_line_system(g, parse_vertex_weights(wtext));
	const Matrix m = line_weighted_adjacency(s);
	const EigenDecomposition ed = sym_eigen(m);
	const double lo = -s.gamma.maxCoeff();
	const double hi = s.weighted_line_degree.size() > 0
	                      ? s.weighted_line_degree.maxCoeff()
	                      : 0.0;

	JsonWriter w;
	begin_report(w, "weighted", digest);
	w.key_value("mode", "line");
	w.key("line_labels");
	write_string_array(w, s.map.line.labels());
	w.key("matrix");
	write_matrix(w, m);
	w.key("gamma");
	write_vector(w, s.gamma);
	w.key("weighted_degree");
	write_vector(w, s.weighted_line_degree);
	w.key_value("c_min", s.c_min);
	w.key_value("c_max", s.c_max);
	w.key_value("lambda_min", ed.values(0));
	w.key_value("lambda_max", ed.values(ed.values.size() - 1));
	w.key_value("enclosure_low", lo);
	w.key_value("enclosure_high", hi);
	w.key_value("enclosure_holds", ed.values(0) >= lo - 1e-9 &&
	                                   ed.values(ed.values.size() - 1) <=
	                                       hi + 1e-9);
	w.end_object();
	out << w.str() << "\n";
	return 0;
}

int cmd_pflow(const std::string& file, double p, const std::string& u0_text,
              std::ostream& out)
{
	InputDigest digest;
	const Graph h = load_graph(file, digest);
	const LineGraphMap m = line_graph(h);
	const Vector u0 = to_vector(parse_double_list(u0_text));
	if (u0.size() != m.line.vertex_count())
		throw InputError("--u0 has " + std::to_string(u0.size()) +
		                 " entries but the line graph has " +
		                 std::to_string(m.line.vertex_count()) + " vertices");
	const Vector result = p_apply(m, p, u0);
	const double energy = p_energy(m, p, u0);

	JsonWriter w;
	begin_report(w, "pflow", digest);
	w.key_value("p", p);
	w.key("line_labels");
	write_string_array(w, m.line.labels());
	w.key("u0");
	write_vector(w, u0);
	w.key("result");
	write_vector(w, result);
	w.key_value("energy", energy);
	w.end_object();
	out << w.str() << "\n";
	return 0;
}

int cmd_genline(const std::string& file, const std::string& petals_file,
                std::ostream& out)
{
	InputDigest digest;
	const Graph h = load_graph(file, digest);
	std::map<std::string, int> petals;
	if (!petals_file.empty()) {
		const std::string ptext = read_file(petals_file);
		digest.add(ptext);
		petals = parse_petals(ptext);
	}
	const GeneralizedLineSystem s = generalized_line_graph(h, petals);
	const GeneralizedMultiplicityReport r = generalized_multiplicity(s);

	JsonWriter w;
	begin_report(w, "genline", digest);
	w.key("row_labels");
	write_string_array(w, s.row_labels);
	w.key("line_labels");
	write_string_array(w, s.line.labels());
	w.key("petals");
	w.begin_array();
	for (int n : s.petals)
		w.value(n);
	w.end_array();
	w.key("jtilde");
	write_int_matrix(w, s.jtilde);
	w.key("adjacency");
	write_matrix(w, adjacency_matrix(s.line));
	w.key("multiplicity");
	w.begin_object();
	w.key_value("formula", r.formula);
	w.key_value("spectral", r.spectral);
	w.key_value("formula_matches", r.formula_matches);
	if (r.petal_free_formula)
		w.key_value("petal_free_formula", *r.petal_free_formula);
	if (r.petal_free_matches)
		w.key_value("petal_free_matches", *r.petal_free_matches);
	w.end_object();
	w.end_object();
	out << w.str() << "\n";
	return 0;
}

int cmd_check(const std::string& seed_text, std::ostream& out)
{
	CorpusOptions options;
	if (!seed_text.empty()) {
		std::string digits = seed_text;
		if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0)
			digits = digits.substr(2);
		try {
			std::size_t used = 0;
			options.seed = std::stoull(digits, &used, 16);
			if (used != digits.size())
				throw std::invalid_argument(digits);
		} catch (const std::exception&) {
			throw InputError("--seed must be a hexadecimal integer");
		}
	}
	const std::vector<CheckResult> results = run_all_checks(options);
	char seed_buf[32];
	std::snprintf(seed_buf, sizeof seed_buf, "0x%llx",
	              static_cast<unsigned long long>(options.seed));
	out << kToolName << " " << kToolVersion << " self-check seed=" << seed_buf
	    << "\n";
	int failures = 0;
	for (const CheckResult& r : results) {
		if (r.pass) {
			out << "ok - " << r.name << "\n";
		} else {
			++failures;
			out << "FAIL - " << r.name << ": " << r.detail << "\n";
		}
	}
	out << results.size() << " checks, " << failures << " failures\n";
	return failures == 0 ? 0 : 1;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err)
{
	CLI::App app{"Linear flows du/dt = +-Au on graph adjacency matrices"};
	app.name("adjflow");
	app.require_subcommand(1);

	std::string lg_file;
	CLI::App* lg = app.add_subcommand("linegraph",
	                                  "Line graph and incidence identity");
	lg->add_option("file", lg_file, "edge-list file")->required();

	std::string sp_file;
	CLI::App* sp = app.add_subcommand("spectrum",
	                                  "Adjacency eigenvalues and eigenvectors");
	sp->add_option("file", sp_file, "edge-list file")->required();

	std::string ev_file, ev_u0;
	double ev_t = 0.0;
	CLI::App* ev = app.add_subcommand("evolve", "Evolve du/dt = Au from u0");
	ev->add_option("file", ev_file, "edge-list file")->required();
	ev->add_option("--t", ev_t, "evolution time (may be negative)")->required();
	ev->add_option("--u0", ev_u0, "comma-separated initial vector")->required();

	std::string li_file, li_direction = "forward";
	std::optional<double> li_t;
	CLI::App* li = app.add_subcommand("limit", "Rescaled long-time limit");
	li->add_option("file", li_file, "edge-list file")->required();
	li->add_option("--direction", li_direction, "forward or backward");
	li->add_option("--t", li_t, "evaluation time (default 10/gap)");

	std::string de_file;
	CLI::App* de = app.add_subcommand("detect",
	                                  "Even-cycle structure via the -2 eigenspace");
	de->add_option("file", de_file, "pre-line edge-list file")->required();

	std::string zk_v, zk_w;
	double zk_t = 0.0;
	int zk_dim = 1;
	CLI::App* zk = app.add_subcommand("zkernel",
	                                  "Closed-form lattice heat kernel");
	zk->add_option("v", zk_v, "first lattice point (comma tuple)")->required();
	zk->add_option("w", zk_w, "second lattice point (comma tuple)")->required();
	zk->add_option("--t", zk_t, "time >= 0")->required();
	zk->add_option("--dim", zk_dim, "lattice dimension (default 1)");

	std::vector<std::string> tr_pairs;
	int tr_dim = 1, tr_radius = 10;
	double tr_t = 0.0;
	std::string tr_format = "json";
	CLI::App* tr = app.add_subcommand(
	    "truncate", "Closed form vs finite lattice sections");
	tr->add_option("pairs", tr_pairs, "pairs v:w of comma tuples")->required();
	tr->add_option("--dim", tr_dim, "lattice dimension");
	tr->add_option("--radius", tr_radius, "section radius")->required();
	tr->add_option("--t", tr_t, "time >= 0")->required();
	tr->add_option("--format", tr_format, "json or csv");

	std::string we_file, we_weights;
	CLI::App* we = app.add_subcommand("weighted", "Weighted adjacency operators");
	we->add_option("file", we_file, "edge-list file")->required();
	we->add_option("--weights", we_weights,
	               "vertex-weight file (build the weighted line system)");

	std::string pf_file, pf_u0;
	double pf_p = 2.0;
	CLI::App* pf = app.add_subcommand("pflow", "Quasilinear p-adjacency action");
	pf->add_option("file", pf_file, "pre-line edge-list file")->required();
	pf->add_option("--p", pf_p, "exponent p > 1")->required();
	pf->add_option("--u0", pf_u0, "comma-separated vector on line vertices")
	    ->required();

	std::string gl_file, gl_petals;
	CLI::App* gl = app.add_subcommand("genline",
	                                  "Generalized line graph with petals");
	gl->add_option("file", gl_file, "pre-line edge-list file")->required();
	gl->add_option("--petals", gl_petals, "petal specification file");

	std::string ck_seed;
	CLI::App* ck = app.add_subcommand("check", "Run the full invariant suite");
	ck->add_option("--seed", ck_seed, "corpus seed (hex)");

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return 0;
	} catch (const CLI::CallForAllHelp&) {
		out << app.help("", CLI::AppFormatMode::All);
		return 0;
	} catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	}

	try {
		if (lg->parsed())
			return cmd_linegraph(lg_file, out);
		if (sp->parsed())
			return cmd_spectrum(sp_file, out);
		if (ev->parsed())
			return cmd_evolve(ev_file, ev_t, ev_u0, out);
		if (li->parsed())
			return cmd_limit(li_file, li_direction, li_t, out);
		if (de->parsed())
			return cmd_detect(de_file, out);
		if (zk->parsed())
			return cmd_zkernel(zk_v, zk_w, zk_t, zk_dim, out);
		if (tr->parsed())
			return cmd_truncate(tr_pairs, tr_dim, tr_radius, tr_t, tr_format, out);
		if (we->parsed())
			return cmd_weighted(we_file, we_weights, out);
		if (pf->parsed())
			return cmd_pflow(pf_file, pf_p, pf_u0, out);
		if (gl->parsed())
			return cmd_genline(gl_file, gl_petals, out);
		if (ck->parsed())
			return cmd_check(ck_seed, out);
	} catch (const OverflowError& e) {
		err << "overflow guard: " << e.what() << "\n";
		return 3;
	} catch (const InputError& e) {
		err << "input error: " << e.what() << "\n";
		return 2;
	} catch (const Error& e) {
		err << "internal error: " << e.what() << "\n";
		return 1;
	}
	err << "error: no command given\n";
	return 2;
}

} // namespace adjflow
