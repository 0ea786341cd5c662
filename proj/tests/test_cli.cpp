#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "adjflow/cli.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct RunResult {
	int code;
	std::string out;
	std::string err;
};

RunResult run(const std::vector<std::string>& args)
{
	std::ostringstream out, err;
	const int code = adjflow::run_command(args, out, err);
	return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args)
{
	const RunResult r = run(args);
	REQUIRE(r.code == 0);
	return json::parse(r.out);
}

/** Writes `content` under a unique name in the temp dir; returns the path. */
std::string temp_file(const std::string& stem, const std::string& content)
{
	const auto path = std::filesystem::temp_directory_path() /
	                  ("adjflow_cli_test_" + stem + ".txt");
	std::ofstream f(path);
	f << content;
	f.close();
	return path.string();
}

} // namespace

TEST_CASE("report header and the spectrum of a single edge")
{
	const std::string file = temp_file("edge", "a b\n");
	const json r = run_json({"spectrum", file});
	CHECK(r["tool"] == "adjflow");
	CHECK(r["version"] == "0.1.0");
	CHECK(r["command"] == "spectrum");
	CHECK(r["input_digest"].get<std::string>().size() == 16);
	CHECK(r["labels"] == json::array({"a", "b"}));
	REQUIRE(r["eigenvalues"].size() == 2);
	CHECK(std::abs(r["eigenvalues"][0].get<double>() + 1.0) < 1e-12);
	CHECK(std::abs(r["eigenvalues"][1].get<double>() - 1.0) < 1e-12);
}

TEST_CASE("line graph construction via the CLI")
{
	const std::string file = temp_file("p4", "a b\nb c\nc d\n");
	const json r = run_json({"linegraph", file});
	CHECK(r["command"] == "linegraph");
	CHECK(r["gram_identity_holds"] == true);
	CHECK(r["edge_count_formula"] == 2);
	REQUIRE(r["line"]["vertices"].size() == 3);
	CHECK(r["line"]["vertices"][0] == "a-b");
}

TEST_CASE("evolution matches the hyperbolic solution")
{
	const std::string file = temp_file("evolve", "a b\n");
	const json r =
	    run_json({"evolve", file, "--t", "1", "--u0", "1,0"});
	REQUIRE(r["u"].size() == 2);
	CHECK(std::abs(r["u"][0].get<double>() - std::cosh(1.0)) < 1e-12);
	CHECK(std::abs(r["u"][1].get<double>() - std::sinh(1.0)) < 1e-12);
	CHECK(r["t"] == 1.0);
}

TEST_CASE("rescaled limit of the single edge")
{
	const std::string file = temp_file("limit", "a b\n");
	const json fwd = run_json({"limit", file});
	CHECK(fwd["direction"] == "forward");
	CHECK(std::abs(fwd["rate"].get<double>() - 1.0) < 1e-12);
	CHECK(std::abs(fwd["gap"].get<double>() - 2.0) < 1e-12);
	CHECK(fwd["envelope_checked"] == true);
	CHECK(fwd["regular_uniform"] == true);
	CHECK(std::abs(fwd["limit"][0][0].get<double>() - 0.5) < 1e-12);

	const json bwd = run_json({"limit", file, "--direction", "backward"});
	CHECK(bwd["direction"] == "backward");
	CHECK(std::abs(bwd["rate"].get<double>() + 1.0) < 1e-12);
	CHECK(std::abs(bwd["residual_two"].get<double>() - std::exp(-10.0)) <
	      1e-9);
	CHECK(std::abs(bwd["limit"][0][1].get<double>() + 0.5) < 1e-12);

	const RunResult bad =
	    run({"limit", file, "--direction", "sideways"});
	CHECK(bad.code == 2);
}

TEST_CASE("cycle detection on the square with a pendant edge")
{
	const std::string file =
	    temp_file("pendant", "a b\na d\nb c\nd c\nc e\n");
	const json r = run_json({"detect", file});
	CHECK(r["multiplicity"] == 1);
	CHECK(r["multiplicity_formula"] == 1);
	CHECK(r["multiplicity_spectral"] == 1);
	CHECK(r["classification"] == "has_even_cycle_or_two_odd_cycles");
	REQUIRE(r["line_labels"].size() == 5);
	CHECK(r["line_labels"][0] == "a-b");
	// projector row for the -2 vector (1,-1,-1,1,0)/2
	CHECK(std::abs(r["projector"][0][0].get<double>() - 0.25) < 1e-9);
	CHECK(std::abs(r["projector"][0][1].get<double>() + 0.25) < 1e-9);
	CHECK(std::abs(r["projector"][4][4].get<double>()) < 1e-9);
}

TEST_CASE("lattice kernel values")
{
	const json one = run_json({"zkernel", "0", "0", "--t", "1"});
	CHECK(one["dim"] == 1);
	CHECK(std::abs(one["value"].get<double>() - 2.2795853023360673) <
	      1e-14);

	const json two =
	    run_json({"zkernel", "0,0", "1,1", "--t", "0.5", "--dim", "2"});
	const double i1 = 0.56515910399248503; // I_1(1)
	CHECK(std::abs(two["value"].get<double>() - i1 * i1) < 1e-14);

	const RunResult overflow = run({"zkernel", "0", "0", "--t", "1e5"});
	CHECK(overflow.code == 3);
	CHECK(overflow.err.find("overflow") != std::string::npos);

	const RunResult mismatch =
	    run({"zkernel", "0,0", "1", "--t", "1", "--dim", "2"});
	CHECK(mismatch.code == 2);
}

TEST_CASE("truncation comparison in both formats")
{
	const json r = run_json({"truncate", "0:0", "0:3", "--radius", "20",
	                         "--t", "1"});
	CHECK(r["command"] == "truncate");
	REQUIRE(r["rows"].size() == 2);
	CHECK(r["monotone_all"] == true);
	CHECK(r["rows"][0]["abs_gap"].get<double>() < 1e-9);

	const RunResult csv = run({"truncate", "0:0", "0:3", "--radius",
	                           "20", "--t", "1", "--format", "csv"});
	REQUIRE(csv.code == 0);
	CHECK(csv.out.rfind("# adjflow 0.1.0 truncate input_digest=", 0) ==
	      0);
	CHECK(csv.out.find("v,w,t,closed_form,section,abs_gap\n") !=
	      std::string::npos);
	CHECK(csv.out.find("\n0,0,1,") != std::string::npos);
	CHECK(csv.out.find("\n0,3,1,") != std::string::npos);

	const RunResult badfmt = run({"truncate", "0:0", "--radius", "5",
	                              "--t", "1", "--format", "xml"});
	CHECK(badfmt.code == 2);
	const RunResult outside = run({"truncate", "0:25", "--radius", "20",
	                               "--t", "1"});
	CHECK(outside.code == 2);
}

TEST_CASE("weighted operators in both modes")
{
	const std::string file =
	    temp_file("wstar", "c x 1\nc y 2\nc z 3\n");
	const json general = run_json({"weighted", file});
	CHECK(general["mode"] == "general");
	CHECK(general["max_weighted_degree"] == 6.0);
	CHECK(general["norm_inf"] == 6.0);
	CHECK(general["upper_bound_holds"] == true);

	const std::string pre = temp_file("wpre", "a b\nb c\n");
	const std::string weights = temp_file("wvals", "a 2\nb 3\nc 5\n");
	const json line =
	    run_json({"weighted", pre, "--weights", weights});
	CHECK(line["mode"] == "line");
	REQUIRE(line["line_labels"].size() == 2);
	CHECK(line["matrix"][0][1] == 3.0);
	CHECK(line["gamma"][0] == 5.0);
	CHECK(line["enclosure_holds"] == true);

	const std::string missing = temp_file("wmiss", "a 2\nb 3\n");
	const RunResult bad = run({"weighted", pre, "--weights", missing});
	CHECK(bad.code == 2);
}

TEST_CASE("p-flow action on the hexagon")
{
	const std::string file =
	    temp_file("hex", "a b\nb c\nc d\nd e\ne f\nf a\n");
	const json r = run_json({"pflow", file, "--p", "3", "--u0",
	                         "1,1,1,1,1,1"});
	CHECK(r["p"] == 3.0);
	REQUIRE(r["result"].size() == 6);
	for (int i = 0; i < 6; ++i)
		CHECK(std::abs(r["result"][i].get<double>() - 4.0) < 1e-10);

	const RunResult wrong_dim =
	    run({"pflow", file, "--p", "3", "--u0", "1,1"});
	CHECK(wrong_dim.code == 2);
	const RunResult bad_p =
	    run({"pflow", file, "--p", "1", "--u0", "1,1,1,1,1,1"});
	CHECK(bad_p.code == 2);
}

TEST_CASE("generalized line graphs with petals")
{
	const std::string file = temp_file("glk2", "a b\n");
	const std::string petals = temp_file("glpetals", "a 2\n");
	const json r = run_json({"genline", file, "--petals", petals});
	CHECK(r["multiplicity"]["formula"] == 1);
	CHECK(r["multiplicity"]["spectral"] == 1);
	CHECK(r["multiplicity"]["formula_matches"] == true);
	REQUIRE(r["line_labels"].size() == 5);
	CHECK(r["petals"] == json::array({2, 0})); // ordered as row_labels

	const json free = run_json({"genline", file});
	CHECK(free["multiplicity"]["formula"] == 0);
	CHECK(free["multiplicity"]["petal_free_formula"] == 0);
	CHECK(free["multiplicity"]["petal_free_matches"] == true);
}

TEST_CASE("deterministic output and digest sensitivity")
{
	const std::string file = temp_file("det", "a b\nb c\n");
	const RunResult first = run({"spectrum", file});
	const RunResult second = run({"spectrum", file});
	REQUIRE(first.code == 0);
	CHECK(first.out == second.out);

	const std::string changed = temp_file("det", "a b\nb c\nc d\n");
	const RunResult third = run({"spectrum", changed});
	REQUIRE(third.code == 0);
	const std::string d1 =
	    json::parse(first.out)["input_digest"].get<std::string>();
	const std::string d3 =
	    json::parse(third.out)["input_digest"].get<std::string>();
	CHECK(d1 != d3);
}

TEST_CASE("exit codes")
{
	CHECK(run({"spectrum", "/nonexistent/graph.txt"}).code == 2);

	const std::string loop = temp_file("loop", "a a\n");
	CHECK(run({"spectrum", loop}).code == 2);

	const std::string edge = temp_file("exedge", "a b\n");
	CHECK(run({"evolve", edge, "--t", "1e6", "--u0", "1,0"}).code == 3);
	CHECK(run({"evolve", edge, "--t", "x", "--u0", "1,0"}).code == 2);
	CHECK(run({"evolve", edge, "--t", "1", "--u0", "1,0,0"}).code == 2);

	CHECK(run({}).code == 2);
	CHECK(run({"frobnicate"}).code == 2);
	CHECK(run({"spectrum", edge, "--bogus"}).code == 2);

	const RunResult help = run({"--help"});
	CHECK(help.code == 0);
	CHECK(help.out.find("spectrum") != std::string::npos);
}

TEST_CASE("self-check verb")
{
	const RunResult r = run({"check"});
	CHECK(r.code == 0);
	CHECK(r.out.rfind("adjflow 0.1.0 self-check seed=0x5eed", 0) == 0);
	CHECK(r.out.find("ok - line-graph-gram-identity") !=
	      std::string::npos);
	CHECK(r.out.find("FAIL") == std::string::npos);
	CHECK(r.out.find("47 checks, 0 failures") != std::string::npos);

	const RunResult seeded = run({"check", "--seed", "0xabc"});
	CHECK(seeded.code == 0);
	CHECK(seeded.out.rfind("adjflow 0.1.0 self-check seed=0xabc", 0) ==
	      0);

	CHECK(run({"check", "--seed", "zz"}).code == 2);
}
