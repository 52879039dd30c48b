// pcup: persistent cohomology, cup-product invariants, and distances between
// them, for simplicial filtrations given as point clouds, distance matrices,
// or explicit filtration files.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "pcup/cupcore.hpp"
#include "pcup/distances.hpp"
#include "pcup/fixtures.hpp"
#include "pcup/flags.hpp"
#include "pcup/io.hpp"
#include "pcup/svg.hpp"

using namespace pcup;
using json = nlohmann::json;

namespace {

struct job_config {
	std::string input;
	std::string format = "points";
	std::string metric = "euclidean";
	int64_t field = 2;
	int max_dim = 2;
	double max_scale = infty;
	std::string out;
	std::string svg;
};

void add_input_options(CLI::App* cmd, job_config& cfg) {
	cmd->add_option("input", cfg.input, "input file")->required();
	cmd->add_option("--format", cfg.format, "input format")
	    ->check(CLI::IsMember({"points", "distmat", "filtration", "invariant-json"}))
	    ->capture_default_str();
	cmd->add_option("--metric", cfg.metric, "metric for point clouds")
	    ->check(CLI::IsMember({"euclidean", "linf"}))
	    ->capture_default_str();
	cmd->add_option("--max-dim", cfg.max_dim, "top simplex dimension for VR")->capture_default_str();
	cmd->add_option("--max-scale", cfg.max_scale, "VR scale cutoff");
	cmd->add_option("--out", cfg.out, "write the JSON here instead of stdout");
}

filtered_complex load_complex(const job_config& cfg) {
	if (cfg.format == "invariant-json")
		throw input_error("invariant-json inputs are consumed by erosion/bottleneck only");
	std::ifstream in(cfg.input);
	if (!in) throw input_error("cannot open " + cfg.input);
	if (cfg.format == "filtration") return io::parse_filtration(in);
	metric_input m = cfg.format == "distmat" ? io::parse_distance_matrix(in)
	                                         : io::parse_points(in, cfg.metric == "linf");
	return build_vr(m, cfg.max_dim, cfg.max_scale);
}

barcode_with_reps load_barcode(const job_config& cfg) {
	auto cx = std::make_shared<filtered_complex>(load_complex(cfg));
	return persistent_cohomology(cx, fp_field(cfg.field));
}

void emit(const job_config& cfg, const json& j) {
	std::string text = io::dump(j);
	if (cfg.out.empty())
		std::cout << text;
	else
		io::write_file(cfg.out, text);
}

step_invariant load_invariant(const std::string& path) {
	return io::step_invariant_from_json(io::load_json_file(path));
}

void print_distance(double v) {
	if (v == infty) {
		std::cout << "inf\n";
		return;
	}
	char buf[64];
	std::snprintf(buf, sizeof(buf), "%.10f", v);
	std::cout << buf << "\n";
}

json complex_stats(const filtered_complex& cx) {
	json j;
	j["kind"] = "complex-stats";
	j["vertices"] = cx.vertex_count;
	j["simplices"] = cx.size();
	j["max_dim"] = cx.max_dim;
	j["grid"] = cx.grid;
	std::vector<size_t> counts;
	for (const auto& d : cx.by_dim) counts.push_back(d.size());
	j["count_by_dim"] = counts;
	return j;
}

json repro_fixture(const std::string& name) {
	json j;
	j["kind"] = "repro";
	j["fixture"] = name;
	auto pipeline = [&](const filtered_complex& cx) {
		auto bc = persistent_cohomology(std::make_shared<filtered_complex>(cx), fp_field(2));
		cup_diagram d = cup_length_diagram(bc);
		step_invariant inv = invariant_from_diagram(d);
		j["barcode"] = io::to_json(bc);
		j["cup_diagram"] = io::to_json(d);
		j["cup_invariant"] = io::to_json(inv);
		j["mobius_diagram"] = io::to_json(mobius_invert(inv));
		return bc;
	};
	if (name == "pinched-torus") {
		auto bc = pipeline(fixtures::pinched_torus());
		j["lcup_ell2_deg2"] = io::to_json(lcup_barcode(bc, 2, 2));
		j["lcup_ell2_deg1"] = io::to_json(lcup_barcode(bc, 2, 1));
		j["phi_rank"] = io::to_json(phi_rank(bc));
	} else if (name == "two-disk") {
		pipeline(fixtures::two_disks());
	} else if (name == "torus-vs-wedge") {
		auto a = fixtures::cup_vr_torus2(), b = fixtures::cup_vr_wedge_s1s2s1();
		j["invariant_torus"] = io::to_json(a);
		j["invariant_wedge"] = io::to_json(b);
		j["erosion"] = erosion(a, b).value;
	} else if (name == "t2s3-vs-s1s2s1") {
		auto a = fixtures::phi_rank_t2s3(), b = fixtures::phi_rank_s1s2s1();
		j["invariant_t2s3"] = io::to_json(a);
		j["invariant_s1s2s1"] = io::to_json(b);
		j["erosion"] = erosion(a, b).value;
	} else {
		throw input_error("unknown fixture '" + name + "'");
	}
	return j;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"persistent cup-product invariants for simplicial filtrations"};
	app.require_subcommand(1);
	app.fallthrough();  // allow --field after the subcommand name
	job_config cfg;
	app.add_option("--field", cfg.field, "prime field characteristic")->capture_default_str();

	auto* vr = app.add_subcommand("vr", "build a Vietoris-Rips filtration and print stats");
	add_input_options(vr, cfg);
	auto* barcode = app.add_subcommand("barcode", "persistent cohomology with representatives");
	add_input_options(barcode, cfg);
	auto* cupdgm = app.add_subcommand("cupdgm", "persistent cup-length diagram");
	add_input_options(cupdgm, cfg);
	cupdgm->add_option("--svg", cfg.svg, "also draw the diagram");
	auto* cuplength = app.add_subcommand("cuplength", "persistent cup-length invariant");
	add_input_options(cuplength, cfg);
	cuplength->add_option("--svg", cfg.svg, "also draw the invariant");
	auto* lcup = app.add_subcommand("lcup", "barcode of the degree-p persistent l-cup module");
	int opt_ell = 1, opt_deg = 1;
	add_input_options(lcup, cfg);
	lcup->add_option("--ell", opt_ell, "cup power l")->required();
	lcup->add_option("--deg", opt_deg, "degree p")->required();
	auto* phirank = app.add_subcommand("phirank", "rank invariant of the persistent cup module");
	add_input_options(phirank, cfg);
	int opt_max_ell = -1;
	phirank->add_option("--max-ell", opt_max_ell, "depth cutoff (default: max_dim)");
	phirank->add_option("--svg", cfg.svg, "also draw the invariant");

	std::string file_a, file_b;
	bool dump_candidates = false;
	auto* ero = app.add_subcommand("erosion", "erosion distance between two invariant JSON files");
	ero->add_option("a", file_a, "first invariant")->required();
	ero->add_option("b", file_b, "second invariant")->required();
	ero->add_flag("--candidates", dump_candidates, "print the checked epsilon set");
	auto* botl = app.add_subcommand("bottleneck", "bottleneck distance between two barcode JSON files");
	botl->add_option("a", file_a, "first barcode")->required();
	botl->add_option("b", file_b, "second barcode")->required();

	std::string fixture;
	auto* repro = app.add_subcommand("repro", "reproduce a built-in fixture");
	repro->add_option("fixture", fixture, "pinched-torus | two-disk | torus-vs-wedge | t2s3-vs-s1s2s1")
	    ->required();
	repro->add_option("--out", cfg.out, "write the JSON here instead of stdout");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 1;
	}

	try {
		if (vr->parsed()) {
			emit(cfg, complex_stats(load_complex(cfg)));
		} else if (barcode->parsed()) {
			emit(cfg, io::to_json(load_barcode(cfg)));
		} else if (cupdgm->parsed()) {
			cup_diagram d = cup_length_diagram(load_barcode(cfg));
			emit(cfg, io::to_json(d));
			if (!cfg.svg.empty()) svg::emit_svg(d, cfg.svg);
		} else if (cuplength->parsed()) {
			step_invariant inv = invariant_from_diagram(cup_length_diagram(load_barcode(cfg)));
			emit(cfg, io::to_json(inv));
			if (!cfg.svg.empty()) svg::emit_svg(inv, cfg.svg);
		} else if (lcup->parsed()) {
			emit(cfg, io::to_json(lcup_barcode(load_barcode(cfg), opt_ell, opt_deg)));
		} else if (phirank->parsed()) {
			step_invariant inv = phi_rank(load_barcode(cfg), opt_max_ell);
			emit(cfg, io::to_json(inv));
			if (!cfg.svg.empty()) svg::emit_svg(inv, cfg.svg);
		} else if (ero->parsed()) {
			erosion_result r = erosion(load_invariant(file_a), load_invariant(file_b));
			if (dump_candidates) {
				for (double c : r.candidates) std::cout << c << "\n";
			}
			print_distance(r.value);
		} else if (botl->parsed()) {
			double v = bottleneck(io::bars_from_json(io::load_json_file(file_a)),
			                      io::bars_from_json(io::load_json_file(file_b)));
			print_distance(v);
		} else if (repro->parsed()) {
			json j = repro_fixture(fixture);
			if (fixture == "torus-vs-wedge" || fixture == "t2s3-vs-s1s2s1") {
				if (!cfg.out.empty()) io::write_file(cfg.out, io::dump(j));
				print_distance(j["erosion"].get<double>());
			} else {
				emit(cfg, j);
			}
		}
	} catch (const input_error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	} catch (const internal_error& e) {
		std::cerr << "internal-consistency error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 0;
}
