#include "pcup/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace pcup::io {

namespace {

[[noreturn]] void fail_line(size_t lineno, const std::string& what) {
	throw input_error("line " + std::to_string(lineno) + ": " + what);
}

std::vector<double> parse_numbers(const std::string& line, size_t lineno, char sep) {
	std::vector<double> out;
	std::string item;
	std::istringstream is(line);
	while (sep == ' ' ? bool(is >> item) : bool(std::getline(is, item, sep))) {
		try {
			size_t pos = 0;
			double v = std::stod(item, &pos);
			while (pos < item.size() && std::isspace((unsigned char)item[pos])) ++pos;
			if (pos != item.size()) throw std::invalid_argument(item);
			out.push_back(v);
		} catch (const std::exception&) {
			fail_line(lineno, "expected a number, got '" + item + "'");
		}
	}
	return out;
}

bool nonblank(const std::string& s) {
	return s.find_first_not_of(" \t\r\n") != std::string::npos;
}

double death_from_json(const json& j) {
	if (j.is_string()) {
		if (j.get<std::string>() == "inf") return infty;
		throw input_error("interval endpoint must be a number or \"inf\"");
	}
	return j.get<double>();
}

json death_to_json(double d) {
	if (d == infty) return json("inf");
	return json(d);
}

json value_to_json(const inv_value& v, codomain_t tag) {
	switch (tag) {
		case codomain_t::scalar: return json(v.at(0, 0));
		case codomain_t::sequence: {
			json row = json::array();
			for (size_t c = 0; c < v.cols(); ++c) row.push_back(v.at(0, c));
			return row;
		}
		default: {
			json m = json::array();
			for (size_t r = 0; r < v.rows(); ++r) {
				json row = json::array();
				for (size_t c = 0; c < v.cols(); ++c) row.push_back(v.at(r, c));
				m.push_back(row);
			}
			return m;
		}
	}
}

inv_value value_from_json(const json& j, codomain_t tag) {
	switch (tag) {
		case codomain_t::scalar: return inv_value::scalar(j.get<int64_t>());
		case codomain_t::sequence: return inv_value::sequence(j.get<std::vector<int64_t>>());
		default: return inv_value::matrix(j.get<std::vector<std::vector<int64_t>>>());
	}
}

codomain_t codomain_from_name(const std::string& s) {
	if (s == "scalar") return codomain_t::scalar;
	if (s == "sequence") return codomain_t::sequence;
	if (s == "matrix") return codomain_t::matrix;
	throw input_error("unknown codomain '" + s + "'");
}

void expect_kind(const json& j, const std::string& kind) {
	if (!j.is_object() || !j.contains("kind") || j.at("kind") != kind)
		throw input_error("expected JSON of kind '" + kind + "'");
}

size_t grid_index_of(const std::vector<double>& grid, double v, const char* what) {
	auto it = std::lower_bound(grid.begin(), grid.end(), v);
	if (it == grid.end() || *it != v)
		throw input_error(std::string(what) + " endpoint not on the grid");
	return it - grid.begin();
}

}  // namespace

metric_input parse_distance_matrix(std::istream& in) {
	metric_input m;
	m.kind = metric_input::kind_t::matrix;
	std::string line;
	size_t lineno = 0;
	long n = -1, row = 1;
	while (std::getline(in, line)) {
		++lineno;
		if (!nonblank(line)) continue;
		auto nums = parse_numbers(line, lineno, ' ');
		if (n < 0) {
			if (nums.size() != 1 || nums[0] != (long)nums[0] || nums[0] < 1)
				fail_line(lineno, "expected the point count");
			n = (long)nums[0];
			m.dist.assign(n, std::vector<double>(n, 0.0));
			continue;
		}
		if (row >= n) fail_line(lineno, "too many rows for " + std::to_string(n) + " points");
		if ((long)nums.size() != row)
			fail_line(lineno, "row " + std::to_string(row) + " needs " + std::to_string(row) +
			                      " entries, got " + std::to_string(nums.size()));
		for (long k = 0; k < row; ++k) m.dist[row][k] = m.dist[k][row] = nums[k];
		++row;
	}
	if (n < 0) throw input_error("empty distance matrix file");
	if (row != n && n != 1)
		throw input_error("expected " + std::to_string(n - 1) + " lower-triangular rows, got " +
		                  std::to_string(row - 1));
	m.validate();
	return m;
}

metric_input parse_points(std::istream& in, bool linf_metric) {
	metric_input m;
	m.kind = linf_metric ? metric_input::kind_t::points_linf : metric_input::kind_t::points_euclidean;
	std::string line;
	size_t lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		if (!nonblank(line)) continue;
		auto nums = parse_numbers(line, lineno, ',');
		if (nums.empty()) fail_line(lineno, "empty point");
		if (!m.points.empty() && nums.size() != m.points.front().size())
			fail_line(lineno, "inconsistent point dimension");
		m.points.push_back(std::move(nums));
	}
	if (m.points.empty()) throw input_error("empty point cloud file");
	return m;
}

filtered_complex parse_filtration(std::istream& in) {
	std::vector<std::pair<simplex_t, double>> sx;
	std::string line;
	size_t lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		if (!nonblank(line)) continue;
		size_t colon = line.find(':');
		if (colon == std::string::npos) fail_line(lineno, "expected 'v0 v1 ... : value'");
		auto verts = parse_numbers(line.substr(0, colon), lineno, ' ');
		auto val = parse_numbers(line.substr(colon + 1), lineno, ' ');
		if (verts.empty()) fail_line(lineno, "simplex needs at least one vertex");
		if (val.size() != 1) fail_line(lineno, "expected exactly one filtration value");
		std::vector<int> vs;
		for (double v : verts) {
			if (v != (int)v || v < 0) fail_line(lineno, "vertex indices must be nonnegative integers");
			vs.push_back((int)v);
		}
		try {
			sx.emplace_back(simplex_t(vs), val[0]);
		} catch (const input_error& e) {
			fail_line(lineno, e.what());
		}
	}
	return from_explicit(sx);
}

json to_json(const step_invariant& inv) {
	json j;
	j["kind"] = "step-invariant";
	// off-grid and endpoint-coincident queries are resolved by this snapping
	// rule rather than by open/closed guesswork
	j["convention"] = "values at closed grid intervals; queries snap to half-open cells [s_i, s_{i+1})";
	j["codomain"] = codomain_name(inv.tag);
	j["grid"] = inv.grid;
	json vals = json::array();
	for (size_t i = 0; i < inv.m(); ++i)
		for (size_t k = i; k <= inv.m(); ++k) {
			const inv_value& v = inv.at_cells(i, k);
			if (v.is_zero()) continue;
			json e;
			e["interval"] = json::array({inv.grid[i], k == inv.m() ? json("inf") : json(inv.grid[k])});
			e["value"] = value_to_json(v, inv.tag);
			vals.push_back(e);
		}
	j["entries"] = vals;
	return j;
}

step_invariant step_invariant_from_json(const json& j) {
	expect_kind(j, "step-invariant");
	step_invariant inv;
	inv.tag = codomain_from_name(j.at("codomain").get<std::string>());
	inv.init_grid(j.at("grid").get<std::vector<double>>());
	for (const auto& e : j.at("entries")) {
		const json& iv = e.at("interval");
		size_t a = grid_index_of(inv.grid, iv.at(0).get<double>(), "interval");
		double bd = death_from_json(iv.at(1));
		size_t b = bd == infty ? inv.m() : grid_index_of(inv.grid, bd, "interval");
		inv.at_cells(a, b) = value_from_json(e.at("value"), inv.tag);
	}
	return inv;
}

json to_json(const signed_diagram& d) {
	json j;
	j["kind"] = "signed-diagram";
	j["codomain"] = codomain_name(d.tag);
	j["grid"] = d.grid;
	json entries = json::array();
	for (const auto& [key, v] : d.entries) {
		json e;
		e["interval"] =
		    json::array({d.grid[key.first], key.second == d.m() ? json("inf") : json(d.grid[key.second])});
		e["value"] = value_to_json(v, d.tag);
		entries.push_back(e);
	}
	j["entries"] = entries;
	return j;
}

signed_diagram signed_diagram_from_json(const json& j) {
	expect_kind(j, "signed-diagram");
	signed_diagram d;
	d.tag = codomain_from_name(j.at("codomain").get<std::string>());
	d.grid = j.at("grid").get<std::vector<double>>();
	for (const auto& e : j.at("entries")) {
		const json& iv = e.at("interval");
		size_t a = grid_index_of(d.grid, iv.at(0).get<double>(), "interval");
		double bd = death_from_json(iv.at(1));
		size_t b = bd == infty ? d.m() : grid_index_of(d.grid, bd, "interval");
		d.entries[{a, b}] = value_from_json(e.at("value"), d.tag);
	}
	return d;
}

json to_json(const cup_diagram& d) {
	json j;
	j["kind"] = "cup-diagram";
	j["convention"] = "intervals are half-open [birth, death)";
	j["grid"] = d.grid;
	json entries = json::array();
	for (const auto& [s, l] : d.values) {
		if (l == 0 || s.empty) continue;
		json e;
		e["birth"] = s.left;
		e["death"] = death_to_json(s.right_inf ? infty : s.right);
		e["value"] = l;
		entries.push_back(e);
	}
	j["entries"] = entries;
	return j;
}

cup_diagram cup_diagram_from_json(const json& j) {
	expect_kind(j, "cup-diagram");
	cup_diagram d;
	d.grid = j.at("grid").get<std::vector<double>>();
	for (const auto& e : j.at("entries")) {
		support_interval s;
		s.empty = false;
		s.left = e.at("birth").get<double>();
		double death = death_from_json(e.at("death"));
		s.right_inf = death == infty;
		s.right = death;
		s.left_gi = (int)grid_index_of(d.grid, s.left, "birth");
		s.right_gi = s.right_inf ? -1 : (int)grid_index_of(d.grid, death, "death");
		d.values[s] = e.at("value").get<int>();
	}
	return d;
}

json to_json(const lcup_barcode_t& b) {
	json j;
	j["kind"] = "lcup-barcode";
	j["ell"] = b.ell;
	j["deg"] = b.p;
	j["grid"] = b.grid;
	json bars = json::array();
	for (const auto& [birth, death] : b.bars) {
		json e;
		e["birth"] = birth;
		e["death"] = death_to_json(death);
		bars.push_back(e);
	}
	j["bars"] = bars;
	return j;
}

lcup_barcode_t lcup_barcode_from_json(const json& j) {
	expect_kind(j, "lcup-barcode");
	lcup_barcode_t b;
	b.ell = j.at("ell").get<int>();
	b.p = j.at("deg").get<int>();
	b.grid = j.at("grid").get<std::vector<double>>();
	for (const auto& e : j.at("bars"))
		b.bars.emplace_back(e.at("birth").get<double>(), death_from_json(e.at("death")));
	std::sort(b.bars.begin(), b.bars.end());
	return b;
}

json to_json(const barcode_with_reps& bc) {
	json j;
	j["kind"] = "barcode";
	j["field"] = bc.field.p;
	j["grid"] = bc.grid();
	json bars = json::array();
	for (const bar_t& b : bc.bars) {
		json e;
		e["degree"] = b.degree;
		e["birth"] = b.birth;
		e["death"] = death_to_json(b.infinite() ? infty : b.death);
		json rep = json::array();
		for (const auto& [idx, c] : b.rep.coeffs.entries)
			rep.push_back(json::array({json(bc.cx->simplices[idx].vertices), json(c)}));
		e["representative"] = rep;
		bars.push_back(e);
	}
	j["bars"] = bars;
	return j;
}

parsed_barcode barcode_from_json(const json& j) {
	expect_kind(j, "barcode");
	parsed_barcode out;
	out.field = j.at("field").get<int64_t>();
	for (const auto& e : j.at("bars")) {
		parsed_bar b;
		b.degree = e.at("degree").get<int>();
		b.birth = e.at("birth").get<double>();
		b.death = death_from_json(e.at("death"));
		for (const auto& r : e.at("representative"))
			b.rep.emplace_back(r.at(0).get<std::vector<int>>(), r.at(1).get<coeff_t>());
		out.bars.push_back(std::move(b));
	}
	return out;
}

std::vector<std::pair<double, double>> bars_from_json(const json& j) {
	if (!j.is_object() || !j.contains("kind")) throw input_error("expected a barcode JSON object");
	std::string kind = j.at("kind").get<std::string>();
	if (kind != "barcode" && kind != "lcup-barcode")
		throw input_error("expected 'barcode' or 'lcup-barcode' JSON, got '" + kind + "'");
	std::vector<std::pair<double, double>> out;
	for (const auto& e : j.at("bars"))
		out.emplace_back(e.at("birth").get<double>(), death_from_json(e.at("death")));
	return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw input_error("cannot open " + path);
	json j;
	try {
		in >> j;
	} catch (const std::exception& e) {
		throw input_error(path + ": " + e.what());
	}
	return j;
}

void write_file(const std::string& path, const std::string& content) {
	std::ofstream out(path, std::ios::binary);
	if (!out) throw input_error("cannot open " + path + " for writing");
	out << content;
	if (!out) throw input_error("write failed: " + path);
}

}  // namespace pcup::io
