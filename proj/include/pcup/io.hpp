#pragma once

#include <iosfwd>
#include <json.hpp>

#include "pcup/cohomology.hpp"
#include "pcup/cupcore.hpp"
#include "pcup/flags.hpp"

namespace pcup::io {

using json = nlohmann::json;

// --- input files -------------------------------------------------------

// plain text: first line n, then n-1 lower-triangular rows of decimals
metric_input parse_distance_matrix(std::istream& in);
// one point per line, comma-separated coordinates
metric_input parse_points(std::istream& in, bool linf_metric);
// one simplex per line: "v0 v1 ... vk : value"
filtered_complex parse_filtration(std::istream& in);

// --- JSON ----------------------------------------------------------------

json to_json(const step_invariant& inv);
step_invariant step_invariant_from_json(const json& j);

json to_json(const signed_diagram& d);
signed_diagram signed_diagram_from_json(const json& j);

json to_json(const cup_diagram& d);
cup_diagram cup_diagram_from_json(const json& j);

json to_json(const lcup_barcode_t& b);
lcup_barcode_t lcup_barcode_from_json(const json& j);

// Barcode JSON: representatives serialized as [vertex list, coefficient]
// pairs. Parsing yields a value type independent of any complex.
struct parsed_bar {
	int degree = 0;
	double birth = 0, death = infty;
	std::vector<std::pair<std::vector<int>, coeff_t>> rep;
	bool operator==(const parsed_bar&) const = default;
};
struct parsed_barcode {
	int64_t field = 2;
	std::vector<parsed_bar> bars;
	bool operator==(const parsed_barcode&) const = default;
};

json to_json(const barcode_with_reps& bc);
parsed_barcode barcode_from_json(const json& j);

// bare intervals of any barcode-like JSON (barcode or lcup-barcode)
std::vector<std::pair<double, double>> bars_from_json(const json& j);

std::string dump(const json& j);          // deterministic, 2-space indent
json load_json_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pcup::io
