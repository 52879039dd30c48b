#include "pcup/svg.hpp"

#include <fstream>
#include <sstream>

namespace pcup::svg {

namespace {

constexpr double canvas = 480, margin = 56, inf_band = 48;

struct mapper {
	double lo = 0, hi = 1;

	explicit mapper(const std::vector<double>& grid) {
		if (!grid.empty()) {
			lo = grid.front();
			hi = grid.back();
			if (hi == lo) hi = lo + 1;
			double pad = (hi - lo) * 0.08;
			hi += pad;
		}
	}
	double x(double v) const { return margin + (v - lo) / (hi - lo) * (canvas - 2 * margin); }
	// y axis points up; the infinity band sits above hi
	double y(double v, bool inf = false) const {
		if (inf) return margin - inf_band / 2;
		return canvas - margin - (v - lo) / (hi - lo) * (canvas - 2 * margin - inf_band);
	}
};

std::string fmt(double v) {
	std::ostringstream os;
	os.precision(6);
	os << v;
	return os.str();
}

void header(std::ostringstream& os) {
	os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas << "\" height=\"" << canvas
	   << "\" viewBox=\"0 0 " << canvas << " " << canvas << "\">\n";
	os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void axes(std::ostringstream& os, const mapper& mp, const std::vector<double>& grid) {
	os << "<line x1=\"" << mp.x(mp.lo) << "\" y1=\"" << mp.y(mp.lo) << "\" x2=\"" << mp.x(mp.hi)
	   << "\" y2=\"" << mp.y(mp.hi) << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
	for (double g : grid) {
		os << "<line x1=\"" << mp.x(g) << "\" y1=\"" << canvas - margin + 4 << "\" x2=\"" << mp.x(g)
		   << "\" y2=\"" << canvas - margin << "\" stroke=\"#333\"/>\n";
		os << "<text x=\"" << mp.x(g) << "\" y=\"" << canvas - margin + 18
		   << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt(g) << "</text>\n";
		os << "<line x1=\"" << margin - 4 << "\" y1=\"" << mp.y(g) << "\" x2=\"" << margin
		   << "\" y2=\"" << mp.y(g) << "\" stroke=\"#333\"/>\n";
		os << "<text x=\"" << margin - 8 << "\" y=\"" << mp.y(g) + 4
		   << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(g) << "</text>\n";
	}
	os << "<text x=\"" << margin - 8 << "\" y=\"" << mp.y(0, true) + 4
	   << "\" font-size=\"11\" text-anchor=\"end\">inf</text>\n";
	os << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << canvas - 2 * margin
	   << "\" height=\"" << canvas - 2 * margin << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
}

std::string label_of(const inv_value& v, codomain_t tag) {
	if (tag == codomain_t::scalar) return std::to_string(v.at(0, 0));
	std::ostringstream os;
	for (size_t r = 0; r < std::max<size_t>(1, v.rows()); ++r) {
		if (r) os << ";";
		for (size_t c = 0; c < std::max<size_t>(1, v.cols()); ++c) os << (c ? "," : "") << v.at(r, c);
	}
	return os.str();
}

}  // namespace

std::string render(const step_invariant& inv) {
	std::ostringstream os;
	header(os);
	mapper mp(inv.grid);
	size_t m = inv.m();
	int64_t vmax = 1;
	for (size_t i = 0; i < m; ++i)
		for (size_t j = i; j <= m; ++j)
			for (size_t r = 0; r < inv.at_cells(i, j).rows(); ++r)
				for (size_t c = 0; c < inv.at_cells(i, j).cols(); ++c)
					vmax = std::max(vmax, inv.at_cells(i, j).at(r, c));
	for (size_t i = 0; i < m; ++i) {
		double x0 = mp.x(inv.grid[i]);
		double x1 = mp.x(i + 1 < m ? inv.grid[i + 1] : mp.hi);
		for (size_t j = i; j <= m; ++j) {
			const inv_value& v = inv.at_cells(i, j);
			if (v.is_zero()) continue;
			double y1, y0;
			if (j == m) {
				y1 = margin - inf_band;
				y0 = margin;
			} else {
				y0 = mp.y(inv.grid[j]);
				y1 = mp.y(j + 1 < m ? inv.grid[j + 1] : mp.hi);
			}
			int64_t top = 0;
			for (size_t r = 0; r < v.rows(); ++r)
				for (size_t c = 0; c < v.cols(); ++c) top = std::max(top, v.at(r, c));
			double opacity = 0.15 + 0.55 * (double)top / (double)vmax;
			os << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0 << "\" height=\""
			   << y0 - y1 << "\" fill=\"#4a7fb5\" fill-opacity=\"" << opacity
			   << "\" stroke=\"#4a7fb5\" stroke-width=\"0.4\"/>\n";
			os << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << (y0 + y1) / 2 + 3
			   << "\" font-size=\"9\" text-anchor=\"middle\">" << label_of(v, inv.tag) << "</text>\n";
		}
	}
	axes(os, mp, inv.grid);
	os << "</svg>\n";
	return os.str();
}

std::string render(const cup_diagram& d) {
	std::ostringstream os;
	header(os);
	mapper mp(d.grid);
	axes(os, mp, d.grid);
	for (const auto& [s, l] : d.values) {
		if (l == 0 || s.empty) continue;
		double cx = mp.x(s.left);
		double cy = mp.y(s.right_inf ? 0 : s.right, s.right_inf);
		os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"#b54a4a\"/>\n";
		os << "<text x=\"" << cx + 7 << "\" y=\"" << cy + 4 << "\" font-size=\"11\">" << l
		   << "</text>\n";
	}
	os << "</svg>\n";
	return os.str();
}

void emit_svg(const step_invariant& inv, const std::string& path) {
	std::ofstream out(path, std::ios::binary);
	if (!out) throw input_error("cannot open " + path + " for writing");
	out << render(inv);
	if (!out) throw input_error("write failed: " + path);
}

void emit_svg(const cup_diagram& d, const std::string& path) {
	std::ofstream out(path, std::ios::binary);
	if (!out) throw input_error("cannot open " + path + " for writing");
	out << render(d);
	if (!out) throw input_error("write failed: " + path);
}

}  // namespace pcup::svg
