#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include "pcup/field.hpp"

namespace pcup {

constexpr double infty = std::numeric_limits<double>::infinity();

// Simplex as its strictly increasing vertex list.
struct simplex_t {
	std::vector<int> vertices;

	simplex_t() = default;
	explicit simplex_t(std::vector<int> v) : vertices(std::move(v)) {
		if (vertices.empty()) throw input_error("simplex needs at least one vertex");
		for (size_t i = 0; i + 1 < vertices.size(); ++i)
			if (vertices[i] >= vertices[i + 1])
				throw input_error("simplex vertices must be strictly increasing");
	}

	int dim() const { return (int)vertices.size() - 1; }

	simplex_t facet(int k) const {  // remove k-th vertex
		std::vector<int> v = vertices;
		v.erase(v.begin() + k);
		return simplex_t(std::move(v));
	}

	std::string str() const {
		std::ostringstream os;
		os << "[";
		for (size_t i = 0; i < vertices.size(); ++i) os << (i ? "," : "") << vertices[i];
		os << "]";
		return os.str();
	}

	bool operator==(const simplex_t& o) const { return vertices == o.vertices; }
	bool operator<(const simplex_t& o) const { return vertices < o.vertices; }
};

// Filtered simplicial complex. Simplices are held in the canonical total
// order (value, dim, lexicographic vertices); every prefix of that order is
// a subcomplex, so restriction to a parameter is an index prefix.
struct filtered_complex {
	std::vector<simplex_t> simplices;
	std::vector<double> values;
	int vertex_count = 0;
	int max_dim = 0;

	std::vector<double> grid;             // sorted distinct filtration values
	std::vector<index_t> prefix_at_grid;  // #simplices with value <= grid[g]
	std::map<std::vector<int>, index_t> index_of;
	std::vector<std::vector<index_t>> by_dim;  // simplex indices per dimension

	size_t size() const { return simplices.size(); }

	index_t index(const simplex_t& s) const {
		auto it = index_of.find(s.vertices);
		if (it == index_of.end()) throw internal_error("simplex not in complex: " + s.str());
		return it->second;
	}

	// number of simplices present at parameter t (grid index gi)
	index_t prefix(size_t gi) const { return prefix_at_grid[gi]; }

	// largest grid index with grid[g] <= t, or -1 if t is below the grid
	int grid_index_at(double t) const {
		auto it = std::upper_bound(grid.begin(), grid.end(), t);
		return (int)(it - grid.begin()) - 1;
	}

	std::vector<simplex_t> restrict_at(double t) const {
		std::vector<simplex_t> out;
		int gi = grid_index_at(t);
		if (gi < 0) return out;
		out.assign(simplices.begin(), simplices.begin() + prefix(gi));
		return out;
	}

	// facet indices with boundary signs (-1)^k, dim >= 1 simplices only
	std::vector<std::pair<index_t, int>> boundary(index_t i) const {
		std::vector<std::pair<index_t, int>> out;
		const simplex_t& s = simplices[i];
		for (int k = 0; k <= s.dim(); ++k) {
			if (s.dim() == 0) break;
			out.emplace_back(index(s.facet(k)), (k % 2 == 0) ? 1 : -1);
		}
		return out;
	}
};

namespace detail {

inline void finalize(filtered_complex& c) {
	std::vector<size_t> order(c.simplices.size());
	for (size_t i = 0; i < order.size(); ++i) order[i] = i;
	std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
		if (c.values[a] != c.values[b]) return c.values[a] < c.values[b];
		int da = c.simplices[a].dim(), db = c.simplices[b].dim();
		if (da != db) return da < db;
		return c.simplices[a].vertices < c.simplices[b].vertices;
	});
	std::vector<simplex_t> ss;
	std::vector<double> vv;
	ss.reserve(order.size());
	vv.reserve(order.size());
	for (size_t i : order) {
		ss.push_back(std::move(c.simplices[i]));
		vv.push_back(c.values[i]);
	}
	c.simplices = std::move(ss);
	c.values = std::move(vv);

	c.max_dim = 0;
	c.index_of.clear();
	for (size_t i = 0; i < c.simplices.size(); ++i) {
		auto [it, fresh] = c.index_of.emplace(c.simplices[i].vertices, (index_t)i);
		if (!fresh) throw input_error("duplicate simplex " + c.simplices[i].str());
		c.max_dim = std::max(c.max_dim, c.simplices[i].dim());
	}
	c.by_dim.assign(c.max_dim + 1, {});
	for (size_t i = 0; i < c.simplices.size(); ++i)
		c.by_dim[c.simplices[i].dim()].push_back((index_t)i);

	c.grid = c.values;
	std::sort(c.grid.begin(), c.grid.end());
	c.grid.erase(std::unique(c.grid.begin(), c.grid.end()), c.grid.end());
	c.prefix_at_grid.assign(c.grid.size(), 0);
	for (size_t g = 0; g < c.grid.size(); ++g) {
		c.prefix_at_grid[g] =
		    std::upper_bound(c.values.begin(), c.values.end(), c.grid[g]) - c.values.begin();
	}

	// face closure and monotonicity
	for (size_t i = 0; i < c.simplices.size(); ++i) {
		const simplex_t& s = c.simplices[i];
		for (int k = 0; k <= s.dim() && s.dim() >= 1; ++k) {
			simplex_t f = s.facet(k);
			auto it = c.index_of.find(f.vertices);
			if (it == c.index_of.end())
				throw input_error("missing face " + f.str() + " of " + s.str());
			if (c.values[it->second] > c.values[i])
				throw input_error("monotonicity violated: face " + f.str() + " enters after " +
				                  s.str());
		}
		if (!s.vertices.empty() && s.vertices.back() >= c.vertex_count)
			c.vertex_count = s.vertices.back() + 1;
	}
}

}  // namespace detail

// Metric input: either points with a metric tag or a full distance matrix.
struct metric_input {
	enum class kind_t { points_euclidean, points_linf, matrix } kind = kind_t::matrix;
	std::vector<std::vector<double>> points;
	std::vector<std::vector<double>> dist;  // full symmetric matrix

	size_t count() const {
		return kind == kind_t::matrix ? dist.size() : points.size();
	}

	double d(size_t i, size_t j) const {
		if (kind == kind_t::matrix) return dist[i][j];
		double out = 0;
		for (size_t k = 0; k < points[i].size(); ++k) {
			double delta = std::abs(points[i][k] - points[j][k]);
			out = kind == kind_t::points_linf ? std::max(out, delta) : out + delta * delta;
		}
		return kind == kind_t::points_linf ? out : std::sqrt(out);
	}

	void validate() const {
		if (kind != kind_t::matrix) {
			for (const auto& pt : points)
				if (pt.size() != points.front().size())
					throw input_error("points must share one dimension");
			return;
		}
		size_t n = dist.size();
		for (size_t i = 0; i < n; ++i) {
			if (dist[i].size() != n) throw input_error("distance matrix must be square");
			if (dist[i][i] != 0) throw input_error("distance matrix diagonal must be zero");
			for (size_t j = 0; j < n; ++j) {
				if (dist[i][j] != dist[j][i]) throw input_error("distance matrix must be symmetric");
				if (dist[i][j] < 0 || !std::isfinite(dist[i][j]))
					throw input_error("distances must be finite and nonnegative");
			}
		}
	}
};

// Vietoris-Rips by incremental clique expansion; a cofacet's value is the max
// of its facets' values, i.e. the clique diameter. Vertices enter at 0.
inline filtered_complex build_vr(const metric_input& input, int max_dim, double max_scale) {
	if (max_dim < 0) throw input_error("max_dim must be >= 0");
	input.validate();
	size_t n = input.count();

	filtered_complex c;
	c.vertex_count = (int)n;
	for (size_t i = 0; i < n; ++i) {
		c.simplices.push_back(simplex_t({(int)i}));
		c.values.push_back(0.0);
	}

	std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) {
			d[i][j] = input.d(i, j);
			if (!std::isfinite(d[i][j])) throw input_error("distances must be finite");
		}

	// grow cliques vertex by vertex, largest vertex last
	std::vector<int> clique;
	auto expand = [&](auto&& self, double diam) -> void {
		if ((int)clique.size() == max_dim + 1) return;
		int last = clique.back();
		for (int v = last + 1; v < (int)n; ++v) {
			double dv = diam;
			bool ok = true;
			for (int u : clique) {
				if (d[u][v] > max_scale) {
					ok = false;
					break;
				}
				dv = std::max(dv, d[u][v]);
			}
			if (!ok) continue;
			clique.push_back(v);
			c.simplices.push_back(simplex_t(clique));
			c.values.push_back(dv);
			self(self, dv);
			clique.pop_back();
		}
	};
	if (max_dim >= 1) {
		for (size_t v = 0; v < n; ++v) {
			clique = {(int)v};
			expand(expand, 0.0);
		}
	}
	detail::finalize(c);
	return c;
}

inline filtered_complex from_explicit(
    const std::vector<std::pair<simplex_t, double>>& simplex_value_pairs) {
	filtered_complex c;
	for (const auto& [s, v] : simplex_value_pairs) {
		if (!std::isfinite(v)) throw input_error("filtration values must be finite");
		c.simplices.push_back(s);
		c.values.push_back(v);
	}
	detail::finalize(c);
	return c;
}

// Shift every filtration value by delta (grid translates along with it).
inline filtered_complex shifted(const filtered_complex& c, double delta) {
	filtered_complex out;
	out.simplices = c.simplices;
	out.values = c.values;
	for (double& v : out.values) v += delta;
	detail::finalize(out);
	return out;
}

}  // namespace pcup
