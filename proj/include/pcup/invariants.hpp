#pragma once

#include <algorithm>
#include <map>

#include "pcup/field.hpp"

namespace pcup {

// Value of a persistent invariant at one interval: a finitely supported
// integer matrix. Scalars are 1x1, sequences a single row. Entries outside
// the stored block are zero; comparisons are entrywise over the union shape.
struct inv_value {
	std::vector<std::vector<int64_t>> m;

	inv_value() = default;
	static inv_value scalar(int64_t v) {
		inv_value x;
		if (v != 0) x.m = {{v}};
		return x;
	}
	static inv_value sequence(std::vector<int64_t> row) {
		inv_value x;
		x.m = {std::move(row)};
		x.trim();
		return x;
	}
	static inv_value matrix(std::vector<std::vector<int64_t>> rows) {
		inv_value x;
		x.m = std::move(rows);
		x.trim();
		return x;
	}

	size_t rows() const { return m.size(); }
	size_t cols() const {
		size_t c = 0;
		for (const auto& r : m) c = std::max(c, r.size());
		return c;
	}
	int64_t at(size_t r, size_t c) const {
		if (r >= m.size() || c >= m[r].size()) return 0;
		return m[r][c];
	}
	void set(size_t r, size_t c, int64_t v) {
		if (m.size() <= r) m.resize(r + 1);
		if (m[r].size() <= c) m[r].resize(c + 1, 0);
		m[r][c] = v;
	}
	void trim() {
		for (auto& r : m)
			while (!r.empty() && r.back() == 0) r.pop_back();
		while (!m.empty() && m.back().empty()) m.pop_back();
	}
	bool is_zero() const {
		for (const auto& r : m)
			for (int64_t v : r)
				if (v != 0) return false;
		return true;
	}
	bool operator==(const inv_value& o) const {
		size_t R = std::max(rows(), o.rows()), C = std::max(cols(), o.cols());
		for (size_t r = 0; r < R; ++r)
			for (size_t c = 0; c < C; ++c)
				if (at(r, c) != o.at(r, c)) return false;
		return true;
	}
	bool operator!=(const inv_value& o) const { return !(*this == o); }
	bool operator<(const inv_value& o) const {  // lexicographic, for map keys
		size_t R = std::max(rows(), o.rows()), C = std::max(cols(), o.cols());
		for (size_t r = 0; r < R; ++r)
			for (size_t c = 0; c < C; ++c)
				if (at(r, c) != o.at(r, c)) return at(r, c) < o.at(r, c);
		return false;
	}
	// entrywise partial order
	bool leq(const inv_value& o) const {
		size_t R = std::max(rows(), o.rows()), C = std::max(cols(), o.cols());
		for (size_t r = 0; r < R; ++r)
			for (size_t c = 0; c < C; ++c)
				if (at(r, c) > o.at(r, c)) return false;
		return true;
	}
	friend inv_value combine(const inv_value& a, const inv_value& b, int64_t (*op)(int64_t, int64_t)) {
		inv_value out;
		size_t R = std::max(a.rows(), b.rows()), C = std::max(a.cols(), b.cols());
		for (size_t r = 0; r < R; ++r)
			for (size_t c = 0; c < C; ++c) {
				int64_t v = op(a.at(r, c), b.at(r, c));
				if (v != 0) out.set(r, c, v);
			}
		out.trim();
		return out;
	}
	inv_value plus(const inv_value& o) const {
		return combine(*this, o, [](int64_t x, int64_t y) { return x + y; });
	}
	inv_value minus(const inv_value& o) const {
		return combine(*this, o, [](int64_t x, int64_t y) { return x - y; });
	}
	inv_value vmax(const inv_value& o) const {
		return combine(*this, o, [](int64_t x, int64_t y) { return std::max(x, y); });
	}
};

enum class codomain_t { scalar, sequence, matrix };

inline const char* codomain_name(codomain_t t) {
	switch (t) {
		case codomain_t::scalar: return "scalar";
		case codomain_t::sequence: return "sequence";
		default: return "matrix";
	}
}

// Step-function persistent invariant on the interval poset of a finite grid
// s_1 < ... < s_m. The table holds the value at each closed grid interval
// [s_i, s_j] plus an infinity column. An arbitrary query [a, b] snaps both
// endpoints down to the grid (half-open cells [s_i, s_{i+1}), matching the
// half-open bar convention); anything below s_1 is the identity object, 0.
struct step_invariant {
	codomain_t tag = codomain_t::scalar;
	std::vector<double> grid;
	std::vector<std::vector<inv_value>> vals;  // vals[i][j - i] = value at [s_i, s_j]
	std::vector<inv_value> inf_col;            // value at [s_i, infinity]

	static step_invariant zero(codomain_t t) {
		step_invariant s;
		s.tag = t;
		return s;
	}

	void init_grid(std::vector<double> g) {
		grid = std::move(g);
		vals.assign(grid.size(), {});
		for (size_t i = 0; i < grid.size(); ++i) vals[i].assign(grid.size() - i, inv_value{});
		inf_col.assign(grid.size(), inv_value{});
	}

	size_t m() const { return grid.size(); }

	// j in [i, m-1], or j == m meaning the infinity column
	const inv_value& at_cells(size_t i, size_t j) const {
		return j == m() ? inf_col[i] : vals[i][j - i];
	}
	inv_value& at_cells(size_t i, size_t j) { return j == m() ? inf_col[i] : vals[i][j - i]; }

	int snap(double t) const {
		auto it = std::upper_bound(grid.begin(), grid.end(), t);
		return (int)(it - grid.begin()) - 1;
	}

	inv_value eval(double a, double b) const {
		if (grid.empty()) return inv_value{};
		int i = snap(a);
		if (i < 0) return inv_value{};
		if (b == infty) return inf_col[i];
		int j = snap(b);
		if (j < 0) return inv_value{};
		return vals[i][j - i];
	}

	bool antitone() const {
		for (size_t i = 0; i < m(); ++i)
			for (size_t j = i; j <= m(); ++j) {
				if (i + 1 <= j && i + 1 < m() && !at_cells(i, j).leq(at_cells(i + 1, j))) return false;
				if (j > i && !at_cells(i, j).leq(at_cells(i, j - 1))) return false;
			}
		return true;
	}

	bool operator==(const step_invariant& o) const {
		return tag == o.tag && grid == o.grid && vals == o.vals && inf_col == o.inf_col;
	}
};

// Signed Mobius diagram on grid intervals; values may be negative.
struct signed_diagram {
	codomain_t tag = codomain_t::scalar;
	std::vector<double> grid;
	std::map<std::pair<size_t, size_t>, inv_value> entries;  // key (i, j), j == m() means infinity

	size_t m() const { return grid.size(); }
	inv_value at(size_t i, size_t j) const {
		auto it = entries.find({i, j});
		return it == entries.end() ? inv_value{} : it->second;
	}
	bool operator==(const signed_diagram& o) const {
		return tag == o.tag && grid == o.grid && entries == o.entries;
	}
};

// Four-term alternating-sum inversion (two terms on the infinity column),
// computed entrywise for sequence/matrix codomains. I([s_0, .]) terms use the
// identity object below the grid, i.e. zero.
inline signed_diagram mobius_invert(const step_invariant& inv) {
	signed_diagram d;
	d.tag = inv.tag;
	d.grid = inv.grid;
	size_t m = inv.m();
	auto I = [&](int i, size_t j) -> inv_value {
		if (i < 0) return inv_value{};
		return inv.at_cells((size_t)i, j);
	};
	for (size_t i = 0; i < m; ++i) {
		for (size_t j = i; j < m; ++j) {
			size_t jn = j + 1;  // j == m-1 steps to the infinity column
			inv_value v = I((int)i, j)
			                  .minus(I((int)i - 1, j))
			                  .minus(I((int)i, jn))
			                  .plus(I((int)i - 1, jn));
			if (!v.is_zero()) d.entries[{i, j}] = v;
		}
		inv_value v = I((int)i, m).minus(I((int)i - 1, m));
		if (!v.is_zero()) d.entries[{i, m}] = v;
	}
	return d;
}

// I([a,b]) = sum of diagram values over grid intervals containing [a,b].
inline step_invariant mobius_sum(const signed_diagram& d) {
	step_invariant inv;
	inv.tag = d.tag;
	inv.init_grid(d.grid);
	size_t m = inv.m();
	for (const auto& [key, v] : d.entries) {
		auto [c, dd] = key;
		for (size_t i = c; i < m; ++i) {
			if (dd == m) {
				inv.inf_col[i] = inv.inf_col[i].plus(v);
				for (size_t j = i; j < m; ++j) inv.vals[i][j - i] = inv.vals[i][j - i].plus(v);
			} else {
				for (size_t j = i; j <= dd; ++j) inv.vals[i][j - i] = inv.vals[i][j - i].plus(v);
			}
		}
	}
	return inv;
}

// Pointwise max / sum on the union grid (natural-valued inputs).
inline std::vector<double> merge_grids(const std::vector<double>& a, const std::vector<double>& b) {
	std::vector<double> g = a;
	g.insert(g.end(), b.begin(), b.end());
	std::sort(g.begin(), g.end());
	g.erase(std::unique(g.begin(), g.end()), g.end());
	return g;
}

namespace detail {
template <typename Op>
step_invariant pointwise(const step_invariant& a, const step_invariant& b, Op op) {
	if (a.tag != b.tag) throw input_error("codomain mismatch");
	step_invariant out;
	out.tag = a.tag;
	out.init_grid(merge_grids(a.grid, b.grid));
	size_t m = out.m();
	for (size_t i = 0; i < m; ++i) {
		for (size_t j = i; j < m; ++j)
			out.vals[i][j - i] = op(a.eval(out.grid[i], out.grid[j]), b.eval(out.grid[i], out.grid[j]));
		out.inf_col[i] = op(a.eval(out.grid[i], infty), b.eval(out.grid[i], infty));
	}
	return out;
}
}  // namespace detail

inline step_invariant invariant_max(const step_invariant& a, const step_invariant& b) {
	return detail::pointwise(a, b, [](const inv_value& x, const inv_value& y) { return x.vmax(y); });
}

inline step_invariant invariant_sum(const step_invariant& a, const step_invariant& b) {
	return detail::pointwise(a, b, [](const inv_value& x, const inv_value& y) { return x.plus(y); });
}

}  // namespace pcup
