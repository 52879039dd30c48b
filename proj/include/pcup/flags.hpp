#pragma once

#include "pcup/cupcore.hpp"

namespace pcup {

// Dimension of a flag: non-increasing sequence m_1 >= m_2 >= ... (1-indexed
// depth). Krull-Schmidt decomposition into K^n summands with multiplicities
// m_n - m_{n+1}; the dimension sequence is a complete invariant.
inline std::map<int, int64_t> flag_decompose(const std::vector<int64_t>& dims) {
	for (size_t i = 0; i < dims.size(); ++i) {
		if (dims[i] < 0) throw input_error("flag dimensions must be nonnegative");
		if (i + 1 < dims.size() && dims[i] < dims[i + 1])
			throw input_error("flag dimension sequence must be non-increasing");
	}
	std::map<int, int64_t> out;
	for (size_t i = 0; i < dims.size(); ++i) {
		int64_t next = i + 1 < dims.size() ? dims[i + 1] : 0;
		if (dims[i] - next > 0) out[(int)i + 1] = dims[i] - next;
	}
	return out;
}

inline std::vector<int64_t> flag_dim_of_decomposition(const std::map<int, int64_t>& parts) {
	std::vector<int64_t> dims;
	for (const auto& [depth, mult] : parts) {
		if ((size_t)depth > dims.size()) dims.resize(depth, 0);
		for (int i = 0; i < depth; ++i) dims[i] += mult;
	}
	return dims;
}

namespace detail {

// All distinct l-fold products of positive-degree representatives, l up to
// max_ell, as multisets of bars (reordering only changes the product by a
// unit, so spans are unaffected). Partial products are memoized and empty
// supports pruned. Products are deduplicated by support together with their
// class coordinates at every grid value of the support.
struct phi_engine {
	const barcode_with_reps& bc;
	int max_ell;

	struct product_t {
		std::vector<size_t> bars;  // sorted multiset
		int degree_sum;
		support_interval supp;
		// class coordinates at each grid value in [supp.left_gi, right end)
		std::vector<std::vector<std::pair<size_t, coeff_t>>> coords;
	};
	std::vector<std::vector<product_t>> levels;  // levels[l-1]

	phi_engine(const barcode_with_reps& b, int ell) : bc(b), max_ell(ell) { build(); }

	void build() {
		levels.assign(max_ell, {});
		int m = (int)bc.grid().size();
		auto class_track = [&](const cochain& x, const support_interval& s) {
			std::vector<std::vector<std::pair<size_t, coeff_t>>> coords;
			int hi = s.right_inf ? m - 1 : s.right_gi - 1;
			for (int g = s.left_gi; g <= hi; ++g) coords.push_back(bc.class_coords(x, g).coords);
			return coords;
		};

		std::vector<cochain> chains;  // parallel to the current level
		std::map<std::tuple<support_interval, int, std::vector<std::vector<std::pair<size_t, coeff_t>>>>,
		         std::pair<product_t, cochain>>
		    dedup;
		for (size_t i : bc.positive) {
			const bar_t& bar = bc.bars[i];
			support_interval s;
			s.empty = false;
			s.left = bar.birth;
			s.left_gi = bar.birth_gi;
			s.right = bar.death;
			s.right_gi = bar.death_gi;
			s.right_inf = bar.infinite();
			// a representative's class at any alive parameter is the unit
			// vector on its own bar; no solve needed at depth 1
			int hi = s.right_inf ? m - 1 : s.right_gi - 1;
			std::vector<std::vector<std::pair<size_t, coeff_t>>> coords(
			    hi - s.left_gi + 1, {{i, 1}});
			levels[0].push_back(product_t{{i}, bar.degree, s, std::move(coords)});
			chains.push_back(bar.rep);
		}

		for (int l = 1; l < max_ell; ++l) {
			dedup.clear();
			for (size_t e = 0; e < levels[l - 1].size(); ++e) {
				const product_t& prev = levels[l - 1][e];
				for (size_t i : bc.positive) {
					if (i < prev.bars.back()) continue;  // multisets: extend by bars >= last
					const bar_t& bar = bc.bars[i];
					if (prev.degree_sum + bar.degree > bc.cx->max_dim) continue;
					cochain x = cup(*bc.cx, bc.field, chains[e], bar.rep);
					if (x.is_zero()) continue;
					int mb = std::max(prev.supp.left_gi, bar.birth_gi);
					// right bound: intersection of constituent bars
					int md = prev.supp.right_gi;
					if (!bar.infinite())
						md = md < 0 ? bar.death_gi : std::min(md, bar.death_gi);
					support_interval s = support_scan(bc, x, mb, md);
					if (s.empty) continue;
					auto coords = class_track(x, s);
					std::vector<size_t> bars = prev.bars;
					bars.push_back(i);
					dedup.try_emplace(
					    std::make_tuple(s, prev.degree_sum + bar.degree, coords),
					    std::make_pair(product_t{std::move(bars), prev.degree_sum + bar.degree, s, coords},
					                   std::move(x)));
				}
			}
			chains.clear();
			for (auto& [key, pc] : dedup) {
				levels[l].push_back(std::move(pc.first));
				chains.push_back(std::move(pc.second));
			}
		}
	}

	// rank at the closed grid interval [s_i, s_j] (j == -1: infinity) of the
	// degree-p part of the l-fold product image, via row reduction of the
	// spanning classes expressed in the representative basis at s_i.
	int64_t rank_at(int i, int j, int p, int l) const {
		reduced_rows basis;
		for (const product_t& prod : levels[l - 1]) {
			if (prod.degree_sum != p || !prod.supp.contains_closed(i, j)) continue;
			sparse_vec v;
			for (const auto& [bar, c] : prod.coords[i - prod.supp.left_gi]) v.push((index_t)bar, c);
			reduce_insert(bc.field, basis, v);
		}
		return (int64_t)basis.rank();
	}
};

}  // namespace detail

// Rank invariant of the persistent cup module: matrix-valued step invariant,
// rows p = 1..max_dim, columns l = 1..max_ell. Column 1 is the standard
// positive-degree rank invariant.
inline step_invariant phi_rank(const barcode_with_reps& bc, int max_ell = -1) {
	if (max_ell < 0) max_ell = std::max(1, bc.cx->max_dim);
	if (max_ell < 1) throw input_error("phi_rank needs max_ell >= 1");
	detail::phi_engine engine(bc, max_ell);
	step_invariant inv;
	inv.tag = codomain_t::matrix;
	inv.init_grid(bc.grid());
	size_t m = inv.m();
	int pmax = std::max(1, bc.cx->max_dim);
	for (size_t i = 0; i < m; ++i) {
		for (size_t j = i; j <= m; ++j) {
			int jj = j == m ? -1 : (int)j;
			inv_value v;
			for (int p = 1; p <= pmax; ++p)
				for (int l = 1; l <= max_ell; ++l) {
					int64_t r = engine.rank_at((int)i, jj, p, l);
					if (r != 0) v.set(p - 1, l - 1, r);
				}
			v.trim();
			inv.at_cells(i, j) = std::move(v);
		}
	}
	return inv;
}

// Barcode of the degree-p persistent l-cup module, by Mobius inversion of the
// scalar (p, l) rank function. Multiplicities must be nonnegative (the module
// is interval-decomposable); a negative value signals a rank-function bug.
struct lcup_barcode_t {
	int p = 1, ell = 1;
	std::vector<double> grid;
	std::vector<std::pair<double, double>> bars;  // [birth, death), death may be infinity

	bool operator==(const lcup_barcode_t& o) const {
		return p == o.p && ell == o.ell && bars == o.bars;
	}
};

inline lcup_barcode_t lcup_barcode(const barcode_with_reps& bc, int ell, int p) {
	if (ell < 1 || p < 1) throw input_error("lcup_barcode needs ell >= 1 and p >= 1");
	detail::phi_engine engine(bc, ell);
	step_invariant rank;
	rank.tag = codomain_t::scalar;
	rank.init_grid(bc.grid());
	size_t m = rank.m();
	for (size_t i = 0; i < m; ++i)
		for (size_t j = i; j <= m; ++j)
			rank.at_cells(i, j) =
			    inv_value::scalar(engine.rank_at((int)i, j == m ? -1 : (int)j, p, ell));

	signed_diagram d = mobius_invert(rank);
	lcup_barcode_t out;
	out.p = p;
	out.ell = ell;
	out.grid = bc.grid();
	for (const auto& [key, v] : d.entries) {
		auto [i, j] = key;
		int64_t mult = v.at(0, 0);
		if (mult < 0)
			throw internal_error("negative multiplicity in l-cup barcode at grid cell (" +
			                     std::to_string(i) + "," + std::to_string(j) + ")");
		if (mult == 0) continue;
		if (j == m) {
			for (int64_t k = 0; k < mult; ++k) out.bars.emplace_back(rank.grid[i], infty);
		} else if (j + 1 < m) {
			for (int64_t k = 0; k < mult; ++k) out.bars.emplace_back(rank.grid[i], rank.grid[j + 1]);
		} else {
			// a class alive at the last grid value never dies; mass here is impossible
			throw internal_error("l-cup rank function puts mass at the last finite column");
		}
	}
	std::sort(out.bars.begin(), out.bars.end());
	return out;
}

// Persistent cup-length invariant recovered from the l-cup barcodes:
// value at [a,b] = max over bars [c,d) containing [a,b] of the max l with
// [c,d) in barc(Phi^l).
inline step_invariant cup_from_lcup(const std::vector<lcup_barcode_t>& barcodes,
                                    const std::vector<double>& grid) {
	step_invariant inv;
	inv.tag = codomain_t::scalar;
	inv.init_grid(grid);
	size_t m = inv.m();
	std::map<std::pair<double, double>, int> max_ell_of_bar;
	for (const lcup_barcode_t& b : barcodes)
		for (const auto& bar : b.bars) {
			int& v = max_ell_of_bar[bar];
			v = std::max(v, b.ell);
		}
	for (const auto& [bar, l] : max_ell_of_bar) {
		for (size_t i = 0; i < m; ++i) {
			if (grid[i] < bar.first) continue;
			for (size_t j = i; j <= m; ++j) {
				bool inside = j == m ? bar.second == infty : grid[j] < bar.second;
				if (!inside) continue;
				inv_value& v = inv.at_cells(i, j);
				if (v.at(0, 0) < l) v = inv_value::scalar(l);
			}
		}
	}
	return inv;
}

}  // namespace pcup
