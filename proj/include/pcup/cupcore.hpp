#pragma once

#include "pcup/cohomology.hpp"
#include "pcup/invariants.hpp"

namespace pcup {

// Simplicial cup product: on a (p+q)-simplex [v_0..v_{p+q}] the coefficient is
// sigma([v_0..v_p]) * tau([v_p..v_{p+q}]).
inline cochain cup(const filtered_complex& cx, const fp_field& f, const cochain& sigma,
                   const cochain& tau) {
	cochain out;
	int p = sigma.degree, q = tau.degree;
	out.degree = p + q;
	if (p + q > cx.max_dim || sigma.is_zero() || tau.is_zero()) return out;
	for (index_t s : cx.by_dim[p + q]) {
		const std::vector<int>& v = cx.simplices[s].vertices;
		coeff_t a = sigma.coeffs.at(cx.index(simplex_t(std::vector<int>(v.begin(), v.begin() + p + 1))));
		if (a == 0) continue;
		coeff_t b = tau.coeffs.at(cx.index(simplex_t(std::vector<int>(v.begin() + p, v.end()))));
		if (b == 0) continue;
		out.coeffs.push(s, f.mul(a, b));
	}
	return out;
}

// Support of an l-fold product of representative cocycles: the parameter set
// where the product class is nonzero. Nonempty supports are intervals whose
// right end is the right end of the intersection of the bars.
struct support_interval {
	bool empty = true;
	double left = 0, right = 0;
	bool right_inf = false;
	int left_gi = -1, right_gi = -1;  // right_gi = grid index of the right end, -1 if infinite

	// contains the closed grid interval [s_i, s_j] (j == -1 encodes infinity)
	bool contains_closed(int i, int j) const {
		if (empty || i < left_gi) return false;
		if (j < 0) return right_inf;
		return right_inf || j < right_gi;
	}
	bool operator==(const support_interval& o) const {
		if (empty != o.empty) return false;
		if (empty) return true;
		return left == o.left && right_inf == o.right_inf && (right_inf || right == o.right);
	}
	bool operator<(const support_interval& o) const {
		return std::make_tuple(empty, left, !right_inf, right) <
		       std::make_tuple(o.empty, o.left, !o.right_inf, o.right);
	}
	std::string str() const {
		if (empty) return "()";
		std::ostringstream os;
		os << "[" << left << "," << (right_inf ? std::string("inf") : std::to_string(right)) << ")";
		return os.str();
	}
};

namespace detail {

// Scan the grid range of the bars' intersection downward from its right end.
// The class is evaluated at grid values only; between them nothing changes.
inline support_interval support_scan(const barcode_with_reps& bc, const cochain& x, int max_birth_gi,
                                     int min_death_gi /* -1 = infinity */) {
	support_interval s;
	int m = (int)bc.grid().size();
	int hi = min_death_gi < 0 ? m - 1 : min_death_gi - 1;
	if (hi < max_birth_gi) return s;
	if (!bc.class_nonzero(x, hi)) return s;
	int lo = hi;
	while (lo > max_birth_gi && bc.class_nonzero(x, lo - 1)) --lo;
	s.empty = false;
	s.left_gi = lo;
	s.left = bc.grid()[lo];
	s.right_gi = min_death_gi;
	s.right_inf = min_death_gi < 0;
	s.right = s.right_inf ? infty : bc.grid()[min_death_gi];
	return s;
}

inline void intersection_bounds(const barcode_with_reps& bc, const std::vector<size_t>& bars,
                                int& max_birth_gi, int& min_death_gi) {
	max_birth_gi = 0;
	min_death_gi = -1;
	for (size_t b : bars) {
		const bar_t& bar = bc.bars[b];
		max_birth_gi = std::max(max_birth_gi, bar.birth_gi);
		if (!bar.infinite())
			min_death_gi = min_death_gi < 0 ? bar.death_gi : std::min(min_death_gi, bar.death_gi);
	}
}

}  // namespace detail

inline support_interval support(const barcode_with_reps& bc, const std::vector<size_t>& bar_indices) {
	if (bar_indices.empty()) throw input_error("support needs at least one bar");
	cochain x;
	bool first = true;
	for (size_t b : bar_indices) {
		if (b >= bc.bars.size()) throw input_error("bar does not belong to this barcode");
		if (bc.bars[b].degree < 1) throw input_error("support is defined for positive-degree bars");
		x = first ? bc.bars[b].rep : cup(*bc.cx, bc.field, x, bc.bars[b].rep);
		first = false;
	}
	int mb, md;
	detail::intersection_bounds(bc, bar_indices, mb, md);
	return detail::support_scan(bc, x, mb, md);
}

// Persistent cup-length diagram: interval -> max l realized as the support of
// an l-fold product of representatives.
struct cup_diagram {
	std::vector<double> grid;
	std::map<support_interval, int> values;

	int at(const support_interval& s) const {
		auto it = values.find(s);
		return it == values.end() ? 0 : it->second;
	}
	bool operator==(const cup_diagram& o) const { return grid == o.grid && values == o.values; }
};

// Iterative expansion: Sigma_1 = positive bars; repeatedly cup Sigma_l with
// every positive bar and keep nonempty supports. Degrees strictly increase, so
// the loop stops by max_dim. Sigma_{l+1} is deduplicated by (support, class at
// the support's left end) and kept in sorted order for determinism.
inline cup_diagram cup_length_diagram(const barcode_with_reps& bc) {
	cup_diagram dgm;
	dgm.grid = bc.grid();

	struct elem {
		cochain x;
		support_interval supp;
		int max_birth_gi;
		int min_death_gi;
	};
	auto record = [&](const support_interval& s, int l) {
		int& v = dgm.values[s];
		v = std::max(v, l);
	};

	std::vector<elem> sigma;
	for (size_t b : bc.positive) {
		const bar_t& bar = bc.bars[b];
		support_interval s;
		s.empty = false;
		s.left = bar.birth;
		s.left_gi = bar.birth_gi;
		s.right = bar.death;
		s.right_gi = bar.death_gi;
		s.right_inf = bar.infinite();
		record(s, 1);
		sigma.push_back({bar.rep, s, bar.birth_gi, bar.death_gi});
	}

	int l = 1;
	while (!sigma.empty() && l < bc.cx->max_dim) {
		std::map<std::pair<support_interval, std::vector<std::pair<size_t, coeff_t>>>, elem> next;
		for (const elem& e : sigma) {
			for (size_t b : bc.positive) {
				const bar_t& bar = bc.bars[b];
				cochain x = cup(*bc.cx, bc.field, e.x, bar.rep);
				if (x.is_zero()) continue;
				int mb = std::max(e.max_birth_gi, bar.birth_gi);
				int md = e.min_death_gi;
				if (!bar.infinite()) md = md < 0 ? bar.death_gi : std::min(md, bar.death_gi);
				support_interval s = detail::support_scan(bc, x, mb, md);
				if (s.empty) continue;
				auto key = std::make_pair(s, bc.class_coords(x, s.left_gi).coords);
				next.try_emplace(std::move(key), elem{std::move(x), s, mb, md});
			}
		}
		sigma.clear();
		++l;
		for (auto& [key, e] : next) {
			record(e.supp, l);
			sigma.push_back(std::move(e));
		}
	}
	return dgm;
}

// Tropical Mobius recovery: value at [a,b] is the max diagram value over
// intervals containing [a,b].
inline step_invariant invariant_from_diagram(const cup_diagram& d) {
	step_invariant inv;
	inv.tag = codomain_t::scalar;
	inv.init_grid(d.grid);
	size_t m = inv.m();
	for (const auto& [s, l] : d.values) {
		for (size_t i = (size_t)std::max(s.left_gi, 0); i < m; ++i) {
			size_t jhi = s.right_inf ? m - 1 : (size_t)s.right_gi - 1;
			for (size_t j = i; j <= jhi && j < m; ++j) {
				inv_value& v = inv.at_cells(i, j);
				if (v.at(0, 0) < l) v = inv_value::scalar(l);
			}
			if (s.right_inf) {
				inv_value& v = inv.inf_col[i];
				if (v.at(0, 0) < l) v = inv_value::scalar(l);
			}
		}
	}
	return inv;
}

// Brute-force cup-length of im(H+(X_b) -> H+(X_a)): breadth-first products of
// the restricted basis classes, pruning and deduplicating by class at a. This
// is the independent oracle for the tropical Mobius theorem.
inline int64_t cup_length_of_image(const barcode_with_reps& bc, double a, double b) {
	if (a > b) throw input_error("cup_length_of_image needs a <= b");
	int gia = bc.cx->grid_index_at(a);
	if (gia < 0) return 0;
	std::vector<size_t> basis;
	for (size_t i : bc.positive) {
		const bar_t& bar = bc.bars[i];
		bool contains = bar.birth <= a && (bar.infinite() || (b != infty && b < bar.death));
		if (contains) basis.push_back(i);
	}
	if (basis.empty()) return 0;

	// classes at a, keyed by (degree, coords) to prune duplicates
	std::map<std::pair<int, std::vector<std::pair<size_t, coeff_t>>>, cochain> level;
	for (size_t i : basis)
		level.try_emplace({bc.bars[i].degree, bc.class_coords(bc.bars[i].rep, gia).coords},
		                  bc.bars[i].rep);
	int64_t length = 0;
	int l = 1;
	while (!level.empty()) {
		length = l;
		if (l >= bc.cx->max_dim) break;
		std::map<std::pair<int, std::vector<std::pair<size_t, coeff_t>>>, cochain> next;
		for (const auto& [key, x] : level) {
			for (size_t i : basis) {
				cochain y = cup(*bc.cx, bc.field, x, bc.bars[i].rep);
				if (y.is_zero() || !bc.class_nonzero(y, gia)) continue;
				next.try_emplace({y.degree, bc.class_coords(y, gia).coords}, std::move(y));
			}
		}
		level = std::move(next);
		++l;
	}
	return length;
}

inline step_invariant cup_invariant(const barcode_with_reps& bc) {
	return invariant_from_diagram(cup_length_diagram(bc));
}

}  // namespace pcup
