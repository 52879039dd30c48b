#pragma once

#include <array>

#include "pcup/invariants.hpp"

namespace pcup {

struct erosion_result {
	double value = infty;
	std::vector<double> candidates;  // the checked epsilon set, ascending
};

namespace detail {

// The erosion predicate at a fixed epsilon, checked exactly: evaluations are
// constant on cells of the partition cut by both grids shifted by 0 and
// +-epsilon, so sampling every cut point and every midpoint decides the
// universal quantifier.
inline bool eroded_at(const step_invariant& a, const step_invariant& b, double eps) {
	std::vector<double> cuts;
	for (const auto* inv : {&a, &b})
		for (double g : inv->grid) {
			cuts.push_back(g);
			cuts.push_back(g - eps);
			cuts.push_back(g + eps);
		}
	std::sort(cuts.begin(), cuts.end());
	cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
	std::vector<double> samples;
	if (cuts.empty()) return true;
	samples.push_back(cuts.front() - 1);
	for (size_t i = 0; i < cuts.size(); ++i) {
		samples.push_back(cuts[i]);
		if (i + 1 < cuts.size()) samples.push_back(cuts[i] + (cuts[i + 1] - cuts[i]) / 2);
	}
	samples.push_back(cuts.back() + 1);
	size_t n = samples.size();

	// snapped cell indices per sample, for s, s-eps, s+eps on each grid
	std::vector<std::array<int, 3>> ca(n), cb(n);
	for (size_t i = 0; i < n; ++i) {
		ca[i] = {a.snap(samples[i]), a.snap(samples[i] - eps), a.snap(samples[i] + eps)};
		cb[i] = {b.snap(samples[i]), b.snap(samples[i] - eps), b.snap(samples[i] + eps)};
	}
	static const inv_value zero_value{};
	auto cell = [](const step_invariant& inv, int i, int j) -> const inv_value& {
		if (i < 0 || j < 0) return zero_value;
		return inv.at_cells((size_t)i, (size_t)j);
	};
	auto cell_inf = [](const step_invariant& inv, int i) -> const inv_value& {
		if (i < 0) return zero_value;
		return inv.inf_col[(size_t)i];
	};

	for (size_t i = 0; i < n; ++i) {
		if (!cell_inf(b, cb[i][1]).leq(cell_inf(a, ca[i][0]))) return false;
		if (!cell_inf(a, ca[i][1]).leq(cell_inf(b, cb[i][0]))) return false;
		for (size_t j = i; j < n; ++j) {
			if (!cell(b, cb[i][1], cb[j][2]).leq(cell(a, ca[i][0], ca[j][0]))) return false;
			if (!cell(a, ca[i][1], ca[j][2]).leq(cell(b, cb[i][0], cb[j][0]))) return false;
		}
	}
	return true;
}

}  // namespace detail

// Smallest eroding epsilon. The predicate is monotone in epsilon and can only
// change where some a-eps or b+eps crosses a grid value; eliminating the
// query endpoints (a <= b couples them) bounds those crossings by pairwise
// grid differences and their halves, so the infimum lies in that finite set.
inline erosion_result erosion(const step_invariant& a, const step_invariant& b) {
	if (a.tag != b.tag)
		throw input_error(std::string("codomain mismatch: ") + codomain_name(a.tag) + " vs " +
		                  codomain_name(b.tag));
	if (!a.antitone() || !b.antitone())
		throw input_error("erosion requires antitone step invariants");
	erosion_result out;
	std::vector<double> merged = merge_grids(a.grid, b.grid);
	std::vector<double>& c = out.candidates;
	c.push_back(0);
	for (size_t i = 0; i < merged.size(); ++i)
		for (size_t j = i + 1; j < merged.size(); ++j) {
			double d = merged[j] - merged[i];
			c.push_back(d);
			c.push_back(d / 2);
		}
	std::sort(c.begin(), c.end());
	c.erase(std::unique(c.begin(), c.end()), c.end());

	auto first_passing = std::partition_point(
	    c.begin(), c.end(), [&](double eps) { return !detail::eroded_at(a, b, eps); });
	if (first_passing == c.end()) return out;  // value stays infinity
	out.value = *first_passing;
	return out;
}

// --- bottleneck -------------------------------------------------------------

namespace detail {

inline double bar_cost(const std::pair<double, double>& x, const std::pair<double, double>& y) {
	bool xi = x.second == infty, yi = y.second == infty;
	if (xi != yi) return infty;
	double d = std::abs(x.first - y.first);
	if (!xi) d = std::max(d, std::abs(x.second - y.second));
	return d;
}

inline double diag_cost(const std::pair<double, double>& x) {
	return x.second == infty ? infty : (x.second - x.first) / 2;
}

// perfect matching on the standard diagonal-augmented bipartite graph
inline bool feasible(const std::vector<std::pair<double, double>>& u,
                     const std::vector<std::pair<double, double>>& v, double eps) {
	size_t n1 = u.size(), n2 = v.size(), n = n1 + n2;
	// left: u bars then diagonal slots for v; right: v bars then diagonal slots for u
	std::vector<std::vector<size_t>> adj(n);
	for (size_t i = 0; i < n1; ++i) {
		for (size_t j = 0; j < n2; ++j)
			if (bar_cost(u[i], v[j]) <= eps) adj[i].push_back(j);
		if (diag_cost(u[i]) <= eps) adj[i].push_back(n2 + i);
	}
	for (size_t j = 0; j < n2; ++j) {
		size_t left = n1 + j;
		if (diag_cost(v[j]) <= eps) adj[left].push_back(j);
		for (size_t i = 0; i < n1; ++i) adj[left].push_back(n2 + i);
	}
	std::vector<int> match_right(n, -1);
	std::vector<bool> seen;
	auto augment = [&](auto&& self, size_t left) -> bool {
		for (size_t r : adj[left]) {
			if (seen[r]) continue;
			seen[r] = true;
			if (match_right[r] < 0 || self(self, (size_t)match_right[r])) {
				match_right[r] = (int)left;
				return true;
			}
		}
		return false;
	};
	for (size_t left = 0; left < n; ++left) {
		seen.assign(n, false);
		if (!augment(augment, left)) return false;
	}
	return true;
}

}  // namespace detail

// Standard bottleneck distance between finite barcodes, via binary search on
// the candidate cost set with bipartite feasibility checks.
inline double bottleneck(std::vector<std::pair<double, double>> b1,
                         std::vector<std::pair<double, double>> b2) {
	auto is_inf = [](const std::pair<double, double>& x) { return x.second == infty; };
	std::vector<double> inf1, inf2;
	std::vector<std::pair<double, double>> fin1, fin2;
	for (const auto& x : b1) (is_inf(x) ? (void)inf1.push_back(x.first) : (void)fin1.push_back(x));
	for (const auto& x : b2) (is_inf(x) ? (void)inf2.push_back(x.first) : (void)fin2.push_back(x));
	if (inf1.size() != inf2.size()) return infty;
	// infinite bars must match each other; sorted order is optimal on a line
	double inf_part = 0;
	std::sort(inf1.begin(), inf1.end());
	std::sort(inf2.begin(), inf2.end());
	for (size_t i = 0; i < inf1.size(); ++i)
		inf_part = std::max(inf_part, std::abs(inf1[i] - inf2[i]));

	std::vector<double> cands = {0};
	for (const auto& x : fin1) cands.push_back(detail::diag_cost(x));
	for (const auto& y : fin2) cands.push_back(detail::diag_cost(y));
	for (const auto& x : fin1)
		for (const auto& y : fin2) cands.push_back(detail::bar_cost(x, y));
	std::sort(cands.begin(), cands.end());
	cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
	auto it = std::partition_point(cands.begin(), cands.end(),
	                               [&](double eps) { return !detail::feasible(fin1, fin2, eps); });
	if (it == cands.end()) return infty;  // unreachable: the max candidate is feasible
	return std::max(inf_part, *it);
}

}  // namespace pcup
