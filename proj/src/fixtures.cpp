#include "pcup/fixtures.hpp"

#include <cmath>

namespace pcup::fixtures {

filtered_complex pinched_torus() {
	// 3x3 grid torus, vertex (i,j) -> 3*i+j. Meridian = column i=0,
	// longitude = row j=0; they share exactly vertex 0.
	auto v = [](int i, int j) { return 3 * ((i % 3 + 3) % 3) + ((j % 3 + 3) % 3); };
	std::vector<std::pair<simplex_t, double>> sx;
	auto add = [&](std::vector<int> verts, double t) {
		std::sort(verts.begin(), verts.end());
		verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
		sx.emplace_back(simplex_t(verts), t);
	};

	// stage 0: meridian circle {0,1,2}
	for (int j = 0; j < 3; ++j) add({v(0, j)}, 0);
	for (int j = 0; j < 3; ++j) add({v(0, j), v(0, j + 1)}, 0);
	// stage 1: longitude circle {0,3,6}
	for (int i = 1; i < 3; ++i) add({v(i, 0)}, 1);
	for (int i = 0; i < 3; ++i) add({v(i, 0), v(i + 1, 0)}, 1);
	// stage 2: the rest of the torus
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j) {
			if (i != 0 && j != 0) add({v(i, j)}, 2);
			// grid edges and the diagonal of each square
			add({v(i, j), v(i + 1, j)}, (j == 0) ? 1 : 2);
			add({v(i, j), v(i, j + 1)}, (i == 0) ? 0 : 2);
			add({v(i, j), v(i + 1, j + 1)}, 2);
			add({v(i, j), v(i + 1, j), v(i + 1, j + 1)}, 2);
			add({v(i, j), v(i, j + 1), v(i + 1, j + 1)}, 2);
		}
	// stage 3: cone the meridian with apex 9
	add({9}, 3);
	for (int j = 0; j < 3; ++j) {
		add({9, v(0, j)}, 3);
		add({9, v(0, j), v(0, j + 1)}, 3);
	}

	// deduplicate (stage-2 loops re-emit the stage-0/1 edges)
	std::map<std::vector<int>, double> best;
	for (const auto& [s, t] : sx) {
		auto [it, fresh] = best.emplace(s.vertices, t);
		if (!fresh) it->second = std::min(it->second, t);
	}
	std::vector<std::pair<simplex_t, double>> uniq;
	for (const auto& [verts, t] : best) uniq.emplace_back(simplex_t(verts), t);
	return from_explicit(uniq);
}

filtered_complex two_disks() {
	std::vector<std::pair<simplex_t, double>> sx;
	auto add = [&](std::vector<int> verts, double t) { sx.emplace_back(simplex_t(std::move(verts)), t); };
	// top circle on {0,1,2}
	for (int i = 0; i < 3; ++i) add({i}, 0);
	add({0, 1}, 0), add({1, 2}, 0), add({0, 2}, 0);
	// bottom circle on {0,3,4}, wedged at 0
	add({3}, 1), add({4}, 1);
	add({0, 3}, 1), add({3, 4}, 1), add({0, 4}, 1);
	// fill top with apex 5
	add({5}, 2);
	add({0, 5}, 2), add({1, 5}, 2), add({2, 5}, 2);
	add({0, 1, 5}, 2), add({1, 2, 5}, 2), add({0, 2, 5}, 2);
	// fill bottom with apex 6
	add({6}, 3);
	add({0, 6}, 3), add({3, 6}, 3), add({4, 6}, 3);
	add({0, 3, 6}, 3), add({3, 4, 6}, 3), add({0, 4, 6}, 3);
	return from_explicit(sx);
}

filtered_complex triangulated_circle() {
	std::vector<std::pair<simplex_t, double>> sx;
	for (int i = 0; i < 3; ++i) sx.emplace_back(simplex_t({i}), 0.0);
	sx.emplace_back(simplex_t({0, 1}), 1.0);
	sx.emplace_back(simplex_t({1, 2}), 1.0);
	sx.emplace_back(simplex_t({0, 2}), 1.0);
	return from_explicit(sx);
}

namespace {

const double pi = std::acos(-1.0);

std::vector<double> circle_block_grid(int blocks) {
	// arc boundaries 2*pi*l/(2l+1); consecutive arcs share endpoints
	std::vector<double> g;
	for (int l = 0; l <= blocks; ++l) g.push_back(2 * pi * l / (2 * l + 1));
	g.push_back(pi);
	return g;
}

step_invariant diagonal_blocks(const std::vector<double>& grid, const std::vector<int64_t>& on_diag) {
	step_invariant inv;
	inv.tag = codomain_t::scalar;
	inv.init_grid(grid);
	for (size_t i = 0; i + 1 < inv.m() && i < on_diag.size(); ++i)
		inv.vals[i][0] = inv_value::scalar(on_diag[i]);
	return inv;
}

}  // namespace

step_invariant cup_vr_circle(int blocks) {
	auto grid = circle_block_grid(blocks);
	std::vector<int64_t> diag(grid.size() - 1, 1);
	diag.back() = 0;  // contractible at and beyond pi
	return diagonal_blocks(grid, diag);
}

step_invariant cup_vr_torus2(int blocks) {
	auto grid = circle_block_grid(blocks);
	std::vector<int64_t> diag(grid.size() - 1, 2);
	diag.back() = 0;
	return diagonal_blocks(grid, diag);
}

step_invariant cup_vr_wedge_s1s2s1() {
	const double zeta2 = std::acos(-1.0 / 3.0);
	step_invariant inv;
	inv.tag = codomain_t::scalar;
	inv.init_grid({0.0, zeta2, pi});
	inv.vals[0][0] = inv_value::scalar(1);  // S^2 (and S^1) classes alive below zeta_2
	inv.vals[1][0] = inv_value::scalar(1);  // short bars may live inside [zeta_2, pi)
	return inv;
}

step_invariant phi_rank_t2s3() {
	const double zeta3 = std::acos(-1.0 / 4.0);
	step_invariant inv;
	inv.tag = codomain_t::matrix;
	inv.init_grid({0.0, zeta3, 2 * pi / 3, pi});
	inv.vals[0][0] = inv_value::matrix({{2, 0}, {1, 1}, {1, 0}});
	inv.vals[0][1] = inv_value::matrix({{2, 0}, {1, 1}, {0, 0}});  // S^3 class gone past zeta_3
	inv.vals[1][0] = inv_value::matrix({{2, 0}, {1, 1}, {0, 0}});
	return inv;
}

step_invariant phi_rank_s1s2s1() {
	const double zeta2 = std::acos(-1.0 / 3.0);
	step_invariant inv;
	inv.tag = codomain_t::matrix;
	inv.init_grid({0.0, zeta2, 2 * pi / 3, pi});
	inv.vals[0][0] = inv_value::matrix({{2, 0}, {1, 0}, {1, 1}});
	inv.vals[0][1] = inv_value::matrix({{2, 0}, {0, 0}, {0, 0}});  // only the circles outlive zeta_2
	inv.vals[1][0] = inv_value::matrix({{2, 0}, {0, 0}, {0, 0}});
	return inv;
}

}  // namespace pcup::fixtures
