#pragma once

#include <algorithm>
#include <map>
#include <optional>

#include "pcup/field.hpp"

namespace pcup {

// Rows in reduced echelon form: pivots normalized to 1, pivot columns cleared
// in every other row, rows sorted by pivot index.
struct reduced_rows {
	std::vector<sparse_vec> rows;
	std::map<index_t, size_t> pivot_of;  // pivot column -> row position

	size_t rank() const { return rows.size(); }
};

inline reduced_rows row_reduce(const fp_field& f, const std::vector<sparse_vec>& input) {
	reduced_rows basis;
	for (const sparse_vec& r : input) {
		sparse_vec v = r;
		while (!v.empty()) {
			auto it = basis.pivot_of.find(v.lead_index());
			if (it == basis.pivot_of.end()) break;
			v = axpy(f, v, f.neg(v.lead_coeff()), basis.rows[it->second]);
		}
		if (v.empty()) continue;
		v = scale(f, v, f.inv(v.lead_coeff()));
		// clear the new pivot column from existing rows
		for (sparse_vec& row : basis.rows) {
			coeff_t c = row.at(v.lead_index());
			if (c != 0) row = axpy(f, row, f.neg(c), v);
		}
		basis.pivot_of[v.lead_index()] = basis.rows.size();
		basis.rows.push_back(std::move(v));
	}
	// sort by pivot and rebuild the pivot map
	std::sort(basis.rows.begin(), basis.rows.end(),
	          [](const sparse_vec& a, const sparse_vec& b) { return a.lead_index() < b.lead_index(); });
	basis.pivot_of.clear();
	for (size_t i = 0; i < basis.rows.size(); ++i) basis.pivot_of[basis.rows[i].lead_index()] = i;
	return basis;
}

// Coefficients expressing v in the reduced basis, if v lies in its span.
// Pivot columns appear in exactly one basis row, so the coefficient on row i
// is simply v's value at that row's pivot.
inline std::optional<std::vector<coeff_t>> in_span(const fp_field& f, const reduced_rows& basis,
                                                   const sparse_vec& v) {
	std::vector<coeff_t> coeffs(basis.rows.size(), 0);
	sparse_vec rest = v;
	for (size_t i = 0; i < basis.rows.size(); ++i) {
		coeff_t c = rest.at(basis.rows[i].lead_index());
		if (c != 0) {
			coeffs[i] = c;
			rest = axpy(f, rest, f.neg(c), basis.rows[i]);
		}
	}
	if (!rest.empty()) return std::nullopt;
	return coeffs;
}

// Membership test valid for any echelon basis with distinct pivots (the rows
// need not be fully reduced): greedy elimination of leading entries.
inline bool spans_contain(const fp_field& f, const reduced_rows& basis, const sparse_vec& v) {
	sparse_vec rest = v;
	while (!rest.empty()) {
		auto it = basis.pivot_of.find(rest.lead_index());
		if (it == basis.pivot_of.end()) return false;
		rest = axpy(f, rest, f.neg(f.div(rest.lead_coeff(), basis.rows[it->second].lead_coeff())),
		            basis.rows[it->second]);
	}
	return true;
}

// Incremental variant used by rank computations: returns false if v was
// already in the span, otherwise inserts the reduced remainder.
inline bool reduce_insert(const fp_field& f, reduced_rows& basis, const sparse_vec& v) {
	sparse_vec rest = v;
	while (!rest.empty()) {
		auto it = basis.pivot_of.find(rest.lead_index());
		if (it == basis.pivot_of.end()) break;
		rest = axpy(f, rest, f.neg(rest.lead_coeff()), basis.rows[it->second]);
	}
	if (rest.empty()) return false;
	rest = scale(f, rest, f.inv(rest.lead_coeff()));
	basis.pivot_of[rest.lead_index()] = basis.rows.size();
	basis.rows.push_back(std::move(rest));
	return true;
}

}  // namespace pcup
