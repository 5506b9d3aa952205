#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "polysieve/gf.hpp"

namespace polysieve {

/// Dense square matrix over one GF(2^b).
class FieldMatrix {
public:
    FieldMatrix(std::size_t order, const FieldConfig& field)
        : order_(order), field_(&field), entries_(order * order, field.zero()) {}

    std::size_t order() const { return order_; }
    const FieldConfig& field() const { return *field_; }

    FieldElement& at(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }
    const FieldElement& at(std::size_t row, std::size_t col) const {
        return entries_[row * order_ + col];
    }

    static FieldMatrix identity(std::size_t order, const FieldConfig& field) {
        FieldMatrix m(order, field);
        for (std::size_t i = 0; i < order; ++i) m.at(i, i) = field.one();
        return m;
    }

private:
    std::size_t order_;
    const FieldConfig* field_;
    std::vector<FieldElement> entries_;
};

/// Determinant by Gaussian elimination with any-nonzero-pivot row swaps.
/// In characteristic 2 swaps carry no sign, and the determinant coincides
/// with the permanent. Singular matrices yield zero.
FieldElement determinant(const FieldMatrix& m);

/// Degree targets and bounds for a polynomial in three tracking variables.
struct TriDegree {
    std::size_t d0 = 0;
    std::size_t d1 = 0;
    std::size_t d2 = 0;
};

/// All coefficients 0..degree_bound of a univariate polynomial known only
/// through evaluation. Evaluates at the fixed points 0, 1, g, g^2, ... and
/// interpolates; requires 2^b > degree_bound.
std::vector<FieldElement> extract_uni_coefficients(
    const std::function<FieldElement(FieldElement)>& evaluator, std::size_t degree_bound,
    const FieldConfig& field);

/// The single coefficient of w0^target.d0 * w1^target.d1 * w2^target.d2 in a
/// trivariate polynomial known only through evaluation, with per-variable
/// degree bounds. Grid-evaluates and peels one variable at a time by
/// univariate interpolation.
FieldElement extract_tri_coefficient(
    const std::function<FieldElement(FieldElement, FieldElement, FieldElement)>& evaluator,
    const TriDegree& bounds, const TriDegree& target, const FieldConfig& field);

}  // namespace polysieve
