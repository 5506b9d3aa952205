#include "polysieve/linalg.hpp"

#include <utility>

namespace polysieve {

FieldElement determinant(const FieldMatrix& m) {
    const FieldConfig& field = m.field();
    std::size_t n = m.order();
    FieldMatrix a = m;
    FieldElement det = field.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return field.zero();
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
        }
        det *= a.at(col, col);
        FieldElement pivot_inv = inv(a.at(col, col));
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a.at(row, col).is_zero()) continue;
            FieldElement factor = a.at(row, col) * pivot_inv;
            for (std::size_t j = col; j < n; ++j) a.at(row, j) += factor * a.at(col, j);
        }
    }
    return det;
}

namespace {

std::vector<FieldElement> evaluation_points(std::size_t count, const FieldConfig& field) {
    std::vector<FieldElement> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pts.push_back(field.element_by_index(i));
    return pts;
}

void check_field_size(std::size_t degree_bound, const FieldConfig& field) {
    if (degree_bound > field.group_order())
        throw FieldError("field too small for interpolation degree bound");
}

std::vector<FieldElement> interpolate_values(const std::vector<FieldElement>& points,
                                             const std::vector<FieldElement>& values) {
    std::vector<std::pair<FieldElement, FieldElement>> pairs;
    pairs.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) pairs.emplace_back(points[i], values[i]);
    return interpolate_univariate(pairs);
}

}  // namespace

std::vector<FieldElement> extract_uni_coefficients(
    const std::function<FieldElement(FieldElement)>& evaluator, std::size_t degree_bound,
    const FieldConfig& field) {
    check_field_size(degree_bound, field);
    auto points = evaluation_points(degree_bound + 1, field);
    std::vector<FieldElement> values;
    values.reserve(points.size());
    for (const auto& x : points) values.push_back(evaluator(x));
    return interpolate_values(points, values);
}

FieldElement extract_tri_coefficient(
    const std::function<FieldElement(FieldElement, FieldElement, FieldElement)>& evaluator,
    const TriDegree& bounds, const TriDegree& target, const FieldConfig& field) {
    if (target.d0 > bounds.d0 || target.d1 > bounds.d1 || target.d2 > bounds.d2)
        throw FieldError("target degree exceeds bound");
    check_field_size(bounds.d0, field);
    check_field_size(bounds.d1, field);
    check_field_size(bounds.d2, field);
    auto p0 = evaluation_points(bounds.d0 + 1, field);
    auto p1 = evaluation_points(bounds.d1 + 1, field);
    auto p2 = evaluation_points(bounds.d2 + 1, field);

    // Peel w2, then w1, then w0: each interpolation keeps one coefficient.
    std::vector<FieldElement> over_w0(p0.size(), field.zero());
    std::vector<FieldElement> over_w1(p1.size(), field.zero());
    std::vector<FieldElement> over_w2(p2.size(), field.zero());
    for (std::size_t i0 = 0; i0 < p0.size(); ++i0) {
        for (std::size_t i1 = 0; i1 < p1.size(); ++i1) {
            for (std::size_t i2 = 0; i2 < p2.size(); ++i2)
                over_w2[i2] = evaluator(p0[i0], p1[i1], p2[i2]);
            over_w1[i1] = interpolate_values(p2, over_w2)[target.d2];
        }
        over_w0[i0] = interpolate_values(p1, over_w1)[target.d1];
    }
    return interpolate_values(p0, over_w0)[target.d0];
}

}  // namespace polysieve
