#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cartcodes/error.hpp"
#include "cartcodes/gf.hpp"

namespace cartcodes::linalg {

/// Dense row-major matrix over a finite field, entries in integer encoding.
class Matrix {
public:
    Matrix(gf::FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    const gf::FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    gf::Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    gf::Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    gf::Elem* row(std::size_t i) { return data_.data() + i * cols_; }
    const gf::Elem* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<gf::Elem> row_vector(std::size_t i) const { return {row(i), row(i) + cols_}; }

    void append_row(const std::vector<gf::Elem>& values) {
        if (values.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row has the wrong length");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    bool operator==(const Matrix& other) const {
        return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out += (j ? " " : "") + std::to_string(at(i, j));
            out += "\n";
        }
        return out;
    }

private:
    gf::FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<gf::Elem> data_;
};

struct Echelon {
    Matrix reduced;                   // rank nonzero rows first, then zero rows
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline Echelon rref(Matrix m) {
    const auto& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(lead, j));
        }
        const gf::Elem scale = f.inv(m.at(lead, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.at(lead, j) = f.mul(m.at(lead, j), scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead || m.at(i, col) == 0) continue;
            const gf::Elem factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(lead, j)));
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

/// a * b^T.
inline Matrix multiply_transpose(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ");
    if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
    const auto& f = a.field();
    Matrix out(f, a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            gf::Elem acc = 0;
            for (std::size_t t = 0; t < a.cols(); ++t) acc = f.add(acc, f.mul(a.at(i, t), b.at(j, t)));
            out.at(i, j) = acc;
        }
    }
    return out;
}

inline bool is_zero(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) != 0) return false;
        }
    }
    return true;
}

} // namespace cartcodes::linalg
