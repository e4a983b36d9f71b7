#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hullsmith/field.hpp"

namespace hullsmith {

/// Dense matrix over a finite field; entries are element reps. Immutable use
/// after construction is the norm, all operations return fresh matrices.
class FFMatrix {
  public:
    FFMatrix() = default;
    FFMatrix(Field f, size_t rows, size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static FFMatrix identity(Field f, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field& field() const { return f_; }

    uint32_t& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
    uint32_t at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
    const uint32_t* data() const { return e_.data(); }
    uint32_t* data() { return e_.data(); }

    FFMatrix mul(const FFMatrix& o) const;
    FFMatrix add(const FFMatrix& o) const;
    FFMatrix transpose() const;
    /// Entrywise Frobenius x -> x^{p^t}.
    FFMatrix frob_entrywise(uint32_t t) const;
    /// Conjugate transpose (a_{ji}^q) on a quadratic tower.
    FFMatrix dagger() const;
    /// Galois conjugate transpose (a_{ji}^{p^{m-e}}) for 0 <= e < m.
    FFMatrix galois_dagger(uint32_t e) const;
    FFMatrix vstack(const FFMatrix& o) const;
    FFMatrix scale_col(size_t c, uint32_t gamma) const;
    std::vector<uint32_t> row_vec(size_t r) const;

    bool is_zero() const;
    bool operator==(const FFMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_ &&
               f_->same_field(*o.f_);
    }

    std::string to_string() const;

  private:
    Field f_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint32_t> e_;
};

struct RrefResult {
    FFMatrix mat;
    std::vector<size_t> pivots;
    size_t rank = 0;
};

/// Reduced row echelon form, Gauss-Jordan with first-nonzero pivot selection.
RrefResult rref(const FFMatrix& M);
size_t rank(const FFMatrix& M);

/// Basis of the right kernel {v : M v^T = 0}, one basis vector per row.
FFMatrix right_kernel(const FFMatrix& M);

/// A particular solution of M x^T = b^T, or nothing when inconsistent.
std::optional<std::vector<uint32_t>> solve(const FFMatrix& M, const std::vector<uint32_t>& b);

/// Inner product selector. Euclidean and Hermitian are the e = 0 and
/// e = m/2 Galois inner products.
struct Inner {
    enum class Kind { euclidean, hermitian, galois };
    Kind kind = Kind::euclidean;
    uint32_t e = 0;

    static Inner euclidean() { return {Kind::euclidean, 0}; }
    static Inner hermitian() { return {Kind::hermitian, 0}; }
    static Inner galois(uint32_t e) { return {Kind::galois, e}; }

    /// The Galois exponent e for a given field.
    uint32_t galois_e(const FieldSpec& F) const;
    std::string name() const;
    bool operator==(const Inner& o) const { return kind == o.kind && e == o.e; }
};

/// G * op(G) where op is transpose / dagger / galois double dagger; its rank
/// certifies the hull dimension.
FFMatrix gram_matrix(const FFMatrix& G, Inner inner);

/// Generator of the annihilator of rowspace(G) under the inner product.
FFMatrix dual_basis(const FFMatrix& G, Inner inner);

size_t intersection_dim(const FFMatrix& A, const FFMatrix& B);
bool same_rowspace(const FFMatrix& A, const FFMatrix& B);

} // namespace hullsmith
