#include "hullsmith/matrix.hpp"

#include <sstream>

#include "hullsmith/kernels.hpp"

namespace hullsmith {

FFMatrix FFMatrix::identity(Field f, size_t n) {
    FFMatrix I(std::move(f), n, n);
    for (size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

FFMatrix FFMatrix::mul(const FFMatrix& o) const {
    require(cols_ == o.rows_, errc::bad_parameters, "matmul shape mismatch");
    FFMatrix C(f_, rows_, o.cols_);
    auto v = kernels::matmul(*f_, e_.data(), rows_, cols_, o.e_.data(), o.cols_);
    std::copy(v.begin(), v.end(), C.e_.begin());
    return C;
}

FFMatrix FFMatrix::add(const FFMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, errc::bad_parameters, "add shape mismatch");
    FFMatrix C(f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) C.e_[i] = f_->add(e_[i], o.e_[i]);
    return C;
}

FFMatrix FFMatrix::transpose() const {
    FFMatrix T(f_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) T.at(c, r) = at(r, c);
    return T;
}

FFMatrix FFMatrix::frob_entrywise(uint32_t t) const {
    FFMatrix C(f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) C.e_[i] = f_->frob(e_[i], t);
    return C;
}

FFMatrix FFMatrix::dagger() const {
    require(f_->is_quadratic_tower(), errc::not_quadratic_tower,
            "dagger needs a quadratic tower field");
    return transpose().frob_entrywise(f_->m() / 2);
}

FFMatrix FFMatrix::galois_dagger(uint32_t e) const {
    require(e < f_->m(), errc::bad_exponent, "galois exponent out of range");
    return transpose().frob_entrywise((f_->m() - e) % f_->m());
}

FFMatrix FFMatrix::vstack(const FFMatrix& o) const {
    require(cols_ == o.cols_, errc::bad_parameters, "vstack shape mismatch");
    FFMatrix C(f_, rows_ + o.rows_, cols_);
    std::copy(e_.begin(), e_.end(), C.e_.begin());
    std::copy(o.e_.begin(), o.e_.end(), C.e_.begin() + e_.size());
    return C;
}

FFMatrix FFMatrix::scale_col(size_t c, uint32_t gamma) const {
    require(c < cols_, errc::bad_position, "column index out of range");
    require(gamma != 0, errc::zero_scale, "scaling by zero");
    FFMatrix C = *this;
    for (size_t r = 0; r < rows_; ++r) C.at(r, c) = f_->mul(at(r, c), gamma);
    return C;
}

std::vector<uint32_t> FFMatrix::row_vec(size_t r) const {
    return std::vector<uint32_t>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

bool FFMatrix::is_zero() const {
    for (uint32_t x : e_)
        if (x) return false;
    return true;
}

std::string FFMatrix::to_string() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) os << at(r, c) << (c + 1 == cols_ ? "" : " ");
        os << "\n";
    }
    return os.str();
}

RrefResult rref(const FFMatrix& M) {
    RrefResult res{M, {}, 0};
    FFMatrix& A = res.mat;
    const FieldSpec& F = *M.field();
    size_t r = 0;
    for (size_t col = 0; col < A.cols() && r < A.rows(); ++col) {
        size_t piv = r;
        while (piv < A.rows() && A.at(piv, col) == 0) ++piv;
        if (piv == A.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < A.cols(); ++j) std::swap(A.at(piv, j), A.at(r, j));
        uint32_t inv = F.inv(A.at(r, col));
        for (size_t j = col; j < A.cols(); ++j) A.at(r, j) = F.mul(A.at(r, j), inv);
        for (size_t i = 0; i < A.rows(); ++i) {
            if (i == r || A.at(i, col) == 0) continue;
            uint32_t f = A.at(i, col);
            for (size_t j = col; j < A.cols(); ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        res.pivots.push_back(col);
        ++r;
    }
    res.rank = r;
    return res;
}

size_t rank(const FFMatrix& M) { return rref(M).rank; }

FFMatrix right_kernel(const FFMatrix& M) {
    RrefResult rr = rref(M);
    const FieldSpec& F = *M.field();
    std::vector<bool> is_pivot(M.cols(), false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    size_t dim = M.cols() - rr.rank;
    FFMatrix K(M.field(), dim, M.cols());
    size_t row = 0;
    for (size_t free_c = 0; free_c < M.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        K.at(row, free_c) = 1;
        for (size_t pr = 0; pr < rr.pivots.size(); ++pr)
            K.at(row, rr.pivots[pr]) = F.neg(rr.mat.at(pr, free_c));
        ++row;
    }
    return K;
}

std::optional<std::vector<uint32_t>> solve(const FFMatrix& M, const std::vector<uint32_t>& b) {
    require(b.size() == M.rows(), errc::bad_parameters, "solve shape mismatch");
    FFMatrix aug(M.field(), M.rows(), M.cols() + 1);
    for (size_t r = 0; r < M.rows(); ++r) {
        for (size_t c = 0; c < M.cols(); ++c) aug.at(r, c) = M.at(r, c);
        aug.at(r, M.cols()) = b[r];
    }
    RrefResult rr = rref(aug);
    for (size_t i = 0; i < rr.pivots.size(); ++i)
        if (rr.pivots[i] == M.cols()) return std::nullopt; // pivot in the constant column
    std::vector<uint32_t> x(M.cols(), 0);
    for (size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.mat.at(i, M.cols());
    return x;
}

uint32_t Inner::galois_e(const FieldSpec& F) const {
    switch (kind) {
        case Kind::euclidean:
            return 0;
        case Kind::hermitian:
            require(F.is_quadratic_tower(), errc::not_quadratic_tower,
                    "hermitian inner product needs a quadratic tower");
            return F.m() / 2;
        case Kind::galois:
            require(e < F.m(), errc::bad_exponent, "galois exponent out of range");
            return e;
    }
    return 0;
}

std::string Inner::name() const {
    switch (kind) {
        case Kind::euclidean:
            return "euclidean";
        case Kind::hermitian:
            return "hermitian";
        case Kind::galois:
            return "galois(" + std::to_string(e) + ")";
    }
    return "?";
}

FFMatrix gram_matrix(const FFMatrix& G, Inner inner) {
    const FieldSpec& F = *G.field();
    uint32_t e = inner.galois_e(F);
    uint64_t conj_pow = 1;
    for (uint32_t i = 0; i < (F.m() - e) % F.m(); ++i) conj_pow *= F.p();
    FFMatrix C(G.field(), G.rows(), G.rows());
    auto v = kernels::gram(F, G.data(), G.rows(), G.cols(), conj_pow);
    std::copy(v.begin(), v.end(), C.data());
    return C;
}

FFMatrix dual_basis(const FFMatrix& G, Inner inner) {
    // x is in the dual iff G (x^{p^e})^T = 0, so the dual basis is the right
    // kernel raised entrywise to p^{m-e}.
    const FieldSpec& F = *G.field();
    uint32_t e = inner.galois_e(F);
    return right_kernel(G).frob_entrywise((F.m() - e) % F.m());
}

size_t intersection_dim(const FFMatrix& A, const FFMatrix& B) {
    return rank(A) + rank(B) - rank(A.vstack(B));
}

bool same_rowspace(const FFMatrix& A, const FFMatrix& B) {
    size_t ra = rank(A), rb = rank(B);
    return ra == rb && rank(A.vstack(B)) == ra;
}

} // namespace hullsmith
