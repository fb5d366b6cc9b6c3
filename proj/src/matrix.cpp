#include "kerind/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace kerind {

Matrix::Matrix(Ring ring, std::uint32_t n, std::vector<Elem> entries)
    : ring_(std::move(ring)), n_(n), a_(std::move(entries)) {
    if (a_.size() != std::size_t(n) * n) throw std::invalid_argument("matrix entry count");
}

Matrix Matrix::identity(const Ring& ring, std::uint32_t n) {
    Matrix m(ring, n);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
    return m;
}

Matrix Matrix::scalar(const Ring& ring, std::uint32_t n, Elem s) {
    Matrix m(ring, n);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
}

Matrix Matrix::diag_blocks(const Matrix& a, const Matrix& b) {
    Matrix m(a.ring(), a.dim() + b.dim());
    for (std::uint32_t i = 0; i < a.dim(); ++i)
        for (std::uint32_t j = 0; j < a.dim(); ++j) m.at(i, j) = a.at(i, j);
    for (std::uint32_t i = 0; i < b.dim(); ++i)
        for (std::uint32_t j = 0; j < b.dim(); ++j) m.at(a.dim() + i, a.dim() + j) = b.at(i, j);
    return m;
}

Matrix Matrix::from_ints(const Ring& ring, std::uint32_t n, const std::vector<long>& v) {
    if (v.size() != std::size_t(n) * n) throw std::invalid_argument("matrix entry count");
    Matrix m(ring, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) m.at(i, j) = ring.of_int(v[std::size_t(i) * n + j]);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix dim mismatch");
    Matrix r(ring_, n_);
    for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t j = 0; j < n_; ++j) {
            Elem acc = ring_.zero();
            for (std::uint32_t k = 0; k < n_; ++k)
                acc = ring_.add(acc, ring_.mul(at(i, k), o.at(k, j)));
            r.at(i, j) = acc;
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix dim mismatch");
    Matrix r(ring_, n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = ring_.add(a_[k], o.a_[k]);
    return r;
}

namespace {

// Memoized cofactor expansion over column subsets; division-free, so it is
// valid over rings with zero divisors (fraction-free elimination is not).
Elem det_minor(const Ring& ring, const Matrix& m, std::uint32_t skip_row,
               std::uint32_t skip_col_mask) {
    const std::uint32_t n = m.dim();
    std::unordered_map<std::uint32_t, Elem> memo;
    // rows taken top to bottom (skipping skip_row), mask = remaining columns
    struct Rec {
        const Ring& ring;
        const Matrix& m;
        std::uint32_t n, skip_row;
        std::unordered_map<std::uint32_t, Elem>& memo;
        Elem operator()(std::uint32_t row, std::uint32_t mask) {
            if (row == skip_row) return (*this)(row + 1, mask);
            if (row >= n) return ring.one();
            auto it = memo.find(mask);
            if (it != memo.end()) return it->second;
            Elem acc = ring.zero();
            std::uint32_t pos = 0;
            for (std::uint32_t j = 0; j < n; ++j) {
                if (!(mask & (1u << j))) continue;
                Elem term = ring.mul(m.at(row, j), (*this)(row + 1, mask & ~(1u << j)));
                acc = (pos % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
                ++pos;
            }
            memo.emplace(mask, acc);
            return acc;
        }
    } rec{ring, m, n, skip_row, memo};
    std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
    return rec(0, full & ~skip_col_mask);
}

}  // namespace

Elem Matrix::det() const {
    if (n_ == 0) return ring_.one();
    if (n_ == 1) return at(0, 0);
    if (n_ == 2)
        return ring_.sub(ring_.mul(at(0, 0), at(1, 1)), ring_.mul(at(0, 1), at(1, 0)));
    return det_minor(ring_, *this, n_, 0);
}

Matrix Matrix::inverse() const {
    Elem d = det();
    auto dinv = ring_.inverse(d);
    if (!dinv) throw std::domain_error("matrix not in GL_n(S): determinant is not a unit");
    Matrix inv(ring_, n_);
    for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t j = 0; j < n_; ++j) {
            Elem minor = det_minor(ring_, *this, i, 1u << j);
            Elem cof = ((i + j) % 2 == 0) ? minor : ring_.neg(minor);
            inv.at(j, i) = ring_.mul(cof, *dinv);  // adjugate transposes
        }
    if (!(*this * inv == identity(ring_, n_)))
        throw std::logic_error("adjugate inverse failed verification");
    return inv;
}

Matrix Matrix::shift(std::uint32_t m) const {
    return diag_blocks(identity(ring_, m), *this);
}

Matrix Matrix::pad(std::uint32_t m) const {
    if (m < n_) throw std::invalid_argument("pad target below current dimension");
    return diag_blocks(*this, identity(ring_, m - n_));
}

Matrix Matrix::map_entries(const std::vector<Elem>& perm) const {
    Matrix r(ring_, n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = perm[a_[k]];
    return r;
}

Matrix Matrix::map_ring(const Ring& target, const std::vector<Elem>& elem_map) const {
    Matrix r(target, n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = elem_map[a_[k]];
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (i) os << "; ";
        for (std::uint32_t j = 0; j < n_; ++j) {
            if (j) os << ", ";
            os << ring_.elem_str(at(i, j));
        }
    }
    os << "]";
    return os.str();
}

Matrix s_matrix(const Ring& ring, std::uint32_t m, std::uint32_t n) {
    const std::uint32_t dim = m + n;
    Matrix s(ring, dim);
    const Elem one = ring.one(), minus = ring.neg(ring.one());
    for (std::uint32_t i = 0; i < n; ++i) s.at(i, m + i) = minus;  // -1_{n x n} block
    for (std::uint32_t i = 0; i < m; ++i) s.at(n + i, i) = one;    // 1_{m x m} block
    // global sign (-1)^((m+1) n)
    if (((std::uint64_t(m) + 1) * n) % 2 == 1) {
        for (std::uint32_t i = 0; i < dim; ++i)
            for (std::uint32_t j = 0; j < dim; ++j) s.at(i, j) = ring.neg(s.at(i, j));
    }
    return s;
}

namespace {

std::vector<Matrix> enumerate_det_filtered(const Ring& ring, std::uint32_t n, std::uint64_t cap,
                                           bool want_sl) {
    const std::uint64_t ring_size = ring.size();
    const std::uint64_t entries = std::uint64_t(n) * n;
    // scan space |S|^(n^2), with overflow guard
    constexpr std::uint64_t kScanBudget = 1ull << 26;
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < entries; ++i) {
        if (total > kScanBudget / std::max<std::uint64_t>(ring_size, 1)) {
            throw std::length_error("GL enumeration scan space exceeds budget");
        }
        total *= ring_size;
    }
    std::vector<Matrix> out;
    std::vector<Elem> digits(entries, 0);
    const Elem one = ring.one();
    for (std::uint64_t it = 0; it < total; ++it) {
        Matrix m(ring, n, digits);
        Elem d = m.det();
        const bool keep = want_sl ? (d == one) : ring.is_unit(d);
        if (keep) {
            out.push_back(std::move(m));
            if (out.size() > cap) throw std::length_error("GL enumeration cap exceeded");
        }
        // increment mixed-radix counter; last entry is least significant so
        // the output is ordered lexicographically on the entry tuples
        for (std::size_t k = entries; k-- > 0;) {
            if (++digits[k] < ring_size) break;
            digits[k] = 0;
        }
    }
    return out;
}

}  // namespace

std::vector<Matrix> enumerate_gl(const Ring& ring, std::uint32_t n, std::uint64_t cap) {
    return enumerate_det_filtered(ring, n, cap, false);
}

std::vector<Matrix> enumerate_sl(const Ring& ring, std::uint32_t n, std::uint64_t cap) {
    return enumerate_det_filtered(ring, n, cap, true);
}

}  // namespace kerind
