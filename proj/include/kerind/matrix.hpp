#ifndef KERIND_MATRIX_HPP
#define KERIND_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kerind/ring.hpp"

namespace kerind {

// Square matrix over a finite commutative ring, row-major entries.
class Matrix {
public:
    Matrix() = default;
    Matrix(Ring ring, std::uint32_t n) : ring_(std::move(ring)), n_(n), a_(std::size_t(n) * n, 0) {}
    Matrix(Ring ring, std::uint32_t n, std::vector<Elem> entries);

    static Matrix identity(const Ring& ring, std::uint32_t n);
    static Matrix scalar(const Ring& ring, std::uint32_t n, Elem s);
    static Matrix diag_blocks(const Matrix& a, const Matrix& b);
    static Matrix from_ints(const Ring& ring, std::uint32_t n, const std::vector<long>& v);

    const Ring& ring() const { return ring_; }
    std::uint32_t dim() const { return n_; }
    Elem at(std::uint32_t i, std::uint32_t j) const { return a_[std::size_t(i) * n_ + j]; }
    Elem& at(std::uint32_t i, std::uint32_t j) { return a_[std::size_t(i) * n_ + j]; }
    const std::vector<Elem>& entries() const { return a_; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    auto operator<=>(const Matrix& o) const { return a_ <=> o.a_; }

    Elem det() const;
    bool invertible() const { return ring_.is_unit(det()); }
    // Adjugate times det^{-1}; throws std::domain_error when det is not a unit.
    Matrix inverse() const;

    // diag(1_m, this) at dimension m + n.
    Matrix shift(std::uint32_t m) const;
    // diag(this, 1) padded up to dimension m >= n.
    Matrix pad(std::uint32_t m) const;
    // Entrywise image under an element permutation (ring automorphism).
    Matrix map_entries(const std::vector<Elem>& perm) const;
    // Entrywise pushforward along a map into another ring.
    Matrix map_ring(const Ring& target, const std::vector<Elem>& elem_map) const;

    std::string str() const;

private:
    Ring ring_;
    std::uint32_t n_ = 0;
    std::vector<Elem> a_;
};

// The block matrix s_{m,n} at dimension m + n with det 1; conjugation by it
// swaps diag(a_n, b_m) into diag(b_m, a_n).
Matrix s_matrix(const Ring& ring, std::uint32_t m, std::uint32_t n);

// Complete, deterministically ordered list of invertible n x n matrices.
// Throws std::length_error when the confirmed count exceeds cap or the
// scan space |S|^(n^2) is out of reach.
std::vector<Matrix> enumerate_gl(const Ring& ring, std::uint32_t n, std::uint64_t cap = 1000000);

// Same but only matrices of determinant 1.
std::vector<Matrix> enumerate_sl(const Ring& ring, std::uint32_t n, std::uint64_t cap = 1000000);

}  // namespace kerind

#endif
