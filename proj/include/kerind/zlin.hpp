#ifndef KERIND_ZLIN_HPP
#define KERIND_ZLIN_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

// Exact integer linear algebra: Smith normal form, kernel lattices,
// lattice membership and finite quotients.  Everything runs over mpz
// because intermediate entries blow up well past 64 bits even for the
// small matrices produced by rank-4 lattice actions.

namespace kerind {

class ZMat {
public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, mpz_class(0)) {}

    static ZMat identity(std::size_t n);
    static ZMat from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ZMat operator*(const ZMat& o) const;
    bool operator==(const ZMat& o) const = default;
    bool is_zero() const;

    ZMat transpose() const;
    ZMat hstack(const ZMat& o) const;
    ZMat vstack(const ZMat& o) const;
    ZMat col(std::size_t j) const;

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> a_;
};

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
// Uinv and Vinv are maintained alongside so callers never have to invert.
struct SmithResult {
    ZMat d, u, v, uinv, vinv;
    std::size_t rank = 0;                 // number of nonzero diagonal entries
    std::vector<mpz_class> invariants() const;  // nonzero d_i, 1s dropped
};

SmithResult smith_normal_form(const ZMat& m);

// Basis (as columns) of { x : M x = 0 } over Z.
ZMat kernel_basis(const ZMat& m);

// Does v lie in the column lattice of B?  If so and sol != nullptr, one
// integral solution of B*sol = v is stored.
bool lattice_contains(const ZMat& b, const ZMat& v, std::vector<mpz_class>* sol = nullptr);

// Structure of Z^n / col-lattice(B) (B need not be square or full rank):
// torsion invariant factors (each >= 2), free rank, and one generator of
// Z^n per listed factor (torsion generators first, then free ones).
struct QuotientStructure {
    std::vector<mpz_class> factors;  // invariant factors >= 2
    std::size_t free_rank = 0;
    std::vector<std::vector<mpz_class>> torsion_gens;  // length = factors.size()
    std::vector<std::vector<mpz_class>> free_gens;     // length = free_rank
};

QuotientStructure quotient_structure(std::size_t n, const ZMat& b);

// Finite abelian group tabulated by independent generators with orders.
struct FiniteSolutionGroup {
    std::vector<std::vector<mpz_class>> gens;  // vectors in Z^C
    std::vector<mpz_class> orders;             // parallel to gens, each >= 2
    mpz_class size = 1;
};

// All x in prod_c Z/col_mods[c] with A x == 0 (row r taken mod row_mods[r]).
// The result enumerates the solution subgroup via independent generators.
FiniteSolutionGroup solve_congruence_kernel(const ZMat& a,
                                            const std::vector<long>& row_mods,
                                            const std::vector<long>& col_mods);

}  // namespace kerind

#endif
