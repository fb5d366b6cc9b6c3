#include "kerind/zlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace kerind {

ZMat ZMat::identity(std::size_t n) {
    ZMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return ZMat(0, 0);
    ZMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

ZMat ZMat::operator*(const ZMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ZMat dim mismatch");
    ZMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

bool ZMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const mpz_class& x) { return x == 0; });
}

ZMat ZMat::transpose() const {
    ZMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ZMat ZMat::hstack(const ZMat& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hstack rows mismatch");
    ZMat r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

ZMat ZMat::vstack(const ZMat& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vstack cols mismatch");
    ZMat r(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

ZMat ZMat::col(std::size_t j) const {
    ZMat r(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
}

namespace {

struct SmithWork {
    ZMat d, u, v, uinv, vinv;

    // Row op on D: row i += k * row j.  U tracks it, Uinv absorbs the inverse
    // as a column op (col j -= k * col i) so U*Uinv stays the identity.
    void row_add(std::size_t i, std::size_t j, const mpz_class& k) {
        for (std::size_t c = 0; c < d.cols(); ++c) d.at(i, c) += k * d.at(j, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) += k * u.at(j, c);
        for (std::size_t r = 0; r < uinv.rows(); ++r) uinv.at(r, j) -= k * uinv.at(r, i);
    }
    void col_add(std::size_t i, std::size_t j, const mpz_class& k) {
        for (std::size_t r = 0; r < d.rows(); ++r) d.at(r, i) += k * d.at(r, j);
        for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) += k * v.at(r, j);
        for (std::size_t c = 0; c < vinv.cols(); ++c) vinv.at(j, c) -= k * vinv.at(i, c);
    }
    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
        for (std::size_t r = 0; r < uinv.rows(); ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
        for (std::size_t c = 0; c < vinv.cols(); ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
        for (std::size_t r = 0; r < uinv.rows(); ++r) uinv.at(r, i) = -uinv.at(r, i);
    }
};

}  // namespace

SmithResult smith_normal_form(const ZMat& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    SmithWork w{m, ZMat::identity(nr), ZMat::identity(nc),
                ZMat::identity(nr), ZMat::identity(nc)};
    const std::size_t nmin = std::min(nr, nc);

    for (std::size_t s = 0; s < nmin; ++s) {
        // Pivot: smallest nonzero |entry| in the trailing block.
        for (;;) {
            std::size_t pi = s, pj = s;
            bool found = false;
            mpz_class best;
            for (std::size_t i = s; i < nr; ++i)
                for (std::size_t j = s; j < nc; ++j) {
                    if (w.d.at(i, j) == 0) continue;
                    mpz_class v = abs(w.d.at(i, j));
                    if (!found || v < best) { best = v; pi = i; pj = j; found = true; }
                }
            if (!found) break;  // trailing block zero; done with this s and all later
            w.row_swap(s, pi);
            w.col_swap(s, pj);

            bool clean = true;
            for (std::size_t i = s + 1; i < nr; ++i) {
                if (w.d.at(i, s) == 0) continue;
                mpz_class q = w.d.at(i, s) / w.d.at(s, s);  // truncated ok; loop repeats
                w.row_add(i, s, -q);
                if (w.d.at(i, s) != 0) clean = false;
            }
            for (std::size_t j = s + 1; j < nc; ++j) {
                if (w.d.at(s, j) == 0) continue;
                mpz_class q = w.d.at(s, j) / w.d.at(s, s);
                w.col_add(j, s, -q);
                if (w.d.at(s, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold any non-multiple below-right into column s.
            bool divides = true;
            for (std::size_t i = s + 1; i < nr && divides; ++i)
                for (std::size_t j = s + 1; j < nc && divides; ++j)
                    if (w.d.at(i, j) % w.d.at(s, s) != 0) {
                        w.row_add(s, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (w.d.at(s, s) < 0) w.row_negate(s);
        if (w.d.at(s, s) == 0) break;
    }

    SmithResult res{std::move(w.d), std::move(w.u), std::move(w.v),
                    std::move(w.uinv), std::move(w.vinv), 0};
    for (std::size_t i = 0; i < nmin; ++i)
        if (res.d.at(i, i) != 0) ++res.rank;
    if (!(res.u * m * res.v == res.d)) throw std::logic_error("smith identity U M V = D failed");
    for (std::size_t i = 0; i + 1 < res.rank; ++i)
        if (res.d.at(i + 1, i + 1) % res.d.at(i, i) != 0)
            throw std::logic_error("smith divisibility chain failed");
    return res;
}

std::vector<mpz_class> SmithResult::invariants() const {
    std::vector<mpz_class> out;
    for (std::size_t i = 0; i < rank; ++i)
        if (d.at(i, i) > 1) out.push_back(d.at(i, i));
    return out;
}

ZMat kernel_basis(const ZMat& m) {
    if (m.cols() == 0) return ZMat(0, 0);
    if (m.rows() == 0) return ZMat::identity(m.cols());
    SmithResult s = smith_normal_form(m);
    // M = Uinv D Vinv, so M x = 0 iff D (Vinv x) = 0 iff Vinv x supported
    // beyond the rank; kernel basis = columns of V past the rank.
    std::size_t k = m.cols() - s.rank;
    ZMat b(m.cols(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) b.at(i, j) = s.v.at(i, s.rank + j);
    return b;
}

bool lattice_contains(const ZMat& b, const ZMat& v, std::vector<mpz_class>* sol) {
    if (v.cols() != 1 || v.rows() != b.rows()) throw std::invalid_argument("lattice_contains shape");
    SmithResult s = smith_normal_form(b);
    // B y = v  <=>  D (Vinv y) = U v.
    ZMat rhs = s.u * v;
    std::vector<mpz_class> w(b.cols(), mpz_class(0));
    for (std::size_t i = 0; i < b.rows(); ++i) {
        if (i < s.rank) {
            if (rhs.at(i, 0) % s.d.at(i, i) != 0) return false;
            if (i < b.cols()) w[i] = rhs.at(i, 0) / s.d.at(i, i);
        } else if (rhs.at(i, 0) != 0) {
            return false;
        }
    }
    if (sol) {
        sol->assign(b.cols(), mpz_class(0));
        for (std::size_t i = 0; i < b.cols(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*sol)[i] += s.v.at(i, j) * w[j];
    }
    return true;
}

QuotientStructure quotient_structure(std::size_t n, const ZMat& b) {
    if (b.rows() != n && b.cols() != 0) throw std::invalid_argument("quotient_structure shape");
    ZMat bb = (b.cols() == 0) ? ZMat(n, 0) : b;
    SmithResult s = smith_normal_form(bb);
    // Z^n / im(B): with U B V = D, the classes of the columns of Uinv
    // generate, column i having order d_i (0 meaning free).
    QuotientStructure q;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class ord = (i < std::min(bb.rows(), bb.cols()) && i < s.rank) ? s.d.at(i, i) : 0;
        std::vector<mpz_class> g(n);
        for (std::size_t r = 0; r < n; ++r) g[r] = s.uinv.at(r, i);
        if (ord == 1) continue;
        if (ord == 0) {
            ++q.free_rank;
            q.free_gens.push_back(std::move(g));
        } else {
            q.factors.push_back(ord);
            q.torsion_gens.push_back(std::move(g));
        }
    }
    return q;
}

FiniteSolutionGroup solve_congruence_kernel(const ZMat& a,
                                            const std::vector<long>& row_mods,
                                            const std::vector<long>& col_mods) {
    const std::size_t r = a.rows(), c = a.cols();
    if (row_mods.size() != r || col_mods.size() != c)
        throw std::invalid_argument("solve_congruence_kernel moduli");

    // Solutions of A x + diag(row_mods) y = 0; project kernel to the x block,
    // then adjoin diag(col_mods) so the lattice L satisfies M = diag(mods) <= L.
    ZMat slack(r, r);
    for (std::size_t i = 0; i < r; ++i) slack.at(i, i) = row_mods[i];
    ZMat k = kernel_basis(a.hstack(slack));

    ZMat gens(c, k.cols() + c);
    for (std::size_t j = 0; j < k.cols(); ++j)
        for (std::size_t i = 0; i < c; ++i) gens.at(i, j) = k.at(i, j);
    for (std::size_t i = 0; i < c; ++i) gens.at(i, k.cols() + i) = col_mods[i];

    // L as a full-rank lattice basis in Z^c: columns Uinv * D restricted to rank.
    SmithResult sg = smith_normal_form(gens);
    if (sg.rank != c) throw std::logic_error("solution lattice not full rank");
    ZMat basis(c, c);
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t i = 0; i < c; ++i) basis.at(i, j) = sg.uinv.at(i, j) * sg.d.at(j, j);

    // Express M = diag(col_mods) in the basis: basis * K = M, exact division.
    SmithResult sb = smith_normal_form(basis);
    ZMat kk(c, c);
    for (std::size_t j = 0; j < c; ++j) {
        ZMat rhs(c, 1);
        for (std::size_t i = 0; i < c; ++i) rhs.at(i, 0) = (i == j) ? mpz_class(col_mods[j]) : 0;
        ZMat ur = sb.u * rhs;
        std::vector<mpz_class> w(c);
        for (std::size_t i = 0; i < c; ++i) {
            if (ur.at(i, 0) % sb.d.at(i, i) != 0) throw std::logic_error("M not inside L");
            w[i] = ur.at(i, 0) / sb.d.at(i, i);
        }
        for (std::size_t i = 0; i < c; ++i) {
            mpz_class acc = 0;
            for (std::size_t t = 0; t < c; ++t) acc += sb.v.at(i, t) * w[t];
            kk.at(i, j) = acc;
        }
    }

    // L/M = Z^c / im(K) read through the basis.
    SmithResult sk = smith_normal_form(kk);
    FiniteSolutionGroup out;
    for (std::size_t i = 0; i < c; ++i) {
        mpz_class ord = sk.d.at(i, i);
        if (ord < 0) ord = -ord;
        if (ord == 1) continue;
        if (ord == 0) throw std::logic_error("L/M infinite");
        std::vector<mpz_class> g(c, mpz_class(0));
        for (std::size_t row = 0; row < c; ++row) {
            mpz_class acc = 0;
            for (std::size_t t = 0; t < c; ++t) acc += basis.at(row, t) * sk.uinv.at(t, i);
            mpz_class mod(col_mods[row]);
            acc %= mod;
            if (acc < 0) acc += mod;
            g[row] = acc;
        }
        out.gens.push_back(std::move(g));
        out.orders.push_back(ord);
        out.size *= ord;
    }
    return out;
}

}  // namespace kerind
