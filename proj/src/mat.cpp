#include "k3disc/mat.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace k3disc {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::from_cols(const std::vector<IntVec>& cols) {
    int c = static_cast<int>(cols.size());
    int r = c ? static_cast<int>(cols[0].size()) : 0;
    IntMat m(r, c);
    for (int j = 0; j < c; ++j) {
        if (static_cast<int>(cols[j].size()) != r)
            throw std::invalid_argument("from_cols: ragged columns");
        for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

IntVec IntMat::row(int i) const {
    IntVec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
}

IntVec IntMat::col(int j) const {
    IntVec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

void IntMat::set_col(int j, const IntVec& v) {
    for (int i = 0; i < rows; ++i) at(i, j) = v[i];
}

IntMat transpose(const IntMat& m) {
    IntMat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

IntMat mul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mul: dimension mismatch");
    IntMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

IntVec mul_vec(const IntMat& m, const IntVec& v) {
    if (m.cols != static_cast<int>(v.size()))
        throw std::invalid_argument("mul_vec: dimension mismatch");
    IntVec out(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        Int s = 0;
        for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

bool is_symmetric(const IntMat& m) {
    if (m.rows != m.cols) return false;
    for (int i = 0; i < m.rows; ++i)
        for (int j = i + 1; j < m.cols; ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

Int bareiss_determinant(IntMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
    int n = m.rows;
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;  // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

IntVec SnfResult::divisors() const {
    IntVec out;
    int n = std::min(d.rows, d.cols);
    for (int i = 0; i < n; ++i)
        if (d.at(i, i) != 0) out.push_back(d.at(i, i));
    return out;
}

namespace {

struct SnfWork {
    IntMat d, a, b;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < b.rows; ++r) std::swap(b.at(r, i), b.at(r, j));
    }
    // row i -= q * row j
    void row_sub(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < d.cols; ++c) d.at(i, c) -= q * d.at(j, c);
        for (int c = 0; c < a.cols; ++c) a.at(i, c) -= q * a.at(j, c);
    }
    // col i -= q * col j
    void col_sub(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int r = 0; r < d.rows; ++r) d.at(r, i) -= q * d.at(r, j);
        for (int r = 0; r < b.rows; ++r) b.at(r, i) -= q * b.at(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMat& m) {
    SnfWork w{m, IntMat::identity(m.rows), IntMat::identity(m.cols)};
    int n = std::min(m.rows, m.cols);

    for (int k = 0; k < n; ++k) {
        for (;;) {
            // smallest nonzero |entry| in the trailing block as pivot
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = k; i < w.d.rows; ++i)
                for (int j = k; j < w.d.cols; ++j) {
                    const Int& v = w.d.at(i, j);
                    if (v == 0) continue;
                    Int av = abs(v);
                    if (pi < 0 || av < best) { best = av; pi = i; pj = j; }
                }
            if (pi < 0) break;  // trailing block zero
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);

            bool clean = true;
            for (int i = k + 1; i < w.d.rows; ++i) {
                Int q = round_div(w.d.at(i, k), w.d.at(k, k));
                w.row_sub(i, k, q);
                if (w.d.at(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < w.d.cols; ++j) {
                Int q = round_div(w.d.at(k, j), w.d.at(k, k));
                w.col_sub(j, k, q);
                if (w.d.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: pivot must divide the trailing block
            bool fixed = true;
            for (int i = k + 1; i < w.d.rows && fixed; ++i)
                for (int j = k + 1; j < w.d.cols && fixed; ++j)
                    if (w.d.at(i, j) % w.d.at(k, k) != 0) {
                        w.row_sub(k, i, Int(-1));  // add row i to row k
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (k < w.d.rows && k < w.d.cols && w.d.at(k, k) < 0) w.negate_row(k);
    }

#ifndef NDEBUG
    // postcondition d = a*m*b with unimodular transforms
    assert(mul(mul(w.a, m), w.b) == w.d);
    Int da = bareiss_determinant(w.a), db = bareiss_determinant(w.b);
    assert(da == 1 || da == -1);
    assert(db == 1 || db == -1);
#endif
    return SnfResult{w.d, w.a, w.b};
}

IntMat integer_kernel(const IntMat& m) {
    SnfResult s = smith_normal_form(m);
    int n = std::min(m.rows, m.cols);
    int r = 0;
    while (r < n && s.d.at(r, r) != 0) ++r;
    // kernel = span of B columns r..cols-1
    IntMat k(m.cols, m.cols - r);
    for (int j = r; j < m.cols; ++j)
        for (int i = 0; i < m.cols; ++i) k.at(i, j - r) = s.b.at(i, j);
    return k;
}

std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b) {
    if (static_cast<int>(b.size()) != m.rows)
        throw std::invalid_argument("solve_integer: dimension mismatch");
    SnfResult s = smith_normal_form(m);
    IntVec c = mul_vec(s.a, b);
    int n = std::min(m.rows, m.cols);
    IntVec y(m.cols, Int(0));
    for (int i = 0; i < m.rows; ++i) {
        Int di = (i < n) ? s.d.at(i, i) : Int(0);
        if (di == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % di != 0) return std::nullopt;
            y[i] = c[i] / di;
        }
    }
    return mul_vec(s.b, y);
}

IntMat column_reduce(IntMat m, IntMat* payload) {
    // column-style Hermite reduction: unimodular column ops only
    int rows = m.rows, cols = m.cols;
    int lead = 0;
    for (int i = 0; i < rows && lead < cols; ++i) {
        // gcd-reduce row i across columns lead..cols-1
        for (;;) {
            int piv = -1;
            Int best = 0;
            for (int j = lead; j < cols; ++j) {
                const Int& v = m.at(i, j);
                if (v == 0) continue;
                Int av = abs(v);
                if (piv < 0 || av < best) { best = av; piv = j; }
            }
            if (piv < 0) break;
            // move pivot column to position `lead`
            if (piv != lead) {
                for (int r = 0; r < rows; ++r) std::swap(m.at(r, lead), m.at(r, piv));
                if (payload)
                    for (int r = 0; r < payload->rows; ++r)
                        std::swap(payload->at(r, lead), payload->at(r, piv));
            }
            bool clean = true;
            for (int j = lead + 1; j < cols; ++j) {
                Int q = round_div(m.at(i, j), m.at(i, lead));
                if (q == 0 && m.at(i, j) == 0) continue;
                for (int r = 0; r < rows; ++r) m.at(r, j) -= q * m.at(r, lead);
                if (payload)
                    for (int r = 0; r < payload->rows; ++r)
                        payload->at(r, j) -= q * payload->at(r, lead);
                if (m.at(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m.at(i, lead) != 0) ++lead;
    }
    // keep the first `lead` columns (nonzero span)
    IntMat out(rows, lead);
    for (int j = 0; j < lead; ++j)
        for (int i = 0; i < rows; ++i) out.at(i, j) = m.at(i, j);
    if (payload) {
        IntMat p(payload->rows, lead);
        for (int j = 0; j < lead; ++j)
            for (int i = 0; i < payload->rows; ++i) p.at(i, j) = payload->at(i, j);
        *payload = p;
    }
    return out;
}

IntMat column_hnf(const IntMat& m) {
    IntMat w = column_reduce(m);
    // w is column-echelon up to pivot normalization; finish to the unique
    // Hermite form: walk pivot rows, force positive pivots, reduce entries
    // left of each pivot into [0, pivot)
    int rows = w.rows, cols = w.cols;
    int lead = 0;
    for (int i = 0; i < rows && lead < cols; ++i) {
        if (w.at(i, lead) == 0) continue;
        if (w.at(i, lead) < 0)
            for (int r = 0; r < rows; ++r) w.at(r, lead) = -w.at(r, lead);
        for (int j = 0; j < lead; ++j) {
            Int q = floor_div(w.at(i, j), w.at(i, lead));
            if (q == 0) continue;
            for (int r = 0; r < rows; ++r) w.at(r, j) -= q * w.at(r, lead);
        }
        ++lead;
    }
    return w;
}

RatMat::RatMat(const IntMat& m) : rows(m.rows), cols(m.cols), a(m.a.size()) {
    for (size_t i = 0; i < m.a.size(); ++i) a[i] = Rat(m.a[i]);
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatVec RatMat::col(int j) const {
    RatVec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

RatMat mul(const RatMat& x, const RatMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mul: dimension mismatch");
    RatMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rat& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

RatVec mul_vec(const RatMat& m, const RatVec& v) {
    if (m.cols != static_cast<int>(v.size()))
        throw std::invalid_argument("mul_vec: dimension mismatch");
    RatVec out(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        Rat s = 0;
        for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

RatVec mul_vec(const RatMat& m, const IntVec& v) { return mul_vec(m, to_rat(v)); }

RatMat add(const RatMat& x, const RatMat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("add: dimension mismatch");
    RatMat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
}

RatMat rat_inverse(const RatMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("rat_inverse: not square");
    int n = m.rows;
    RatMat w = m, inv = RatMat::identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) throw std::invalid_argument("rat_inverse: singular matrix");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(piv, j));
                std::swap(inv.at(k, j), inv.at(piv, j));
            }
        Rat p = w.at(k, k);
        for (int j = 0; j < n; ++j) { w.at(k, j) /= p; inv.at(k, j) /= p; }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            Rat f = w.at(i, k);
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

std::optional<RatVec> solve_rational(const RatMat& m, const RatVec& b) {
    if (static_cast<int>(b.size()) != m.rows)
        throw std::invalid_argument("solve_rational: dimension mismatch");
    int rows = m.rows, cols = m.cols;
    RatMat w(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) w.at(i, j) = m.at(i, j);
        w.at(i, cols) = b[i];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (w.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j <= cols; ++j) std::swap(w.at(r, j), w.at(piv, j));
        Rat p = w.at(r, c);
        for (int j = 0; j <= cols; ++j) w.at(r, j) /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Rat f = w.at(i, c);
            if (f == 0) continue;
            for (int j = 0; j <= cols; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (w.at(i, cols) != 0) return std::nullopt;
    RatVec x(cols, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = w.at(i, cols);
    return x;
}

RatVec to_rat(const IntVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

std::string to_string(const IntMat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < m.cols; ++j) os << (j ? "," : "") << m.at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace k3disc
