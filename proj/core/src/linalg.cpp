#include "bpu/linalg.h"

#include <algorithm>
#include <utility>

namespace bpu {

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns)
{
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw Error("Matrix::from_columns: column has wrong length");
        for (std::size_t i = 0; i < rows; ++i)
            m.at(i, j) = columns[j][i];
    }
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error("Matrix::from_rows: row has wrong length");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = at(i, c);
    return v;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

Matrix Matrix::reduced(const CoefficientRing& ring) const
{
    Matrix m = *this;
    for (auto& x : m.data_)
        x = ring.normalize(x);
    return m;
}

Matrix Matrix::stacked(const Matrix& other) const
{
    if (rows_ == 0)
        return other;
    if (other.rows_ == 0)
        return *this;
    if (other.cols_ != cols_)
        throw Error("Matrix::stacked: column count mismatch");
    Matrix m(rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error("Matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& x = a.at(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c.at(i, j) += x * b.at(k, j);
        }
    return c;
}

namespace {

using Word = std::int64_t;
__extension__ using Wide = __int128;

struct WordMatrix {
    std::size_t rows, cols;
    std::vector<Word> d;
    Word& at(std::size_t r, std::size_t c) { return d[r * cols + c]; }
};

Word inv_mod(Word a, Word p)
{
    Word r = 1, e = p - 2;
    a %= p;
    while (e > 0) {
        if (e & 1)
            r = static_cast<Word>((static_cast<Wide>(r) * a) % p);
        a = static_cast<Word>((static_cast<Wide>(a) * a) % p);
        e >>= 1;
    }
    return r;
}

WordMatrix to_words(const Matrix& a, Word p)
{
    WordMatrix w{a.rows(), a.cols(), std::vector<Word>(a.rows() * a.cols())};
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Integer x = a.at(i, j) % p;
            if (x < 0)
                x += p;
            w.at(i, j) = static_cast<Word>(x);
        }
    return w;
}

// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> gauss_jordan(WordMatrix& m, Word p)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0)
            ++piv;
        if (piv == m.rows)
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(piv, j), m.at(r, j));
        Word inv = inv_mod(m.at(r, c), p);
        for (std::size_t j = c; j < m.cols; ++j)
            m.at(r, j) = static_cast<Word>((static_cast<Wide>(m.at(r, j)) * inv) % p);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0)
                continue;
            Word f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) {
                Word v = static_cast<Word>((m.at(i, j) - static_cast<Wide>(f) * m.at(r, j)) % p);
                m.at(i, j) = v < 0 ? v + p : v;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RowEchelon rref_mod_p(const Matrix& a, std::int64_t p)
{
    WordMatrix w = to_words(a, p);
    auto pivots = gauss_jordan(w, p);
    Matrix out(pivots.size(), a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = w.at(i, j);
    return {std::move(out), std::move(pivots)};
}

std::size_t rank_mod_p(const Matrix& a, std::int64_t p)
{
    WordMatrix w = to_words(a, p);
    return gauss_jordan(w, p).size();
}

std::vector<Vector> nullspace_mod_p(const Matrix& a, std::int64_t p)
{
    const std::size_t n = a.cols();
    WordMatrix w = to_words(a, p);
    auto pivots = gauss_jordan(w, p);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots)
        is_pivot[c] = true;

    std::vector<Vector> raw;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            Word x = w.at(i, f);
            v[pivots[i]] = x == 0 ? Integer(0) : Integer(p - x);
        }
        raw.push_back(std::move(v));
    }
    if (raw.empty())
        return raw;
    // bring the basis itself into reduced row-echelon form
    RowEchelon e = rref_mod_p(Matrix::from_rows(n, raw), p);
    std::vector<Vector> out;
    for (std::size_t i = 0; i < e.matrix.rows(); ++i)
        out.push_back(e.matrix.row(i));
    return out;
}

std::size_t rank_over_q(const Matrix& a)
{
    Matrix m = a;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m.at(piv, c) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m.at(piv, j), m.at(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    return r;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace

namespace {

// Nearest-integer quotient, so remainders satisfy |a - q b| <= |b| / 2.
Integer nearest_div(const Integer& a, const Integer& b)
{
    Integer q = floor_div(2 * a + b, 2 * b);
    return q;
}

// Euclid on the entries vecs[k][pos], k in [from, vecs.size()): afterwards only
// vecs[from] may be nonzero there.  Returns false when all entries vanish.
bool euclid_pivot(std::vector<Vector>& vecs, std::size_t from, std::size_t pos, std::size_t start)
{
    for (;;) {
        std::size_t best = vecs.size();
        for (std::size_t k = from; k < vecs.size(); ++k)
            if (vecs[k][pos] != 0 && (best == vecs.size() || abs(vecs[k][pos]) < abs(vecs[best][pos])))
                best = k;
        if (best == vecs.size())
            return false;
        std::swap(vecs[from], vecs[best]);
        bool done = true;
        const Vector& piv = vecs[from];
        for (std::size_t k = from + 1; k < vecs.size(); ++k) {
            if (vecs[k][pos] == 0)
                continue;
            Integer q = nearest_div(vecs[k][pos], piv[pos]);
            for (std::size_t j = start; j < piv.size(); ++j)
                if (piv[j] != 0)
                    vecs[k][j] -= q * piv[j];
            if (vecs[k][pos] != 0)
                done = false;
        }
        if (done)
            return true;
    }
}

}  // namespace

std::vector<Vector> hermite_rows(std::vector<Vector> rows)
{
    if (rows.empty())
        return rows;
    const std::size_t n = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        if (!euclid_pivot(rows, r, c, c))
            continue;
        if (rows[r][c] < 0)
            for (std::size_t j = c; j < n; ++j)
                rows[r][j] = -rows[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = floor_div(rows[i][c], rows[r][c]);
            if (q != 0)
                for (std::size_t j = c; j < n; ++j)
                    rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<Vector> integer_kernel(const Matrix& a)
{
    const std::size_t m = a.rows(), n = a.cols();
    // Column operations on the augmented matrix [A; I]: once the A block is in
    // column echelon form, the identity-block columns under zero A-columns span
    // the kernel.
    std::vector<Vector> cols(n, Vector(m + n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i)
            cols[j][i] = a.at(i, j);
        cols[j][m + j] = 1;
    }
    std::size_t pc = 0;  // next pivot column
    for (std::size_t i = 0; i < m && pc < n; ++i)
        if (euclid_pivot(cols, pc, i, 0))
            ++pc;
    std::vector<Vector> kernel;
    for (std::size_t j = pc; j < n; ++j)
        kernel.emplace_back(cols[j].begin() + static_cast<std::ptrdiff_t>(m), cols[j].end());
    return hermite_rows(std::move(kernel));
}

std::optional<Vector> lattice_coordinates(const std::vector<Vector>& hnf_rows, const Vector& v)
{
    Vector rest = v;
    Vector coeff(hnf_rows.size());
    for (std::size_t i = 0; i < hnf_rows.size(); ++i) {
        const auto& row = hnf_rows[i];
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0)
            ++c;
        if (c == row.size())
            throw Error("lattice_coordinates: zero row in basis");
        for (std::size_t j = 0; j < c; ++j)
            if (rest[j] != 0)
                return std::nullopt;
        if (rest[c] % row[c] != 0)
            return std::nullopt;
        coeff[i] = rest[c] / row[c];
        if (coeff[i] != 0)
            for (std::size_t j = c; j < row.size(); ++j)
                rest[j] -= coeff[i] * row[j];
    }
    for (const auto& x : rest)
        if (x != 0)
            return std::nullopt;
    return coeff;
}

}  // namespace bpu
