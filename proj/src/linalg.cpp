#include "parhox/linalg.hpp"
#include <algorithm>

namespace parhox {

Vec zero_vec(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v[i] = Scalar::one(f);
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

void axpy(Vec& y, const Scalar& c, const Vec& x) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += c * x[i];
}

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    return s;
}

Vec to_dense(const FieldSpec& f, std::size_t n, const SparseVec& v) {
    Vec d = zero_vec(f, n);
    for (const auto& [i, c] : v) d[i] = c;
    return d;
}

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : f_(f), r_(rows), c_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_columns(const FieldSpec& f, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec v;
    v.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) v.push_back(at(i, j));
    return v;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_));
}

Vec Matrix::apply(const Vec& v) const {
    Vec r = zero_vec(f_, r_);
    for (std::size_t j = 0; j < c_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < r_; ++i)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    Matrix m(f_, r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.c_; ++j)
                if (!o.at(k, j).is_zero()) m.at(i, j) += x * o.at(k, j);
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= c;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

void Matrix::add_scaled(const Scalar& c, const Matrix& o) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i] += c * o.a_[i];
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.r_; ++i)
        for (std::size_t j = 0; j < b.c_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

Rref rref(Matrix m) {
    Rref out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = m.rows();
        for (std::size_t i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        Scalar inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m.at(row, j).is_zero()) m.at(row, j) *= inv;
        std::vector<std::size_t> nz;
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m.at(row, j).is_zero()) nz.push_back(j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar c = m.at(i, col);
            for (std::size_t j : nz) m.at(i, j) -= c * m.at(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) {
    Echelon e(m.field(), m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.column(j));
    return e.rank();
}

std::vector<Vec> kernel(const Matrix& m) {
    Rref r = rref(m);
    const FieldSpec f = m.field();
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : r.pivots) is_piv[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        Vec v = zero_vec(f, m.cols());
        v[free] = Scalar::one(f);
        for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < m.rows(); ++i) aug.at(i, m.cols()) = b[i];
    Rref r = rref(aug);
    Vec x = zero_vec(m.field(), m.cols());
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
        if (r.pivots[k] == m.cols()) return std::nullopt;
        x[r.pivots[k]] = r.reduced.at(k, m.cols());
    }
    return x;
}

namespace {

using Work = std::map<std::size_t, Scalar>;

void reduce_work(Work& w, const std::map<std::size_t, SparseVec>& pivots) {
    auto it = w.begin();
    while (it != w.end()) {
        auto p = pivots.find(it->first);
        if (p == pivots.end()) {
            ++it;
            continue;
        }
        std::size_t idx = it->first;
        Scalar c = it->second;
        for (const auto& [j, pv] : p->second) {
            auto [wj, inserted] = w.try_emplace(j, Scalar::zero(c.field()));
            wj->second -= c * pv;
            if (wj->second.is_zero()) w.erase(wj);
        }
        it = w.upper_bound(idx);
    }
}

}  // namespace

SparseVec Echelon::reduce(const SparseVec& v) const {
    Work w;
    for (const auto& [i, c] : v)
        if (!c.is_zero()) w.emplace(i, c);
    reduce_work(w, pivots_);
    return SparseVec(w.begin(), w.end());
}

bool Echelon::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    Scalar inv = r.front().second.inverse();
    for (auto& e : r) e.second *= inv;
    std::size_t lead = r.front().first;
    pivots_.emplace(lead, std::move(r));
    return true;
}

bool Echelon::insert(const Vec& v) { return insert(to_sparse(v)); }

bool Echelon::contains(const Vec& v) const { return reduce(to_sparse(v)).empty(); }

std::vector<std::size_t> Echelon::non_pivots() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (!pivots_.count(i)) out.push_back(i);
    return out;
}

std::vector<SparseVec> Echelon::sparse_reduced_basis() const {
    std::map<std::size_t, SparseVec> done;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        Work w(it->second.begin(), it->second.end());
        std::size_t lead = it->first;
        // eliminate later pivot coordinates only
        auto jt = w.upper_bound(lead);
        while (jt != w.end()) {
            auto p = done.find(jt->first);
            if (p == done.end()) {
                ++jt;
                continue;
            }
            std::size_t idx = jt->first;
            Scalar c = jt->second;
            for (const auto& [j, pv] : p->second) {
                auto [wj, ins] = w.try_emplace(j, Scalar::zero(f_));
                wj->second -= c * pv;
                if (wj->second.is_zero()) w.erase(wj);
            }
            jt = w.upper_bound(idx);
        }
        done.emplace(lead, SparseVec(w.begin(), w.end()));
    }
    std::vector<SparseVec> out;
    for (auto& [lead, v] : done) out.push_back(std::move(v));
    return out;
}

std::vector<Vec> Echelon::reduced_basis() const {
    std::vector<Vec> out;
    for (const auto& v : sparse_reduced_basis()) out.push_back(to_dense(f_, n_, v));
    return out;
}

std::vector<SparseVec> Echelon::sparse_null_space() const {
    // Column j of the reduced rows gives the pivot entries of the null vector for free index j.
    std::vector<SparseVec> by_column(n_);
    for (const auto& row : sparse_reduced_basis()) {
        const std::size_t lead = row.front().first;
        for (const auto& [j, c] : row)
            if (j != lead) by_column[j].emplace_back(lead, -c);
    }
    std::vector<SparseVec> out;
    for (std::size_t j = 0; j < n_; ++j) {
        if (pivots_.count(j)) continue;
        SparseVec v = std::move(by_column[j]);
        v.emplace_back(j, Scalar::one(f_));
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> Echelon::null_space() const {
    std::vector<Vec> out;
    for (const auto& v : sparse_null_space()) out.push_back(to_dense(f_, n_, v));
    return out;
}

SpanSolver::SpanSolver(const FieldSpec& f, std::size_t ambient, std::vector<Vec> basis)
    : f_(f), n_(ambient), basis_(std::move(basis)) {
    const std::size_t k = basis_.size();
    Matrix bt(f_, k, n_);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n_; ++i) bt.at(j, i) = basis_[j][i];
    Rref r = rref(bt);
    if (r.pivots.size() != k) fail(ErrorKind::InvalidInput, "SpanSolver: basis is linearly dependent");
    rows_ = r.pivots;
    Matrix sq(f_, k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t j = 0; j < k; ++j) sq.at(a, j) = basis_[j][rows_[a]];
    Matrix aug(f_, k, 2 * k);
    aug.set_block(0, 0, sq);
    aug.set_block(0, k, Matrix::identity(f_, k));
    Rref ri = rref(aug);
    inv_ = Matrix(f_, k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t j = 0; j < k; ++j) inv_.at(a, j) = ri.reduced.at(a, k + j);
}

std::optional<Vec> SpanSolver::coords(const Vec& v) const {
    Vec sel;
    sel.reserve(rows_.size());
    for (auto r : rows_) sel.push_back(v[r]);
    Vec c = inv_.apply(sel);
    if (combine(c) != v) return std::nullopt;
    return c;
}

Vec SpanSolver::combine(const Vec& c) const {
    Vec out = zero_vec(f_, n_);
    for (std::size_t j = 0; j < basis_.size(); ++j) axpy(out, c[j], basis_[j]);
    return out;
}

QuotientSpace::QuotientSpace(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& relations)
    : f_(f), ech_(f, ambient) {
    for (const auto& r : relations) ech_.insert(r);
    keep_ = ech_.non_pivots();
    pos_.assign(ambient, -1);
    for (std::size_t k = 0; k < keep_.size(); ++k) pos_[keep_[k]] = static_cast<long>(k);
}

Vec QuotientSpace::project(const Vec& v) const {
    SparseVec r = ech_.reduce(to_sparse(v));
    Vec out = zero_vec(f_, keep_.size());
    for (const auto& [i, c] : r) out[static_cast<std::size_t>(pos_[i])] = c;
    return out;
}

Vec QuotientSpace::lift(std::size_t k) const { return unit_vec(f_, ech_.ambient(), keep_[k]); }

Matrix QuotientSpace::projection_matrix() const {
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < ech_.ambient(); ++i) cols.push_back(project(unit_vec(f_, ech_.ambient(), i)));
    return Matrix::from_columns(f_, keep_.size(), cols);
}

}  // namespace parhox
