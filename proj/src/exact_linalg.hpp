#pragma once

#include <algorithm>
#include <vector>

#include "twinkit/errors.hpp"
#include "twinkit/km_algebra.hpp"

namespace twinkit::detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

/// Z-lattice in Q^d kept as (1/den) * (integer HNF rows).
class Lattice {
public:
    explicit Lattice(int d) : d_(d) {}

    bool contains(const QVector& v) const {
        std::vector<Integer> u(static_cast<std::size_t>(d_));
        for (int k = 0; k < d_; ++k) {
            const Rational s = v[static_cast<std::size_t>(k)] * Rational(den_);
            if (!is_integral(s)) return false;
            u[static_cast<std::size_t>(k)] = numerator(s);
        }
        for (const auto& row : rows_) {
            const int p = pivot(row);
            const auto& a = u[static_cast<std::size_t>(p)];
            if (a % row[static_cast<std::size_t>(p)] != 0) return false;
            const Integer q = a / row[static_cast<std::size_t>(p)];
            for (int k = 0; k < d_; ++k) u[static_cast<std::size_t>(k)] -= q * row[static_cast<std::size_t>(k)];
        }
        return std::all_of(u.begin(), u.end(), [](const Integer& x) { return x == 0; });
    }

    bool add(const QVector& v) {
        if (contains(v)) return false;
        Integer l = den_;
        for (const auto& q : v) l = boost::multiprecision::lcm(l, Integer(denominator(q)));
        const Integer scale = l / den_;
        for (auto& row : rows_)
            for (auto& x : row) x *= scale;
        std::vector<Integer> nv(static_cast<std::size_t>(d_));
        for (int k = 0; k < d_; ++k) nv[static_cast<std::size_t>(k)] = numerator(v[static_cast<std::size_t>(k)] * Rational(l));
        rows_.push_back(std::move(nv));
        den_ = l;
        hnf();
        return true;
    }

    std::vector<QVector> basis() const {
        std::vector<QVector> out;
        for (const auto& row : rows_) {
            QVector q(static_cast<std::size_t>(d_));
            for (int k = 0; k < d_; ++k) q[static_cast<std::size_t>(k)] = Rational(row[static_cast<std::size_t>(k)], den_);
            out.push_back(std::move(q));
        }
        return out;
    }
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    static int pivot(const std::vector<Integer>& row) {
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k] != 0) return static_cast<int>(k);
        return -1;
    }

    void hnf() {
        std::size_t r = 0;
        for (int c = 0; c < d_ && r < rows_.size(); ++c) {
            for (;;) {
                std::size_t best = rows_.size();
                for (std::size_t i = r; i < rows_.size(); ++i)
                    if (rows_[i][static_cast<std::size_t>(c)] != 0 &&
                        (best == rows_.size() || abs(rows_[i][static_cast<std::size_t>(c)]) < abs(rows_[best][static_cast<std::size_t>(c)])))
                        best = i;
                if (best == rows_.size()) break;
                std::swap(rows_[r], rows_[best]);
                bool done = true;
                for (std::size_t i = r + 1; i < rows_.size(); ++i) {
                    if (rows_[i][static_cast<std::size_t>(c)] == 0) continue;
                    const Integer q = rows_[i][static_cast<std::size_t>(c)] / rows_[r][static_cast<std::size_t>(c)];
                    for (int k = 0; k < d_; ++k) rows_[i][static_cast<std::size_t>(k)] -= q * rows_[r][static_cast<std::size_t>(k)];
                    if (rows_[i][static_cast<std::size_t>(c)] != 0) done = false;
                }
                if (done) break;
            }
            if (r >= rows_.size() || rows_[r][static_cast<std::size_t>(c)] == 0) continue;
            if (rows_[r][static_cast<std::size_t>(c)] < 0)
                for (auto& x : rows_[r]) x = -x;
            for (std::size_t i = 0; i < r; ++i) {
                const Integer q = floor_div(rows_[i][static_cast<std::size_t>(c)], rows_[r][static_cast<std::size_t>(c)]);
                if (q != 0)
                    for (int k = 0; k < d_; ++k) rows_[i][static_cast<std::size_t>(k)] -= q * rows_[r][static_cast<std::size_t>(k)];
            }
            ++r;
        }
        std::erase_if(rows_, [](const auto& row) { return pivot(row) < 0; });
    }

    int d_;
    Integer den_ = 1;
    std::vector<std::vector<Integer>> rows_;
};

inline QMatrix invert(const QMatrix& m) {
    const int n = m.rows();
    QMatrix a = m, inv = QMatrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw Error("singular basis matrix");
        for (int k = 0; k < n; ++k) {
            std::swap(a(c, k), a(p, k));
            std::swap(inv(c, k), inv(p, k));
        }
        const Rational lead = a(c, c);
        for (int k = 0; k < n; ++k) {
            a(c, k) /= lead;
            inv(c, k) /= lead;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (int k = 0; k < n; ++k) {
                a(i, k) -= f * a(c, k);
                inv(i, k) -= f * inv(c, k);
            }
        }
    }
    return inv;
}

} // namespace twinkit::detail
