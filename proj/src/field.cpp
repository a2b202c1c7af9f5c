#include "twinkit/field.hpp"

#include <sstream>

#include "twinkit/errors.hpp"

namespace twinkit {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimeField::PrimeField(int p) : p_(p) {
    if (!is_prime(p) || p > kMaxPrime)
        throw InvalidField("modulus " + std::to_string(p) + " is not a prime <= " + std::to_string(kMaxPrime));
    inverse_.assign(static_cast<std::size_t>(p), 0);
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b)
            if (a * b % p == 1) inverse_[static_cast<std::size_t>(a)] = b;
}

int PrimeField::inv(int a) const {
    if (a % p_ == 0) throw InvalidField("division by zero");
    return inverse_[static_cast<std::size_t>(reduce(a))];
}

std::vector<int> PrimeField::units() const {
    std::vector<int> u;
    for (int a = 1; a < p_; ++a) u.push_back(a);
    return u;
}

FpMatrix::FpMatrix(int n, int p) : n_(n), p_(p), a_(static_cast<std::size_t>(n * n), 0) {
    if (!is_prime(p) || p > PrimeField::kMaxPrime) throw InvalidField("modulus " + std::to_string(p) + " rejected");
}

FpMatrix::FpMatrix(int p, const std::vector<std::vector<long long>>& rows)
    : FpMatrix(static_cast<int>(rows.size()), p) {
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n_) throw MalformedInput("matrix is not square");
        for (int j = 0; j < n_; ++j) set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
}

FpMatrix FpMatrix::identity(int n, int p) {
    FpMatrix m(n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::elementary(int n, int p, int i, int j, int t) {
    FpMatrix m = identity(n, p);
    m.set(i, j, m(i, j) + t);
    return m;
}

FpMatrix FpMatrix::diagonal(int p, const std::vector<int>& d) {
    FpMatrix m(static_cast<int>(d.size()), p);
    for (int i = 0; i < m.n(); ++i) m.set(i, i, d[static_cast<std::size_t>(i)]);
    return m;
}

void FpMatrix::set(int i, int j, long long v) {
    long long r = v % p_;
    if (r < 0) r += p_;
    a_[static_cast<std::size_t>(i * n_ + j)] = static_cast<std::uint8_t>(r);
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    FpMatrix r(n_, p_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int s = 0;
            for (int k = 0; k < n_; ++k) s += (*this)(i, k) * o(k, j);
            r.a_[static_cast<std::size_t>(i * n_ + j)] = static_cast<std::uint8_t>(s % p_);
        }
    return r;
}

FpMatrix FpMatrix::inverse() const {
    const PrimeField f(p_);
    FpMatrix a = *this, b = identity(n_, p_);
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int r = c; r < n_; ++r)
            if (a(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw InvalidField("matrix is singular");
        if (piv != c)
            for (int j = 0; j < n_; ++j) {
                std::swap(a.a_[static_cast<std::size_t>(c * n_ + j)], a.a_[static_cast<std::size_t>(piv * n_ + j)]);
                std::swap(b.a_[static_cast<std::size_t>(c * n_ + j)], b.a_[static_cast<std::size_t>(piv * n_ + j)]);
            }
        const int iv = f.inv(a(c, c));
        for (int j = 0; j < n_; ++j) {
            a.set(c, j, f.mul(a(c, j), iv));
            b.set(c, j, f.mul(b(c, j), iv));
        }
        for (int r = 0; r < n_; ++r) {
            if (r == c || a(r, c) == 0) continue;
            const int k = f.neg(a(r, c));
            a.add_row(r, c, k);
            b.add_row(r, c, k);
        }
    }
    return b;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(n_, p_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t.a_[static_cast<std::size_t>(j * n_ + i)] = a_[static_cast<std::size_t>(i * n_ + j)];
    return t;
}

int FpMatrix::det() const {
    const PrimeField f(p_);
    FpMatrix a = *this;
    int d = 1;
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int r = c; r < n_; ++r)
            if (a(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n_; ++j)
                std::swap(a.a_[static_cast<std::size_t>(c * n_ + j)], a.a_[static_cast<std::size_t>(piv * n_ + j)]);
            d = f.neg(d);
        }
        d = f.mul(d, a(c, c));
        const int iv = f.inv(a(c, c));
        for (int r = c + 1; r < n_; ++r)
            if (a(r, c) != 0) a.add_row(r, c, f.neg(f.mul(a(r, c), iv)));
    }
    return d;
}

bool FpMatrix::is_identity() const { return *this == identity(n_, p_); }

bool FpMatrix::is_upper() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < i; ++j)
            if ((*this)(i, j)) return false;
    return true;
}

bool FpMatrix::is_lower() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((*this)(i, j)) return false;
    return true;
}

bool FpMatrix::is_diagonal() const { return is_upper() && is_lower(); }

bool FpMatrix::is_monomial() const {
    for (int i = 0; i < n_; ++i) {
        int row = 0, col = 0;
        for (int j = 0; j < n_; ++j) {
            row += (*this)(i, j) != 0;
            col += (*this)(j, i) != 0;
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

bool FpMatrix::unit_diagonal() const {
    for (int i = 0; i < n_; ++i)
        if ((*this)(i, i) != 1) return false;
    return true;
}

void FpMatrix::add_row(int target, int source, int c) {
    if (c == 0) return;
    for (int j = 0; j < n_; ++j) {
        auto& t = a_[static_cast<std::size_t>(target * n_ + j)];
        t = static_cast<std::uint8_t>((t + c * (*this)(source, j)) % p_);
    }
}

void FpMatrix::add_col(int target, int source, int c) {
    if (c == 0) return;
    for (int i = 0; i < n_; ++i) {
        auto& t = a_[static_cast<std::size_t>(i * n_ + target)];
        t = static_cast<std::uint8_t>((t + c * (*this)(i, source)) % p_);
    }
}

void FpMatrix::scale_col(int j, int c) {
    for (int i = 0; i < n_; ++i) {
        auto& t = a_[static_cast<std::size_t>(i * n_ + j)];
        t = static_cast<std::uint8_t>(t * c % p_);
    }
}

std::string FpMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n_; ++i) {
        if (i) os << ';';
        for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    }
    os << ']';
    return os.str();
}

nlohmann::json FpMatrix::to_json() const {
    auto rows = nlohmann::json::array();
    for (int i = 0; i < n_; ++i) {
        auto r = nlohmann::json::array();
        for (int j = 0; j < n_; ++j) r.push_back((*this)(i, j));
        rows.push_back(r);
    }
    return {{"modulus", p_}, {"rows", rows}};
}

FpMatrix FpMatrix::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("modulus") || !j.contains("rows"))
        throw MalformedInput("matrix must be {\"modulus\": p, \"rows\": [[...]]}");
    if (!j.at("modulus").is_number_integer()) throw MalformedInput("modulus must be an integer");
    const int p = j.at("modulus").get<int>();
    if (!is_prime(p) || p > PrimeField::kMaxPrime) throw InvalidField("modulus " + std::to_string(p) + " rejected");
    std::vector<std::vector<long long>> rows;
    if (!j.at("rows").is_array() || j.at("rows").empty()) throw MalformedInput("rows must be a non-empty array");
    for (const auto& r : j.at("rows")) {
        if (!r.is_array()) throw MalformedInput("each row must be an array");
        std::vector<long long> row;
        for (const auto& x : r) {
            if (!x.is_number_integer()) throw MalformedInput("matrix entries must be integers");
            row.push_back(x.get<long long>());
        }
        rows.push_back(std::move(row));
    }
    return FpMatrix(p, rows);
}

std::size_t FpMatrixHash::operator()(const FpMatrix& m) const {
    std::size_t h = static_cast<std::size_t>(m.p());
    for (auto v : m.data()) h = h * 31 + v;
    return h;
}

} // namespace twinkit
