#include "twinkit/gcm.hpp"

#include <string>

#include "twinkit/errors.hpp"

namespace twinkit {

namespace {

bool allowed_label(int m) {
    return m == kInfiniteLabel || m == 2 || m == 3 || m == 4 || m == 6;
}

} // namespace

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> rows) {
    rank_ = static_cast<int>(rows.size());
    if (rank_ == 0) throw InvalidCoxeterMatrix("rank must be positive");
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != rank_) throw InvalidCoxeterMatrix("matrix is not square");
        m_.insert(m_.end(), r.begin(), r.end());
    }
    for (int i = 0; i < rank_; ++i) {
        if ((*this)(i, i) != 1) throw InvalidCoxeterMatrix("diagonal entry must be 1");
        for (int j = 0; j < rank_; ++j) {
            if (i == j) continue;
            if ((*this)(i, j) != (*this)(j, i)) throw InvalidCoxeterMatrix("matrix is not symmetric");
            if (!allowed_label((*this)(i, j)))
                throw InvalidCoxeterMatrix("label " + std::to_string((*this)(i, j)) +
                                           " outside {2,3,4,6,inf}");
        }
    }
}

Gcm::Gcm(std::vector<std::vector<int>> rows) {
    rank_ = static_cast<int>(rows.size());
    if (rank_ == 0) throw InvalidGcm("rank must be positive");
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != rank_) throw InvalidGcm("matrix is not square");
        a_.insert(a_.end(), r.begin(), r.end());
    }
    for (int i = 0; i < rank_; ++i) {
        if ((*this)(i, i) != 2) throw InvalidGcm("diagonal entry must be 2");
        for (int j = 0; j < rank_; ++j) {
            if (i == j) continue;
            if ((*this)(i, j) > 0) throw InvalidGcm("positive off-diagonal entry");
            if (((*this)(i, j) == 0) != ((*this)(j, i) == 0))
                throw InvalidGcm("zero pattern is not symmetric");
        }
    }
}

std::vector<std::vector<int>> Gcm::rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
    return out;
}

int coxeter_label(int product) {
    switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return kInfiniteLabel;
    }
}

CoxeterMatrix coxeter_matrix(const Gcm& a) {
    const int n = a.rank();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coxeter_label(a(i, j) * a(j, i));
    return CoxeterMatrix(std::move(rows));
}

Gcm realize_coxeter_matrix(const CoxeterMatrix& m) {
    const int n = m.rank();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
        for (int j = i + 1; j < n; ++j) {
            int aij = 0, aji = 0;
            switch (m(i, j)) {
            case 2: break;
            case 3: aij = -1; aji = -1; break;
            case 4: aij = -1; aji = -2; break;
            case 6: aij = -1; aji = -3; break;
            default: aij = -2; aji = -2; break;
            }
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
            rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
        }
    }
    return Gcm(std::move(rows));
}

Gcm gcm_a(int n) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
        if (i + 1 < n) {
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = -1;
            rows[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1;
        }
    }
    return Gcm(std::move(rows));
}

Gcm gcm_b2() { return Gcm({{2, -2}, {-1, 2}}); }
Gcm gcm_g2() { return Gcm({{2, -1}, {-3, 2}}); }
Gcm gcm_affine_a1() { return Gcm({{2, -2}, {-2, 2}}); }

Gcm gcm_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("cartan")) throw MalformedInput("GCM document needs a \"cartan\" array");
    std::vector<std::vector<int>> rows;
    try {
        rows = j.at("cartan").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("cartan: ") + e.what());
    }
    if (j.contains("rank") && j.at("rank").get<int>() != static_cast<int>(rows.size()))
        throw MalformedInput("rank does not match the cartan matrix");
    return Gcm(std::move(rows));
}

nlohmann::json gcm_to_json(const Gcm& a) {
    return nlohmann::json{{"rank", a.rank()}, {"cartan", a.rows()}};
}

} // namespace twinkit
