#include "twinkit/km_algebra.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "twinkit/errors.hpp"
#include "exact_linalg.hpp"

namespace twinkit {

std::string rational_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    QMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o(k, j) != 0) r(i, j) += a * o(k, j);
        }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    QMatrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

QMatrix QMatrix::scaled(const Rational& c) const {
    QMatrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

QVector QMatrix::apply(const QVector& v) const {
    QVector r(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[static_cast<std::size_t>(j)] != 0)
                r[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

QVector QMatrix::column(int j) const {
    QVector r(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) r[static_cast<std::size_t>(i)] = (*this)(i, j);
    return r;
}

bool QMatrix::integral() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return is_integral(q); });
}

bool QMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return q == 0; });
}

QMatrix QMatrix::mod(int p) const {
    QMatrix r = *this;
    for (auto& x : r.a_) {
        Integer num = numerator(x) % p, den = denominator(x) % p;
        if (num < 0) num += p;
        if (den == 0) throw InvalidField("denominator divisible by " + std::to_string(p));
        // den^(p-2) is the inverse mod p.
        Integer inv = 1;
        for (int k = 0; k < p - 2; ++k) inv = (inv * den) % p;
        x = Rational((num * inv) % p);
    }
    return r;
}

nlohmann::json QMatrix::to_json() const {
    auto rows = nlohmann::json::array();
    for (int i = 0; i < rows_; ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < cols_; ++j) {
            const auto& q = (*this)(i, j);
            if (is_integral(q) && abs(numerator(q)) < (Integer(1) << 52))
                row.push_back(static_cast<long long>(numerator(q)));
            else
                row.push_back(rational_str(q));
        }
        rows.push_back(row);
    }
    return rows;
}

using detail::Lattice;
using detail::invert;

namespace {

using Word = std::string;
using TVec = std::map<Word, Rational>;
using SVec = std::map<int, Rational>;

struct Escape {};

void axpy(TVec& y, const TVec& x, const Rational& c) {
    for (const auto& [w, v] : x) {
        auto& t = y[w];
        t += c * v;
        if (t == 0) y.erase(w);
    }
}

void axpy(SVec& y, const SVec& x, const Rational& c) {
    for (const auto& [k, v] : x) {
        auto& t = y[k];
        t += c * v;
        if (t == 0) y.erase(k);
    }
}

TVec ad_letter(char i, const TVec& v) {
    TVec r;
    for (const auto& [w, c] : v) {
        r[i + w] += c;
        r[w + i] -= c;
    }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

TVec commutator(const TVec& x, const TVec& y) {
    TVec r;
    for (const auto& [a, c] : x)
        for (const auto& [b, d] : y) {
            r[a + b] += c * d;
            r[b + a] -= c * d;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

/// Incremental Gaussian elimination on tensor vectors: relations first, then basis candidates.
class QuotientSpace {
public:
    void add_relation(const TVec& v) {
        auto [r, tag] = reduce(v);
        if (!r.empty()) push(std::move(r), QVector{});
    }
    bool add_candidate(const TVec& v) {
        auto [r, tag] = reduce(v);
        if (r.empty()) return false;
        for (auto& t : tag) t = -t;
        tag.resize(static_cast<std::size_t>(basis_ + 1));
        tag[static_cast<std::size_t>(basis_)] += 1;
        ++basis_;
        push(std::move(r), std::move(tag));
        return true;
    }
    /// Coordinates of v modulo the relations; v must lie in the span.
    QVector coords(const TVec& v) const {
        auto [r, tag] = reduce(v);
        if (!r.empty()) throw Error("vector outside the free Lie algebra span");
        tag.resize(static_cast<std::size_t>(basis_));
        return tag;
    }
    int dim() const { return basis_; }
    std::size_t relations() const {
        std::size_t k = 0;
        for (const auto& row : rows_)
            if (row.tag.empty()) ++k;
        return k;
    }
    const std::vector<TVec> relation_vectors() const {
        std::vector<TVec> out;
        for (const auto& row : rows_)
            if (row.tag.empty()) out.push_back(row.v);
        return out;
    }

private:
    struct Row {
        TVec v; // pivot = first key, coefficient 1
        QVector tag;
    };

    std::pair<TVec, QVector> reduce(TVec x) const {
        QVector acc(static_cast<std::size_t>(basis_));
        for (const auto& row : rows_) {
            auto it = x.find(row.v.begin()->first);
            if (it == x.end()) continue;
            const Rational c = it->second;
            axpy(x, row.v, -c);
            for (std::size_t k = 0; k < row.tag.size(); ++k) acc[k] += c * row.tag[k];
        }
        return {std::move(x), std::move(acc)};
    }
    void push(TVec r, QVector tag) {
        const Rational lead = r.begin()->second;
        for (auto& [w, c] : r) c /= lead;
        for (auto& t : tag) t /= lead;
        rows_.push_back({std::move(r), std::move(tag)});
    }

    std::vector<Row> rows_;
    int basis_ = 0;
};

struct Degree {
    QuotientSpace space;
    std::vector<TVec> reps;
    std::vector<std::pair<int, int>> recipe; // (i, local index in degree - alpha_i)
};

} // namespace

struct KmAlgebra::Impl {
    Gcm a;
    int H = 0;
    int n = 0;
    AlgebraLimits lim;

    struct Comp {
        RootVector degree;
        int height = 0;
        int dim = 0;
        int offset = 0;
        bool window = true;
    };
    std::vector<Comp> comps;
    std::map<RootVector, int> comp_index;
    std::vector<int> comp_of_index;
    int total = 0;
    /// The halo layer is zero, so every bracket beyond it vanishes.
    bool finite = false;
    std::map<RootVector, Degree> pos;
    mutable std::map<std::pair<int, int>, SVec> memo;

    // Public (integral) side.
    std::vector<KmAlgebra::Component> pub;
    std::vector<int> pub_to_comp; // public component -> internal component
    std::vector<QMatrix> basis;   // rows: integral basis vectors in internal local coordinates
    std::vector<QMatrix> basis_inv;
    int pub_dim = 0;

    RootVector simple(int i) const {
        RootVector v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(i)] = 1;
        return v;
    }
    static RootVector negated(RootVector v) {
        for (auto& x : v) x = -x;
        return v;
    }
    int kind(int k) const { return comps[static_cast<std::size_t>(comp_of_index[static_cast<std::size_t>(k)])].height; }
    const Comp& comp_at(int k) const { return comps[static_cast<std::size_t>(comp_of_index[static_cast<std::size_t>(k)])]; }
    int local(int k) const { return k - comp_at(k).offset; }
    int mirror(int k) const {
        const auto& c = comp_at(k);
        return comps[static_cast<std::size_t>(comp_index.at(negated(c.degree)))].offset + (k - c.offset);
    }
    int e_index(int i) const { return comps[static_cast<std::size_t>(comp_index.at(simple(i)))].offset; }
    int h_index(int i) const { return comps[static_cast<std::size_t>(comp_index.at(RootVector(static_cast<std::size_t>(n), 0)))].offset + i; }

    void build() {
        // Positive part, degree by degree up to the halo.
        for (int i = 0; i < n; ++i) {
            Degree d;
            d.space.add_candidate({{Word(1, static_cast<char>(i)), Rational(1)}});
            d.reps.push_back({{Word(1, static_cast<char>(i)), Rational(1)}});
            d.recipe.push_back({-1, -1});
            pos.emplace(simple(i), std::move(d));
        }
        std::vector<RootVector> layer;
        for (int i = 0; i < n; ++i) layer.push_back(simple(i));
        for (int ht = 2; ht <= H + 1; ++ht) {
            std::set<RootVector> next;
            for (const auto& d : layer)
                for (int i = 0; i < n; ++i) {
                    auto g = d;
                    g[static_cast<std::size_t>(i)] += 1;
                    next.insert(g);
                }
            layer.clear();
            for (const auto& g : next) {
                Degree d;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        if (i == j) continue;
                        const int e = 1 - a(i, j);
                        RootVector sd = simple(j);
                        sd[static_cast<std::size_t>(i)] += e;
                        if (sd != g) continue;
                        TVec s{{Word(1, static_cast<char>(j)), Rational(1)}};
                        for (int k = 0; k < e; ++k) s = ad_letter(static_cast<char>(i), s);
                        d.space.add_relation(s);
                    }
                for (int i = 0; i < n; ++i) {
                    auto lower = g;
                    if (--lower[static_cast<std::size_t>(i)] < 0) continue;
                    auto it = pos.find(lower);
                    if (it == pos.end()) continue;
                    for (const auto& rel : it->second.space.relation_vectors())
                        d.space.add_relation(ad_letter(static_cast<char>(i), rel));
                }
                for (int i = 0; i < n; ++i) {
                    auto lower = g;
                    if (--lower[static_cast<std::size_t>(i)] < 0) continue;
                    auto it = pos.find(lower);
                    if (it == pos.end()) continue;
                    for (std::size_t k = 0; k < it->second.reps.size(); ++k) {
                        TVec c = ad_letter(static_cast<char>(i), it->second.reps[k]);
                        if (static_cast<long long>(c.size()) > lim.max_words)
                            throw WindowTooLarge("graded piece exceeds " + std::to_string(lim.max_words) + " tensor coordinates");
                        if (d.space.add_candidate(c)) {
                            d.reps.push_back(std::move(c));
                            d.recipe.push_back({i, static_cast<int>(k)});
                        }
                    }
                }
                if (d.space.dim() > 0 || d.space.relations() > 0) {
                    layer.push_back(g);
                    pos.emplace(g, std::move(d));
                }
            }
        }

        // Components: negatives, Cartan, positives; sorted by (height, degree).
        std::vector<Comp> cs;
        for (const auto& [g, d] : pos) {
            if (d.space.dim() == 0) continue;
            const int ht = height(g);
            cs.push_back({negated(g), -ht, d.space.dim(), 0, ht <= H});
            cs.push_back({g, ht, d.space.dim(), 0, ht <= H});
        }
        cs.push_back({RootVector(static_cast<std::size_t>(n), 0), 0, n, 0, true});
        std::sort(cs.begin(), cs.end(), [](const Comp& x, const Comp& y) {
            return std::tie(x.height, x.degree) < std::tie(y.height, y.degree);
        });
        for (auto& c : cs) {
            c.offset = total;
            total += c.dim;
            comp_index[c.degree] = static_cast<int>(comps.size());
            for (int k = 0; k < c.dim; ++k) comp_of_index.push_back(static_cast<int>(comps.size()));
            comps.push_back(c);
        }
        finite = std::none_of(comps.begin(), comps.end(), [&](const Comp& c) { return c.height == H + 1; });
        if (total > lim.max_dimension)
            throw WindowTooLarge("dimension " + std::to_string(total) + " exceeds " + std::to_string(lim.max_dimension));
    }

    SVec coords_positive(const RootVector& g, const TVec& v) const {
        if (v.empty()) return {};
        auto it = pos.find(g);
        if (it == pos.end()) throw Error("nonzero tensor in an empty degree");
        const QVector c = it->second.space.coords(v);
        SVec out;
        if (c.empty()) return out;
        const int off = comps[static_cast<std::size_t>(comp_index.at(g))].offset;
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0) out[off + static_cast<int>(k)] = c[k];
        return out;
    }

    const TVec& rep(int k) const {
        const auto& c = comp_at(k);
        return pos.at(c.degree).reps[static_cast<std::size_t>(k - c.offset)];
    }
    std::pair<int, int> recipe(int k) const {
        const auto& c = comp_at(k);
        const auto [i, lk] = pos.at(c.degree).recipe[static_cast<std::size_t>(k - c.offset)];
        if (i < 0) return {-1, -1};
        auto lower = c.degree;
        lower[static_cast<std::size_t>(i)] -= 1;
        return {i, comps[static_cast<std::size_t>(comp_index.at(lower))].offset + lk};
    }

    SVec omega(const SVec& x) const {
        SVec out;
        for (const auto& [k, c] : x) {
            if (kind(k) == 0)
                out[k] = -c;
            else
                out[mirror(k)] = c;
        }
        return out;
    }

    SVec bracket(const SVec& x, const SVec& y) const {
        SVec out;
        for (const auto& [k, c] : x)
            for (const auto& [l, d] : y) axpy(out, br(k, l), c * d);
        return out;
    }

    SVec unit(int k) const { return {{k, Rational(1)}}; }

    const SVec& br(int k, int l) const {
        auto it = memo.find({k, l});
        if (it != memo.end()) return it->second;
        SVec r = compute(k, l);
        return memo.emplace(std::pair{k, l}, std::move(r)).first->second;
    }

    SVec compute(int k, int l) const {
        const int hk = kind(k), hl = kind(l);
        if (hk == 0 && hl == 0) return {};
        if (hk == 0) {
            const int i = local(k);
            const auto& g = comp_at(l).degree;
            Rational c = 0;
            for (int j = 0; j < n; ++j) c += Rational(g[static_cast<std::size_t>(j)] * a(i, j));
            if (c == 0) return {};
            return {{l, c}};
        }
        if (hl == 0) return negate(br(l, k));
        if (hk > 0 && hl > 0) {
            auto g = comp_at(k).degree;
            const auto& g2 = comp_at(l).degree;
            for (std::size_t m = 0; m < g.size(); ++m) g[m] += g2[m];
            const TVec t = commutator(rep(k), rep(l));
            if (height(g) > H + 1) {
                if (t.empty() || finite) return {};
                throw Escape{};
            }
            return coords_positive(g, t);
        }
        if (hk < 0 && hl < 0) return omega(br(mirror(k), mirror(l)));
        if (hk > 0) return cross(k, l);
        return negate(cross(l, k));
    }

    static SVec negate(SVec v) {
        for (auto& [k, c] : v) c = -c;
        return v;
    }

    /// [x, Y] with x positive, Y negative.
    SVec cross(int x, int y_neg) const {
        const auto [i, xp] = recipe(x);
        if (i < 0) return e_neg(local_simple(x), mirror(y_neg));
        // [[e_i, x'], Y] = [e_i, [x', Y]] - [x', [e_i, Y]]
        SVec out = bracket(unit(e_index(i)), br(xp, y_neg));
        axpy(out, bracket(unit(xp), br(e_index(i), y_neg)), Rational(-1));
        return out;
    }

    int local_simple(int x) const {
        const auto& g = comp_at(x).degree;
        for (int i = 0; i < n; ++i)
            if (g[static_cast<std::size_t>(i)] == 1) return i;
        return -1;
    }

    /// [e_i, omega(y)] with y positive.
    SVec e_neg(int i, int y) const {
        const auto [j, yp] = recipe(y);
        if (j < 0) {
            const int jj = local_simple(y);
            if (jj != i) return {};
            return {{h_index(i), Rational(-1)}};
        }
        // omega(y) = [omega(e_j), omega(y')]
        SVec out;
        if (i == j) axpy(out, br(h_index(i), mirror(yp)), Rational(-1));
        axpy(out, bracket(unit(mirror(e_index(j))), br(e_index(i), mirror(yp))), Rational(1));
        return out;
    }

    // --- Integral basis -----------------------------------------------------

    SVec truncate(SVec v) const {
        std::erase_if(v, [&](const auto& kv) { return !comp_at(kv.first).window; });
        return v;
    }

    void integral_basis() {
        std::vector<Lattice> lat;
        for (const auto& c : comps) lat.emplace_back(c.dim);
        std::deque<std::pair<int, QVector>> work;
        auto add = [&](const SVec& v) {
            if (v.empty()) return;
            const int c = comp_of_index[static_cast<std::size_t>(v.begin()->first)];
            QVector q(static_cast<std::size_t>(comps[static_cast<std::size_t>(c)].dim));
            for (const auto& [k, x] : v) q[static_cast<std::size_t>(local(k))] = x;
            if (lat[static_cast<std::size_t>(c)].add(q)) work.emplace_back(c, q);
        };
        for (int i = 0; i < n; ++i) {
            add(unit(h_index(i)));
            add(unit(e_index(i)));
            add(unit(mirror(e_index(i))));
        }
        std::size_t steps = 0;
        while (!work.empty()) {
            auto [c, q] = work.front();
            work.pop_front();
            if (++steps > 100000) throw WindowTooLarge("integral lattice closure did not stabilise");
            SVec v;
            for (std::size_t k = 0; k < q.size(); ++k)
                if (q[k] != 0) v[comps[static_cast<std::size_t>(c)].offset + static_cast<int>(k)] = q[k];
            for (int i = 0; i < n; ++i)
                for (int gen : {e_index(i), mirror(e_index(i))}) {
                    SVec w = v;
                    for (int k = 1; !w.empty(); ++k) {
                        w = truncate(bracket(unit(gen), w));
                        for (auto& [idx, x] : w) x /= k;
                        add(w);
                    }
                }
        }
        for (std::size_t c = 0; c < comps.size(); ++c) {
            if (!comps[c].window) continue;
            // Negative pieces use -omega of the positive basis, so f_i is a basis vector.
            const std::size_t src = comps[c].height < 0 ? static_cast<std::size_t>(comp_index.at(negated(comps[c].degree))) : c;
            const Rational sign = comps[c].height < 0 ? -1 : 1;
            const auto rows = lat[src].basis();
            if (static_cast<int>(rows.size()) != comps[c].dim) throw Error("integral lattice is not of full rank");
            QMatrix b(comps[c].dim, comps[c].dim);
            for (int r = 0; r < comps[c].dim; ++r)
                for (int k = 0; k < comps[c].dim; ++k) b(r, k) = sign * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
            KmAlgebra::Component pc{comps[c].degree, comps[c].height, comps[c].dim, pub_dim};
            pub_dim += comps[c].dim;
            pub.push_back(pc);
            pub_to_comp.push_back(static_cast<int>(c));
            basis.push_back(b);
            basis_inv.push_back(invert(b));
        }
    }

    SVec to_internal(const QVector& x) const {
        SVec out;
        for (std::size_t pc = 0; pc < pub.size(); ++pc) {
            const auto& c = comps[static_cast<std::size_t>(pub_to_comp[pc])];
            const auto& b = basis[pc];
            for (int r = 0; r < c.dim; ++r) {
                const Rational& y = x[static_cast<std::size_t>(pub[pc].offset + r)];
                if (y == 0) continue;
                for (int k = 0; k < c.dim; ++k)
                    if (b(r, k) != 0) {
                        auto& t = out[c.offset + k];
                        t += y * b(r, k);
                        if (t == 0) out.erase(c.offset + k);
                    }
            }
        }
        return out;
    }

    QVector from_internal(const SVec& v) const {
        QVector out(static_cast<std::size_t>(pub_dim));
        std::map<int, std::vector<std::pair<int, Rational>>> per;
        for (const auto& [k, x] : v) {
            const auto& c = comp_at(k);
            if (!c.window) throw WindowExceeded("result has a component at height " + std::to_string(c.height));
            per[comp_of_index[static_cast<std::size_t>(k)]].emplace_back(k - c.offset, x);
        }
        for (const auto& [ci, entries] : per) {
            const auto pc = static_cast<std::size_t>(
                std::find(pub_to_comp.begin(), pub_to_comp.end(), ci) - pub_to_comp.begin());
            const auto& inv = basis_inv[pc];
            for (const auto& [lk, x] : entries)
                for (int r = 0; r < pub[pc].dim; ++r)
                    if (inv(lk, r) != 0) out[static_cast<std::size_t>(pub[pc].offset + r)] += x * inv(lk, r);
        }
        return out;
    }

    SVec safe_bracket(const SVec& x, const SVec& y) const {
        try {
            return bracket(x, y);
        } catch (const Escape&) {
            throw WindowExceeded("bracket leaves the computed range |ht| <= " + std::to_string(H + 1));
        }
    }
};

KmAlgebra::KmAlgebra(const Gcm& a, int window, const AlgebraLimits& limits) : impl_(std::make_unique<Impl>()) {
    if (window < 1) throw WindowTooLarge("window must be at least 1");
    if (window > limits.max_height)
        throw WindowTooLarge("window " + std::to_string(window) + " exceeds the cap " + std::to_string(limits.max_height));
    impl_->a = a;
    impl_->H = window;
    impl_->n = a.rank();
    impl_->lim = limits;
    impl_->build();
    impl_->integral_basis();
}

KmAlgebra::~KmAlgebra() = default;
KmAlgebra::KmAlgebra(KmAlgebra&&) noexcept = default;

const Gcm& KmAlgebra::cartan() const { return impl_->a; }
int KmAlgebra::window() const { return impl_->H; }
int KmAlgebra::dimension() const { return impl_->pub_dim; }
int KmAlgebra::rank() const { return impl_->n; }
const std::vector<KmAlgebra::Component>& KmAlgebra::components() const { return impl_->pub; }

std::optional<int> KmAlgebra::component_of(const RootVector& degree) const {
    for (std::size_t k = 0; k < impl_->pub.size(); ++k)
        if (impl_->pub[k].degree == degree) return static_cast<int>(k);
    return std::nullopt;
}

int KmAlgebra::component_dim(const RootVector& degree) const {
    const auto c = component_of(degree);
    return c ? impl_->pub[static_cast<std::size_t>(*c)].dim : 0;
}

std::vector<int> KmAlgebra::positive_dims() const {
    std::vector<int> out(static_cast<std::size_t>(impl_->H), 0);
    for (const auto& c : impl_->pub)
        if (c.height > 0) out[static_cast<std::size_t>(c.height - 1)] += c.dim;
    return out;
}

RootVector KmAlgebra::degree_of(int k) const {
    for (const auto& c : impl_->pub)
        if (k >= c.offset && k < c.offset + c.dim) return c.degree;
    throw IndexOutOfRange("basis index " + std::to_string(k));
}

std::string KmAlgebra::basis_label(int k) const {
    for (const auto& c : impl_->pub)
        if (k >= c.offset && k < c.offset + c.dim) {
            if (c.height == 0) return "h" + std::to_string(k - c.offset + 1);
            std::string s = c.height > 0 ? "e(" : "f(";
            for (std::size_t m = 0; m < c.degree.size(); ++m) s += (m ? "," : "") + std::to_string(std::abs(c.degree[m]));
            s += ")";
            if (c.dim > 1) s += "#" + std::to_string(k - c.offset + 1);
            return s;
        }
    throw IndexOutOfRange("basis index " + std::to_string(k));
}

QVector KmAlgebra::zero() const { return QVector(static_cast<std::size_t>(impl_->pub_dim)); }
QVector KmAlgebra::e(int i) const { return impl_->from_internal(impl_->unit(impl_->e_index(i))); }
QVector KmAlgebra::f(int i) const { return impl_->from_internal({{impl_->mirror(impl_->e_index(i)), Rational(-1)}}); }
QVector KmAlgebra::h(int i) const { return impl_->from_internal(impl_->unit(impl_->h_index(i))); }

QVector KmAlgebra::basis_vector(int k) const {
    if (k < 0 || k >= impl_->pub_dim) throw IndexOutOfRange("basis index " + std::to_string(k));
    QVector v = zero();
    v[static_cast<std::size_t>(k)] = 1;
    return v;
}

QVector KmAlgebra::bracket(const QVector& x, const QVector& y) const {
    return impl_->from_internal(impl_->safe_bracket(impl_->to_internal(x), impl_->to_internal(y)));
}

QVector KmAlgebra::chevalley(const QVector& x) const { return impl_->from_internal(impl_->omega(impl_->to_internal(x))); }

QMatrix KmAlgebra::ad_matrix(const QVector& x) const {
    const int d = dimension();
    QMatrix m(d, d);
    const SVec xi = impl_->to_internal(x);
    for (int j = 0; j < d; ++j) {
        const QVector col = impl_->from_internal(impl_->safe_bracket(xi, impl_->to_internal(basis_vector(j))));
        for (int i = 0; i < d; ++i) m(i, j) = col[static_cast<std::size_t>(i)];
    }
    return m;
}

QMatrix KmAlgebra::divided_power(int i, bool positive, int k) const {
    if (i < 0 || i >= rank()) throw IndexOutOfRange("generator " + std::to_string(i));
    const int d = dimension();
    const int gen = positive ? impl_->e_index(i) : impl_->mirror(impl_->e_index(i));
    // omega(e_i) = -f_i, so the negative side picks up (-1)^k.
    const Rational sign = (!positive && k % 2) ? -1 : 1;
    Rational fact = 1;
    for (int m = 2; m <= k; ++m) fact *= m;
    QMatrix out(d, d);
    for (int j = 0; j < d; ++j) {
        SVec w = impl_->to_internal(basis_vector(j));
        for (int m = 0; m < k && !w.empty(); ++m) w = impl_->truncate(impl_->safe_bracket(impl_->unit(gen), w));
        const QVector col = impl_->from_internal(w);
        for (int r = 0; r < d; ++r) out(r, j) = sign * col[static_cast<std::size_t>(r)] / fact;
    }
    return out;
}

QMatrix KmAlgebra::divided_power(const QVector& x, int k) const {
    const QMatrix a = ad_matrix(x);
    QMatrix m = QMatrix::identity(dimension());
    Rational fact = 1;
    for (int j = 1; j <= k; ++j) {
        m = a * m;
        fact *= j;
    }
    return m.scaled(Rational(1) / fact);
}

std::optional<int> KmAlgebra::nilpotency_degree(int i, bool positive, const QVector& x) const {
    const int gen = positive ? impl_->e_index(i) : impl_->mirror(impl_->e_index(i));
    SVec w = impl_->to_internal(x);
    int k = 0;
    try {
        while (!w.empty()) {
            w = impl_->bracket(impl_->unit(gen), w);
            ++k;
        }
    } catch (const Escape&) {
        return std::nullopt;
    }
    return k;
}

bool KmAlgebra::window_closed() const {
    for (int j = 0; j < dimension(); ++j) {
        const SVec b = impl_->to_internal(basis_vector(j));
        for (int i = 0; i < rank(); ++i)
            for (int gen : {impl_->e_index(i), impl_->mirror(impl_->e_index(i))}) {
                const SVec w = impl_->bracket(impl_->unit(gen), b);
                for (const auto& [k, c] : w)
                    if (!impl_->comp_at(k).window) return false;
            }
    }
    return true;
}

nlohmann::json KmAlgebra::to_json() const {
    auto comps = nlohmann::json::array();
    for (const auto& c : components()) comps.push_back({{"degree", c.degree}, {"height", c.height}, {"dim", c.dim}});
    auto labels = nlohmann::json::array();
    for (int k = 0; k < dimension(); ++k) labels.push_back(basis_label(k));
    auto consts = nlohmann::json::array();
    for (int a = 0; a < dimension(); ++a)
        for (int b = a + 1; b < dimension(); ++b) {
            QVector r;
            try {
                r = bracket(basis_vector(a), basis_vector(b));
            } catch (const WindowExceeded&) {
                continue;
            }
            for (int c = 0; c < dimension(); ++c)
                if (r[static_cast<std::size_t>(c)] != 0) consts.push_back({a, b, c, rational_str(r[static_cast<std::size_t>(c)])});
        }
    return {{"cartan", gcm_to_json(cartan())},
            {"window", window()},
            {"dimension", dimension()},
            {"positive_dims", positive_dims()},
            {"components", comps},
            {"basis", labels},
            {"structure_constants", consts}};
}

std::vector<CheckResult> algebra_checks(const KmAlgebra& alg) {
    const int n = alg.rank(), d = alg.dimension();
    const Gcm& a = alg.cartan();
    std::vector<CheckResult> out;

    CheckResult rel("generator_relations");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            rel.instances += 4;
            QVector ej = alg.e(j), fj = alg.f(j);
            QVector want_e = ej, want_f = fj;
            for (auto& x : want_e) x *= a(i, j);
            for (auto& x : want_f) x *= -a(i, j);
            if (alg.bracket(alg.h(i), ej) != want_e) rel.fail("[h_i, e_j] != a_ij e_j", {{"i", i + 1}, {"j", j + 1}});
            if (alg.bracket(alg.h(i), fj) != want_f) rel.fail("[h_i, f_j] != -a_ij f_j", {{"i", i + 1}, {"j", j + 1}});
            const QVector want_h = i == j ? alg.h(i) : alg.zero();
            if (alg.bracket(alg.e(i), fj) != want_h) rel.fail("[e_i, f_j] != delta_ij h_i", {{"i", i + 1}, {"j", j + 1}});
            if (alg.bracket(alg.h(i), alg.h(j)) != alg.zero()) rel.fail("[h_i, h_j] != 0", {{"i", i + 1}, {"j", j + 1}});
        }
    out.push_back(rel);

    CheckResult chev("chevalley_involution");
    for (int i = 0; i < n; ++i) {
        ++chev.instances;
        QVector mf = alg.f(i);
        for (auto& x : mf) x = -x;
        if (alg.chevalley(alg.e(i)) != mf) chev.fail("omega(e_i) != -f_i", {{"i", i + 1}});
    }
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            QVector lhs;
            try {
                lhs = alg.chevalley(alg.bracket(alg.basis_vector(x), alg.basis_vector(y)));
            } catch (const WindowExceeded&) {
                continue;
            }
            ++chev.instances;
            if (lhs != alg.bracket(alg.chevalley(alg.basis_vector(x)), alg.chevalley(alg.basis_vector(y))))
                chev.fail("omega is not a bracket automorphism", {{"x", alg.basis_label(x)}, {"y", alg.basis_label(y)}});
        }
    out.push_back(chev);

    CheckResult real("real_root_dimensions");
    for (const auto& r : positive_real_roots(a, alg.window()).roots) {
        real.instances += 2;
        RootVector neg = r.coords;
        for (auto& c : neg) c = -c;
        if (alg.component_dim(r.coords) != 1 || alg.component_dim(neg) != 1)
            real.fail("real root space is not one-dimensional", {{"root", r.coords}, {"dim", alg.component_dim(r.coords)}});
    }
    out.push_back(real);

    CheckResult jac("jacobi");
    long long skipped = 0;
    for (int x = 0; x < d; ++x)
        for (int y = x; y < d; ++y)
            for (int z = y; z < d; ++z) {
                const QVector bx = alg.basis_vector(x), by = alg.basis_vector(y), bz = alg.basis_vector(z);
                try {
                    QVector s = alg.bracket(bx, alg.bracket(by, bz));
                    const QVector t = alg.bracket(by, alg.bracket(bz, bx));
                    const QVector u = alg.bracket(bz, alg.bracket(bx, by));
                    for (int k = 0; k < d; ++k) s[static_cast<std::size_t>(k)] += t[static_cast<std::size_t>(k)] + u[static_cast<std::size_t>(k)];
                    ++jac.instances;
                    if (s != alg.zero())
                        jac.fail("Jacobi identity fails", {{"x", alg.basis_label(x)}, {"y", alg.basis_label(y)}, {"z", alg.basis_label(z)}});
                } catch (const WindowExceeded&) {
                    ++skipped;
                }
            }
    if (skipped) jac.detail = std::to_string(skipped) + " triples leave the window";
    out.push_back(jac);

    CheckResult integ("divided_power_integrality");
    for (int i = 0; i < n; ++i)
        for (bool positive : {true, false})
            for (int k = 1;; ++k) {
                const QMatrix m = alg.divided_power(i, positive, k);
                if (m.is_zero()) break;
                ++integ.instances;
                if (!m.integral())
                    integ.fail("divided power has a non-integral entry",
                               {{"i", i + 1}, {"sign", positive ? "+" : "-"}, {"k", k}});
            }
    out.push_back(integ);

    CheckResult nil("local_nilpotency");
    long long undetermined = 0;
    for (int x = 0; x < d; ++x)
        for (int i = 0; i < n; ++i)
            for (bool positive : {true, false}) {
                const auto k = alg.nilpotency_degree(i, positive, alg.basis_vector(x));
                if (!k) {
                    ++undetermined;
                    continue;
                }
                ++nil.instances;
                if (*k > 2 * alg.window() + 2)
                    nil.fail("nilpotency degree exceeds the window bound", {{"x", alg.basis_label(x)}, {"i", i + 1}});
            }
    if (undetermined) nil.detail = std::to_string(undetermined) + " orbits leave the halo before vanishing";
    out.push_back(nil);
    return out;
}

} // namespace twinkit
