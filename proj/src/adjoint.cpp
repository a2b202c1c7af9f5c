#include <numeric>
#include <deque>
#include <set>

#include "exact_linalg.hpp"
#include "twinkit/errors.hpp"
#include "twinkit/field.hpp"
#include "twinkit/km_algebra.hpp"
#include "twinkit/rgd.hpp"

namespace twinkit {

namespace {

int pivot_of(const QVector& row) {
    for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k] != 0) return static_cast<int>(k);
    return -1;
}

QVector scaled(QVector v, const Rational& c) {
    for (auto& x : v) x *= c;
    return v;
}

void add_to(QVector& y, const QVector& x) {
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += x[k];
}

bool is_zero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

} // namespace

QVector Carrier::span_coordinates(const QVector& v) const {
    QVector rest = v;
    QVector c(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const int p = pivot_of(basis[r]);
        const Rational q = rest[static_cast<std::size_t>(p)] / basis[r][static_cast<std::size_t>(p)];
        if (q == 0) continue;
        c[r] = q;
        for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= q * basis[r][k];
    }
    if (!is_zero(rest)) throw NotInvariant("vector leaves the carrier");
    return c;
}

QVector Carrier::coordinates(const QVector& v) const {
    const QVector c = span_coordinates(v);
    for (const auto& q : c)
        if (!is_integral(q)) throw NotInvariant("vector lies in the span but not in the carrier lattice");
    return c;
}

bool Carrier::contains(const QVector& v) const {
    try {
        coordinates(v);
        return true;
    } catch (const NotInvariant&) {
        return false;
    }
}

nlohmann::json Carrier::to_json() const {
    auto rows = nlohmann::json::array();
    for (const auto& b : basis) {
        auto row = nlohmann::json::array();
        for (const auto& q : b) row.push_back(rational_str(q));
        rows.push_back(row);
    }
    auto cert = nlohmann::json::array();
    for (int i : certified) cert.push_back(i + 1);
    return {{"dimension", dimension()}, {"basis", rows}, {"certified", cert}};
}

AdOperator AdOperator::compose(const AdOperator& o) const {
    if (modulus != o.modulus) throw Error("operators over different fields");
    AdOperator r{modulus, matrix * o.matrix, provenance + " * " + o.provenance};
    if (modulus) r.matrix = r.matrix.mod(*modulus);
    return r;
}

nlohmann::json AdOperator::to_json() const {
    nlohmann::json j{{"provenance", provenance}, {"matrix", matrix.to_json()}};
    if (modulus) j["modulus"] = *modulus;
    return j;
}

Carrier window_carrier(const KmAlgebra& alg) {
    Carrier c;
    for (int k = 0; k < alg.dimension(); ++k) c.basis.push_back(alg.basis_vector(k));
    if (alg.window_closed())
        for (int i = 0; i < alg.rank(); ++i) c.certified.push_back(i);
    return c;
}

Carrier invariant_subspace(const KmAlgebra& alg, const QVector& v, const std::vector<int>& alphas) {
    for (int i : alphas)
        if (i < 0 || i >= alg.rank()) throw IndexOutOfRange("simple root " + std::to_string(i));
    detail::Lattice lat(alg.dimension());
    std::deque<QVector> work;
    auto add = [&](const QVector& w) {
        if (!is_zero(w) && lat.add(w)) work.push_back(w);
    };
    // Homogeneous parts, so that the torus preserves the span.
    for (const auto& c : alg.components()) {
        QVector part = alg.zero();
        for (int k = c.offset; k < c.offset + c.dim; ++k) part[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(k)];
        add(part);
    }
    std::set<int> gens(alphas.begin(), alphas.end());
    while (!work.empty()) {
        const QVector x = work.front();
        work.pop_front();
        for (int i : gens)
            for (bool positive : {true, false}) {
                const QVector g = positive ? alg.e(i) : alg.f(i);
                QVector w = x;
                for (int k = 1;; ++k) {
                    w = scaled(alg.bracket(g, w), Rational(1, k));
                    if (is_zero(w)) break;
                    add(w);
                }
            }
    }
    Carrier c;
    c.basis = lat.basis();
    c.certified.assign(gens.begin(), gens.end());
    return c;
}

AdOperator ad_unipotent(const KmAlgebra& alg, int i, bool positive, const Rational& r, const Carrier& carrier,
                        std::optional<int> modulus) {
    if (std::find(carrier.certified.begin(), carrier.certified.end(), i) == carrier.certified.end())
        throw NotInvariant("carrier is not certified for generator " + std::to_string(i + 1));
    if (modulus && !is_integral(r)) throw InvalidField("parameter must be an integer representative");
    const int m = carrier.dimension();
    const QVector g = positive ? alg.e(i) : alg.f(i);
    QMatrix mat(m, m);
    for (int j = 0; j < m; ++j) {
        QVector acc = carrier.basis[static_cast<std::size_t>(j)];
        QVector w = acc;
        Rational rk = 1;
        for (int k = 1;; ++k) {
            w = scaled(alg.bracket(g, w), Rational(1, k));
            if (is_zero(w)) break;
            rk *= r;
            add_to(acc, scaled(w, rk));
        }
        const QVector c = modulus ? carrier.coordinates(acc) : carrier.span_coordinates(acc);
        for (int k = 0; k < m; ++k) mat(k, j) = c[static_cast<std::size_t>(k)];
    }
    AdOperator op{modulus, mat, std::string("x_") + (positive ? "+" : "-") + "a" + std::to_string(i + 1) + "(" + rational_str(r) + ")"};
    if (modulus) op.matrix = op.matrix.mod(*modulus);
    return op;
}

Rational character(const KmAlgebra& alg, const TorusElement& t, const RootVector& degree) {
    const int n = alg.rank();
    if (static_cast<int>(t.values.size()) != n) throw IndexOutOfRange("torus element needs one value per simple root");
    Rational out = 1;
    for (int i = 0; i < n; ++i) {
        long long e = 0;
        if (t.flavour == TorusFlavour::SimplyConnected)
            for (int j = 0; j < n; ++j) e += static_cast<long long>(alg.cartan()(i, j)) * degree[static_cast<std::size_t>(j)];
        else
            e = degree[static_cast<std::size_t>(i)];
        const Rational u = t.values[static_cast<std::size_t>(i)];
        if (u == 0) throw InvalidField("torus values must be units");
        for (long long k = 0; k < std::abs(e); ++k) out *= e > 0 ? u : Rational(1) / u;
    }
    return out;
}

AdOperator torus_ad(const KmAlgebra& alg, const TorusElement& t, const Carrier& carrier, std::optional<int> modulus) {
    const int m = carrier.dimension();
    QMatrix mat(m, m);
    for (int j = 0; j < m; ++j) {
        QVector img = alg.zero();
        for (const auto& c : alg.components()) {
            const Rational chi = character(alg, t, c.degree);
            for (int k = c.offset; k < c.offset + c.dim; ++k)
                img[static_cast<std::size_t>(k)] = chi * carrier.basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        }
        const QVector c = modulus ? carrier.coordinates(img) : carrier.span_coordinates(img);
        for (int k = 0; k < m; ++k) mat(k, j) = c[static_cast<std::size_t>(k)];
    }
    std::string prov = "t(";
    for (std::size_t k = 0; k < t.values.size(); ++k) prov += (k ? "," : "") + rational_str(t.values[k]);
    AdOperator op{modulus, mat, prov + ")"};
    if (modulus) op.matrix = op.matrix.mod(*modulus);
    return op;
}

std::vector<CheckResult> carrier_checks(const KmAlgebra& alg, const Carrier& carrier) {
    const std::vector<Rational> params = {Rational(-2), Rational(-1), Rational(1, 2), Rational(1), Rational(3)};
    const int m = carrier.dimension();
    CheckResult law("one_parameter_law");
    CheckResult conj("torus_conjugation");
    if (carrier.certified.empty()) {
        law.skip("carrier is not certified for any generator");
        conj.skip("carrier is not certified for any generator");
        return {law, conj};
    }
    std::vector<TorusElement> tori;
    for (auto flavour : {TorusFlavour::SimplyConnected, TorusFlavour::Adjoint}) {
        TorusElement a{flavour, {}}, b{flavour, {}};
        for (int i = 0; i < alg.rank(); ++i) {
            a.values.push_back(Rational(i + 2));
            b.values.push_back(i % 2 ? Rational(-1, 3) : Rational(-1));
        }
        tori.push_back(a);
        tori.push_back(b);
    }
    for (int i : carrier.certified)
        for (bool positive : {true, false}) {
            RootVector alpha(static_cast<std::size_t>(alg.rank()), 0);
            alpha[static_cast<std::size_t>(i)] = positive ? 1 : -1;
            for (const auto& r : params) {
                const auto xr = ad_unipotent(alg, i, positive, r, carrier);
                for (const auto& s : params) {
                    ++law.instances;
                    if (!xr.compose(ad_unipotent(alg, i, positive, s, carrier)).same_action(ad_unipotent(alg, i, positive, r + s, carrier)))
                        law.fail("x(r) x(s) != x(r + s)",
                                 {{"i", i + 1}, {"sign", positive ? "+" : "-"}, {"r", rational_str(r)}, {"s", rational_str(s)}});
                }
                ++law.instances;
                if (!xr.compose(ad_unipotent(alg, i, positive, -r, carrier)).same_action({std::nullopt, QMatrix::identity(m), ""}))
                    law.fail("x(r) x(-r) != 1", {{"i", i + 1}, {"sign", positive ? "+" : "-"}, {"r", rational_str(r)}});
                if (!carrier.graded) continue;
                for (const auto& t : tori) {
                    TorusElement inv = t;
                    for (auto& u : inv.values) u = Rational(1) / u;
                    const auto lhs = torus_ad(alg, t, carrier).compose(xr).compose(torus_ad(alg, inv, carrier));
                    const auto rhs = ad_unipotent(alg, i, positive, character(alg, t, alpha) * r, carrier);
                    ++conj.instances;
                    if (!lhs.same_action(rhs))
                        conj.fail("t x(r) t^-1 != x(alpha(t) r)", {{"i", i + 1}, {"sign", positive ? "+" : "-"}, {"r", rational_str(r)}});
                }
            }
        }
    if (!carrier.graded) conj.skip("carrier is not graded");
    return {law, conj};
}

namespace {

FpMatrix to_fp(const QMatrix& m, int p) {
    const QMatrix r = m.mod(p);
    std::vector<std::vector<long long>> rows(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(static_cast<long long>(numerator(r(i, j))));
    return FpMatrix(p, rows);
}

std::uint64_t upow(std::uint64_t q, int e) {
    std::uint64_t r = 1;
    for (int k = 0; k < e; ++k) r *= q;
    return r;
}

} // namespace

std::vector<CheckResult> rank2_rgd_check(const Gcm& a, int p) {
    if (a.rank() != 2) throw NotRankTwoFinite("rank is " + std::to_string(a.rank()));
    const int prod = a(0, 1) * a(1, 0);
    if (prod < 1 || prod > 3) throw NotRankTwoFinite("a12 a21 = " + std::to_string(prod));
    const PrimeField field(p);
    const KmAlgebra alg(a, 5);
    const int d = alg.dimension();
    const CoxeterSystem W(a);

    struct RootData {
        RootVector v;
        QVector e;
        std::vector<FpMatrix> group; // x(t), t = 0..p-1
    };
    std::vector<RootData> roots;
    CheckResult integ("root_divided_powers");
    for (const auto& r : positive_real_roots(a, 5).roots)
        for (int sg : {1, -1}) {
            RootVector v = r.coords;
            for (auto& c : v) c *= sg;
            RootData rd{v, {}, {}};
            if (r.height == 1) {
                int i = 0;
                while (v[static_cast<std::size_t>(i)] == 0) ++i;
                rd.e = sg > 0 ? alg.e(i) : alg.f(i);
            } else {
                rd.e = alg.basis_vector(alg.components()[static_cast<std::size_t>(*alg.component_of(v))].offset);
            }
            const QMatrix ad = alg.ad_matrix(rd.e);
            std::vector<QMatrix> dp{QMatrix::identity(d)};
            for (int k = 1;; ++k) {
                QMatrix next = (ad * dp.back()).scaled(Rational(1, k));
                if (next.is_zero()) break;
                ++integ.instances;
                if (!next.integral()) integ.fail("(ad e_beta)^k / k! is not integral", {{"root", v}, {"k", k}});
                dp.push_back(std::move(next));
            }
            for (int t = 0; t < p; ++t) {
                QMatrix sum(d, d);
                Rational tk = 1;
                for (const auto& m : dp) {
                    sum = sum + m.scaled(tk);
                    tk *= t;
                }
                rd.group.push_back(to_fp(sum, p));
            }
            roots.push_back(std::move(rd));
        }
    auto find_root = [&](const RootVector& v) -> const RootData* {
        for (const auto& r : roots)
            if (r.v == v) return &r;
        return nullptr;
    };
    std::vector<CheckResult> out;
    out.push_back(integ);

    CheckResult rgd1("RGD1");
    for (const auto& x : roots)
        for (const auto& y : roots) {
            RootVector neg = y.v;
            for (auto& c : neg) c = -c;
            if (neg == x.v) continue;
            std::vector<FpMatrix> gens;
            for (const auto& g : roots) {
                bool in = false;
                for (int c1 = 1; c1 <= 3 && !in; ++c1)
                    for (int c2 = 1; c2 <= 3 && !in; ++c2)
                        in = g.v[0] == c1 * x.v[0] + c2 * y.v[0] && g.v[1] == c1 * x.v[1] + c2 * y.v[1];
                if (in)
                    for (int t = 1; t < p; ++t) gens.push_back(g.group[static_cast<std::size_t>(t)]);
            }
            const auto target = generated_subgroup(gens, d, p);
            for (int r = 1; r < p; ++r)
                for (int s = 1; s < p; ++s) {
                    ++rgd1.instances;
                    const FpMatrix& u = x.group[static_cast<std::size_t>(r)];
                    const FpMatrix& w = y.group[static_cast<std::size_t>(s)];
                    if (!target.count(u * w * u.inverse() * w.inverse()))
                        rgd1.fail("commutator outside the interval group", {{"alpha", x.v}, {"beta", y.v}, {"r", r}, {"s", s}});
                }
        }
    out.push_back(rgd1);

    CheckResult rgd2("RGD2");
    for (int i = 0; i < 2; ++i) {
        RootVector ai{0, 0};
        ai[static_cast<std::size_t>(i)] = 1;
        const RootData* pa = find_root(ai);
        const RootData* na = find_root({-ai[0], -ai[1]});
        for (int t = 1; t < p; ++t) {
            const int c = field.neg(field.inv(t));
            const FpMatrix m = na->group[static_cast<std::size_t>(c)] * pa->group[static_cast<std::size_t>(t)] *
                               na->group[static_cast<std::size_t>(c)];
            const FpMatrix mi = m.inverse();
            for (const auto& b : roots) {
                ++rgd2.instances;
                auto sb = W.reflect(i, b.v);
                const RootData* target = find_root(sb);
                std::set<FpMatrix> conj, want;
                for (const auto& x : b.group) conj.insert(m * x * mi);
                if (target) want.insert(target->group.begin(), target->group.end());
                if (conj != want) rgd2.fail("mu_s U_beta mu_s^-1 differs from U_s(beta)", {{"s", i + 1}, {"t", t}, {"beta", b.v}});
            }
        }
    }
    out.push_back(rgd2);

    CheckResult inj("adjoint_kernel_central");
    {
        const std::uint64_t q = static_cast<std::uint64_t>(p);
        // Orders of the simply connected groups and their centres.
        std::uint64_t order = 0, centre = 1;
        if (prod == 1) {
            order = upow(q, 3) * (q * q - 1) * (upow(q, 3) - 1);
            centre = std::gcd<std::uint64_t>(3, q - 1);
        } else if (prod == 2) {
            order = upow(q, 4) * (q * q - 1) * (upow(q, 4) - 1);
            centre = std::gcd<std::uint64_t>(2, q - 1);
        } else {
            order = upow(q, 6) * (q * q - 1) * (upow(q, 6) - 1);
        }
        const std::uint64_t sl2 = q * (q * q - 1);
        for (int i = 0; i < 2; ++i) {
            RootVector ai{0, 0};
            ai[static_cast<std::size_t>(i)] = 1;
            const auto img = generated_subgroup({find_root(ai)->group[1], find_root({-ai[0], -ai[1]})->group[1]}, d, p);
            ++inj.instances;
            if (img.size() != sl2 && img.size() != sl2 / std::gcd<std::uint64_t>(2, q - 1))
                inj.fail("rank-one image is not SL_2 or PSL_2", {{"s", i + 1}, {"image", img.size()}});
        }
        if (order / centre > 200000) {
            inj.detail = "full group too large to enumerate; rank-one images only";
        } else {
            std::vector<FpMatrix> gens;
            for (const auto& r : roots) gens.push_back(r.group[1]);
            const auto img = generated_subgroup(gens, d, p);
            ++inj.instances;
            if (img.size() != order / centre)
                inj.fail("image order differs from |G|/|Z|", {{"image", img.size()}, {"expected", order / centre}});
        }
    }
    out.push_back(inj);
    return out;
}

} // namespace twinkit
