// Copyright 2026 The lefschetz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lefschetz/varieties.hpp"

#include <algorithm>
#include <sstream>

#include "lefschetz/error.hpp"

namespace lefschetz {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool operator==(const VarietyExpr& a, const VarietyExpr& b) {
    if (a.node_.index() != b.node_.index()) return false;
    return std::visit(
        overloaded{
            [&](const expr::Product& x) {
                const auto& y = std::get<expr::Product>(b.node_);
                return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
            },
            [&](const expr::DisjointUnion& x) {
                const auto& y = std::get<expr::DisjointUnion>(b.node_);
                return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
            },
            [&](const expr::Blowup& x) {
                const auto& y = std::get<expr::Blowup>(b.node_);
                return x.codim == y.codim && *x.base == *y.base && *x.center == *y.center;
            },
            [&](const expr::ProjBundle& x) {
                const auto& y = std::get<expr::ProjBundle>(b.node_);
                return x.rank == y.rank && *x.base == *y.base;
            },
            [&](const auto& x) { return x == std::get<std::decay_t<decltype(x)>>(b.node_); },
        },
        a.node_);
}

ExprPtr point() { return std::make_shared<const VarietyExpr>(expr::Point{}); }
ExprPtr projective(std::int64_t n) { return std::make_shared<const VarietyExpr>(expr::Projective{n}); }
ExprPtr quadric(std::int64_t d) { return std::make_shared<const VarietyExpr>(expr::Quadric{d}); }
ExprPtr grassmannian(std::int64_t k, std::int64_t n) {
    return std::make_shared<const VarietyExpr>(expr::Grassmannian{k, n});
}
ExprPtr toric(std::vector<std::int64_t> cones) {
    return std::make_shared<const VarietyExpr>(expr::Toric{std::move(cones)});
}
ExprPtr product(ExprPtr a, ExprPtr b) {
    return std::make_shared<const VarietyExpr>(expr::Product{std::move(a), std::move(b)});
}
ExprPtr disjoint_union(ExprPtr a, ExprPtr b) {
    return std::make_shared<const VarietyExpr>(expr::DisjointUnion{std::move(a), std::move(b)});
}
ExprPtr blowup(ExprPtr base, ExprPtr center, std::int64_t codim) {
    return std::make_shared<const VarietyExpr>(expr::Blowup{std::move(base), std::move(center), codim});
}
ExprPtr proj_bundle(ExprPtr base, std::int64_t rank) {
    return std::make_shared<const VarietyExpr>(expr::ProjBundle{std::move(base), rank});
}
ExprPtr moduli_m0(std::int64_t n) { return std::make_shared<const VarietyExpr>(expr::ModuliM0{n}); }
ExprPtr fano3fold(std::int64_t b, bool odd_trivial) {
    return std::make_shared<const VarietyExpr>(expr::Fano3fold{b, odd_trivial});
}

ExprPtr moduli_m0_model(std::int64_t n) {
    switch (n) {
        case 3:
            return point();
        case 4:
            return projective(1);
        case 5: {
            auto four_points = disjoint_union(disjoint_union(disjoint_union(point(), point()), point()), point());
            return blowup(projective(2), four_points, 2);
        }
        default:
            throw InvalidArgument("invalid-parameter", "M0(n) is only modelled for 3 <= n <= 5");
    }
}

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = detail::checked_mul(r, n - k + i) / i;
    return r;
}

// b_{2k} = Σ_{i=k}^{n} (-1)^{i-k} C(i,k) d[n-i]
std::vector<std::int64_t> toric_betti(const std::vector<std::int64_t>& d) {
    const auto n = static_cast<std::int64_t>(d.size()) - 1;
    std::vector<std::int64_t> b(static_cast<std::size_t>(n + 1), 0);
    for (std::int64_t k = 0; k <= n; ++k) {
        std::int64_t s = 0;
        for (std::int64_t i = k; i <= n; ++i) {
            std::int64_t term = detail::checked_mul(binomial(i, k), d[static_cast<std::size_t>(n - i)]);
            s = detail::checked_add(s, ((i - k) % 2 == 0) ? term : -term);
        }
        b[static_cast<std::size_t>(k)] = s;
    }
    return b;
}

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
    throw InvalidArgument("invalid-parameter", path + ": " + what);
}

// Keeps explicit motives small enough to hold in memory.
constexpr std::int64_t kMaxParameter = 4096;
constexpr std::int64_t kMaxGrassmannianN = 128;
constexpr std::int64_t kMaxFanDimension = 64;

void bounded(const std::string& path, const char* name, std::int64_t v, std::int64_t limit = kMaxParameter) {
    if (v > limit) invalid(path, std::string(name) + " = " + std::to_string(v) + " exceeds the limit " + std::to_string(limit));
}

std::int64_t checked_dimension(const VarietyExpr& e, const std::string& path);

void validate_at(const VarietyExpr& e, const std::string& path) { (void)checked_dimension(e, path); }

// Validates the subtree and returns its dimension.
std::int64_t checked_dimension(const VarietyExpr& e, const std::string& path) {
    return std::visit(
        overloaded{
            [&](const expr::Point&) -> std::int64_t { return 0; },
            [&](const expr::Projective& p) -> std::int64_t {
                if (p.n < 0) invalid(path, "P(n) needs n >= 0, got " + std::to_string(p.n));
                bounded(path, "n", p.n);
                return p.n;
            },
            [&](const expr::Quadric& q) -> std::int64_t {
                if (q.d < 1) invalid(path, "Q(d) needs d >= 1, got " + std::to_string(q.d));
                bounded(path, "d", q.d);
                return q.d;
            },
            [&](const expr::Grassmannian& g) -> std::int64_t {
                if (!(0 < g.k && g.k < g.n)) {
                    invalid(path, "Gr(k,n) needs 0 < k < n, got Gr(" + std::to_string(g.k) + "," +
                                      std::to_string(g.n) + ")");
                }
                bounded(path, "n", g.n, kMaxGrassmannianN);
                return detail::checked_mul(g.k, g.n - g.k);
            },
            [&](const expr::Toric& t) -> std::int64_t {
                if (t.cones.empty() || t.cones.front() != 1) invalid(path, "cone counts must start with d[0] = 1");
                bounded(path, "fan dimension", static_cast<std::int64_t>(t.cones.size()) - 1, kMaxFanDimension);
                for (auto c : t.cones) {
                    if (c < 1) invalid(path, "every cone count of a complete fan is >= 1");
                }
                const auto b = toric_betti(t.cones);
                if (b.front() != 1 || std::any_of(b.begin(), b.end(), [](std::int64_t x) { return x < 0; })) {
                    invalid(path, "cone counts do not come from a smooth complete fan");
                }
                return static_cast<std::int64_t>(t.cones.size()) - 1;
            },
            [&](const expr::Product& p) -> std::int64_t {
                return detail::checked_add(checked_dimension(*p.lhs, path + ".lhs"),
                                           checked_dimension(*p.rhs, path + ".rhs"));
            },
            [&](const expr::DisjointUnion& u) -> std::int64_t {
                return std::max(checked_dimension(*u.lhs, path + ".lhs"), checked_dimension(*u.rhs, path + ".rhs"));
            },
            [&](const expr::Blowup& b) -> std::int64_t {
                const auto base = checked_dimension(*b.base, path + ".base");
                const auto center = checked_dimension(*b.center, path + ".center");
                if (b.codim < 2) invalid(path, "blow-up codimension must be >= 2, got " + std::to_string(b.codim));
                if (center >= base) {
                    invalid(path, "center dimension " + std::to_string(center) + " is not below base dimension " +
                                      std::to_string(base));
                }
                if (base - center != b.codim) {
                    invalid(path, "codimension " + std::to_string(b.codim) + " disagrees with dim(base) - dim(center) = " +
                                      std::to_string(base - center));
                }
                return base;
            },
            [&](const expr::ProjBundle& p) -> std::int64_t {
                const auto base = checked_dimension(*p.base, path + ".base");
                if (p.rank < 1) invalid(path, "bundle rank must be >= 1, got " + std::to_string(p.rank));
                bounded(path, "rank", p.rank);
                return detail::checked_add(base, p.rank - 1);
            },
            [&](const expr::ModuliM0& m) -> std::int64_t {
                if (m.n < 3 || m.n > 5) invalid(path, "M0(n) needs 3 <= n <= 5, got " + std::to_string(m.n));
                return m.n - 3;
            },
            [&](const expr::Fano3fold& f) -> std::int64_t {
                if (f.b < 0) invalid(path, "Betti number b must be >= 0, got " + std::to_string(f.b));
                bounded(path, "b", f.b);
                return 3;
            },
        },
        e.node());
}

OpaquePart twisted(OpaquePart p, std::int64_t by) {
    p.twist = detail::checked_add(p.twist, by);
    p.degree = detail::checked_add(p.degree, detail::checked_mul(std::int64_t{2}, by));
    return p;
}

GeneralizedMotive gm_sum(GeneralizedMotive a, const GeneralizedMotive& b) {
    a.tate = a.tate + b.tate;
    a.opaque.insert(a.opaque.end(), b.opaque.begin(), b.opaque.end());
    return a;
}

GeneralizedMotive gm_tensor(const GeneralizedMotive& a, const GeneralizedMotive& b) {
    GeneralizedMotive r;
    r.tate = a.tate * b.tate;
    // Opaque ⊗ Tate contributes one twisted copy per basis term.
    for (const auto& p : a.opaque) {
        for (const auto& [l, m] : b.tate.terms()) {
            for (Multiplicity i = 0; i < m; ++i) r.opaque.push_back(twisted(p, l));
        }
    }
    for (const auto& [l, m] : a.tate.terms()) {
        for (Multiplicity i = 0; i < m; ++i) {
            for (const auto& p : b.opaque) r.opaque.push_back(twisted(p, l));
        }
    }
    for (const auto& p : a.opaque) {
        for (const auto& q : b.opaque) {
            r.opaque.push_back(OpaquePart{"(" + p.to_string() + ")(x)(" + q.to_string() + ")", p.odd != q.odd, 0,
                                          detail::checked_add(p.degree, q.degree)});
        }
    }
    return r;
}

GeneralizedMotive tate_only(TateMotive t) { return GeneralizedMotive{std::move(t), {}}; }

TateMotive projective_motive(std::int64_t n) {
    TateMotive::Terms t;
    for (std::int64_t i = 0; i <= n; ++i) t.emplace(i, 1);
    return TateMotive(t);
}

// Gaussian binomial [n choose k]_L through [n,k] = [n-1,k-1] + L^k [n-1,k].
TateMotive gaussian_binomial(std::int64_t n, std::int64_t k) {
    // row[j] = [m choose j]_L, built up row by row
    std::vector<TateMotive> row{TateMotive::unit()};
    for (std::int64_t m = 1; m <= n; ++m) {
        std::vector<TateMotive> next(static_cast<std::size_t>(m + 1));
        next.front() = TateMotive::unit();
        next.back() = TateMotive::unit();
        for (std::int64_t j = 1; j < m; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            next[uj] = row[uj - 1] + TateMotive::lefschetz_power(j) * row[uj];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

GeneralizedMotive motive_unchecked(const VarietyExpr& e) {
    return std::visit(
        overloaded{
            [](const expr::Point&) { return tate_only(TateMotive::unit()); },
            [](const expr::Projective& p) { return tate_only(projective_motive(p.n)); },
            [](const expr::Quadric& q) {
                TateMotive t = projective_motive(q.d);
                if (q.d % 2 == 0) t = t + TateMotive::lefschetz_power(q.d / 2);
                return tate_only(t);
            },
            [](const expr::Grassmannian& g) { return tate_only(gaussian_binomial(g.n, g.k)); },
            [](const expr::Toric& t) {
                const auto b = toric_betti(t.cones);
                TateMotive::Terms terms;
                for (std::size_t k = 0; k < b.size(); ++k) {
                    terms.emplace(static_cast<Exponent>(k), static_cast<Multiplicity>(b[k]));
                }
                return tate_only(TateMotive(terms));
            },
            [](const expr::Product& p) { return gm_tensor(motive_unchecked(*p.lhs), motive_unchecked(*p.rhs)); },
            [](const expr::DisjointUnion& u) { return gm_sum(motive_unchecked(*u.lhs), motive_unchecked(*u.rhs)); },
            [](const expr::Blowup& b) {
                GeneralizedMotive out = motive_unchecked(*b.base);
                const GeneralizedMotive center = motive_unchecked(*b.center);
                for (std::int64_t i = 1; i < b.codim; ++i) {
                    out = gm_sum(out, gm_tensor(center, tate_only(TateMotive::lefschetz_power(i))));
                }
                return out;
            },
            [](const expr::ProjBundle& p) {
                return gm_tensor(motive_unchecked(*p.base), tate_only(projective_motive(p.rank - 1)));
            },
            [](const expr::ModuliM0& m) { return motive_unchecked(*moduli_m0_model(m.n)); },
            [](const expr::Fano3fold& f) {
                const auto b = static_cast<Multiplicity>(f.b);
                GeneralizedMotive out = tate_only(TateMotive({{0, 1}, {1, b}, {2, b}, {3, 1}}));
                if (!f.odd_trivial) {
                    out.opaque = {OpaquePart{"M1(X)", true, 0, 1}, OpaquePart{"M1(J)", true, 1, 3},
                                  OpaquePart{"M5(X)", true, 0, 5}};
                }
                return out;
            },
        },
        e.node());
}

std::vector<SODPiece> relabel(const Collection& c, const std::string& prefix, const std::string& suffix) {
    std::vector<SODPiece> out;
    for (auto p : c.pieces()) {
        p.label = prefix + p.label + suffix;
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<SODPiece> numbered(std::int64_t m) {
    std::vector<SODPiece> v;
    for (std::int64_t i = 1; i <= m; ++i) v.push_back(SODPiece::exceptional("E" + std::to_string(i)));
    return v;
}

std::string twist_label(std::int64_t k) { return k == 0 ? "O" : "O(" + std::to_string(k) + ")"; }

// Partitions inside a rows × cols box, as "(l1,l2,...)" with zeros dropped.
void box_partitions(std::int64_t rows, std::int64_t cols, std::int64_t max_part, std::vector<std::int64_t>& cur,
                    std::vector<std::string>& out) {
    if (static_cast<std::int64_t>(cur.size()) == rows) {
        std::string s = "(";
        bool first = true;
        for (auto x : cur) {
            if (x == 0) break;
            s += (first ? "" : ",") + std::to_string(x);
            first = false;
        }
        out.push_back(s + ")");
        return;
    }
    for (std::int64_t part = std::min(cols, max_part); part >= 0; --part) {
        cur.push_back(part);
        box_partitions(rows, cols, part, cur, out);
        cur.pop_back();
    }
}

Collection collection_unchecked(const VarietyExpr& e, QuadricCollection quadrics) {
    return std::visit(
        overloaded{
            [](const expr::Point&) { return Collection({SODPiece::exceptional("O")}); },
            [](const expr::Projective& p) {
                std::vector<SODPiece> v;
                for (std::int64_t i = -p.n; i <= 0; ++i) v.push_back(SODPiece::exceptional(twist_label(i)));
                return Collection(std::move(v));
            },
            [&](const expr::Quadric& q) {
                std::vector<SODPiece> v;
                const std::string d = std::to_string(q.d);
                if (quadrics == QuadricCollection::Kuznetsov) {
                    v.push_back(SODPiece::opaque("Cl0(Q_" + d + ")"));
                } else if (q.d % 2 == 1) {
                    v.push_back(SODPiece::exceptional("Sigma(-" + d + ")"));
                } else {
                    v.push_back(SODPiece::exceptional("Sigma+(-" + d + ")"));
                    v.push_back(SODPiece::exceptional("Sigma-(-" + d + ")"));
                }
                for (std::int64_t i = -q.d + 1; i <= 0; ++i) v.push_back(SODPiece::exceptional(twist_label(i)));
                return Collection(std::move(v));
            },
            [](const expr::Grassmannian& g) {
                std::vector<std::string> parts;
                std::vector<std::int64_t> cur;
                box_partitions(g.k, g.n - g.k, g.n - g.k, cur, parts);
                std::vector<SODPiece> v;
                for (const auto& s : parts) v.push_back(SODPiece::exceptional("Sigma^" + s + "U"));
                return Collection(std::move(v));
            },
            [](const expr::Toric& t) {
                // Kawamata's collection, recorded by length only: the Euler
                // characteristic is the number of maximal cones.
                return Collection(numbered(t.cones.back()));
            },
            [&](const expr::Product& p) {
                const Collection a = collection_unchecked(*p.lhs, quadrics);
                const Collection b = collection_unchecked(*p.rhs, quadrics);
                std::vector<SODPiece> v;
                for (const auto& x : a.pieces()) {
                    for (const auto& y : b.pieces()) {
                        const std::string label = x.label + " (x) " + y.label;
                        if (x.kind == PieceKind::Exceptional && y.kind == PieceKind::Exceptional) {
                            v.push_back(SODPiece::exceptional(label));
                        } else {
                            std::optional<Multiplicity> rank;
                            if (x.nc_rank && y.nc_rank) rank = detail::checked_mul(*x.nc_rank, *y.nc_rank);
                            v.push_back(SODPiece::opaque(label, rank));
                        }
                    }
                }
                return Collection(std::move(v));
            },
            [&](const expr::DisjointUnion& u) {
                auto v = relabel(collection_unchecked(*u.lhs, quadrics), "i1*(", ")");
                auto w = relabel(collection_unchecked(*u.rhs, quadrics), "i2*(", ")");
                v.insert(v.end(), w.begin(), w.end());
                return Collection(std::move(v));
            },
            [&](const expr::Blowup& b) {
                // ⟨ D^b(Z)_{-c+1}, …, D^b(Z)_{-1}, π^* D^b(X) ⟩
                const Collection center = collection_unchecked(*b.center, quadrics);
                std::vector<SODPiece> v;
                for (std::int64_t k = -b.codim + 1; k <= -1; ++k) {
                    auto w = relabel(center, "j*p*(", ")(" + std::to_string(k) + "E)");
                    v.insert(v.end(), w.begin(), w.end());
                }
                auto base = relabel(collection_unchecked(*b.base, quadrics), "pi*(", ")");
                v.insert(v.end(), base.begin(), base.end());
                return Collection(std::move(v));
            },
            [&](const expr::ProjBundle& p) {
                const Collection base = collection_unchecked(*p.base, quadrics);
                std::vector<SODPiece> v;
                for (std::int64_t i = -(p.rank - 1); i <= 0; ++i) {
                    auto w = relabel(base, "pi*(", i == 0 ? ")" : ")(" + std::to_string(i) + ")");
                    v.insert(v.end(), w.begin(), w.end());
                }
                return Collection(std::move(v));
            },
            [&](const expr::ModuliM0& m) { return collection_unchecked(*moduli_m0_model(m.n), quadrics); },
            [](const expr::Fano3fold& f) {
                if (!f.odd_trivial) {
                    throw DomainFailure("no-collection",
                                        "a Fano threefold with nonvanishing odd cohomology admits no full "
                                        "exceptional collection");
                }
                return Collection(numbered(2 + 2 * f.b));
            },
        },
        e.node());
}

void render_into(std::ostringstream& os, const VarietyExpr& e);

void render_operand(std::ostringstream& os, const VarietyExpr& e, bool parenthesize) {
    if (parenthesize) os << '(';
    render_into(os, e);
    if (parenthesize) os << ')';
}

template <class T>
bool is(const VarietyExpr& e) {
    return std::holds_alternative<T>(e.node());
}

void render_into(std::ostringstream& os, const VarietyExpr& e) {
    std::visit(overloaded{
                   [&](const expr::Point&) { os << "point"; },
                   [&](const expr::Projective& p) { os << "P(" << p.n << ')'; },
                   [&](const expr::Quadric& q) { os << "Q(" << q.d << ')'; },
                   [&](const expr::Grassmannian& g) { os << "Gr(" << g.k << ',' << g.n << ')'; },
                   [&](const expr::Toric& t) {
                       os << "toric[";
                       for (std::size_t i = 0; i < t.cones.size(); ++i) os << (i ? "," : "") << t.cones[i];
                       os << ']';
                   },
                   [&](const expr::Product& p) {
                       render_operand(os, *p.lhs, is<expr::DisjointUnion>(*p.lhs));
                       os << " * ";
                       render_operand(os, *p.rhs, is<expr::DisjointUnion>(*p.rhs) || is<expr::Product>(*p.rhs));
                   },
                   [&](const expr::DisjointUnion& u) {
                       render_operand(os, *u.lhs, false);
                       os << " + ";
                       render_operand(os, *u.rhs, is<expr::DisjointUnion>(*u.rhs));
                   },
                   [&](const expr::Blowup& b) {
                       os << "blowup(";
                       render_into(os, *b.base);
                       os << "; ";
                       render_into(os, *b.center);
                       os << "; " << b.codim << ')';
                   },
                   [&](const expr::ProjBundle& p) {
                       os << "projbundle(";
                       render_into(os, *p.base);
                       os << "; " << p.rank << ')';
                   },
                   [&](const expr::ModuliM0& m) { os << "M0(" << m.n << ')'; },
                   [&](const expr::Fano3fold& f) {
                       os << "fano(" << f.b << "; odd_trivial=" << (f.odd_trivial ? "true" : "false") << ')';
                   },
               },
               e.node());
}

}  // namespace

std::string OpaquePart::to_string() const {
    if (twist == 0) return name;
    if (twist == 1) return name + "*L";
    return name + "*L^" + std::to_string(twist);
}

std::string GeneralizedMotive::to_string() const {
    std::string s = tate.is_zero() && !opaque.empty() ? "" : tate.to_string();
    for (const auto& p : opaque) s += (s.empty() ? "" : " + ") + p.to_string();
    return s;
}

void validate(const VarietyExpr& e) { validate_at(e, "$"); }

std::int64_t dimension_of(const VarietyExpr& e) { return checked_dimension(e, "$"); }

GeneralizedMotive motive_of(const VarietyExpr& e) {
    validate(e);
    return motive_unchecked(e);
}

Collection exceptional_collection_of(const VarietyExpr& e, QuadricCollection quadrics) {
    validate(e);
    constexpr Multiplicity kMaxLength = Multiplicity{1} << 20;
    if (const auto rank = motive_unchecked(e).tate.rank(); rank > kMaxLength) {
        throw InvalidArgument("too-large", "collection of length " + std::to_string(rank) +
                                               " exceeds the limit " + std::to_string(kMaxLength));
    }
    return collection_unchecked(e, quadrics);
}

PoincarePoly betti_lower_bound(const GeneralizedMotive& m) {
    PoincarePoly p = poincare(m.tate);
    PoincarePoly::Terms odd;
    for (const auto& part : m.opaque) {
        if (part.odd) odd[part.degree] += 1;
    }
    return p + PoincarePoly(odd);
}

std::string render(const VarietyExpr& e) {
    std::ostringstream os;
    render_into(os, e);
    return os.str();
}

}  // namespace lefschetz
