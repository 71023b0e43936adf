#include "charvar/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "charvar/qinv.hpp"
#include "charvar/sl2trace.hpp"

namespace charvar {

namespace {

std::string a_name(int i, int j, int k) {
    if (j > k) std::swap(j, k);
    return "a" + std::to_string(i) + "_" + std::to_string(j) + std::to_string(k);
}

std::string b_name(int j, int k) {
    if (j > k) std::swap(j, k);
    return "b_" + std::to_string(j) + std::to_string(k);
}

std::string c_name(int i, int j, int k) {
    return "c_" + std::to_string(i) + std::to_string(j) + std::to_string(k);
}

std::string tau(const char* base, int copy) { return std::string(base) + "_" + std::to_string(copy); }

Polynomial var(const std::string& name) { return Polynomial::variable(name); }

/// Flips the sign so the coefficient of the largest monomial is positive
/// (or has positive imaginary part on the imaginary axis); canonical
/// representative of {p, -p}.
Polynomial canonical_sign(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p.terms().rbegin()->second.prints_negative() ? -p : p;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

/// Exponent vectors (over `names`) with weighted degree exactly `degree`.
void enumerate_weighted(const std::vector<std::string>& names, const std::vector<int>& weights,
                        int degree, std::size_t pos, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
    if (pos == names.size()) {
        if (degree == 0) out.push_back(current);
        return;
    }
    int w = weights[pos];
    for (int e = 0; e * w <= degree; ++e) {
        current[pos] = e;
        enumerate_weighted(names, weights, degree - e * w, pos + 1, current, out);
    }
    current[pos] = 0;
}

Monomial exponents_to_monomial(const std::vector<std::string>& names, const std::vector<int>& exps) {
    std::map<std::string, int> m;
    for (std::size_t k = 0; k < names.size(); ++k)
        if (exps[k] != 0) m[names[k]] = exps[k];
    return Monomial(m);
}

/// Image of a generator-exponent vector under the monomial map.
Monomial map_image(const MonomialMap& map, const std::vector<int>& exps) {
    Monomial result;
    for (std::size_t k = 0; k < map.names.size(); ++k)
        for (int e = 0; e < exps[k]; ++e) result = result * map.image(map.names[k]);
    return result;
}

/// Rank of the row span of `rows` in the coordinate space indexed by
/// `basis`; every monomial of every row must appear in `basis`.
int span_rank(const std::vector<Polynomial>& rows, const std::vector<Monomial>& basis) {
    if (rows.empty() || basis.empty()) return 0;
    std::map<Monomial, int> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);
    ScalarMatrix m(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [mono, coeff] : rows[r].terms()) {
            auto it = index.find(mono);
            if (it == index.end()) throw std::logic_error("span_rank: monomial outside the basis");
            m.at(static_cast<int>(r), it->second) = coeff;
        }
    return rank(m);
}

std::vector<Monomial> monomial_basis(const Polynomial& p, std::vector<Monomial> acc = {}) {
    for (const auto& [mono, coeff] : p.terms()) acc.push_back(mono);
    return acc;
}

}  // namespace

const Monomial& MonomialMap::image(const std::string& name) const {
    auto it = images.find(name);
    if (it == images.end()) throw std::invalid_argument("unknown generator " + name);
    return it->second;
}

int MonomialMap::degree(const std::string& name) const {
    auto it = degrees.find(name);
    if (it == degrees.end()) throw std::invalid_argument("unknown generator " + name);
    return it->second;
}

MonomialMap so4_generator_map() {
    MonomialMap map;
    auto add = [&](const std::string& name, const Monomial& image) {
        map.names.push_back(name);
        map.images[name] = image;
        map.degrees[name] = image.degree();
    };
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = j; k <= 2; ++k)
                add(a_name(i, j, k), Monomial::variable(tau(i == 1 ? "t1" : "t2", j)) *
                                         Monomial::variable(tau(i == 1 ? "t1" : "t2", k)));
    for (int j = 1; j <= 2; ++j)
        for (int k = j; k <= 2; ++k)
            add(b_name(j, k), Monomial::variable(tau("t12", j)) * Monomial::variable(tau("t12", k)));
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                add(c_name(i, j, k), Monomial::variable(tau("t1", i)) *
                                         Monomial::variable(tau("t2", j)) *
                                         Monomial::variable(tau("t12", k)));
    return map;
}

MonomialMap psl2_generator_map() {
    MonomialMap map;
    auto add = [&](const std::string& name, const Monomial& image) {
        map.names.push_back(name);
        map.images[name] = image;
        map.degrees[name] = image.degree();
    };
    add("g1", Monomial::variable("t1", 2));
    add("g2", Monomial::variable("t2", 2));
    add("g3", Monomial::variable("t12", 2));
    add("g4", Monomial::variable("t1") * Monomial::variable("t2") * Monomial::variable("t12"));
    return map;
}

std::vector<Relation> so4_relations(const std::vector<int>& families) {
    std::set<int> wanted(families.begin(), families.end());
    std::vector<Relation> out;
    std::set<std::string> seen;
    auto add = [&](const std::string& name, Polynomial p) {
        p = canonical_sign(p);
        if (p.is_zero()) return;
        std::string key = p.to_string();
        if (!seen.insert(key).second) return;
        out.push_back({name, std::move(p)});
    };
    auto idx = [](int bits, int pos) { return ((bits >> pos) & 1) + 1; };

    // a_{i,j,k} a_{i,j',k'} - a_{i,j,j'} a_{i,k,k'}
    if (wanted.count(1))
        for (int i = 1; i <= 2; ++i)
            for (int bits = 0; bits < 16; ++bits) {
                int j = idx(bits, 0), k = idx(bits, 1), jp = idx(bits, 2), kp = idx(bits, 3);
                add("aa_" + std::to_string(i) + "_" + std::to_string(j) + std::to_string(k) +
                        std::to_string(jp) + std::to_string(kp),
                    var(a_name(i, j, k)) * var(a_name(i, jp, kp)) -
                        var(a_name(i, j, jp)) * var(a_name(i, k, kp)));
            }

    // b_{j,k} b_{j',k'} - b_{j,j'} b_{k,k'}
    if (wanted.count(2))
        for (int bits = 0; bits < 16; ++bits) {
            int j = idx(bits, 0), k = idx(bits, 1), jp = idx(bits, 2), kp = idx(bits, 3);
            add("bb_" + std::to_string(j) + std::to_string(k) + std::to_string(jp) + std::to_string(kp),
                var(b_name(j, k)) * var(b_name(jp, kp)) - var(b_name(j, jp)) * var(b_name(k, kp)));
        }

    // c_{i,j,k} c_{i',j',k'} - a_{1,i,i'} a_{2,j,j'} b_{k,k'}
    if (wanted.count(3))
        for (int bits = 0; bits < 64; ++bits) {
            int i = idx(bits, 0), j = idx(bits, 1), k = idx(bits, 2);
            int ip = idx(bits, 3), jp = idx(bits, 4), kp = idx(bits, 5);
            add("cc_" + std::to_string(i) + std::to_string(j) + std::to_string(k) + "_" +
                    std::to_string(ip) + std::to_string(jp) + std::to_string(kp),
                var(c_name(i, j, k)) * var(c_name(ip, jp, kp)) -
                    var(a_name(1, i, ip)) * var(a_name(2, j, jp)) * var(b_name(k, kp)));
        }

    // a_{1,j,k} c_{i,j',k'} - a_{1,i,k} c_{j,j',k'}
    if (wanted.count(4))
        for (int bits = 0; bits < 32; ++bits) {
            int j = idx(bits, 0), k = idx(bits, 1), i = idx(bits, 2), jp = idx(bits, 3), kp = idx(bits, 4);
            add("ac1_" + std::to_string(j) + std::to_string(k) + "_" + std::to_string(i) +
                    std::to_string(jp) + std::to_string(kp),
                var(a_name(1, j, k)) * var(c_name(i, jp, kp)) -
                    var(a_name(1, i, k)) * var(c_name(j, jp, kp)));
        }

    // a_{2,j,k} c_{i,j',k'} - a_{2,j',k} c_{i,j,k'}
    if (wanted.count(5))
        for (int bits = 0; bits < 32; ++bits) {
            int j = idx(bits, 0), k = idx(bits, 1), i = idx(bits, 2), jp = idx(bits, 3), kp = idx(bits, 4);
            add("ac2_" + std::to_string(j) + std::to_string(k) + "_" + std::to_string(i) +
                    std::to_string(jp) + std::to_string(kp),
                var(a_name(2, j, k)) * var(c_name(i, jp, kp)) -
                    var(a_name(2, jp, k)) * var(c_name(i, j, kp)));
        }

    // b_{j,k} c_{i,j',k'} - b_{j,k'} c_{i,j',k}
    if (wanted.count(6))
        for (int bits = 0; bits < 32; ++bits) {
            int j = idx(bits, 0), k = idx(bits, 1), i = idx(bits, 2), jp = idx(bits, 3), kp = idx(bits, 4);
            add("bc_" + std::to_string(j) + std::to_string(k) + "_" + std::to_string(i) +
                    std::to_string(jp) + std::to_string(kp),
                var(b_name(j, k)) * var(c_name(i, jp, kp)) -
                    var(b_name(j, kp)) * var(c_name(i, jp, k)));
        }

    return out;
}

std::vector<Relation> psl2_relations() {
    return {{"g1g2g3_g4sq", var("g1") * var("g2") * var("g3") - var("g4") * var("g4")}};
}

Polynomial apply_map(const MonomialMap& map, const Polynomial& p) {
    std::map<std::string, Polynomial> bindings;
    for (const std::string& name : map.names) bindings[name] = Polynomial(map.image(name));
    return p.substitute(bindings);
}

std::vector<RelationVerdict> verify_relations(const MonomialMap& map, const std::vector<Relation>& rels) {
    std::vector<RelationVerdict> out;
    out.reserve(rels.size());
    for (const Relation& r : rels) {
        Polynomial residual = apply_map(map, r.poly);
        out.push_back({r.name, residual.is_zero(), std::move(residual)});
    }
    return out;
}

std::vector<std::vector<int>> generator_monomials(const MonomialMap& map, int degree) {
    std::vector<int> weights;
    weights.reserve(map.names.size());
    for (const std::string& name : map.names) weights.push_back(map.degree(name));
    std::vector<std::vector<int>> out;
    std::vector<int> current(map.names.size(), 0);
    enumerate_weighted(map.names, weights, degree, 0, current, out);
    return out;
}

CompletenessCertificate completeness_certificate(const MonomialMap& map,
                                                 const std::vector<Relation>& rels, int degree_bound) {
    // Each relation must be a unit binomial m1 - m2 for the combinatorial
    // certificate below to be valid.
    struct Binomial {
        std::vector<int> lhs, rhs;
        int degree;
    };
    std::vector<Binomial> binomials;
    for (const Relation& r : rels) {
        if (r.poly.term_count() != 2)
            throw std::invalid_argument("completeness_certificate: relation is not a binomial");
        auto it = r.poly.terms().begin();
        const auto& [m1, c1] = *it;
        const auto& [m2, c2] = *std::next(it);
        if (!(c1 + c2).is_zero() || !(c1 * c1 == GaussianRational(1)))
            throw std::invalid_argument("completeness_certificate: relation is not a unit binomial");
        Binomial b;
        b.lhs.assign(map.names.size(), 0);
        b.rhs.assign(map.names.size(), 0);
        int d1 = 0, d2 = 0;
        for (std::size_t k = 0; k < map.names.size(); ++k) {
            b.lhs[k] = m1.exponent(map.names[k]);
            b.rhs[k] = m2.exponent(map.names[k]);
            d1 += b.lhs[k] * map.degree(map.names[k]);
            d2 += b.rhs[k] * map.degree(map.names[k]);
        }
        if (d1 != d2)
            throw std::invalid_argument("completeness_certificate: relation is not weighted-homogeneous");
        b.degree = d1;
        binomials.push_back(std::move(b));
    }

    CompletenessCertificate cert;
    cert.degree_bound = degree_bound;
    cert.complete = true;
    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<std::vector<int>> sources = generator_monomials(map, d);
        std::map<std::vector<int>, int> source_index;
        for (std::size_t k = 0; k < sources.size(); ++k) source_index[sources[k]] = static_cast<int>(k);

        // kernel dimension: one per source monomial beyond the first in
        // each image fiber
        std::vector<Monomial> images(sources.size());
        std::map<Monomial, long> fiber_size;
        for (std::size_t k = 0; k < sources.size(); ++k) {
            images[k] = map_image(map, sources[k]);
            ++fiber_size[images[k]];
        }
        long kernel_dim = 0;
        for (const auto& [image, size] : fiber_size) kernel_dim += size - 1;

        // span rank: relation multiples are differences of source
        // monomials, i.e. edges; rank = vertices touched - components
        UnionFind uf(static_cast<int>(sources.size()));
        std::set<int> touched;
        bool edges_in_kernel = true;
        for (const Binomial& b : binomials) {
            if (b.degree > d) continue;
            for (const std::vector<int>& g : generator_monomials(map, d - b.degree)) {
                std::vector<int> u(g), v(g);
                for (std::size_t k = 0; k < g.size(); ++k) {
                    u[k] += b.lhs[k];
                    v[k] += b.rhs[k];
                }
                int ui = source_index.at(u), vi = source_index.at(v);
                if (ui == vi) continue;
                if (images[ui] != images[vi]) edges_in_kernel = false;
                touched.insert(ui);
                touched.insert(vi);
                uf.unite(ui, vi);
            }
        }
        std::set<int> roots;
        for (int v : touched) roots.insert(uf.find(v));
        long span = static_cast<long>(touched.size()) - static_cast<long>(roots.size());

        DegreeCertificate dc{d, static_cast<long>(sources.size()), kernel_dim, span,
                             edges_in_kernel && span == kernel_dim};
        cert.complete = cert.complete && dc.complete;
        cert.per_degree.push_back(dc);
    }
    return cert;
}

Polynomial sigma_action(const Polynomial& p) {
    auto hat = [](char d) { return d == '1' ? '2' : '1'; };
    return p.rename([&](const std::string& name) {
        std::size_t underscore = name.find('_');
        if (underscore == std::string::npos)
            throw std::invalid_argument("sigma_action: unexpected variable " + name);
        std::string head = name.substr(0, underscore);
        std::string tail = name.substr(underscore + 1);
        for (char& d : tail) d = hat(d);
        if (head != "c") std::sort(tail.begin(), tail.end());
        return head + "_" + tail;
    });
}

Polynomial sigma_tau(const Polynomial& p) {
    return p.rename([](const std::string& name) {
        if (name.ends_with("_1")) return name.substr(0, name.size() - 1) + "2";
        if (name.ends_with("_2")) return name.substr(0, name.size() - 1) + "1";
        throw std::invalid_argument("sigma_tau: unexpected variable " + name);
    });
}

PQSplit pq_split(const std::vector<std::pair<std::string, Polynomial>>& generators,
                 const std::function<Polynomial(const Polynomial&)>& involution) {
    PQSplit split;
    std::set<std::string> seen;
    for (const auto& [name, g] : generators) {
        Polynomial image = involution(g);
        split.p.push_back(g + image);
        Polynomial q = canonical_sign(g - image);
        if (q.is_zero()) continue;
        if (seen.insert(q.to_string()).second) split.q.push_back(q);
    }
    return split;
}

PQSplit pq_split_so4() {
    MonomialMap map = so4_generator_map();
    std::vector<std::pair<std::string, Polynomial>> generators;
    for (const std::string& name : map.names) generators.emplace_back(name, var(name));
    PQSplit split = pq_split(generators, sigma_action);

    std::vector<std::pair<std::string, Polynomial>> ts = {
        {"t1", var("c_112") - var("c_221")}, {"t2", var("c_121") - var("c_212")},
        {"t3", var("c_122") - var("c_211")}, {"t4", var("a1_11") - var("a1_22")},
        {"t5", var("a2_11") - var("a2_22")}, {"t6", var("b_11") - var("b_22")},
        {"t7", var("c_111") - var("c_222")},
    };
    std::set<std::string> q_keys;
    for (const Polynomial& q : split.q) q_keys.insert(q.to_string());
    std::set<std::string> t_keys;
    for (const auto& [name, t] : ts) t_keys.insert(canonical_sign(t).to_string());
    if (q_keys != t_keys) throw std::logic_error("pq_split_so4: q-part does not match the t-list");

    split.t.push_back(Polynomial(1));
    split.t_names.push_back("t0");
    for (auto& [name, t] : ts) {
        split.t.push_back(t);
        split.t_names.push_back(name);
    }
    return split;
}

std::vector<Verdict> verify_t_identities() {
    MonomialMap map = so4_generator_map();
    auto im = [&](const Polynomial& p) { return apply_map(map, p); };
    GaussianRational quarter(Rational(1, 4));
    GaussianRational eighth(Rational(1, 8));

    FreeWord g1 = FreeWord::parse("g1", 2);
    FreeWord g2 = FreeWord::parse("g2", 2);
    FreeWord g1g2 = g1.concat(g2);
    FreeWord g2g1inv = g2.concat(g1.inverse());
    FreeWord g1g2inv = g1.concat(g2.inverse());

    PQSplit split = pq_split_so4();
    auto t = [&](int k) { return split.t[static_cast<std::size_t>(k)]; };

    std::vector<std::pair<std::string, Polynomial>> residuals = {
        {"t1", im(t(1)) + q4_tau(g1, g2) * quarter},
        {"t2", im(t(2)) - q4_tau(g2g1inv, g1) * quarter - im(var("a2_12") * t(4))},
        {"t3", im(t(3)) + q4_tau(g1g2inv, g2) * quarter + im(var("a1_12") * t(5))},
        {"t4", im(t(4)) - q4_tau(g1, g1) * eighth},
        {"t5", im(t(5)) - q4_tau(g2, g2) * eighth},
        {"t6", im(t(6)) - q4_tau(g1g2, g1g2) * eighth},
        {"t7", im(t(7)) -
                   im(t(4) * (var("a2_11") + var("a2_22")) + t(5) * (var("a1_11") + var("a1_22"))) *
                       quarter -
                   im(t(6)) * GaussianRational(Rational(1, 2)) +
                   q4_tau(g1g2inv, g1g2inv) * GaussianRational(Rational(1, 16))},
    };

    std::vector<Verdict> out;
    for (auto& [name, residual] : residuals)
        out.push_back({name, residual.is_zero(),
                       residual.is_zero() ? "" : "residual " + residual.to_string()});
    return out;
}

std::vector<Verdict> verify_ft_generators() {
    GaussianRational half(Rational(1, 2));
    auto T = [](const char* base, int copy) { return Polynomial::variable(tau(base, copy)); };

    FreeWord g1sq_g2 = FreeWord::parse("g1^2g2", 2);
    FreeWord g1_g2sq = FreeWord::parse("g1g2^2", 2);
    FreeWord g1inv_g2 = FreeWord::parse("g1^-1g2", 2);

    std::vector<Verdict> out;
    for (int i = 1; i <= 2; ++i) {
        Polynomial w = reduce_trace_copy(g1sq_g2, i);
        Polynomial residual = T("t1", i) * T("t2", i) * T("t12", i) +
                              (w * w - (T("t1", i) * T("t12", i)).pow(2) - T("t2", i).pow(2)) * half;
        std::string name = "tau1 tau2 tau12, copy " + std::to_string(i);
        out.push_back({name, residual.is_zero(),
                       residual.is_zero() ? "" : "residual " + residual.to_string()});
    }

    struct Mixed {
        std::string name;
        Polynomial lhs;
        Polynomial module_part;  // the FT combination other than the character product
        FreeWord word;
    };
    std::vector<Mixed> mixed = {
        {"c121 + c212", T("t1", 1) * T("t2", 2) * T("t12", 1) + T("t1", 2) * T("t2", 1) * T("t12", 2),
         T("t1", 1) * T("t1", 2) * T("t12", 1) * T("t12", 2) + T("t2", 1) * T("t2", 2), g1sq_g2},
        {"c122 + c211", T("t1", 1) * T("t2", 2) * T("t12", 2) + T("t1", 2) * T("t2", 1) * T("t12", 1),
         T("t2", 1) * T("t2", 2) * T("t12", 1) * T("t12", 2) + T("t1", 1) * T("t1", 2), g1_g2sq},
        {"c112 + c221", T("t1", 1) * T("t2", 1) * T("t12", 2) + T("t1", 2) * T("t2", 2) * T("t12", 1),
         T("t1", 1) * T("t1", 2) * T("t2", 1) * T("t2", 2) + T("t12", 1) * T("t12", 2), g1inv_g2},
    };
    for (const Mixed& m : mixed) {
        Polynomial character = reduce_trace_copy(m.word, 1) * reduce_trace_copy(m.word, 2);
        Polynomial residual = m.lhs - (m.module_part - character);
        out.push_back({m.name, residual.is_zero(),
                       residual.is_zero() ? "" : "residual " + residual.to_string()});
    }
    return out;
}

IndependenceReport independence_certificate() {
    auto T = [](const char* base, int copy) { return Polynomial::variable(tau(base, copy)); };
    auto c = [&](int i, int j, int k) { return T("t1", i) * T("t2", j) * T("t12", k); };

    std::vector<Monomial> basis;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k) basis = monomial_basis(c(i, j, k), std::move(basis));

    std::vector<Polynomial> ft = {c(1, 1, 1), c(2, 2, 2), c(1, 2, 1) + c(2, 1, 2),
                                  c(1, 2, 2) + c(2, 1, 1), c(1, 1, 2) + c(2, 2, 1)};
    std::vector<Polynomial> ts = {c(1, 1, 2) - c(2, 2, 1), c(1, 2, 1) - c(2, 1, 2),
                                  c(1, 2, 2) - c(2, 1, 1)};

    IndependenceReport report;
    report.rank_ft = span_rank(ft, basis);
    for (const Polynomial& t : ts) {
        std::vector<Polynomial> with = ft;
        with.push_back(t);
        report.rank_with.push_back(span_rank(with, basis));
    }
    std::vector<Polynomial> all = ft;
    all.insert(all.end(), ts.begin(), ts.end());
    report.rank_all = span_rank(all, basis);

    std::vector<Polynomial> with_sum = ft;
    with_sum.push_back(c(1, 1, 2) + c(2, 2, 1));
    report.contains_c112_plus_c221 = span_rank(with_sum, basis) == report.rank_ft;

    report.ok = report.rank_ft == 5 && report.rank_all == 8 && report.contains_c112_plus_c221 &&
                std::all_of(report.rank_with.begin(), report.rank_with.end(),
                            [](int r) { return r == 6; });
    return report;
}

namespace {

/// All degree-d monomials in the given variables whose (Z/2)^2 weight is
/// `weight`, as Monomials.
std::vector<Monomial> weighted_monomials(const std::vector<std::string>& vars,
                                         const std::map<std::string, std::pair<int, int>>& weights,
                                         int degree, std::pair<int, int> weight) {
    std::vector<int> unit_weights(vars.size(), 1);
    std::vector<std::vector<int>> exps;
    std::vector<int> current(vars.size(), 0);
    enumerate_weighted(vars, unit_weights, degree, 0, current, exps);
    std::vector<Monomial> out;
    for (const std::vector<int>& e : exps) {
        int w1 = 0, w2 = 0;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            w1 += e[k] * weights.at(vars[k]).first;
            w2 += e[k] * weights.at(vars[k]).second;
        }
        if (w1 % 2 == weight.first && w2 % 2 == weight.second)
            out.push_back(exponents_to_monomial(vars, e));
    }
    return out;
}

}  // namespace

std::vector<Verdict> verify_module_decompositions(int max_degree) {
    std::vector<std::string> vars = {"t1", "t2", "t12"};
    std::map<std::string, std::pair<int, int>> weights = {
        {"t1", {1, 0}}, {"t2", {0, 1}}, {"t12", {1, 1}}};

    Polynomial t1 = Polynomial::variable("t1");
    Polynomial t2 = Polynomial::variable("t2");
    Polynomial t12 = Polynomial::variable("t12");

    // subring generators of the invariant component
    std::vector<Polynomial> ring = {t1 * t1, t2 * t2, t12 * t12, t1 * t2 * t12};

    struct Component {
        std::string name;
        std::pair<int, int> weight;
        std::vector<Polynomial> module_gens;  // empty means the subring itself
    };
    std::vector<Component> components = {
        {"R00 = C[t1^2, t2^2, t12^2, t1 t2 t12]", {0, 0}, {}},
        {"R10 = R00<t1, t2 t12>", {1, 0}, {t1, t2 * t12}},
        {"R01 = R00<t2, t1 t12>", {0, 1}, {t2, t1 * t12}},
        {"R11 = R00<t12, t1 t2>", {1, 1}, {t12, t1 * t2}},
    };

    std::vector<Verdict> out;
    for (const Component& comp : components) {
        bool ok = true;
        std::string detail;
        for (int d = 0; d <= max_degree; ++d) {
            std::vector<Monomial> target = weighted_monomials(vars, weights, d, comp.weight);
            if (target.empty()) continue;
            std::vector<Polynomial> span;
            if (comp.module_gens.empty()) {
                // products of the four subring generators of total degree d
                std::vector<std::string> names = {"u1", "u2", "u3", "u4"};
                std::vector<int> gw = {2, 2, 2, 3};
                std::vector<std::vector<int>> exps;
                std::vector<int> current(4, 0);
                enumerate_weighted(names, gw, d, 0, current, exps);
                for (const std::vector<int>& e : exps) {
                    Polynomial prod(1);
                    for (int k = 0; k < 4; ++k) prod = prod * ring[static_cast<std::size_t>(k)].pow(e[k]);
                    span.push_back(prod);
                }
            } else {
                for (const Polynomial& u : comp.module_gens) {
                    int du = u.total_degree();
                    if (du > d) continue;
                    for (const Monomial& m : weighted_monomials(vars, weights, d - du, {0, 0}))
                        span.push_back(Polynomial(m) * u);
                }
            }
            int r = span_rank(span, target);
            if (r != static_cast<int>(target.size())) {
                ok = false;
                detail += "degree " + std::to_string(d) + ": rank " + std::to_string(r) + " of " +
                          std::to_string(target.size()) + "; ";
            }
        }
        out.push_back({comp.name, ok, detail});
    }
    return out;
}

std::vector<Verdict> verify_module_generation(int max_degree) {
    std::vector<std::string> vars;
    std::map<std::string, std::pair<int, int>> weights;
    for (int copy = 1; copy <= 2; ++copy) {
        vars.push_back(tau("t1", copy));
        vars.push_back(tau("t2", copy));
        vars.push_back(tau("t12", copy));
        weights[tau("t1", copy)] = {1, 0};
        weights[tau("t2", copy)] = {0, 1};
        weights[tau("t12", copy)] = {1, 1};
    }

    MonomialMap map = so4_generator_map();
    PQSplit split = pq_split_so4();
    std::vector<Polynomial> module_gens;
    for (const Polynomial& t : split.t) module_gens.push_back(apply_map(map, t));

    std::vector<Verdict> out;
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<Monomial> target = weighted_monomials(vars, weights, d, {0, 0});
        if (target.empty()) continue;
        std::vector<Polynomial> span;
        for (const Polynomial& t : module_gens) {
            int dt = t.total_degree();
            if (dt > d) continue;
            // trace-algebra coefficients: symmetrized invariant monomials
            for (const Monomial& m : weighted_monomials(vars, weights, d - dt, {0, 0})) {
                Polynomial coeff = Polynomial(m) + sigma_tau(Polynomial(m));
                span.push_back(coeff * t);
            }
        }
        int r = span_rank(span, target);
        bool ok = r == static_cast<int>(target.size());
        out.push_back({"degree " + std::to_string(d), ok,
                       "rank " + std::to_string(r) + " of " + std::to_string(target.size())});
    }
    return out;
}

}  // namespace charvar
