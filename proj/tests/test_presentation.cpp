#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "charvar/presentation.hpp"

using namespace charvar;

TEST_CASE("generator maps") {
    MonomialMap so4 = so4_generator_map();
    CHECK(so4.names.size() == 17);
    CHECK(so4.image("a1_12") == Monomial::variable("t1_1") * Monomial::variable("t1_2"));
    CHECK(so4.image("b_11") == Monomial(std::map<std::string, int>{{"t12_1", 2}}));
    CHECK(so4.image("c_121") ==
          Monomial::variable("t1_1") * Monomial::variable("t2_2") * Monomial::variable("t12_1"));
    CHECK(so4.degree("a1_11") == 2);
    CHECK(so4.degree("c_222") == 3);

    MonomialMap psl2 = psl2_generator_map();
    CHECK(psl2.names.size() == 4);
    CHECK(psl2.image("g4") ==
          Monomial::variable("t1") * Monomial::variable("t2") * Monomial::variable("t12"));
}

TEST_CASE("all relation instances map to zero") {
    MonomialMap so4 = so4_generator_map();
    auto rels = so4_relations();
    CHECK(rels.size() == 63);
    for (const RelationVerdict& v : verify_relations(so4, rels)) {
        INFO(v.name);
        CHECK(v.zero);
    }
    std::set<std::string> names;
    for (const Relation& r : rels) names.insert(r.name);
    CHECK(names.size() == rels.size());

    MonomialMap psl2 = psl2_generator_map();
    for (const RelationVerdict& v : verify_relations(psl2, psl2_relations())) CHECK(v.zero);
}

TEST_CASE("a non-relation leaves a residual") {
    MonomialMap so4 = so4_generator_map();
    Polynomial bogus = Polynomial::variable("a1_11") - Polynomial::variable("b_11");
    Polynomial residual = apply_map(so4, bogus);
    CHECK(residual == Polynomial::parse("t1_1^2 - t12_1^2"));
}

TEST_CASE("completeness certificates at the standard bounds") {
    CompletenessCertificate psl2 =
        completeness_certificate(psl2_generator_map(), psl2_relations(), 12);
    CHECK(psl2.complete);

    CompletenessCertificate so4 = completeness_certificate(so4_generator_map(), so4_relations(), 8);
    CHECK(so4.complete);
    for (const DegreeCertificate& d : so4.per_degree) {
        CHECK(d.complete);
        CHECK(d.kernel_dim == d.span_rank);
    }
}

TEST_CASE("dropping the cc family breaks completeness exactly at degree 6") {
    CompletenessCertificate mutated =
        completeness_certificate(so4_generator_map(), so4_relations({1, 2, 4, 5, 6}), 8);
    CHECK_FALSE(mutated.complete);
    int first_failure = 0;
    for (const DegreeCertificate& d : mutated.per_degree)
        if (!d.complete && first_failure == 0) first_failure = d.degree;
    CHECK(first_failure == 6);
}

TEST_CASE("certificate agrees with generic linear algebra at low degree") {
    MonomialMap map = so4_generator_map();
    auto rels = so4_relations();
    CompletenessCertificate cert = completeness_certificate(map, rels, 5);

    for (const DegreeCertificate& d : cert.per_degree) {
        // degree-d piece of the map as an explicit matrix over the source
        // monomials, target indexed by tau-monomials
        auto sources = generator_monomials(map, d.degree);
        REQUIRE(static_cast<long>(sources.size()) == d.source_monomials);
        std::map<Monomial, int> target_index;
        std::vector<Monomial> images;
        for (const auto& expo : sources) {
            Monomial img;
            for (std::size_t k = 0; k < expo.size(); ++k)
                for (int rep = 0; rep < expo[k]; ++rep) img = img * map.image(map.names[k]);
            images.push_back(img);
            target_index.emplace(img, static_cast<int>(target_index.size()));
        }
        if (sources.empty()) continue;
        ScalarMatrix m(static_cast<int>(target_index.size()), static_cast<int>(sources.size()));
        for (std::size_t c = 0; c < sources.size(); ++c)
            m.at(target_index.at(images[c]), static_cast<int>(c)) = 1;
        CHECK(static_cast<long>(kernel_basis(m).size()) == d.kernel_dim);
    }
}

TEST_CASE("sigma action on generators") {
    CHECK(sigma_action(Polynomial::variable("c_112")) == Polynomial::variable("c_221"));
    CHECK(sigma_action(Polynomial::variable("a1_12")) == Polynomial::variable("a1_12"));
    CHECK(sigma_action(Polynomial::variable("a1_11")) == Polynomial::variable("a1_22"));
    CHECK(sigma_action(Polynomial::variable("b_12")) == Polynomial::variable("b_12"));
    Polynomial mixed = Polynomial::parse("c_111*b_11 - 2*a2_12");
    CHECK(sigma_action(sigma_action(mixed)) == mixed);

    // compatible with the tau-level swap through the monomial map
    MonomialMap so4 = so4_generator_map();
    for (const std::string& name : so4.names) {
        Polynomial g = Polynomial::variable(name);
        CHECK(apply_map(so4, sigma_action(g)) == sigma_tau(apply_map(so4, g)));
    }
}

TEST_CASE("pq split of the SO(4) generators") {
    PQSplit split = pq_split_so4();
    REQUIRE(split.t.size() == 8);  // t0 = 1 plus the seven differences
    CHECK(split.t[0] == Polynomial(1));
    CHECK(split.t[1] == Polynomial::parse("c_112 - c_221"));
    CHECK(split.t[7] == Polynomial::parse("c_111 - c_222"));

    // p-part: sigma-symmetrizations, including the diagonal traces
    auto contains = [&](const Polynomial& p) {
        return std::find(split.p.begin(), split.p.end(), p) != split.p.end();
    };
    CHECK(contains(Polynomial::parse("a1_11 + a1_22")));
    CHECK(contains(Polynomial::parse("a2_11 + a2_22")));
    CHECK(contains(Polynomial::parse("2*a1_12")));
    for (const Polynomial& p : split.p) CHECK(sigma_action(p) == p);
    for (const Polynomial& q : split.q) CHECK(sigma_action(q) == -q);
}

TEST_CASE("t identities and the verbatim list") {
    for (const Verdict& v : verify_t_identities()) {
        INFO(v.name << " " << v.detail);
        CHECK(v.ok);
    }
}

TEST_CASE("full trace algebra membership") {
    for (const Verdict& v : verify_ft_generators()) {
        INFO(v.name << " " << v.detail);
        CHECK(v.ok);
    }
}

TEST_CASE("independence ranks") {
    IndependenceReport report = independence_certificate();
    CHECK(report.ok);
    CHECK(report.rank_ft == 5);
    CHECK(report.rank_with == std::vector<int>{6, 6, 6});
    CHECK(report.rank_all == 8);
    CHECK(report.contains_c112_plus_c221);
}

TEST_CASE("module decompositions and generation through degree 6") {
    for (const Verdict& v : verify_module_decompositions(6)) {
        INFO(v.name << " " << v.detail);
        CHECK(v.ok);
    }
    for (const Verdict& v : verify_module_generation(6)) {
        INFO(v.name << " " << v.detail);
        CHECK(v.ok);
    }
}
