// charvar: command-line front end for the charvar core library.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "charvar/matrix.hpp"
#include "charvar/qinv.hpp"
#include "charvar/sl2trace.hpp"
#include "charvar/spin4.hpp"
#include "charvar/verify.hpp"
#include "charvar/words.hpp"
#include "charvar/zerosum.hpp"

namespace {

using namespace charvar;
using ordered_json = nlohmann::ordered_json;

long env_budget() {
    if (const char* raw = std::getenv("CHARVAR_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(raw, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw CLI::ValidationError("CHARVAR_BUDGET must be a positive integer");
    }
    return kDefaultZeroSumBudget;
}

void emit(const std::string& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw CLI::ValidationError("cannot open output file: " + out_path);
    f << report;
}

// "a11,a12;a21,a22" with Polynomial::parse on each entry.
PolyMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<Polynomial>> rows;
    std::stringstream row_stream(text);
    std::string row_text;
    while (std::getline(row_stream, row_text, ';')) {
        std::vector<Polynomial> row;
        std::stringstream entry_stream(row_text);
        std::string entry;
        while (std::getline(entry_stream, entry, ',')) row.push_back(Polynomial::parse(entry));
        if (row.empty()) throw std::invalid_argument("matrix row is empty");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix text is empty");
    PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != m.cols())
            throw std::invalid_argument("matrix rows have unequal lengths");
        for (int c = 0; c < m.cols(); ++c)
            m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return m;
}

std::string matrix_to_string(const PolyMatrix& m) {
    std::ostringstream out;
    for (int r = 0; r < m.rows(); ++r) {
        out << "[";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out << ", ";
            out << m.at(r, c).to_string();
        }
        out << "]\n";
    }
    return out.str();
}

std::string multiset_to_string(const ZeroSumMultiset& ms) {
    std::ostringstream out;
    out << "{";
    for (std::size_t k = 0; k < ms.vectors.size(); ++k) {
        if (k) out << ", ";
        out << "(";
        const auto& e = ms.vectors[k].entries;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j) out << ",";
            out << e[j];
        }
        out << ")";
    }
    out << "}";
    return out.str();
}

// detail "kernel=K span=S" -> dims object; detail "residual ..." -> residual.
void attach_detail(ordered_json& item, const std::string& detail) {
    if (detail.rfind("residual ", 0) == 0) {
        item["residual"] = detail.substr(9);
        return;
    }
    int kernel = 0, span = 0;
    if (std::sscanf(detail.c_str(), "kernel=%d span=%d", &kernel, &span) == 2) {
        item["dims"] = ordered_json{{"kernel", kernel}, {"span", span}};
        return;
    }
    if (!detail.empty()) item["detail"] = detail;
}

std::string verify_report_text(const std::vector<SuiteResult>& results) {
    std::ostringstream out;
    for (const SuiteResult& suite : results) {
        out << "suite " << suite.suite << "\n";
        for (const Verdict& v : suite.items) {
            out << "  [" << (v.ok ? "ok" : "fail") << "] " << v.name;
            if (!v.detail.empty()) out << "  (" << v.detail << ")";
            out << "\n";
        }
    }
    int total = 0, failed = 0;
    for (const SuiteResult& suite : results)
        for (const Verdict& v : suite.items) {
            ++total;
            if (!v.ok) ++failed;
        }
    out << total << " checks, " << failed << " failed\n";
    return out.str();
}

std::string verify_report_json(const std::string& requested, const std::vector<SuiteResult>& results,
                               double elapsed_seconds) {
    ordered_json doc;
    doc["suite"] = requested;
    doc["items"] = ordered_json::array();
    for (const SuiteResult& suite : results)
        for (const Verdict& v : suite.items) {
            ordered_json item;
            item["name"] = results.size() > 1 ? suite.suite + "/" + v.name : v.name;
            item["verdict"] = v.ok ? "ok" : "fail";
            attach_detail(item, v.detail);
            doc["items"].push_back(std::move(item));
        }
    doc["elapsed"] = elapsed_seconds;
    return doc.dump(2) + "\n";
}

int run_verify(const std::string& suite, std::uint64_t seed, int degree, long budget, bool json,
               const std::string& out_path) {
    auto start = std::chrono::steady_clock::now();
    std::vector<SuiteResult> results = run_verify_suite(suite, seed, degree, budget);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(json ? verify_report_json(suite, results, elapsed) : verify_report_text(results), out_path);
    for (const SuiteResult& r : results)
        if (!r.all_ok()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on SL(2) traces, the SO(4) spin map, Pfaffian invariants, "
                 "zero-sum generator synthesis, and presentation certificates"};
    app.require_subcommand(1);

    std::string out_path;
    std::uint64_t seed = kDefaultSeed;
    int degree = 0;
    long budget = 0;
    bool json = false;

    std::string word_text, w1_text, w2_text, a_text, b_text, file_path, suite = "all";
    int m = 0, n = 0, k = 0;

    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "write the report to a file"); };

    CLI::App* reduce = app.add_subcommand("reduce", "trace of a free-group word in Fricke coordinates");
    reduce->add_option("word", word_text, "word in g1, g2 (e.g. \"g1^2 g2\")")->required();
    add_out(reduce);

    CLI::App* phi_cmd = app.add_subcommand("phi", "image of an SL(2) x SL(2) pair in SO(4)");
    phi_cmd->add_option("--a", a_text, "first 2x2 matrix, \"a11,a12;a21,a22\"")->required();
    phi_cmd->add_option("--b", b_text, "second 2x2 matrix")->required();
    add_out(phi_cmd);

    CLI::App* q4 = app.add_subcommand("q4", "Q_4 of a word pair in the copy-indexed tau-ring");
    q4->add_option("--w1", w1_text, "first word")->required();
    q4->add_option("--w2", w2_text, "second word")->required();
    add_out(q4);

    CLI::App* pf = app.add_subcommand("pfaffian", "Pfaffian of a skew matrix with polynomial entries");
    pf->add_option("--file", file_path, "JSON file: array of rows of polynomial strings")
        ->required()
        ->check(CLI::ExistingFile);
    add_out(pf);

    CLI::App* torus = app.add_subcommand("torus", "Q_2n on the rank-n torus with exponent k");
    torus->add_option("-n", n, "torus rank")->required()->check(CLI::PositiveNumber);
    torus->add_option("-k", k, "eigenvalue exponent")->required();
    add_out(torus);

    CLI::App* zerosum = app.add_subcommand("zerosum", "minimal zero-sum multisets over (Z/m)^N");
    zerosum->add_option("-m", m, "modulus")->required()->check(CLI::PositiveNumber);
    zerosum->add_option("-N", n, "rank")->required()->check(CLI::PositiveNumber);
    zerosum->add_flag("--json", json, "emit JSON");
    zerosum->add_option("--budget", budget, "enumeration budget");
    add_out(zerosum);

    CLI::App* dav = app.add_subcommand("davenport", "Davenport constant of (Z/m)^N");
    dav->add_option("-m", m, "modulus")->required()->check(CLI::PositiveNumber);
    dav->add_option("-N", n, "rank")->required()->check(CLI::PositiveNumber);
    dav->add_option("--budget", budget, "enumeration budget");
    add_out(dav);

    CLI::App* synth = app.add_subcommand("synth", "generator products from a weighted basis");
    synth->add_option("--spec", file_path, "JSON file: {m, N, generators: [{name, weight, kind}]}")
        ->required()
        ->check(CLI::ExistingFile);
    synth->add_flag("--json", json, "emit JSON");
    synth->add_option("--budget", budget, "enumeration budget");
    add_out(synth);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify
        ->add_option("--suite", suite,
                     "one of relations, completeness, t-identities, ft-generators, independence, "
                     "spin, traces, qinv, zerosum, all")
        ->default_val("all");
    verify->add_option("--degree", degree, "degree bound for completeness certificates");
    verify->add_option("--seed", seed, "seed for the randomized checks");
    verify->add_option("--budget", budget, "enumeration budget");
    verify->add_flag("--json", json, "emit JSON");
    add_out(verify);

    CLI::App* all = app.add_subcommand("all", "run every verification suite");
    all->add_option("--seed", seed, "seed for the randomized checks");
    all->add_flag("--json", json, "emit JSON");
    add_out(all);

    try {
        app.parse(argc, argv);

        if (budget <= 0) budget = env_budget();

        if (*reduce) {
            emit(reduce_trace(FreeWord::parse(word_text, 2)).to_string() + "\n", out_path);
        } else if (*phi_cmd) {
            PolyMatrix a = parse_matrix(a_text);
            PolyMatrix b = parse_matrix(b_text);
            emit(matrix_to_string(phi(a, b)), out_path);
        } else if (*q4) {
            FreeWord u = FreeWord::parse(w1_text, 2);
            FreeWord v = FreeWord::parse(w2_text, 2);
            emit(q4_tau(u, v).to_string() + "\n", out_path);
        } else if (*pf) {
            std::ifstream f(file_path);
            ordered_json doc = ordered_json::parse(f);
            if (!doc.is_array() || doc.empty()) throw std::invalid_argument("expected a JSON array of rows");
            std::ostringstream text;
            for (std::size_t r = 0; r < doc.size(); ++r) {
                if (r) text << ";";
                const auto& row = doc[r];
                if (!row.is_array()) throw std::invalid_argument("expected each row to be a JSON array");
                for (std::size_t c = 0; c < row.size(); ++c) {
                    if (c) text << ",";
                    text << row[c].get<std::string>();
                }
            }
            emit(pfaffian(parse_matrix(text.str())).to_string() + "\n", out_path);
        } else if (*torus) {
            emit(q_torus(n, k).to_string() + "\n", out_path);
        } else if (*zerosum) {
            std::vector<ZeroSumMultiset> sets = minimal_zero_sum_multisets(m, n, budget);
            if (json) {
                ordered_json doc = ordered_json::array();
                for (const ZeroSumMultiset& ms : sets) {
                    ordered_json js_ms = ordered_json::array();
                    for (const ZVector& v : ms.vectors) js_ms.push_back(v.entries);
                    doc.push_back(std::move(js_ms));
                }
                emit(doc.dump(2) + "\n", out_path);
            } else {
                std::ostringstream text;
                for (const ZeroSumMultiset& ms : sets) text << multiset_to_string(ms) << "\n";
                emit(text.str(), out_path);
            }
        } else if (*dav) {
            emit(std::to_string(davenport(m, n, budget)) + "\n", out_path);
        } else if (*synth) {
            std::ifstream f(file_path);
            ordered_json doc = ordered_json::parse(f);
            std::vector<WeightedGenerator> basis;
            for (const auto& g : doc.at("generators"))
                basis.push_back({g.at("name").get<std::string>(),
                                 ZVector{g.at("weight").get<std::vector<int>>()},
                                 g.value("kind", "trace")});
            auto products = synthesize_generators(basis, doc.at("m").get<int>(), doc.at("N").get<int>(),
                                                  budget);
            if (json) {
                ordered_json out_doc = products;
                emit(out_doc.dump(2) + "\n", out_path);
            } else {
                std::ostringstream text;
                for (const auto& product : products) {
                    for (std::size_t j = 0; j < product.size(); ++j) {
                        if (j) text << " * ";
                        text << product[j];
                    }
                    text << "\n";
                }
                emit(text.str(), out_path);
            }
        } else if (*verify) {
            return run_verify(suite, seed, degree, budget, json, out_path);
        } else if (*all) {
            return run_verify("all", seed, 0, budget, json, out_path);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        // normalize CLI11's exit codes: 0 for --help, 2 for usage errors
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
