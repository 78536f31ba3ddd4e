// Batch front door: validate matrices, emit realizations, evaluate brackets,
// run the verification suites, print multiplicity tables.
#ifndef QKM_CLI_HPP
#define QKM_CLI_HPP

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qkm/checks.hpp"
#include "qkm/io.hpp"
#include "qkm/parser.hpp"

namespace qkm::cli {

namespace detail {

inline std::vector<Rational> parseWeight(const std::string& csv, int dim) {
    std::vector<Rational> w;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) w.push_back(Rational::fromString(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (static_cast<int>(w.size()) != dim)
        throw std::invalid_argument("weight must have " + std::to_string(dim) +
                                    " entries (one per Cartan basis row)");
    return w;
}

inline TensorElement psiEval(const Rep& rep, const Engine& eng, const ExprNode& node,
                             const TensorElement& t) {
    switch (node.kind) {
        case ExprNode::Gen: {
            LieElement g = node.genKind == 'e'   ? eng.genE(node.index, node.jmark)
                           : node.genKind == 'f' ? eng.genF(node.index, node.jmark)
                                                 : eng.genH(node.index, node.jmark);
            return rep.actElem(g, t);
        }
        case ExprNode::Bracket: {
            TensorElement ab = psiEval(rep, eng, *node.left, psiEval(rep, eng, *node.right, t));
            TensorElement ba = psiEval(rep, eng, *node.right, psiEval(rep, eng, *node.left, t));
            tensorAccumulate(ab, ba, Gauss(-1));
            return ab;
        }
        case ExprNode::Sum: {
            TensorElement acc;
            for (const auto& [c, sub] : node.terms)
                tensorAccumulate(acc, psiEval(rep, eng, *sub, t), c);
            return acc;
        }
    }
    return {};
}

inline int treeGrowth(const ExprNode& node) {
    switch (node.kind) {
        case ExprNode::Gen:
            return node.genKind == 'f' ? 1 : 0;
        case ExprNode::Bracket:
            return treeGrowth(*node.left) + treeGrowth(*node.right);
        case ExprNode::Sum: {
            int g = 0;
            for (const auto& [c, sub] : node.terms) {
                (void)c;
                g = std::max(g, treeGrowth(*sub));
            }
            return g;
        }
    }
    return 0;
}

inline std::string passLine(const CheckResult& r) {
    std::string s = std::string(r.pass ? "[PASS] " : "[FAIL] ") + r.check + ": " + r.subject;
    if (!r.pass && !r.counterexample.empty()) s += " — " + r.counterexample;
    return s;
}

struct SuiteSummary {
    int passed = 0, failed = 0;
    std::vector<CheckResult> all;

    void add(const CheckResult& r) {
        all.push_back(r);
        (r.pass ? passed : failed)++;
    }
    void add(const std::vector<CheckResult>& rs) {
        for (const auto& r : rs) add(r);
    }
};

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact quaternion Kac-Moody Lie algebra toolkit"};
    app.require_subcommand(1);

    std::string matrixPath, expr, suite = "all", algebra = "all", format = "tsv";
    std::string weightCsv;
    int trunc = 5, maxHeight = 3, jacobiCount = 200, sl2MaxM = 3;
    uint64_t seed = 1;
    bool oracle = false;

    auto addMatrix = [&](CLI::App* sub) {
        sub->add_option("-m,--matrix", matrixPath, "JSON file with {\"matrix\": [[..]]}")
            ->required();
    };

    CLI::App* vcmd = app.add_subcommand("validate", "check the GCM axioms");
    addMatrix(vcmd);
    CLI::App* rcmd = app.add_subcommand("realize", "emit the realization as JSON");
    addMatrix(rcmd);
    CLI::App* bcmd = app.add_subcommand("bracket", "evaluate a bracket expression");
    addMatrix(bcmd);
    bcmd->add_option("-e,--expr", expr, "expression, e.g. [e1,[Je1,f2]]")->required();
    bcmd->add_flag("--oracle", oracle, "re-evaluate through the tensor representation");
    bcmd->add_option("--trunc", trunc, "tensor truncation L (default 5)");
    bcmd->add_option("--weight", weightCsv, "weight values on the Cartan rows, comma separated");
    CLI::App* vercmd = app.add_subcommand("verify", "run verification suites");
    addMatrix(vercmd);
    vercmd->add_option("--suite", suite,
                       "all|relations|jacobi|homomorphism|ideal|sl2|lemma31|nontriviality|quotients");
    vercmd->add_option("--trunc", trunc, "tensor truncation L (default 5)");
    vercmd->add_option("--max-height", maxHeight, "graded computation bound (default 3)");
    vercmd->add_option("--seed", seed, "seed for the randomized suites (default 1)");
    vercmd->add_option("--count", jacobiCount, "number of Jacobi triples (default 200)");
    vercmd->add_option("--sl2-max-m", sl2MaxM, "largest power in the sl2 identity (default 3)");
    vercmd->add_option("--weight", weightCsv, "weight values on the Cartan rows");
    CLI::App* mcmd = app.add_subcommand("mult", "multiplicity table");
    addMatrix(mcmd);
    mcmd->add_option("-a,--algebra", algebra, "universal|standard|reduced|all (default all)");
    mcmd->add_option("--max-height", maxHeight, "height bound (default 3)");
    mcmd->add_option("-f,--format", format, "tsv|json (default tsv)");
    CLI::App* radcmd = app.add_subcommand("radical", "radical components per degree");
    addMatrix(radcmd);
    radcmd->add_option("--max-height", maxHeight, "height bound (default 3)");
    radcmd->add_option("-f,--format", format, "text|json (default text)");

    std::vector<const char*> argv;
    argv.push_back("qkm");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (trunc < 2) {
        err << "--trunc must be at least 2\n";
        return 2;
    }
    if (maxHeight < 1) {
        err << "--max-height must be at least 1\n";
        return 2;
    }
    try {
        MatrixInput input = readMatrixFile(matrixPath);
        ValidationResult vr = validateGcm(input.matrix);

        if (vcmd->parsed()) {
            if (!vr.ok) {
                out << violationsToJson(vr.violations).dump(2) << "\n";
                return 1;
            }
            Realization re = realize(vr.matrix, input.b0);
            out << "valid GCM, n=" << re.n << ", r=" << re.r << "\n";
            return 0;
        }
        if (!vr.ok) {
            err << "input is not a generalized Cartan matrix:\n"
                << violationsToJson(vr.violations).dump(2) << "\n";
            return 2;
        }
        Realization re = realize(vr.matrix, input.b0);
        Engine eng(re);

        if (rcmd->parsed()) {
            out << realizationToJson(re).dump(2) << "\n";
            return 0;
        }

        RepConfig cfg = RepConfig::generic(re, trunc);
        if (!weightCsv.empty()) cfg.weight = detail::parseWeight(weightCsv, re.dim);

        if (bcmd->parsed()) {
            ExprPtr tree;
            try {
                tree = parseTree(eng, expr);
            } catch (const ParseError& e) {
                err << e.what() << "\n";
                return 2;
            }
            Rep rep(eng, cfg);
            bool symbolicOk = true;
            LieElement value;
            try {
                value = evalExpr(eng, *tree);
            } catch (const UnsupportedMarkerPair& e) {
                symbolicOk = false;
                if (!oracle) {
                    err << e.what() << "\n";
                    return 1;
                }
            }
            if (symbolicOk) out << eng.toString(value) << "\n";
            if (oracle) {
                int slack = detail::treeGrowth(*tree) + (symbolicOk ? Rep::growthOf(value) : 0);
                int maxLen = std::max(cfg.truncation - std::max(slack, 1), 0);
                if (symbolicOk) {
                    bool agree = true;
                    for (const TWord& w : rep.testWords(maxLen)) {
                        TensorElement t{{w, Gauss(1)}};
                        if (rep.actElem(value, t) != detail::psiEval(rep, eng, *tree, t)) {
                            agree = false;
                            break;
                        }
                    }
                    out << "# oracle agreement on words up to length " << maxLen << ": "
                        << (agree ? "yes" : "NO") << "\n";
                    if (!agree) return 1;
                } else {
                    json table = json::object();
                    for (const TWord& w : rep.testWords(std::min(maxLen, 2))) {
                        TensorElement t{{w, Gauss(1)}};
                        TensorElement img = detail::psiEval(rep, eng, *tree, t);
                        json entry = json::array();
                        for (const auto& [tw, c] : img)
                            entry.push_back(json{{"word", twordToString(tw)},
                                                 {"re", c.re().toFractionString()},
                                                 {"im", c.im().toFractionString()}});
                        table[twordToString(w)] = entry;
                    }
                    out << json{{"oracleAction", table}}.dump(2) << "\n";
                }
            }
            return 0;
        }

        if (vercmd->parsed()) {
            Rep rep(eng, cfg);
            detail::SuiteSummary sum;
            bool all = suite == "all";
            if (all || suite == "relations") sum.add(relationTableCheck(eng));
            if (all || suite == "jacobi")
                sum.add(jacobiCheck(eng, jacobiCount, std::min(maxHeight, 4), seed));
            if (all || suite == "homomorphism") sum.add(homomorphismCheck(eng, rep));
            if (all || suite == "ideal") sum.add(rep.idealZeroCheck());
            if (all || suite == "sl2")
                for (int i = 1; i <= eng.n(); ++i)
                    for (int m = 1; m <= sl2MaxM; ++m) sum.add(rep.sl2IdentityCheck(i, m));
            if (all || suite == "nontriviality") sum.add(rep.nontrivialityCheck());
            if (all || suite == "lemma31" || suite == "quotients") {
                Quotients quot(eng, maxHeight);
                if (all || suite == "lemma31") sum.add(lemma31Check(eng, rep, quot));
                if (all || suite == "quotients") sum.add(quotientChecks(quot));
            }
            if (sum.all.empty()) {
                err << "unknown suite: " << suite << "\n";
                return 2;
            }
            for (const auto& r : sum.all)
                if (!r.pass) out << detail::passLine(r) << "\n";
            out << "checks passed: " << sum.passed << "/" << (sum.passed + sum.failed) << "\n";
            out << checksToJson(sum.all).dump(2) << "\n";
            return sum.failed == 0 ? 0 : 1;
        }

        if (mcmd->parsed()) {
            if (algebra != "all" && algebra != "universal" && algebra != "standard" &&
                algebra != "reduced") {
                err << "unknown algebra: " << algebra << "\n";
                return 2;
            }
            Quotients quot(eng, maxHeight);
            MultiplicityTable table = quot.multiplicities();
            if (format == "json") out << multToJson(table).dump(2) << "\n";
            else out << multToTsv(table, algebra);
            return 0;
        }

        if (radcmd->parsed()) {
            Quotients quot(eng, maxHeight);
            json arr = json::array();
            for (const RootVector& alpha : quot.positiveDegrees()) {
                for (int sign : {1, -1}) {
                    RootVector deg = alpha;
                    if (sign < 0)
                        for (int& v : deg) v = -v;
                    GradedComponent comp = quot.radicalComponent(deg);
                    if (format == "json") {
                        json spanRows = json::array();
                        for (const auto& row : comp.span)
                            spanRows.push_back(eng.toString(quot.elementOf(deg, row)));
                        arr.push_back(json{{"degree", deg},
                                           {"ht", heightOf(deg)},
                                           {"freeDim", comp.basis.size()},
                                           {"dim", comp.rank()},
                                           {"span", spanRows}});
                    } else {
                        out << "degree (" << degreeString(deg) << ") ht " << heightOf(deg)
                            << ": dim " << comp.rank() << " of " << comp.basis.size() << "\n";
                        for (const auto& row : comp.span)
                            out << "  " << eng.toString(quot.elementOf(deg, row)) << "\n";
                    }
                }
            }
            if (format == "json") out << arr.dump(2) << "\n";
            return 0;
        }
        err << "no subcommand\n";
        return 2;
    } catch (const TruncationOverflow& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace qkm::cli

#endif
