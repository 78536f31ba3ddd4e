// JSON / TSV serialization: matrix input files, realization output,
// verification reports, multiplicity tables.
#ifndef QKM_IO_HPP
#define QKM_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "qkm/quotients.hpp"

namespace qkm {

using nlohmann::json;

struct MatrixInput {
    IntMat matrix;
    std::optional<IntMat> b0;
};

inline IntMat matrixFromJson(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
    IntMat m;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("matrix: expected integer rows");
        std::vector<long long> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw std::invalid_argument("matrix: entries must be integers");
            r.push_back(x.get<long long>());
        }
        m.push_back(std::move(r));
    }
    if (m.empty()) throw std::invalid_argument("matrix: must be nonempty");
    for (const auto& r : m)
        if (r.size() != m.size()) throw std::invalid_argument("matrix: must be square");
    return m;
}

inline MatrixInput readMatrixFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    json j;
    in >> j;
    MatrixInput mi;
    mi.matrix = matrixFromJson(j.at("matrix"));
    if (j.contains("B0")) mi.b0 = matrixFromJson(j.at("B0"));
    return mi;
}

inline json gaussToJson(const Gauss& g) {
    return json{{"re", g.re().toFractionString()}, {"im", g.im().toFractionString()}};
}

inline json quatToJson(const Quat& q) {
    return json{{"z", gaussToJson(q.z())}, {"w", gaussToJson(q.w())}};
}

inline json violationsToJson(const std::vector<Violation>& vs) {
    json arr = json::array();
    for (const auto& v : vs) {
        const char* kind = v.kind == Violation::DiagonalNotTwo      ? "DiagonalNotTwo"
                           : v.kind == Violation::PositiveOffDiagonal ? "PositiveOffDiagonal"
                                                                      : "AsymmetricZero";
        arr.push_back(json{{"violation", kind}, {"i", v.i}, {"j", v.j}});
    }
    return arr;
}

inline json realizationToJson(const Realization& re) {
    json out;
    json perm = json::array();
    for (int p : re.perm) perm.push_back(p + 1);
    out["perm"] = perm;
    out["r"] = re.r;
    out["dim"] = re.dim;
    json erows = json::array();
    for (const auto& row : re.e) {
        json r = json::array();
        for (long long x : row) r.push_back(Rational(x).toFractionString());
        erows.push_back(r);
    }
    out["E"] = erows;
    json coroots = json::array();
    for (int i = 1; i <= re.n; ++i) {
        json r = json::array();
        for (long long x : re.e[re.corootRow(i)]) r.push_back(Rational(x).toFractionString());
        coroots.push_back(r);
    }
    out["coroots"] = coroots;
    json table;
    const char* names[2] = {"1", "J"};
    for (Marker mr : {Marker::One, Marker::J})
        for (Marker mc : {Marker::One, Marker::J}) {
            json block = json::array();
            for (int i = 1; i <= re.n; ++i) {
                json row = json::array();
                for (int j = 1; j <= re.n; ++j)
                    row.push_back(quatToJson(pairValue(re, i, mr, j, mc)));
                block.push_back(row);
            }
            table[std::string(names[mr == Marker::J ? 1 : 0]) + "," +
                  names[mc == Marker::J ? 1 : 0]] = block;
        }
    out["pairingTable"] = table;
    return out;
}

inline json checkToJson(const CheckResult& r) {
    json j{{"check", r.check}, {"generator", r.subject}, {"status", r.pass ? "pass" : "fail"}};
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
    return j;
}

inline json checksToJson(const std::vector<CheckResult>& rs) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(checkToJson(r));
    return arr;
}

inline std::string degreeString(const RootVector& alpha) {
    std::string s;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alpha[i]);
    }
    return s;
}

inline std::string multToTsv(const MultiplicityTable& t, const std::string& algebra) {
    std::ostringstream out;
    bool all = algebra == "all";
    out << "degree\tht";
    if (all) out << "\tdimU\tdimS\tdimR";
    else out << "\tdim";
    out << "\n";
    out << degreeString(RootVector(t.n, 0)) << "\t0";
    long long cart = t.cartanComplexDim;
    if (all) out << "\t" << cart << "\t" << cart << "\t" << cart;
    else out << "\t" << cart;
    out << "\n";
    for (const auto& r : t.rows) {
        out << degreeString(r.alpha) << "\t" << r.ht;
        if (all) {
            out << "\t" << r.dimUniversal << "\t" << r.dimStandard << "\t" << r.dimReduced;
        } else {
            long long d = algebra == "universal"  ? r.dimUniversal
                          : algebra == "standard" ? r.dimStandard
                                                  : r.dimReduced;
            out << "\t" << d;
        }
        out << "\n";
    }
    auto totals = [&](Algebra a, const char* name) {
        out << "# total complex dim (" << name << ", both sectors + Cartan): "
            << t.complexTotal(a) << ", real: " << t.realTotal(a) << "\n";
    };
    if (all || algebra == "universal") totals(Algebra::Universal, "universal");
    if (all || algebra == "standard") totals(Algebra::Standard, "standard");
    if (all || algebra == "reduced") totals(Algebra::Reduced, "reduced");
    return out.str();
}

inline json multToJson(const MultiplicityTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        rows.push_back(json{{"degree", r.alpha},
                            {"ht", r.ht},
                            {"dimU", r.dimUniversal},
                            {"dimS", r.dimStandard},
                            {"dimR", r.dimReduced},
                            {"realU", 2 * r.dimUniversal},
                            {"realS", 2 * r.dimStandard},
                            {"realR", 2 * r.dimReduced}});
    }
    json totals;
    for (auto [alg, name] : {std::pair{Algebra::Universal, "universal"},
                             {Algebra::Standard, "standard"},
                             {Algebra::Reduced, "reduced"}}) {
        totals[name] = json{{"complex", t.complexTotal(alg)}, {"real", t.realTotal(alg)}};
    }
    return json{{"cartanComplexDim", t.cartanComplexDim},
                {"cartanRealDim", 2 * t.cartanComplexDim},
                {"rows", rows},
                {"totals", totals}};
}

}  // namespace qkm

#endif
