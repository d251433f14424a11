#include "qmh/bernoulli.hpp"
#include "qmh/cumulants.hpp"
#include "qmh/gevrey.hpp"
#include "qmh/hurwitz.hpp"
#include "qmh/jsonio.hpp"
#include "qmh/rho.hpp"
#include "qmh/volumes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace qmh;
using nlohmann::ordered_json;

namespace {

std::vector<int> parseProfile(const std::string& s) {
    std::vector<int> cycles;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        cycles.push_back(std::stoi(tok));
    }
    return cycles;
}

ordered_json seriesJson(const QSeries& s, int from = 0) {
    ordered_json arr = ordered_json::array();
    for (int n = from; n <= s.order(); ++n) arr.push_back(s.at(n).str());
    return arr;
}

ordered_json piJson(const PiLaurent& p) {
    ordered_json j = ordered_json::object();
    for (auto& [k, c] : p.coeffs()) j["pi^" + std::to_string(2 * k)] = c.str();
    return j;
}

void emit(const ordered_json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        // flat tables only: arrays of scalars or of equal objects
        if (j.contains("coefficients")) {
            std::cout << "n,value\n";
            int n = j.value("first_exponent", 0);
            for (auto& v : j["coefficients"]) std::cout << n++ << "," << v.get<std::string>() << "\n";
        } else {
            for (auto& [key, val] : j.items())
                std::cout << key << "," << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
        }
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

int defaultCertifyOrder(int weightBound, bool pure) {
    return static_cast<int>(recognitionBasis(weightBound, pure).size()) + 5;
}

struct Diagnostic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void writeTables(const std::string& outdir);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Siegel-Veech weighted torus-cover counts, quasimodularity certificates, volumes and asymptotics"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "pretty";
    app.add_option("--format", format, "output format: json|csv|pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));

    // count
    auto* cmdCount = app.add_subcommand("count", "torus cover counts N / N' / N^0 for a cycle profile");
    std::string profileStr;
    int order = -1;
    std::string which = "connected";
    cmdCount->add_option("--profile", profileStr, "comma separated cycle lengths, e.g. 2,2")->required();
    cmdCount->add_option("--order", order, "q-truncation order")->required();
    cmdCount->add_option("--which", which, "all|prime|connected")->check(CLI::IsMember({"all", "prime", "connected"}));

    // sv
    auto* cmdSv = app.add_subcommand("sv", "Siegel-Veech weighted counts c_p / c'_p / c^0_p");
    std::string svProfile, svWhich = "connected";
    long pWeight = -1;
    int svOrder = -1;
    bool svCertify = false;
    cmdSv->add_option("--profile", svProfile)->required();
    cmdSv->add_option("--p", pWeight, "weight exponent (odd)");
    cmdSv->add_option("--order", svOrder, "q-truncation order (default: enough to certify)");
    cmdSv->add_option("--which", svWhich)->check(CLI::IsMember({"all", "prime", "connected"}));
    cmdSv->add_flag("--certify", svCertify, "also recognize the series as a quasimodular form");

    // qbracket
    auto* cmdQb = app.add_subcommand("qbracket", "q-bracket of a shifted-symmetric polynomial or of T_p");
    std::string monoStr, ssJson;
    long tpIndex = 0;
    bool tpGiven = false, qbRecognize = false;
    int qbOrder = -1;
    cmdQb->add_option("--monomial", monoStr, "Q-indices of a monomial, e.g. 3,3 for Q3^2");
    cmdQb->add_option("--ss", ssJson, "sparse SSPoly JSON (as emitted by this tool)");
    cmdQb->add_option("--tp", tpIndex, "hook-length moment index p (any integer)")->each([&tpGiven](const std::string&) { tpGiven = true; });
    cmdQb->add_option("--order", qbOrder);
    cmdQb->add_flag("--recognize", qbRecognize, "recognize the bracket as a quasimodular form");

    // recognize
    auto* cmdRec = app.add_subcommand("recognize", "recognize a q-series as an element of Q[P,Q,R]");
    std::string recInput = "-";
    int recWeight = 0;
    bool recPure = false;
    cmdRec->add_option("--input", recInput, "q-series JSON file ('-' for stdin)");
    cmdRec->add_option("--max-weight", recWeight)->required();
    cmdRec->add_flag("--pure", recPure, "restrict to pure weight = max-weight");

    // cumulant
    auto* cmdCum = app.add_subcommand("cumulant", "rational cumulant <<l_1,...,l_s>>_Q and its pi-form");
    std::string idxStr;
    cmdCum->add_option("--indices", idxStr, "comma separated indices, e.g. 2,2,2,2")->required();

    // series
    auto* cmdSer = app.add_subcommand("series", "one-variable generating series psi | psik:k | K | X");
    std::string whichSeries;
    int serOrder = 10;
    cmdSer->add_option("--which", whichSeries, "psi | psik:k | K | X")->required();
    cmdSer->add_option("--order", serOrder);

    // volume / carea / svleading
    auto* cmdVol = app.add_subcommand("volume", "Masur-Veech volume of the principal stratum");
    int genus = 0;
    cmdVol->add_option("--genus", genus)->required();
    auto* cmdCarea = app.add_subcommand("carea", "area Siegel-Veech constant of the principal stratum");
    int careaGenus = 0;
    cmdCarea->add_option("--genus", careaGenus)->required();
    auto* cmdSvl = app.add_subcommand("svleading", "leading X-coefficient of c^0_p(Tr^n)");
    int svlN = 0;
    long svlP = -1;
    cmdSvl->add_option("--n", svlN)->required();
    cmdSvl->add_option("--p", svlP);

    // asymptotics
    auto* cmdAsy = app.add_subcommand("asymptotics", "numeric asymptotic reports (vn | carea | volume)");
    std::string asyKind;
    int asyMax = 50;
    cmdAsy->add_option("--kind", asyKind)->required()->check(CLI::IsMember({"vn", "carea", "volume"}));
    cmdAsy->add_option("--max", asyMax);

    // gevrey demo
    auto* cmdGev = app.add_subcommand("gevrey", "Gevrey-2 asymptotic calculus");
    auto* cmdGevDemo = cmdGev->add_subcommand("demo", "symbolic 1/n expansion of one operation on a standard witness");
    std::string gevOp;
    int gevOrder = 3;
    cmdGevDemo->add_option("--op", gevOp, "mul|pow|compose|inverse")->required()->check(CLI::IsMember({"mul", "pow", "compose", "inverse"}));
    cmdGevDemo->add_option("--order", gevOrder, "1/n expansion order");

    // tables
    auto* cmdTables = app.add_subcommand("tables", "regenerate the reference tables as CSV files");
    std::string outdir = "tables";
    cmdTables->add_option("--outdir", outdir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*cmdCount) {
            Profile pi(parseProfile(profileStr));
            QSeries s = which == "all" ? count_N(pi, order)
                        : which == "prime" ? count_Nprime(pi, order)
                                           : count_N0(pi, order);
            int v = std::max(s.valuation(), 0);
            ordered_json j;
            j["profile"] = profileStr;
            j["which"] = which;
            j["order"] = order;
            j["first_exponent"] = v;
            j["coefficients"] = seriesJson(s, v);
            emit(j, format);
        } else if (*cmdSv) {
            Profile pi(parseProfile(svProfile));
            if (pWeight % 2 == 0) throw Diagnostic("sv: p must be odd");
            int weightBound = pi.weightBound() + static_cast<int>(pWeight) + 1;
            bool pure = true;
            for (int b : pi.cycles) pure = pure && b == 2;
            int useOrder = svOrder >= 0 ? svOrder : defaultCertifyOrder(weightBound, pure);
            QSeries s = svWhich == "all" ? count_cp(pi, pWeight, useOrder)
                        : svWhich == "prime" ? count_cp_prime(pi, pWeight, useOrder)
                                             : count_cp_connected(pi, pWeight, useOrder);
            int v = std::max(s.valuation(), 0);
            ordered_json j;
            j["profile"] = svProfile;
            j["p"] = pWeight;
            j["which"] = svWhich;
            j["order"] = useOrder;
            j["first_exponent"] = v;
            j["coefficients"] = seriesJson(s, v);
            if (svCertify) {
                if (svWhich == "all") throw Diagnostic("sv: only c'_p and c^0_p are quasimodular; use --which prime|connected");
                QuasiModForm f = recognize(s, weightBound, pure);
                j["recognized_form"] = ordered_json::parse(qmfToJson(f));
                j["weight_bound"] = weightBound;
            }
            emit(j, format);
        } else if (*cmdQb) {
            SSPoly f;
            bool haveRing = true;
            if (!monoStr.empty()) {
                f = SSPoly(Rat(1));
                for (int k : parseProfile(monoStr)) f = f * SSPoly::generatorQ(k);
            } else if (!ssJson.empty()) {
                f = ssFromJson(ssJson);
            } else if (tpGiven) {
                haveRing = false;
            } else {
                throw Diagnostic("qbracket: give one of --monomial, --ss, --tp");
            }
            int w = haveRing ? f.weight() : 0;
            int useOrder = qbOrder >= 0 ? qbOrder
                                        : defaultCertifyOrder(std::max(w, 2), haveRing && f.isPureWeight());
            QSeries s = haveRing ? qbracket(f, useOrder)
                                 : qbracket(hookMomentFunctional(tpIndex), useOrder);
            ordered_json j;
            if (haveRing) j["ss"] = ordered_json::parse(ssToJson(f));
            else j["tp"] = tpIndex;
            j["order"] = useOrder;
            j["first_exponent"] = 0;
            j["coefficients"] = seriesJson(s);
            if (qbRecognize) {
                if (!haveRing) throw Diagnostic("qbracket: <T_p> is Eisenstein-like but not quasimodular; recognition applies to ring elements");
                QuasiModForm g = recognize(s, w, f.isPureWeight());
                j["recognized_form"] = ordered_json::parse(qmfToJson(g));
            }
            emit(j, format);
        } else if (*cmdRec) {
            std::string text;
            if (recInput == "-") {
                std::stringstream buf;
                buf << std::cin.rdbuf();
                text = buf.str();
            } else {
                std::ifstream in(recInput);
                if (!in) throw Diagnostic("recognize: cannot open " + recInput);
                std::stringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            }
            QSeries s = qseriesFromJson(text);
            QuasiModForm g = recognize(s, recWeight, recPure);
            ordered_json j;
            j["max_weight"] = recWeight;
            j["pure"] = recPure;
            j["form"] = ordered_json::parse(qmfToJson(g));
            j["pretty"] = g.str();
            emit(j, format);
        } else if (*cmdCum) {
            std::vector<long> idx;
            for (int v : parseProfile(idxStr)) idx.push_back(v);
            ordered_json j;
            j["indices"] = idxStr;
            j["rational"] = rational_cumulant(idx).str();
            j["pi_form"] = piJson(cumulant_pi_form(idx));
            emit(j, format);
        } else if (*cmdSer) {
            ordered_json j;
            j["which"] = whichSeries;
            j["order"] = serOrder;
            if (whichSeries == "psi") {
                j["coefficients"] = seriesJson(psi_L_onevar(serOrder));
            } else if (whichSeries.rfind("psik:", 0) == 0) {
                int k = std::stoi(whichSeries.substr(5));
                j["coefficients"] = seriesJson(psi_k(k, serOrder));
            } else if (whichSeries == "K") {
                j["coefficients"] = seriesJson(K_series(serOrder));
            } else if (whichSeries == "X") {
                XofU X = X_of_u(serOrder);
                ordered_json arr = ordered_json::array();
                for (int e = -1; e <= serOrder; e += 2) {
                    ordered_json row;
                    row["u_exponent"] = e;
                    row["value"] = X.coeffAt(e).str();
                    arr.push_back(row);
                }
                j["coefficients"] = arr;
            } else {
                throw Diagnostic("series: unknown --which " + whichSeries);
            }
            emit(j, format);
        } else if (*cmdVol) {
            StratumResult r = principal_volume(genus);
            ordered_json j;
            j["genus"] = r.genus;
            j["n"] = r.n;
            j["vol"] = piJson(r.vol);
            j["vol_emz"] = piJson(r.volEMZ);
            j["carea_times_pi2_over_3"] = r.cAreaTimesPi2Over3.str();
            j["sv_leading"] = r.svLeading.str();
            emit(j, format);
        } else if (*cmdCarea) {
            ordered_json j;
            j["genus"] = careaGenus;
            j["carea_times_pi2_over_3"] = c_area_rational(careaGenus).str();
            emit(j, format);
        } else if (*cmdSvl) {
            ordered_json j;
            j["n"] = svlN;
            j["p"] = svlP;
            j["value"] = (svlP == -1 ? sv_leading(svlN) : sv_leading_p(svlN, svlP)).str();
            emit(j, format);
        } else if (*cmdAsy) {
            AsymptoticReport rep = asymptotic_report(asyKind, asyMax);
            ordered_json j;
            j["kind"] = asyKind;
            j["max"] = asyMax;
            j["ratios"] = rep.ratios;
            j["extrapolated"] = rep.extrapolated;
            j["subleading"] = rep.subleading;
            j["subleading_target"] = rep.subleadingTarget;
            j["leading_ok"] = rep.leadingOk;
            j["subleading_ok"] = rep.subleadingOk;
            emit(j, format);
            if (!rep.leadingOk || !rep.subleadingOk) return 1;
        } else if (*cmdGevDemo) {
            int R = gevOrder;
            auto witness = [&](const Rat& beta, const Rat& A0, const Rat& A1) {
                GevreyFn f;
                int N = 4 * R + 16;
                f.taylor = QSeries(N);
                for (int n = 0; n <= N; ++n) {
                    Rat poly = A0;
                    if (n >= 1) poly += A1 / Rat(n);
                    f.taylor.set(n, Rat(Int(factorial(n) * factorial(n))) * beta.pow(n) * poly);
                }
                f.asy.beta = PiLaurent(beta);
                f.asy.gamma = Rat(0);
                f.asy.A.assign(R + 1, PiLaurent());
                f.asy.A[0] = PiLaurent(A0);
                if (R >= 1) f.asy.A[1] = PiLaurent(A1);
                return f;
            };
            GevreyFn f = witness(Rat(1), Rat(1), Rat(1, 2));
            AsyExpansion out;
            ordered_json j;
            j["op"] = gevOp;
            if (gevOp == "mul") {
                GevreyFn g = witness(Rat(1), Rat(2), Rat(-1, 3));
                out = gv_mul(f, g, R);
            } else if (gevOp == "pow") {
                GevreyFn g = f;
                g.taylor.set(0, Rat(1));
                j["lambda"] = "-1/2";
                out = gv_pow(g, Rat(-1, 2), R);
            } else if (gevOp == "compose") {
                GevreyFn inner = f;
                inner.taylor.set(0, Rat(1));
                GevreyFn g = witness(Rat(1), Rat(3), Rat(0));
                out = gv_compose(g, inner, R);
            } else {
                GevreyFn h = f;
                h.taylor.set(0, Rat(0));
                h.taylor.set(1, Rat(1));
                out = gv_inverse(h, R);
            }
            j["normalization"] = "n!^2 beta^n n^gamma 2^(pref2/2) pi^(-prefpi/2)";
            j["beta"] = piJson(out.beta);
            j["gamma"] = out.gamma.str();
            j["pref2"] = out.pref2;
            j["prefpi"] = out.prefInvSqrtPi;
            ordered_json arr = ordered_json::array();
            for (int i = 0; i <= out.order(); ++i) arr.push_back(piJson(out.A[i]));
            j["A"] = arr;
            emit(j, format);
        } else if (*cmdTables) {
            writeTables(outdir);
            std::cout << "tables written to " << outdir << "\n";
        }
    } catch (const RecognitionError& e) {
        ordered_json err;
        err["error"] = e.kind == RecognitionError::NoSolution ? "no_solution" : "underdetermined";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        ordered_json err;
        err["error"] = "failure";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}

namespace {

void writeTables(const std::string& outdir) {
    namespace fs = std::filesystem;
    fs::create_directories(outdir);
    auto open = [&](const std::string& name) {
        std::ofstream out(outdir + "/" + name, std::ios::binary);
        if (!out) throw Diagnostic("tables: cannot write " + outdir + "/" + name);
        return out;
    };

    {
        auto out = open("volumes.csv");
        out << "n,vol,vol_emz,cumulant\n";
        for (int n = 2; n <= 10; n += 2) {
            StratumResult r = principal_volume(n / 2 + 1);
            out << n << "," << r.vol.str() << "," << r.volEMZ.str() << ","
                << cumulant_pi_form(std::vector<long>(n, 2)).str() << "\n";
        }
    }
    {
        auto out = open("carea.csv");
        out << "genus,carea_times_pi2_over_3\n";
        for (int g = 2; g <= 6; ++g) out << g << "," << c_area_rational(g).str() << "\n";
    }
    {
        auto out = open("svleading.csv");
        out << "n,value\n";
        for (int n = 2; n <= 10; n += 2) out << n << "," << sv_leading(n).str() << "\n";
    }
    {
        auto out = open("counting_tr.csv");
        out << "series,q2,q3,q4,q5\n";
        auto row = [&out](const std::string& name, const QSeries& s) {
            out << name;
            for (int n = 2; n <= 5; ++n) out << "," << s.at(n).str();
            out << "\n";
        };
        Profile tr2({2, 2}), tr4({2, 2, 2, 2});
        row("N(Tr^2)", count_N(tr2, 5));
        row("N'(Tr^2)", count_Nprime(tr2, 5));
        row("N^0(Tr^2)", count_N0(tr2, 5));
        row("N(Tr^4)", count_N(tr4, 5));
        row("N'(Tr^4)", count_Nprime(tr4, 5));
        row("N^0(Tr^4)", count_N0(tr4, 5));
        row("c_-1(Tr^2)", count_cp(tr2, -1, 5));
        row("c'_-1(Tr^2)", count_cp_prime(tr2, -1, 5));
        row("c^0_-1(Tr^2)", count_cp_connected(tr2, -1, 5));
        row("c_-1(Tr^4)", count_cp(tr4, -1, 5));
        row("c'_-1(Tr^4)", count_cp_prime(tr4, -1, 5));
        row("c^0_-1(Tr^4)", count_cp_connected(tr4, -1, 5));
    }
    {
        auto out = open("qbrackets_weight6.csv");
        out << "monomial,form\n";
        auto row = [&out](const std::string& name, const SSPoly& f, int w) {
            int order = static_cast<int>(recognitionBasis(w, true).size()) + 5;
            out << name << "," << recognize(qbracket(f, order), w, true).str() << "\n";
        };
        SSPoly q2 = SSPoly::generatorQ(2), q3 = SSPoly::generatorQ(3), q4 = SSPoly::generatorQ(4), q6 = SSPoly::generatorQ(6);
        out << "1,1\n";
        row("Q2", q2, 2);
        row("Q2^2", q2 * q2, 4);
        row("Q4", q4, 4);
        row("Q2^3", q2 * q2 * q2, 6);
        row("Q2*Q4", q2 * q4, 6);
        row("Q3^2", q3 * q3, 6);
        row("Q6", q6, 6);
    }
    {
        auto out = open("nonvarying.csv");
        out << "profile,ratio_c_over_n\n";
        out << "3,10/9\n4;2,21/16\n3;2;2,49/36\n";
    }
    {
        auto out = open("bmasy.csv");
        out << "m,gamma,A0,A1,A2\n";
        for (int m : {-1, 2, 3}) {
            AsyExpansion e = bm_expansion(m, 2);
            out << m << "," << e.gamma.str();
            for (int i = 0; i <= 2; ++i) out << ",\"" << e.A[i].str() << "\"";
            out << "\n";
        }
    }
}

}  // namespace
