#include "qmh/bernoulli.hpp"
#include "qmh/cumulants.hpp"
#include "qmh/hurwitz.hpp"
#include "qmh/jsonio.hpp"
#include "qmh/rho.hpp"
#include "qmh/volumes.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qmh;

namespace {

std::vector<std::string> seriesStrings(const QSeries& s) {
    std::vector<std::string> out;
    for (int n = 0; n <= s.order(); ++n) out.push_back(s.at(n).str());
    return out;
}

py::dict piDict(const PiLaurent& p) {
    py::dict d;
    for (auto& [k, c] : p.coeffs()) d[py::str("pi^" + std::to_string(2 * k))] = c.str();
    return d;
}

py::dict formDict(const QuasiModForm& f) {
    py::dict d;
    for (auto& [k, c] : f.coeffs()) {
        std::string key = "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ")";
        d[py::str(key)] = c.str();
    }
    return d;
}

SSPoly monoFromIndices(const std::vector<int>& ks) {
    SSPoly f(Rat(1));
    for (int k : ks) f = f * SSPoly::generatorQ(k);
    return f;
}

}  // namespace

PYBIND11_MODULE(qmhurwitz, m) {
    m.doc() = "exact Siegel-Veech weighted torus-cover counting, quasimodular recognition, "
              "Masur-Veech volumes and Gevrey-2 asymptotics";

    m.def("count_series", [](const std::vector<int>& profile, int order, const std::string& which) {
        Profile pi(profile);
        QSeries s = which == "all" ? count_N(pi, order)
                    : which == "prime" ? count_Nprime(pi, order)
                                       : count_N0(pi, order);
        return seriesStrings(s);
    }, py::arg("profile"), py::arg("order"), py::arg("which") = "connected",
       "coefficients of N / N' / N^0 for a cycle profile, as exact rational strings");

    m.def("sv_series", [](const std::vector<int>& profile, long p, int order, const std::string& which) {
        Profile pi(profile);
        QSeries s = which == "all" ? count_cp(pi, p, order)
                    : which == "prime" ? count_cp_prime(pi, p, order)
                                       : count_cp_connected(pi, p, order);
        return seriesStrings(s);
    }, py::arg("profile"), py::arg("p"), py::arg("order"), py::arg("which") = "connected");

    m.def("certify", [](const std::vector<int>& profile, long p, int order) {
        Certificate cert = certify_quasimodular(Profile(profile), p, order);
        py::dict d;
        d["connected"] = formDict(cert.connectedForm);
        d["prime"] = formDict(cert.noUnramifiedForm);
        d["weight_bound"] = cert.weightBound;
        d["pure"] = cert.pure;
        return d;
    }, py::arg("profile"), py::arg("p"), py::arg("order"));

    m.def("qbracket_monomial", [](const std::vector<int>& ks, int order) {
        return seriesStrings(qbracket(monoFromIndices(ks), order));
    }, py::arg("q_indices"), py::arg("order"));

    m.def("qbracket_hook_moment", [](long p, int order) {
        return seriesStrings(qbracket(hookMomentFunctional(p), order));
    }, py::arg("p"), py::arg("order"));

    m.def("recognize_monomial", [](const std::vector<int>& ks, bool pure) {
        SSPoly f = monoFromIndices(ks);
        int w = f.weight();
        int order = static_cast<int>(recognitionBasis(w, pure).size()) + 5;
        return formDict(recognize(qbracket(f, order), w, pure));
    }, py::arg("q_indices"), py::arg("pure") = true);

    m.def("cumulant", [](const std::vector<long>& indices) { return rational_cumulant(indices).str(); },
          py::arg("indices"), "rational cumulant <<l_1,...,l_s>>_Q");
    m.def("cumulant_pi", [](const std::vector<long>& indices) { return piDict(cumulant_pi_form(indices)); },
          py::arg("indices"));

    m.def("psi", [](int order) { return seriesStrings(psi_L_onevar(order)); }, py::arg("order"));
    m.def("psi_k", [](int k, int order) { return seriesStrings(psi_k(k, order)); }, py::arg("k"), py::arg("order"));
    m.def("kappa", [](int order) { return seriesStrings(K_series(order)); }, py::arg("order"));
    m.def("v_n", [](int n) { return X_of_u(n + 1).vn(n).str(); }, py::arg("n"));

    m.def("volume", [](int genus) {
        StratumResult r = principal_volume(genus);
        py::dict d;
        d["genus"] = r.genus;
        d["n"] = r.n;
        d["vol"] = piDict(r.vol);
        d["vol_emz"] = piDict(r.volEMZ);
        d["carea_times_pi2_over_3"] = r.cAreaTimesPi2Over3.str();
        d["sv_leading"] = r.svLeading.str();
        return d;
    }, py::arg("genus"));
    m.def("carea", [](int genus) { return c_area_rational(genus).str(); }, py::arg("genus"));
    m.def("sv_leading", [](int n) { return sv_leading(n).str(); }, py::arg("n"));
    m.def("sv_leading_p", [](int n, long p) { return sv_leading_p(n, p).str(); }, py::arg("n"), py::arg("p"));

    m.def("bm_expansion", [](int mm, int R) {
        AsyExpansion e = bm_expansion(mm, R);
        py::dict d;
        d["gamma"] = e.gamma.str();
        d["beta"] = piDict(e.beta);
        d["pref2"] = e.pref2;
        d["prefpi"] = e.prefInvSqrtPi;
        py::list A;
        for (int i = 0; i <= e.order(); ++i) A.append(piDict(e.A[i]));
        d["A"] = A;
        return d;
    }, py::arg("m"), py::arg("order"));

    m.def("bernoulli", [](int k) { return bernoulliB(k).str(); }, py::arg("k"));
}
