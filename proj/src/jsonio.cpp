#include "qmh/jsonio.hpp"

#include <json.hpp>

namespace qmh {

using nlohmann::json;
using nlohmann::ordered_json;

std::string qmfToJson(const QuasiModForm& f) {
    ordered_json j = ordered_json::object();
    for (auto& [k, c] : f.coeffs()) {
        std::string key = "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ")";
        j[key] = c.str();
    }
    return j.dump();
}

QuasiModForm qmfFromJson(const std::string& text) {
    json j = json::parse(text);
    QuasiModForm f;
    for (auto& [key, val] : j.items()) {
        int a = 0, b = 0, c = 0;
        if (std::sscanf(key.c_str(), "(%d,%d,%d)", &a, &b, &c) != 3)
            throw std::invalid_argument("qmfFromJson: bad key " + key);
        f += QuasiModForm::monomial(a, b, c, Rat::parse(val.get<std::string>()));
    }
    return f;
}

std::string ssToJson(const SSPoly& f) {
    ordered_json j = ordered_json::object();
    for (auto& [key, c] : f.coeffs()) {
        json arr = json::array();
        for (int e : key) arr.push_back(e);
        j[arr.dump()] = c.str();
    }
    return j.dump();
}

SSPoly ssFromJson(const std::string& text) {
    json j = json::parse(text);
    SSPoly f;
    for (auto& [key, val] : j.items()) {
        json arr = json::parse(key);
        SSPoly::Key k;
        for (auto& e : arr) k.push_back(e.get<int>());
        f += SSPoly::monomialFromKey(k, Rat::parse(val.get<std::string>()));
    }
    return f;
}

std::string qseriesToJson(const QSeries& s) {
    ordered_json j;
    j["order"] = s.order();
    json arr = json::array();
    for (int n = 0; n <= s.order(); ++n) arr.push_back(s.at(n).str());
    j["coefficients"] = arr;
    return j.dump();
}

QSeries qseriesFromJson(const std::string& text) {
    json j = json::parse(text);
    int order = j.at("order").get<int>();
    QSeries s(order);
    auto& arr = j.at("coefficients");
    for (int n = 0; n <= order && n < static_cast<int>(arr.size()); ++n)
        s.set(n, Rat::parse(arr[n].get<std::string>()));
    return s;
}

std::string piToJson(const PiLaurent& p) {
    ordered_json j = ordered_json::object();
    for (auto& [k, c] : p.coeffs()) j["pi^" + std::to_string(2 * k)] = c.str();
    return j.dump();
}

}  // namespace qmh
