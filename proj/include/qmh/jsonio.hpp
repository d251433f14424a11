#pragma once

#include "qmh/pipoly.hpp"
#include "qmh/qseries.hpp"
#include "qmh/quasimod.hpp"
#include "qmh/ssring.hpp"

#include <string>

namespace qmh {

// {"(a,b,c)": "num/den", ...}
std::string qmfToJson(const QuasiModForm& f);
QuasiModForm qmfFromJson(const std::string& text);

// sparse {"[e1,e2,...]": "num/den", ...} keyed by the Q-exponent vector
std::string ssToJson(const SSPoly& f);
SSPoly ssFromJson(const std::string& text);

std::string qseriesToJson(const QSeries& s);
QSeries qseriesFromJson(const std::string& text);

// {"pi^0": "...", "pi^2": "...", ...}
std::string piToJson(const PiLaurent& p);

}  // namespace qmh
