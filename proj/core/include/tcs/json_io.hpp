#pragma once

#include <string>

#include "tcs/expansion.hpp"

namespace tcs {

// All numbers are serialized as decimal strings so arbitrary precision
// survives every platform; files are byte-stable (canonically sorted cones,
// fixed key order).

std::string fan_to_json(const Fan& f);
Fan fan_from_json(const std::string& text);

std::string stacky_to_json(const StackyFan& s);
StackyFan stacky_from_json(const std::string& text);

std::string scaffold_to_json(const Scaffold& s);
Scaffold scaffold_from_json(const std::string& text);

std::string configuration_to_json(const ConfigurationFan& cf);
ConfigurationFan configuration_from_json(const std::string& text);

std::string stratum_report_to_json(const ConfigurationFan& cf, const StratumReport& rep);
std::string stratum_report_to_text(const ConfigurationFan& cf, const StratumReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tcs
