#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "photodist/entropy.hpp"
#include "photodist/inequality.hpp"
#include "photodist/oracle.hpp"

namespace photodist {

using Metadata = std::vector<std::pair<std::string, std::string>>;

// 17 significant digits, locale independent; non-finite values print as
// nan, inf and -inf.
std::string format_double(double v);

// "# key=value" lines, then n,re,im rows. Trailing exact zeros are dropped
// (at least one row is kept), so the vacuum prints a single row.
void write_distribution_csv(std::ostream& os, const PhotonDistribution& d, const Metadata& meta);
nlohmann::json distribution_json(const PhotonDistribution& d);

void write_joint_csv(std::ostream& os, const TwoModeJointDistribution& t, const Metadata& meta);
nlohmann::json joint_json(const TwoModeJointDistribution& t);

nlohmann::json complex_json(Complex z);
nlohmann::json entropy_json(const EntropyReport& r);
nlohmann::json complex_entropy_json(const ComplexEntropyReport& r);
nlohmann::json inequality_json(const InequalityReport& r);
nlohmann::json verdict_json(const OracleVerdict& v);

// {"sigma_pp", "sigma_qq", "sigma_pq", "mean_q", "mean_p"}, all required and
// numeric. Error(invalid_input) otherwise.
OneModeGaussianState parse_state_json(const std::string& text);
OneModeGaussianState load_state_file(const std::string& path);

} // namespace photodist
