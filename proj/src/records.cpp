#include "bc1/records.hpp"

#include <sstream>

#include <json.hpp>

namespace bc1 {

PolyRecord PolyRecord::from_laurent(std::string family, const std::string& k1,
                                    const std::string& k2, int scale,
                                    std::vector<std::pair<std::string, std::string>> params,
                                    const LaurentPoly& p) {
    PolyRecord rec{std::move(family), k1, k2, scale, std::move(params), {}};
    for (const auto& [e, c] : p.coeffs()) rec.coeffs.emplace_back(e, c);
    return rec;
}

PolyRecord PolyRecord::from_polyx(std::string family, const std::string& k1,
                                  const std::string& k2, int scale,
                                  std::vector<std::pair<std::string, std::string>> params,
                                  const PolyX& p) {
    PolyRecord rec{std::move(family), k1, k2, scale, std::move(params), {}};
    for (const auto& [d, c] : p.coeffs()) rec.coeffs.emplace_back(d, c);
    return rec;
}

std::string records_to_json(const std::vector<PolyRecord>& records) {
    nlohmann::json out = nlohmann::json::array();
    for (const PolyRecord& rec : records) {
        nlohmann::json j;
        j["family"] = rec.family;
        j["k"] = {rec.k1, rec.k2};
        j["scale"] = rec.scale;
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [key, value] : rec.params) params[key] = value;
        j["params"] = params;
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& [key, c] : rec.coeffs) {
            coeffs.push_back({{"key", key},
                              {"num", numerator(c).convert_to<std::string>()},
                              {"den", denominator(c).convert_to<std::string>()}});
        }
        j["coeffs"] = coeffs;
        out.push_back(j);
    }
    return out.dump(2) + "\n";
}

std::string records_to_csv(const std::vector<PolyRecord>& records) {
    std::ostringstream os;
    os << "family,k1,k2,scale,params,key,num,den\n";
    for (const PolyRecord& rec : records) {
        std::string params;
        for (const auto& [key, value] : rec.params) {
            if (!params.empty()) params += ";";
            params += key + "=" + value;
        }
        for (const auto& [key, c] : rec.coeffs) {
            os << rec.family << "," << rec.k1 << "," << rec.k2 << "," << rec.scale << ","
               << params << "," << key << "," << numerator(c).convert_to<std::string>() << ","
               << denominator(c).convert_to<std::string>() << "\n";
        }
    }
    return os.str();
}

}  // namespace bc1
