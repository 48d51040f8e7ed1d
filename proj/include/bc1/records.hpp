#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bc1/laurent.hpp"
#include "bc1/polyx.hpp"

namespace bc1 {

/// Serializable family member. Coefficients are kept exact (numerator and
/// denominator strings, lowest terms); keys are Laurent exponents or
/// x-degrees depending on the family. Params preserve insertion order for
/// the CSV flattening; JSON objects are emitted with sorted keys, so
/// exact-mode output is byte-stable across runs.
struct PolyRecord {
    std::string family;  // E | P | M | N | monic | spherical
    std::string k1;
    std::string k2;
    int scale = 1;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<int, Rational>> coeffs;  // sorted by key

    static PolyRecord from_laurent(std::string family, const std::string& k1,
                                   const std::string& k2, int scale,
                                   std::vector<std::pair<std::string, std::string>> params,
                                   const LaurentPoly& p);
    static PolyRecord from_polyx(std::string family, const std::string& k1,
                                 const std::string& k2, int scale,
                                 std::vector<std::pair<std::string, std::string>> params,
                                 const PolyX& p);
};

std::string records_to_json(const std::vector<PolyRecord>& records);
std::string records_to_csv(const std::vector<PolyRecord>& records);

}  // namespace bc1
