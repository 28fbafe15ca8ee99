/*
   Copyright 2026 the geiser authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GEISER_BUILTINS_HPP
#define GEISER_BUILTINS_HPP

#include "geiser/trivolution.hpp"

#include <utility>
#include <vector>

namespace geiser::builtins {

// Affine vector fields of the named foliations, as expression strings.
inline const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>&
foliation_fields() {
    static const std::vector<std::pair<std::string, std::pair<std::string, std::string>>> table{
        {"jouanolou2", {"x^3 - y^2", "x^2*y - 1"}},
        {"jouanolou3", {"y^3 - x^4", "1 - x^3*y"}},
        {"omega1", {"x*y^2", "y^3 - x^2"}},
        {"omega2", {"x^2 + x*y^2", "y^3 + x*y - x^2"}},
        {"omega3", {"x^3 + x*y^2", "x^2*y + y^3 - x*y"}},
        {"omega4", {"x + y^2 - x^2*y", "-x^2 - x*y^2"}},
        {"conic-pencil", {"x^2 + x*y^2", "y^3"}},
        {"cegal0", {"x^3", "1"}},
        {"ref", {"x^3 - 1", "1"}},
        {"degre4", {"x^3", "1 + x + x^2/3"}},
        {"exemple", {"y^3", "x^3"}},
        {"alpha-1b", {"x^3", "y^3"}},
    };
    return table;
}

inline std::vector<std::string> foliation_names() {
    std::vector<std::string> names;
    for (const auto& [name, exprs] : foliation_fields()) names.push_back(name);
    names.push_back("homog(alpha,lambda,mu,nu)");
    return names;
}

inline Foliation foliation(const std::string& name, int conductor) {
    if (name.rfind("homog(", 0) == 0 && name.back() == ')') {
        std::string args = name.substr(6, name.size() - 7);
        std::vector<CycNumber> values;
        std::size_t start = 0;
        int depth = 0;
        for (std::size_t k = 0; k <= args.size(); ++k) {
            if (k < args.size() && args[k] == '(') ++depth;
            if (k < args.size() && args[k] == ')') --depth;
            if (k == args.size() || (args[k] == ',' && depth == 0)) {
                MultiPoly value = parse_poly(args.substr(start, k - start), conductor);
                values.push_back(value.constant_value());
                start = k + 1;
            }
        }
        if (values.size() != 4) throw domain_error("homog(...) takes four parameters");
        HomogeneousFamilyParams p{values[0], values[1], values[2], values[3]};
        return homogeneous_family_build(p).foliation;
    }
    for (const auto& [key, exprs] : foliation_fields())
        if (key == name)
            return Foliation::from_field(parse_poly(exprs.first, conductor),
                                         parse_poly(exprs.second, conductor));
    throw domain_error("unknown builtin foliation '" + name + "'");
}

inline BirationalMap map(const std::string& name, int conductor) {
    if (name == "sigma")
        return BirationalMap::from_triple(parse_poly("y*z", conductor), parse_poly("x*z", conductor),
                                          parse_poly("x*y", conductor));
    if (name == "jonquieres9")
        return BirationalMap::from_affine(parse_rational("y/(1+x^2*y^2)", conductor),
                                          parse_rational("x*(1+x^2*y^2)", conductor));
    throw domain_error("unknown builtin map '" + name + "'");
}

} // namespace geiser::builtins

#endif
