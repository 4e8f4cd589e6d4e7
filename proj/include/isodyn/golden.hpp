/*
   Copyright 2026 The isodyn authors

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

#ifndef ISODYN_GOLDEN_HPP
#define ISODYN_GOLDEN_HPP

#include <array>
#include <vector>

#include "isodyn/poly.hpp"

namespace isodyn::golden {

/**
 * Machine-generated reference polynomials for the low-degree closed forms
 * used by the stratification and triangle modules. Each term stores an
 * integer coefficient and exponents in the fixed variable order
 * (a, b, c, e, f, u).
 */
struct GoldenTerm {
    long long coef;
    std::array<int, 6> exps;
};

struct GoldenPoly {
    std::vector<GoldenTerm> terms;
};

/// Evaluates with u left symbolic, returning a univariate polynomial in u.
template <class K>
Poly<K> eval_in_u(const GoldenPoly& g, const std::array<K, 5>& vars) {
    std::vector<K> coeffs;
    for (const auto& t : g.terms) {
        K v(t.coef);
        for (int i = 0; i < 5; ++i)
            for (int k = 0; k < t.exps[static_cast<size_t>(i)]; ++k) v = v * vars[static_cast<size_t>(i)];
        const size_t du = static_cast<size_t>(t.exps[5]);
        if (coeffs.size() <= du) coeffs.resize(du + 1, K(0));
        coeffs[du] = coeffs[du] + v;
    }
    return Poly<K>(std::move(coeffs));
}

/// Evaluates to a scalar (the u exponent must be zero in every term).
template <class K>
K eval_scalar(const GoldenPoly& g, const std::array<K, 5>& vars) {
    Poly<K> p = eval_in_u(g, vars);
    if (p.degree() > 0) throw Error("golden polynomial is not u-free");
    return p.coeff(0);
}

inline const GoldenPoly kId3{{
    {1LL, {2, 0, 0, 0, 0, 2}},
    {1LL, {1, 1, 0, 0, 0, 1}},
    {-3LL, {1, 0, 1, 0, 0, 0}},
    {1LL, {0, 2, 0, 0, 0, 0}},
    {-3LL, {0, 1, 0, 0, 0, 2}},
    {-9LL, {0, 0, 1, 0, 0, 1}}
}};

inline const GoldenPoly kD3Standard{{
    {4LL, {3, 0, 1, 0, 0, 0}},
    {-1LL, {2, 2, 0, 0, 0, 0}},
    {-18LL, {1, 1, 1, 0, 0, 0}},
    {4LL, {0, 3, 0, 0, 0, 0}},
    {27LL, {0, 0, 2, 0, 0, 0}}
}};

inline const GoldenPoly kId4{{
    {-4LL, {4, 0, 0, 0, 0, 2}},
    {-4LL, {3, 1, 0, 0, 0, 1}},
    {32LL, {3, 0, 1, 0, 0, 0}},
    {32LL, {3, 0, 0, 0, 0, 4}},
    {-9LL, {2, 2, 0, 0, 0, 0}},
    {72LL, {2, 1, 0, 0, 0, 3}},
    {-288LL, {2, 0, 1, 0, 0, 2}},
    {108LL, {1, 2, 0, 0, 0, 2}},
    {-432LL, {1, 1, 1, 0, 0, 1}},
    {108LL, {0, 3, 0, 0, 0, 1}},
    {108LL, {0, 2, 0, 0, 0, 4}},
    {864LL, {0, 1, 1, 0, 0, 3}},
    {1728LL, {0, 0, 2, 0, 0, 2}}
}};

inline const GoldenPoly kD4Standard{{
    {16LL, {4, 0, 1, 0, 0, 0}},
    {-4LL, {3, 2, 0, 0, 0, 0}},
    {-128LL, {2, 0, 2, 0, 0, 0}},
    {144LL, {1, 2, 1, 0, 0, 0}},
    {-27LL, {0, 4, 0, 0, 0, 0}},
    {256LL, {0, 0, 3, 0, 0, 0}}
}};

inline const GoldenPoly kD4Wronskian{{
    {2LL, {3, 0, 0, 0, 0, 0}},
    {-72LL, {1, 0, 1, 0, 0, 0}},
    {27LL, {0, 2, 0, 0, 0, 0}}
}};

inline const GoldenPoly kId5{{
    {27LL, {5, 0, 1, 0, 0, 4}},
    {135LL, {5, 0, 0, 1, 0, 3}},
    {-9LL, {4, 2, 0, 0, 0, 4}},
    {-9LL, {4, 1, 1, 0, 0, 3}},
    {135LL, {4, 1, 0, 1, 0, 2}},
    {-117LL, {4, 0, 2, 0, 0, 2}},
    {-270LL, {4, 0, 1, 1, 0, 1}},
    {-405LL, {4, 0, 1, 0, 0, 6}},
    {675LL, {4, 0, 0, 2, 0, 0}},
    {-2025LL, {4, 0, 0, 1, 0, 5}},
    {-2LL, {3, 3, 0, 0, 0, 3}},
    {51LL, {3, 2, 1, 0, 0, 2}},
    {135LL, {3, 2, 0, 1, 0, 1}},
    {135LL, {3, 2, 0, 0, 0, 6}},
    {12LL, {3, 1, 2, 0, 0, 1}},
    {-540LL, {3, 1, 1, 1, 0, 0}},
    {-180LL, {3, 1, 1, 0, 0, 5}},
    {-3600LL, {3, 1, 0, 1, 0, 4}},
    {128LL, {3, 0, 3, 0, 0, 0}},
    {1800LL, {3, 0, 2, 0, 0, 4}},
    {3600LL, {3, 0, 1, 1, 0, 3}},
    {-13500LL, {3, 0, 0, 2, 0, 2}},
    {-9LL, {2, 4, 0, 0, 0, 2}},
    {-9LL, {2, 3, 1, 0, 0, 1}},
    {135LL, {2, 3, 0, 1, 0, 0}},
    {135LL, {2, 3, 0, 0, 0, 5}},
    {-36LL, {2, 2, 2, 0, 0, 0}},
    {-600LL, {2, 2, 1, 0, 0, 4}},
    {-3000LL, {2, 2, 0, 1, 0, 3}},
    {1560LL, {2, 1, 2, 0, 0, 3}},
    {13200LL, {2, 1, 1, 1, 0, 2}},
    {-13500LL, {2, 1, 0, 2, 0, 1}},
    {-2040LL, {2, 0, 3, 0, 0, 2}},
    {600LL, {2, 0, 2, 1, 0, 1}},
    {1800LL, {2, 0, 2, 0, 0, 6}},
    {18000LL, {2, 0, 1, 1, 0, 5}},
    {45000LL, {2, 0, 0, 2, 0, 4}},
    {135LL, {1, 4, 0, 0, 0, 4}},
    {-720LL, {1, 3, 1, 0, 0, 3}},
    {-3600LL, {1, 3, 0, 1, 0, 2}},
    {180LL, {1, 2, 2, 0, 0, 2}},
    {9000LL, {1, 2, 1, 1, 0, 1}},
    {-2700LL, {1, 2, 1, 0, 0, 6}},
    {-13500LL, {1, 2, 0, 1, 0, 5}},
    {-2160LL, {1, 1, 3, 0, 0, 1}},
    {-6000LL, {1, 1, 2, 0, 0, 5}},
    {-6000LL, {1, 1, 1, 1, 0, 4}},
    {120000LL, {1, 1, 0, 2, 0, 3}},
    {-8400LL, {1, 0, 3, 0, 0, 4}},
    {-30000LL, {1, 0, 2, 1, 0, 3}},
    {60000LL, {1, 0, 1, 2, 0, 2}},
    {135LL, {0, 5, 0, 0, 0, 3}},
    {135LL, {0, 4, 1, 0, 0, 2}},
    {-2025LL, {0, 4, 0, 1, 0, 1}},
    {675LL, {0, 4, 0, 0, 0, 6}},
    {540LL, {0, 3, 2, 0, 0, 1}},
    {2700LL, {0, 3, 1, 0, 0, 5}},
    {-13500LL, {0, 3, 0, 1, 0, 4}},
    {7200LL, {0, 2, 2, 0, 0, 4}},
    {-36000LL, {0, 2, 1, 1, 0, 3}},
    {45000LL, {0, 2, 0, 2, 0, 2}},
    {10800LL, {0, 1, 3, 0, 0, 3}},
    {-54000LL, {0, 1, 2, 1, 0, 2}},
    {10800LL, {0, 0, 4, 0, 0, 2}},
    {-2000LL, {0, 0, 3, 0, 0, 6}},
    {-30000LL, {0, 0, 2, 1, 0, 5}},
    {-150000LL, {0, 0, 1, 2, 0, 4}},
    {-250000LL, {0, 0, 0, 3, 0, 3}}
}};

inline const GoldenPoly kD5Standard{{
    {108LL, {5, 0, 0, 2, 0, 0}},
    {-72LL, {4, 1, 1, 1, 0, 0}},
    {16LL, {4, 0, 3, 0, 0, 0}},
    {16LL, {3, 3, 0, 1, 0, 0}},
    {-4LL, {3, 2, 2, 0, 0, 0}},
    {-900LL, {3, 0, 1, 2, 0, 0}},
    {825LL, {2, 2, 0, 2, 0, 0}},
    {560LL, {2, 1, 2, 1, 0, 0}},
    {-128LL, {2, 0, 4, 0, 0, 0}},
    {-630LL, {1, 3, 1, 1, 0, 0}},
    {144LL, {1, 2, 3, 0, 0, 0}},
    {-3750LL, {1, 1, 0, 3, 0, 0}},
    {2000LL, {1, 0, 2, 2, 0, 0}},
    {108LL, {0, 5, 0, 1, 0, 0}},
    {-27LL, {0, 4, 2, 0, 0, 0}},
    {2250LL, {0, 2, 1, 2, 0, 0}},
    {-1600LL, {0, 1, 3, 1, 0, 0}},
    {256LL, {0, 0, 5, 0, 0, 0}},
    {3125LL, {0, 0, 0, 4, 0, 0}}
}};

inline const GoldenPoly kD5Wronskian{{
    {675LL, {10, 0, 0, 2, 0, 0}},
    {-450LL, {9, 1, 1, 1, 0, 0}},
    {-8LL, {9, 0, 3, 0, 0, 0}},
    {100LL, {8, 3, 0, 1, 0, 0}},
    {83LL, {8, 2, 2, 0, 0, 0}},
    {-36000LL, {8, 0, 1, 2, 0, 0}},
    {-36LL, {7, 4, 1, 0, 0, 0}},
    {19500LL, {7, 2, 0, 2, 0, 0}},
    {22400LL, {7, 1, 2, 1, 0, 0}},
    {640LL, {7, 0, 4, 0, 0, 0}},
    {4LL, {6, 6, 0, 0, 0, 0}},
    {-17100LL, {6, 3, 1, 1, 0, 0}},
    {-4400LL, {6, 2, 3, 0, 0, 0}},
    {-150000LL, {6, 1, 0, 3, 0, 0}},
    {620000LL, {6, 0, 2, 2, 0, 0}},
    {2650LL, {5, 5, 0, 1, 0, 0}},
    {3920LL, {5, 4, 2, 0, 0, 0}},
    {-540000LL, {5, 2, 1, 2, 0, 0}},
    {-328000LL, {5, 1, 3, 1, 0, 0}},
    {-19200LL, {5, 0, 5, 0, 0, 0}},
    {-10000000LL, {5, 0, 0, 4, 0, 0}},
    {-1110LL, {4, 6, 1, 0, 0, 0}},
    {157500LL, {4, 4, 0, 2, 0, 0}},
    {394000LL, {4, 3, 2, 1, 0, 0}},
    {77600LL, {4, 2, 4, 0, 0, 0}},
    {18000000LL, {4, 1, 1, 3, 0, 0}},
    {-3200000LL, {4, 0, 3, 2, 0, 0}},
    {100LL, {3, 8, 0, 0, 0, 0}},
    {-162000LL, {3, 5, 1, 1, 0, 0}},
    {-88000LL, {3, 4, 3, 0, 0, 0}},
    {-5500000LL, {3, 3, 0, 3, 0, 0}},
    {-5000000LL, {3, 2, 2, 2, 0, 0}},
    {640000LL, {3, 1, 4, 1, 0, 0}},
    {256000LL, {3, 0, 6, 0, 0, 0}},
    {19500LL, {2, 7, 0, 1, 0, 0}},
    {42800LL, {2, 6, 2, 0, 0, 0}},
    {2700000LL, {2, 4, 1, 2, 0, 0}},
    {920000LL, {2, 3, 3, 1, 0, 0}},
    {-480000LL, {2, 2, 5, 0, 0, 0}},
    {-25000000LL, {2, 2, 0, 4, 0, 0}},
    {20000000LL, {2, 1, 2, 3, 0, 0}},
    {-4000000LL, {2, 0, 4, 2, 0, 0}},
    {-9000LL, {1, 8, 1, 0, 0, 0}},
    {-150000LL, {1, 6, 0, 2, 0, 0}},
    {-700000LL, {1, 5, 2, 1, 0, 0}},
    {224000LL, {1, 4, 4, 0, 0, 0}},
    {30000000LL, {1, 3, 1, 3, 0, 0}},
    {-32000000LL, {1, 2, 3, 2, 0, 0}},
    {11200000LL, {1, 1, 5, 1, 0, 0}},
    {-1280000LL, {1, 0, 7, 0, 0, 0}},
    {675LL, {0, 10, 0, 0, 0, 0}},
    {90000LL, {0, 7, 1, 1, 0, 0}},
    {-28000LL, {0, 6, 3, 0, 0, 0}},
    {-10000000LL, {0, 5, 0, 3, 0, 0}},
    {11000000LL, {0, 4, 2, 2, 0, 0}},
    {-4000000LL, {0, 3, 4, 1, 0, 0}},
    {480000LL, {0, 2, 6, 0, 0, 0}}
}};

inline const GoldenPoly kD5Maxwell{{
    {9LL, {6, 0, 2, 0, 0, 0}},
    {-6LL, {5, 2, 1, 0, 0, 0}},
    {-3375LL, {5, 0, 0, 2, 0, 0}},
    {1LL, {4, 4, 0, 0, 0, 0}},
    {2325LL, {4, 1, 1, 1, 0, 0}},
    {-380LL, {4, 0, 3, 0, 0, 0}},
    {-525LL, {3, 3, 0, 1, 0, 0}},
    {40LL, {3, 2, 2, 0, 0, 0}},
    {30000LL, {3, 0, 1, 2, 0, 0}},
    {15LL, {2, 4, 1, 0, 0, 0}},
    {-26250LL, {2, 2, 0, 2, 0, 0}},
    {-17000LL, {2, 1, 2, 1, 0, 0}},
    {4400LL, {2, 0, 4, 0, 0, 0}},
    {19500LL, {1, 3, 1, 1, 0, 0}},
    {-4800LL, {1, 2, 3, 0, 0, 0}},
    {125000LL, {1, 1, 0, 3, 0, 0}},
    {-50000LL, {1, 0, 2, 2, 0, 0}},
    {-3375LL, {0, 5, 0, 1, 0, 0}},
    {900LL, {0, 4, 2, 0, 0, 0}},
    {-75000LL, {0, 2, 1, 2, 0, 0}},
    {50000LL, {0, 1, 3, 1, 0, 0}},
    {-8000LL, {0, 0, 5, 0, 0, 0}}
}};

inline const GoldenPoly kId11{{
    {-4LL, {2, 0, 1, 0, 0, 1}},
    {-4LL, {1, 1, 1, 0, 0, 0}},
    {4LL, {1, 1, 0, 0, 0, 1}},
    {4LL, {1, 0, 2, 0, 0, 1}},
    {-4LL, {1, 0, 1, 0, 0, 2}},
    {4LL, {0, 2, 0, 0, 0, 0}},
    {4LL, {0, 1, 2, 0, 0, 0}},
    {4LL, {0, 1, 0, 0, 0, 2}},
    {4LL, {0, 0, 2, 0, 0, 2}}
}};

inline const GoldenPoly kD11{{
    {16LL, {4, 0, 2, 0, 0, 0}},
    {-32LL, {3, 1, 1, 0, 0, 0}},
    {-32LL, {3, 0, 3, 0, 0, 0}},
    {16LL, {2, 2, 0, 0, 0, 0}},
    {-32LL, {2, 1, 2, 0, 0, 0}},
    {16LL, {2, 0, 4, 0, 0, 0}},
    {128LL, {1, 2, 1, 0, 0, 0}},
    {128LL, {1, 1, 3, 0, 0, 0}},
    {-64LL, {0, 3, 0, 0, 0, 0}},
    {-128LL, {0, 2, 2, 0, 0, 0}},
    {-64LL, {0, 1, 4, 0, 0, 0}}
}};

inline const GoldenPoly kId21{{
    {-32LL, {4, 0, 0, 3, 0, 3}},
    {4LL, {4, 0, 0, 2, 0, 4}},
    {-48LL, {3, 1, 0, 3, 0, 2}},
    {56LL, {3, 1, 0, 2, 0, 3}},
    {-4LL, {3, 1, 0, 1, 0, 4}},
    {-72LL, {3, 0, 1, 2, 0, 2}},
    {-32LL, {3, 0, 1, 1, 0, 3}},
    {4LL, {3, 0, 1, 0, 0, 4}},
    {32LL, {3, 0, 0, 4, 0, 3}},
    {-40LL, {3, 0, 0, 3, 0, 4}},
    {-24LL, {2, 2, 0, 3, 0, 1}},
    {96LL, {2, 2, 0, 2, 0, 2}},
    {-24LL, {2, 2, 0, 1, 0, 3}},
    {-72LL, {2, 1, 1, 2, 0, 1}},
    {24LL, {2, 1, 1, 1, 0, 2}},
    {24LL, {2, 1, 1, 0, 0, 3}},
    {48LL, {2, 1, 0, 4, 0, 2}},
    {48LL, {2, 1, 0, 3, 0, 3}},
    {36LL, {2, 1, 0, 2, 0, 4}},
    {-108LL, {2, 0, 2, 2, 0, 0}},
    {-72LL, {2, 0, 2, 0, 0, 2}},
    {288LL, {2, 0, 1, 3, 0, 2}},
    {-216LL, {2, 0, 1, 2, 0, 3}},
    {-36LL, {2, 0, 1, 1, 0, 4}},
    {36LL, {2, 0, 0, 4, 0, 4}},
    {-4LL, {1, 3, 0, 3, 0, 0}},
    {56LL, {1, 3, 0, 2, 0, 1}},
    {-48LL, {1, 3, 0, 1, 0, 2}},
    {36LL, {1, 2, 1, 2, 0, 0}},
    {48LL, {1, 2, 1, 1, 0, 1}},
    {48LL, {1, 2, 1, 0, 0, 2}},
    {24LL, {1, 2, 0, 4, 0, 1}},
    {24LL, {1, 2, 0, 3, 0, 2}},
    {-72LL, {1, 2, 0, 2, 0, 3}},
    {108LL, {1, 1, 2, 1, 0, 0}},
    {-72LL, {1, 1, 2, 0, 0, 1}},
    {288LL, {1, 1, 1, 3, 0, 1}},
    {-432LL, {1, 1, 1, 2, 0, 2}},
    {288LL, {1, 1, 1, 1, 0, 3}},
    {-72LL, {1, 1, 0, 4, 0, 3}},
    {108LL, {1, 1, 0, 3, 0, 4}},
    {-108LL, {1, 0, 3, 0, 0, 0}},
    {216LL, {1, 0, 2, 3, 0, 0}},
    {-216LL, {1, 0, 2, 2, 0, 1}},
    {216LL, {1, 0, 2, 1, 0, 2}},
    {-216LL, {1, 0, 2, 0, 0, 3}},
    {-216LL, {1, 0, 1, 4, 0, 2}},
    {432LL, {1, 0, 1, 3, 0, 3}},
    {-108LL, {1, 0, 1, 2, 0, 4}},
    {4LL, {0, 4, 0, 2, 0, 0}},
    {-32LL, {0, 4, 0, 1, 0, 1}},
    {-40LL, {0, 3, 1, 1, 0, 0}},
    {32LL, {0, 3, 1, 0, 0, 1}},
    {4LL, {0, 3, 0, 4, 0, 0}},
    {-32LL, {0, 3, 0, 3, 0, 1}},
    {-72LL, {0, 3, 0, 2, 0, 2}},
    {36LL, {0, 2, 2, 0, 0, 0}},
    {-36LL, {0, 2, 1, 3, 0, 0}},
    {-216LL, {0, 2, 1, 2, 0, 1}},
    {288LL, {0, 2, 1, 1, 0, 2}},
    {-72LL, {0, 2, 0, 4, 0, 2}},
    {-108LL, {0, 2, 0, 2, 0, 4}},
    {-108LL, {0, 1, 2, 2, 0, 0}},
    {432LL, {0, 1, 2, 1, 0, 1}},
    {-216LL, {0, 1, 2, 0, 0, 2}},
    {-216LL, {0, 1, 1, 4, 0, 1}},
    {216LL, {0, 1, 1, 3, 0, 2}},
    {-216LL, {0, 1, 1, 2, 0, 3}},
    {216LL, {0, 1, 1, 1, 0, 4}},
    {-108LL, {0, 1, 0, 4, 0, 4}},
    {108LL, {0, 0, 3, 1, 0, 0}},
    {-216LL, {0, 0, 3, 0, 0, 1}},
    {-108LL, {0, 0, 2, 4, 0, 0}},
    {216LL, {0, 0, 2, 3, 0, 1}},
    {216LL, {0, 0, 2, 1, 0, 3}},
    {-108LL, {0, 0, 2, 0, 0, 4}},
    {-216LL, {0, 0, 1, 4, 0, 3}},
    {108LL, {0, 0, 1, 3, 0, 4}}
}};

inline const GoldenPoly kD21CubicDiscr{{
    {4LL, {3, 0, 1, 0, 0, 0}},
    {-1LL, {2, 2, 0, 0, 0, 0}},
    {-18LL, {1, 1, 1, 0, 0, 0}},
    {4LL, {0, 3, 0, 0, 0, 0}},
    {27LL, {0, 0, 2, 0, 0, 0}}
}};

inline const GoldenPoly kD21PoleFactor{{
    {1LL, {1, 0, 0, 2, 0, 0}},
    {-1LL, {0, 1, 0, 1, 0, 0}},
    {1LL, {0, 0, 1, 0, 0, 0}},
    {-1LL, {0, 0, 0, 3, 0, 0}}
}};

inline const GoldenPoly kId12NumeratorCubic{{
    {1LL, {1, 0, 0, 0, 0, 2}},
    {1LL, {0, 1, 0, 0, 0, 1}},
    {1LL, {0, 0, 1, 0, 0, 0}},
    {1LL, {0, 0, 0, 0, 0, 3}}
}};

inline const GoldenPoly kId12Prefactor{{
    {1LL, {2, 0, 0, 0, 2, 0}},
    {-1LL, {1, 1, 0, 1, 1, 0}},
    {1LL, {1, 0, 1, 2, 0, 0}},
    {-2LL, {1, 0, 1, 0, 1, 0}},
    {-1LL, {1, 0, 0, 1, 2, 0}},
    {1LL, {0, 2, 0, 0, 1, 0}},
    {-1LL, {0, 1, 1, 1, 0, 0}},
    {1LL, {0, 1, 0, 2, 1, 0}},
    {-2LL, {0, 1, 0, 0, 2, 0}},
    {1LL, {0, 0, 2, 0, 0, 0}},
    {-1LL, {0, 0, 1, 3, 0, 0}},
    {3LL, {0, 0, 1, 1, 1, 0}},
    {1LL, {0, 0, 0, 0, 3, 0}}
}};

inline const GoldenPoly kId12Cubic{{
    {1LL, {3, 0, 0, 3, 0, 3}},
    {-3LL, {3, 0, 0, 2, 1, 2}},
    {3LL, {3, 0, 0, 1, 2, 1}},
    {-1LL, {3, 0, 0, 0, 3, 0}},
    {27LL, {3, 0, 0, 0, 2, 2}},
    {3LL, {2, 1, 0, 3, 0, 2}},
    {-6LL, {2, 1, 0, 2, 1, 1}},
    {-3LL, {2, 1, 0, 2, 0, 3}},
    {3LL, {2, 1, 0, 1, 2, 0}},
    {-21LL, {2, 1, 0, 1, 1, 2}},
    {24LL, {2, 1, 0, 0, 2, 1}},
    {18LL, {2, 0, 1, 2, 0, 2}},
    {18LL, {2, 0, 1, 1, 1, 1}},
    {18LL, {2, 0, 1, 0, 2, 0}},
    {-54LL, {2, 0, 1, 0, 1, 2}},
    {-9LL, {2, 0, 0, 2, 1, 3}},
    {-9LL, {2, 0, 0, 1, 2, 2}},
    {-9LL, {2, 0, 0, 0, 3, 1}},
    {27LL, {2, 0, 0, 0, 2, 3}},
    {3LL, {1, 2, 0, 3, 0, 1}},
    {-3LL, {1, 2, 0, 2, 1, 0}},
    {-6LL, {1, 2, 0, 2, 0, 2}},
    {-21LL, {1, 2, 0, 1, 1, 1}},
    {3LL, {1, 2, 0, 1, 0, 3}},
    {24LL, {1, 2, 0, 0, 1, 2}},
    {9LL, {1, 1, 1, 2, 0, 1}},
    {-9LL, {1, 1, 1, 1, 1, 0}},
    {-9LL, {1, 1, 1, 1, 0, 2}},
    {-72LL, {1, 1, 1, 0, 1, 1}},
    {9LL, {1, 1, 0, 2, 1, 2}},
    {-9LL, {1, 1, 0, 1, 2, 1}},
    {-9LL, {1, 1, 0, 1, 1, 3}},
    {-72LL, {1, 1, 0, 0, 2, 2}},
    {27LL, {1, 0, 2, 2, 0, 0}},
    {27LL, {1, 0, 2, 1, 0, 1}},
    {-81LL, {1, 0, 2, 0, 1, 0}},
    {27LL, {1, 0, 2, 0, 0, 2}},
    {-27LL, {1, 0, 1, 3, 0, 2}},
    {27LL, {1, 0, 1, 2, 0, 3}},
    {-27LL, {1, 0, 1, 1, 2, 0}},
    {135LL, {1, 0, 1, 1, 1, 2}},
    {-54LL, {1, 0, 1, 0, 2, 1}},
    {-54LL, {1, 0, 1, 0, 1, 3}},
    {1LL, {0, 3, 0, 3, 0, 0}},
    {-3LL, {0, 3, 0, 2, 0, 1}},
    {3LL, {0, 3, 0, 1, 0, 2}},
    {27LL, {0, 3, 0, 0, 1, 1}},
    {-1LL, {0, 3, 0, 0, 0, 3}},
    {-9LL, {0, 2, 1, 2, 0, 0}},
    {-9LL, {0, 2, 1, 1, 0, 1}},
    {27LL, {0, 2, 1, 0, 1, 0}},
    {-9LL, {0, 2, 1, 0, 0, 2}},
    {18LL, {0, 2, 0, 2, 1, 1}},
    {18LL, {0, 2, 0, 1, 1, 2}},
    {-54LL, {0, 2, 0, 0, 2, 1}},
    {18LL, {0, 2, 0, 0, 1, 3}},
    {-27LL, {0, 1, 1, 3, 0, 1}},
    {27LL, {0, 1, 1, 2, 1, 0}},
    {135LL, {0, 1, 1, 1, 1, 1}},
    {-27LL, {0, 1, 1, 1, 0, 3}},
    {-54LL, {0, 1, 1, 0, 2, 0}},
    {-54LL, {0, 1, 1, 0, 1, 2}},
    {27LL, {0, 1, 0, 2, 1, 3}},
    {27LL, {0, 1, 0, 1, 2, 2}},
    {27LL, {0, 1, 0, 0, 3, 1}},
    {-81LL, {0, 1, 0, 0, 2, 3}},
    {-27LL, {0, 0, 2, 3, 0, 0}},
    {81LL, {0, 0, 2, 1, 1, 0}},
    {-81LL, {0, 0, 2, 0, 1, 1}},
    {27LL, {0, 0, 2, 0, 0, 3}},
    {-27LL, {0, 0, 1, 3, 0, 3}},
    {81LL, {0, 0, 1, 1, 1, 3}},
    {27LL, {0, 0, 1, 0, 3, 0}},
    {-81LL, {0, 0, 1, 0, 2, 2}}
}};

inline const GoldenPoly kD12QuadFactor{{
    {1LL, {0, 0, 0, 2, 0, 0}},
    {-4LL, {0, 0, 0, 0, 1, 0}}
}};

inline const GoldenPoly kD12SquaredFactor{{
    {1LL, {4, 0, 0, 0, 2, 0}},
    {-1LL, {3, 1, 0, 1, 1, 0}},
    {1LL, {3, 0, 1, 2, 0, 0}},
    {-10LL, {3, 0, 1, 0, 1, 0}},
    {3LL, {2, 2, 0, 0, 1, 0}},
    {3LL, {2, 1, 1, 1, 0, 0}},
    {-6LL, {2, 1, 0, 0, 2, 0}},
    {9LL, {2, 0, 2, 0, 0, 0}},
    {9LL, {2, 0, 1, 1, 1, 0}},
    {-1LL, {1, 3, 0, 1, 0, 0}},
    {-6LL, {1, 2, 1, 0, 0, 0}},
    {3LL, {1, 2, 0, 1, 1, 0}},
    {-9LL, {1, 1, 1, 2, 0, 0}},
    {36LL, {1, 1, 1, 0, 1, 0}},
    {-27LL, {1, 0, 2, 1, 0, 0}},
    {1LL, {0, 4, 0, 0, 0, 0}},
    {1LL, {0, 3, 0, 2, 0, 0}},
    {-10LL, {0, 3, 0, 0, 1, 0}},
    {9LL, {0, 2, 1, 1, 0, 0}},
    {9LL, {0, 2, 0, 0, 2, 0}},
    {-27LL, {0, 1, 1, 1, 1, 0}},
    {27LL, {0, 0, 2, 2, 0, 0}},
    {-27LL, {0, 0, 2, 0, 1, 0}}
}};

inline const GoldenPoly kD12SexticFactor{{
    {-1LL, {4, 0, 0, 1, 2, 0}},
    {1LL, {3, 1, 0, 2, 1, 0}},
    {1LL, {3, 1, 0, 0, 2, 0}},
    {-1LL, {3, 0, 1, 3, 0, 0}},
    {-6LL, {3, 0, 1, 1, 1, 0}},
    {2LL, {3, 0, 0, 0, 3, 0}},
    {6LL, {2, 1, 1, 2, 0, 0}},
    {6LL, {2, 1, 1, 0, 1, 0}},
    {3LL, {2, 1, 0, 1, 2, 0}},
    {-9LL, {2, 0, 2, 1, 0, 0}},
    {9LL, {2, 0, 1, 2, 1, 0}},
    {9LL, {2, 0, 1, 0, 2, 0}},
    {-1LL, {1, 3, 0, 2, 0, 0}},
    {-1LL, {1, 3, 0, 0, 1, 0}},
    {-3LL, {1, 2, 1, 1, 0, 0}},
    {-6LL, {1, 2, 0, 2, 1, 0}},
    {-6LL, {1, 2, 0, 0, 2, 0}},
    {9LL, {1, 1, 2, 0, 0, 0}},
    {-9LL, {1, 1, 0, 0, 3, 0}},
    {-27LL, {1, 0, 1, 1, 2, 0}},
    {1LL, {0, 4, 0, 1, 0, 0}},
    {-2LL, {0, 3, 1, 0, 0, 0}},
    {1LL, {0, 3, 0, 3, 0, 0}},
    {6LL, {0, 3, 0, 1, 1, 0}},
    {-9LL, {0, 2, 1, 2, 0, 0}},
    {-9LL, {0, 2, 1, 0, 1, 0}},
    {9LL, {0, 2, 0, 1, 2, 0}},
    {27LL, {0, 1, 2, 1, 0, 0}},
    {-27LL, {0, 0, 3, 0, 0, 0}},
    {27LL, {0, 0, 1, 0, 3, 0}}
}};

}  // namespace isodyn::golden

#endif  // ISODYN_GOLDEN_HPP
