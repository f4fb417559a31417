#pragma once

// Published decimal values used by the verification battery. Kept as
// strings so the number of printed digits is part of the data.

#include <array>
#include <string_view>

namespace pzeta::reference {

inline constexpr std::array<std::string_view, 11> kAlpha = {
    "-0.315718452053890076851085251473",
    "1.332582275733220881765828776071",
    "-2.555107615446445239595583797989",
    "10.2538270969110075387787767411",
    "-59.3323979717972728673195290222",
    "453.624590860932484915158069802",
    "-4359.12496004203984785669925342",
    "50684.8409784215596972318317143",
    "-692706.773919572383426686564824",
    "10884508.6063445498810870428549",
    "-193290090.992897724732297255085",
};

inline constexpr std::string_view kMeisselMertens = "0.26149721284764278375";
inline constexpr std::string_view kEulerGamma = "0.5772156649015328606";
inline constexpr std::string_view kAlpha0Short = "-0.31571845205389007685";

// alpha_1, alpha_2, alpha_3 at 20 decimals.
inline constexpr std::array<std::string_view, 3> kMertensCases = {
    "1.33258227573322088176",
    "-2.55510761544644523959",
    "10.25382709691100753877",
};

}  // namespace pzeta::reference
