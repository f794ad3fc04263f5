#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fig8/group_words.hpp"
#include "fig8/riley.hpp"
#include "fig8/surgery.hpp"
#include "fig8/torsion_formulas.hpp"

namespace fig8::io {

using Json = nlohmann::ordered_json;

/// "re,im" or a bare real "re". Throws ParseError.
Cx parse_complex(std::string_view text);

/// Shortest form that reads back to the same double ("%.17g" fallback).
std::string format_real(double v);
/// Human-readable, 12 significant digits: "1.5-0.25i".
std::string format_complex(Cx z);

Json to_json(Cx z);
Cx complex_from_json(const Json& j);

/// {s: {re, im}, t: {re, im}, branch: "+"|"-", residual}
Json to_json(const RileyPoint& p);
RileyPoint riley_point_from_json(const Json& j);

/// [{word, coeff}, ...] in word order.
Json to_json(const GroupRingElement& e);
GroupRingElement group_ring_from_json(const Json& j);

Json to_json(const TorsionEntry& e);
Json to_json(const ConsistencyFlags& f);
Json to_json(const TorsionReport& r);

/// CSV row form of a report; header and row have matching columns.
std::string torsion_csv_header();
std::string torsion_csv_row(const TorsionReport& r);

Json to_json(const SurgerySolution& s);
Json to_json(const SurgeryResult& r);  // array of rows

inline constexpr std::string_view kSurgeryCsvHeader =
    "s_re,s_im,t_re,t_im,branch,u_re,u_im,trl_re,trl_im,lambda_re,lambda_im,tau_re,tau_im,res_variety,res_relation,flags";

/// Header line followed by one line per solution. Torsion cells are empty
/// for degenerate rows; flags are ';'-separated.
void write_surgery_csv(std::ostream& os, const SurgeryResult& r);

} // namespace fig8::io
