#include "fig8/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "fig8/errors.hpp"

namespace fig8::io {

namespace {

double parse_real(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw ParseError("empty number");
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ParseError("not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw ParseError("not a finite number: '" + s + "'");
    return v;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k != 0) out.push_back(sep);
        out += parts[k];
    }
    return out;
}

} // namespace

Cx parse_complex(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) return {parse_real(text), 0.0};
    if (text.find(',', comma + 1) != std::string_view::npos) throw ParseError("expected re,im");
    return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

std::string format_real(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[32];
    for (int precision : {15, 16, 17}) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

std::string format_complex(Cx z) {
    char buf[64];
    const double im = z.imag();
    std::snprintf(buf, sizeof buf, "%.12g%c%.12gi", z.real() + 0.0, im < 0.0 ? '-' : '+', std::abs(im));
    return buf;
}

Json to_json(Cx z) { return Json{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

Cx complex_from_json(const Json& j) {
    try {
        return {j.at("re").get<double>(), j.at("im").get<double>()};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("complex number: ") + e.what());
    }
}

Json to_json(const RileyPoint& p) {
    return Json{{"s", to_json(p.s)}, {"t", to_json(p.t)}, {"branch", branch_symbol(p.branch)}, {"residual", p.residual}};
}

RileyPoint riley_point_from_json(const Json& j) {
    try {
        const auto branch = j.at("branch").get<std::string>();
        if (branch != "+" && branch != "-") throw ParseError("branch must be \"+\" or \"-\"");
        return make_point(complex_from_json(j.at("s")), complex_from_json(j.at("t")),
                          branch == "+" ? Branch::plus : Branch::minus);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("RileyPoint: ") + e.what());
    }
}

Json to_json(const GroupRingElement& e) {
    Json arr = Json::array();
    for (const auto& [w, c] : e.terms()) arr.push_back(Json{{"word", w.str()}, {"coeff", c}});
    return arr;
}

GroupRingElement group_ring_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("group ring element must be a JSON array");
    GroupRingElement e;
    try {
        for (const auto& term : j) e.add(GroupWord::parse(term.at("word").get<std::string>()), term.at("coeff").get<std::int64_t>());
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("group ring term: ") + ex.what());
    }
    return e;
}

Json to_json(const TorsionEntry& e) {
    Json j{{"status", status_name(e.status)}};
    j["value"] = e.ok() ? to_json(e.value) : Json(nullptr);
    if (e.sign_ambiguous) j["sign_ambiguous"] = true;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

Json to_json(const ConsistencyFlags& f) {
    return Json{{"exterior_oracle_vs_closed", check_name(f.exterior_oracle_vs_closed)},
                {"oracle_ratio_vs_chain", check_name(f.oracle_ratio_vs_chain)},
                {"solid_trace_vs_closed", check_name(f.solid_trace_vs_closed)},
                {"solid_trace_vs_circle", check_name(f.solid_trace_vs_circle)},
                {"product_vs_theorem", check_name(f.product_vs_theorem)},
                {"oracle_product_vs_theorem", check_name(f.oracle_product_vs_theorem)},
                {"all_pass", f.all_pass()}};
}

Json to_json(const TorsionReport& r) {
    Json j;
    j["point"] = to_json(r.point);
    j["u"] = to_json(r.u);
    j["trace_longitude"] = to_json(r.trace_longitude);
    j["on_variety"] = r.on_variety;
    j["reducible"] = r.reducible;
    j["peripherally_acyclic"] = r.peripherally_acyclic;
    j["exterior_acyclic"] = r.exterior_acyclic;
    j["degenerate"] = r.degenerate;
    j["tau_exterior_closed"] = to_json(r.tau_exterior_closed);
    j["tau_exterior_oracle"] = to_json(r.tau_exterior_oracle);
    j["tau_exterior_ratio"] = to_json(r.tau_exterior_ratio);
    j["tau_solid_closed"] = to_json(r.tau_solid_closed);
    j["tau_solid_trace"] = to_json(r.tau_solid_trace);
    j["tau_solid_circle"] = to_json(r.tau_solid_circle);
    j["tau_surgered"] = to_json(r.tau_surgered);
    j["tau_manifold"] = to_json(r.tau_manifold);
    j["consistency_flags"] = to_json(r.flags);
    return j;
}

namespace {

const std::vector<std::pair<const char*, TorsionEntry TorsionReport::*>>& report_entries() {
    static const std::vector<std::pair<const char*, TorsionEntry TorsionReport::*>> entries{
        {"tau_ext_closed", &TorsionReport::tau_exterior_closed},
        {"tau_ext_oracle", &TorsionReport::tau_exterior_oracle},
        {"tau_solid_closed", &TorsionReport::tau_solid_closed},
        {"tau_solid_trace", &TorsionReport::tau_solid_trace},
        {"tau_surgered", &TorsionReport::tau_surgered},
        {"tau_manifold", &TorsionReport::tau_manifold},
    };
    return entries;
}

std::vector<std::string> failed_flag_names(const TorsionReport& r) {
    std::vector<std::string> out;
    const auto& f = r.flags;
    const std::pair<const char*, CheckResult> checks[] = {
        {"exterior_oracle_vs_closed", f.exterior_oracle_vs_closed},
        {"oracle_ratio_vs_chain", f.oracle_ratio_vs_chain},
        {"solid_trace_vs_closed", f.solid_trace_vs_closed},
        {"solid_trace_vs_circle", f.solid_trace_vs_circle},
        {"product_vs_theorem", f.product_vs_theorem},
        {"oracle_product_vs_theorem", f.oracle_product_vs_theorem},
    };
    for (const auto& [name, c] : checks)
        if (c == CheckResult::fail) out.emplace_back(std::string("fail:") + name);
    if (r.degenerate) out.emplace_back("degenerate");
    if (r.reducible) out.emplace_back("reducible");
    return out;
}

} // namespace

std::string torsion_csv_header() {
    std::string h = "s_re,s_im,t_re,t_im,branch,u_re,u_im,trl_re,trl_im";
    for (const auto& [name, member] : report_entries()) {
        (void)member;
        h += std::string(",") + name + "_re," + name + "_im," + name + "_status";
    }
    h += ",flags";
    return h;
}

std::string torsion_csv_row(const TorsionReport& r) {
    std::vector<std::string> cells{format_real(r.point.s.real()), format_real(r.point.s.imag()),
                                   format_real(r.point.t.real()), format_real(r.point.t.imag()),
                                   branch_symbol(r.point.branch),  format_real(r.u.real()),
                                   format_real(r.u.imag()),        format_real(r.trace_longitude.real()),
                                   format_real(r.trace_longitude.imag())};
    for (const auto& [name, member] : report_entries()) {
        (void)name;
        const TorsionEntry& e = r.*member;
        const bool has_value = e.ok() || (e.status == EntryStatus::not_acyclic && member == &TorsionReport::tau_manifold);
        cells.push_back(has_value ? format_real(e.value.real()) : "");
        cells.push_back(has_value ? format_real(e.value.imag()) : "");
        cells.emplace_back(status_name(e.status));
    }
    cells.push_back(join(failed_flag_names(r), ';'));
    return join(cells, ',');
}

Json to_json(const SurgerySolution& s) {
    Json j;
    j["point"] = to_json(s.point);
    j["u"] = to_json(s.u);
    j["trace_longitude"] = to_json(s.trace_longitude);
    j["lambda"] = to_json(s.lambda);
    j["tau"] = s.torsion ? to_json(*s.torsion) : Json(nullptr);
    j["res_variety"] = s.variety_residual;
    j["res_relation"] = s.relation_residual;
    j["flags"] = solution_flags(s);
    return j;
}

Json to_json(const SurgeryResult& r) {
    Json arr = Json::array();
    for (const auto& s : r.solutions) arr.push_back(to_json(s));
    return arr;
}

void write_surgery_csv(std::ostream& os, const SurgeryResult& r) {
    os << kSurgeryCsvHeader << '\n';
    for (const auto& s : r.solutions) {
        std::vector<std::string> cells{format_real(s.point.s.real()),        format_real(s.point.s.imag()),
                                       format_real(s.point.t.real()),        format_real(s.point.t.imag()),
                                       branch_symbol(s.point.branch),        format_real(s.u.real()),
                                       format_real(s.u.imag()),              format_real(s.trace_longitude.real()),
                                       format_real(s.trace_longitude.imag()), format_real(s.lambda.real()),
                                       format_real(s.lambda.imag())};
        cells.push_back(s.torsion ? format_real(s.torsion->real()) : "");
        cells.push_back(s.torsion ? format_real(s.torsion->imag()) : "");
        cells.push_back(format_real(s.variety_residual));
        cells.push_back(format_real(s.relation_residual));
        cells.push_back(join(solution_flags(s), ';'));
        os << join(cells, ',') << '\n';
    }
}

} // namespace fig8::io
