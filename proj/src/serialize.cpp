#include "finfree/serialize.hpp"

#include <fstream>
#include <ostream>

namespace finfree {

namespace {

std::vector<Rational> parse_rational_array(const Json& arr, const char* what) {
    if (!arr.is_array() || arr.empty())
        throw std::invalid_argument(std::string(what) + " must be a non-empty array");
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const Json& v : arr) {
        if (v.is_string())
            out.push_back(parse_rational(v.get<std::string>()));
        else if (v.is_number_integer())
            out.push_back(Rational(v.get<long long>()));
        else
            throw std::invalid_argument(std::string(what) + " entries must be rational strings");
    }
    return out;
}

void check_degree_field(const Json& j, std::size_t implied) {
    if (j.contains("degree") && j["degree"].get<std::size_t>() != implied)
        throw std::invalid_argument("declared degree does not match the data length");
}

}  // namespace

Json roots_to_json(const RootMultiset<Rational>& roots) {
    Json arr = Json::array();
    for (const Rational& r : roots) arr.push_back(rational_to_string(r));
    return Json{{"degree", roots.degree()}, {"roots", std::move(arr)}};
}

Json roots_to_json(const RootMultiset<BigFloat>& roots, unsigned digits) {
    Json arr = Json::array();
    for (const BigFloat& r : roots) arr.push_back(format_decimal(r, digits));
    return Json{{"degree", roots.degree()}, {"roots_decimal", std::move(arr)}};
}

Json profile_to_json(const SymmetricProfile& profile) {
    Json j{{"degree", profile.degree()}, {"zero_count", profile.zero_count()}};
    if (profile.has_exact()) {
        Json arr = Json::array();
        for (const Rational& v : profile.e_tilde()) arr.push_back(rational_to_string(v));
        j["e_tilde"] = std::move(arr);
    } else {
        Json arr = Json::array();
        for (double v : profile.log_e_tilde())
            arr.push_back(v == kNegInf ? std::string("-inf") : format_decimal(v));
        j["log_e_tilde"] = std::move(arr);
        j["precision_bits"] = 53;
    }
    return j;
}

SymmetricProfile profile_from_json(const Json& j) {
    if (j.contains("roots")) {
        auto roots = parse_rational_array(j["roots"], "roots");
        check_degree_field(j, roots.size());
        return profile_from_roots(RootMultiset<Rational>(std::move(roots)));
    }
    if (j.contains("e_tilde")) {
        auto values = parse_rational_array(j["e_tilde"], "e_tilde");
        check_degree_field(j, values.size() - 1);
        return SymmetricProfile::from_e_tilde(std::move(values));
    }
    if (j.contains("coefficients")) {
        auto coeffs = parse_rational_array(j["coefficients"], "coefficients");
        check_degree_field(j, coeffs.size() - 1);
        return coefficients_to_profile(BigPoly(std::move(coeffs)));
    }
    if (j.contains("log_e_tilde")) {
        std::vector<double> logs;
        for (const Json& v : j["log_e_tilde"]) {
            if (v.is_string() && v.get<std::string>() == "-inf")
                logs.push_back(kNegInf);
            else if (v.is_string())
                logs.push_back(std::stod(v.get<std::string>()));
            else
                logs.push_back(v.get<double>());
        }
        check_degree_field(j, logs.size() - 1);
        return SymmetricProfile::from_logs(std::move(logs));
    }
    throw std::invalid_argument("polynomial JSON needs roots, e_tilde, coefficients, or log_e_tilde");
}

Json poly_to_json(const BigPoly& poly) {
    Json arr = Json::array();
    for (const Rational& c : poly.coeffs()) arr.push_back(rational_to_string(c));
    return Json{{"degree", poly.degree()}, {"coefficients", std::move(arr)}};
}

BigPoly poly_from_json(const Json& j) {
    if (j.contains("coefficients")) {
        auto coeffs = parse_rational_array(j["coefficients"], "coefficients");
        check_degree_field(j, coeffs.size() - 1);
        BigPoly p(std::move(coeffs));
        if (!p.is_monic()) throw std::invalid_argument("polynomial must be monic");
        return p;
    }
    if (j.contains("roots")) {
        auto roots = parse_rational_array(j["roots"], "roots");
        check_degree_field(j, roots.size());
        return BigPoly::from_roots(roots);
    }
    if (j.contains("e_tilde")) {
        auto values = parse_rational_array(j["e_tilde"], "e_tilde");
        check_degree_field(j, values.size() - 1);
        return profile_to_coefficients(SymmetricProfile::from_e_tilde(std::move(values)));
    }
    throw std::invalid_argument("polynomial JSON needs roots, e_tilde, or coefficients");
}

Json measure_to_json(const MeasureSpec& mu) {
    switch (mu.kind()) {
        case MeasureKind::marchenko_pastur:
            return Json{{"kind", "mp"}};
        case MeasureKind::bernoulli_half:
            return Json{{"kind", "bernoulli_half"}};
        case MeasureKind::discrete: {
            Json atoms = Json::array();
            for (const auto& a : mu.atoms())
                atoms.push_back(Json::array({rational_to_string(a.weight), rational_to_string(a.location)}));
            return Json{{"kind", "discrete"}, {"atoms", std::move(atoms)}};
        }
    }
    throw std::logic_error("unreachable");
}

MeasureSpec measure_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "mp" || kind == "marchenko_pastur") return MeasureSpec::marchenko_pastur();
    if (kind == "bernoulli_half") return MeasureSpec::bernoulli_half();
    if (kind == "discrete") {
        std::vector<MeasureSpec::Atom> atoms;
        for (const Json& entry : j.at("atoms")) {
            if (!entry.is_array() || entry.size() != 2)
                throw std::invalid_argument("each atom must be a [weight, location] pair");
            MeasureSpec::Atom a;
            a.weight = entry[0].is_string() ? parse_rational(entry[0].get<std::string>())
                                            : Rational(entry[0].get<long long>());
            a.location = entry[1].is_string() ? parse_rational(entry[1].get<std::string>())
                                              : Rational(entry[1].get<long long>());
            atoms.push_back(std::move(a));
        }
        return MeasureSpec::discrete(std::move(atoms));
    }
    throw std::invalid_argument("unknown measure kind: " + kind);
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    Json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << j.dump(2) << '\n';
}

namespace {

bool needs_csv_quotes(const std::string& cell) {
    return cell.find_first_of(",\"\n") != std::string::npos;
}

void write_cell(std::ostream& os, const std::string& cell) {
    if (!needs_csv_quotes(cell)) {
        os << cell;
        return;
    }
    os << '"';
    for (char c : cell) {
        if (c == '"') os << '"';
        os << c;
    }
    os << '"';
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) os << ',';
        write_cell(os, table.header[i]);
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            write_cell(os, row[i]);
        }
        os << '\n';
    }
}

void write_json_rows(std::ostream& os, const Table& table) {
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        Json obj;
        for (std::size_t i = 0; i < row.size() && i < table.header.size(); ++i)
            obj[table.header[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    os << rows.dump(2) << '\n';
}

}  // namespace finfree
