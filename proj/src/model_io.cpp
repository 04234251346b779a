#include "tilt3/model_io.hpp"

#include "tilt3/fano.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tilt3 {

using nlohmann::json;

namespace {

json rational_vec(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(q.str());
    return out;
}

std::vector<Rational> parse_rational_vec(const json& j) {
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(Rational::parse(x.get<std::string>()));
    return out;
}

json scalar_vec(const std::vector<Scalar>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

std::vector<Scalar> parse_scalar_vec(const json& j) {
    std::vector<Scalar> out;
    for (const auto& x : j) out.push_back(Scalar::parse(x.get<std::string>()));
    return out;
}

}  // namespace

std::string model_to_json(const ModelPtr& m) {
    const auto& d = m->data();
    json j;
    j["name"] = d.name;
    j["divisor_basis"] = d.divisor_basis;
    j["curve_basis"] = d.curve_basis;
    json pairing = json::array();
    for (const auto& row : d.pairing) pairing.push_back(rational_vec(row));
    j["pairing"] = pairing;
    json product = json::object();
    for (size_t i = 0; i < d.product.size(); ++i)
        for (size_t jj = i; jj < d.product[i].size(); ++jj)
            product[std::to_string(i) + "," + std::to_string(jj)] =
                rational_vec(d.product[i][jj]);
    j["product"] = product;
    j["c1_tangent"] = rational_vec(d.c1_tangent);
    j["ch2_tangent"] = rational_vec(d.ch2_tangent);
    j["H"] = rational_vec(d.polarization);
    if (d.fano_index) j["fano_index"] = *d.fano_index;
    return j.dump(2);
}

ModelPtr model_from_json(const std::string& text) {
    json j = json::parse(text);
    ThreefoldModel::Data d;
    d.name = j.at("name").get<std::string>();
    d.divisor_basis = j.at("divisor_basis").get<std::vector<std::string>>();
    d.curve_basis = j.at("curve_basis").get<std::vector<std::string>>();
    for (const auto& row : j.at("pairing")) d.pairing.push_back(parse_rational_vec(row));
    size_t r = d.divisor_basis.size(), s = d.curve_basis.size();
    d.product.assign(r, std::vector<std::vector<Rational>>(r, std::vector<Rational>(s)));
    for (const auto& [key, value] : j.at("product").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("product key must look like \"i,j\": " + key);
        size_t i = std::stoul(key.substr(0, comma));
        size_t jj = std::stoul(key.substr(comma + 1));
        if (i >= r || jj >= r) throw std::invalid_argument("product key out of range: " + key);
        auto vec = parse_rational_vec(value);
        d.product[i][jj] = vec;
        d.product[jj][i] = vec;
    }
    d.c1_tangent = parse_rational_vec(j.at("c1_tangent"));
    d.ch2_tangent = parse_rational_vec(j.at("ch2_tangent"));
    d.polarization = parse_rational_vec(j.at("H"));
    if (j.contains("fano_index")) d.fano_index = j.at("fano_index").get<unsigned>();
    return ThreefoldModel::create(std::move(d));
}

ModelPtr model_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open model file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return model_from_json(ss.str());
}

std::string chern_to_json(const ChernCharacter& ch) {
    json j;
    j["ch0"] = ch.ch0.str();
    j["ch1"] = scalar_vec(ch.ch1.coeffs());
    j["ch2"] = scalar_vec(ch.ch2.coeffs());
    j["ch3"] = ch.ch3.str();
    return j.dump();
}

ChernCharacter chern_from_json(const ModelPtr& m, const std::string& text) {
    // members built as locals first: gcc 11 fails to unwind partially
    // initialized aggregates (PR 66139)
    json j = json::parse(text);
    Scalar ch0 = Scalar::parse(j.at("ch0").get<std::string>());
    DivisorClass ch1 = m->divisor(parse_scalar_vec(j.at("ch1")));
    CurveClass ch2 = m->curve(parse_scalar_vec(j.at("ch2")));
    Scalar ch3 = Scalar::parse(j.at("ch3").get<std::string>());
    return {std::move(ch0), std::move(ch1), std::move(ch2), std::move(ch3)};
}

std::string wall_to_json(const WallDescriptor& w) {
    json j;
    if (w.is_vertical()) {
        j["kind"] = "vertical";
        j["beta"] = w.beta_wall.str();
    } else {
        j["kind"] = "semicircle";
        j["center"] = w.center_beta.str();
        j["radius_sq"] = w.radius_sq.str();
    }
    return j.dump();
}

std::string fan_to_json(const ToricThreefold& tv) {
    json j;
    json rays = json::array();
    for (const auto& r : tv.fan.rays) rays.push_back({r[0], r[1], r[2]});
    j["rays"] = rays;
    json cones = json::array();
    for (const auto& c : tv.fan.max_cones) cones.push_back({c[0], c[1], c[2]});
    j["cones"] = cones;
    json rc = json::object();
    for (size_t i = 0; i < tv.ray_classes.size(); ++i) rc[std::to_string(i)] = tv.ray_classes[i];
    j["ray_classes"] = rc;
    return j.dump(2);
}

ToricThreefold toric_from_json(const ModelPtr& m, const std::string& text) {
    json j = json::parse(text);
    ToricThreefold tv;
    tv.model = m;
    for (const auto& r : j.at("rays"))
        tv.fan.rays.push_back({r.at(0).get<long>(), r.at(1).get<long>(), r.at(2).get<long>()});
    for (const auto& c : j.at("cones"))
        tv.fan.max_cones.push_back(
            {c.at(0).get<size_t>(), c.at(1).get<size_t>(), c.at(2).get<size_t>()});
    tv.ray_classes.resize(tv.fan.rays.size());
    for (const auto& [key, value] : j.at("ray_classes").items()) {
        size_t i = std::stoul(key);
        if (i >= tv.ray_classes.size())
            throw std::invalid_argument("ray_classes key out of range: " + key);
        tv.ray_classes[i] = value.get<std::vector<long>>();
    }
    return tv;
}

namespace {

// "2h - e + 3f" over the model's divisor basis names, integer or rational
// coefficients.
struct DivisorExprParser {
    const ModelPtr& model;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    std::optional<Rational> try_number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (pos == start) return std::nullopt;
        return Rational::parse(s.substr(start, pos - start));
    }

    std::string identifier() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    DivisorClass parse() {
        DivisorClass acc = model->zero_divisor();
        bool any = false;
        int sign = 1;
        skip_ws();
        while (pos < s.size()) {
            skip_ws();
            if (pos >= s.size()) break;
            if (s[pos] == '+') {
                sign = 1;
                ++pos;
                continue;
            }
            if (s[pos] == '-') {
                sign = -1;
                ++pos;
                continue;
            }
            Rational coeff = try_number().value_or(Rational(1));
            skip_ws();
            if (pos < s.size() && s[pos] == '*') ++pos;
            skip_ws();
            if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
                std::string name = identifier();
                acc += Scalar(Rational(sign) * coeff) * model->named_divisor(name);
            } else {
                if (!coeff.is_zero())
                    throw std::invalid_argument("constant term in divisor expression: " + s);
            }
            any = true;
            sign = 1;
        }
        if (!any) throw std::invalid_argument("empty divisor expression");
        return acc;
    }
};

}  // namespace

DivisorClass parse_divisor_expr(const ModelPtr& m, const std::string& text) {
    DivisorExprParser p{m, text};
    return p.parse();
}

ChernCharacter parse_class_expr(const ModelPtr& m, const std::string& text) {
    std::string s = text;
    auto strip = [&]() {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    };
    strip();
    if (s.empty()) throw std::invalid_argument("empty class expression");
    if (s.front() == '{') return chern_from_json(m, s);
    auto wrapped = [&](const std::string& head) -> std::optional<std::string> {
        if (s.rfind(head + "(", 0) == 0 && s.back() == ')')
            return s.substr(head.size() + 1, s.size() - head.size() - 2);
        return std::nullopt;
    };
    if (auto inner = wrapped("O")) return ch_line_bundle(parse_divisor_expr(m, *inner));
    if (auto inner = wrapped("div")) return ch_divisor_sheaf(parse_divisor_expr(m, *inner));
    throw std::invalid_argument("cannot parse class expression: " + text +
                                " (expected O(...), div(...) or JSON)");
}

namespace {

// Degree-two monomial sums over divisor basis names, e.g. "h^2+2e^2",
// "3/2h*f - e^2".
CurveClass parse_quadratic_curve(const ModelPtr& m, const std::string& s) {
    CurveClass acc = m->zero_curve();
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    int sign = 1;
    bool any = false;
    while (pos < s.size()) {
        skip_ws();
        if (pos >= s.size()) break;
        if (s[pos] == '+') {
            sign = 1;
            ++pos;
            continue;
        }
        if (s[pos] == '-') {
            sign = -1;
            ++pos;
            continue;
        }
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        Rational coeff = pos > start ? Rational::parse(s.substr(start, pos - start)) : Rational(1);
        skip_ws();
        if (pos < s.size() && s[pos] == '*') ++pos;
        skip_ws();
        start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        std::string first = s.substr(start, pos - start);
        if (first.empty()) throw std::invalid_argument("bad curve monomial in: " + s);
        DivisorClass d1 = m->named_divisor(first);
        DivisorClass d2 = d1;
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            if (pos >= s.size() || s[pos] != '2')
                throw std::invalid_argument("only squares are allowed: " + s);
            ++pos;
        } else if (pos < s.size() && s[pos] == '*') {
            ++pos;
            skip_ws();
            start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            d2 = m->named_divisor(s.substr(start, pos - start));
        } else {
            throw std::invalid_argument("curve monomial must have degree two: " + s);
        }
        acc += Scalar(Rational(sign) * coeff) * product_curve(d1, d2);
        sign = 1;
        any = true;
    }
    if (!any) throw std::invalid_argument("empty curve expression");
    return acc;
}

}  // namespace

GammaClass parse_gamma_expr(const FanoEntry& entry, const std::string& text) {
    std::string s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s == "0") return GammaClass::zero(entry.model);
    if (s == "builtin") return entry.gamma;
    // Optional scalar prefix multiplying a parenthesized quadratic:
    // "1/48(h^2+2e^2)".
    auto open = s.find('(');
    if (open != std::string::npos && s.back() == ')') {
        std::string head = s.substr(0, open);
        std::string inner = s.substr(open + 1, s.size() - open - 2);
        Scalar k = head.empty() ? Scalar(1) : Scalar::parse(head);
        return GammaClass(k * parse_quadratic_curve(entry.model, inner));
    }
    return GammaClass(parse_quadratic_curve(entry.model, s));
}

}  // namespace tilt3
