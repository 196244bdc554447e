#include "hyptor/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hyptor::io {

json rational_to_json(const Rational& q) {
    if (denominator(q) == 1) {
        auto num = numerator(q);
        if (num >= std::numeric_limits<long long>::min() &&
            num <= std::numeric_limits<long long>::max())
            return json(num.convert_to<long long>());
    }
    return json(rational_to_string(q));
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) return rational_from_half_integer(j.get<double>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected a rational (integer or \"p/q\" string)");
}

json weight_to_json(const std::vector<Rational>& k) {
    json arr = json::array();
    for (const auto& e : k) arr.push_back(rational_to_json(e));
    return arr;
}

std::vector<Rational> weight_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("weight must be an array of rationals");
    std::vector<Rational> k;
    for (const auto& e : j) k.push_back(rational_from_json(e));
    return k;
}

rep::GroupKind group_kind_from_json(const json& j) {
    auto s = j.get<std::string>();
    if (s == "SO0") return rep::GroupKind::SO0;
    if (s == "Spin") return rep::GroupKind::Spin;
    throw std::invalid_argument("group must be \"SO0\" or \"Spin\"");
}

json series_to_json(const series::TruncatedSeries<double>& s) {
    json terms = json::array();
    for (const auto& [alpha, c] : s.terms())
        terms.push_back(json{{"alpha", alpha}, {"c", c}});
    return json{{"m", s.vars()}, {"D", s.max_degree()}, {"terms", terms}};
}

series::TruncatedSeries<double> series_from_json(const json& j) {
    series::TruncatedSeries<double> s(j.at("m").get<int>(), j.at("D").get<int>());
    for (const auto& term : j.at("terms")) {
        auto alpha = term.at("alpha").get<std::vector<int>>();
        s.set(alpha, term.at("c").get<double>());
    }
    return s;
}

json expansion_to_json(const SmallTimeExpansion& e) {
    json terms = json::array();
    for (const auto& term : e.terms)
        terms.push_back(
            json{{"beta", rational_to_json(term.beta)}, {"c", term.c}, {"log", term.has_log}});
    return json{{"terms", terms}};
}

SmallTimeExpansion expansion_from_json(const json& j) {
    SmallTimeExpansion e;
    for (const auto& term : j.at("terms"))
        e.add(rational_from_json(term.at("beta")), term.at("c").get<double>(),
              term.value("log", false));
    return e;
}

json log_expansion_to_json(const stphase::LogExpansion& e) {
    json entries = json::array();
    for (const auto& entry : e.entries)
        entries.push_back(json{{"k", entry.k}, {"a", entry.a}, {"b", entry.b}});
    return json{{"m", e.m}, {"entries", entries}};
}

traceform::ManifoldData manifold_from_json(const json& j) {
    rep::GroupKind kind = j.contains("group") ? group_kind_from_json(j.at("group"))
                                              : rep::GroupKind::SO0;
    int d = j.at("dim").get<int>();
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("manifold: dim must be odd and >= 3");
    rep::Dimension dim((d - 1) / 2, kind);
    traceform::ManifoldData m{dim};
    m.volume = j.at("volume").get<double>();
    m.kappa = j.value("kappa", 0);
    m.C1 = j.value("C1", 0.0);
    m.C2 = j.value("C2", 0.0);
    m.c_n = j.value("cn", 1.0);
    if (j.contains("spectrum")) {
        for (const auto& ej : j.at("spectrum")) {
            traceform::LengthSpectrumEntry entry;
            entry.ell = ej.at("ell").get<double>();
            entry.ell0 = ej.at("ell0").get<double>();
            // the holonomy angles feed det(Id - Ad(m a)); explicit character
            // values can replace tr sigma(m) but never the angles
            entry.angles = ej.at("angles").get<std::vector<double>>();
            if (ej.contains("characters")) {
                for (const auto& cj : ej.at("characters")) {
                    rep::MWeight sigma(weight_from_json(cj.at("sigma")), dim);
                    entry.characters[traceform::sigma_key(sigma)] = {
                        cj.at("re").get<double>(), cj.value("im", 0.0)};
                }
            }
            m.spectrum.push_back(std::move(entry));
        }
    }
    m.validate();
    return m;
}

zeta::SpectralData spectral_from_json(const json& j) {
    zeta::SpectralData data;
    if (j.contains("eigenvalues")) {
        for (const auto& ej : j.at("eigenvalues"))
            data.eigenvalues.push_back({ej.at("lam").get<double>(), ej.value("mult", 1.0)});
    }
    data.h = j.value("h", 0.0);
    if (j.contains("continuous")) {
        const auto& cj = j.at("continuous");
        zeta::ContinuousPart c;
        c.grid = cj.at("grid").get<std::vector<double>>();
        const auto& values = cj.at("values");
        if (!values.empty() && values.front().is_array())
            c.values = values.get<std::vector<std::vector<double>>>();
        else
            c.values = {values.get<std::vector<double>>()};
        c.shifts = cj.value("shifts", std::vector<double>(c.values.size(), 0.0));
        c.c_zero = cj.value("c_zero", std::vector<double>{});
        data.continuous = std::move(c);
    }
    data.validate();
    return data;
}

json load_json_file(const std::string& path, const std::string& what) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + what + ": " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        // err.byte is a 1-based offset into the input; report line/column.
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < err.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw std::runtime_error("malformed JSON in " + path + " at line " + std::to_string(line) +
                                 ", column " + std::to_string(col) + ": " + err.what());
    }
}

}  // namespace hyptor::io
