#include "gll/spaces.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace gll {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite_pos(double x) { return x > 0.0 && x < kInf; }

void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidSpec(msg);
}

const std::map<std::string, SpaceKind>& kind_names() {
    static const std::map<std::string, SpaceKind> m = {
        {"lorentz", SpaceKind::Lorentz},
        {"grand-lorentz", SpaceKind::GrandLorentz},
        {"dyadic-grand-lorentz", SpaceKind::DyadicGrandLorentz},
        {"lorentz-karamata", SpaceKind::LorentzKaramata},
        {"afh-grand-lorentz", SpaceKind::AfhGrandLorentz},
        {"grand-lebesgue", SpaceKind::GrandLebesgue},
        {"small-lebesgue", SpaceKind::SmallLebesgue},
    };
    return m;
}

std::string kind_name(SpaceKind k) {
    for (const auto& [name, kind] : kind_names())
        if (kind == k) return name;
    return "?";
}

std::string num(double x) {
    if (x == kInf) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

double parse_num(const std::string& s) {
    if (s == "inf") return kInf;
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw InvalidSpec("bad number: " + s);
    return v;
}

}  // namespace

void validate(const SpaceSpec& s) {
    const bool q_ok = s.q > 0.0;  // q = inf allowed
    switch (s.kind) {
        case SpaceKind::Lorentz:
            require(finite_pos(s.p), "lorentz: need 0 < p < inf");
            require(q_ok, "lorentz: need q > 0");
            break;
        case SpaceKind::GrandLorentz:
            require(q_ok, "grand-lorentz: need q > 0");
            if (s.theta > 0.0)
                require(s.p > 0.0, "grand-lorentz: need p > 0");
            else
                // theta = 0 reduces to Lorentz; theta < 0 shifts 1/p down by
                // eps <= 1/p, so p = inf leaves no room for eps
                require(finite_pos(s.p), "grand-lorentz: need 0 < p < inf when theta <= 0");
            break;
        case SpaceKind::DyadicGrandLorentz:
            require(s.theta != 0.0, "dyadic-grand-lorentz: need theta != 0");
            require(q_ok, "dyadic-grand-lorentz: need tau > 0");
            if (s.theta > 0.0)
                require(s.p > 0.0, "dyadic-grand-lorentz: need p > 0");
            else
                require(finite_pos(s.p), "dyadic-grand-lorentz: need 0 < p < inf when theta < 0");
            break;
        case SpaceKind::LorentzKaramata:
            require(s.p > 0.0, "lorentz-karamata: need p > 0");
            require(q_ok, "lorentz-karamata: need tau > 0");
            break;
        case SpaceKind::AfhGrandLorentz:
            require(s.p > 0.0, "afh-grand-lorentz: need p > 0");
            require(q_ok, "afh-grand-lorentz: need tau > 0");
            require(s.theta > 0.0, "afh-grand-lorentz: need theta > 0");
            break;
        case SpaceKind::GrandLebesgue:
            require(s.p > 1.0 && s.p < kInf, "grand-lebesgue: need 1 < p < inf");
            require(s.theta > 0.0, "grand-lebesgue: need theta > 0");
            break;
        case SpaceKind::SmallLebesgue:
            require(s.p > 1.0 && s.p < kInf, "small-lebesgue: need 1 < p' < inf");
            require(s.theta > 0.0, "small-lebesgue: need theta > 0");
            break;
    }
}

std::string label(const SpaceSpec& s) {
    std::ostringstream out;
    out << kind_name(s.kind) << ":p=" << num(s.p);
    switch (s.kind) {
        case SpaceKind::Lorentz:
            out << ",q=" << num(s.q);
            break;
        case SpaceKind::GrandLorentz:
            out << ",q=" << num(s.q) << ",theta=" << num(s.theta);
            break;
        case SpaceKind::DyadicGrandLorentz:
        case SpaceKind::LorentzKaramata:
        case SpaceKind::AfhGrandLorentz:
            out << ",tau=" << num(s.q) << ",theta=" << num(s.theta);
            break;
        case SpaceKind::GrandLebesgue: {
            const char* form = s.form == GrandLebesgueForm::EpsilonSup ? "eps-sup"
                               : s.form == GrandLebesgueForm::RearrFormula ? "tail-sup"
                                                                           : "eps-shift";
            const char* range = s.range == EpsRange::Full        ? "full"
                                : s.range == EpsRange::ProofRange ? "proof"
                                                                  : "half";
            out << ",theta=" << num(s.theta) << ",form=" << form << ",range=" << range;
            break;
        }
        case SpaceKind::SmallLebesgue:
            out << ",theta=" << num(s.theta);
            break;
    }
    return out.str();
}

SpaceSpec parse_space(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind_str = text.substr(0, colon);
    auto it = kind_names().find(kind_str);
    if (it == kind_names().end()) throw InvalidSpec("unknown space kind: " + kind_str);

    SpaceSpec s;
    s.kind = it->second;
    if (colon != std::string::npos) {
        std::istringstream rest(text.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw InvalidSpec("expected key=value: " + item);
            const std::string key = item.substr(0, eq);
            const std::string val = item.substr(eq + 1);
            if (key == "p")
                s.p = parse_num(val);
            else if (key == "q" || key == "tau")
                s.q = parse_num(val);
            else if (key == "theta")
                s.theta = parse_num(val);
            else if (key == "form") {
                if (val == "eps-sup")
                    s.form = GrandLebesgueForm::EpsilonSup;
                else if (val == "tail-sup")
                    s.form = GrandLebesgueForm::RearrFormula;
                else if (val == "eps-shift")
                    s.form = GrandLebesgueForm::GLpTheta;
                else
                    throw InvalidSpec("unknown form: " + val);
            } else if (key == "range") {
                if (val == "full")
                    s.range = EpsRange::Full;
                else if (val == "proof")
                    s.range = EpsRange::ProofRange;
                else if (val == "half")
                    s.range = EpsRange::Restricted;
                else
                    throw InvalidSpec("unknown range: " + val);
            } else {
                throw InvalidSpec("unknown key: " + key);
            }
        }
    }
    validate(s);
    return s;
}

}  // namespace gll
