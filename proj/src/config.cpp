/*
 Copyright 2026 The ppc-heli Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#include "ppc/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/core.h>

#include "ppc/errors.hpp"

namespace ppc {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>, std::less<>> kSchema = {
    {"scenario", {"name"}},
    {"plant",
     {"channel", "g", "f_c0", "f_c1", "f_c2", "f_c3", "initial_angle", "initial_angle_deg", "initial_rate",
      "reference_amplitude", "reference_frequency", "reference_phase", "reference_offset"}},
    {"disturbance", {"amplitude", "frequency", "phase"}},
    {"envelope", {"kind", "delta", "lambda_inf", "t_f", "rho0", "rho_inf", "k"}},
    {"transform", {"kind"}},
    {"controller", {"gamma1", "gamma2", "p", "l1", "l2", "l3", "l4", "m", "w1_z_term"}},
    {"integrator", {"dt", "duration"}},
};

class Reader {
public:
    explicit Reader(const pt::ptree& tree) : tree_(tree) {}

    bool has(const std::string& key) const { return tree_.get_child_optional(key).has_value(); }

    std::string text(const std::string& key) const
    {
        auto v = tree_.get_optional<std::string>(key);
        if (!v) {
            throw ConfigError(key, fmt::format("missing required key '{}'", key));
        }
        return *v;
    }

    std::string text_or(const std::string& key, std::string fallback) const
    {
        return has(key) ? text(key) : std::move(fallback);
    }

    double number(const std::string& key) const
    {
        const std::string raw = text(key);
        double value = 0.0;
        const char* first = raw.data();
        const char* last = raw.data() + raw.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            throw ConfigError(key, fmt::format("'{}' is not a number: '{}'", key, raw));
        }
        if (!std::isfinite(value)) {
            throw ConfigError(key, fmt::format("'{}' must be finite", key));
        }
        return value;
    }

    double number_or(const std::string& key, double fallback) const
    {
        return has(key) ? number(key) : fallback;
    }

private:
    const pt::ptree& tree_;
};

void check_keys(const pt::ptree& tree)
{
    for (const auto& [section, body] : tree) {
        auto known = kSchema.find(section);
        if (!body.data().empty()) {
            throw ConfigError(section, fmt::format("key '{}' must live inside a section", section));
        }
        if (known == kSchema.end()) {
            throw ConfigError(section, fmt::format("unknown section [{}]", section));
        }
        for (const auto& [key, value] : body) {
            if (!known->second.contains(key)) {
                throw ConfigError(section + "." + key, fmt::format("unknown key '{}.{}'", section, key));
            }
        }
    }
}

// Maps a broken invariant onto the key that carries it.
template <typename Fn>
void require(const std::string& key, Fn&& validate)
{
    try {
        validate();
    } catch (const ParameterError& err) {
        throw ConfigError(key, fmt::format("{}: {}", key, err.what()));
    }
}

void reject_keys(const Reader& r, std::string_view kind, std::initializer_list<const char*> keys)
{
    for (const char* key : keys) {
        if (r.has(key)) {
            throw ConfigError(key, fmt::format("'{}' is not valid for envelope kind {}", key, kind));
        }
    }
}

Scenario from_tree(const pt::ptree& tree)
{
    check_keys(tree);
    const Reader r(tree);
    Scenario s;

    s.name = r.text_or("scenario.name", "scenario");

    const std::string channel = r.text_or("plant.channel", "elevation");
    if (channel == "elevation") {
        s.plant.channel = Channel::elevation;
    } else if (channel == "pitch") {
        s.plant.channel = Channel::pitch;
    } else {
        throw ConfigError("plant.channel", "plant.channel must be elevation or pitch");
    }
    s.plant.g = r.number("plant.g");
    for (std::size_t i = 0; i < s.plant.f_coeffs.size(); ++i) {
        s.plant.f_coeffs[i] = r.number_or(fmt::format("plant.f_c{}", i), 0.0);
    }
    require("plant.g", [&] { s.plant.validate(); });

    const bool has_rad = r.has("plant.initial_angle");
    const bool has_deg = r.has("plant.initial_angle_deg");
    if (has_rad == has_deg) {
        throw ConfigError("plant.initial_angle_deg",
                          "exactly one of plant.initial_angle_deg / plant.initial_angle is required");
    }
    s.initial_angle = has_deg ? deg_to_rad(r.number("plant.initial_angle_deg")) : r.number("plant.initial_angle");
    s.initial_rate = r.number_or("plant.initial_rate", 0.0);

    const ReferenceTrajectory ref_default;
    s.reference.amplitude = r.number_or("plant.reference_amplitude", ref_default.amplitude);
    s.reference.frequency = r.number_or("plant.reference_frequency", ref_default.frequency);
    s.reference.phase = r.number_or("plant.reference_phase", ref_default.phase);
    s.reference.offset = r.number_or("plant.reference_offset", ref_default.offset);

    s.disturbance.amplitude = r.number_or("disturbance.amplitude", 0.0);
    s.disturbance.frequency = r.number_or("disturbance.frequency", 1.0);
    s.disturbance.phase = r.number_or("disturbance.phase", 0.0);

    const std::string envelope = r.text("envelope.kind");
    if (envelope == "novel") {
        reject_keys(r, envelope, {"envelope.rho0", "envelope.rho_inf", "envelope.k"});
        NovelEnvelopeSpec spec{r.number("envelope.delta"), r.number("envelope.lambda_inf"), r.number("envelope.t_f")};
        require("envelope.lambda_inf", [&] {
            if (!(spec.lambda_inf > 0.0)) throw ParameterError("constraint lambda_inf > 0 violated");
        });
        require("envelope.delta", [&] {
            if (!(spec.delta > spec.lambda_inf)) throw ParameterError("constraint delta > lambda_inf violated");
        });
        require("envelope.t_f", [&] {
            if (!(spec.t_f > 0.0)) throw ParameterError("constraint t_f > 0 violated");
        });
        s.envelope = spec;
    } else if (envelope == "exponential") {
        reject_keys(r, envelope, {"envelope.delta", "envelope.lambda_inf", "envelope.t_f"});
        ExpPpfParams spec{r.number("envelope.rho0"), r.number("envelope.rho_inf"), r.number("envelope.k")};
        require("envelope.rho0", [&] { spec.validate(); });
        s.envelope = spec;
    } else {
        throw ConfigError("envelope.kind", "envelope.kind must be novel or exponential");
    }

    const std::string transform = r.text("transform.kind");
    if (transform == "arctan") {
        s.transform = TransformKind::arctan;
    } else if (transform == "tanh") {
        s.transform = TransformKind::tanh;
    } else {
        throw ConfigError("transform.kind", "transform.kind must be arctan or tanh");
    }
    if ((envelope == "novel") != (s.transform == TransformKind::arctan)) {
        throw ConfigError("transform.kind",
                          "transform.kind must pair novel with arctan and exponential with tanh");
    }

    auto& c = s.controller;
    c.surface = {r.number("controller.gamma1"), r.number("controller.gamma2"), r.number("controller.p")};
    c.gains = {r.number("controller.l1"), r.number("controller.l2"), r.number("controller.l3"),
               r.number("controller.l4"), r.number("controller.m")};
    const std::string zterm = r.text_or("controller.w1_z_term", "zs");
    if (zterm == "zs") {
        c.w1_z_term = W1ZTerm::zs;
    } else if (zterm == "z1") {
        c.w1_z_term = W1ZTerm::z1;
    } else {
        throw ConfigError("controller.w1_z_term", "controller.w1_z_term must be zs or z1");
    }
    require("controller.gamma1", [&] { if (!(c.surface.gamma1 > 0.0)) throw ParameterError("constraint gamma1 > 0 violated"); });
    require("controller.gamma2", [&] { if (!(c.surface.gamma2 > 0.0)) throw ParameterError("constraint gamma2 > 0 violated"); });
    require("controller.p", [&] { if (!(c.surface.p > 0.0 && c.surface.p < 1.0)) throw ParameterError("constraint 0 < p < 1 violated"); });
    for (const char* key : {"l1", "l2", "l3", "l4"}) {
        const double v = r.number(fmt::format("controller.{}", key));
        require(fmt::format("controller.{}", key), [&] { if (v < 0.0) throw ParameterError("constraint gain >= 0 violated"); });
    }
    require("controller.m", [&] { if (!(c.gains.m > 2.0)) throw ParameterError("constraint m > 2 violated"); });

    s.dt = r.number("integrator.dt");
    s.duration = r.number("integrator.duration");
    require("integrator.dt", [&] { if (!(s.dt > 0.0)) throw ParameterError("constraint dt > 0 violated"); });
    require("integrator.duration", [&] { if (!(s.duration >= s.dt)) throw ParameterError("constraint duration >= dt violated"); });

    require("scenario", [&] { s.validate(); });
    return s;
}

pt::ptree parse_tree(std::string_view text)
{
    std::istringstream in{std::string(text)};
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& err) {
        throw ConfigError("", fmt::format("malformed config (line {}): {}", err.line(), err.message()));
    }
    return tree;
}

std::string num(double v)
{
    return fmt::format("{:.17g}", v);
}

}  // namespace

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::runtime_error(message), key_(std::move(key))
{
}

Scenario parse_config(std::string_view text)
{
    return from_tree(parse_tree(text));
}

Scenario load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("", fmt::format("cannot open config '{}'", path));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string write_config(const Scenario& s)
{
    std::string out;
    auto line = [&out](std::string_view key, const std::string& value) {
        out += fmt::format("{} = {}\n", key, value);
    };

    out += "[scenario]\n";
    line("name", s.name);

    out += "\n[plant]\n";
    line("channel", std::string(to_string(s.plant.channel)));
    line("g", num(s.plant.g));
    for (std::size_t i = 0; i < s.plant.f_coeffs.size(); ++i) {
        line(fmt::format("f_c{}", i), num(s.plant.f_coeffs[i]));
    }
    line("initial_angle", num(s.initial_angle));
    line("initial_rate", num(s.initial_rate));
    line("reference_amplitude", num(s.reference.amplitude));
    line("reference_frequency", num(s.reference.frequency));
    line("reference_phase", num(s.reference.phase));
    line("reference_offset", num(s.reference.offset));

    out += "\n[disturbance]\n";
    line("amplitude", num(s.disturbance.amplitude));
    line("frequency", num(s.disturbance.frequency));
    line("phase", num(s.disturbance.phase));

    out += "\n[envelope]\n";
    if (const auto* novel = std::get_if<NovelEnvelopeSpec>(&s.envelope)) {
        line("kind", "novel");
        line("delta", num(novel->delta));
        line("lambda_inf", num(novel->lambda_inf));
        line("t_f", num(novel->t_f));
    } else {
        const auto& exp = std::get<ExpPpfParams>(s.envelope);
        line("kind", "exponential");
        line("rho0", num(exp.rho0));
        line("rho_inf", num(exp.rho_inf));
        line("k", num(exp.k));
    }

    out += "\n[transform]\n";
    line("kind", std::string(to_string(s.transform)));

    const auto& c = s.controller;
    out += "\n[controller]\n";
    line("gamma1", num(c.surface.gamma1));
    line("gamma2", num(c.surface.gamma2));
    line("p", num(c.surface.p));
    line("l1", num(c.gains.l1));
    line("l2", num(c.gains.l2));
    line("l3", num(c.gains.l3));
    line("l4", num(c.gains.l4));
    line("m", num(c.gains.m));
    line("w1_z_term", std::string(to_string(c.w1_z_term)));

    out += "\n[integrator]\n";
    line("dt", num(s.dt));
    line("duration", num(s.duration));
    return out;
}

Scenario case1_scenario()
{
    Scenario s;
    s.name = "case1";
    s.disturbance = {0.2, 1.0, 0.0};
    s.envelope = NovelEnvelopeSpec{0.1, 0.01, 1.5};
    s.transform = TransformKind::arctan;
    s.initial_angle = deg_to_rad(-24.0);
    return s;
}

Scenario case2_baseline_scenario()
{
    Scenario s = case1_scenario();
    s.name = "case2-baseline";
    s.envelope = ExpPpfParams{0.48, 0.01, 2.0};
    s.transform = TransformKind::tanh;
    return s;
}

std::vector<Scenario> builtin_case(std::string_view name)
{
    if (name == "case1") {
        return {case1_scenario()};
    }
    if (name == "case2") {
        Scenario proposed = case1_scenario();
        proposed.name = "case2-proposed";
        return {proposed, case2_baseline_scenario()};
    }
    throw ConfigError("case", fmt::format("unknown built-in case '{}' (expected case1 or case2)", name));
}

Scenario with_override(const Scenario& base, std::string_view dotted_key, std::string_view value)
{
    pt::ptree tree = parse_tree(write_config(base));
    const std::string key(dotted_key);
    const auto dot = key.find('.');
    if (dot == std::string::npos) {
        throw ConfigError(key, fmt::format("override key '{}' must be section.key", key));
    }
    if (key == "plant.initial_angle_deg") {
        tree.get_child("plant").erase("initial_angle");
    }
    tree.put(pt::ptree::path_type(key, '.'), std::string(value));
    return from_tree(tree);
}

}  // namespace ppc
