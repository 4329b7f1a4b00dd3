#include "emoswarm/behavior.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

namespace emoswarm {
namespace {

// Movement presets. Gains are the diffeomorphism K, lookaheads are fractions of
// the smaller domain side, speed caps are in m/s.
constexpr double kGainFast = 40.0;
constexpr double kGainSlow = 10.0;
constexpr double kGainVerySlow = 4.0;
constexpr double kVMaxFast = 3.0;
constexpr double kVMaxSlow = 1.0;
constexpr double kVMaxVerySlow = 0.5;
constexpr double kLookaheadSmooth = 0.025;
// Short enough that the sampled heading loop turns sharply at dt = 0.01.
constexpr double kLookaheadAngular = 0.00025;
constexpr double kOmegaMax = 25.0;

struct Parameter {
  std::string_view key;
  std::function<bool(const BehaviorSpec&)> applies;
  std::function<void(BehaviorSpec&, std::string_view)> set;
};

[[noreturn]] void config_error(std::string_view key, const std::string& why) {
  throw Error(ErrorCode::Config, std::string(key) + ": " + why);
}

double parse_real(std::string_view key, std::string_view text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    config_error(key, "expected a real number, got '" + std::string(text) + "'");
  }
  return value;
}

double parse_positive(std::string_view key, std::string_view text) {
  const double v = parse_real(key, text);
  if (!(v > 0.0)) config_error(key, "must be positive");
  return v;
}

int parse_positive_int(std::string_view key, std::string_view text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    config_error(key, "expected an integer, got '" + std::string(text) + "'");
  }
  if (value < 1) config_error(key, "must be a positive integer");
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "on") return true;
  if (text == "false" || text == "0" || text == "off") return false;
  config_error(key, "expected true or false, got '" + std::string(text) + "'");
}

bool any(const BehaviorSpec&) { return true; }
bool has_contour(const BehaviorSpec& s) { return s.contour.has_value(); }
bool has_density(const BehaviorSpec& s) { return s.density.has_value(); }
bool has_contour_kind(const BehaviorSpec& s, ContourKind kind) {
  return s.contour.has_value() && s.contour->kind == kind;
}

const std::vector<Parameter>& registry() {
  static const std::vector<Parameter> params = {
      {"diffeo.gain", any,
       [](BehaviorSpec& s, std::string_view v) { s.diffeo.gain = parse_positive("diffeo.gain", v); }},
      {"diffeo.lookahead", any,
       [](BehaviorSpec& s, std::string_view v) {
         s.diffeo.lookahead = parse_positive("diffeo.lookahead", v);
       }},
      {"kappa", any, [](BehaviorSpec& s, std::string_view v) { s.kappa = parse_positive("kappa", v); }},
      {"limits.enabled", any,
       [](BehaviorSpec& s, std::string_view v) { s.limits.enabled = parse_bool("limits.enabled", v); }},
      {"limits.v_max", any,
       [](BehaviorSpec& s, std::string_view v) { s.limits.v_max = parse_positive("limits.v_max", v); }},
      {"limits.omega_max", any,
       [](BehaviorSpec& s, std::string_view v) {
         s.limits.omega_max = parse_positive("limits.omega_max", v);
       }},
      {"quadrature_resolution", any,
       [](BehaviorSpec& s, std::string_view v) {
         s.quadrature_resolution = parse_positive_int("quadrature_resolution", v);
       }},
      {"contour.phase_rate", has_contour,
       [](BehaviorSpec& s, std::string_view v) {
         s.contour->phase_rate = parse_positive("contour.phase_rate", v);
       }},
      {"contour.radius",
       [](const BehaviorSpec& s) {
         return has_contour_kind(s, ContourKind::Happiness) || has_contour_kind(s, ContourKind::Sadness);
       },
       [](BehaviorSpec& s, std::string_view v) { s.contour->radius = parse_positive("contour.radius", v); }},
      {"contour.amplitude", [](const BehaviorSpec& s) { return has_contour_kind(s, ContourKind::Happiness); },
       [](BehaviorSpec& s, std::string_view v) {
         const double a = parse_real("contour.amplitude", v);
         if (a < 0.0) config_error("contour.amplitude", "must be nonnegative");
         s.contour->amplitude = a;
       }},
      {"contour.frequency", [](const BehaviorSpec& s) { return has_contour_kind(s, ContourKind::Happiness); },
       [](BehaviorSpec& s, std::string_view v) {
         s.contour->frequency = parse_positive_int("contour.frequency", v);
       }},
      {"contour.radius_min", [](const BehaviorSpec& s) { return has_contour_kind(s, ContourKind::Surprise); },
       [](BehaviorSpec& s, std::string_view v) {
         s.contour->radius_min = parse_positive("contour.radius_min", v);
       }},
      {"contour.radius_max", [](const BehaviorSpec& s) { return has_contour_kind(s, ContourKind::Surprise); },
       [](BehaviorSpec& s, std::string_view v) {
         s.contour->radius_max = parse_positive("contour.radius_max", v);
       }},
      {"contour.expansion_rate",
       [](const BehaviorSpec& s) { return has_contour_kind(s, ContourKind::Surprise); },
       [](BehaviorSpec& s, std::string_view v) {
         s.contour->expansion_rate = parse_positive("contour.expansion_rate", v);
       }},
      {"density.kind", has_density,
       [](BehaviorSpec& s, std::string_view v) { s.density->kind = parse_density_kind(v); }},
      {"density.sigma", has_density,
       [](BehaviorSpec& s, std::string_view v) { s.density->sigma = parse_positive("density.sigma", v); }},
      {"density.margin", has_density,
       [](BehaviorSpec& s, std::string_view v) { s.density->margin = parse_positive("density.margin", v); }},
      {"density.floor", has_density,
       [](BehaviorSpec& s, std::string_view v) { s.density->floor = parse_positive("density.floor", v); }},
  };
  return params;
}

}  // namespace

std::string_view to_string(Emotion emotion) {
  switch (emotion) {
    case Emotion::Happiness: return "happiness";
    case Emotion::Surprise: return "surprise";
    case Emotion::Sadness: return "sadness";
    case Emotion::Fear: return "fear";
    case Emotion::Disgust: return "disgust";
    case Emotion::Anger: return "anger";
  }
  return "fear";
}

std::string emotion_names() {
  std::string out;
  for (Emotion e : kAllEmotions) {
    if (!out.empty()) out += ", ";
    out += to_string(e);
  }
  return out;
}

Emotion parse_emotion(std::string_view name) {
  for (Emotion e : kAllEmotions) {
    if (to_string(e) == name) return e;
  }
  throw Error(ErrorCode::Config,
              "emotion: unknown emotion '" + std::string(name) + "' (valid: " + emotion_names() + ")");
}

bool is_contour_emotion(Emotion emotion) {
  return emotion == Emotion::Happiness || emotion == Emotion::Surprise || emotion == Emotion::Sadness;
}

void BehaviorSpec::validate() const {
  domain.validate();
  if (is_contour_emotion(emotion)) {
    if (!contour || density) {
      throw Error(ErrorCode::InvalidArgument, "contour behaviors take a contour and no density");
    }
    contour->validate();
  } else {
    if (contour || !density) {
      throw Error(ErrorCode::InvalidArgument, "coverage behaviors take a density and no contour");
    }
    density->validate();
  }
  diffeo.validate();
  limits.validate();
  if (!(kappa > 0.0)) throw Error(ErrorCode::InvalidArgument, "kappa must be positive");
  if (quadrature_resolution < 1) {
    throw Error(ErrorCode::InvalidArgument, "quadrature resolution must be positive");
  }
}

Domain default_domain() { return Domain::from_size(3.2, 2.0); }

double default_duration(Emotion emotion) {
  switch (emotion) {
    case Emotion::Happiness: return 4.0;
    case Emotion::Surprise: return 4.0;
    case Emotion::Sadness: return 8.0;
    case Emotion::Fear: return 15.0;
    case Emotion::Disgust: return 12.0;
    case Emotion::Anger: return 6.0;
  }
  return 4.0;
}

BehaviorSpec default_behavior(Emotion emotion, const Domain& domain) {
  domain.validate();
  const double side = domain.min_side();
  BehaviorSpec spec;
  spec.emotion = emotion;
  spec.domain = domain;
  spec.kappa = 1.0;

  const DiffeoParams fast_smooth{kLookaheadSmooth * side, kGainFast};
  const DiffeoParams very_slow_smooth{kLookaheadSmooth * side, kGainVerySlow};
  const DiffeoParams slow_angular{kLookaheadAngular * side, kGainSlow};
  const DiffeoParams fast_angular{kLookaheadAngular * side, kGainFast};
  const SaturationLimits fast{true, kVMaxFast, kOmegaMax};
  const SaturationLimits slow{true, kVMaxSlow, kOmegaMax};
  const SaturationLimits very_slow{true, kVMaxVerySlow, kOmegaMax};

  ContourParams contour;
  contour.center = domain.center();
  switch (emotion) {
    case Emotion::Happiness:
      contour.kind = ContourKind::Happiness;
      contour.radius = 0.35 * side;
      contour.amplitude = 0.05 * side;
      contour.frequency = 6;
      contour.phase_rate = 1.0;
      spec.contour = contour;
      spec.diffeo = fast_smooth;
      spec.limits = fast;
      break;
    case Emotion::Surprise:
      contour.kind = ContourKind::Surprise;
      contour.radius_min = 0.1 * side;
      contour.radius_max = 0.45 * side;
      contour.expansion_rate = (contour.radius_max - contour.radius_min) / 10.0;
      contour.phase_rate = 1.0;
      spec.contour = contour;
      spec.diffeo = fast_smooth;
      spec.limits = fast;
      break;
    case Emotion::Sadness:
      contour.kind = ContourKind::Sadness;
      contour.radius = 0.1 * side;
      contour.phase_rate = std::numbers::pi / 32.0;
      spec.contour = contour;
      spec.diffeo = very_slow_smooth;
      spec.limits = very_slow;
      break;
    case Emotion::Fear:
      spec.density = DensityField::uniform(domain);
      spec.density->sigma = 0.15 * side;
      spec.density->margin = 0.08 * side;
      spec.diffeo = slow_angular;
      spec.limits = slow;
      break;
    case Emotion::Disgust:
      spec.density = DensityField::boundary(domain, 0.08 * side, 0.05);
      spec.density->sigma = 0.15 * side;
      spec.diffeo = slow_angular;
      spec.limits = slow;
      break;
    case Emotion::Anger:
      spec.density = DensityField::gaussian_center(domain, 0.15 * side);
      spec.density->margin = 0.08 * side;
      spec.diffeo = fast_angular;
      spec.limits = fast;
      break;
  }
  return spec;
}

std::vector<std::string> parameter_keys() {
  std::vector<std::string> keys;
  for (const Parameter& p : registry()) keys.emplace_back(p.key);
  return keys;
}

void set_parameter(BehaviorSpec& spec, std::string_view key, std::string_view value) {
  for (const Parameter& p : registry()) {
    if (p.key != key) continue;
    if (!p.applies(spec)) {
      config_error(key, "does not apply to emotion " + std::string(to_string(spec.emotion)));
    }
    BehaviorSpec updated = spec;
    p.set(updated, value);
    try {
      updated.validate();
    } catch (const Error& e) {
      config_error(key, e.what());
    }
    spec = std::move(updated);
    return;
  }
  std::string known;
  for (const Parameter& p : registry()) {
    if (!known.empty()) known += ", ";
    known += p.key;
  }
  config_error(key, "unknown parameter (valid: " + known + ")");
}

}  // namespace emoswarm
