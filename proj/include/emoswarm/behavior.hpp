#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emoswarm/controllers.hpp"
#include "emoswarm/densities.hpp"
#include "emoswarm/geometry.hpp"
#include "emoswarm/shapes.hpp"
#include "emoswarm/types.hpp"

namespace emoswarm {

enum class Emotion { Happiness, Surprise, Sadness, Fear, Disgust, Anger };

inline constexpr std::array<Emotion, 6> kAllEmotions = {
    Emotion::Happiness, Emotion::Surprise, Emotion::Sadness,
    Emotion::Fear,      Emotion::Disgust,  Emotion::Anger,
};

std::string_view to_string(Emotion emotion);
/// Throws Config with the list of valid names for an unknown emotion.
Emotion parse_emotion(std::string_view name);
/// "happiness, surprise, sadness, fear, disgust, anger"
std::string emotion_names();

bool is_contour_emotion(Emotion emotion);

/// Everything needed to execute one expressive behavior.
///
/// Contour emotions carry `contour` and no `density`; coverage emotions carry
/// `density` and no `contour`.
struct BehaviorSpec {
  Emotion emotion = Emotion::Fear;
  Domain domain;
  std::optional<ContourParams> contour;
  std::optional<DensityField> density;
  DiffeoParams diffeo;
  double kappa = 1.0;
  SaturationLimits limits;
  int quadrature_resolution = kDefaultQuadratureResolution;

  void validate() const;
};

/// Registry defaults. Lengths scale with the smaller side of `domain`.
///
///   emotion    shape                     movement
///   happiness  sinusoid over circle      fast, smooth
///   surprise   expanding circle          fast, smooth
///   sadness    small circle              very slow, smooth
///   fear       uniform coverage          slow, angular
///   disgust    boundary coverage         slow, angular
///   anger      center coverage           fast, angular
BehaviorSpec default_behavior(Emotion emotion, const Domain& domain);

/// Snapshot times of the reference animations, seconds.
double default_duration(Emotion emotion);

/// Default arena: 3.2 m x 2.0 m.
Domain default_domain();

/// Names accepted by set_parameter, in registry order.
std::vector<std::string> parameter_keys();

/// Applies a `key=value` override. Throws Config naming the key on an unknown
/// key, a key that does not apply to this emotion, or a value that fails to
/// parse or violates the parameter's constraints.
void set_parameter(BehaviorSpec& spec, std::string_view key, std::string_view value);

}  // namespace emoswarm
