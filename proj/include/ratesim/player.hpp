#pragma once

#include "ratesim/rating.hpp"

namespace ratesim {

inline constexpr int kTeamSize = 5;

// One virtual player. `strength` is the latent skill that drives match
// outcomes and never changes. `ladder` is the visible score; `elo` is the
// hidden one (left at its initial value under the proposed scheme).
struct Player {
  int id = 0;
  double strength = 0.0;
  Rating ladder;
  Rating elo;
  long long games_played = 0;
  long long wins = 0;
};

}  // namespace ratesim
