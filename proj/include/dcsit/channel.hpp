#pragma once

#include "dcsit/types.hpp"

#include <cstdint>
#include <vector>

namespace dcsit {

enum class ChannelMode { TimeVarying, Constant, AcsReal };

const char* to_string(ChannelMode mode);

/// Phase/round/slot structure of a transmission frame, plus the served-user
/// group of every round (users are 1-based).
struct FrameLayout {
  std::vector<int> slots_per_round;                  // S_p, one entry per phase
  std::vector<std::vector<std::vector<int>>> groups; // groups[p][r] = served users

  int phases() const { return static_cast<int>(slots_per_round.size()); }
  int rounds(int p) const { return static_cast<int>(groups[p].size()); }
  int slots(int p) const { return slots_per_round[p]; }
  int tau_phase(int p) const { return rounds(p) * slots(p); }
  int tau() const {
    int t = 0;
    for (int p = 0; p < phases(); ++p) t += tau_phase(p);
    return t;
  }
  void validate(int K) const;
};

/// Per-slot channel matrices of one frame. Immutable after generation.
struct ChannelEnsemble {
  Dims dims;
  FrameLayout layout;
  ChannelMode mode = ChannelMode::TimeVarying;
  std::uint64_t seed = 0;

  // blocks[slot_index(p,r,s)][j*K + i] is the N x M matrix from Tx i to Rx j.
  std::vector<std::vector<Matrix>> blocks;

  const Matrix& block(int p, int r, int s, int rx, int tx) const;
  int slot_index(int p, int r, int s) const;
};

ChannelEnsemble generate_ensemble(const Dims& dims, const FrameLayout& layout,
                                  ChannelMode mode, std::uint64_t seed);

/// Block-diagonal channel of a whole round: NS_p x MS_p.
Matrix round_channel(const ChannelEnsemble& ens, int p, int r, int rx, int tx);

/// Real lifting: h -> |h| [[cos phi, -sin phi], [sin phi, cos phi]] per scalar
/// entry, doubling both antenna dimensions. Entries stay complex-typed with
/// zero imaginary part so the rest of the pipeline is unchanged.
ChannelEnsemble acs_lift(const ChannelEnsemble& ens);

/// Split a 64-bit seed into independent sub-streams (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Seeded matrix with i.i.d. CN(0,1) entries (or N(0,1) real when real=true).
Matrix random_gaussian(Index rows, Index cols, std::uint64_t seed, bool real = false);

}  // namespace dcsit
