#include "dcsit/channel.hpp"

#include "dcsit/subspace.hpp"

#include <cmath>
#include <random>

namespace dcsit {

const char* to_string(ChannelMode mode) {
  switch (mode) {
    case ChannelMode::TimeVarying: return "time-varying";
    case ChannelMode::Constant: return "constant";
    case ChannelMode::AcsReal: return "acs-real";
  }
  return "?";
}

void FrameLayout::validate(int K) const {
  if (slots_per_round.size() != groups.size() || groups.empty())
    throw std::invalid_argument("FrameLayout: phase count mismatch");
  if (phases() > 3) throw std::invalid_argument("FrameLayout: at most 3 phases");
  for (int p = 0; p < phases(); ++p) {
    if (slots(p) < 1) throw std::invalid_argument("FrameLayout: S_p >= 1");
    if (groups[p].empty()) throw std::invalid_argument("FrameLayout: phase without rounds");
    const size_t card = groups[p].front().size();
    for (const auto& g : groups[p]) {
      if (g.size() != card || g.empty())
        throw std::invalid_argument("FrameLayout: group cardinality must match within a phase");
      for (int u : g)
        if (u < 1 || u > K) throw std::invalid_argument("FrameLayout: user outside 1..K");
    }
  }
}

int ChannelEnsemble::slot_index(int p, int r, int s) const {
  int idx = 0;
  for (int q = 0; q < p; ++q) idx += layout.tau_phase(q);
  return idx + r * layout.slots(p) + s;
}

const Matrix& ChannelEnsemble::block(int p, int r, int s, int rx, int tx) const {
  if (p < 0 || p >= layout.phases() || r < 0 || r >= layout.rounds(p) || s < 0 ||
      s >= layout.slots(p) || rx < 1 || rx > dims.K || tx < 1 || tx > dims.K)
    throw std::out_of_range("ChannelEnsemble::block: index out of range");
  return blocks[slot_index(p, r, s)][static_cast<size_t>(rx - 1) * dims.K + (tx - 1)];
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Matrix random_gaussian(Index rows, Index cols, std::uint64_t seed, bool real) {
  std::mt19937_64 rng(seed);
  // CN(0,1): independent real and imaginary parts with variance 1/2.
  std::normal_distribution<double> dist(0.0, real ? 1.0 : std::sqrt(0.5));
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) {
      const double re = dist(rng);
      const double im = real ? 0.0 : dist(rng);
      m(r, c) = Complex(re, im);
    }
  return m;
}

ChannelEnsemble generate_ensemble(const Dims& dims, const FrameLayout& layout,
                                  ChannelMode mode, std::uint64_t seed) {
  if (mode == ChannelMode::AcsReal)
    throw std::invalid_argument("generate_ensemble: acs-real ensembles come from acs_lift");
  layout.validate(dims.K);

  ChannelEnsemble ens;
  ens.dims = dims;
  ens.layout = layout;
  ens.mode = mode;
  ens.seed = seed;

  const int K = dims.K;
  std::mt19937_64 rng(derive_seed(seed, 0));
  std::normal_distribution<double> dist(0.0, std::sqrt(0.5));
  const auto draw = [&] {
    Matrix h(dims.N, dims.M);
    for (Index r = 0; r < h.rows(); ++r)
      for (Index c = 0; c < h.cols(); ++c) h(r, c) = Complex(dist(rng), dist(rng));
    return h;
  };

  std::vector<Matrix> fixed;  // constant mode: one matrix per link
  if (mode == ChannelMode::Constant) {
    fixed.resize(static_cast<size_t>(K) * K);
    for (int j = 0; j < K; ++j)
      for (int i = 0; i < K; ++i) fixed[static_cast<size_t>(j) * K + i] = draw();
  }

  ens.blocks.resize(layout.tau());
  for (int p = 0; p < layout.phases(); ++p)
    for (int r = 0; r < layout.rounds(p); ++r)
      for (int s = 0; s < layout.slots(p); ++s) {
        auto& slot = ens.blocks[ens.slot_index(p, r, s)];
        slot.resize(static_cast<size_t>(K) * K);
        for (int j = 0; j < K; ++j)
          for (int i = 0; i < K; ++i)
            slot[static_cast<size_t>(j) * K + i] =
                mode == ChannelMode::Constant ? fixed[static_cast<size_t>(j) * K + i] : draw();
      }
  return ens;
}

Matrix round_channel(const ChannelEnsemble& ens, int p, int r, int rx, int tx) {
  const int S = ens.layout.slots(p);
  std::vector<Matrix> diag;
  diag.reserve(S);
  for (int s = 0; s < S; ++s) diag.push_back(ens.block(p, r, s, rx, tx));
  return block_diag(diag);
}

ChannelEnsemble acs_lift(const ChannelEnsemble& ens) {
  if (ens.mode == ChannelMode::AcsReal)
    throw std::invalid_argument("acs_lift: ensemble is already lifted");

  ChannelEnsemble out;
  out.dims = Dims(ens.dims.K, 2 * ens.dims.M, 2 * ens.dims.N);
  out.layout = ens.layout;
  out.mode = ChannelMode::AcsReal;
  out.seed = ens.seed;
  out.blocks.resize(ens.blocks.size());
  for (size_t slot = 0; slot < ens.blocks.size(); ++slot) {
    out.blocks[slot].resize(ens.blocks[slot].size());
    for (size_t link = 0; link < ens.blocks[slot].size(); ++link) {
      const Matrix& h = ens.blocks[slot][link];
      Matrix lifted = Matrix::Zero(2 * h.rows(), 2 * h.cols());
      for (Index r = 0; r < h.rows(); ++r)
        for (Index c = 0; c < h.cols(); ++c) {
          const double re = h(r, c).real(), im = h(r, c).imag();
          lifted(2 * r, 2 * c) = re;
          lifted(2 * r, 2 * c + 1) = -im;
          lifted(2 * r + 1, 2 * c) = im;
          lifted(2 * r + 1, 2 * c + 1) = re;
        }
      out.blocks[slot][link] = lifted;
    }
  }
  return out;
}

}  // namespace dcsit
