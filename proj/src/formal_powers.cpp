#include "vekua/formal_powers.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "vekua/kernels.hpp"

namespace vekua {

std::size_t FormalPowerTable::bindex(int q, int m, int a, int n) const {
  const int fam = m % period_;
  return ((static_cast<std::size_t>(q) * period_ + fam) * 2 + a) * (degree_ + 1) + n;
}

cplx FormalPowerTable::boundary(int q, int m, int a, int n) const { return boundary_[bindex(q, m, a, n)]; }

cplx FormalPowerTable::value(int q, int m, int a, int n, int p) const {
  if (retention_ != Retention::full) throw std::logic_error("formal power table keeps boundary values only");
  return full_[bindex(q, m, a, n) * (points_ + 1) + p];
}

const RadialGrid& FormalPowerTable::grid(int q) const {
  if (retention_ != Retention::full) throw std::logic_error("formal power table keeps boundary values only");
  return grids_[q];
}

namespace {

struct LaneBlock {
  int steps, lanes, families;
  std::vector<double> p[2], inv_p[2];
  std::vector<double> dzr, dzi;
  std::vector<double> cur_r[2][2], cur_i[2][2];
  std::vector<double> nxt_r[2][2], nxt_i[2][2];

  LaneBlock(int steps_, int lanes_, int families_) : steps(steps_), lanes(lanes_), families(families_) {
    const std::size_t n = static_cast<std::size_t>(steps + 1) * lanes;
    for (int m = 0; m < families; ++m) {
      p[m].resize(n);
      inv_p[m].resize(n);
      for (int a = 0; a < 2; ++a) {
        cur_r[m][a].resize(n);
        cur_i[m][a].resize(n);
        nxt_r[m][a].resize(n);
        nxt_i[m][a].resize(n);
      }
    }
    dzr.resize(static_cast<std::size_t>(steps) * lanes);
    dzi.resize(static_cast<std::size_t>(steps) * lanes);
  }
};

// Fills pair samples and path increments for radii [q0, q0 + lanes).
void load_block(LaneBlock& b, const GeneratingSequence& seq, std::span<const RadialGrid> grids, int q0) {
  const int L = b.lanes;
  for (int j = 0; j < L; ++j) {
    const RadialGrid& g = grids[q0 + j];
    for (int s = 0; s <= b.steps; ++s) {
      const std::size_t k = static_cast<std::size_t>(s) * L + j;
      SamplePoint pt{g.z[s].real(), g.z[s].imag(), g.r[s], g.theta};
      for (int m = 0; m < b.families; ++m) {
        double pv = seq.pair(m, pt);
        if (!(pv > 0.0) || !std::isfinite(pv)) throw std::domain_error("generating pair is not positive");
        b.p[m][k] = pv;
        b.inv_p[m][k] = 1.0 / pv;
      }
      if (s < b.steps) {
        cplx dz = g.z[s + 1] - g.z[s];
        b.dzr[k] = dz.real();
        b.dzi[k] = dz.imag();
      }
    }
  }
}

void run_block(const GeneratingSequence& seq, std::span<const RadialGrid> grids, int q0, int lanes,
               int degree, double delta, std::vector<cplx>& boundary,
               std::vector<cplx>* full, std::vector<double>& boundary_p0) {
  const int P = grids[q0].points();
  const int fam = seq.period;
  LaneBlock b(P, lanes, fam);
  load_block(b, seq, grids, q0);

  // Seeds: the unique pseudoanalytic constants with value a at the center,
  // Z(1) = p / p(0) and Z(i) = i p(0) / p.
  const std::size_t npts = static_cast<std::size_t>(P + 1) * lanes;
  for (int m = 0; m < fam; ++m) {
    for (std::size_t k = 0; k < npts; ++k) {
      const double p0 = b.p[m][k % lanes];
      b.cur_r[m][coef_one][k] = b.p[m][k] / p0;
      b.cur_i[m][coef_one][k] = 0.0;
      b.cur_r[m][coef_i][k] = 0.0;
      b.cur_i[m][coef_i][k] = p0 * b.inv_p[m][k];
    }
  }

  const std::size_t last = static_cast<std::size_t>(P) * lanes;
  const int period = fam;
  auto index = [&](int q, int m, int a, int n) {
    return ((static_cast<std::size_t>(q) * period + m) * 2 + a) * (degree + 1) + n;
  };
  auto record = [&](int n) {
    for (int m = 0; m < fam; ++m)
      for (int a = 0; a < 2; ++a)
        for (int j = 0; j < lanes; ++j) {
          const int q = q0 + j;
          boundary[index(q, m, a, n)] = {b.cur_r[m][a][last + j], b.cur_i[m][a][last + j]};
          if (full) {
            cplx* dst = full->data() + index(q, m, a, n) * (P + 1);
            for (int s = 0; s <= P; ++s) {
              const std::size_t k = static_cast<std::size_t>(s) * lanes + j;
              dst[s] = {b.cur_r[m][a][k], b.cur_i[m][a][k]};
            }
          }
        }
  };
  for (int j = 0; j < lanes; ++j) boundary_p0[q0 + j] = b.p[0][last + j];
  record(0);

  kernels::BersSweep sweep;
  sweep.steps = P;
  sweep.lanes = lanes;
  sweep.dzr = b.dzr.data();
  sweep.dzi = b.dzi.data();
  for (int n = 1; n <= degree; ++n) {
    sweep.scale = n * delta;
    for (int m = 0; m < fam; ++m) {
      const int src = (m + fam - 1) % fam;  // Z_m^(n) integrates Z_(m-1)^(n-1)
      sweep.p = b.p[m].data();
      sweep.inv_p = b.inv_p[m].data();
      for (int a = 0; a < 2; ++a) {
        sweep.wr = b.cur_r[src][a].data();
        sweep.wi = b.cur_i[src][a].data();
        sweep.vr = b.nxt_r[m][a].data();
        sweep.vi = b.nxt_i[m][a].data();
        kernels::bers_sweep(sweep);
      }
    }
    for (int m = 0; m < fam; ++m)
      for (int a = 0; a < 2; ++a) {
        std::swap(b.cur_r[m][a], b.nxt_r[m][a]);
        std::swap(b.cur_i[m][a], b.nxt_i[m][a]);
      }
    record(n);
  }
}

}  // namespace

std::vector<cplx> fg_antiderivative(const RadialGrid& path, const GeneratingSequence& seq, int m,
                                    std::span<const cplx> W, const QuadratureConfig& config) {
  const int P = path.points();
  if (P < 1) throw std::invalid_argument("Bers integral needs a path with at least two points");
  if (static_cast<int>(W.size()) != P + 1) throw std::invalid_argument("integrand size does not match the path");
  std::vector<double> p(P + 1), ip(P + 1), wr(P + 1), wi(P + 1), dzr(P), dzi(P), vr(P + 1), vi(P + 1);
  for (int s = 0; s <= P; ++s) {
    SamplePoint pt{path.z[s].real(), path.z[s].imag(), path.r[s], path.theta};
    p[s] = seq.pair(m, pt);
    ip[s] = 1.0 / p[s];
    wr[s] = W[s].real();
    wi[s] = W[s].imag();
    if (s < P) {
      cplx dz = path.z[s + 1] - path.z[s];
      dzr[s] = dz.real();
      dzi[s] = dz.imag();
    }
  }
  kernels::BersSweep sweep{P, 1, p.data(), ip.data(), dzr.data(), dzi.data(),
                           wr.data(), wi.data(), vr.data(), vi.data(), config.delta};
  kernels::bers_sweep(sweep);
  std::vector<cplx> out(P + 1);
  for (int s = 0; s <= P; ++s) out[s] = {vr[s], vi[s]};
  return out;
}

FormalPowerTable build_formal_powers(const GeneratingSequence& seq, std::span<const RadialGrid> grids,
                                     int degree, const QuadratureConfig& config, const BuildOptions& options) {
  if (degree < 0) throw std::invalid_argument("formal power degree must be >= 0");
  if (grids.empty()) throw std::invalid_argument("no radial grids");
  if (!(config.delta > 0.0)) throw std::invalid_argument("quadrature delta must be positive");
  const int P = grids[0].points();
  if (P < 2) throw std::invalid_argument("radial grids need P >= 2");
  for (const auto& g : grids)
    if (g.points() != P) throw std::invalid_argument("all radial grids must have the same P");

  FormalPowerTable t;
  const int Q = static_cast<int>(grids.size());
  t.degree_ = degree;
  t.points_ = P;
  t.period_ = seq.period;
  t.retention_ = options.retention;
  t.thetas_.resize(Q);
  for (int q = 0; q < Q; ++q) t.thetas_[q] = grids[q].theta;
  t.boundary_p0_.resize(Q);
  const std::size_t per_radius = static_cast<std::size_t>(seq.period) * 2 * (degree + 1);
  t.boundary_.resize(per_radius * Q);
  if (options.retention == Retention::full) {
    t.full_.resize(per_radius * Q * (P + 1));
    t.grids_.assign(grids.begin(), grids.end());
  }

  const int lanes = std::max(1, options.block_lanes);
  const int blocks = (Q + lanes - 1) / lanes;
  int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, blocks);

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (int blk = next++; blk < blocks && !failed; blk = next++) {
        const int q0 = blk * lanes;
        run_block(seq, grids, q0, std::min(lanes, Q - q0), degree, config.delta, t.boundary_,
                  options.retention == Retention::full ? &t.full_ : nullptr, t.boundary_p0_);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return t;
}

FormalPowerTable build_formal_powers(const GeneratingSequence& seq, const StarDomain& domain,
                                     const AngleSet& angles, int points, int degree,
                                     const QuadratureConfig& config, const BuildOptions& options,
                                     const std::function<std::vector<double>(double)>& pinned_radii) {
  std::vector<RadialGrid> grids;
  grids.reserve(angles.count());
  for (double th : angles.angles) {
    std::vector<double> pins;
    if (pinned_radii) pins = pinned_radii(th);
    grids.push_back(build_radial_grid(domain, th, points, pins));
  }
  return build_formal_powers(seq, grids, degree, config, options);
}

std::vector<std::vector<cplx>> formal_powers_along(const GeneratingSequence& seq, const RadialGrid& path,
                                                   cplx a, int degree, const QuadratureConfig& config) {
  const int P = path.points();
  const int fam = seq.period;
  // cur[m] holds Z_m^(n-1); the seed is a.real() p / p(0) + i a.imag() p(0) / p.
  std::vector<cplx> cur[2];
  for (int m = 0; m < fam; ++m) {
    cur[m].resize(P + 1);
    const double p0 = seq.pair(m, SamplePoint{path.z[0].real(), path.z[0].imag(), path.r[0], path.theta});
    for (int s = 0; s <= P; ++s) {
      const double pv = seq.pair(m, SamplePoint{path.z[s].real(), path.z[s].imag(), path.r[s], path.theta});
      cur[m][s] = {a.real() * pv / p0, a.imag() * p0 / pv};
    }
  }
  std::vector<std::vector<cplx>> out;
  out.push_back(cur[0]);
  for (int n = 1; n <= degree; ++n) {
    QuadratureConfig scaled = config;
    scaled.delta = config.delta * n;
    std::vector<cplx> nxt[2];
    for (int m = 0; m < fam; ++m) nxt[m] = fg_antiderivative(path, seq, m, cur[(m + fam - 1) % fam], scaled);
    for (int m = 0; m < fam; ++m) cur[m] = std::move(nxt[m]);
    out.push_back(cur[0]);
  }
  return out;
}

std::vector<cplx> formal_powers_at(const GeneratingSequence& seq, cplx z, int degree, int steps,
                                   const QuadratureConfig& config) {
  std::vector<cplx> out(2 * static_cast<std::size_t>(degree + 1));
  if (z == cplx(0.0, 0.0)) {
    // Only the seeds survive at the center, where they equal their coefficient.
    out[coef_one * (degree + 1)] = 1.0;
    out[coef_i * (degree + 1)] = cplx(0.0, 1.0);
    return out;
  }
  RadialGrid g = ray_to(z, std::max(steps, 2));
  BuildOptions opts;
  opts.threads = 1;
  FormalPowerTable t = build_formal_powers(seq, std::span<const RadialGrid>(&g, 1), degree, config, opts);
  for (int a = 0; a < 2; ++a)
    for (int n = 0; n <= degree; ++n) out[a * (degree + 1) + n] = t.boundary(0, 0, a, n);
  return out;
}

double vekua_residual(const std::function<cplx(cplx)>& W, const std::function<double(cplx)>& p, cplx z,
                      double h) {
  const cplx i(0.0, 1.0);
  const cplx dx(h, 0.0), dy(0.0, h);
  cplx dW = (W(z + dx) - W(z - dx)) / (2.0 * h) + i * (W(z + dy) - W(z - dy)) / (2.0 * h);
  cplx dp = (p(z + dx) - p(z - dx)) / (2.0 * h) + i * (p(z + dy) - p(z - dy)) / (2.0 * h);
  return std::abs(dW - dp / p(z) * std::conj(W(z)));
}

std::vector<AsymptoticSample> asymptotics_check(const FormalPowerTable& table, int q, int n, int a) {
  if (n < 1) throw std::invalid_argument("asymptotics need n >= 1");
  const RadialGrid& g = table.grid(q);
  const cplx coef = a == coef_one ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
  std::vector<AsymptoticSample> out;
  for (int p = 1; p <= g.points(); ++p)
    out.push_back({g.r[p], table.value(q, 0, a, n, p) / (coef * std::pow(g.z[p], n))});
  return out;
}

}  // namespace vekua
