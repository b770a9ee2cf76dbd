#include "weinstein/calderon.hpp"

#include <algorithm>

#include "weinstein/errors.hpp"
#include "weinstein/parallel.hpp"

namespace weinstein {

namespace {

// Scale nodes are processed in batches so partial results can be added in
// index order whatever the thread count.
constexpr std::size_t kScaleBatch = 16;

}  // namespace

Field window_on_frequency_grid(const SpectralPlan& plan, const MultiplierSymbol& m, const SigmaQuadrature& quad) {
  quad.validate();
  const Grid& g = plan.freq_grid();
  Field out(g);
  parallel_for(out.size(), [&](std::size_t i) { out[i] = phi_window(m, quad, g.node(i)); });
  return out;
}

CalderonPlancherel calderon_plancherel(const SpectralPlan& plan, const MultiplierSymbol& m, const Field& phi,
                                       const SigmaQuadrature& quad) {
  plan.require_on(phi, Side::space, "calderon_plancherel");
  const QuadratureRule scales = quad.nodes();
  const Field spectrum = plan.forward(phi);
  std::vector<double> energy(scales.size());
  parallel_for(scales.size(), [&](std::size_t k) {
    Field product = symbol_on_frequency_grid(plan, m, scales.nodes[k]);
    for (std::size_t i = 0; i < product.size(); ++i) product[i] *= spectrum[i];
    const double n = norm(plan, plan.inverse(product));
    energy[k] = n * n;
  });
  CalderonPlancherel out;
  const double n = norm(plan, phi);
  out.lhs = n * n;
  for (std::size_t k = 0; k < scales.size(); ++k) out.rhs += scales.weights[k] * energy[k];
  return out;
}

Field calderon_first(const SpectralPlan& plan, const MultiplierSymbol& m, const Field& phi,
                     const SigmaQuadrature& quad, ConvolutionMethod method) {
  plan.require_on(phi, Side::space, "calderon_first");
  const QuadratureRule scales = quad.nodes();
  Field out(plan.space_grid());
  std::vector<Field> batch;
  for (std::size_t start = 0; start < scales.size(); start += kScaleBatch) {
    const std::size_t count = std::min(kScaleBatch, scales.size() - start);
    batch.assign(count, Field{});
    parallel_for(count, [&](std::size_t j) {
      const double sigma = scales.nodes[start + j];
      const Field detail = apply_multiplier(plan, m, sigma, phi);
      Field conj_symbol = symbol_on_frequency_grid(plan, m, sigma);
      for (auto& v : conj_symbol.values()) v = std::conj(v);
      const Field kernel = plan.inverse(conj_symbol);
      batch[j] = convolve(plan, detail, kernel, method);
    });
    for (std::size_t j = 0; j < count; ++j) {
      const double w = scales.weights[start + j];
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += w * batch[j][i];
    }
  }
  return out;
}

Field calderon_second(const SpectralPlan& plan, const MultiplierSymbol& m, const Field& phi, double gamma,
                      double delta, std::size_t points, SigmaRule rule) {
  plan.require_on(phi, Side::space, "calderon_second");
  if (!(gamma > 0.0) || !(delta > gamma)) throw DomainError("calderon_second: need 0 < gamma < delta");
  const Field window = window_on_frequency_grid(plan, m, {gamma, delta, points, rule});
  Field spectrum = plan.forward(phi);
  for (std::size_t i = 0; i < spectrum.size(); ++i) spectrum[i] *= window[i].real();
  return plan.inverse(spectrum);
}

double window_error_prediction(const SpectralPlan& plan, const MultiplierSymbol& m, const Field& phi,
                               const SigmaQuadrature& quad) {
  plan.require_on(phi, Side::space, "window_error_prediction");
  const Field window = window_on_frequency_grid(plan, m, quad);
  const Field spectrum = plan.forward(phi);
  const auto w = plan.quad_weights(Side::frequency);
  double acc = 0.0;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const double gap = 1.0 - window[i].real();
    acc += std::norm(spectrum[i]) * gap * gap * w[i];
  }
  return acc;
}

}  // namespace weinstein
