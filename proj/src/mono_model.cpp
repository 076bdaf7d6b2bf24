#include "immdec/mono_model.hpp"

#include <algorithm>
#include <climits>
#include <utility>

#include "immdec/errors.hpp"

namespace immdec {

std::string mode_name(DifferentialMode mode) {
  return mode == DifferentialMode::dual_class ? "dual-class" : "paper-literal";
}

MonoLayout mono_layout(int m, int n) {
  if (m < 1) throw scope_error("the source dimension m must be at least 1");
  if (n <= m)
    throw scope_error("the target dimension n must exceed the source dimension m");
  if ((n - m) % 2 == 0)
    throw scope_error("only odd codimension n - m is supported");
  if (n < 3)
    throw scope_error("the target dimension n must be at least 3; n = 2 would "
                      "need a fiber generator of degree 1");
  MonoLayout l;
  l.m = m;
  l.n = n;
  l.alpha_count = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
  l.beta_count = (m % 2 == 0) ? m / 2 - 1 : (m - 1) / 2;
  l.euler_degree = (n % 2 == 0) ? n : m;
  l.gamma_lo = (n - m + 1) / 2;
  l.gamma_hi = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
  l.has_sigma = (n % 2 == 0);
  return l;
}

Element dual_class(int k, const std::vector<Element>& alphas,
                   const std::vector<Element>& betas) {
  if (k <= 0) throw input_error("dual class index must be positive");
  if (alphas.empty() && betas.empty())
    throw input_error("dual class needs at least one series term");
  const GenSetPtr gens =
      alphas.empty() ? betas.front().gens_ptr() : alphas.front().gens_ptr();
  std::vector<Element> pbar;
  pbar.push_back(Element::unit(gens));
  for (int t = 1; t <= k; ++t) {
    Element p = (t <= static_cast<int>(alphas.size()))
                    ? alphas[static_cast<std::size_t>(t) - 1]
                    : Element::zero(gens);
    const int top = std::min<int>(t, static_cast<int>(betas.size()));
    for (int i = 1; i <= top; ++i)
      p -= mul(betas[static_cast<std::size_t>(i) - 1],
               pbar[static_cast<std::size_t>(t - i)]);
    pbar.push_back(std::move(p));
  }
  return pbar[static_cast<std::size_t>(k)];
}

RelativeModel build_mono_model(int m, int n, DifferentialMode mode) {
  const MonoLayout l = mono_layout(m, n);

  std::vector<Generator> base_gens;
  for (int i = 1; i <= l.alpha_count; ++i)
    base_gens.push_back({"alpha" + std::to_string(i), 4 * i});
  for (int j = 1; j <= l.beta_count; ++j)
    base_gens.push_back({"beta" + std::to_string(j), 4 * j});
  base_gens.push_back({"euler", l.euler_degree});

  GenSetPtr bg = make_generator_set(base_gens);
  FreeCDGA base(bg, std::vector<Element>(base_gens.size(), Element::zero(bg)));

  std::vector<Element> alphas, betas;
  for (int i = 1; i <= l.alpha_count; ++i)
    alphas.push_back(Element::generator(bg, bg->index_of("alpha" + std::to_string(i))));
  for (int j = 1; j <= l.beta_count; ++j)
    betas.push_back(Element::generator(bg, bg->index_of("beta" + std::to_string(j))));
  if (m % 2 == 0) {
    // Slot m/2 of the denominator series is the square of the Euler
    // generator; only slots 1..m/2-1 are generators in their own right.
    const Element e = Element::generator(bg, bg->index_of("euler"));
    betas.push_back(mul(e, e));
  }

  std::vector<Generator> fiber;
  for (int k = l.gamma_lo; k <= l.gamma_hi; ++k)
    fiber.push_back({"gamma" + std::to_string(k), 4 * k - 1});
  if (l.has_sigma) fiber.push_back({"sigma", n - 1});

  std::vector<Generator> all = base_gens;
  all.insert(all.end(), fiber.begin(), fiber.end());
  GenSetPtr tg = make_generator_set(all);
  const auto embed = [&](const Element& e) {
    Element out(tg);
    for (const auto& [mo, c] : e.terms()) {
      Monomial ext = mo;
      ext.exps.resize(all.size(), 0);
      out.add_term(ext, c);
    }
    return out;
  };

  std::map<std::string, Element> fiber_diffs;
  for (int k = l.gamma_lo; k <= l.gamma_hi; ++k) {
    Element d = Element::zero(bg);
    if (mode == DifferentialMode::dual_class) {
      d = dual_class(k, alphas, betas);
    } else if (k <= (m - 1) / 2) {
      d = betas[static_cast<std::size_t>(k) - 1] -
          alphas[static_cast<std::size_t>(k) - 1];
    } else {
      d = alphas[static_cast<std::size_t>(k) - 1];
    }
    fiber_diffs.emplace("gamma" + std::to_string(k), embed(d));
  }
  if (l.has_sigma)
    fiber_diffs.emplace(
        "sigma", embed(Element::generator(bg, bg->index_of("euler"))));

  return RelativeModel(std::move(base), std::move(fiber), std::move(fiber_diffs),
                       INT_MAX);
}

std::vector<int> obstruction_degrees(int m, int n) {
  const MonoLayout l = mono_layout(m, n);
  std::vector<int> out;
  for (int k = l.gamma_lo; k <= l.gamma_hi; ++k) out.push_back(4 * k);
  if (n % 2 == 0) out.push_back(n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace immdec
