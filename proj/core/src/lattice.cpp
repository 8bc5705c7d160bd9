#include "parv/lattice.hpp"

#include <algorithm>

#include "parv/errors.hpp"

namespace parv {

Lattice::Lattice(QuadraticForm construction, QuadraticForm ambient)
    : construction_(std::move(construction)), ambient_(std::move(ambient)) {
  if (construction_.dim() != ambient_.dim())
    throw input_error("Lattice: construction and ambient forms differ in dimension");
}

Lattice::Lattice(QuadraticForm construction)
    : construction_(construction), ambient_(std::move(construction)) {}

bool ParityClass::is_zero() const {
  for (int b : bits)
    if (b) return false;
  return true;
}

ParityClass parity_class(const IVec& v) {
  ParityClass c;
  c.bits.reserve(v.size());
  for (const auto& x : v)
    c.bits.push_back(static_cast<int>(mpz_fdiv_ui(x.get_mpz_t(), 2)));
  return c;
}

namespace {

Int floor_of(const Scalar& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

void enumerate_rec(const QuadraticForm& form, const Vec& center, int level,
                   IVec& current, const Scalar& remaining, std::vector<IVec>& out) {
  if (level < 0) {
    out.push_back(current);
    return;
  }
  const auto& lower = form.ldl_lower();
  const Scalar d = form.ldl_diag()[level];
  // w = v_level - t must satisfy d * w^2 <= remaining, where t folds in the
  // already-fixed coordinates above `level`.
  Scalar t = center[level];
  for (int j = level + 1; j < form.dim(); ++j)
    t -= lower[j][level] * (Scalar(current[j]) - center[j]);
  const Int start = floor_of(t);
  for (Int v = start;; --v) {
    const Scalar w = Scalar(v) - t;
    const Scalar used = d * w * w;
    if (used > remaining) break;
    current[level] = v;
    enumerate_rec(form, center, level - 1, current, remaining - used, out);
  }
  for (Int v = start + 1;; ++v) {
    const Scalar w = Scalar(v) - t;
    const Scalar used = d * w * w;
    if (used > remaining) break;
    current[level] = v;
    enumerate_rec(form, center, level - 1, current, remaining - used, out);
  }
}

}  // namespace

std::vector<IVec> enumerate_ball(const QuadraticForm& form, const Vec& center, const Scalar& r2) {
  if (static_cast<int>(center.size()) != form.dim())
    throw input_error("enumerate_ball: center dimension mismatch");
  std::vector<IVec> out;
  if (r2 < 0) return out;
  IVec current(form.dim());
  enumerate_rec(form, center, form.dim() - 1, current, r2, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IVec> enumerate_ball(const Lattice& l, const Vec& center, const Scalar& r2,
                                 FormChoice which) {
  const auto& form =
      which == FormChoice::construction ? l.construction_form() : l.ambient_form();
  return enumerate_ball(form, center, r2);
}

CosetMin coset_shortest(const Lattice& l, const ParityClass& cls) {
  if (static_cast<int>(cls.bits.size()) != l.dim())
    throw input_error("coset_shortest: class dimension mismatch");
  if (cls.is_zero())
    throw input_error("coset_shortest: zero class has trivial minimum");
  const auto& form = l.construction_form();
  const Vec origin = zero_vec(l.dim());

  Scalar radius = 0;
  for (int i = 0; i < l.dim(); ++i) radius += form.gram()[i][i];

  std::optional<Scalar> best;
  for (;;) {
    for (const auto& v : enumerate_ball(form, origin, radius)) {
      if (!(parity_class(v) == cls)) continue;
      const Scalar n2 = form.norm2(to_vec(v));
      if (!best || n2 < *best) best = n2;
    }
    if (best) break;
    radius *= 2;
  }

  CosetMin out;
  out.min_norm2 = *best;
  for (const auto& v : enumerate_ball(form, origin, *best))
    if (parity_class(v) == cls && form.norm2(to_vec(v)) == *best)
      out.argmins.push_back(v);
  return out;
}

RelevantVectorSet relevant_vectors(const Lattice& l) {
  RelevantVectorSet out;
  const int d = l.dim();
  for (unsigned c = 1; c < (1u << d); ++c) {
    ParityClass cls;
    for (int i = 0; i < d; ++i) cls.bits.push_back(static_cast<int>((c >> i) & 1));
    const auto m = coset_shortest(l, cls);
    if (m.argmins.size() % 2 != 0)
      throw internal_error("relevant_vectors: coset minima not closed under negation");
    if (m.argmins.size() == 2) {
      out.vectors.push_back(m.argmins[0]);
      out.vectors.push_back(m.argmins[1]);
      out.norm2.push_back(m.min_norm2);
      out.norm2.push_back(m.min_norm2);
    }
  }
  std::vector<std::size_t> order(out.vectors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return out.vectors[a] < out.vectors[b]; });
  RelevantVectorSet sorted;
  for (auto i : order) {
    sorted.vectors.push_back(out.vectors[i]);
    sorted.norm2.push_back(out.norm2[i]);
  }
  return sorted;
}

Scalar covering_radius_bound(const Lattice& l, const VPolytope& cell) {
  if (cell.vertices.empty()) throw input_error("covering_radius_bound: empty cell");
  Scalar best = 0;
  for (const auto& v : cell.vertices) {
    const Scalar n2 = l.construction_form().norm2(v);
    if (n2 > best) best = n2;
  }
  return best;
}

}  // namespace parv
