#include "parv/verify.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "parv/errors.hpp"
#include "parv/parallel.hpp"

namespace parv {

namespace {

const Scalar kPackingGrid[] = {Scalar(1, 10), Scalar(1, 4), Scalar(2, 5), Scalar(49, 100),
                               Scalar(499, 1000)};

void corrupt_direct_star(FaceStar& star) {
  IVec bogus;
  if (!star.translations.empty() && !(star.translations.back() == IVec(star.translations.back().size(), 0))) {
    bogus = star.translations.back();
    for (auto& x : bogus) x *= 2;
  } else {
    bogus.assign(star.translations.empty() ? 1 : star.translations[0].size(), 0);
    bogus[0] = 2;
  }
  star.translations.push_back(std::move(bogus));
  std::sort(star.translations.begin(), star.translations.end());
  star.translations.erase(std::unique(star.translations.begin(), star.translations.end()),
                          star.translations.end());
}

}  // namespace

FaceCheck verify_face(const Tiling& tiling, const Face& face,
                      const std::optional<StarDefect>& defect) {
  FaceCheck out;
  out.face_id = face.id;
  out.face_dim = face.dim;
  out.k = face.codim(tiling.faces.space_dim);
  try {
    FaceStar direct = direct_star(tiling, face);
    const FaceStar translated = translate_star(tiling, face);
    if (defect && defect->face_id == face.id) corrupt_direct_star(direct);
    out.valence_direct = direct.valence();
    out.valence_translate = translated.valence();
    out.star_match = direct.translations == translated.translations;
    if (!out.star_match)
      out.problems.push_back("star cross-check: direct and translate stars differ");

    translation_system(translated);  // validates antisymmetry and additivity

    const auto parity = parity_audit(translated);
    out.parity_pass = parity.pass;
    if (!parity.pass)
      out.problems.push_back("parity audit: translations " + std::to_string(parity.first) +
                             " and " + std::to_string(parity.second) +
                             " share a class mod 2L");

    const DualCell dc = delaunay_cell(face, translated);
    out.dual_dim = dc.dual_dim;
    out.dual_checks_asserted = tiling.lattice.voronoi_case();
    const auto ddc = dual_dim_check(dc, out.dual_checks_asserted);
    out.dual_dim_ok = ddc.ok;
    out.dual_dim_noteworthy = ddc.noteworthy;
    if (!ddc.ok)
      out.problems.push_back("dual cell: dim aff D(F) = " + std::to_string(dc.dual_dim) +
                             " differs from k = " + std::to_string(out.k));
    if (out.dual_checks_asserted) {
      const auto dvc = dual_vertex_check(dc, translated);
      out.dual_vertex_pass = dvc.pass;
      if (!dvc.pass) out.problems.push_back("dual cell: " + dvc.failure);
    }

    const ConeFan fan = fan_of_face(tiling, face, translated);
    out.fan_top_cones = fan.top_cones();
    out.fan_signature = fan_signature(fan);
    out.fan_digest = fan_signature_digest(fan);
    if (fan.top_cones() != translated.valence())
      out.problems.push_back("fan: top cone count differs from valence");

    const AntipodalSet w = projected_face_set(tiling, face, translated);
    const auto lp_cert = is_antipodal(w);
    out.antipodal_pass = lp_cert.complete();
    out.certificate_digest = lp_cert.digest();
    if (!out.antipodal_pass) {
      out.problems.push_back("antipodal: no certificate for pair (" +
                             std::to_string(lp_cert.violation->first) + "," +
                             std::to_string(lp_cert.violation->second) + ")");
    } else {
      const auto tiling_cert = constructive_certificates(tiling, face, translated, w);
      out.constructive_match = tiling_cert.complete();
      if (!out.constructive_match)
        out.problems.push_back("antipodal: constructive certificate incomplete");
      out.packing_pass = true;
      for (const auto& a : kPackingGrid) {
        const auto packing = homothety_packing_check(w, lp_cert, a);
        if (!packing.pass) {
          out.packing_pass = false;
          out.problems.push_back("packing: homothets overlap at a = " + rational_to_string(a));
          break;
        }
      }
      const auto bound = antipodal_bound(w, lp_cert);
      out.k_prime = bound.k_prime;
      out.bound_strong = bound.strong;
      out.bound_weak = bound.weak;
      out.chain_ok = bound.chain_ok;
      if (!bound.weak)
        out.problems.push_back("bound: valence " + std::to_string(out.valence_translate) +
                               " exceeds 2^k");
      else if (!bound.strong)
        out.problems.push_back("bound: valence exceeds 2^{k'}");
      // A failed chain with the weak bound intact is independent evidence of
      // a defect; with the weak bound already violated it is the same fact.
      if (!bound.chain_ok && bound.weak)
        out.problems.push_back("bound: volume chain failed at a = 499/1000");
    }
  } catch (const internal_error& e) {
    out.problems.push_back(std::string("internal: ") + e.what());
  }
  return out;
}

int VerificationReport::exit_code() const {
  if (crosscheck_failure) return 3;
  if (bound_violation) return 4;
  return violations.empty() ? 0 : 3;
}

VerificationReport verify_tiling(const std::string& name, const Lattice& lattice, Mode mode,
                                 int k_lo, int k_hi, int jobs,
                                 const std::optional<StarDefect>& defect) {
  const int d = lattice.dim();
  k_lo = std::max(k_lo, 1);
  k_hi = std::min(k_hi, d);
  if (k_lo > k_hi) throw input_error("verify: empty k range after clamping to 1..dim");

  VerificationReport report;
  report.lattice_name = name;
  report.dim = d;
  report.mode = mode;
  report.voronoi_case = lattice.voronoi_case();
  report.k_lo = k_lo;
  report.k_hi = k_hi;

  const Tiling tiling = build_tiling(lattice);
  std::vector<int> ids;
  for (int k = k_hi; k >= k_lo; --k)
    for (int id : tiling.faces.ids_of_codim(k)) ids.push_back(id);
  std::sort(ids.begin(), ids.end());

  report.faces.resize(ids.size());
  parallel_for(static_cast<int>(ids.size()), jobs, [&](int i) {
    report.faces[i] = verify_face(tiling, tiling.faces.face(ids[i]), defect);
  });

  for (const auto& fc : report.faces) {
    auto& mv = report.max_valence_per_k[fc.k];
    mv = std::max(mv, fc.valence_translate);
    ++report.signature_counts[fc.fan_digest];
    for (const auto& p : fc.problems)
      report.violations.push_back("face " + std::to_string(fc.face_id) + ": " + p);
    // A failed weak bound is the one outcome reserved for exit 4; any other
    // problem on the face is bug-class.
    const bool weak_bound_violated = fc.antipodal_pass && !fc.bound_weak;
    if (weak_bound_violated) {
      report.bound_violation = true;
      report.noteworthy.push_back("face " + std::to_string(fc.face_id) +
                                  ": valence exceeds 2^k");
    }
    if (static_cast<int>(fc.problems.size()) > (weak_bound_violated ? 1 : 0))
      report.crosscheck_failure = true;
    if (fc.dual_dim_noteworthy)
      report.noteworthy.push_back("face " + std::to_string(fc.face_id) +
                                  ": dim aff D(F) > k in skew mode");
  }
  return report;
}

namespace {

std::string pass_fail(bool b) { return b ? "pass" : "FAIL"; }

}  // namespace

void VerificationReport::render(std::ostream& os) const {
  os << "parv verification report\n";
  os << "lattice: " << lattice_name << "\n";
  os << "dim: " << dim << "\n";
  os << "mode: " << mode_name(mode) << (voronoi_case ? " (voronoi case)" : " (skew ambient)")
     << "\n";
  os << "k_range: " << k_lo << ".." << k_hi << "\n";
  os << "faces_swept: " << faces.size() << "\n";
  os << "--\n";
  for (const auto& f : faces) {
    os << "face id=" << f.face_id << " dim=" << f.face_dim << " k=" << f.k
       << " valence=" << f.valence_direct << "/" << f.valence_translate
       << " star=" << pass_fail(f.star_match) << " parity=" << pass_fail(f.parity_pass)
       << " dual_dim=" << f.dual_dim;
    if (f.dual_checks_asserted)
      os << " dual_vertex=" << pass_fail(f.dual_vertex_pass);
    else
      os << " dual_vertex=recorded";
    os << " fan=" << f.fan_digest << " antipodal=" << pass_fail(f.antipodal_pass)
       << " cert=" << f.certificate_digest << " constructive=" << pass_fail(f.constructive_match)
       << " packing=" << pass_fail(f.packing_pass) << " kprime=" << f.k_prime << " bound="
       << (f.bound_weak ? (f.bound_strong ? "m<=2^k',2^k" : "m<=2^k only") : "VIOLATED")
       << " chain=" << pass_fail(f.chain_ok) << "\n";
  }
  os << "--\n";
  for (const auto& [k, v] : max_valence_per_k)
    os << "max_valence k=" << k << ": " << v << " (2^k = " << (1 << k) << ")\n";
  for (const auto& [sig, count] : signature_counts)
    os << "signature " << sig << " count=" << count << "\n";
  if (violations.empty()) {
    os << "violations: none\n";
  } else {
    os << "violations: " << violations.size() << "\n";
    for (const auto& v : violations) os << "  ! " << v << "\n";
  }
  if (noteworthy.empty()) {
    os << "noteworthy: none\n";
  } else {
    os << "noteworthy: " << noteworthy.size() << "\n";
    for (const auto& v : noteworthy) os << "  * NOTEWORTHY " << v << "\n";
  }
  os << "exit: " << exit_code() << "\n";
}

CellSummary cell_summary(const std::string& name, const Lattice& lattice) {
  CellSummary out;
  out.lattice_name = name;
  out.dim = lattice.dim();
  const Tiling tiling = build_tiling(lattice);
  out.relevant = tiling.cell.relevant;
  out.fvector = tiling.faces.fvector();
  out.circumradius2 = tiling.circumradius2;
  return out;
}

void CellSummary::render(std::ostream& os) const {
  os << "parv cell summary\n";
  os << "lattice: " << lattice_name << "\n";
  os << "dim: " << dim << "\n";
  os << "relevant_vectors: " << relevant.vectors.size() << "\n";
  for (std::size_t i = 0; i < relevant.vectors.size(); ++i)
    os << "  v " << ivec_to_string(relevant.vectors[i])
       << " norm2=" << rational_to_string(relevant.norm2[i]) << " ("
       << decimal_approx(relevant.norm2[i]) << ")\n";
  os << "fvector: (";
  for (std::size_t i = 0; i < fvector.size(); ++i) os << (i ? "," : "") << fvector[i];
  os << ")\n";
  os << "circumradius2: " << rational_to_string(circumradius2) << " ("
     << decimal_approx(circumradius2) << ")\n";
}

CensusReport census_specs(const std::vector<TilingSpec>& specs, int k, int jobs) {
  std::vector<std::pair<std::string, Lattice>> corpus;
  for (const auto& spec : specs) {
    if (spec.dim < k)
      throw input_error("census: spec '" + spec.name + "' has dim " +
                        std::to_string(spec.dim) + " < k");
    corpus.emplace_back(spec.name, make_lattice(spec, Mode::voronoi));
  }
  CensusReport report;
  report.k = k;
  report.table = census(corpus, k, jobs);
  for (const auto& [sig, entry] : report.table) report.faces_swept += entry.count;
  return report;
}

void CensusReport::render(std::ostream& os) const {
  os << "parv fan census\n";
  os << "k: " << k << "\n";
  os << "faces_swept: " << faces_swept << "\n";
  os << "distinct_types: " << distinct_types() << "\n";
  for (const auto& [sig, entry] : table) {
    os << "type " << signature_digest(sig) << " count=" << entry.count << " witnesses=";
    for (std::size_t i = 0; i < entry.witnesses.size(); ++i) {
      if (i) os << ",";
      os << entry.witnesses[i].first << "#" << entry.witnesses[i].second;
    }
    os << "\n";
  }
}

}  // namespace parv
