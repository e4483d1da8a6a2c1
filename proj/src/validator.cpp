#include "designbench/validator.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace designbench {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::objective_mismatch: return "objective-mismatch";
    case Verdict::infeasible: return "infeasible";
    case Verdict::grid_violation: return "grid-violation";
    case Verdict::below_proven_optimum: return "below-proven-optimum";
    case Verdict::unverifiable_no_design: return "unverifiable-no-design";
  }
  return "?";
}

ValidationVerdict validate(const CandidateRecord& record,
                           const ProvenOptima& optima,
                           const ValidatorTolerances& tol) {
  const double f_min = record.problem == Problem::vessel
                           ? optima.vessel_f_min
                           : optima.cantilever_f_min;
  ValidationVerdict v;
  v.gap_to_optimum = record.reported_f - f_min;
  bool below = record.reported_f < f_min - tol.claim;

  if (record.design.empty()) {
    v.classification =
        below ? Verdict::below_proven_optimum : Verdict::unverifiable_no_design;
    return v;
  }

  EvaluationReport rep;
  bool grid_bad = false;
  if (record.problem == Problem::vessel) {
    if (record.design.size() != 4)
      throw std::invalid_argument("validate: vessel design needs 4 values");
    const VesselDesign x{record.design[0], record.design[1], record.design[2],
                         record.design[3]};
    rep = evaluate_vessel(x, tol.feasibility);
    grid_bad = rep.grid_violation;
  } else {
    if (record.design.size() != 5)
      throw std::invalid_argument("validate: cantilever design needs 5 values");
    CantileverDesign x;
    std::copy(record.design.begin(), record.design.end(), x.heights.begin());
    rep = evaluate_cantilever(x, tol.feasibility);
  }
  v.recomputed_f = rep.objective;
  v.worst_violation = rep.max_violation;

  // A feasible design whose recomputed cost respects the certificate can
  // never be "below the optimum" no matter what objective it reports.
  if (rep.feasible && rep.objective >= f_min - 1e-9) below = false;

  // Constraint/bound status independent of the thickness grid.
  bool physics_ok = true;
  const std::array<double, 4> ctol{tol.feasibility.stress, tol.feasibility.stress,
                                   tol.feasibility.volume, tol.feasibility.length};
  for (std::size_t i = 0; i < rep.constraint_slacks.size(); ++i) {
    const double lim = record.problem == Problem::vessel ? ctol[i] : tol.feasibility.stress;
    if (rep.constraint_slacks[i] > lim) physics_ok = false;
  }
  for (const BoundViolation& b : rep.bound_violations)
    if (b.amount > tol.feasibility.bounds) physics_ok = false;

  if (!physics_ok)
    v.classification = Verdict::infeasible;
  else if (grid_bad)
    v.classification = Verdict::grid_violation;
  else if (below)
    v.classification = Verdict::below_proven_optimum;
  else if (std::abs(rep.objective - record.reported_f) > tol.report)
    v.classification = Verdict::objective_mismatch;
  else
    v.classification = Verdict::verified;
  return v;
}

std::vector<CandidateRecord> load_corpus(std::istream& in) {
  std::vector<CandidateRecord> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return std::string{};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;

    std::vector<std::string> fields;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) fields.push_back(trim(tok));
    if (fields.size() < 3)
      throw CorpusParseError(lineno, "expected source,problem,reported_f");

    CandidateRecord rec;
    rec.source = fields[0];
    if (fields[1] == "vessel")
      rec.problem = Problem::vessel;
    else if (fields[1] == "cantilever")
      rec.problem = Problem::cantilever;
    else
      throw CorpusParseError(lineno, "unknown problem tag '" + fields[1] + "'");

    std::size_t end = fields.size();
    if (fields.back() == "*") {
      rec.flagged_invalid = true;
      --end;
    }
    try {
      rec.reported_f = std::stod(fields[2]);
      for (std::size_t i = 3; i < end; ++i)
        rec.design.push_back(std::stod(fields[i]));
    } catch (const std::exception&) {
      throw CorpusParseError(lineno, "malformed numeric field");
    }
    if (!(rec.reported_f > 0))
      throw CorpusParseError(lineno, "reported objective must be positive");
    const std::size_t want = rec.problem == Problem::vessel ? 4 : 5;
    if (!rec.design.empty() && rec.design.size() != want)
      throw CorpusParseError(lineno, "design vector has wrong length");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<CandidateRecord> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return load_corpus(in);
}

CorpusReport corpus_report(const std::vector<CandidateRecord>& records,
                           const ProvenOptima& optima,
                           const ValidatorTolerances& tol) {
  CorpusReport rep;
  for (const CandidateRecord& rec : records) {
    const ValidationVerdict v = validate(rec, optima, tol);
    ++rep.counts[v.classification];
    const bool bad = v.classification == Verdict::infeasible ||
                     v.classification == Verdict::grid_violation ||
                     v.classification == Verdict::below_proven_optimum ||
                     v.classification == Verdict::objective_mismatch;
    if (rec.flagged_invalid && !bad) ++rep.starred_unconfirmed;
    if (!rec.flagged_invalid && bad) ++rep.anomalies_unstarred;
    rep.rows.push_back({rec, v});
  }
  return rep;
}

}  // namespace designbench
