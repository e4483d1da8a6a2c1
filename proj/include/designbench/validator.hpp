#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

#include "designbench/problems.hpp"

namespace designbench {

enum class Problem { vessel, cantilever };

/// A claimed solution from the literature corpus or a user.
struct CandidateRecord {
  std::string source;
  Problem problem = Problem::vessel;
  double reported_f = 0.0;
  std::vector<double> design;  // empty = objective-only claim
  bool flagged_invalid = false;  // corpus star marker
};

enum class Verdict {
  verified,
  objective_mismatch,
  infeasible,
  grid_violation,
  below_proven_optimum,
  unverifiable_no_design,
};

std::string to_string(Verdict v);

struct ValidationVerdict {
  Verdict classification;
  std::optional<double> recomputed_f;
  std::optional<double> worst_violation;
  double gap_to_optimum;  // reported_f - f_min
};

/// Certified minima the validator screens against.
struct ProvenOptima {
  double vessel_f_min;
  double cantilever_f_min;
};

struct ValidatorTolerances {
  double claim = 1e-3;   // reported_f below f_min by more than this is anomalous
  double report = 0.01;  // reported vs recomputed objective
  // Literature design vectors are rounded to ~4 decimals, so the feasibility
  // re-check must absorb that rounding; the volume slack moves by whole cubic
  // inches under a 1e-4 radius perturbation.
  FeasibilityTolerances feasibility{1e-4, 10.0, 1e-4, 1e-4, 1e-6};
};

/// Classify one claim. Precedence when a design is present:
/// infeasible > grid-violation > below-proven-optimum > objective-mismatch
/// > verified. Without a design only the objective screen applies.
ValidationVerdict validate(const CandidateRecord& record,
                           const ProvenOptima& optima,
                           const ValidatorTolerances& tol = {});

struct CorpusParseError : std::runtime_error {
  int line;
  CorpusParseError(int line_, const std::string& what_)
      : std::runtime_error(what_), line(line_) {}
};

/// Parse a corpus file: one `source,problem,reported_f[,design...][,*]`
/// record per line, `#` comments and blank lines skipped.
std::vector<CandidateRecord> load_corpus(std::istream& in);
std::vector<CandidateRecord> load_corpus_file(const std::string& path);

struct CorpusReport {
  struct Row {
    CandidateRecord record;
    ValidationVerdict verdict;
  };
  std::vector<Row> rows;
  std::map<Verdict, int> counts;
  int anomalies_unstarred = 0;   // non-starred rows with a bad classification
  int starred_unconfirmed = 0;   // starred rows that did not screen as invalid
};

CorpusReport corpus_report(const std::vector<CandidateRecord>& records,
                           const ProvenOptima& optima,
                           const ValidatorTolerances& tol = {});

}  // namespace designbench
