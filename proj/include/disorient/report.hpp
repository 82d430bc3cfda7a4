#pragma once

#include <optional>
#include <string>

#include "disorient/disorient.hpp"
#include "disorient/io.hpp"
#include "disorient/spectral.hpp"
#include "disorient/splitting.hpp"

namespace disorient::io {

Json cycle_json(const LabeledComplex& k, const SignedDualGraph& g, const CycleClassification& c);
Json spectrum_json(int dim, const char* kind, const SpectrumResult& s);

struct CheckOptions {
  bool certificate = false;
  bool oracle = false;
};

/// Machine-readable analysis of a complex: verdict, cycle-parity
/// cross-check over the cycle basis, branching, spectra and Betti numbers,
/// and optionally the certificate and a brute-force comparison.
/// The "oracle" member reports "agrees": false on a mismatch; callers decide
/// how to treat it.
Json check_report(const LabeledComplex& k, const CheckOptions& options);

struct SpectrumRequest {
  std::optional<int> dim;  // all dimensions when empty
  LaplacianKind kind = LaplacianKind::full;
};

/// Throws std::out_of_range / std::invalid_argument for invalid requests.
Json spectrum_report(const LabeledComplex& k, const SpectrumRequest& request);
/// "dimension,index,eigenvalue" rows with a header line.
std::string spectrum_rows(const Json& report);

struct DualRequest {
  int dim = 0;
  Adjacency adjacency = Adjacency::down;
  bool signed_edges = false;
  bool cycles = false;
};

/// Throws std::out_of_range for an invalid dimension and std::invalid_argument
/// when signs or cycles are requested for anything but the top down-dual.
Json dual_report(const LabeledComplex& k, const DualRequest& request);

/// Labels for a repaired complex: old vertices keep theirs, new vertices get
/// their id when that label is free, otherwise "m<id>" (with primes if needed).
LabeledComplex relabel_after_split(const LabeledComplex& before, SimplicialComplex after);

/// Vertex ids only grow during repair, so the repaired labels name every step.
Json split_log_json(const LabeledComplex& repaired, const SplitLog& log);

}  // namespace disorient::io
