#pragma once

#include "matgerm/family.hpp"
#include "matgerm/localalg.hpp"

#include <optional>
#include <string>

namespace mg {

enum class SuspensionKind {
    SqToSk_Trivial,
    SqToSk_Full,
    SqToSk_Intermediate, // 2x2 sources only
    SymToSq_Trivial,
    SymToSq_Full,
};

std::string suspension_name(SuspensionKind k);
std::optional<SuspensionKind> suspension_from_name(const std::string& name);

// Builds the suspended family. Fresh variables (v.., w.., z) are appended
// to the roster, with underscore suffixes on collision.
MatrixFamily suspend(const MatrixFamily& source, SuspensionKind kind);

struct TauRelationReport {
    SuspensionKind kind;
    int k = 0;        // source size
    int s_source = 0; // source variable count
    int s_susp = 0;
    long tau_source = 0;
    long tau_susp = 0;
    std::optional<long> kappa;    // dim O / (entry ideal), when the relation uses it
    std::optional<long> expected; // tabulated prediction for tau_susp
    std::string relation;
    enum class Verdict { Pass, Fail, NoPrediction } verdict = Verdict::NoPrediction;

    std::string str() const;
    bool failed() const { return verdict == Verdict::Fail; }
};

// Computes tau on both sides and compares against the tabulated relation
// for this (source dimensions, suspension) combination; combinations with
// no tabulated prediction are computed and flagged, never assumed.
TauRelationReport tau_relation_report(const MatrixFamily& source, SuspensionKind kind,
                                      const Rat& max_degree = 48);

// Exact polynomial identities binding Pf of the suspension to det of the
// source: trivial -> (-1)^(k(k-1)/2) det, intermediate -> z^2 - det,
// full (k=2) -> vw - det.
bool pfaffian_relation_check(const MatrixFamily& source, SuspensionKind kind);

} // namespace mg
