// The machine-readable family table: loading, schema validation and full
// verification of every family's factorizations.
#pragma once

#include "conway/notation.hpp"
#include "conway/polyring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conway {

enum class Provenance { Paper, Derived };

struct Erratum {
    std::string original;
    std::string corrected;
    std::string note;
};

struct ExpectedTerms {
    int value = 0;
    Provenance provenance = Provenance::Derived;
};

struct FamilyRecord {
    std::string id;           // e.g. "c3-trefoil-1"
    std::string seed_label;   // e.g. "3_1"
    int conway_count = 0;     // 1..6
    std::vector<std::string> expressions;  // corrected factorization strings
    std::vector<std::string> as_printed;   // verbatim transliteration (defaults to expressions)
    std::vector<Erratum> errata;
    std::optional<ExpectedTerms> expected_terms;
    std::string notes;

    // id without the trailing case number: "c3-trefoil-1" -> "c3-trefoil".
    std::string group() const;
};

struct RegistryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Loads and validates a registry document. Schema violations name the
// field and record index; duplicate ids and variable/conway_count
// mismatches are rejected.
std::vector<FamilyRecord> load(const std::string& path);
std::vector<FamilyRecord> load_from_string(const std::string& text);

// The copy of the shipped registry compiled into the library.
const char* embedded_registry_json();
std::vector<FamilyRecord> load_default();

struct VerificationReport {
    std::string id;
    Polynomial canonical;   // first branch, corrected text
    bool branches_agree = false;
    bool multilinear_unit = false;
    bool vars_complete = false;  // canonical uses exactly a1..a<conway_count>
    long long seed_count = 0;    // number of monomials = all-ones value
    std::optional<bool> expected_match;
    std::vector<Polynomial> mismatches;  // branch minus first, per disagreeing branch
    bool chain_agree = false;   // metric-chain / bilinear second evaluation path
    bool naive_agree = false;   // naive term-list expansion
    bool point_agree = false;   // random-point evaluation
    std::vector<std::string> errors;  // parse or dimension failures

    bool pass() const;
};

struct VerifyOptions {
    bool as_printed = false;
    int oracle_trials = 100;
    std::uint64_t seed = 12345;
};

VerificationReport verify_family(const FamilyRecord& r, const VerifyOptions& opt = {});
std::vector<VerificationReport> verify_all(const std::vector<FamilyRecord>& records,
                                           const VerifyOptions& opt = {});

}  // namespace conway
