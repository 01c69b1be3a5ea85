#pragma once

#include "homlts/hom_structures.hpp"
#include "homlts/imbedding.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homlts {

using Json = nlohmann::ordered_json;

/// On-disk description of an algebra. Bracket entries are sparse: an index
/// tuple (pair or triple) with a coefficient vector of scalar strings.
/// Entries related by skew symmetry may be given once; unspecified entries
/// are zero.
struct AlgebraFile {
    std::string kind; // "lie" | "hom_lie" | "hom_lts"
    std::size_t dim = 0;
    std::vector<std::string> basis; // optional names, may be empty

    struct Entry {
        std::vector<std::size_t> indices;
        Vector value;
    };
    std::vector<Entry> bracket;

    std::optional<Matrix> alpha;
    std::optional<Matrix> alpha2;
    std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> grading;
};

AlgebraFile algebra_from_json(const Json& j);
Json algebra_to_json(const AlgebraFile& file);
AlgebraFile parse_algebra(const std::string& text);
std::string write_algebra(const AlgebraFile& file);

/// Raw conversion: explicit entries are kept verbatim (so axiom violations
/// survive for the checkers to report); the skew counterpart of an entry
/// given once is filled in. kind "lie" defaults alpha to the identity.
HomLieAlgebra to_hom_lie(const AlgebraFile& file);
HomLTS to_hom_lts(const AlgebraFile& file);

AlgebraFile from_hom_lie(const HomLieAlgebra& l, const std::string& kind,
                         std::vector<std::string> basis = {});
AlgebraFile from_hom_lts(const HomLTS& t, std::vector<std::string> basis = {});
AlgebraFile from_graded(const GradedLieWithAut& g);
GradedLieWithAut to_graded(const AlgebraFile& file);

Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix parse_matrix(const std::string& text);

/// Outcome of a CLI command: a command echo, pass/fail verdicts with
/// witness details, informational facts, and the constructed object (when
/// the command builds one) in file format. Canonical bases make the
/// rendering byte-stable across runs.
struct Report {
    std::string command;

    struct Verdict {
        std::string name;
        bool pass = true;
        std::string detail;
    };
    std::vector<Verdict> verdicts;
    std::vector<std::pair<std::string, std::string>> facts;
    Json constructed; // null when the command constructs nothing

    bool ok() const;
    void add_fact(std::string name, std::string value);
    void add_verdict(std::string name, bool pass, std::string detail = "");
    /// One verdict per axiom entry, names optionally prefixed.
    void add_axioms(const AxiomReport& report, const std::string& prefix = "");

    std::string text() const;
    Json to_json() const;
};

std::string witness_string(const AxiomReport::Entry& entry);

} // namespace homlts
