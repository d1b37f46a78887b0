#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kitefree/detect.hpp"

namespace kitefree {

// Ordered branch tags recording the path a coloring run took through the
// case analysis. Tags come from a fixed registry; a completed run's tags
// must form a root-to-leaf path of the decision tree.
struct CaseTrace {
    std::vector<std::string> tags;

    void push(const std::string& tag) { tags.push_back(tag); }
    std::string joined() const;
};

// Grammar check against the registry: true iff the tags are exactly one
// root-to-leaf path (lift prefixes allowed).
bool is_valid_trace(const CaseTrace& t);

// Every root-to-leaf path of the decision tree, as joined tag strings.
// Used by the branch-coverage audit.
const std::vector<std::string>& all_trace_leaves();

enum class SoundnessKind { OutOfClass, PartitionIncomplete, StableSetViolated, CaseExhausted };

const char* soundness_kind_name(SoundnessKind k);

// A structural fact asserted by the case analysis failed to re-verify on the
// input. The witness names the offending vertices; it re-verifies the
// violation on the input graph.
struct SoundnessError : std::runtime_error {
    SoundnessKind kind;
    std::vector<int> witness;
    CaseTrace trace;

    SoundnessError(SoundnessKind k, const std::string& msg, std::vector<int> w, CaseTrace t);
};

// Refusal: the input failed the class precheck of a coloring entry point.
struct OutOfClassError : std::runtime_error {
    ClassReport report;

    explicit OutOfClassError(ClassReport rep);
};

} // namespace kitefree
