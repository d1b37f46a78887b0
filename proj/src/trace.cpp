#include "kitefree/trace.hpp"

#include <sstream>

namespace kitefree {

std::string CaseTrace::joined() const
{
    std::string out;
    for (size_t i = 0; i < tags.size(); ++i) {
        if (i)
            out += "/";
        out += tags[i];
    }
    return out;
}

namespace {

// Suffix alternatives per decision point. The grammar is small enough to
// spell out as the list of complete paths below the "main" root.
std::vector<std::vector<std::string>> main_paths()
{
    std::vector<std::vector<std::string>> ghasc5 = {
        {"ghasc5:d_empty"},
        {"ghasc5:bb_anticomplete"},
        {"ghasc5:case1", "case1:1.1"},
        {"ghasc5:case1", "case1:1.2", "case1.2:missing_col"},
        {"ghasc5:case1", "case1:1.2", "case1.2:f1"},
        {"ghasc5:case1", "case1:1.2", "case1.2:swapped", "case1.2:missing_col"},
        {"ghasc5:case1", "case1:1.2", "case1.2:swapped", "case1.2:f1"},
        {"ghasc5:case2", "case2:b_in_single_w"},
        {"ghasc5:case2", "case2:spread"},
        {"ghasc5:case3", "case3:triangle_free"},
        {"ghasc5:case3", "case3:3.1"},
        {"ghasc5:case3", "case3:3.2", "case3.2:b_in_single_w"},
        {"ghasc5:case3", "case3:3.2", "case3.2:spread"},
    };
    std::vector<std::vector<std::string>> c5k5 = {
        {"c5k5:c9bar", "c9bar:case1"},
        {"c5k5:c9bar", "c9bar:case2"},
        {"c5k5:c7bar", "c7bar:pivot"},
        {"c5k5:c7bar", "c7bar:dominated", "c7bar:d56"},
        {"c5k5:c7bar", "c7bar:dominated", "c7bar:d67"},
        {"c5k5:c7bar", "c7bar:dominated", "c7bar:dlow"},
    };
    std::vector<std::vector<std::string>> out;
    for (auto& tail : ghasc5) {
        std::vector<std::string> p = {"main:has_c5"};
        p.insert(p.end(), tail.begin(), tail.end());
        out.push_back(p);
    }
    for (auto& tail : c5k5) {
        std::vector<std::string> p = {"main:c5_free", "c5free:lift"};
        p.insert(p.end(), tail.begin(), tail.end());
        out.push_back(p);
    }
    return out;
}

} // namespace

bool is_valid_trace(const CaseTrace& t)
{
    size_t start = 0;
    while (start < t.tags.size() && t.tags[start] == "ktfree:lift")
        ++start;
    static const std::vector<std::vector<std::string>> paths = main_paths();
    for (const auto& p : paths) {
        if (t.tags.size() - start != p.size())
            continue;
        bool eq = true;
        for (size_t i = 0; i < p.size() && eq; ++i)
            eq = t.tags[start + i] == p[i];
        if (eq)
            return true;
    }
    return false;
}

const std::vector<std::string>& all_trace_leaves()
{
    static const std::vector<std::string> leaves = [] {
        std::vector<std::string> out;
        for (const auto& p : main_paths()) {
            CaseTrace t;
            t.tags = p;
            out.push_back(t.joined());
        }
        return out;
    }();
    return leaves;
}

const char* soundness_kind_name(SoundnessKind k)
{
    switch (k) {
    case SoundnessKind::OutOfClass: return "OutOfClass";
    case SoundnessKind::PartitionIncomplete: return "PartitionIncomplete";
    case SoundnessKind::StableSetViolated: return "StableSetViolated";
    case SoundnessKind::CaseExhausted: return "CaseExhausted";
    }
    return "?";
}

namespace {

std::string soundness_message(SoundnessKind k, const std::string& msg,
                              const std::vector<int>& w, const CaseTrace& t)
{
    std::ostringstream out;
    out << soundness_kind_name(k) << ": " << msg;
    if (!w.empty()) {
        out << " [witness:";
        for (int v : w)
            out << " " << v;
        out << "]";
    }
    if (!t.tags.empty())
        out << " (trace " << t.joined() << ")";
    return out.str();
}

std::string refusal_message(const ClassReport& rep)
{
    std::ostringstream out;
    out << "input is not " << rep.class_id << "-class:";
    for (const auto& v : rep.violations) {
        out << " " << v.pattern_name << "{";
        for (size_t i = 0; i < v.witness.size(); ++i)
            out << (i ? "," : "") << v.witness[i];
        out << "}";
    }
    return out.str();
}

} // namespace

SoundnessError::SoundnessError(SoundnessKind k, const std::string& msg, std::vector<int> w, CaseTrace t)
    : std::runtime_error(soundness_message(k, msg, w, t)), kind(k), witness(std::move(w)), trace(std::move(t))
{
}

OutOfClassError::OutOfClassError(ClassReport rep)
    : std::runtime_error(refusal_message(rep)), report(std::move(rep))
{
}

} // namespace kitefree
