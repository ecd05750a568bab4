#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mcell {

enum class Answer { Yes, No, Unknown };

const char* answer_name(Answer a);

struct TrailEntry {
    std::string rule;       // engine rule id
    std::string citation;   // theorem label the rule implements
    std::string statement;  // one-line statement of the rule
};

// Tri-valued answer with a citation trail.  Yes/No answers carry at least one
// trail entry; Unknown lists the rules that were attempted.
struct Verdict {
    Answer answer = Answer::Unknown;
    std::vector<TrailEntry> trail;
    std::vector<std::pair<std::string, std::string>> witnesses;  // name -> printed value

    Verdict& cite(const std::string& rule_id);
    Verdict& witness(std::string name, std::string value);
    Verdict& merge_trail(const Verdict& other);

    bool yes() const { return answer == Answer::Yes; }
    bool no() const { return answer == Answer::No; }
    bool unknown() const { return answer == Answer::Unknown; }

    static Verdict make(Answer a, const std::string& rule_id);
    static Verdict yes_by(const std::string& rule_id) { return make(Answer::Yes, rule_id); }
    static Verdict no_by(const std::string& rule_id) { return make(Answer::No, rule_id); }
};

struct Citation {
    const char* id;
    const char* label;      // e.g. "Theorem 2.8"
    const char* statement;  // rule content in engine terms
};

const std::vector<Citation>& citation_registry();
const Citation* find_citation(const std::string& id);

}  // namespace mcell
