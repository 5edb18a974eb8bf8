#ifndef COSALG_REPORT_HPP
#define COSALG_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cosalg {

using json = nlohmann::json;

enum class Verdict { Pass, Fail, Reject };

inline const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Reject: return "reject";
    }
    return "?";
}

/// One named check inside a staged verification. A failing stage carries a
/// concrete witness (the indices/vectors exhibiting the failure).
struct Stage {
    std::string name;
    Verdict verdict = Verdict::Pass;
    json witness;  // null when the stage passes

    static Stage pass(std::string name) { return Stage{std::move(name), Verdict::Pass, nullptr}; }
    static Stage fail(std::string name, json witness) { return Stage{std::move(name), Verdict::Fail, std::move(witness)}; }
};

/// Structured verdict: overall pass/fail/reject, the per-stage outcomes, and
/// numeric payloads (Betti lists, dimensions, curvature components, ...).
struct Report {
    Verdict verdict = Verdict::Pass;
    std::vector<Stage> stages;
    json data = json::object();

    bool passed() const { return verdict == Verdict::Pass; }

    void add(Stage s) {
        if (s.verdict == Verdict::Fail && verdict == Verdict::Pass) verdict = Verdict::Fail;
        stages.push_back(std::move(s));
    }

    void add_pass(const std::string& name) { add(Stage::pass(name)); }
    void add_fail(const std::string& name, json witness) { add(Stage::fail(name, std::move(witness))); }

    /// First failed stage, if any.
    const Stage* first_failure() const {
        for (const auto& s : stages)
            if (s.verdict != Verdict::Pass) return &s;
        return nullptr;
    }

    static Report rejection(const std::string& stage_name, json witness) {
        Report r;
        r.verdict = Verdict::Reject;
        r.stages.push_back(Stage{stage_name, Verdict::Reject, std::move(witness)});
        return r;
    }

    json to_json() const {
        json stages_json = json::array();
        for (const auto& s : stages) {
            json sj;
            sj["name"] = s.name;
            sj["verdict"] = verdict_str(s.verdict);
            if (!s.witness.is_null()) sj["witness"] = s.witness;
            stages_json.push_back(sj);
        }
        json j;
        j["verdict"] = verdict_str(verdict);
        j["stages"] = stages_json;
        j["data"] = data;
        return j;
    }

    std::string to_markdown() const {
        std::string md = "# verdict: ";
        md += verdict_str(verdict);
        md += "\n\n";
        if (!stages.empty()) {
            md += "| stage | verdict | witness |\n|---|---|---|\n";
            for (const auto& s : stages) {
                md += "| " + s.name + " | " + verdict_str(s.verdict) + " | ";
                md += s.witness.is_null() ? "" : s.witness.dump();
                md += " |\n";
            }
            md += "\n";
        }
        if (!data.empty()) {
            md += "## data\n\n```json\n" + data.dump(2) + "\n```\n";
        }
        return md;
    }
};

}  // namespace cosalg

#endif
