#include "algeo/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "algeo/version.hpp"

namespace algeo {

namespace {

const char *status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    default:
        return "skipped";
    }
}

std::vector<CheckRecord> sorted_checks(std::vector<CheckRecord> checks) {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckRecord &a, const CheckRecord &b) {
                         if (a.suite != b.suite)
                             return a.suite < b.suite;
                         return a.id < b.id;
                     });
    return checks;
}

} // namespace

Report::Report(std::string input_name, std::string digest, std::uint64_t seed)
    : input_name_(std::move(input_name)), digest_(std::move(digest)), seed_(seed) {}

void Report::set_option(const std::string &key, const std::string &value) {
    for (auto &kv : options_)
        if (kv.first == key) {
            kv.second = value;
            return;
        }
    options_.emplace_back(key, value);
    std::sort(options_.begin(), options_.end());
}

void Report::add(const CheckRecord &rec) { checks_.push_back(rec); }

void Report::add_pass(const std::string &suite, const std::string &id,
                      const std::string &identity, double ms) {
    checks_.push_back({suite, id, identity, CheckStatus::pass, "", ms});
}

void Report::add_fail(const std::string &suite, const std::string &id,
                      const std::string &identity, const std::string &witness, double ms) {
    checks_.push_back({suite, id, identity, CheckStatus::fail, witness, ms});
}

void Report::add_skip(const std::string &suite, const std::string &id,
                      const std::string &identity, const std::string &reason) {
    checks_.push_back({suite, id, identity, CheckStatus::skipped, reason, 0.0});
}

int Report::passed() const {
    int n = 0;
    for (const auto &c : checks_)
        n += c.status == CheckStatus::pass;
    return n;
}

int Report::failed() const {
    int n = 0;
    for (const auto &c : checks_)
        n += c.status == CheckStatus::fail;
    return n;
}

int Report::skipped() const {
    int n = 0;
    for (const auto &c : checks_)
        n += c.status == CheckStatus::skipped;
    return n;
}

std::string Report::to_json() const {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["tool_version"] = version_string;
    doc["input"] = input_name_;
    doc["input_digest"] = digest_;
    doc["seed"] = seed_;
    nlohmann::ordered_json opts = nlohmann::ordered_json::object();
    for (const auto &[k, v] : options_)
        opts[k] = v;
    doc["options"] = std::move(opts);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &c : sorted_checks(checks_)) {
        nlohmann::ordered_json rec;
        rec["suite"] = c.suite;
        rec["id"] = c.id;
        rec["identity"] = c.identity;
        rec["status"] = status_name(c.status);
        rec["witness"] = c.witness;
        arr.push_back(std::move(rec));
    }
    doc["checks"] = std::move(arr);
    doc["summary"] = {{"passed", passed()}, {"failed", failed()}, {"skipped", skipped()}};
    return doc.dump(2) + "\n";
}

std::string Report::to_markdown() const {
    std::ostringstream out;
    out << "# Verification report\n\n";
    out << "- tool: algeo " << version_string << "\n";
    out << "- input: " << input_name_ << " (digest " << digest_ << ")\n";
    out << "- seed: " << seed_ << "\n";
    for (const auto &[k, v] : options_)
        out << "- " << k << ": " << v << "\n";
    auto checks = sorted_checks(checks_);
    std::string suite;
    for (const auto &c : checks) {
        if (c.suite != suite) {
            suite = c.suite;
            out << "\n## " << suite << "\n\n";
            out << "| check | identity | status | witness | ms |\n";
            out << "|---|---|---|---|---|\n";
        }
        out << "| " << c.id << " | " << c.identity << " | " << status_name(c.status) << " | "
            << c.witness << " | " << c.ms << " |\n";
    }
    out << "\n**summary:** " << passed() << " passed, " << failed() << " failed, " << skipped()
        << " skipped\n";
    return out.str();
}

} // namespace algeo
