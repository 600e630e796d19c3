#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace algeo {

enum class CheckStatus { pass, fail, skipped };

struct CheckRecord {
    std::string suite;
    std::string id;
    std::string identity; // the equation or property being checked
    CheckStatus status;
    std::string witness; // enough data to replay a failure (or a skip reason)
    double ms = 0.0;
};

/// Aggregated result of one or more verification suites.  The json rendering
/// is stable-keyed and excludes timing, so identical (input, seed, options)
/// produce byte-identical documents; timing appears in the markdown form only.
class Report {
  public:
    Report(std::string input_name, std::string digest, std::uint64_t seed);

    void set_option(const std::string &key, const std::string &value);

    void add(const CheckRecord &rec);
    void add_pass(const std::string &suite, const std::string &id, const std::string &identity,
                  double ms = 0.0);
    void add_fail(const std::string &suite, const std::string &id, const std::string &identity,
                  const std::string &witness, double ms = 0.0);
    void add_skip(const std::string &suite, const std::string &id, const std::string &identity,
                  const std::string &reason);

    const std::vector<CheckRecord> &checks() const { return checks_; }
    std::uint64_t seed() const { return seed_; }

    int passed() const;
    int failed() const;
    int skipped() const;
    bool all_pass() const { return failed() == 0; }

    std::string to_json() const;     // stable keys, no timing
    std::string to_markdown() const; // one section per suite, with timing

  private:
    std::string input_name_;
    std::string digest_;
    std::uint64_t seed_;
    std::vector<std::pair<std::string, std::string>> options_;
    std::vector<CheckRecord> checks_;
};

} // namespace algeo
