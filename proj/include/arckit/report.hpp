#pragma once
#include <functional>
#include <string>
#include <vector>

namespace arckit {

// One named check outcome with a one-line evidence string.
struct CheckRecord {
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

// Ordered collection of check outcomes with text and JSON renderings.
class ReportSet {
public:
    void add(CheckRecord rec) { records_.push_back(std::move(rec)); }
    // Runs fn under a timer; exceptions become failures with the message as
    // detail. fn returns {pass, detail}.
    void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn);

    const std::vector<CheckRecord>& records() const { return records_; }
    bool all_pass() const;
    int n_failed() const;

    std::string text() const; // "[PASS] name: detail" lines plus a summary line
    std::string json() const; // {"checks": [...], "pass": bool}; no timings (deterministic)

private:
    std::vector<CheckRecord> records_;
};

} // namespace arckit
