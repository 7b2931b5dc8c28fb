#include "arckit/report.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"

namespace arckit {

void ReportSet::run(const std::string& name,
                    const std::function<std::pair<bool, std::string>()>& fn) {
    CheckRecord rec;
    rec.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto [pass, detail] = fn();
        rec.pass = pass;
        rec.detail = detail;
    } catch (const std::exception& e) {
        rec.pass = false;
        rec.detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    rec.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    records_.push_back(std::move(rec));
}

bool ReportSet::all_pass() const {
    for (const auto& r : records_)
        if (!r.pass) return false;
    return true;
}

int ReportSet::n_failed() const {
    int n = 0;
    for (const auto& r : records_)
        if (!r.pass) ++n;
    return n;
}

std::string ReportSet::text() const {
    std::ostringstream os;
    for (const auto& r : records_) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) os << ": " << r.detail;
        os << "\n";
    }
    os << records_.size() - (size_t)n_failed() << "/" << records_.size() << " checks passed\n";
    return os.str();
}

std::string ReportSet::json() const {
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    for (const auto& r : records_) {
        nlohmann::json c;
        c["name"] = r.name;
        c["pass"] = r.pass;
        c["detail"] = r.detail;
        j["checks"].push_back(std::move(c));
    }
    j["pass"] = all_pass();
    return j.dump(2);
}

} // namespace arckit
