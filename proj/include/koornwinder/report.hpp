#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace koorn {

// Outcome of verifying one identity.  Exact checks carry tolerance 0 and an
// error of 0 or 1; numeric checks carry the observed error and its bound.
struct CheckResult {
    std::string name;
    std::string identity;
    bool pass = true;
    double error = 0.0;
    double tolerance = 0.0;
    std::string detail;
    std::optional<LaurentPoly> witness;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::size_t failures() const {
        std::size_t k = 0;
        for (const auto& c : checks)
            if (!c.pass) ++k;
        return k;
    }

    CheckResult& exact(std::string name, std::string identity, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), std::move(identity), ok, ok ? 0.0 : 1.0, 0.0, std::move(detail), {}});
        return checks.back();
    }

    CheckResult& numeric(std::string name, std::string identity, double err, double tol, std::string detail = {}) {
        bool ok = err <= tol;  // NaN compares false
        checks.push_back({std::move(name), std::move(identity), ok, err, tol, std::move(detail), {}});
        return checks.back();
    }

    void merge(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

// Folds many trials of one identity into a single report line.
class ExactTally {
public:
    ExactTally(std::string name, std::string identity) : name_(std::move(name)), identity_(std::move(identity)) {}

    void record(bool ok, const LaurentPoly* input = nullptr, const std::string& note = {}) {
        ++trials_;
        if (ok || failed_) return;
        failed_ = true;
        if (input) witness_ = *input;
        note_ = note;
    }

    void emit(Report& r) const {
        auto& c = r.exact(name_, identity_, !failed_, failed_ ? note_ : std::to_string(trials_) + " cases");
        c.witness = witness_;
    }

private:
    std::string name_, identity_, note_;
    bool failed_ = false;
    int trials_ = 0;
    std::optional<LaurentPoly> witness_;
};

// Random Laurent polynomial with total absolute degree <= deg and small rational coefficients.
inline LaurentPoly random_laurent(int n, std::mt19937_64& rng, int deg = 3, int terms = 4) {
    std::uniform_int_distribution<int> coord(-deg, deg), num(-5, 5), den(1, 4);
    LaurentPoly f(n);
    while (static_cast<int>(f.size()) < terms) {
        Weight e(static_cast<std::size_t>(n));
        int total = 0;
        for (auto& v : e) {
            v = coord(rng);
            total += std::abs(v);
        }
        if (total > deg) continue;
        int a = num(rng);
        if (a == 0) continue;
        f.add_term(e, frac(a, den(rng)));
    }
    return f;
}

}  // namespace koorn
