#include "arckit/enumerate.hpp"

#include <chrono>
#include <stdexcept>
#include <thread>

#include "arckit/errors.hpp"

namespace arckit {

int GFPoly::eval(const GFTable& T, const std::vector<int>& pt) const {
    int acc = 0;
    for (const auto& term : terms) {
        int v = term.c;
        for (const auto& [var, ex] : term.pe) v = T.mul[(size_t)v][(size_t)T.pow_of(pt[(size_t)var], ex)];
        acc = T.add[(size_t)acc][(size_t)v];
    }
    return acc;
}

GFPoly compile_gf(const GFTable& T, const Poly& f) {
    GFPoly out;
    out.nvars = f.ring() ? f.ring()->nvars() : 0;
    for (const auto& [mono, coef] : f.terms()) {
        int code = gf_code(T, f.ring()->field(), coef);
        if (code == 0) continue; // coefficient vanishes in this characteristic
        GFPoly::Term t;
        t.c = code;
        for (int i = 0; i < (int)mono.e.size(); ++i)
            if (mono.e[(size_t)i] != 0) t.pe.emplace_back(i, mono.e[(size_t)i]);
        out.terms.push_back(std::move(t));
    }
    return out;
}

namespace {

struct Compiled {
    std::vector<GFPoly> eqs, inv;
};

Compiled compile_presentation(const GFTable& T, const SchemePresentation& P) {
    Compiled C;
    for (const auto& e : P.eqs) C.eqs.push_back(compile_gf(T, e.p));
    for (const auto& g : P.inverted) C.inv.push_back(compile_gf(T, g));
    return C;
}

bool accepts(const GFTable& T, const Compiled& C, const std::vector<int>& pt) {
    for (const auto& f : C.eqs)
        if (f.eval(T, pt) != 0) return false;
    for (const auto& g : C.inv)
        if (g.eval(T, pt) == 0) return false;
    return true;
}

long long checked_total(int q, int nvars, long long budget) {
    long long total = 1;
    for (int i = 0; i < nvars; ++i) {
        if (total > budget / q)
            throw budget_error("enumeration of " + std::to_string(nvars) + " variables over F_" +
                               std::to_string(q) + " exceeds the assignment budget " +
                               std::to_string(budget));
        total *= q;
    }
    return total;
}

// Iterate over all assignments with the LAST variable fastest; positions
// [fixed_from, nvars) vary, the prefix stays as given.
template <class Fn>
void odometer(int q, std::vector<int>& pt, int fixed_from, Fn&& visit) {
    int n = (int)pt.size();
    for (int i = fixed_from; i < n; ++i) pt[(size_t)i] = 0;
    while (true) {
        visit(pt);
        int i = n - 1;
        while (i >= fixed_from) {
            if (++pt[(size_t)i] < q) break;
            pt[(size_t)i] = 0;
            --i;
        }
        if (i < fixed_from) break;
    }
}

} // namespace

void enumerate_points(const SchemePresentation& P, int q, long long budget,
                      const std::function<void(const std::vector<int>&)>& cb) {
    P.validate();
    if (P.ring->n_params() != 0)
        throw std::invalid_argument("point enumeration requires a parameter-free ring");
    const GFTable& T = gf_table(q);
    const int n = P.ring->nvars();
    checked_total(q, n, budget);
    Compiled C = compile_presentation(T, P);
    std::vector<int> pt((size_t)n, 0);
    odometer(q, pt, 0, [&](const std::vector<int>& p) {
        if (accepts(T, C, p)) cb(p);
    });
}

CountResult count_points(const SchemePresentation& P, int q, long long budget, int workers) {
    P.validate();
    if (P.ring->n_params() != 0)
        throw std::invalid_argument("point counting requires a parameter-free ring");
    if (workers < 1) workers = 1;
    const GFTable& T = gf_table(q);
    const int n = P.ring->nvars();
    auto t0 = std::chrono::steady_clock::now();
    CountResult res;
    res.q = q;
    res.nvars = n;
    res.total = checked_total(q, n, budget);
    Compiled C = compile_presentation(T, P);
    if (n == 0) {
        std::vector<int> pt;
        res.count = accepts(T, C, pt) ? 1 : 0;
    } else if (workers == 1 || n == 1) {
        long long cnt = 0;
        std::vector<int> pt((size_t)n, 0);
        odometer(q, pt, 0, [&](const std::vector<int>& p) {
            if (accepts(T, C, p)) ++cnt;
        });
        res.count = cnt;
    } else {
        int w = std::min(workers, q);
        std::vector<long long> tallies((size_t)w, 0);
        std::vector<std::thread> threads;
        for (int wi = 0; wi < w; ++wi)
            threads.emplace_back([&, wi]() {
                std::vector<int> pt((size_t)n, 0);
                long long cnt = 0;
                for (int first = wi; first < q; first += w) {
                    pt[0] = first;
                    odometer(q, pt, 1, [&](const std::vector<int>& p) {
                        if (accepts(T, C, p)) ++cnt;
                    });
                }
                tallies[(size_t)wi] = cnt;
            });
        for (auto& th : threads) th.join();
        for (long long c : tallies) res.count += c;
    }
    auto t1 = std::chrono::steady_clock::now();
    res.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return res;
}

} // namespace arckit
