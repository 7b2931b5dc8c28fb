#include "arckit/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "arckit/errors.hpp"

namespace arckit {

namespace {

std::vector<int> code_digits(int code, int p, int e) {
    std::vector<int> d((size_t)e, 0);
    for (int i = 0; i < e; ++i) {
        d[(size_t)i] = code % p;
        code /= p;
    }
    return d;
}

int digits_code(const std::vector<int>& d, int p) {
    int c = 0;
    for (int i = (int)d.size() - 1; i >= 0; --i) c = c * p + d[(size_t)i];
    return c;
}

// Multiply two polynomial-basis elements modulo the monic modulus
// x^e + modlow[e-1] x^{e-1} + ... + modlow[0].
int poly_mul(int a, int b, int p, int e, const std::vector<int>& modlow) {
    std::vector<int> da = code_digits(a, p, e), db = code_digits(b, p, e);
    std::vector<int> prod((size_t)(2 * e - 1), 0);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
            prod[(size_t)(i + j)] = (prod[(size_t)(i + j)] + da[(size_t)i] * db[(size_t)j]) % p;
    for (int k = 2 * e - 2; k >= e; --k) {
        int c = prod[(size_t)k];
        if (c == 0) continue;
        prod[(size_t)k] = 0;
        // x^k = x^{k-e} * x^e = -x^{k-e} * modlow(x)
        for (int i = 0; i < e; ++i) {
            int& slot = prod[(size_t)(k - e + i)];
            slot = ((slot - c * modlow[(size_t)i]) % p + p * p) % p;
        }
    }
    prod.resize((size_t)e);
    return digits_code(prod, p);
}

GFTable build_table(int q) {
    GFTable T;
    T.q = q;
    std::vector<int> modlow;
    switch (q) {
        case 2: T.p = 2; T.e = 1; break;
        case 3: T.p = 3; T.e = 1; break;
        case 5: T.p = 5; T.e = 1; break;
        case 7: T.p = 7; T.e = 1; break;
        case 4: T.p = 2; T.e = 2; modlow = {1, 1}; break;    // x^2 + x + 1
        case 8: T.p = 2; T.e = 3; modlow = {1, 1, 0}; break; // x^3 + x + 1
        case 9: T.p = 3; T.e = 2; modlow = {1, 0}; break;    // x^2 + 1
        default: throw parameter_error("unsupported field size " + std::to_string(q));
    }
    T.add.assign((size_t)q, std::vector<int>((size_t)q, 0));
    T.mul.assign((size_t)q, std::vector<int>((size_t)q, 0));
    T.neg.assign((size_t)q, 0);
    T.inv.assign((size_t)q, 0);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            std::vector<int> da = code_digits(a, T.p, T.e), db = code_digits(b, T.p, T.e);
            std::vector<int> s((size_t)T.e);
            for (int i = 0; i < T.e; ++i) s[(size_t)i] = (da[(size_t)i] + db[(size_t)i]) % T.p;
            T.add[(size_t)a][(size_t)b] = digits_code(s, T.p);
            T.mul[(size_t)a][(size_t)b] =
                T.e == 1 ? (a * b) % T.p : poly_mul(a, b, T.p, T.e, modlow);
        }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (T.add[(size_t)a][(size_t)b] == 0) T.neg[(size_t)a] = b;
            if (a != 0 && T.mul[(size_t)a][(size_t)b] == 1) T.inv[(size_t)a] = b;
        }
    T.max_exp = 64;
    T.pw.assign((size_t)q, std::vector<int>((size_t)(T.max_exp + 1), 1));
    for (int a = 0; a < q; ++a)
        for (int k = 1; k <= T.max_exp; ++k)
            T.pw[(size_t)a][(size_t)k] = T.mul[(size_t)T.pw[(size_t)a][(size_t)(k - 1)]][(size_t)a];
    return T;
}

} // namespace

int GFTable::pow_of(int a, int k) const {
    if (k <= max_exp) return pw[(size_t)a][(size_t)k];
    int r = 1;
    for (int i = 0; i < k; ++i) r = mul[(size_t)r][(size_t)a];
    return r;
}

const GFTable& gf_table(int q) {
    static std::mutex mu;
    static std::map<int, GFTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, build_table(q)).first;
    return it->second;
}

int gf_code(const GFTable& T, const Field& F, const FieldElem& c) {
    if (F.is_rational()) {
        mpz_class num = c.q.get_num(), den = c.q.get_den();
        mpz_class p(T.p);
        mpz_class dm = den % p;
        if (dm == 0)
            throw parameter_error("coefficient denominator divisible by the characteristic");
        long nr = mpz_class(((num % p) + p) % p).get_si();
        long dr = mpz_class((dm + p) % p).get_si();
        int dinv = T.inv[(size_t)dr];
        return T.mul[(size_t)nr][(size_t)dinv];
    }
    if ((int)F.characteristic() != T.p)
        throw parameter_error("field characteristic does not match the table");
    return (int)(c.r % (unsigned long)T.p);
}

} // namespace arckit
