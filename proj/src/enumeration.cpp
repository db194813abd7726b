#include "chaincodes/enumeration.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "chaincodes/field_codes.hpp"

namespace chaincodes {

namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr long long kSigmaBudget = 1LL << 22;

struct Params {
    int e, s, theta, k1, kappa, m;
    BigInt q;
    long long n;
};

Params params_of(const ChainRingSpec& spec, const TypeProfile& type) {
    if (type.levels() != spec.e) throw std::invalid_argument("type must have e entries");
    if (!type.valid()) throw std::invalid_argument("type is not valid for the length");
    return Params{spec.e, spec.s_half, spec.theta_e, spec.kappa_1, spec.kappa, spec.m(), BigInt(1) << spec.m(), type.n};
}

BigInt ipow(const BigInt& q, long long k) {
    if (k < 0) throw std::domain_error("negative exponent");
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) r *= q;
    return r;
}

/// q^k for any integer k, as a rational.
Rational rpow(const BigInt& q, long long k) {
    if (k >= 0) return Rational(ipow(q, k));
    return Rational(BigInt(1), ipow(q, -k));
}

Rational frac(const Rational& a, const Rational& b) {
    if (b == 0) throw std::domain_error("zero denominator in a chain count");
    return a / b;
}

BigInt to_integer(const Rational& r, const char* what) {
    if (boost::multiprecision::denominator(r) != 1)
        throw std::logic_error(std::string("non-integral value for ") + what);
    return boost::multiprecision::numerator(r);
}

BigInt sigma_of(const CountOptions& options, int n, int d, int m, bool with_one) {
    return options.sigma ? options.sigma(n, d, m, with_one) : sigma_doubly_even(n, d, m, with_one);
}

Rational d0_term(const Params& p, long long A) {
    const BigInt& q = p.q;
    const long long n = p.n;
    const long long h = n / 2;
    if (A == 0) return 1;
    if (A > h - 1) return 0;
    if (n % 8 == 2 || n % 8 == 6) {
        Rational r = frac((rpow(q, h - 1) - 1) * (rpow(q, h - A - 1) + 1), Rational(q - 1));
        for (long long i = 1; i < A; ++i) r *= frac(rpow(q, n - 2 - 2 * i) - 1, rpow(q, i + 1) - 1);
        return r;
    }
    const int sg = (n % 8 == 0 || p.m % 2 == 0) ? 1 : -1;
    Rational r = 1;
    for (long long i = 0; i < A; ++i)
        r *= frac(rpow(q, n - 2 * i - 3) + sg * rpow(q, h - 1 - i) - sg * rpow(q, h - i - 2) - 1, rpow(q, i + 1) - 1);
    return r;
}

Rational b0_term(const Params& p, long long A) {
    const BigInt& q = p.q;
    const long long n = p.n;
    const long long h = n / 2;
    if (A == 0 || A > h - 1) return 0;
    Rational prod = 1;
    for (long long i = 0; i + 1 < A; ++i)
        prod *= frac(rpow(q, n - 2 * i - 3) + rpow(q, h - 1 - i) - rpow(q, h - i - 2) - 1, rpow(q, i + 1) - 1);
    if (n % 8 == 2 || n % 8 == 6) return (rpow(q, n - 2 * A - 1) - rpow(q, h - A - 1)) * prod;
    if (n % 8 == 0 || p.m % 2 == 0) return (rpow(q, n - 2 * A - 1) + rpow(q, h - A) - rpow(q, h - A - 1) - 1) * prod;
    return (rpow(q, n - 2 * A - 1) - rpow(q, h - A) + rpow(q, h - A - 1) - 1) * prod;
}

Rational tail_product(const Params& p, long long A, long long Ap) {
    Rational r = 1;
    for (long long g = A; g < Ap; ++g) r *= frac(rpow(p.q, p.n - 2 * g) - 1, rpow(p.q, g + 1 - A) - 1);
    return r;
}

Rational n_count(const Params& p, const TypeProfile& t, const CountOptions& options) {
    const BigInt& q = p.q;
    const long long n = p.n;
    const int de = p.s - p.k1;
    const long long A = t.Lambda(de);
    const long long Ap = t.Lambda(p.s + p.theta);
    if (Ap == 0) return 1;
    Rational P = 1;
    for (int i = 1; i <= de; ++i) P *= Rational(gaussian_binomial(t.Lambda(i), t.lambda(i), q));
    for (int j = de + 1; j <= p.s + p.theta; ++j) P *= Rational(gaussian_binomial(t.Lambda(j) - A, t.lambda(j), q));
    if (n % 2 == 1) {
        Rational r = Rational(sigma_of(options, static_cast<int>(n), static_cast<int>(A), p.m, false)) * P;
        for (long long l = A; l < Ap; ++l) r *= frac(rpow(q, n - 2 * l - 1) - 1, rpow(q, l + 1 - A) - 1);
        return r;
    }
    const Rational D0 = d0_term(p, A);
    const Rational B0 = b0_term(p, A);
    if (Ap == A) return (D0 + B0) * P;
    const Rational den = rpow(q, Ap - A) - 1;
    Rational head = frac(D0 * (rpow(q, n - Ap - A) - 1), den);
    if (options.verbatim_n)
        head += frac(B0 * (rpow(q, n - 2 * Ap) + rpow(q, Ap - A) - 2), den);
    else
        head += frac(B0 * (rpow(q, n - Ap - A) - 1), den);
    Rational r = head * P;
    for (long long l = A; l + 1 < Ap; ++l) r *= frac(rpow(q, n - 2 * l - 2) - 1, rpow(q, l + 1 - A) - 1);
    return r;
}

Rational y_count(const Params& p, const TypeProfile& t, int omega, const CountOptions& options) {
    const BigInt& q = p.q;
    const int de = p.s - p.k1;
    const long long A = t.Lambda(de);
    const long long Ap = t.Lambda(p.s + p.theta);
    const int c = de - omega;
    if (c <= 0 || t.Lambda(c) == 0) return 0;
    const long long Lc = t.Lambda(c);
    Rational r = Rational(sigma_of(options, static_cast<int>(p.n), static_cast<int>(A), p.m, true));
    r *= rpow(q, t.Lambda(c - 1));
    r *= Rational(gaussian_binomial(A - 1, A - Lc, q) * gaussian_binomial(Lc - 1, t.Lambda(c - 1), q));
    for (int i = 1; i < c; ++i) r *= Rational(gaussian_binomial(t.Lambda(i), t.lambda(i), q));
    for (int a = c + 1; a <= de; ++a) r *= Rational(gaussian_binomial(t.Lambda(a) - Lc, t.lambda(a), q));
    for (int b = de + 1; b <= p.s + p.theta; ++b) r *= Rational(gaussian_binomial(t.Lambda(b) - A, t.lambda(b), q));
    return r * tail_product(p, A, Ap);
}

Rational m_count(const Params& p, const TypeProfile& t, const CountOptions& options) {
    const BigInt& q = p.q;
    const int de = p.s - p.k1;
    const long long A = t.Lambda(de);
    const long long Ap = t.Lambda(p.s + p.theta);
    const int c = p.s - p.kappa + p.theta;
    if (c <= 0 || t.Lambda(c) == 0) return 0;
    const long long Lc = t.Lambda(c);
    Rational r = Rational(sigma_of(options, static_cast<int>(p.n), static_cast<int>(A), p.m, true));
    r *= tail_product(p, A, Ap) * Rational(gaussian_binomial(A - 1, A - Lc, q));
    for (int l = 1; l <= c; ++l) r *= Rational(gaussian_binomial(t.Lambda(l), t.lambda(l), q));
    for (int b = c + 1; b <= de; ++b) r *= Rational(gaussian_binomial(t.Lambda(b) - Lc, t.lambda(b), q));
    for (int d = de + 1; d <= p.s + p.theta; ++d) r *= Rational(gaussian_binomial(t.Lambda(d) - A, t.lambda(d), q));
    return r;
}

Rational z_count(const Params& p, const TypeProfile& t, const CountOptions& options) {
    const BigInt& q = p.q;
    const int de = p.s - p.k1;
    const long long A = t.Lambda(de);
    const long long Ap = t.Lambda(p.s + p.theta);
    const long long L1 = t.Lambda(1);
    if (L1 == 0) return 0;
    Rational r = Rational(sigma_of(options, static_cast<int>(p.n), static_cast<int>(A), p.m, true));
    r *= Rational(gaussian_binomial(A - 1, A - L1, q)) * tail_product(p, A, Ap);
    for (int d = 2; d <= de; ++d) r *= Rational(gaussian_binomial(t.Lambda(d) - L1, t.lambda(d), q));
    for (int b = de + 1; b <= p.s + p.theta; ++b) r *= Rational(gaussian_binomial(t.Lambda(b) - A, t.lambda(b), q));
    return r;
}

/// q^E times the product of Gaussian binomials shared by every chain of the type.
BigInt common_lift_factor(const Params& p, const TypeProfile& t) {
    const long long n = p.n;
    const int s = p.s;
    const int th = p.theta;
    long long E = 0;
    for (int i = 1; i <= s; ++i) E += static_cast<long long>(t.Lambda(i)) * (n - t.Lambda(i + 1));
    for (int j = 1; j <= s - 1 + th; ++j)
        E += static_cast<long long>(t.Lambda(s + j)) * (n - t.Lambda(s + j + 1) - t.Lambda(s + th - j));
    for (int a = 1; a <= s - p.k1 - 1; ++a) E -= t.Lambda(a);
    E -= (1 - th) * static_cast<long long>(t.Lambda(s)) * (t.Lambda(s) - 1) / 2;
    BigInt G = 1;
    for (int l = s + 1 + th; l <= p.e; ++l)
        G *= gaussian_binomial(t.lambda(l) + n - t.Lambda(l) - t.Lambda(p.e + 1 - l), t.lambda(l), p.q);
    return ipow(p.q, E) * G;
}

BigInt family(ChainFamily kind, const Params& p, const TypeProfile& t, int omega, const CountOptions& options) {
    switch (kind) {
        case ChainFamily::N: return to_integer(n_count(p, t, options), "N");
        case ChainFamily::Y: {
            const int hi = 2 * p.kappa <= p.e ? p.k1 - p.theta : p.s - p.k1 - 2;
            if (omega < 0 || omega > hi) throw std::invalid_argument("omega out of range");
            return to_integer(y_count(p, t, omega, options), "Y");
        }
        case ChainFamily::M:
            if (2 * p.kappa > p.e) throw std::invalid_argument("M applies only when 2 kappa <= e");
            return to_integer(m_count(p, t, options), "M");
        case ChainFamily::Z:
            if (2 * p.kappa <= p.e) throw std::invalid_argument("Z applies only when 2 kappa > e");
            return to_integer(z_count(p, t, options), "Z");
    }
    throw std::invalid_argument("unknown chain family");
}

}  // namespace

BigInt gaussian_binomial(long long n, long long k, const BigInt& q) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= ipow(q, n - i) - 1;
        den *= ipow(q, i + 1) - 1;
    }
    return num / den;
}

BigInt sigma_doubly_even(int n, int d, int m, bool with_one) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int, bool>, BigInt> cache;
    const auto key = std::make_tuple(n, d, m, with_one);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    if (n < 0 || d < 0 || d > n) return 0;
    if (gaussian_binomial(n, d, BigInt(1) << m) > kSigmaBudget)
        throw std::length_error("doubly even subspace enumeration exceeds the budget");
    std::uint32_t fbar = 0;
    const auto f = default_modulus(m);
    for (std::size_t i = 0; i < f.size(); ++i) fbar |= (f[i] & 1u) << i;
    const ResidueField F(m, fbar);
    BigInt count = 0;
    for_each_subspace(F, n, d, [&](const FieldCode& C) {
        if (!is_self_orthogonal_field(F, C) || !is_doubly_even(F, C)) return;
        if (contains_all_one(F, C) == with_one) ++count;
    });
    std::lock_guard<std::mutex> lock(mutex);
    cache[key] = count;
    return count;
}

BigInt chain_family_count(ChainFamily kind, const ChainRingSpec& spec, const TypeProfile& type, int omega,
                          const CountOptions& options) {
    return family(kind, params_of(spec, type), type, omega, options);
}

BigInt b_theta(const ChainRingSpec& spec, const TypeProfile& type, const CountOptions& options) {
    const Params p = params_of(spec, type);
    const BigInt N = family(ChainFamily::N, p, type, 0, options);
    const long long r = p.n % 8;
    if (r != 0 && r != 4) return N;
    BigInt total = N;
    if (2 * p.kappa <= p.e) {
        for (int w = 0; w <= p.k1 - p.theta; ++w) total += ipow(p.q, w) * family(ChainFamily::Y, p, type, w, options);
        if (r == 0 || p.m % 2 == 0) total += 2 * ipow(p.q, p.k1) * family(ChainFamily::M, p, type, 0, options);
        return total;
    }
    total += ipow(p.q, p.s - p.k1 - 1) * family(ChainFamily::Z, p, type, 0, options);
    for (int w = 0; w <= p.s - p.k1 - 2; ++w) total += ipow(p.q, w) * family(ChainFamily::Y, p, type, w, options);
    return total;
}

ChainFlags chain_flags(const SOChain& chain) {
    const ChainRingSpec& spec = chain.ring->spec();
    const int s = spec.s_half;
    const int k1 = spec.kappa_1;
    const int th = spec.theta_e;
    const int n = chain.n;
    auto one = [&](int i) { return chain.one_in(i); };
    ChainFlags flags;
    if (2 * spec.kappa <= spec.e) {
        const int c = s - spec.kappa + th;
        if (n % 8 == 4 && spec.m() % 2 == 1 && one(c)) {
            flags.obstructed = true;
            return flags;
        }
        for (int w = 1; w <= k1 - th; ++w)
            if (one(s - k1 - w) && !one(s - k1 - w - 1)) flags.mu = w;
        if (one(c) && (n % 8 == 0 || (n % 8 == 4 && spec.m() % 2 == 0))) {
            flags.epsilon = 1;
            flags.mu = k1;
        }
    } else {
        for (int w = 1; w <= s - k1 - 2; ++w)
            if (one(s - k1 - w) && !one(s - k1 - w - 1)) flags.mu = w;
        if (one(1)) flags.mu = s - k1 - 1;
    }
    return flags;
}

BigInt per_chain_lift_count(const ChainRingSpec& spec, const TypeProfile& type, const ChainFlags& flags) {
    const Params p = params_of(spec, type);
    if (flags.epsilon < 0 || flags.epsilon > 1 || flags.mu < 0) throw std::invalid_argument("inconsistent chain flags");
    const int mu_max = 2 * p.kappa <= p.e ? p.k1 : p.s - p.k1 - 1;
    if (flags.mu > mu_max) throw std::invalid_argument("inconsistent chain flags");
    if (flags.obstructed) return 0;
    if (!type.so_feasible()) return 0;
    return common_lift_factor(p, type) * (BigInt(1) << flags.epsilon) * ipow(p.q, flags.mu);
}

BigInt count_so_type(const ChainRingSpec& spec, const TypeProfile& type, const CountOptions& options) {
    const Params p = params_of(spec, type);
    if (!type.so_feasible()) return 0;
    return common_lift_factor(p, type) * b_theta(spec, type, options);
}

BigInt count_sd_type(const ChainRingSpec& spec, const TypeProfile& type, const CountOptions& options) {
    params_of(spec, type);
    if (!type.sd_feasible()) return 0;
    return count_so_type(spec, type, options);
}

std::vector<TypeProfile> all_types(int e, int n) {
    std::vector<TypeProfile> out;
    std::vector<int> cur(e, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == e) {
            out.push_back(TypeProfile{n, cur});
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
        cur[i] = 0;
    };
    rec(rec, 0, n);
    return out;
}

Totals total_counts(const ChainRingSpec& spec, int n, const CountOptions& options) {
    Totals t;
    for (const auto& type : all_types(spec.e, n)) {
        t.total_so += count_so_type(spec, type, options);
        t.total_sd += count_sd_type(spec, type, options);
    }
    return t;
}

}  // namespace chaincodes
