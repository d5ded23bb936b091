#include "resolvent/recurrence.hpp"

#include "resolvent/errors.hpp"

namespace resolvent {

Recurrence extract_recurrence(const ResolventODE& ode) {
    if (!ode.homogeneous())
        throw SolverError(ErrorKind::input, "extract_recurrence: ODE must be homogeneous");
    const int r = ode.order;
    if (ode.coeffs[r].coeff(0) == 0)
        throw SolverError(ErrorKind::degenerate, "s=0 is a singular point of the resolvent");

    Recurrence rec;
    rec.order = r;
    for (int j = 0; j <= r; ++j) {
        const RatPoly& P = ode.coeffs[j];
        for (int t = 0; t <= P.degree(); ++t) {
            const Rational& c = P.coeff(t);
            if (c == 0) continue;
            // s^t * y^(j) contributes c * (i-t+j)(i-t+j-1)...(i-t+1) * b_{i-t+j}
            RatPoly q(c);
            for (int u = 0; u < j; ++u)
                q = q * RatPoly({Rational(j - t - u), Rational(1)});
            int d = j - t;
            auto it = rec.bands.find(d);
            if (it == rec.bands.end()) rec.bands[d] = q;
            else it->second = it->second + q;
        }
    }
    for (auto it = rec.bands.begin(); it != rec.bands.end();)
        it = it->second.is_zero() ? rec.bands.erase(it) : std::next(it);
    rec.max_offset = rec.bands.rbegin()->first;
    return rec;
}

namespace {

template <typename T>
T from_rational(const Rational& r);
template <>
Rational from_rational<Rational>(const Rational& r) { return r; }
template <>
Complex from_rational<Complex>(const Rational& r) { return Complex(r.get_d(), 0.0); }

template <typename T>
RecurrenceRun<T> run(const Recurrence& rec, const std::vector<T>& seeds, int K) {
    const int m = rec.max_offset;
    if (static_cast<int>(seeds.size()) != m)
        throw SolverError(ErrorKind::input, "run_recurrence: seed count must equal max offset");

    RecurrenceRun<T> out;
    out.coeffs = seeds;
    out.coeffs.reserve(K + 1);
    for (int i = 0; static_cast<int>(out.coeffs.size()) <= K; ++i) {
        Rational pivot = rec.leading_band().eval(Rational(i));
        if (pivot == 0) {
            out.singular_index = i;
            return out;
        }
        T acc = from_rational<T>(Rational(0));
        for (const auto& [d, q] : rec.bands) {
            if (d == m) continue;
            int idx = i + d;
            if (idx < 0 || idx >= static_cast<int>(out.coeffs.size())) continue;
            acc += from_rational<T>(q.eval(Rational(i))) * out.coeffs[idx];
        }
        out.coeffs.push_back(-acc / from_rational<T>(pivot));
    }
    return out;
}

}  // namespace

RecurrenceRun<Rational> run_recurrence_exact(const Recurrence& rec,
                                             const std::vector<Rational>& seeds, int K) {
    return run<Rational>(rec, seeds, K);
}

RecurrenceRun<Complex> run_recurrence(const Recurrence& rec,
                                      const std::vector<Complex>& seeds, int K) {
    return run<Complex>(rec, seeds, K);
}

}  // namespace resolvent
