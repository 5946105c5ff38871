"""The noncommutative Lagrange series, the geode, and their k/t hierarchy.

The Lagrange series g is the unique solution with g_0 = 1 of

    g = 1 + sum_{m >= 1} S_m g^m          (S factors on the left),

so [S^I] g_n counts plane trees on n+1 nodes whose nonzero arities in prefix
order spell I.  The geode gamma satisfies g = 1 + gamma (sigma_1 - 1) and is
also obtained by annihilating g with any S_k^{-1}.

Replacing the exponent m by k*m gives the k-Lagrange series; its coefficients
are polynomials in k, which turns k into a formal indeterminate t.  The
coefficient of S^I in the t-series is

    sum over codes a of plane trees with len(I) nodes of
    prod_j C(t*i_j, a_j),

computed by delta_coefficient.  Specializing t to -1 gives free cumulants.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .coeffring import (EPOLY_RING, INT_RING, POLYT_ONE, POLYT_RING, PolyT,
                        binomial_polynomial, epoly_evaluate)
from .combinat import compositions, plane_tree_codes_with_nodes
from .ncsf import (NcsfSeries, annihilate, generator, lagrange_transform,
                   negate_alphabet, phi_k, right_divide, series_inverse,
                   series_mul, series_power, series_power_binomial, sigma1,
                   unit_series, zero_series)


@lru_cache(maxsize=None)
def solve_g(order: int) -> NcsfSeries:
    """Solve the defining equation of the Lagrange series over the integers."""
    comps: list[dict] = [{(): 1}]
    powers: dict[tuple[int, int], dict] = {}

    def power_component(m, d):
        # degree-d part of g^m, using components of degree <= d only
        if m == 0:
            return {(): 1} if d == 0 else {}
        key = (m, d)
        cached = powers.get(key)
        if cached is not None:
            return cached
        acc: dict = {}
        for j in range(d + 1):
            right = comps[j]
            if not right:
                continue
            left = power_component(m - 1, d - j)
            for wl, cl in left.items():
                for wr, cr in right.items():
                    w = wl + wr
                    acc[w] = acc.get(w, 0) + cl * cr
        powers[key] = acc
        return acc

    for n in range(1, order + 1):
        comp: dict = {}
        for m in range(1, n + 1):
            tail = power_component(m, n - m)
            for w, c in tail.items():
                key = (m,) + w
                comp[key] = comp.get(key, 0) + c
        comps.append(comp)
    return NcsfSeries(INT_RING, comps)


def g_from_trees(order: int) -> NcsfSeries:
    """Independent construction of g by enumerating plane tree codes."""
    from .combinat import iter_lukasiewicz, nonzero_letters
    comps: list[dict] = []
    for n in range(order + 1):
        comp: dict = {}
        for code in iter_lukasiewicz(n):
            word = nonzero_letters(code)
            comp[word] = comp.get(word, 0) + 1
        comps.append(comp)
    return NcsfSeries(INT_RING, comps)


def geode(order: int, k: int = 1) -> NcsfSeries:
    """The geode, computed as g_{n+k} S_k^{-1}; independent of k."""
    if k < 1:
        raise ValueError("corolla size k must be positive")
    return annihilate(solve_g(order + k), k)


def geode_by_division(order: int) -> NcsfSeries:
    """The geode as the exact right quotient (g - 1) / (sigma_1 - 1)."""
    g = solve_g(order + 1)
    one = unit_series(INT_RING, order + 1)
    return right_divide(g - one, sigma1(INT_RING, order + 1) - one)


def gessel_gamma(order: int) -> NcsfSeries:
    """Geode via the inversion formula
    (1 - sum_{n>=1} S_n (1 + g + ... + g^{n-1}))^{-1}."""
    g = solve_g(order)
    one = unit_series(INT_RING, order)
    inner = None
    partial_sum = one          # 1 + g + ... + g^{m-1}, starts at m = 1
    gpow = one                 # g^{m-1}
    for m in range(1, order + 1):
        term = series_mul(generator(INT_RING, m, order), partial_sum)
        inner = term if inner is None else inner + term
        if m < order:
            gpow = series_mul(gpow, g)
            partial_sum = partial_sum + gpow
    if inner is None:
        return one
    return series_inverse(one - inner)


def prime_series(order: int) -> tuple[NcsfSeries, NcsfSeries]:
    """The series h = 1 - g^{-1} of prime parking functions and eta = h S_1^{-1}.

    h_n counts plane trees whose rightmost root subtree is a leaf.
    """
    g = solve_g(order + 1)
    h_full = unit_series(INT_RING, order + 1) - series_inverse(g)
    eta = annihilate(h_full, 1)
    return h_full.truncate(order), eta


def eta_identities(order: int) -> dict[str, bool]:
    """Check gamma = g*eta, eta*(sigma_1 - 1) = h and eta = g^{-1}*gamma."""
    g = solve_g(order)
    h, eta = prime_series(order)
    gamma = geode(order)
    sig = sigma1(INT_RING, order)
    one = unit_series(INT_RING, order)
    return {
        "gamma = g*eta": series_mul(g, eta) == gamma,
        "eta*(sigma1 - 1) = h": series_mul(eta, sig - one) == h,
        "eta = inverse(g)*gamma": series_mul(series_inverse(g), gamma) == eta,
    }


# ---------------------------------------------------------------------------
# the t-hierarchy

@lru_cache(maxsize=None)
def delta_coefficient(comp: tuple[int, ...]) -> PolyT:
    """Coefficient of S^I in the t-Lagrange series as a polynomial in t.

    Sums, over the codes a of plane trees with len(I) nodes, the products
    C(t*i_1, a_1) ... C(t*i_{p-1}, a_{p-1}); the final code letter is always
    zero and is skipped.
    """
    if not comp:
        return POLYT_ONE
    p = len(comp)
    total = PolyT()
    for code in plane_tree_codes_with_nodes(p):
        prod = POLYT_ONE
        for j in range(p - 1):
            prod = prod * binomial_polynomial(comp[j], code[j])
            if not prod:
                break
        total = total + prod
    return total


@lru_cache(maxsize=None)
def g_t(order: int) -> NcsfSeries:
    """The t-Lagrange series over polynomials in t."""
    comps: list[dict] = [{(): POLYT_ONE}]
    for n in range(1, order + 1):
        comps.append({I: delta_coefficient(I) for I in compositions(n)})
    return NcsfSeries(POLYT_RING, comps)


def specialize_t(u: NcsfSeries, value) -> NcsfSeries:
    """Evaluate every polynomial coefficient at an integer value of t."""
    def ev(p):
        val = p.evaluate(value)
        if isinstance(val, Fraction):
            if val.denominator != 1:
                raise ValueError(f"non-integer specialization {val} at t={value}")
            val = int(val)
        return val
    return u.map_coefficients(ev, INT_RING)


def substitute_t(u: NcsfSeries, inner: PolyT) -> NcsfSeries:
    """Apply the ring endomorphism t -> inner(t) to every coefficient."""
    return u.map_coefficients(lambda p: p.compose(inner), POLYT_RING)


def k_lagrange_direct(k: int, order: int) -> NcsfSeries:
    """Solve w = sum_m S_m w^{k m} degree by degree (k may be negative)."""
    comps: list[dict] = [{(): 1}]
    for n in range(1, order + 1):
        partial = NcsfSeries(INT_RING, comps)
        comp: dict = {}
        for m in range(1, n + 1):
            tgt = n - m
            power = series_power(partial.truncate(tgt), k * m)
            for w, c in power.components[tgt].items():
                key = (m,) + w
                comp[key] = comp.get(key, 0) + c
        comps.append(comp)
    return NcsfSeries(INT_RING, comps)


def k_lagrange_by_phi(k: int, order: int) -> NcsfSeries:
    """The k-Lagrange series as phi_k applied to g computed through k*order."""
    if k < 1:
        raise ValueError("phi route requires k >= 1")
    return phi_k(solve_g(k * order), k)


def free_cumulant_routes(order: int) -> dict[str, NcsfSeries]:
    """The three constructions of the (-1)-Lagrange series."""
    return {
        "alphabet-negation-inverse": series_inverse(negate_alphabet(solve_g(order))),
        "direct-recursion": k_lagrange_direct(-1, order),
        "t-specialization": specialize_t(g_t(order), -1),
    }


def free_cumulants(order: int) -> NcsfSeries:
    return series_inverse(negate_alphabet(solve_g(order)))


def free_cumulant_equation_holds(order: int) -> bool:
    """Check sigma_1 = sum_n K_n sigma_1^n through the given degree."""
    K = free_cumulants(order)
    sig = sigma1(INT_RING, order)
    acc = zero_series(INT_RING, order)
    sig_pow = unit_series(INT_RING, order)
    for n in range(order + 1):
        kn = [dict() for _ in range(order + 1)]
        kn[n] = dict(K.components[n])
        acc = acc + series_mul(NcsfSeries(INT_RING, kn), sig_pow)
        if n < order:
            sig_pow = series_mul(sig_pow, sig)
    return acc == sig


def gamma_t(order: int) -> NcsfSeries:
    """The t-geode: exact right quotient (g^(t) - 1) / (sigma_1 - 1)."""
    g = g_t(order + 1)
    one = unit_series(POLYT_RING, order + 1)
    return right_divide(g - one, sigma1(POLYT_RING, order + 1) - one)


def theta_t(order: int) -> NcsfSeries:
    """The step quotient (g^(t) - 1) / (g^(t-1) - 1) between hierarchy levels."""
    g = g_t(order + 1)
    g_prev = substitute_t(g, PolyT((-1, 1)))
    one = unit_series(POLYT_RING, order + 1)
    return right_divide(g - one, g_prev - one)


def theta_k_by_transform(k: int, order: int) -> NcsfSeries:
    """theta at integer level k >= 1 as the (k-1)-fold Lagrange transform of
    the geode."""
    if k < 1:
        raise ValueError("k must be at least 1")
    g = solve_g(order)
    out = geode(order)
    for _ in range(k - 1):
        out = lagrange_transform(g, out)
    return out


def h_t(order: int) -> NcsfSeries:
    """The t-analogue of the prime series: (g^(t) - 1) (g^(t))^{-t}.

    Equals sum_{n>=1} S_n (g^(t))^{t(n-1)} and reduces to h at t = 1.
    """
    g = g_t(order)
    minus_t = PolyT((0, -1))
    return series_mul(g - unit_series(POLYT_RING, order),
                      series_power_binomial(g, minus_t))


def eta_t(order: int) -> NcsfSeries:
    """The t-analogue of eta: h^(t) S_1^{-1}."""
    return annihilate(h_t(order + 1), 1)


def divisibility_check(k_max: int, order: int) -> list[dict]:
    """For k = 1..k_max, divide g^(k) - 1 by g^(k-1) - 1 and inspect the
    quotient for nonnegative integer coefficients."""
    reports = []
    gt = g_t(order + 1)
    for k in range(1, k_max + 1):
        gk = specialize_t(gt, k)
        gk_prev = specialize_t(gt, k - 1)
        one = unit_series(INT_RING, order + 1)
        quotient = right_divide(gk - one, gk_prev - one)
        nonneg = all(c >= 0 for comp in quotient.components for c in comp.values())
        reports.append({"k": k, "order": quotient.order,
                        "divides": True, "nonnegative": nonneg,
                        "quotient": quotient})
    return reports


# ---------------------------------------------------------------------------
# cross-ring comparisons

def equals_under_e_sign(u_epoly: NcsfSeries, v_int: NcsfSeries) -> bool:
    """Compare an EPoly series specialized at e_n -> (-1)^n with an integer one."""
    if u_epoly.ring is not EPOLY_RING:
        raise ValueError("expected an EPoly series")
    order = min(u_epoly.order, v_int.order)
    spec = u_epoly.map_coefficients(lambda c: epoly_evaluate(c, "sign"), INT_RING)
    return spec.truncate(order) == v_int.truncate(order)
