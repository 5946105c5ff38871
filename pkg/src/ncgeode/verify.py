"""Named verification checks over the reference tables, identities and
sequence prefixes, grouped into the suites exposed by the command line.

A check marked with a deviation note asserts the derived value and reports
the note; it only fails if the derived value itself cannot be reproduced.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import fixtures as fx
from .coeffring import EPOLY_RING, INT_RING, epoly_evaluate
from .combinat import (catalan, enumerate_lukasiewicz, iter_lukasiewicz,
                       parking_quasi_ribbons, shift_words, remove_last_corolla)
from .gfseries import closed_form, prefix_check, specialize_ncsf
from .lagrange import (delta_coefficient, divisibility_check, eta_identities,
                       free_cumulant_equation_holds, free_cumulant_routes,
                       g_t, gamma_t, geode, geode_by_division, gessel_gamma,
                       h_t, eta_t, k_lagrange_by_phi, k_lagrange_direct,
                       solve_g, specialize_t, theta_t, theta_k_by_transform)
from .ncsf import NcsfSeries, convert_basis, series_mul
from .schroeder import (enumerate_prime_schroeder, g_e, gamma_e,
                        solve_xy_system)

SUITES = ("all", "paper", "identities", "oeis")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    deviation: str | None = None


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, detail="", deviation=None):
        self.checks.append(Check(name, bool(passed), detail, deviation))

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"[{status}] {c.name}"
            if c.detail and not c.passed:
                line += f"  ({c.detail})"
            out.append(line)
            if c.deviation:
                out.append(f"       documented deviation: {c.deviation}")
        out.append(f"overall: {'PASS' if self.passed else 'FAIL'} "
                   f"({sum(c.passed for c in self.checks)}/{len(self.checks)} checks)")
        return out


def _series_matches_table(series: NcsfSeries, table: dict, max_degree: int) -> tuple[bool, str]:
    for n, expected in table.items():
        if n > max_degree:
            continue
        actual = series.component(n)
        if actual != expected:
            return False, f"degree {n}: expected {expected}, got {actual}"
    return True, ""


# ---------------------------------------------------------------------------


def paper_suite(degree: int) -> Report:
    """Regression checks of displayed low-degree tables."""
    rep = Report("paper")
    d = degree

    g = solve_g(max(d, 3))
    ok, why = _series_matches_table(g, fx.G_LOW, 3)
    rep.add("lagrange-series-low-degrees", ok, why)

    gamma = geode(max(d, 4))
    ok, why = _series_matches_table(gamma, fx.GAMMA_LOW, 3)
    rep.add("geode-low-degrees", ok, why)

    g3r = convert_basis(gamma, "R").component(3)
    rep.add("geode-3-ribbon-basis", g3r == fx.GAMMA3_RIBBON, f"got {g3r}")
    g3l = convert_basis(gamma, "L").component(3)
    rep.add("geode-3-elementary-basis", g3l == fx.GAMMA3_LAMBDA, f"got {g3l}")

    dmax = min(d, 4)
    gt = g_t(max(dmax, 4))
    ok, why = _series_matches_table(gt, fx.G_T_TABLE, dmax)
    rep.add("table-g-t", ok, why)

    gmt = gamma_t(max(dmax, 4))
    ok, why = _series_matches_table(gmt, fx.GAMMA_T_TABLE, dmax)
    rep.add("table-gamma-t", ok, why)

    tht = theta_t(max(dmax, 4))
    ok, why = _series_matches_table(tht, {n: t for n, t in fx.THETA_T_TABLE.items() if n <= 3}, dmax)
    rep.add("table-theta-t-low", ok, why)
    if dmax >= 4:
        ok, why = _series_matches_table(tht, {4: fx.THETA_T_TABLE[4]}, 4)
        rep.add("table-theta-t-4", ok, why,
                deviation=fx.DOCUMENTED_DEVIATIONS["table-theta-t-4"])

    ht = h_t(max(dmax, 4))
    ok, why = _series_matches_table(ht, {n: t for n, t in fx.H_T_TABLE.items() if n <= 3}, dmax)
    rep.add("table-h-t-low", ok, why)
    if dmax >= 4:
        ok, why = _series_matches_table(ht, {4: fx.H_T_TABLE[4]}, 4)
        rep.add("table-h-t-4", ok, why,
                deviation=fx.DOCUMENTED_DEVIATIONS["table-h-t-4"])

    et = eta_t(max(dmax, 4))
    ok, why = _series_matches_table(et, {n: t for n, t in fx.ETA_T_TABLE.items() if n <= 3}, dmax)
    rep.add("table-eta-t-low", ok, why)
    if dmax >= 4:
        ok, why = _series_matches_table(et, {4: fx.ETA_T_TABLE[4]}, 4)
        rep.add("table-eta-t-4", ok, why,
                deviation=fx.DOCUMENTED_DEVIATIONS["table-eta-t-4"])

    rep.add("delta-coefficient-211",
            delta_coefficient((2, 1, 1)) == fx.DELTA_211,
            str(delta_coefficient((2, 1, 1))))
    rep.add("delta-coefficient-1111",
            delta_coefficient((1, 1, 1, 1)) == fx.DELTA_1111)

    ge = g_e(max(dmax, 4))
    ok, why = _series_matches_table(ge, fx.G_E_TABLE, dmax)
    rep.add("table-e-lagrange", ok, why)
    gme = gamma_e(max(dmax, 4))
    ok, why = _series_matches_table(gme, fx.GAMMA_E_TABLE, dmax)
    rep.add("table-e-geode", ok, why)

    K = free_cumulant_routes(3)["t-specialization"]
    ok, why = _series_matches_table(K, fx.FREE_CUMULANTS_LOW, 3)
    rep.add("free-cumulants-low-degrees", ok, why)

    state = solve_xy_system(3)
    sys_ok = all(state.y[n] == fx.SYSTEM_Y_TABLE[n] for n in fx.SYSTEM_Y_TABLE) and \
        all(state.x[n] == fx.SYSTEM_X_TABLE[n] for n in fx.SYSTEM_X_TABLE) and \
        state.g[3] == fx.SYSTEM_G3_TABLE
    rep.add("system-solution-low-degrees", sys_ok)

    rep.add("prime-schroeder-trees-size-3",
            list(enumerate_prime_schroeder(3)) == sorted(
                fx.PRIME_SCHROEDER_3_CODES, reverse=True)
            and len(enumerate_prime_schroeder(3)) == 6)

    rep.add("lukasiewicz-words-2-3",
            enumerate_lukasiewicz(2) == fx.LUKASIEWICZ_2
            and enumerate_lukasiewicz(3) == fx.LUKASIEWICZ_3)

    code, dyck = fx.DYCK_EXAMPLE
    from .combinat import code_to_dyck, code_to_ndpf, ndpf_to_noncrossing
    rep.add("dyck-and-parking-example",
            code_to_dyck(code) == dyck
            and code_to_ndpf(fx.NDPF_EXAMPLE[0]) == fx.NDPF_EXAMPLE[1]
            and ndpf_to_noncrossing(fx.NDPF_EXAMPLE[1]) == fx.NDPF_EXAMPLE[2])

    shifts_ok = all(shift_words(c) == w for c, w in fx.SHIFT_EXAMPLES.items())
    rep.add("shift-word-examples", shifts_ok)

    code, k, expected = fx.COROLLA_EXAMPLE
    rep.add("corolla-removal-example", remove_last_corolla(code, k) == expected,
            str(remove_last_corolla(code, k)))

    rep.add("parking-quasi-ribbons-31",
            parking_quasi_ribbons((3, 1)) == fx.PQR_31_FILLINGS)
    rep.add("parking-quasi-ribbons-121",
            parking_quasi_ribbons((1, 2, 1)) == fx.PQR_121_FILLINGS)
    rep.add("parking-quasi-ribbons-211",
            parking_quasi_ribbons((2, 1, 1)) == fx.PQR_211_FILLINGS)
    return rep


def identities_suite(degree: int) -> Report:
    """Structural identities checked by independent routes."""
    rep = Report("identities")
    d = degree

    g = solve_g(d)
    from .ncsf import generator, series_power, sigma1, unit_series, zero_series
    acc = zero_series(INT_RING, d)
    for m in range(1, d + 1):
        acc = acc + series_mul(generator(INT_RING, m, d), series_power(g, m))
    rep.add("defining-equation", acc == g - unit_series(INT_RING, d),
            "g - 1 must equal sum_m S_m g^m")

    kmax = min(4, d)
    gam = geode(d)
    routes_equal = all(geode(d, k) == gam for k in range(1, kmax + 1))
    rep.add("geode-corolla-independence", routes_equal)
    rep.add("geode-right-division", geode_by_division(d) == gam)
    rep.add("gessel-inversion-formula", gessel_gamma(d) == gam)

    eta_ok = eta_identities(d)
    for name, okay in eta_ok.items():
        rep.add(f"prime-series: {name}", okay)

    dt = min(d, 5)
    gt = g_t(dt)
    for k in (1, 2, 3):
        direct = k_lagrange_direct(k, min(dt, 4))
        viaphi = k_lagrange_by_phi(k, min(dt, 4))
        viat = specialize_t(gt, k).truncate(min(dt, 4))
        rep.add(f"k-lagrange-route-agreement-k{k}",
                direct == viaphi == viat)
    rep.add("zero-level-is-sigma1",
            k_lagrange_direct(0, d) == sigma1(INT_RING, d))

    div = divisibility_check(min(3, d), min(5, d))
    rep.add("divisibility-nonnegative-quotients",
            all(r["divides"] and r["nonnegative"] for r in div))

    for k in (2, 3):
        tk = specialize_t(theta_t(min(d, 5)), k)
        rep.add(f"step-quotient-equals-transform-k{k}",
                tk == theta_k_by_transform(k, min(d, 5)))
    rep.add("theta-at-1-is-geode",
            specialize_t(theta_t(min(d, 4)), 1) == geode(min(d, 4)))

    routes = free_cumulant_routes(min(d, 7))
    vals = list(routes.values())
    rep.add("free-cumulant-route-agreement", vals[0] == vals[1] == vals[2])
    rep.add("free-cumulant-defining-equation",
            free_cumulant_equation_holds(min(d, 7)))

    de = min(d, 6)
    rep.add("e-lagrange-route-agreement",
            g_e(de, "delta") == g_e(de, "system") == g_e(de, "trees"))
    ke = min(d, 5)
    rep.add("e-geode-corolla-independence",
            gamma_e(ke, 1) == gamma_e(ke, 2) == gamma_e(ke, 3))
    sign_spec = g_e(de).map_coefficients(lambda c: epoly_evaluate(c, "sign"), INT_RING)
    rep.add("e-series-at-sign-is-free-cumulants",
            sign_spec == free_cumulant_routes(de)["t-specialization"])

    # conjugation/sign identity, specific to the Lagrange series
    from .combinat import compositions, conjugate
    gl = convert_basis(solve_g(min(d, 7)), "L")
    gr = convert_basis(solve_g(min(d, 7)), "R")
    sign_ok = True
    for n in range(min(d, 7) + 1):
        for I in compositions(n):
            lhs = gl.component(n).get(I, 0)
            rhs = gr.component(n).get(conjugate(I), 0)
            if lhs != (-1) ** (n - len(I)) * rhs:
                sign_ok = False
    rep.add("sign-conjugation-identity-on-g", sign_ok)
    return rep


def oeis_suite(degree: int) -> Report:
    """Sequence-prefix checks through both series and closed-form routes."""
    rep = Report("oeis")
    d = degree

    nmax = min(d, 10)
    g = solve_g(nmax)
    cat = specialize_ncsf(g, "catalan")
    ok, idx = prefix_check(cat, fx.A000108_CATALAN[: nmax + 1])
    rep.add("catalan-coefficient-sums", ok, f"first mismatch at {idx}")
    ok, idx = prefix_check(closed_form("catalan", nmax), fx.A000108_CATALAN[: nmax + 1])
    rep.add("catalan-closed-form", ok, f"first mismatch at {idx}")

    ns = min(d, 7)
    gam = geode(ns)
    ok, idx = prefix_check(specialize_ncsf(gam, "coeff-sum"),
                           fx.A071724_GEODE_SUMS[: ns + 1])
    rep.add("geode-coefficient-sums", ok, f"first mismatch at {idx}")
    ok, idx = prefix_check(closed_form("geode", ns), fx.A071724_GEODE_SUMS[: ns + 1])
    rep.add("geode-closed-form", ok, f"first mismatch at {idx}")

    nr = min(d, 9)
    gam_r = geode(nr)
    ok, idx = prefix_check(specialize_ncsf(gam_r, "ribbon-u"),
                           fx.A239204_RIBBON_SUMS[: nr + 1])
    rep.add("ribbon-sum-series-route", ok, f"first mismatch at {idx}")
    ok, idx = prefix_check(closed_form("ribbon-sum", nr),
                           fx.A239204_RIBBON_SUMS[: nr + 1])
    rep.add("ribbon-sum-closed-form", ok, f"first mismatch at {idx}")

    nl = min(d, 10)
    gam_l = geode(nl)
    ok, idx = prefix_check(specialize_ncsf(gam_l, "lambda-abs"),
                           fx.A238112_LAMBDA_SUMS[: nl + 1])
    rep.add("lambda-sum-series-route", ok, f"first mismatch at {idx}")
    ok, idx = prefix_check(closed_form("lambda-sum", nl),
                           fx.A238112_LAMBDA_SUMS[: nl + 1])
    rep.add("lambda-sum-closed-form", ok, f"first mismatch at {idx}")

    counts_ok = all(len(enumerate_prime_schroeder(n)) == c
                    for n, c in fx.PRIME_SCHROEDER_COUNTS.items() if n <= d)
    rep.add("prime-schroeder-counts", counts_ok)
    sums_ok = all(
        epoly_evaluate(sum(g_e(5).component(n).values(), start=EPOLY_RING.zero), "one")
        == fx.PRIME_SCHROEDER_COUNTS[n]
        for n in range(1, min(d, 5) + 1))
    rep.add("e-series-coefficient-sums-are-schroeder", sums_ok)

    nz = min(d, 8)
    rep.add("zq-specialization-equals-closed-form",
            specialize_ncsf(g_e(nz), "zq") == closed_form("zq", nz))

    ncat = min(d, 10)
    rep.add("lukasiewicz-counts-are-catalan",
            all(sum(1 for _ in iter_lukasiewicz(n)) == catalan(n)
                for n in range(ncat + 1)))
    return rep


def run_suite(suite: str, degree: int) -> Report:
    if suite == "paper":
        return paper_suite(degree)
    if suite == "identities":
        return identities_suite(degree)
    if suite == "oeis":
        return oeis_suite(degree)
    if suite == "all":
        rep = Report("all")
        for name in ("paper", "identities", "oeis"):
            rep.checks.extend(run_suite(name, degree).checks)
        return rep
    raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
