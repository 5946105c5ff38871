"""Truncated series in the graded free algebra on generators S_1, S_2, ...

A homogeneous component of degree n is a sparse map from compositions of n
(tuples of positive integers) to coefficients in an exact ring.  The product
is concatenation of compositions extended bilinearly, so a series with unit
constant term is invertible degree by degree.

Three bases are supported.  S is the computational basis; the ribbon basis R
and the elementary basis L exist as views obtained by triangular conversions:

    S^I = sum of R_J over coarsenings J of I,
    R_I = sum of (-1)^(len I - len J) S^J over coarsenings J of I,
    S_n = sum over compositions J of n of (-1)^(n - len J) L^J,

the last rule being its own inverse and extended multiplicatively.

Every series records the degree through which it is exact; operations derive
the output truncation from the inputs and raise rather than silently truncate.
"""

from __future__ import annotations

from functools import lru_cache

from .coeffring import PolyT, POLYT_ONE, Ring
from .combinat import coarsenings, compositions

BASES = ("S", "R", "L")


class TruncationError(ValueError):
    """An operation needs more exact degrees than its input carries."""


class NotDivisibleError(ValueError):
    """Right division left a residual term not ending in the divisor part."""


class NcsfSeries:
    """Graded truncated element of the free algebra, tagged with a basis."""

    __slots__ = ("ring", "basis", "components")

    def __init__(self, ring: Ring, components, basis: str = "S"):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.ring = ring
        self.basis = basis
        comps = []
        for degree, comp in enumerate(components):
            clean = {}
            for word, coeff in comp.items():
                assert sum(word) == degree, (word, degree)
                if coeff:
                    clean[word] = coeff
            comps.append(clean)
        self.components = comps

    @property
    def order(self) -> int:
        return len(self.components) - 1

    def component(self, n: int) -> dict:
        if n > self.order:
            raise TruncationError(f"series exact through degree {self.order}, "
                                  f"component {n} requested")
        return self.components[n]

    def coefficient(self, word: tuple[int, ...]):
        return self.component(sum(word)).get(word, self.ring.zero)

    def truncate(self, order: int) -> "NcsfSeries":
        if order > self.order:
            raise TruncationError(f"series exact through degree {self.order}, "
                                  f"truncation {order} requested")
        return NcsfSeries(self.ring, self.components[: order + 1], self.basis)

    def is_zero(self) -> bool:
        return all(not c for c in self.components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NcsfSeries):
            return NotImplemented
        return (self.ring.name == other.ring.name and self.basis == other.basis
                and self.order == other.order
                and self.components == other.components)

    def __add__(self, other) -> "NcsfSeries":
        self._check_compatible(other)
        order = min(self.order, other.order)
        out = []
        for n in range(order + 1):
            comp = dict(self.components[n])
            for w, c in other.components[n].items():
                new = comp.get(w, self.ring.zero) + c
                if new:
                    comp[w] = new
                else:
                    comp.pop(w, None)
            out.append(comp)
        return NcsfSeries(self.ring, out, self.basis)

    def __neg__(self) -> "NcsfSeries":
        out = [{w: -c for w, c in comp.items()} for comp in self.components]
        return NcsfSeries(self.ring, out, self.basis)

    def __sub__(self, other) -> "NcsfSeries":
        return self + (-other)

    def __mul__(self, other) -> "NcsfSeries":
        if isinstance(other, NcsfSeries):
            return series_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "NcsfSeries":
        # scalar coefficients commute with basis words
        return self.scale(other)

    def scale(self, c) -> "NcsfSeries":
        out = [{w: v * c for w, v in comp.items()} for comp in self.components]
        return NcsfSeries(self.ring, out, self.basis)

    def map_coefficients(self, fn, ring: Ring | None = None) -> "NcsfSeries":
        ring = ring or self.ring
        out = [{w: fn(c) for w, c in comp.items()} for comp in self.components]
        return NcsfSeries(ring, out, self.basis)

    def _check_compatible(self, other):
        if self.ring.name != other.ring.name:
            raise ValueError(f"ring mismatch: {self.ring.name} vs {other.ring.name}")
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __repr__(self) -> str:
        nterms = sum(len(c) for c in self.components)
        return (f"NcsfSeries(ring={self.ring.name}, basis={self.basis}, "
                f"order={self.order}, terms={nterms})")


def unit_series(ring: Ring, order: int) -> NcsfSeries:
    comps = [{(): ring.one}] + [{} for _ in range(order)]
    return NcsfSeries(ring, comps)


def zero_series(ring: Ring, order: int) -> NcsfSeries:
    return NcsfSeries(ring, [{} for _ in range(order + 1)])


def generator(ring: Ring, n: int, order: int | None = None) -> NcsfSeries:
    """The single generator S_n as a series exact through ``order``."""
    order = n if order is None else order
    if order < n:
        raise ValueError("order must reach the generator degree")
    comps = [{} for _ in range(order + 1)]
    comps[n][(n,)] = ring.one
    return NcsfSeries(ring, comps)


def sigma1(ring: Ring, order: int) -> NcsfSeries:
    """The sum 1 + S_1 + S_2 + ... truncated at ``order``."""
    comps = [{(): ring.one}]
    for n in range(1, order + 1):
        comps.append({(n,): ring.one})
    return NcsfSeries(ring, comps)


def _conv_into(target: dict, a: dict, b: dict, zero):
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = wa + wb
            new = target.get(w, zero) + ca * cb
            if new:
                target[w] = new
            else:
                target.pop(w, None)


def series_mul(u: NcsfSeries, v: NcsfSeries) -> NcsfSeries:
    """Graded Cauchy product; words concatenate, order is preserved."""
    u._check_compatible(v)
    if u.basis != "S":
        raise ValueError("products are computed in the S basis")
    order = min(u.order, v.order)
    zero = u.ring.zero
    out = [dict() for _ in range(order + 1)]
    for da in range(order + 1):
        ca = u.components[da]
        if not ca:
            continue
        for db in range(order + 1 - da):
            cb = v.components[db]
            if not cb:
                continue
            _conv_into(out[da + db], ca, cb, zero)
    return NcsfSeries(u.ring, out)


def series_inverse(u: NcsfSeries) -> NcsfSeries:
    """Two-sided inverse of a series with constant term 1."""
    if u.basis != "S":
        raise ValueError("inversion is computed in the S basis")
    if u.components[0] != {(): u.ring.one}:
        raise ValueError("series inverse requires constant term 1")
    zero = u.ring.zero
    inv = [{(): u.ring.one}]
    for n in range(1, u.order + 1):
        comp: dict = {}
        # v_n = -sum_{i=1..n} u_i v_{n-i}
        for i in range(1, n + 1):
            if not u.components[i]:
                continue
            _conv_into(comp, u.components[i], inv[n - i], zero)
        inv.append({w: -c for w, c in comp.items()})
    return NcsfSeries(u.ring, inv)


def series_power(u: NcsfSeries, k: int) -> NcsfSeries:
    if k == 0:
        return unit_series(u.ring, u.order)
    base = u if k > 0 else series_inverse(u)
    out = base
    for _ in range(abs(k) - 1):
        out = series_mul(out, base)
    return out


def series_power_binomial(u: NcsfSeries, p: PolyT) -> NcsfSeries:
    """Binomial power u^p = sum_j C(p, j) (u-1)^j for a polynomial exponent.

    Requires constant term 1; the sum is finite per degree because (u-1)^j
    has valuation at least j.  At a nonnegative integer constant p this
    agrees with series_power.
    """
    if u.components[0] != {(): u.ring.one}:
        raise ValueError("binomial power requires constant term 1")
    w = u - unit_series(u.ring, u.order)
    out = unit_series(u.ring, u.order)
    binom = POLYT_ONE
    wj = unit_series(u.ring, u.order)
    for j in range(1, u.order + 1):
        binom = (binom * (p - (j - 1))).scale_div(j)
        wj = series_mul(wj, w)
        out = out + wj.scale(binom)
    return out


# ---------------------------------------------------------------------------
# annihilation operators

def annihilate(u: NcsfSeries, n: int) -> NcsfSeries:
    """Right annihilation by S_n^{-1}; the grading drops by n.

    In the S and R bases a word ending in the part n loses that part and any
    other word dies.  In the L basis, defined for n = 1 only, the last part
    decrements and is dropped when it reaches zero.
    """
    if n < 1:
        raise ValueError("annihilation index must be positive")
    if u.basis == "L" and n != 1:
        raise ValueError("L-basis annihilation is only defined for n = 1")
    order = u.order - n
    if order < 0:
        raise TruncationError("series too short for this annihilation")
    out = [dict() for _ in range(order + 1)]
    zero = u.ring.zero
    for d in range(n, u.order + 1):
        target = out[d - n]
        for word, c in u.components[d].items():
            if not word:
                continue
            if u.basis in ("S", "R"):
                if word[-1] != n:
                    continue
                new = word[:-1]
            else:
                last = word[-1] - 1
                new = word[:-1] if last == 0 else word[:-1] + (last,)
            acc = target.get(new, zero) + c
            if acc:
                target[new] = acc
            else:
                target.pop(new, None)
    return NcsfSeries(u.ring, out, u.basis)


# ---------------------------------------------------------------------------
# basis conversions

@lru_cache(maxsize=None)
def _elementary_expansion(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    # S_n in the L basis and L_n in the S basis share the coefficients
    # (-1)^(n - len J) over compositions J of n
    return tuple((J, (-1) ** (n - len(J))) for J in compositions(n))


def _expand_multiplicative(comp: dict, expansion, zero) -> dict:
    """Replace every letter of every word by its expansion and multiply out."""
    out = {}
    for word, coeff in comp.items():
        partial = {(): coeff}
        for part in word:
            nxt: dict = {}
            for w, c in partial.items():
                for suffix, sign in expansion(part):
                    key = w + suffix
                    new = nxt.get(key, zero) + (c * sign if sign != 1 else c)
                    if new:
                        nxt[key] = new
                    else:
                        nxt.pop(key, None)
            partial = nxt
        for w, c in partial.items():
            new = out.get(w, zero) + c
            if new:
                out[w] = new
            else:
                out.pop(w, None)
    return out


def convert_basis(u: NcsfSeries, target: str) -> NcsfSeries:
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if target == u.basis:
        return u
    zero = u.ring.zero

    def termwise(convert_word):
        out = []
        for comp in u.components:
            acc: dict = {}
            for word, coeff in comp.items():
                for w, sign in convert_word(word):
                    new = acc.get(w, zero) + (coeff * sign if sign != 1 else coeff)
                    if new:
                        acc[w] = new
                    else:
                        acc.pop(w, None)
            out.append(acc)
        return out

    if u.basis == "S" and target == "R":
        comps = termwise(lambda I: [(J, 1) for J in coarsenings(I)])
    elif u.basis == "R" and target == "S":
        comps = termwise(lambda I: [(J, (-1) ** (len(I) - len(J)))
                                    for J in coarsenings(I)])
    elif u.basis == "S" and target == "L" or u.basis == "L" and target == "S":
        comps = [_expand_multiplicative(c, _elementary_expansion, zero)
                 for c in u.components]
    else:
        # route through S
        return convert_basis(convert_basis(u, "S"), target)
    return NcsfSeries(u.ring, comps, target)


# ---------------------------------------------------------------------------
# algebra morphisms

@lru_cache(maxsize=None)
def _negation_expansion(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    # S_n -> (-1)^n L_n re-expressed in the S basis
    return tuple((J, (-1) ** len(J)) for J in compositions(n))


def negate_alphabet(u: NcsfSeries) -> NcsfSeries:
    """The morphism sending S_n to (-1)^n times the elementary generator."""
    if u.basis != "S":
        raise ValueError("alphabet negation acts on the S basis")
    comps = [_expand_multiplicative(c, _negation_expansion, u.ring.zero)
             for c in u.components]
    return NcsfSeries(u.ring, comps)


def phi_k(u: NcsfSeries, k: int) -> NcsfSeries:
    """The morphism S_n -> S_{n/k} when k divides n, 0 otherwise."""
    if u.basis != "S":
        raise ValueError("phi_k acts on the S basis")
    if k < 1:
        raise ValueError("k must be positive")
    order = u.order // k
    out = [dict() for _ in range(order + 1)]
    zero = u.ring.zero
    for d in range(0, order * k + 1, k):
        target = out[d // k]
        for word, c in u.components[d].items():
            if any(p % k for p in word):
                continue
            new = tuple(p // k for p in word)
            acc = target.get(new, zero) + c
            if acc:
                target[new] = acc
            else:
                target.pop(new, None)
    return NcsfSeries(u.ring, out)


def lagrange_transform(g: NcsfSeries, u: NcsfSeries) -> NcsfSeries:
    """The morphism S_n -> g_n applied to ``u`` (degrees are preserved).

    ``g`` must be exact at least through the order of ``u``.
    """
    if u.basis != "S" or g.basis != "S":
        raise ValueError("the transform acts on the S basis")
    if g.order < u.order:
        raise TruncationError("transform series shorter than the argument")
    zero = u.ring.zero
    out = [dict() for _ in range(u.order + 1)]
    for d, comp in enumerate(u.components):
        target = out[d]
        for word, coeff in comp.items():
            partial = {(): coeff}
            for part in word:
                nxt: dict = {}
                img = g.components[part]
                for w, c in partial.items():
                    for suffix, gc in img.items():
                        key = w + suffix
                        new = nxt.get(key, zero) + c * gc
                        if new:
                            nxt[key] = new
                        else:
                            nxt.pop(key, None)
                partial = nxt
            for w, c in partial.items():
                new = target.get(w, zero) + c
                if new:
                    target[w] = new
                else:
                    target.pop(w, None)
    return NcsfSeries(u.ring, out)


# ---------------------------------------------------------------------------
# exact right division

def right_divide(v: NcsfSeries, u: NcsfSeries) -> NcsfSeries:
    """Solve theta * u = v exactly, for u with zero constant term and
    lowest term c*S_1 with invertible c.

    The degree-n equation theta_{n-1} u_1 = v_n - sum_{m>=2} theta_{n-m} u_m
    determines theta triangularly; dividing by u_1 = c S_1 strips a final
    part 1 from every residual word.  A residual word not ending in 1 means
    v is not right-divisible by u and NotDivisibleError is raised.
    """
    v._check_compatible(u)
    if v.basis != "S":
        raise ValueError("right division is computed in the S basis")
    if v.components[0] or u.components[0]:
        raise ValueError("right division requires zero constant terms")
    if min(v.order, u.order) < 1:
        raise TruncationError("right division needs at least degree 1")
    ring = v.ring
    if list(u.components[1].keys()) != [(1,)]:
        raise ValueError("divisor must start with a multiple of S_1")
    c1 = u.components[1][(1,)]
    order = min(v.order, u.order)
    zero = ring.zero
    theta = [dict() for _ in range(order)]
    for n in range(1, order + 1):
        residual = dict(v.components[n])
        for m in range(2, n + 1):
            um = u.components[m]
            if not um:
                continue
            for wt, ct in theta[n - m].items():
                for wu, cu in um.items():
                    w = wt + wu
                    new = residual.get(w, zero) - ct * cu
                    if new:
                        residual[w] = new
                    else:
                        residual.pop(w, None)
        comp = {}
        for word, coeff in residual.items():
            if not word or word[-1] != 1:
                raise NotDivisibleError(
                    f"residual term {word} at degree {n} does not end in 1")
            if c1 != ring.one:
                coeff = ring.exact_div(coeff, c1)
            comp[word[:-1]] = coeff
        theta[n - 1] = comp
    return NcsfSeries(ring, theta)
