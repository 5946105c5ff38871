"""Schroeder trees and the e-Lagrange series.

A Schroeder tree of size n has n+1 leaves and internal nodes of arity at
least 2.  Its code reads the tree in prefix order, writing 0 for a leaf and
the label i for an internal node of arity i+1; the labels sum to n.

The e-Lagrange series attaches to each tree a monomial in the commuting
generators e_k: the partition recording the lengths of the maximal chains of
internal nodes linked by rightmost-child edges (the right branches).  It is
computed by three independent routes: a lifted two-series system with an
explicit degree-0 placeholder letter, direct enumeration of prime trees, and
a closed coefficient formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .coeffring import EPOLY_RING, EPoly, elementary_of_multiple
from .ncsf import NcsfSeries, annihilate
from .combinat import compositions, plane_tree_codes_with_nodes


def _arity(letter: int) -> int:
    return letter + 1 if letter else 0


def is_schroeder_code(word: tuple[int, ...]) -> bool:
    need = 1
    for letter in word:
        if need == 0:
            return False
        need += _arity(letter) - 1
    return need == 0


@lru_cache(maxsize=None)
def enumerate_schroeder(n: int) -> tuple[tuple[int, ...], ...]:
    """Codes of all Schroeder trees of size n, in decreasing lexicographic
    order; a leaf alone is the unique tree of size 0."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n == 0:
        return ((0,),)
    out = []
    for root in range(1, n + 1):
        arity = root + 1
        for split in _weak_compositions(n - root, arity):
            for kids in product(*(enumerate_schroeder(s) for s in split)):
                out.append((root,) + tuple(x for kid in kids for x in kid))
    out.sort(reverse=True)
    return tuple(out)


def _weak_compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_prime_schroeder(n: int) -> tuple[tuple[int, ...], ...]:
    """Schroeder trees whose root's rightmost subtree is a leaf."""
    if n < 1:
        raise ValueError("size must be at least 1")
    out = []
    for code in enumerate_schroeder(n):
        if root_children(code)[-1] == (0,):
            out.append(code)
    return tuple(out)


def root_children(code: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Split a Schroeder code into the codes of the root's child subtrees."""
    if not is_schroeder_code(code):
        raise ValueError(f"not a Schroeder tree code: {code}")
    children = []
    pos = 1
    for _ in range(_arity(code[0])):
        need = 1
        start = pos
        while need:
            need += _arity(code[pos]) - 1
            pos += 1
        children.append(code[start:pos])
    return children


def _parse(code: tuple[int, ...], pos: int = 0):
    label = code[pos]
    pos += 1
    kids = []
    for _ in range(_arity(label)):
        kid, pos = _parse(code, pos)
        kids.append(kid)
    return (label, kids), pos


def right_branch_partition(code: tuple[int, ...]) -> tuple[int, ...]:
    """Lengths of the maximal internal-node chains along rightmost edges.

    A chain starts at an internal node that is not the rightmost child of an
    internal node and follows rightmost children while they stay internal.
    Every internal node lies on exactly one chain, so the parts sum to the
    number of internal nodes.
    """
    if not is_schroeder_code(code):
        raise ValueError(f"not a Schroeder tree code: {code}")
    tree, _ = _parse(code)

    def chain_length(node):
        label, kids = node
        if not kids:
            return 0
        return 1 + chain_length(kids[-1])

    lengths = []

    def walk(node, starts_chain):
        label, kids = node
        if not kids:
            return
        if starts_chain:
            lengths.append(chain_length(node))
        for kid in kids[:-1]:
            walk(kid, True)
        walk(kids[-1], False)

    walk(tree, True)
    return tuple(sorted(lengths, reverse=True))


def tree_weight(code: tuple[int, ...]) -> EPoly:
    """The monomial e_{lambda(t)} attached to a whole Schroeder tree."""
    return EPoly({right_branch_partition(code): 1})


def prime_tree_weight(code: tuple[int, ...]) -> EPoly:
    """Product of the right-branch monomials of the root's child subtrees."""
    w = EPoly.one()
    for kid in root_children(code):
        if kid != (0,):
            w = w * tree_weight(kid)
    return w


# ---------------------------------------------------------------------------
# the lifted system
#
# The degree-0 placeholder letter (written 0 inside words) keeps track of the
# final leaf of every subtree, so the words below are full tree codes:
#
#   G = (1 + X) S0,   X = sum_{n>=1} S_n Y^n,   Y = S0 + sum_{n>=1} e_n X^n S0.


@dataclass(frozen=True)
class SystemState:
    order: int
    x: tuple[dict, ...]
    y: tuple[dict, ...]
    g: tuple[dict, ...]


def _word_conv_into(target: dict, a: dict, b: dict):
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = wa + wb
            new = target.get(w, EPoly()) + ca * cb
            if new:
                target[w] = new
            else:
                target.pop(w, None)


def _graded_power_component(comps, m, d, memo):
    if m == 0:
        return {(): EPoly.one()} if d == 0 else {}
    key = (m, d)
    cached = memo.get(key)
    if cached is not None:
        return cached
    acc: dict = {}
    for j in range(d + 1):
        right = comps[j] if j < len(comps) else {}
        if not right:
            continue
        left = _graded_power_component(comps, m - 1, d - j, memo)
        if left:
            _word_conv_into(acc, left, right)
    memo[key] = acc
    return acc


@lru_cache(maxsize=None)
def solve_xy_system(order: int) -> SystemState:
    """Solve the lifted system degree by degree.

    X_n needs Y below degree n and Y_n needs X up to degree n, so the two
    interleave; the degree of a word is the sum of its letters, placeholder
    letters counting 0.
    """
    one = EPoly.one()
    x: list[dict] = [{}]
    y: list[dict] = [{(0,): one}]
    for n in range(1, order + 1):
        y_memo: dict = {}
        xn: dict = {}
        for m in range(1, n + 1):
            tail = _graded_power_component(y, m, n - m, y_memo)
            for w, c in tail.items():
                key = (m,) + w
                new = xn.get(key, EPoly()) + c
                if new:
                    xn[key] = new
        x.append(xn)
        x_memo: dict = {}
        yn: dict = {}
        for m in range(1, n + 1):
            part = _graded_power_component(x, m, n, x_memo)
            if not part:
                continue
            em = EPoly.e(m)
            for w, c in part.items():
                key = w + (0,)
                new = yn.get(key, EPoly()) + em * c
                if new:
                    yn[key] = new
        y.append(yn)
    g = [{(0,): one}]
    for n in range(1, order + 1):
        g.append({w + (0,): c for w, c in x[n].items()})
    return SystemState(order, tuple(x), tuple(y), tuple(g))


def project_placeholder(graded) -> NcsfSeries:
    """Set the placeholder letter to 1: delete zeros and merge words."""
    comps = []
    for comp in graded:
        acc: dict = {}
        for word, coeff in comp.items():
            key = tuple(l for l in word if l)
            new = acc.get(key, EPoly()) + coeff
            if new:
                acc[key] = new
            else:
                acc.pop(key, None)
        comps.append(acc)
    return NcsfSeries(EPOLY_RING, comps)


# ---------------------------------------------------------------------------
# the e-Lagrange series, three ways

@lru_cache(maxsize=None)
def delta_e_coefficient(comp: tuple[int, ...]) -> EPoly:
    """Coefficient of S^I in the e-Lagrange series.

    Sums, over codes a of plane trees with len(I) nodes, the products
    e_{a_1}(i_1 A) ... e_{a_{p-1}}(i_{p-1} A) of elementary functions of
    multiplied alphabets.
    """
    if not comp:
        return EPoly.one()
    p = len(comp)
    total = EPoly()
    for code in plane_tree_codes_with_nodes(p):
        prod = EPoly.one()
        for j in range(p - 1):
            prod = prod * elementary_of_multiple(code[j], comp[j])
            if not prod:
                break
        total = total + prod
    return total


@lru_cache(maxsize=None)
def g_e(order: int, route: str = "delta") -> NcsfSeries:
    """The e-Lagrange series by any of its three constructions."""
    if route == "delta":
        comps: list[dict] = [{(): EPoly.one()}]
        for n in range(1, order + 1):
            comp = {}
            for I in compositions(n):
                c = delta_e_coefficient(I)
                if c:
                    comp[I] = c
            comps.append(comp)
        return NcsfSeries(EPOLY_RING, comps)
    if route == "system":
        return project_placeholder(solve_xy_system(order).g)
    if route == "trees":
        comps = [{(): EPoly.one()}]
        for n in range(1, order + 1):
            comp: dict = {}
            for code in enumerate_prime_schroeder(n):
                word = tuple(l for l in code if l)
                new = comp.get(word, EPoly()) + prime_tree_weight(code)
                if new:
                    comp[word] = new
            comps.append(comp)
        return NcsfSeries(EPOLY_RING, comps)
    raise ValueError(f"unknown route {route!r}")


def gamma_e(order: int, k: int = 1) -> NcsfSeries:
    """The e-geode g^[e] S_k^{-1}; independent of k >= 1."""
    if k < 1:
        raise ValueError("k must be positive")
    return annihilate(g_e(order + k), k)
