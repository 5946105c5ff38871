"""Compositions, plane-tree codes and the bijections between Catalan families.

Plane rooted trees are handled purely through their Polish codes: the word of
node arities in prefix order.  A tree with n edges has a code of length n+1,
letter sum n, and every proper prefix sum of length j is at least j (the
Lukasiewicz condition).  All tree operations here are word rewrites.
"""

from __future__ import annotations

import math
from typing import Iterator, Optional


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------------------
# compositions

def compositions(n: int) -> list[tuple[int, ...]]:
    """All compositions of n, ordered by their descent-set binary encoding.

    The descent set {i_1, i_1+i_2, ...} of a composition is read as a binary
    number with position 1 most significant, so (n) comes first and
    (1,1,...,1) last.  There are 2^(n-1) compositions for n >= 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    out = []
    for mask in range(1 << (n - 1)):
        comp = []
        last = 0
        for i in range(1, n):
            if mask & (1 << (n - 1 - i)):
                comp.append(i - last)
                last = i
        comp.append(n - last)
        out.append(tuple(comp))
    return out


def descent_mask(comp: tuple[int, ...]) -> int:
    """Binary encoding of the descent set, matching compositions() order."""
    n = sum(comp)
    mask = 0
    s = 0
    for p in comp[:-1]:
        s += p
        mask |= 1 << (n - 1 - s)
    return mask


def composition_sort_key(comp: tuple[int, ...]) -> tuple[int, int]:
    return (sum(comp), descent_mask(comp))


def coarsenings(comp: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All compositions obtained by summing adjacent blocks of ``comp``.

    There are 2^(len(comp)-1) of them, ``comp`` itself included.
    """
    if not comp:
        return [()]
    out = []
    r = len(comp)
    for mask in range(1 << (r - 1)):
        merged = [comp[0]]
        for i in range(1, r):
            if mask & (1 << (i - 1)):
                merged[-1] += comp[i]
            else:
                merged.append(comp[i])
        out.append(tuple(merged))
    return out


def conjugate(comp: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugate composition: complement the descent set, then reverse."""
    n = sum(comp)
    if n == 0:
        return ()
    descents = set()
    s = 0
    for p in comp[:-1]:
        s += p
        descents.add(s)
    result = []
    last = 0
    for i in range(1, n):
        if i not in descents:
            result.append(i - last)
            last = i
    result.append(n - last)
    return tuple(reversed(result))


# ---------------------------------------------------------------------------
# Lukasiewicz words / plane tree codes

def is_lukasiewicz(word: tuple[int, ...]) -> bool:
    """Check the code of a plane tree: sum n, length n+1, prefix dominance."""
    if not word:
        return False
    n = len(word) - 1
    if sum(word) != n or any(x < 0 for x in word):
        return False
    s = 0
    for j in range(n):
        s += word[j]
        if s < j + 1:
            return False
    return True


def iter_lukasiewicz(n: int) -> Iterator[tuple[int, ...]]:
    """Yield all plane tree codes of size n in decreasing lexicographic order."""
    length = n + 1

    def rec(prefix, ssum):
        pos = len(prefix)
        if pos == length:
            yield tuple(prefix)
            return
        rem = n - ssum
        for letter in range(rem, -1, -1):
            # prefix-dominance must hold for every proper prefix
            if pos < length - 1 and ssum + letter < pos + 1:
                continue
            prefix.append(letter)
            yield from rec(prefix, ssum + letter)
            prefix.pop()

    yield from rec([], 0)


def enumerate_lukasiewicz(n: int) -> list[tuple[int, ...]]:
    return list(iter_lukasiewicz(n))


def plane_tree_codes_with_nodes(p: int) -> list[tuple[int, ...]]:
    """Codes of plane trees with p nodes (length p, letter sum p-1)."""
    if p < 1:
        raise ValueError("a tree has at least one node")
    return enumerate_lukasiewicz(p - 1)


def nonzero_letters(word: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x for x in word if x)


def trailing_zeros(word: tuple[int, ...]) -> int:
    z = 0
    for x in reversed(word):
        if x:
            break
        z += 1
    return z


def code_to_dyck(code: tuple[int, ...]) -> str:
    """Letter i becomes a^i b; a valid code maps to a Dyck word plus one b."""
    return "".join("a" * x + "b" for x in code)


def code_to_ndpf(code: tuple[int, ...]) -> tuple[int, ...]:
    """Nondecreasing parking word 1^{i_1} 2^{i_2} ... encoded by the code."""
    out = []
    for pos, mult in enumerate(code, start=1):
        out.extend([pos] * mult)
    return tuple(out)


def ndpf_to_code(word: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Inverse of code_to_ndpf for words of length n (code length n+1)."""
    code = [0] * (n + 1)
    for letter in word:
        code[letter - 1] += 1
    return tuple(code)


def is_ndpf(word: tuple[int, ...]) -> bool:
    return all(word[i] <= i + 1 for i in range(len(word))) and \
        all(word[i] <= word[i + 1] for i in range(len(word) - 1)) and \
        all(x >= 1 for x in word)


def ndpf_to_noncrossing(word: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Decode a nondecreasing parking word as a noncrossing set partition.

    The block containing m has size equal to the multiplicity of m in the
    word, and m is its minimal element.  Blocks are filled from the largest
    minimum down, each taking the smallest still-free elements above its
    minimum, which yields the unique noncrossing arrangement.
    """
    if not is_ndpf(word):
        raise ValueError(f"not a nondecreasing parking word: {word}")
    n = len(word)
    mult = {}
    for x in word:
        mult[x] = mult.get(x, 0) + 1
    free = set(range(1, n + 1))
    blocks = []
    for m in sorted(mult, reverse=True):
        if m not in free:
            raise ValueError(f"letter {m} cannot start a block in {word}")
        block = [m]
        free.discard(m)
        for _ in range(mult[m] - 1):
            nxt = min(x for x in free if x > m)
            block.append(nxt)
            free.discard(nxt)
        blocks.append(tuple(block))
    blocks.sort(key=lambda b: b[0])
    return tuple(blocks)


def noncrossing_to_ndpf(blocks) -> tuple[int, ...]:
    out = []
    for block in blocks:
        out.extend([min(block)] * len(block))
    return tuple(sorted(out))


def remove_last_corolla(code: tuple[int, ...], k: int) -> Optional[tuple[int, ...]]:
    """Replace the prefix-last corolla of arity k by a leaf.

    If the last nonzero letter of the code is not k the map is undefined and
    None is returned.  Otherwise that letter heads a corolla whose k children
    are the following k letters (all zero); the factor k 0^k collapses to a
    single 0.
    """
    if k < 1:
        raise ValueError("corolla size must be positive")
    pos = None
    for i in range(len(code) - 1, -1, -1):
        if code[i]:
            pos = i
            break
    if pos is None or code[pos] != k:
        return None
    return code[:pos] + (0,) + code[pos + k + 1:]


def shift_words(code: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Nondecreasing words on [n] whose evaluation is a right shift of the code.

    A code of size n with z trailing zeros yields z words: shifting the first
    n letters right by s (0 <= s < z) gives the multiplicity vector of a
    nondecreasing word on the alphabet {1, ..., n}.
    """
    n = len(code) - 1
    z = trailing_zeros(code)
    out = []
    for s in range(z):
        vec = (0,) * s + code[: n - s]
        word = []
        for letter, mult in enumerate(vec, start=1):
            word.extend([letter] * mult)
        out.append(tuple(word))
    return out


# ---------------------------------------------------------------------------
# parking quasi-ribbons

def parking_quasi_ribbons(shape: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    """All parking quasi-ribbon fillings of the given segment shape.

    A filling is a sequence of segments of the prescribed sizes, weakly
    increasing within each segment, with a strict increase from the last
    letter of a segment to the first letter of the next, and whose sorted
    content w satisfies the parking condition w_i <= i.  Fillings are
    produced in lexicographic order of their concatenated word.
    """
    if not shape or any(s < 1 for s in shape):
        raise ValueError("shape must be a nonempty composition")
    n = sum(shape)
    results = []

    def flatten(segs):
        return tuple(x for seg in segs for x in seg)

    def fill(seg_idx, prev_last, segs):
        if seg_idx == len(shape):
            w = sorted(flatten(segs))
            if all(w[i] <= i + 1 for i in range(n)):
                results.append(segs)
            return
        size = shape[seg_idx]

        def build(pos, prev, seg):
            if pos == size:
                fill(seg_idx + 1, seg[-1], segs + (seg,))
                return
            lo = prev if pos else prev_last + 1
            for v in range(lo, n + 1):
                build(pos + 1, v, seg + (v,))

        build(0, 0, ())

    fill(0, 0, ())
    return results


# ---------------------------------------------------------------------------
# plane tree structure helpers

def lukasiewicz_root_children(code: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Split a plane tree code into the codes of the root's child subtrees."""
    if not is_lukasiewicz(code):
        raise ValueError(f"not a plane tree code: {code}")
    arity = code[0]
    children = []
    pos = 1
    for _ in range(arity):
        need = 1
        start = pos
        while need:
            need += code[pos] - 1
            pos += 1
        children.append(code[start:pos])
    return children
