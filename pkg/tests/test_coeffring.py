import math
from fractions import Fraction
from itertools import product

import pytest

from ncgeode.coeffring import (EPoly, PolyT, binomial_polynomial,
                               elementary_of_multiple, epoly_evaluate,
                               partitions_of, INT_RING, POLYT_RING, EPOLY_RING)


def test_rational_field_arithmetic():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_polyt_unit_law():
    p = PolyT([0, -1, 2])
    assert p * PolyT([1]) == p
    assert PolyT([1]) * p == p


def test_polyt_basic_ops():
    t = PolyT.t()
    assert (t + 1) * (t - 1) == PolyT([-1, 0, 1])
    assert t - t == PolyT()
    assert not (t - t)
    assert (2 * t).evaluate(3) == 6
    assert PolyT([1, 2, 1]).evaluate(Fraction(1, 2)) == Fraction(9, 4)


def test_polyt_normalization():
    assert PolyT([1, 0, 0]).coeffs == (Fraction(1),)
    assert PolyT([0, 0]).coeffs == ()
    assert PolyT([Fraction(1, 2)]).scale_div(Fraction(1, 2)) == PolyT([1])


def test_polyt_compose_shift():
    p = PolyT([0, -1, 3])  # 3t^2 - t
    shifted = p.compose(PolyT([-1, 1]))
    assert shifted.evaluate(5) == p.evaluate(4)
    assert shifted == PolyT([4, -7, 3])


def test_binomial_polynomial_examples():
    assert binomial_polynomial(2, 2) == PolyT([0, -1, 2])   # 2t^2 - t
    assert binomial_polynomial(1, 0) == PolyT([1])
    assert binomial_polynomial(2, 1) == PolyT([0, 2])


def test_binomial_polynomial_matches_integer_binomials():
    for m, a, k in product(range(4), range(6), range(6)):
        assert binomial_polynomial(m, a).evaluate(k) == math.comb(m * k, a)


def test_epoly_monomial_product():
    e1 = EPoly.e(1)
    assert e1 * e1 == EPoly({(1, 1): 1})
    assert EPoly.e(2) * e1 == EPoly({(2, 1): 1})
    assert (e1 + 2) * (e1 - 2) == EPoly({(1, 1): 1, (): -4})


def test_epoly_normalization():
    assert EPoly({(1, 2): 1}) == EPoly({(2, 1): 1})
    assert EPoly({(1,): 0}) == EPoly()
    assert EPoly({(): 1}) == 1
    with pytest.raises(ValueError):
        EPoly({(0,): 1})


def _brute_elementary(k, j):
    # direct sum over weak compositions of k into j parts
    def weak(total, parts):
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(total + 1):
            for rest in weak(total - first, parts - 1):
                yield (first,) + rest

    acc = EPoly()
    for comp in weak(k, j):
        mono = EPoly.one()
        for i in comp:
            mono = mono * EPoly.e(i)
        acc = acc + mono
    return acc


def test_elementary_of_multiple_examples():
    assert elementary_of_multiple(1, 2) == EPoly({(1,): 2})
    assert elementary_of_multiple(2, 1) == EPoly.e(2)
    assert elementary_of_multiple(2, 2) == EPoly({(2,): 2, (1, 1): 1})
    assert elementary_of_multiple(0, 3) == EPoly.one()
    assert elementary_of_multiple(2, 0) == EPoly()


def test_elementary_of_multiple_against_enumeration():
    for k in range(0, 6):
        for j in range(0, 5):
            assert elementary_of_multiple(k, j) == _brute_elementary(k, j)


def test_alphabet_additivity():
    for k in range(0, 7):
        for j1 in range(0, 5):
            for j2 in range(0, 5):
                lhs = elementary_of_multiple(k, j1 + j2)
                rhs = EPoly()
                for k1 in range(k + 1):
                    rhs = rhs + elementary_of_multiple(k1, j1) * \
                        elementary_of_multiple(k - k1, j2)
                assert lhs == rhs, (k, j1, j2)


def test_epoly_evaluate_rules():
    p = EPoly.e(2) + EPoly.e(1) * EPoly.e(1)
    assert epoly_evaluate(p, "sign") == 2
    assert epoly_evaluate(p, "one") == 2
    assert epoly_evaluate(EPoly({(1, 1): 1}), "q") == PolyT([0, 0, 1])
    assert epoly_evaluate(p, "e1") == 1
    with pytest.raises(ValueError):
        epoly_evaluate(p, "bogus")


def test_epoly_evaluate_is_multiplicative():
    import random
    rng = random.Random(7)
    parts_pool = [(), (1,), (2,), (1, 1), (3,), (2, 1)]
    for _ in range(30):
        a = EPoly({rng.choice(parts_pool): rng.randint(-3, 3) for _ in range(3)})
        b = EPoly({rng.choice(parts_pool): rng.randint(-3, 3) for _ in range(3)})
        for rule in ("sign", "one"):
            assert epoly_evaluate(a * b, rule) == \
                epoly_evaluate(a, rule) * epoly_evaluate(b, rule)
        assert epoly_evaluate(a * b, "q") == \
            epoly_evaluate(a, "q") * epoly_evaluate(b, "q")


def test_partitions_of():
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions_of(0)) == [()]
    assert list(partitions_of(4, max_len=2)) == [(4,), (3, 1), (2, 2)]


def test_ring_exact_division():
    assert INT_RING.exact_div(6, -3) == -2
    with pytest.raises(ValueError):
        INT_RING.exact_div(5, 2)
    assert POLYT_RING.exact_div(PolyT([0, 2]), PolyT([2])) == PolyT.t()
    with pytest.raises(ZeroDivisionError):
        POLYT_RING.exact_div(PolyT([1]), PolyT())
    assert EPOLY_RING.exact_div(EPoly({(1,): 4}), EPoly({(): 2})) == EPoly({(1,): 2})


def test_json_round_trips():
    assert INT_RING.from_json(INT_RING.to_json(-12)) == -12
    p = PolyT([0, Fraction(-1, 2), Fraction(3, 2)])
    assert POLYT_RING.from_json(POLYT_RING.to_json(p)) == p
    q = EPoly({(2, 1): 3, (): -1})
    assert EPOLY_RING.from_json(EPOLY_RING.to_json(q)) == q
