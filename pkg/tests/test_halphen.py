from itertools import product

import pytest

from cremona.errors import PreconditionError
from cremona.halphen import (MAX_SEARCH_K, bertini_matrix, bertini_membership,
                             halphen_multiplicities, lambda_a, nu_b,
                             nu_b_closed_form, nu_b_power,
                             obstruction_candidates, type_of_image)
from cremona.lattice import HomaloidalType, IntegerMatrix, dual_type, is_proper


def test_bertini_involution():
    b = bertini_matrix()
    assert b @ b == IntegerMatrix.identity(10)
    assert b.preserves_form()
    assert b.conjugate_by_form().preserves_canonical_class()


def test_bertini_type():
    assert type_of_image(bertini_matrix()) == HomaloidalType.parse("17;6^8")


def test_bertini_membership():
    cert = bertini_membership()
    assert cert.ok


@pytest.mark.parametrize("a", range(-5, 6))
def test_power_closed_form(a):
    assert nu_b_power(a) == nu_b_closed_form(a)


def test_power_inverse():
    assert nu_b_power(-1) @ nu_b_power(1) == IntegerMatrix.identity(10)


def test_nu_b_form():
    assert nu_b().preserves_form()


@pytest.mark.parametrize("a", range(1, 6))
def test_lambda(a):
    t = lambda_a(a)
    assert t.degree == 36 * a * a + 1
    assert is_proper(t)
    assert dual_type(t) == t
    assert type_of_image(nu_b_power(a)) == t


def test_lambda_one():
    assert lambda_a(1) == HomaloidalType.parse("37;18,12^7,6")


def test_lambda_guard():
    with pytest.raises(PreconditionError):
        lambda_a(0)


def _brute_force(a, k):
    """All (eps, extras) without any symmetry reduction, as a set of types."""
    n = halphen_multiplicities(a)
    d = 36 * a * a + 1
    types = set()
    for eps in product(range(k + 1), repeat=9):
        s = sum(eps)
        if s > 3 * k:
            continue
        base = [ni + ei for ni, ei in zip(n, eps)]
        rest = 3 * k - s
        for r in range(0, rest + 1):
            for ext in product(range(1, k + 1), repeat=r):
                if sum(ext) != rest or list(ext) != sorted(ext, reverse=True):
                    continue
                mults = base + list(ext)
                if sum(m * m for m in mults) == (d + k) ** 2 - 1:
                    types.add(HomaloidalType(d + k, tuple(mults)))
    return types


@pytest.mark.parametrize("a,k", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_search_matches_brute_force(a, k):
    rep = obstruction_candidates(a, k)
    assert {s.type for s in rep.solutions} == _brute_force(a, k)


def test_reduced_identity():
    # 12a(e1 - e9) + sum e^2 = k^2 + 2k when there are no extra points
    for a, k in [(1, 1), (2, 2), (3, 3)]:
        for s in obstruction_candidates(a, k).solutions:
            if not s.extras:
                e = s.eps
                assert 12 * a * (e[0] - e[8]) + sum(x * x for x in e) == k * k + 2 * k


@pytest.mark.parametrize("a", [1, 2, 3])
def test_all_r9(a):
    for k in range(1, a + 1):
        rep = obstruction_candidates(a, k)
        assert rep.all_r9
        assert rep.verdict == "r9-only-geometric-exclusion"


def test_extras_appear_beyond_range():
    rep = obstruction_candidates(1, 2)
    assert not rep.all_r9
    assert rep.verdict == "unobstructed-candidates"


def test_counts():
    assert [len(obstruction_candidates(3, k).solutions) for k in (1, 2, 3)] == [2, 2, 5]


def test_json():
    js = obstruction_candidates(2, 1).to_json()
    assert js["verdict"] == "r9-only-geometric-exclusion"
    assert js["target_degree"] == 146
    assert js["solution_count"] == len(js["solutions"])


def test_guards():
    with pytest.raises(PreconditionError):
        obstruction_candidates(1, MAX_SEARCH_K + 1)
    with pytest.raises(PreconditionError):
        obstruction_candidates(0, 1)
