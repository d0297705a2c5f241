"""Tests for Dyck paths, Area, the inversion split, and word shapes."""

import pytest
from hypothesis import given, strategies as st

from dellac.grid import Config, Params, enumerate_configs, inversions
from dellac.bijection import phi, phi1
from dellac.dyck import (
    DyckError,
    RiseBoundViolation,
    WrongParams,
    area,
    big14_path,
    check_inv_decomposition,
    dyck_from_rises,
    phi_ref,
    rises_from_dyck,
    split_phi,
    upper_set,
    upper_set_and_coincidence,
    validate_phi_shape,
)

# Worked (2,2,3) example: config, its position word halves, inv = 11.
EXAMPLE_223 = Config(Params(2, 2, 3), (
    (1, 2), (1, 3), (4, 5), (2, 5), (4, 6), (3, 6)))


def all_rise_seqs(n):
    def rec(prefix, i):
        if i > n:
            yield tuple(prefix)
            return
        for x in range(prefix[-1] + 1 if prefix else 1, 2 * i):
            prefix.append(x)
            yield from rec(prefix, i + 1)
            prefix.pop()
    yield from rec([], 1)


@st.composite
def rise_seqs(draw):
    n = draw(st.integers(min_value=1, max_value=10))
    xi = []
    prev = 0
    for i in range(1, n + 1):
        x = draw(st.integers(min_value=prev + 1, max_value=2 * i - 1))
        xi.append(x)
        prev = x
    return tuple(xi)


def test_dyck_from_rises_basic():
    assert dyck_from_rises((1, 2, 3)) == "UUUDDD"
    assert dyck_from_rises((1, 3, 5)) == "UDUDUD"
    assert dyck_from_rises((1, 2, 3, 4, 5, 6, 9, 13)) == "UUUUUUDDUDDDUDDD"


def test_rise_bounds():
    with pytest.raises(RiseBoundViolation):
        dyck_from_rises((2,))
    with pytest.raises(RiseBoundViolation):
        dyck_from_rises((1, 4))
    with pytest.raises(RiseBoundViolation):
        dyck_from_rises((1, 1))
    with pytest.raises(DyckError):
        rises_from_dyck("UDD")
    with pytest.raises(DyckError):
        rises_from_dyck("DU")


def test_rises_round_trip():
    for n in range(1, 6):
        for xi in all_rise_seqs(n):
            assert rises_from_dyck(dyck_from_rises(xi)) == xi


def test_area_examples():
    assert area((1, 2, 3, 4)) == 0
    assert area((1, 2, 3, 4, 5, 6, 9, 13)) == 7


@given(rise_seqs())
def test_area_matches_geometric_count(xi):
    path = dyck_from_rises(xi)
    boxes = sum(1 for i in range(len(path)) for j in range(i + 1, len(path))
                if path[i] == "D" and path[j] == "U")
    assert area(xi) == boxes


def test_split_phi_worked_example():
    assert phi1(EXAMPLE_223) == (2, 2, 4, 6, 4, 8, 1, 3, 6, 3, 1, 5, 8, 5, 7, 7)
    phi_e, phi_o, phi_e_sorted = split_phi(phi(EXAMPLE_223), 2)
    assert phi_e == (1, 2, 3, 5, 4, 9, 6, 13)
    assert phi_o == (7, 11, 8, 10, 12, 14, 15, 16)
    assert phi_e_sorted == (1, 2, 3, 4, 5, 6, 9, 13)
    assert area(phi_e_sorted) == 7
    assert inversions(EXAMPLE_223) == 11
    assert check_inv_decomposition(EXAMPLE_223)


def test_split_phi_small():
    phi_e, phi_o, _ = split_phi((1, 2, 3, 4), 1)
    assert phi_e == (2, 4)
    assert phi_o == (1, 3)
    e, o, _ = split_phi(tuple(range(1, 17)), 2)
    assert sorted(e + o) == list(range(1, 17))


@pytest.mark.parametrize("lmn", [
    (1, 2, 1), (1, 2, 2), (1, 2, 3), (1, 2, 4), (2, 2, 2), (1, 3, 2), (2, 2, 3)])
def test_inv_decomposition_exhaustive(lmn):
    p = Params(*lmn)
    for c in enumerate_configs(p):
        assert check_inv_decomposition(c)


def test_phi_ref():
    assert phi_ref(2, 2, 16) == (1, 2, 3, 5, 7, 9, 11, 13)
    assert phi_ref(1, 2, 6) == (1, 2, 4)


@pytest.mark.parametrize("lmn", [
    (1, 2, 2), (1, 2, 3), (2, 2, 1), (2, 2, 2), (1, 3, 1),
    (1, 3, 2), (2, 3, 2), (2, 2, 3)])
def test_phi_shape_accepts_images(lmn):
    p = Params(*lmn)
    for c in enumerate_configs(p):
        assert validate_phi_shape(phi(c), p) == []


def test_phi_shape_reports_broken_prefix():
    p = Params(1, 2, 2)
    c = next(iter(enumerate_configs(p)))
    w = list(phi(c))
    # swap the entries at positions 2 and 4 (both land in phi^e)
    w[1], w[3] = w[3], w[1]
    assert 1 in validate_phi_shape(tuple(w), p)


def test_big14_smallest():
    c = Config(Params(1, 2, 1), ((1, 2),))
    assert big14_path(c) == "UD"
    assert upper_set(c) == {2, 4}
    assert upper_set_and_coincidence(c)


def test_big14_lowest_highest():
    p = Params(1, 2, 2)
    assert big14_path(Config(p, ((1, 2), (3, 4)))) == "UUDD"
    assert big14_path(Config(p, ((1, 3), (2, 4)))) == "UDUD"


@pytest.mark.parametrize("n", [2, 3, 4])
def test_big14_is_dyck_and_coincides(n):
    p = Params(1, 2, n)
    for c in enumerate_configs(p):
        path = big14_path(c)
        assert len(path) == 2 * n
        rises_from_dyck(path)  # validates the prefix property
        u = upper_set(c)
        assert len(u) == n + 1 and 2 in u
        assert upper_set_and_coincidence(c)


def test_big14_wrong_params():
    c = Config(Params(2, 2, 1), ((1, 2), (1, 2)))
    with pytest.raises(WrongParams):
        big14_path(c)
    with pytest.raises(WrongParams):
        upper_set_and_coincidence(c)
