"""Shared structures: small named magmas and the poloid corpus."""

from __future__ import annotations

import pytest

from poloids import PartialMagma
from poloids.enumeration import all_magmas
from poloids.classify import classify


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    criterion = getattr(item.function, "criterion", None)
    if rep.when == "call" and criterion is not None:
        tw = item.config.pluginmanager.get_plugin("terminalreporter")
        if tw is not None:
            tw.write_line(
                "ACCEPTANCE %s: %s" % (criterion, "PASS" if rep.passed else "FAIL")
            )


def magma(names, rows):
    """Build a table from element names and rows of names/None."""
    names = tuple(names)
    index = {x: i for i, x in enumerate(names)}
    table = tuple(
        tuple(None if cell is None else index[cell] for cell in row) for row in rows
    )
    return PartialMagma(names, table)


def trivial_group():
    return magma("e", [["e"]])


def z2():
    return magma("eg", [["e", "g"], ["g", "e"]])


def z3():
    return magma("eab", [["e", "a", "b"], ["a", "b", "e"], ["b", "e", "a"]])


def z4():
    rows = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    return PartialMagma(("e", "a", "b", "c"), tuple(tuple(r) for r in rows))


def klein():
    # both factors of order two, componentwise
    combine = {
        (i, j): ((i[0] + j[0]) % 2, (i[1] + j[1]) % 2)
        for i in [(0, 0), (0, 1), (1, 0), (1, 1)]
        for j in [(0, 0), (0, 1), (1, 0), (1, 1)]
    }
    order = [(0, 0), (0, 1), (1, 0), (1, 1)]
    names = ("e", "x", "y", "xy")
    table = tuple(
        tuple(order.index(combine[(a, b)]) for b in order) for a in order
    )
    return PartialMagma(names, table)


def band_monoid():
    # total, single unit, idempotent non-unit: a monoid but not a group
    return magma("ea", [["e", "a"], ["a", "a"]])


def nil_monoid3():
    # commutative: a*a = z, z absorbing
    return magma("eaz", [["e", "a", "z"], ["a", "z", "z"], ["z", "z", "z"]])


def two_unit_groupoid():
    return magma(["e1", "e2"], [["e1", None], [None, "e2"]])


def three_unit_discrete():
    return magma(
        ["e1", "e2", "e3"],
        [["e1", None, None], [None, "e2", None], [None, None, "e3"]],
    )


def disjoint_z1_z2():
    # the one-element group next to a copy of the order-two group
    return magma(
        ["e1", "e2", "g"],
        [["e1", None, None], [None, "e2", "g"], [None, "g", "e2"]],
    )


def disjoint_z2_z2():
    return magma(
        ["e1", "g1", "e2", "g2"],
        [
            ["e1", "g1", None, None],
            ["g1", "e1", None, None],
            [None, None, "e2", "g2"],
            [None, None, "g2", "e2"],
        ],
    )


def pair_groupoid2():
    # arrows (i,j) on two objects, (i,j)(j,k) = (i,k)
    objs = (1, 2)
    arrows = [(i, j) for i in objs for j in objs]
    names = tuple(f"a{i}{j}" for i, j in arrows)
    table = tuple(
        tuple(
            arrows.index((i, l)) if j == k else None
            for (k, l) in arrows
        )
        for (i, j) in arrows
    )
    return PartialMagma(names, table)


def right_zero(n):
    # every product is the right operand; for n = 2 this is the
    # two-element table whose translations collapse
    names = tuple("xyz"[:n])
    table = tuple(tuple(range(n)) for _ in range(n))
    return PartialMagma(names, table)


HAND_POLOIDS_3_4 = (
    z3,
    z4,
    klein,
    nil_monoid3,
    three_unit_discrete,
    disjoint_z1_z2,
    disjoint_z2_z2,
    pair_groupoid2,
)


@pytest.fixture(scope="session")
def n2_poloids():
    return [m for m in all_magmas(2) if classify(m).verdicts["poloid"]]


@pytest.fixture(scope="session")
def poloid_corpus(n2_poloids):
    corpus = [trivial_group(), z2(), band_monoid(), two_unit_groupoid()]
    corpus += [build() for build in HAND_POLOIDS_3_4]
    corpus += n2_poloids
    for m in corpus:
        assert classify(m).verdicts["poloid"], m
    return corpus
