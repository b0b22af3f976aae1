from __future__ import annotations

import pytest
from hypothesis import settings

from matchmerge import Record, builtin, materialize, record_groupoid

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@pytest.fixture
def p1():
    return builtin("p1")


@pytest.fixture
def q2():
    return builtin("q2")


@pytest.fixture
def max10():
    return builtin("maxnat", 10)


@pytest.fixture
def chain12():
    return builtin("chain", 12)


@pytest.fixture
def uchain12():
    return builtin("uchain", 12)


@pytest.fixture
def twoblock():
    return builtin("twoblock")


@pytest.fixture
def leftzero2():
    return builtin("leftzero2")


@pytest.fixture
def unit():
    return builtin("unit")


def finite_fixture_suite() -> dict:
    """Every built-in finite fixture the cross-cutting audits iterate over."""
    return {
        "p1": builtin("p1"),
        "q2": builtin("q2"),
        "max10": builtin("maxnat", 10),
        "chain12": builtin("chain", 12),
        "uchain12": builtin("uchain", 12),
        "twoblock": builtin("twoblock"),
        "leftzero2": builtin("leftzero2"),
        "unit": builtin("unit"),
    }


def cluster_records() -> list[Record]:
    """Three records sharing one name value: all pairs match."""
    return [
        Record.of(name={"ann"}, phone={"p1"}),
        Record.of(name={"ann"}, mail={"m1"}),
        Record.of(name={"ann"}, home={"h1"}),
    ]


def chaining_records() -> list[Record]:
    """Three records where the outer two only match through the middle one."""
    return [
        Record.of(name={"ann"}, phone={"p1"}),
        Record.of(name={"ann", "bob"}, mail={"m1"}),
        Record.of(name={"bob"}, home={"h1"}),
    ]


def two_cluster_records() -> list[Record]:
    return [
        Record.of(name={"ann"}, phone={"p1"}),
        Record.of(name={"ann"}, mail={"m1"}),
        Record.of(name={"bob"}, phone={"p2"}),
        Record.of(name={"bob"}, home={"h2"}),
    ]


def materialized_records(records) -> "FiniteGroupoid":
    return materialize(record_groupoid(["name"]), records)


@pytest.fixture
def record_bb():
    return record_groupoid(["name"])
