"""Python front end for the anosov exact-arithmetic library.

Algebras are given as catalog expressions ("h_k(2)", "n_k(3)+Q(2)") or as
algebra documents (dicts in the anosov-lab/1 schema).
"""

import json

from . import _core
from ._core import InputError, SCHEMA

__all__ = [
    "InputError",
    "SCHEMA",
    "catalog",
    "type_of",
    "pfaffian",
    "verify",
    "dual",
    "region",
    "pell",
    "gate",
    "construct",
    "report",
]


def _src(algebra):
    if isinstance(algebra, dict):
        return json.dumps(algebra)
    return str(algebra)


def catalog(algebra):
    return json.loads(_core.catalog(_src(algebra)))


def type_of(algebra):
    return tuple(_core.type_of(_src(algebra)))


def pfaffian(algebra):
    """Pfaffian form of the algebra with its abelian factor removed, as text."""
    return _core.pfaffian(_src(algebra))


def verify(algebra, matrix):
    """Certificate for a square matrix given as nested lists (ints or rational strings)."""
    return json.loads(_core.verify(_src(algebra), json.dumps(matrix)))


def dual(algebra):
    return json.loads(_core.dual(_src(algebra)))


def region(algebra, bound=10000):
    return json.loads(_core.region(_src(algebra), bound))


def pell(k):
    a, b = _core.pell(k)
    return int(a), int(b)


def gate(type_tuple):
    return json.loads(_core.gate(list(type_tuple)))


def construct(family, k=2, n=2):
    return json.loads(_core.construct(family, k, n))


def report():
    return json.loads(_core.report())
