"""Exact commuting-matrix algebra.

Matrices are square nested lists whose entries are ints, ``Fraction``s or
strings such as ``"-2/3"``. Results come back as ints, ``Fraction``s,
lists and dicts. All arithmetic is exact.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    DEFAULT_SIZE_CAP,
    Error,
    NotCommuting,
    NotNilpotent,
    NotSplitOverRationals,
    ParseError,
    SizeCapExceeded,
)

__all__ = [
    "DEFAULT_SIZE_CAP",
    "Error",
    "NotCommuting",
    "NotNilpotent",
    "NotSplitOverRationals",
    "ParseError",
    "SizeCapExceeded",
    "algebra_dim",
    "build_family",
    "commutant_basis",
    "commutant_dimension_formula",
    "commuting_algebra_bound_check",
    "compare_hecke_bounds",
    "hecke_crossover_index",
    "is_nilpotent",
    "joint_spectral_decomposition",
    "jordan_matrix",
    "jordan_sweep_report",
    "jordan_type",
    "max_irrep_dimension",
    "monomial_span_dimension",
    "optimal_split",
    "random_bound_report",
    "random_commuting_family",
    "rep_dim_bound_check",
    "shifted_commutant_dimension",
    "tightness_search",
    "verify_commuting_bound",
    "verify_jordan_lemma",
]


def _entry(x):
    if isinstance(x, bool):
        raise TypeError("matrix entries must be int, Fraction or str, not bool")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    if isinstance(x, str):
        return x
    raise TypeError(f"matrix entries must be int, Fraction or str, not {type(x).__name__}")


def _value(x):
    return Fraction(x) if isinstance(x, str) else x


def _matrix_json(m):
    rows = [[_entry(x) for x in row] for row in m]
    return {"n": len(rows), "entries": rows}


def _matrix_from(j):
    return [[_value(x) for x in row] for row in j["entries"]]


def _family_json(generators, n=None):
    mats = [_matrix_json(g) for g in generators]
    if n is None:
        if not mats:
            raise ValueError("n is required for an empty family")
        n = mats[0]["n"]
    return json.dumps({"n": n, "matrices": mats})


def _family_from(j):
    return {"n": j["n"], "matrices": [_matrix_from(m) for m in j["matrices"]]}


def jordan_type(a):
    """Partition of block sizes of a nilpotent matrix, largest first."""
    return _core.jordan_type(json.dumps(_matrix_json(a)))


def is_nilpotent(a):
    return _core.is_nilpotent(json.dumps(_matrix_json(a)))


def jordan_matrix(partition):
    return _matrix_from(json.loads(_core.jordan_matrix(list(partition))))


def commutant_basis(a, size_cap=DEFAULT_SIZE_CAP):
    """Basis of {B : AB = BA}."""
    return [_matrix_from(b) for b in json.loads(_core.commutant_basis(json.dumps(_matrix_json(a)), size_cap))]


def commutant_dimension_formula(partition):
    return _core.commutant_dimension_formula(list(partition))


def shifted_commutant_dimension(a, m, size_cap=DEFAULT_SIZE_CAP):
    """dim span{A^m B : AB = BA} for nilpotent A."""
    return _core.shifted_commutant_dimension(json.dumps(_matrix_json(a)), m, size_cap)


def verify_jordan_lemma(partition, m):
    return json.loads(_core.verify_jordan_lemma(list(partition), m))


def algebra_dim(generators, n=None):
    """Dimension of the unital algebra generated by the matrices."""
    return _core.algebra_dim(_family_json(generators, n))


def monomial_span_dimension(generators, cap, n=None):
    return _core.monomial_span_dimension(_family_json(generators, n), cap)


def verify_commuting_bound(generators, n=None):
    """Exact check of dim^(l+1) <= (l+1)^(l+1) n^(2l) for a commuting family."""
    return json.loads(_core.verify_commuting_bound(_family_json(generators, n)))


def joint_spectral_decomposition(generators, n=None):
    blocks = json.loads(_core.joint_spectral_decomposition(_family_json(generators, n)))
    return [
        {
            "eigenvalues": [_value(x) for x in b["eigenvalues"]],
            "basis": [[_value(x) for x in v] for v in b["basis"]],
        }
        for b in blocks
    ]


def commuting_algebra_bound_check(dim, n, l):
    return json.loads(_core.commuting_algebra_bound_check(str(dim), n, l))


def rep_dim_bound_check(n, p, q, l):
    return json.loads(_core.rep_dim_bound_check(str(n), p, q, l))


def max_irrep_dimension(p, q, l):
    return int(_core.max_irrep_dimension(p, q, l))


def hecke_crossover_index(n):
    c = _core.hecke_crossover_index(n)
    return None if c is None else int(c)


def compare_hecke_bounds(n, index):
    """True when index^n n^(n/2) < index^(2^(n-1))."""
    return _core.compare_hecke_bounds(n, index)


def optimal_split(n, l):
    out = json.loads(_core.optimal_split(n, l))
    out["f_min"] = Fraction(out["f_min"])
    return out


def build_family(spec):
    return _family_from(json.loads(_core.build_family(json.dumps(spec))))


def random_commuting_family(n, l, seed):
    family, spec = _core.random_commuting_family(n, l, seed)
    return _family_from(json.loads(family)), json.loads(spec)


def tightness_search(n, l, budget, seed):
    return json.loads(_core.tightness_search(n, l, budget, seed))


def jordan_sweep_report(n_max):
    return json.loads(_core.jordan_sweep_report(n_max))


def random_bound_report(ns, ls, trials, seed):
    return json.loads(_core.random_bound_report(list(ns), list(ls), trials, seed))
