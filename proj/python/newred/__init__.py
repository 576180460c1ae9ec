"""Exact search and certification of polynomials with newly reducible iterates.

A polynomial f has a newly reducible n-th iterate when f^(n-1) is irreducible
but f^n is not. The heavy lifting happens in the C++ extension; this package
decodes its JSON payloads into plain dicts. Rationals are "p/q" strings.
"""

import json as _json

from . import _core

__version__ = "0.1.0"

__all__ = [
    "iterate",
    "factor",
    "check",
    "family",
    "genbigd_params",
    "box_search",
    "surface_search",
    "classify_membership",
    "verify_ahmadi",
    "run_claims",
]


def iterate(poly, n):
    """n-fold self-composition of a polynomial over Q, as text."""
    return _core.iterate_str(poly, n)


def factor(poly):
    """Complete factorization over Q: {"unit": ..., "factors": [...]}.

    Factor polynomials are coefficient lists, index = degree.
    """
    return _json.loads(_core.factor_json(poly))


def check(poly, n, use_fast_paths=True):
    """Decide whether the n-th iterate is newly reducible.

    Returns {"newly_reducible": bool, ...}; when true, "witness" carries the
    irreducibility chain and the full factorization of f^n.
    """
    return _json.loads(_core.check_json(poly, n, use_fast_paths))


def family(name, *params):
    """Construct a certified family member by name.

    Parameters are rationals given as int or "p/q" string. The result carries
    the polynomial, predicted factor structure, and side conditions with their
    truth values.
    """
    return _json.loads(_core.family_json(name, [str(p) for p in params]))


def genbigd_params(d, p, count=3):
    """Deterministic k parameters (powers of p) for the high-degree family."""
    return [int(k) for k in _core.genbigd_params(d, str(p), count)]


def box_search(a_min, a_max, b_min, b_max, n=3, workers=1, use_fast_paths=True):
    """Scan monic quadratics x^2 + a x + b over an integer box; list of hits."""
    raw = _core.box_search_jsonl(str(a_min), str(a_max), str(b_min), str(b_max), n,
                                 workers, use_fast_paths)
    return [_json.loads(line) for line in raw.splitlines()]


def surface_search(height):
    """Surface points (r, s) up to a height whose quadratic has newly reducible f^3."""
    return [_json.loads(line) for line in _core.surface_search_jsonl(height).splitlines()]


def classify_membership(q, d=2, n=2):
    """Exhaustive scan of monic degree-d polynomials over F_q for newly reducible f^n."""
    return _json.loads(_core.classify_membership_json(q, d, n))


def verify_ahmadi(q, monic_only=False):
    """Check that every quadratic over F_q (q a power of two) has reducible third iterate."""
    return _json.loads(_core.verify_ahmadi_json(q, monic_only))


def run_claims(quick=False):
    """Replay the bundled claim suite; list of {"id", "name", "pass", ...}."""
    return _json.loads(_core.run_claims_json(quick))
