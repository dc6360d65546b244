"""Sparse Laurent polynomials in two variables v, z over Python integers.

Values are immutable and hashable.  Terms are stored as a dict mapping
exponent pairs (e_v, e_z) to nonzero int coefficients; the zero polynomial
stores no terms.  Two polynomials are equal iff their term dicts are equal.

Canonical text form: terms sorted by (e_z, e_v) ascending, each rendered
``c*v^a*z^b``, joined by `` + ``; the zero polynomial prints as ``0``.
This is the cache and CLI exchange format, and ``parse_text`` round-trips it.

The distinguished constant ``DELTA`` is (v^-1 - v) * z^-1, the value of a
two-component unlink; disjoint unions multiply by it.
"""

from __future__ import annotations

import functools
import re

from .errors import ZeroPolynomialError

__all__ = ["LaurentPoly2", "DELTA", "ZERO", "ONE", "delta_power"]

_TERM_RE = re.compile(r"^(-?\d+)\*v\^(-?\d+)\*z\^(-?\d+)$")

_EXP_BOUND = 2**31


class LaurentPoly2:
    """An exact Laurent polynomial in v and z with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        data = {}
        if terms:
            for (ev, ez), c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    key = (ev, ez)
                    c2 = data.get(key, 0) + c
                    if c2:
                        data[key] = c2
                    elif key in data:
                        del data[key]
        for ev, ez in data:
            if abs(ev) >= _EXP_BOUND or abs(ez) >= _EXP_BOUND:
                raise OverflowError(f"exponent out of range: v^{ev} z^{ez}")
        self._terms = data
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def monomial(coeff: int, v: int = 0, z: int = 0) -> "LaurentPoly2":
        return LaurentPoly2({(v, z): coeff})

    # -- basic protocol -----------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> dict:
        """A copy of the term dict {(e_v, e_z): coeff}."""
        return dict(self._terms)

    def coefficient(self, v: int, z: int) -> int:
        return self._terms.get((v, z), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly2):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.format_text()!r})"

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "LaurentPoly2":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._terms)
        for key, c in other._terms.items():
            c2 = data.get(key, 0) + c
            if c2:
                data[key] = c2
            elif key in data:
                del data[key]
        return _raw(data)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return _raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly2":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly2":
        return _coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly2":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        data = {}
        for (av, az), ac in a.items():
            for (bv, bz), bc in b.items():
                key = (av + bv, az + bz)
                c2 = data.get(key, 0) + ac * bc
                if c2:
                    data[key] = c2
                elif key in data:
                    del data[key]
        return _raw(data)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly2":
        if k < 0:
            raise ValueError("negative powers are not defined for LaurentPoly2")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- degree queries -----------------------------------------------

    def max_z_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("max_z_degree of the zero polynomial")
        return max(ez for _, ez in self._terms)

    def min_z_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("min_z_degree of the zero polynomial")
        return min(ez for _, ez in self._terms)

    def v_support(self) -> tuple:
        """Sorted tuple of v-exponents that occur."""
        return tuple(sorted({ev for ev, _ in self._terms}))

    # -- substitutions ------------------------------------------------

    def substitute_v_inverse(self) -> "LaurentPoly2":
        """Map every term (e_v, e_z, c) to (-e_v, e_z, c)."""
        return _raw({(-ev, ez): c for (ev, ez), c in self._terms.items()})

    def mirror_image(self) -> "LaurentPoly2":
        """The polynomial of the mirror link: (v, z) -> (v^-1, -z).

        Agrees with ``substitute_v_inverse`` whenever every z-exponent is
        even (all knots); for even-component links the rows of odd z-degree
        change sign as well.
        """
        return _raw(
            {(-ev, ez): (c if ez % 2 == 0 else -c) for (ev, ez), c in self._terms.items()}
        )

    # -- text and JSON forms ------------------------------------------

    def format_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (ev, ez) in sorted(self._terms, key=lambda k: (k[1], k[0])):
            parts.append(f"{self._terms[(ev, ez)]}*v^{ev}*z^{ez}")
        return " + ".join(parts)

    @staticmethod
    def parse_text(text: str) -> "LaurentPoly2":
        text = text.strip()
        if text == "0":
            return ZERO
        terms = []
        for chunk in text.split(" + "):
            m = _TERM_RE.match(chunk.strip())
            if not m:
                raise ValueError(f"bad polynomial term: {chunk!r}")
            c, ev, ez = (int(g) for g in m.groups())
            terms.append(((ev, ez), c))
        return LaurentPoly2(terms)

    def to_json_terms(self) -> list:
        return [
            {"v": ev, "z": ez, "c": str(self._terms[(ev, ez)])}
            for (ev, ez) in sorted(self._terms, key=lambda k: (k[1], k[0]))
        ]

    @staticmethod
    def from_json_terms(items) -> "LaurentPoly2":
        return LaurentPoly2([((int(t["v"]), int(t["z"])), int(t["c"])) for t in items])


def _raw(data: dict) -> LaurentPoly2:
    p = LaurentPoly2.__new__(LaurentPoly2)
    p._terms = data
    p._hash = None
    return p


def _coerce(x):
    if isinstance(x, LaurentPoly2):
        return x
    if isinstance(x, int):
        return _raw({(0, 0): x}) if x else ZERO
    return NotImplemented


ZERO = LaurentPoly2()
ONE = LaurentPoly2.monomial(1)
DELTA = LaurentPoly2({(-1, -1): 1, (1, -1): -1})


@functools.lru_cache(maxsize=None)
def delta_power(k: int) -> LaurentPoly2:
    """delta^k, the HOMFLYPT polynomial of a (k+1)-component unlink."""
    if k < 0:
        raise ValueError("delta_power requires k >= 0")
    return DELTA ** k
