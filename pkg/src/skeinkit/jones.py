"""Kauffman-bracket Jones oracle and the HOMFLYPT-to-Jones specialization.

This is the third, independent route used to cross-check both main engines:
the bracket works unoriented and corrects by writhe afterwards, so it is
immune to orientation-convention mistakes in the doubling construction's
mixed-sign bookkeeping.

The bracket is evaluated by tangle-wise contraction rather than raw state
enumeration: crossings are processed in a breadth-first order over shared
arcs, carrying a dictionary from boundary pairings to bracket coefficients,
so 24-crossing doubles contract in milliseconds.  Loop closures multiply by
(-A^2 - A^-2); the final writhe correction is (-A^3)^{-w}; the Jones
variable is a = t^(1/2) = A^-2, in which every exponent is integral.

Smoothing rules in port roles (the A-smoothing of a positive crossing is its
oriented smoothing; mirror for negative):

    sign +1:  A joins over_in~under_out, under_in~over_out
              B joins over_in~under_in,  over_out~under_out
    sign -1:  A joins over_in~under_in,  over_out~under_out
              B joins over_in~under_out, under_in~over_out
"""

from __future__ import annotations

from .diagram import LinkDiagram
from .errors import ResourceLimitError, SkeinKitError
from .laurent import LaurentPoly2

__all__ = ["LaurentPoly1", "jones_via_bracket", "specialize_homfly_to_jones"]


class LaurentPoly1:
    """One-variable Laurent polynomial over Python ints (variable ``a``)."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    c2 = data.get(e, 0) + c
                    if c2:
                        data[e] = c2
                    elif e in data:
                        del data[e]
        self._terms = data

    @staticmethod
    def monomial(coeff: int, e: int = 0) -> "LaurentPoly1":
        return LaurentPoly1({e: coeff})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> dict:
        return dict(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly1):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        data = dict(self._terms)
        for e, c in other._terms.items():
            c2 = data.get(e, 0) + c
            if c2:
                data[e] = c2
            elif e in data:
                del data[e]
        return LaurentPoly1(data)

    def __neg__(self):
        return LaurentPoly1({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly1({e: c * other for e, c in self._terms.items()})
        data = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                c = data.get(e, 0) + c1 * c2
                if c:
                    data[e] = c
                elif e in data:
                    del data[e]
        return LaurentPoly1(data)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = LaurentPoly1({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, divisor: "LaurentPoly1") -> "LaurentPoly1":
        """Exact quotient; raises if the division leaves a remainder.

        Laurent division from the top descends forever on inexact input,
        so the quotient exponent is bounded below by the difference of the
        bottom degrees: falling past it proves the division inexact.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly1()
        rem = dict(self._terms)
        d_top = max(divisor._terms)
        d_lead = divisor._terms[d_top]
        e_min = min(self._terms) - min(divisor._terms)
        quot = {}
        while rem:
            top = max(rem)
            c, r = divmod(rem[top], d_lead)
            e = top - d_top
            if r or e < e_min:
                raise SkeinKitError("inexact Laurent division")
            quot[e] = c
            for de, dc in divisor._terms.items():
                key = de + e
                c2 = rem.get(key, 0) - dc * c
                if c2:
                    rem[key] = c2
                elif key in rem:
                    del rem[key]
        return LaurentPoly1(quot)

    def format_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{self._terms[e]}*a^{e}" for e in sorted(self._terms))

    def __repr__(self):
        return f"LaurentPoly1({self.format_text()!r})"


_LOOP = LaurentPoly1({2: -1, -2: -1})  # -A^2 - A^-2
_A = LaurentPoly1.monomial(1, 1)
_A_INV = LaurentPoly1.monomial(1, -1)


def _bfs_crossing_order(d: LinkDiagram) -> list:
    """Process order with small running boundary: BFS over shared arcs."""
    n = len(d.crossings)
    by_arc = {}
    for ci, c in enumerate(d.crossings):
        for arc in (c.over_in, c.over_out, c.under_in, c.under_out):
            by_arc.setdefault(arc, []).append(ci)
    seen = [False] * n
    order = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        while queue:
            ci = queue.pop(0)
            order.append(ci)
            for arc in d.crossings[ci][:4]:
                for cj in by_arc.get(arc, ()):
                    if not seen[cj]:
                        seen[cj] = True
                        queue.append(cj)
    return order


def jones_via_bracket(d: LinkDiagram, state_budget: int = 2_000_000) -> LaurentPoly1:
    """Jones polynomial in a = t^(1/2), by bracket contraction plus writhe.

    ``state_budget`` bounds the number of live boundary pairings; blowing it
    raises a resource error rather than grinding.
    """
    # Ends are (arc, 0) at the tail and (arc, 1) at the head; the initial
    # pairing joins each arc's two ends.  Smoothing a crossing consumes its
    # four ends, re-pairing or closing loops.
    pairing = {}
    for arc in d.arcs():
        pairing[(arc, 0)] = (arc, 1)
        pairing[(arc, 1)] = (arc, 0)

    def key_of(p):
        return tuple(sorted((a, b) for a, b in p.items() if a < b))

    states = {key_of(pairing): LaurentPoly1.monomial(1)}

    for ci in _bfs_crossing_order(d):
        c = d.crossings[ci]
        h_oi, h_oo = (c.over_in, 1), (c.over_out, 0)
        h_ui, h_uo = (c.under_in, 1), (c.under_out, 0)
        if c.sign > 0:
            choices = (
                (_A, ((h_oi, h_uo), (h_ui, h_oo))),
                (_A_INV, ((h_oi, h_ui), (h_oo, h_uo))),
            )
        else:
            choices = (
                (_A, ((h_oi, h_ui), (h_oo, h_uo))),
                (_A_INV, ((h_oi, h_uo), (h_ui, h_oo))),
            )
        new_states = {}
        for state_key, coeff in states.items():
            base = dict(state_key)
            base.update({b: a for a, b in state_key})
            for weight, joins in choices:
                p = dict(base)
                loops = 0
                for e1, e2 in joins:
                    m1 = p.pop(e1)
                    m2 = p.pop(e2)
                    if m1 == e2:
                        loops += 1
                    else:
                        p[m1] = m2
                        p[m2] = m1
                value = coeff * weight * _LOOP**loops
                k = key_of(p)
                prev = new_states.get(k)
                new_states[k] = value if prev is None else prev + value
        states = new_states
        if len(states) > state_budget:
            raise ResourceLimitError("bracket state budget exhausted")

    total = LaurentPoly1()
    for _, coeff in states.items():
        total = total + coeff
    total = total * _LOOP**d.free_loops
    bracket = total.exact_div(_LOOP)  # unknot normalizes to 1

    w = d.writhe()
    corrected = bracket * LaurentPoly1.monomial((-1) ** w, -3 * w)
    out = {}
    for e, coeff in corrected.terms().items():
        if e % 2:
            raise AssertionError("writhe-corrected bracket has an odd exponent")
        out[-e // 2] = coeff  # a = A^-2
    return LaurentPoly1(out)


def specialize_homfly_to_jones(p: LaurentPoly2) -> LaurentPoly1:
    """Substitute v -> a^2, z -> a - a^-1 into a HOMFLYPT value.

    Negative z-powers are resolved by clearing z-denominators first and
    dividing exactly at the end; an inexact division signals that the input
    was not a genuine link polynomial.
    """
    if p.is_zero:
        return LaurentPoly1()
    u = LaurentPoly1({1: 1, -1: -1})
    k = max(0, -p.min_z_degree())
    num = LaurentPoly1()
    for (ev, ez), c in p.terms().items():
        num = num + LaurentPoly1.monomial(c, 2 * ev) * u ** (ez + k)
    return num.exact_div(u**k)
