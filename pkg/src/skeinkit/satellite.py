"""Doubled links, Whitehead doubles, and twist-replacement constructors.

Doubling convention
-------------------
``blackboard_double`` draws a parallel copy of the diagram pushed off to the
*left* of the orientation and reverses the copy.  Each crossing of sign e
becomes a four-crossing tangle: the two copies of the overstrand pass over
the two copies of the understrand, copy-copy and original-original crossings
keep sign e, mixed crossings flip to -e.  Crossing count quadruples, the
component count doubles, and the writhe is always 0.

With the left push-off the two components of a doubled knot diagram have
linking number ``PUSHOFF_LINKING_SIGN * m`` where m is the framing target:
the reversed copy negates the blackboard-framing linking number, so the
constant is -1.  Consequently a framing-raising full twist inserted in the
antiparallel band consists of two crossings of sign -sign(m - w(D)), and
smoothing either of them collapses the double to an unknot.

Insertion sites are deterministic: the clasp goes into the band section
carrying the copy of the base diagram's minimal arc; the framing twists go
into the overstrand ribbon inside the tangle at that arc's head crossing.
The polynomial does not depend on the sites (band twists slide along the
ribbon, through crossings included), but the Seifert-circle count does:
the tangle-interior section has both sheets on one Seifert circle, so each
full twist there adds exactly two circles and the canonical genus of the
clasped diagram stays equal to the companion's crossing number for every
framing target, as the genus identities require.

A positive clasp is two positive crossings (switching one of them must turn
the diagram into an unknot, fixing the convention empirically).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, quasitoric_beta
from .diagram import Crossing, LinkDiagram, from_braid_closure
from .errors import DiagramError

__all__ = [
    "PUSHOFF_LINKING_SIGN",
    "TwistSite",
    "blackboard_double",
    "canonical_double",
    "canonical_whitehead",
    "replace_crossing_with_half_twists",
    "build_K_A",
]

PUSHOFF_LINKING_SIGN = -1


def _double_with_map(d: LinkDiagram):
    """Doubled crossings plus the arc map a -> (a0, a1).

    a0 follows the original orientation, a1 is the reversed left push-off.
    Internal tangle arcs i1..i4 follow the per-sign wiring derived from the
    left push-off geometry (the overstrand ribbon stays on top throughout).
    """
    arcs = d.arcs()
    amap = {a: (2 * i, 2 * i + 1) for i, a in enumerate(arcs)}
    fresh = 2 * len(arcs)
    crossings = []
    for c in d.crossings:
        oi0, oi1 = amap[c.over_in]
        oo0, oo1 = amap[c.over_out]
        ui0, ui1 = amap[c.under_in]
        uo0, uo1 = amap[c.under_out]
        i1, i2, i3, i4 = fresh, fresh + 1, fresh + 2, fresh + 3
        fresh += 4
        s = c.sign
        if s > 0:
            crossings += [
                Crossing(i1, oo0, ui0, i3, s),
                Crossing(oi0, i1, i4, ui1, -s),
                Crossing(oo1, i2, i3, uo0, -s),
                Crossing(i2, oi1, uo1, i4, s),
            ]
        else:
            crossings += [
                Crossing(oi0, i1, i3, uo0, s),
                Crossing(i1, oo0, uo1, i4, -s),
                Crossing(i2, oi1, ui0, i3, -s),
                Crossing(oo1, i2, i4, ui1, s),
            ]
    return crossings, amap, fresh


def blackboard_double(d: LinkDiagram) -> LinkDiagram:
    """The standard antiparallel 2-parallel of a diagram (no extra twists)."""
    crossings, _, _ = _double_with_map(d)
    return LinkDiagram(crossings, 2 * d.free_loops)


def _full_twist_block(t: int):
    """One full twist on the antiparallel band; both crossings carry sign t."""

    def build(f_in, f_out, b_in, b_out, fresh):
        p1, q1 = fresh, fresh + 1
        if t < 0:
            cs = [
                Crossing(q1, b_out, f_in, p1, -1),
                Crossing(p1, f_out, b_in, q1, -1),
            ]
        else:
            cs = [
                Crossing(f_in, p1, q1, b_out, 1),
                Crossing(b_in, q1, p1, f_out, 1),
            ]
        return cs, fresh + 2

    return build


def _clasp_block(clasp_sign: int):
    """Two same-sign crossings hooking the band's folded-back fingers."""

    def build(f_in, f_out, b_in, b_out, fresh):
        a2, b2 = fresh, fresh + 1
        if clasp_sign > 0:
            cs = [
                Crossing(b2, f_out, f_in, a2, 1),
                Crossing(a2, b_out, b_in, b2, 1),
            ]
        else:
            cs = [
                Crossing(f_in, a2, b2, f_out, -1),
                Crossing(b_in, b2, a2, b_out, -1),
            ]
        return cs, fresh + 2

    return build


def _chain_blocks(blocks, f_entry, b_entry, fresh):
    """Wire blocks left to right; the backward strand threads right to left.

    Returns (crossings, forward_exit_arc, backward_exit_arc, fresh).
    """
    n = len(blocks)
    f = [f_entry] + [fresh + i for i in range(n)]
    bo = [fresh + n + i for i in range(n)]
    fresh += 2 * n
    crossings = []
    for i, block in enumerate(blocks):
        b_in = bo[i + 1] if i + 1 < n else b_entry
        cs, fresh = block(f[i], f[i + 1], b_in, bo[i], fresh)
        crossings += cs
    return crossings, f[n], bo[0], fresh


def _insert_into_band(crossings, a0, a1, blocks, fresh):
    """Cut the band (a0 forward, a1 backward) and splice the blocks in."""
    chain, f_exit, b_exit, fresh = _chain_blocks(blocks, a0, a1, fresh)
    out = []
    for c in crossings:
        oi = f_exit if c.over_in == a0 else (b_exit if c.over_in == a1 else c.over_in)
        ui = f_exit if c.under_in == a0 else (b_exit if c.under_in == a1 else c.under_in)
        out.append(Crossing(oi, c.over_out, ui, c.under_out, c.sign))
    return out + chain, fresh


def _closed_band(blocks):
    """Blocks wired into a closed antiparallel band (crossing-free companion)."""
    n = len(blocks)
    f = list(range(n))
    bo = list(range(n, 2 * n))
    fresh = 2 * n
    crossings = []
    for i, block in enumerate(blocks):
        cs, fresh = block(f[i - 1], f[i], bo[(i + 1) % n], bo[i], fresh)
        crossings += cs
    return LinkDiagram(crossings)


def _twist_blocks(k: int) -> list:
    return [_full_twist_block(-1 if k > 0 else 1)] * abs(k)


def _twist_site(d: LinkDiagram, arc_count: int):
    """Overstrand-ribbon arcs inside the tangle at the minimal arc's head."""
    ci, _ = d.arc_head(min(d.arcs()))
    i1 = 2 * arc_count + 4 * ci
    return i1, i1 + 1


def canonical_double(d: LinkDiagram, m: int) -> LinkDiagram:
    """Doubled link diagram of a knot diagram with (m - w(D)) full twists."""
    if d.component_count() != 1:
        raise DiagramError("canonical_double needs a knot diagram (one component)")
    k = m - d.writhe()
    if not d.crossings:
        if k == 0:
            return LinkDiagram((), 2)
        return _closed_band(_twist_blocks(k))
    crossings, amap, fresh = _double_with_map(d)
    if k == 0:
        return LinkDiagram(crossings)
    i1, i2 = _twist_site(d, len(amap))
    crossings, _ = _insert_into_band(crossings, i1, i2, _twist_blocks(k), fresh)
    return LinkDiagram(crossings)


def canonical_whitehead(d: LinkDiagram, m: int, clasp_sign: int) -> LinkDiagram:
    """Canonical m-twisted Whitehead-double diagram with the given clasp sign."""
    if clasp_sign not in (1, -1):
        raise DiagramError("clasp_sign must be +1 or -1")
    if d.component_count() != 1:
        raise DiagramError("canonical_whitehead needs a knot diagram (one component)")
    k = m - d.writhe()
    if not d.crossings:
        return _closed_band(_twist_blocks(k) + [_clasp_block(clasp_sign)])
    crossings, amap, fresh = _double_with_map(d)
    if k:
        i1, i2 = _twist_site(d, len(amap))
        crossings, fresh = _insert_into_band(crossings, i1, i2, _twist_blocks(k), fresh)
    a0, a1 = amap[min(d.arcs())]
    crossings, _ = _insert_into_band(crossings, a0, a1, [_clasp_block(clasp_sign)], fresh)
    result = LinkDiagram(crossings)
    assert result.component_count() == 1
    return result


@dataclass(frozen=True)
class TwistSite:
    """A crossing to replace by a stack of |replacement| same-sign half-twists."""

    crossing: int
    replacement: int


def replace_crossing_with_half_twists(d: LinkDiagram, site: TwistSite) -> LinkDiagram:
    """Replace a crossing by k stacked crossings of its sign on the same strands.

    k odd preserves the strand connectivity (k = 1 is the identity); k even
    reconnects the strands, which is what full-twist replacement means.
    The crossing is assumed braid-like (both strands coherently oriented),
    which holds for every diagram the family generators feed in.
    """
    if not (0 <= site.crossing < len(d.crossings)):
        raise DiagramError(f"no crossing {site.crossing}")
    c = d.crossings[site.crossing]
    k = abs(site.replacement)
    if k < 1:
        raise DiagramError("replacement count must be at least 1")
    if (site.replacement > 0) != (c.sign > 0):
        raise DiagramError("replacement sign must match the crossing sign")
    if k == 1:
        return d
    fresh = max(d.arcs()) + 1
    s1 = [c.over_in] + [fresh + i for i in range(k - 1)]
    s2 = [c.under_in] + [fresh + k - 1 + i for i in range(k - 1)]
    if k % 2 == 1:
        s1.append(c.over_out)
        s2.append(c.under_out)
    else:
        s1.append(c.under_out)
        s2.append(c.over_out)
    stack = []
    for j in range(k):
        if j % 2 == 0:
            stack.append(Crossing(s1[j], s1[j + 1], s2[j], s2[j + 1], c.sign))
        else:
            stack.append(Crossing(s2[j], s2[j + 1], s1[j], s1[j + 1], c.sign))
    rest = [x for i, x in enumerate(d.crossings) if i != site.crossing]
    return LinkDiagram(rest + stack, d.free_loops)


def build_K_A(matrix) -> LinkDiagram:
    """Closure-style diagram from an r x 3 matrix of nonzero half-twist counts.

    Entry (i, j) becomes |n_ij| stacked sigma_{r-i} crossings of sign n_ij;
    signs must be constant along rows and alternate down columns.  With all
    entries of absolute value 1 this is exactly the quasitoric closure.
    """
    rows = [list(row) for row in matrix]
    r = len(rows)
    if r < 1 or any(len(row) != 3 for row in rows):
        raise DiagramError("matrix must be r x 3 with r >= 1")
    for row in rows:
        for n in row:
            if not isinstance(n, int) or n == 0:
                raise DiagramError("matrix entries must be nonzero integers")
    for i in range(r):
        for j in range(2):
            if rows[i][j] * rows[i][j + 1] <= 0:
                raise DiagramError("row signs must be constant (n_ij * n_ij+1 > 0)")
    for i in range(r - 1):
        for j in range(3):
            if rows[i][j] * rows[i + 1][j] >= 0:
                raise DiagramError("column signs must alternate (n_ij * n_i+1j < 0)")
    word = []
    for j in range(3):
        for i in range(r):
            n = rows[i][j]
            letter = (r - i) * (1 if n > 0 else -1)
            word += [letter] * abs(n)
    return from_braid_closure(BraidWord(r + 1, word))


def quasitoric_closure(r: int, top_sign: int = 1) -> LinkDiagram:
    """Closure diagram of the type-(r+1, 3) quasitoric braid."""
    return from_braid_closure(quasitoric_beta(r, top_sign))
