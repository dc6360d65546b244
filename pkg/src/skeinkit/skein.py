"""Memoized descending-diagram skein engine for HOMFLYPT polynomials.

Algorithm: simplify (R1/R2 plus split-circle extraction), factor the diagram
into crossing-connected pieces (disjoint pieces multiply, with one delta per
extra piece), and recurse.  A crossing-free diagram with k loops is delta^(k-1).
Otherwise components are walked in order of minimal arc id from deterministic
basepoints, and every crossing first met on its understrand is bad.  Each bad
crossing, taken in traversal order, is resolved by the skein relation at the
current sign (earlier bad crossings already switched):

    positive x:  P(d) = v^2  P(switched) + v z    P(smoothed)
    negative x:  P(d) = v^-2 P(switched) - v^-1 z P(smoothed)

Switching never changes the traversal, so the whole switch chain of one
diagram unrolls in a single node: with all bad crossings switched the diagram
is descending, hence an unlink worth delta^(mu-1), and the remaining children
are the smoothed diagrams, each one crossing smaller.  Recursion therefore
descends strictly in crossing count, which makes the memo DAG acyclic and
termination unconditional.  Results are memoized on the canonical code of
each simplified piece, and the memo can persist to a disk cache between runs
(line format: ``code-hex TAB canonical-polynomial-text``).

The evaluator runs on an explicit stack, so deep skein trees cannot overflow
the interpreter stack.  Identical inputs yield identical polynomials
regardless of the memo hit pattern; a memo entry is never overwritten with a
different value.

Thread-safety: diagrams and polynomials are immutable, and the memo table
tolerates concurrent insertion of identical key/value pairs; the engine
itself runs single-threaded for reproducible counter values.
"""

from __future__ import annotations

import os
import time

from .diagram import LinkDiagram
from .errors import BudgetExceededError, CacheCorruptionError, DiagramError
from .laurent import LaurentPoly2, delta_power

__all__ = ["SkeinEngine", "homfly"]

_ONE = LaurentPoly2.monomial(1)
_POS_SWITCH = LaurentPoly2.monomial(1, v=2)
_POS_SMOOTH = LaurentPoly2.monomial(1, v=1, z=1)
_NEG_SWITCH = LaurentPoly2.monomial(1, v=-2)
_NEG_SMOOTH = LaurentPoly2.monomial(-1, v=-1, z=1)


class SkeinEngine:
    """HOMFLYPT evaluator with a persistent, conflict-checked memo table."""

    def __init__(self, node_budget: int = 10**8, wall_seconds=None, cache_path=None):
        self.node_budget = node_budget
        self.wall_seconds = wall_seconds
        self.cache_path = cache_path
        self.memo = {}
        self.nodes_expanded = 0
        self.memo_hits = 0
        self.preloaded = 0
        if cache_path and os.path.exists(cache_path):
            self.load_cache(cache_path)

    # -- cache ----------------------------------------------------------

    def load_cache(self, path) -> int:
        count = 0
        with open(path, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                code_hex, _, poly_text = line.partition("\t")
                if not poly_text:
                    raise CacheCorruptionError(f"bad cache line: {line!r}")
                self._memo_write(bytes.fromhex(code_hex), LaurentPoly2.parse_text(poly_text))
                count += 1
        self.preloaded += count
        return count

    def save_cache(self, path=None) -> int:
        path = path or self.cache_path
        if path is None:
            raise ValueError("no cache path configured")
        lines = sorted(f"{code.hex()}\t{p.format_text()}\n" for code, p in self.memo.items())
        tmp = f"{path}.tmp.{os.getpid()}"
        with open(tmp, "w", encoding="ascii") as fh:
            fh.writelines(lines)
        os.replace(tmp, path)
        return len(lines)

    def counters(self) -> dict:
        return {
            "nodes": self.nodes_expanded,
            "memo_hits": self.memo_hits,
            "memo_size": len(self.memo),
            "preloaded": self.preloaded,
        }

    def _memo_write(self, code: bytes, value: LaurentPoly2) -> None:
        old = self.memo.get(code)
        if old is None:
            self.memo[code] = value
        elif old != value:
            raise CacheCorruptionError("memo entry conflict for a canonical code")

    # -- evaluation -------------------------------------------------------

    def homfly(self, d: LinkDiagram) -> LaurentPoly2:
        """The HOMFLYPT polynomial of the link of d."""
        if d.is_empty():
            raise DiagramError("the empty diagram has no HOMFLYPT polynomial")
        deadline = None
        if self.wall_seconds is not None:
            deadline = time.monotonic() + self.wall_seconds
        exponent, pieces = _decompose(d)
        for code, piece in pieces:
            self._resolve(piece, code, deadline)
        result = delta_power(exponent)
        for code, _ in pieces:
            result = result * self.memo[code]
        _self_check(d, result)
        return result

    def _resolve(self, piece0: LinkDiagram, code0: bytes, deadline) -> None:
        memo = self.memo
        if code0 in memo:
            self.memo_hits += 1
            return
        nodes = {}
        stack = [(code0, piece0)]
        while stack:
            code, piece = stack[-1]
            if code in memo:
                stack.pop()
                continue
            node = nodes.get(code)
            if node is None:
                self.nodes_expanded += 1
                if self.nodes_expanded > self.node_budget:
                    raise BudgetExceededError(
                        "skein node budget exhausted",
                        nodes=self.nodes_expanded,
                        memo_size=len(memo),
                    )
                if deadline is not None and time.monotonic() > deadline:
                    raise BudgetExceededError(
                        "skein wall-clock budget exhausted",
                        nodes=self.nodes_expanded,
                        memo_size=len(memo),
                    )
                bad = piece.non_descending_crossings()
                if not bad:
                    self._memo_write(code, delta_power(piece.component_count() - 1))
                    stack.pop()
                    continue
                # Unroll the switch chain: each bad crossing contributes its
                # smoothed diagram, and the fully switched end is an unlink.
                prefix = _ONE
                terms = []
                cur = piece
                for x in bad:
                    if cur.crossings[x].sign > 0:
                        terms.append((prefix * _POS_SMOOTH, _decompose(cur.smooth_crossing(x))))
                        prefix = prefix * _POS_SWITCH
                    else:
                        terms.append((prefix * _NEG_SMOOTH, _decompose(cur.smooth_crossing(x))))
                        prefix = prefix * _NEG_SWITCH
                    cur = cur.switch_crossing(x)
                tail = prefix * delta_power(piece.component_count() - 1)
                nodes[code] = (tail, terms)
                for _, (_, children) in terms:
                    for child_code, child_piece in children:
                        if child_code in memo:
                            self.memo_hits += 1
                        else:
                            stack.append((child_code, child_piece))
            else:
                tail, terms = node
                pending = [
                    child
                    for _, (_, children) in terms
                    for child in children
                    if child[0] not in memo
                ]
                if pending:
                    stack.extend(pending)
                    continue
                value = tail
                for coeff, (exponent, children) in terms:
                    part = delta_power(exponent)
                    for child_code, _ in children:
                        part = part * memo[child_code]
                    value = value + coeff * part
                self._memo_write(code, value)
                del nodes[code]
                stack.pop()


def _decompose(d: LinkDiagram):
    """Simplify and split: P(d) = delta^exponent * product of piece values."""
    core, removed = d.simplify()
    pieces = core.split_pieces()
    if pieces:
        exponent = removed + len(pieces) - 1
    else:
        exponent = removed - 1
    return exponent, [(p.canonical_code(), p) for p in pieces]


def _self_check(d: LinkDiagram, p: LaurentPoly2) -> None:
    """Degree and parity guards; a violation means an engine bug."""
    st = d.stats()
    if p.is_zero:
        raise AssertionError("engine produced the zero polynomial")
    if p.max_z_degree() > st.morton_bound:
        raise AssertionError(
            f"Morton bound violated: max_z {p.max_z_degree()} > {st.morton_bound}"
        )
    want = (st.components - 1) % 2
    for ev, ez in p.terms():
        if ev % 2 != want or ez % 2 != want:
            raise AssertionError(
                f"exponent parity violated at v^{ev} z^{ez} with {st.components} components"
            )


_default_engine = None


def homfly(d: LinkDiagram, engine: SkeinEngine | None = None) -> LaurentPoly2:
    """Module-level convenience wrapper around a shared default engine."""
    global _default_engine
    if engine is None:
        if _default_engine is None:
            _default_engine = SkeinEngine()
        engine = _default_engine
    return engine.homfly(d)
