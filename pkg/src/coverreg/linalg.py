"""Exact rank of sparse integer matrices, over the rationals or a prime field.

Boundary matrices of simplicial complexes and their relatives are sparse with
entries in {-1, 0, +1}.  Over the rationals, elimination pivots only on +-1
entries, so the working matrix stays integral; once no unit entry remains the
residue is converted to exact fractions and elimination continues with general
pivots.  Over GF(p) every nonzero pivot is usable.  No floating point anywhere.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable

__all__ = ["sparse_rank"]


def sparse_rank(rows: Iterable[dict[int, int]], modulus: int | None = None) -> int:
    """Rank of the matrix whose rows are sparse ``{column: coefficient}`` maps.

    ``modulus`` of None means rank over the rationals; a prime p means GF(p).
    """
    work: dict[int, dict[int, object]] = {}
    for rid, row in enumerate(rows):
        if modulus is None:
            r = {c: v for c, v in row.items() if v}
        else:
            r = {c: v % modulus for c, v in row.items() if v % modulus}
        if r:
            work[rid] = dict(r)

    cols: dict[int, set[int]] = {}
    for rid, r in work.items():
        for c in r:
            cols.setdefault(c, set()).add(rid)

    # Lazy min-heap of (row length, rid); stale entries are refreshed on pop.
    # Rows with no usable pivot fall out of the heap and rejoin it either when
    # another elimination touches them or at the switch to fractional mode.
    heap = [(len(r), rid) for rid, r in work.items()]
    heapq.heapify(heap)
    fractional = modulus is not None  # GF(p) allows any nonzero pivot from the start
    rank = 0

    def pivot_col(rid: int) -> int | None:
        best = None
        for c, v in work[rid].items():
            if not fractional and v not in (1, -1):
                continue
            fill = len(cols[c])
            if best is None or fill < best[0]:
                best = (fill, c)
        return None if best is None else best[1]

    while work:
        rid = None
        while heap:
            length, cand = heapq.heappop(heap)
            if cand not in work:
                continue
            if len(work[cand]) != length:
                heapq.heappush(heap, (len(work[cand]), cand))
                continue
            rid = cand
            break
        if rid is None:
            # Only reachable in integral mode when every remaining row lacks a
            # unit entry: convert the residue to exact rationals and resume.
            assert modulus is None and not fractional
            fractional = True
            for r in work.values():
                for cc in list(r):
                    r[cc] = Fraction(r[cc])
            for other in work:
                heapq.heappush(heap, (len(work[other]), other))
            continue

        c = pivot_col(rid)
        if c is None:
            continue  # deferred; see note above

        pivot_row = work.pop(rid)
        pv = pivot_row[c]
        for cc in pivot_row:
            cols[cc].discard(rid)
        rank += 1

        if modulus is not None:
            inv = pow(pv, modulus - 2, modulus)
        for other in list(cols.get(c, ())):
            row = work[other]
            if modulus is not None:
                factor = (row[c] * inv) % modulus
            elif fractional:
                factor = row[c] / pv
            else:
                factor = row[c] * pv  # pv is +-1, exact division
            for cc, vv in pivot_row.items():
                new = row.get(cc, 0) - factor * vv
                if modulus is not None:
                    new %= modulus
                if new:
                    if cc not in row:
                        cols.setdefault(cc, set()).add(other)
                    row[cc] = new
                elif cc in row:
                    del row[cc]
                    cols[cc].discard(other)
            if not row:
                del work[other]
            else:
                heapq.heappush(heap, (len(row), other))
        cols.pop(c, None)

    return rank
