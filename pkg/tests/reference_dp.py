"""Cell-by-cell transcription of the Case-2 table fill.

Dict-based, explicit sets in every cell, one LTST call per update. Slow, but
an independent route to compare the vectorised table against.
"""

from ssrkit.semirestricted import DpCell, ltst


def _store(row, d, cand):
    row[d] = ltst(row.get(d), cand)


def reference_table(values, p):
    """Return ``(Q, m, rows)``; ``rows[i]`` maps d -> (s1, s2, q, x)."""
    a = (None,) + tuple(values)  # 1-based
    n = len(values)
    Q = sum(a[1 : p + 1])
    m = max((i for i in range(1, n + 1) if a[i] < Q), default=0)
    if m <= p:
        return Q, m, None
    lo = -2 * Q
    # cells carry (s1, s2) in DpCell.pred so ltst sees only q and x
    rows = [dict() for _ in range(m + 1)]
    rows[0][a[p]] = DpCell(p, a[p], 0, (frozenset({p}), frozenset()))
    for i in range(1, m + 1):
        prev = rows[i - 1]
        cur = rows[i]
        if i < p:
            for d in sorted(prev):
                c = prev[d]
                s1, s2 = c.pred
                _store(cur, d, c)
                _store(cur, d + a[i], DpCell(c.q, c.x + a[i], 0, (s1 | {i}, s2)))
                _store(cur, d - a[i], DpCell(c.q, c.x + a[i], 0, (s1, s2 | {i})))
        elif i == p:
            for d in sorted(prev):
                cur[d] = prev[d]
        else:
            for d in sorted(prev):
                c = prev[d]
                s1, s2 = c.pred
                if i > p + 1:
                    _store(cur, d, c)
                if d - a[i] >= lo:
                    _store(cur, d - a[i], DpCell(i, c.x + a[i], 0, (s1, s2 | {i})))
            for d in sorted(rows[p]):
                c = rows[p][d]
                s1, s2 = c.pred
                if d - a[i] >= lo:
                    _store(cur, d - a[i], DpCell(i, c.x + a[i], 0, (s1, s2 | {i})))
    out = []
    for row in rows:
        out.append({d: (tuple(sorted(c.pred[0])), tuple(sorted(c.pred[1])), c.q, c.x) for d, c in row.items()})
    return Q, m, out
