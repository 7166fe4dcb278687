"""Fraction-free exact linear algebra over Q(t1,...,tk).

Ranks are computed by Bareiss elimination on denominator-cleared rows, so all
intermediate entries stay integer-coefficient polynomials and every division
is exact.
"""

from __future__ import annotations

from .scalars import MismatchError, _int_ring


def _clear_row(row, ring):
    """Multiply a row of Scalars by a common denominator; returns polynomials."""
    common = ring.one
    for s in row:
        g = common.gcd(s.denominator)
        common = common * s.denominator.exquo(g)
    return [s.numerator * common.exquo(s.denominator) for s in row]


def scalar_matrix_rank(rows):
    """Rank of a matrix of Scalars over the rational-function field."""
    if not rows:
        return 0
    fields = {s.field for row in rows for s in row}
    if len(fields) > 1:
        raise MismatchError("matrix entries over different fields")
    if not fields:
        return 0
    field = fields.pop()
    ring = _int_ring(field.num_generators)
    cleared = [_clear_row(row, ring) for row in rows]
    return fraction_free_rank(cleared, ring)


def fraction_free_rank(rows, ring):
    """Bareiss rank of a matrix of ring elements (exact division throughout)."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = ring.one
    pivot_row = 0
    for col in range(ncols):
        pivot = None
        for i in range(pivot_row, nrows):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != pivot_row:
            m[pivot_row], m[pivot] = m[pivot], m[pivot_row]
        p = m[pivot_row][col]
        for i in range(pivot_row + 1, nrows):
            for j in range(col + 1, ncols):
                m[i][j] = (p * m[i][j] - m[i][col] * m[pivot_row][j]).exquo(prev)
            m[i][col] = ring.zero
        prev = p
        pivot_row += 1
        if pivot_row == nrows:
            break
    return pivot_row


def sparse_field_rank(rows):
    """Rank of sparse rows (dicts column -> field element) by pivoted echelon.

    Entries may be any exact field type with +, *, /, unary - and truthiness
    (Scalar, Fraction, ...).  Suited to large sparse systems where the dense
    fraction-free kernel would fill in.
    """
    pivots = {}  # column -> normalized row
    rank = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                pivot_value = row[col]
                row = {c: v / pivot_value for c, v in row.items()}
                pivots[col] = row
                rank += 1
                break
            factor = row[col]
            for c, v in pivots[col].items():
                if c in row:
                    nv = row[c] - v * factor
                    if nv:
                        row[c] = nv
                    else:
                        del row[c]
                else:
                    row[c] = -(v * factor)
    return rank

