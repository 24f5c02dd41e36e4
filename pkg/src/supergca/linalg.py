"""Sparse exact Gaussian elimination over Scalars with unit pivots."""

from __future__ import annotations

from .exactmath import Scalar


class SingularMap(ValueError):
    pass


def _is_unit(s: Scalar) -> bool:
    if len(s.terms) != 1:
        return False
    (mono, _k), = s.terms
    return not mono


def _pivot_rank(s: Scalar) -> tuple:
    # prefer plain rationals, then short coefficients
    (key, coef), = s.terms.items()
    return (0 if coef.is_rational() else 1, key[1] != 0)


def invert(rows: list[dict[int, Scalar]], n: int) -> list[dict[int, Scalar]]:
    """Invert the n x n matrix given as sparse rows ``rows[r][c]``.

    Pivots must be units of the scalar ring (single term, no parameters).
    Raises :class:`SingularMap` when no unit pivot exists.
    """
    if len(rows) != n:
        raise SingularMap(f"matrix has {len(rows)} rows, expected {n}")
    a = [dict(r) for r in rows]
    inv = [{r: Scalar.const(1)} for r in range(n)]
    used = [False] * n
    order: list[tuple[int, int]] = []
    for col in range(n):
        best = None
        for r in range(n):
            if used[r]:
                continue
            v = a[r].get(col)
            if v is None or v.is_zero() or not _is_unit(v):
                continue
            rank = (_pivot_rank(v), len(a[r]))
            if best is None or rank < best[0]:
                best = (rank, r)
        if best is None:
            raise SingularMap(f"no invertible pivot in column {col}")
        r = best[1]
        used[r] = True
        order.append((r, col))
        piv_inv = a[r][col].inverse()
        a[r] = {c: v * piv_inv for c, v in a[r].items()}
        inv[r] = {c: v * piv_inv for c, v in inv[r].items()}
        for rr in range(n):
            if rr == r:
                continue
            f = a[rr].get(col)
            if f is None or f.is_zero():
                continue
            _axpy(a[rr], a[r], -f)
            _axpy(inv[rr], inv[r], -f)
    out: list[dict[int, Scalar]] = [None] * n  # type: ignore[list-item]
    for r, col in order:
        out[col] = inv[r]
    return out


def _axpy(target: dict, src: dict, f: Scalar) -> None:
    for c, v in src.items():
        nv = target.get(c, Scalar.const(0)) + f * v
        if nv.is_zero():
            target.pop(c, None)
        else:
            target[c] = nv


def row_basis(vectors: list[dict[int, Scalar]]) -> list[int]:
    """Indices of a maximal linearly independent subset, greedy in input order."""
    reduced: list[tuple[int, dict]] = []  # (pivot column, normalized row)
    chosen = []
    for idx, vec in enumerate(vectors):
        v = dict(vec)
        for col, row in reduced:
            f = v.get(col)
            if f is not None and not f.is_zero():
                _axpy(v, row, -f)
        v = {c: x for c, x in v.items() if not x.is_zero()}
        if not v:
            continue
        col = min(v)
        if not _is_unit(v[col]):
            raise SingularMap("row_basis needs unit pivots")
        inv = v[col].inverse()
        v = {c: x * inv for c, x in v.items()}
        for k, (c2, row) in enumerate(reduced):
            f = row.get(col)
            if f is not None and not f.is_zero():
                _axpy(row, v, -f)
        reduced.append((col, v))
        chosen.append(idx)
    return chosen


def express(basis: list[dict[int, Scalar]], target: dict[int, Scalar]) -> list[Scalar] | None:
    """Coefficients c with sum_k c_k basis[k] == target, or None if target is outside the span.

    ``basis`` must be linearly independent.
    """
    n = len(basis)
    # each row carries (vector, combination of basis rows)
    reduced: list[tuple[int, dict, dict]] = []
    for idx, vec in enumerate(basis):
        v, comb = dict(vec), {idx: Scalar.const(1)}
        for col, row, rc in reduced:
            f = v.get(col)
            if f is not None and not f.is_zero():
                _axpy(v, row, -f)
                _axpy(comb, rc, -f)
        v = {c: x for c, x in v.items() if not x.is_zero()}
        if not v:
            raise SingularMap("basis is linearly dependent")
        col = min(v)
        if not _is_unit(v[col]):
            raise SingularMap("express needs unit pivots")
        inv = v[col].inverse()
        v = {c: x * inv for c, x in v.items()}
        comb = {c: x * inv for c, x in comb.items()}
        for k, (c2, row, rc) in enumerate(reduced):
            f = row.get(col)
            if f is not None and not f.is_zero():
                _axpy(row, v, -f)
                _axpy(rc, comb, -f)
        reduced.append((col, v, comb))
    t, out = dict(target), {}
    for col, row, rc in reduced:
        f = t.get(col)
        if f is not None and not f.is_zero():
            _axpy(t, row, -f)
            _axpy(out, rc, f)
    if any(not x.is_zero() for x in t.values()):
        return None
    return [out.get(k, Scalar.const(0)) for k in range(n)]
