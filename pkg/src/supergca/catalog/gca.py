"""Galilean conformal algebra gca(d) = (o(2,1) + o(d)) acting on an abelian ideal of 3d vectors."""

from __future__ import annotations

from ..salg import SplitSpec, TableBuilder
from ._util import AlgebraCase, Family, I, lsum

# o(2,1) metric used to raise the last index of epsilon_{rst}
ETA21 = (-1, 1, 1)


def levi3(r: int, s: int, t: int) -> int:
    if len({r, s, t}) < 3:
        return 0
    perm = (r, s, t)
    inversions = sum(1 for x in range(3) for y in range(x + 1, 3) if perm[x] > perm[y])
    return -1 if inversions % 2 else 1


def eps21(r: int, s: int, t: int) -> int:
    """epsilon_{rs}^t with epsilon_{012} = 1."""
    return levi3(r, s, t) * ETA21[t]


def gca_families(d: int):
    R = Family("R", [range(3)])
    J = Family("J", [range(1, d + 1)] * 2, anti=[(0, 1)])
    A = Family("A", [range(3), range(1, d + 1)])
    return R, J, A


def build_gca(d: int) -> AlgebraCase:
    if not 1 <= d <= 5:
        raise ValueError("gca(d) is built for 1 <= d <= 5")
    R, J, A = gca_families(d)
    b = TableBuilder([*R, *J, *A], meta={"family": "gca", "d": d})

    for g in R:
        (r,) = g.labels
        for h in R:
            (s,) = h.labels
            b.set(g, h, lsum(R(t, coef=I * eps21(r, s, t)) for t in range(3)))
        for h in A:
            s, k = h.labels
            b.set(g, h, lsum(A(t, k, coef=I * eps21(r, s, t)) for t in range(3)))
    for g in J:
        i, j = g.labels
        for h in J:
            k, l = h.labels
            b.set(
                g,
                h,
                lsum(
                    [
                        J(j, l, coef=I * (i == k)),
                        J(i, k, coef=I * (j == l)),
                        J(j, k, coef=-I * (i == l)),
                        J(i, l, coef=-I * (j == k)),
                    ]
                ),
            )
        for h in A:
            r, k = h.labels
            b.set(g, h, lsum([A(r, j, coef=I * (i == k)), A(r, i, coef=-I * (j == k))]))
    t = b.build()
    return AlgebraCase(
        id=f"gca-d{d}",
        family="gca",
        table=t,
        params={"d": d},
        splits=[
            ("semidirect", _split(t), "semidirect"),
            ("graded_abelian_minus", _split(t), "graded_abelian_minus"),
        ],
        expected={"dims": (3 + d * (d - 1) // 2 + 3 * d, 0)},
    )


def _split(t):
    return SplitSpec.by_names(t, {"R", "J"})
