"""Case registry: stable identifiers for every built table, pipeline and dimension report."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field

from ._util import AlgebraCase, Family
from .d21 import build_d21_extended
from .gca import build_gca
from .golden import (
    RepMatrix,
    build_expected_gca3_susy,
    build_n1_dictionary,
    coset_dim_report,
    rep_matrix,
)
from .osp import build_osp12_extended, build_osp_n2, build_su111_extended
from .su22 import UnsupportedN, build_su22_2N, build_weyl_map

__all__ = [
    "REGISTRY",
    "AlgebraCase",
    "CaseEntry",
    "Family",
    "RepMatrix",
    "UnknownCase",
    "UnsupportedN",
    "build_d21_extended",
    "build_expected_gca3_susy",
    "build_gca",
    "build_n1_dictionary",
    "build_osp12_extended",
    "build_osp_n2",
    "build_su111_extended",
    "build_su22_2N",
    "build_weyl_map",
    "case_ids",
    "coset_dim_report",
    "get_case",
    "rep_matrix",
]


class UnknownCase(KeyError):
    pass


@dataclass(frozen=True)
class CaseEntry:
    """kind: "table" (fixed table), "parametric" (constants fixed by Jacobi),
    "pipeline" (contraction), "coset" (dimension bookkeeping)."""

    id: str
    kind: str
    anchor: str
    build: Callable[..., object] | None = None
    dims: tuple | None = None
    fixed: Callable[[dict], AlgebraCase] | None = None
    extra: dict = field(default_factory=dict)


def _gca_dims(d: int) -> tuple:
    return (3 + d * (d - 1) // 2 + 3 * d, 0)


def _entries() -> list[CaseEntry]:
    out = []
    for d in range(1, 6):
        out.append(
            CaseEntry(f"gca-d{d}", "table", f"GCA in d = {d}: o(2,1) + o({d}) acting on abelian A_(r,i)", lambda d=d: build_gca(d), _gca_dims(d))
        )
    out += [
        CaseEntry(
            "d21-ext",
            "parametric",
            "D(2,1;alpha) with the abelian extension Q-, A_(ab,alpha beta), A0; alpha, beta, gamma fixed by Jacobi",
            build_d21_extended,
            (19, 16),
            lambda s: build_d21_extended(s["alpha"], beta=s["beta"], gamma=s["gamma"]),
        ),
        CaseEntry(
            "d21-ext-swapped",
            "parametric",
            "D(2,1;alpha) extension carried by the internal su(2): -(1 + alpha) = 1",
            lambda: build_d21_extended(swap_su2=True),
            (19, 16),
            lambda s: build_d21_extended(s["alpha"], swap_su2=True, beta=s["beta"], gamma=s["gamma"]),
        ),
        CaseEntry(
            "osp12-ext",
            "parametric",
            "d = 1: osp(1|2) with the abelian extension {Q+_a, Q-_b} = beta A_ab",
            build_osp12_extended,
            (6, 4),
            lambda s: build_osp12_extended(s["beta"]),
        ),
    ]
    for n in (1, 2, 3, 4):
        out.append(
            CaseEntry(
                f"ospN2-{n}", "table", f"osp({n}|2) base superalgebra of the d = 1 diagonal constructions", lambda n=n: build_osp_n2(n), (3 + n * (n - 1) // 2, 2 * n)
            )
        )
    out.append(
        CaseEntry(
            "su111-ext",
            "parametric",
            "d = 2: su(1,1|1) + u(1) with the abelian extension; beta, gamma fixed by Jacobi",
            build_su111_extended,
            (11, 8),
            lambda s: build_su111_extended(s["beta"], s["gamma"]),
        )
    )
    for N in (1, 2):
        out.append(
            CaseEntry(
                f"su22-n{N}",
                "table",
                f"su(2,2|{2 * N}) relativistic superconformal algebra, Weyl-spinor basis",
                lambda N=N: build_su22_2N(N),
                (15 + 4 * N * N, 16 * N),
                extra={"N": N},
            )
        )
    for N in (1, 2):
        out.append(
            CaseEntry(
                f"gca3-susy-n{N}-golden",
                "table",
                f"N = {N} extended SUSY GCA in d = 3, transcribed relations",
                lambda N=N: build_expected_gca3_susy(N),
                (15 + 4 * N * N, 16 * N),
                extra={"N": N},
            )
        )
    coset = {
        "d2": ("OSp(4|2N) over SU(1,1|N) + U(1)", 2),
        "d4": ("F(4;2) over OSp(4*|2): 8 fermionic and 15 bosonic abelian charges", 1),
        "d5": ("OSp(8*|4n) over OSp(4*|4n): 16n fermionic and 22 bosonic abelian charges", 1),
    }
    for k, (anchor, n) in coset.items():
        out.append(CaseEntry(f"coset-dims-{k}", "coset", anchor, lambda k=k, n=n: coset_dim_report(k, n), extra={"n": n}))
    from ..contract import PIPELINES

    for name, desc in PIPELINES.items():
        out.append(CaseEntry(name, "pipeline", desc))
    return sorted(out, key=lambda e: e.id)


REGISTRY: dict[str, CaseEntry] = {e.id: e for e in _entries()}


def case_ids() -> list[str]:
    return sorted(REGISTRY)


def get_case(case_id: str) -> CaseEntry:
    try:
        return REGISTRY[case_id]
    except KeyError:
        raise UnknownCase(case_id) from None
