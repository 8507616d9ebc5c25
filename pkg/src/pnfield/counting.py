"""Exhaustive primitive/normal/primitive-normal counts, density records, and
the Φ_q(x^n - 1) lower-bound corollaries.

The marginal counts are enforced against the closed formulas: the number of
primitive elements is φ(q^n - 1) and the number of normal elements is
Φ_q(x^n - 1), exactly.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .errors import ConsistencyError, ResourceLimitError
from .field import FieldCtx, get_field
from .numtheory import euler_phi
from .polyfq import factor_x_n_minus_1, poly_phi

DEFAULT_BUDGET = 2**24

SWEEP_COLUMNS = ["q", "k", "n", "numPrimitive", "numNormal", "numPN", "predicted", "delta"]


@dataclass(frozen=True)
class DensityRecord:
    """Exact counts for one field plus the heuristic product prediction.

    predicted = φ(q^n-1)·Φ_q(x^n-1)/q^n (the average-formula normalization);
    delta is the observed correction numPN / predicted.  density_q2n carries
    the alternative φ·Φ/q^(2n) normalization.
    """

    q: int
    k: int
    n: int
    num_primitive: int
    num_normal: int
    num_primitive_normal: int
    predicted: float
    delta: float
    density_q2n: float

    def __post_init__(self):
        if not 0 <= self.num_primitive_normal <= min(self.num_primitive, self.num_normal):
            raise ConsistencyError("primitive-normal count outside its marginals")

    def csv_row(self) -> list:
        return [
            self.q,
            self.k,
            self.n,
            self.num_primitive,
            self.num_normal,
            self.num_primitive_normal,
            repr(self.predicted),
            repr(self.delta),
        ]

    def json_dict(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "n": self.n,
            "numPrimitive": self.num_primitive,
            "numNormal": self.num_normal,
            "numPN": self.num_primitive_normal,
            "predicted": self.predicted,
            "delta": self.delta,
            "densityQ2n": self.density_q2n,
        }


def exact_counts(ctx: FieldCtx, budget: int = DEFAULT_BUDGET) -> DensityRecord:
    """Count primitive, normal and primitive-normal elements exhaustively."""
    if ctx.order > budget:
        raise ResourceLimitError(
            f"enumeration of {ctx.order} elements exceeds budget {budget}"
        )
    ctx.ensure_tables()
    num_prim = 0
    num_norm = 0
    num_pn = 0
    for a in range(1, ctx.order):
        prim = ctx.is_primitive(a)
        norm = ctx.is_normal(a)
        num_prim += prim
        num_norm += norm
        num_pn += prim and norm
    phi_m = euler_phi(ctx.order - 1)
    phi_poly = poly_phi(ctx.add_factorization)
    if num_prim != phi_m:
        raise ConsistencyError(f"primitive count {num_prim} != φ = {phi_m}")
    if num_norm != phi_poly:
        raise ConsistencyError(f"normal count {num_norm} != Φ = {phi_poly}")
    predicted = phi_m * phi_poly / ctx.order
    return DensityRecord(
        q=ctx.q,
        k=ctx.k,
        n=ctx.n,
        num_primitive=num_prim,
        num_normal=num_norm,
        num_primitive_normal=num_pn,
        predicted=predicted,
        delta=num_pn / predicted,
        density_q2n=phi_m * phi_poly / ctx.order**2,
    )


def multiplicative_order_census(ctx: FieldCtx) -> dict[int, int]:
    """#{α : multiplicative order d} for every divisor d of q^n - 1."""
    census: dict[int, int] = {}
    for a in range(1, ctx.order):
        d = ctx.multiplicative_order(a)
        census[d] = census.get(d, 0) + 1
    return census


def additive_order_census(ctx: FieldCtx) -> dict[tuple, int]:
    """#{α : additive order d(x)} for every monic divisor d(x) of x^n - 1."""
    census: dict[tuple, int] = {}
    for a in range(ctx.order):
        d = ctx.additive_order(a)
        census[d] = census.get(d, 0) + 1
    return census


@dataclass(frozen=True)
class PhiPolyBoundReport:
    q: int
    n: int
    ratio: float
    log_bound_ok: bool
    loglog_bound_ok: bool | None
    prob_expansion_residual: float | None
    prob_expansion_bound: float | None


def phi_poly_lower_bound_check(q: int, n: int) -> PhiPolyBoundReport:
    """Φ_q(x^n-1)/(q^n-1) against the 1/(5·log q^n) lower bound.

    The loglog variant applies for q >= 8 only.  When n | q - 1 the exact
    ratio is compared against the 1 - n/q expansion with an n(n-1)/q²
    residual budget (reported, never asserted).
    """
    if q < 2 or n < 2:
        raise ValueError("phi_poly_lower_bound_check requires q >= 2, n >= 2")
    fact = factor_x_n_minus_1(q, n)
    phi = poly_phi(fact)
    qn = q**n
    ratio = phi / (qn - 1)
    log_ok = ratio >= 1.0 / (5.0 * math.log(qn))
    loglog_ok = ratio >= 1.0 / (5.0 * math.log(math.log(qn))) if q >= 8 else None
    residual = None
    residual_bound = None
    if (q - 1) % n == 0:
        residual = abs(ratio - (1.0 - n / q))
        residual_bound = n * (n - 1) / q**2
    return PhiPolyBoundReport(
        q=q,
        n=n,
        ratio=ratio,
        log_bound_ok=log_ok,
        loglog_bound_ok=loglog_ok,
        prob_expansion_residual=residual,
        prob_expansion_bound=residual_bound,
    )


def density_sweep(specs, budget: int = DEFAULT_BUDGET) -> list[DensityRecord]:
    """Exact counts for every (p, k, n) in specs, sorted by (q, n, k)."""
    records = []
    for p, k, n in specs:
        ctx = get_field(p, k, n)
        records.append(exact_counts(ctx, budget=budget))
    records.sort(key=lambda r: (r.q, r.n, r.k))
    return records


def sweep_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for rec in records:
        writer.writerow(rec.csv_row())
    return buf.getvalue()


def sweep_to_json(records) -> str:
    payload = {"schema": "pnfield/1", "kind": "sweep", "rows": [r.json_dict() for r in records]}
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
