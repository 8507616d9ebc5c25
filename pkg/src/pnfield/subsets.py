"""Metrics, subset families, structure detection, and the small-subset
primitive-normal search.

Subsets materialize to sorted lists of integer-encoded elements, so scans and
"first witness" reports are deterministic.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import ConsistencyError, ResourceLimitError
from .field import FieldCtx
from .polyfq import Poly
from .seeds import rng_for

DEFAULT_BUDGET = 2**24


def hamming_weight(r: Poly) -> int:
    """Number of nonzero coefficients."""
    return sum(1 for c in r if c)


def height(ctx: FieldCtx, r: Poly) -> int:
    """Max centered-representative magnitude over all F_p coordinates.

    Representatives live in (-p/2, p/2]: coordinate c maps to c when
    c <= p/2 and c - p otherwise.
    """
    half = ctx.p // 2
    best = 0
    for coeff in r:
        for d in ctx.fq.digits(coeff):
            centered = d if d <= half else d - ctx.p
            best = max(best, abs(centered))
    return best


def poly_distance_weight(ctx: FieldCtx, r: Poly, s: Poly) -> int:
    from .polyfq import poly_sub

    return hamming_weight(poly_sub(ctx.fq, s, r))


def poly_distance_height(ctx: FieldCtx, r: Poly, s: Poly) -> int:
    from .polyfq import poly_sub

    return height(ctx, poly_sub(ctx.fq, s, r))


def enumerate_hamming_ball(ctx: FieldCtx, center: int, radius: int) -> list[int]:
    """{center + c : c in F_p with bit-weight(c) <= radius}, sorted.

    Includes c = 0, so the center is always a member.  Radii beyond the
    bit-length of p saturate at center + F_p.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    out = set()
    for c in range(ctx.p):
        if bin(c).count("1") <= radius:
            out.add(ctx.add(center, ctx.embed_base(c % ctx.q)))
    return sorted(out)


def enumerate_height_box(ctx: FieldCtx, d: int, h: int) -> list[int]:
    """The family A_d(H): polynomials Σ a_i x^i of degree <= d with integer
    coefficients |a_i| <= H and gcd(a_0, ..., a_d) = 1, mapped into the field.

    Returns the deduplicated image, sorted.
    """
    if not 2 <= d < ctx.n:
        raise ValueError(f"require 2 <= d < n, got d={d}, n={ctx.n}")
    if h < 1:
        raise ValueError("height bound must be >= 1")
    out = set()
    tuple_count = (2 * h + 1) ** (d + 1)
    if tuple_count > DEFAULT_BUDGET:
        raise ResourceLimitError(f"height box of {tuple_count} tuples exceeds budget")
    rng = range(-h, h + 1)

    def rec(idx, acc, g):
        if idx > d:
            if g == 1:
                coords_vec = [a % ctx.p for a in acc] + [0] * (ctx.n - d - 1)
                out.add(ctx.encode([ctx.embed_base(c) for c in coords_vec]))
            return
        for a in rng:
            rec(idx + 1, acc + [a], math.gcd(g, abs(a)))

    rec(0, [], 0)
    return sorted(out)


def is_structured(ctx: FieldCtx, elems) -> tuple[bool, str | None]:
    """Classify a subset: a subfield (full root set of x^(q^d) - x for some
    d | n) or an F_p-subspace, possibly punctured at 0.

    Singletons are never structured: a lone element must stay admissible for
    size-1 threshold draws.  Any larger set whose union with 0 is closed
    under addition and F_p-scaling dodges the search the same way a subspace
    does and is flagged.
    """
    elems = set(elems)
    if not elems:
        raise ValueError("subset must be nonempty")
    for d in range(1, ctx.n + 1):
        if ctx.n % d:
            continue
        sub_order = ctx.q**d
        if len(elems) != sub_order:
            continue
        if all(ctx.pow(a, sub_order) == a for a in elems):
            return True, "subfield"
    if len(elems) == 1 and 0 not in elems:
        return False, None
    padded = elems | {0}
    for a in padded:
        for c in range(ctx.p):
            if ctx.mul(ctx.embed_base(c), a) not in padded:
                return False, None
        for b in padded:
            if ctx.add(a, b) not in padded:
                return False, None
    return True, "subspace"


@dataclass(frozen=True)
class SubsetSpec:
    """Declarative subset description: hammingBall, heightBox, or explicit."""

    kind: str
    center: int | None = None
    radius: int | None = None
    degree: int | None = None
    height: int | None = None
    elements: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("hammingBall", "heightBox", "explicit"):
            raise ValueError(f"unknown subset kind {self.kind!r}")

    @classmethod
    def from_json(cls, text: str, ctx: FieldCtx | None = None) -> "SubsetSpec":
        data = json.loads(text)
        kind = data.get("kind")
        if kind == "hammingBall":
            center = data.get("center", 0)
            if isinstance(center, str) and ctx is not None:
                center = ctx.parse_element(center)
            return cls(kind=kind, center=int(center), radius=int(data["H"]))
        if kind == "heightBox":
            return cls(kind=kind, degree=int(data["d"]), height=int(data["H"]))
        if kind == "explicit":
            elems = data["elements"]
            out = []
            for e in elems:
                if isinstance(e, str) and ctx is not None:
                    out.append(ctx.parse_element(e))
                else:
                    out.append(int(e))
            return cls(kind=kind, elements=tuple(out))
        raise ValueError(f"unknown subset kind {kind!r}")

    def to_json(self) -> str:
        if self.kind == "hammingBall":
            return json.dumps({"kind": self.kind, "center": self.center, "H": self.radius})
        if self.kind == "heightBox":
            return json.dumps({"kind": self.kind, "d": self.degree, "H": self.height})
        return json.dumps({"kind": self.kind, "elements": list(self.elements)})


def materialize(ctx: FieldCtx, spec: SubsetSpec, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Deduplicated, sorted member list of the described subset."""
    if spec.kind == "hammingBall":
        if ctx.p > budget:
            raise ResourceLimitError("hamming ball exceeds budget")
        return enumerate_hamming_ball(ctx, spec.center or 0, spec.radius)
    if spec.kind == "heightBox":
        return enumerate_height_box(ctx, spec.degree, spec.height)
    elems = sorted(set(spec.elements))
    if any(not 0 <= e < ctx.order for e in elems):
        raise ValueError("explicit elements out of range")
    if len(elems) > budget:
        raise ResourceLimitError("explicit subset exceeds budget")
    return elems


def threshold_size(ctx: FieldCtx, epsilon: float, multiplier: float = 1.0) -> int:
    """ceil(multiplier · log(q^n) · (loglog q^n)^(1+ε)), clamped to >= 1."""
    logqn = math.log(ctx.order)
    return max(1, math.ceil(multiplier * logqn * math.log(logqn) ** (1.0 + epsilon)))


@dataclass(frozen=True)
class SearchReport:
    field: str
    subset_size: int
    witnesses: tuple
    threshold_size: float
    hit: bool
    op_count: int

    def __post_init__(self):
        if self.hit != bool(self.witnesses):
            raise ConsistencyError("hit flag disagrees with the witness list")

    def json_dict(self) -> dict:
        return {
            "schema": "pnfield/1",
            "kind": "search",
            "field": self.field,
            "subsetSize": self.subset_size,
            "witnesses": list(self.witnesses),
            "thresholdSize": self.threshold_size,
            "hit": self.hit,
            "opCount": self.op_count,
        }


def search_primitive_normal(
    ctx: FieldCtx,
    spec: SubsetSpec,
    epsilon: float = 0.1,
    budget: int = DEFAULT_BUDGET,
    multiplier: float = 1.0,
) -> SearchReport:
    """Scan the subset in deterministic order; report every witness found,
    the subset size, and the threshold size at the given ε (scaled by the
    constant multiplier, default 1).

    The context's arithmetic-operation counter is sampled around the scan so
    complexity experiments can plot measured work.
    """
    members = materialize(ctx, spec, budget=budget)
    ops_before = ctx.op_count
    witnesses = tuple(a for a in members if a and ctx.is_primitive_normal(a))
    ops = ctx.op_count - ops_before
    threshold = multiplier * math.log(ctx.order) * math.log(math.log(ctx.order)) ** (1.0 + epsilon)
    return SearchReport(
        field=ctx.spec_string(),
        subset_size=len(members),
        witnesses=witnesses,
        threshold_size=threshold,
        hit=bool(witnesses),
        op_count=ops,
    )


def _draw_subset(ctx: FieldCtx, family: str, size: int, rng) -> list[int]:
    """One seeded nonstructured subset of the requested size from the family."""
    if size >= ctx.order:
        raise ValueError("subset size must be below the field order")
    if family == "uniform":
        return sorted(rng.sample(range(1, ctx.order), size))
    if family == "hammingBall":
        center = rng.randrange(ctx.order)
        radius = 0
        ball = enumerate_hamming_ball(ctx, center, radius)
        while len(ball) < size and radius < ctx.p.bit_length():
            radius += 1
            ball = enumerate_hamming_ball(ctx, center, radius)
        if len(ball) < size:
            # p too small for the ball alone; pad deterministically
            pad = [a for a in range(ctx.order) if a not in set(ball)]
            ball = ball + pad[: size - len(ball)]
        return ball[:size]
    if family == "heightBox":
        if ctx.n < 3:
            raise ValueError("height boxes need n >= 3")
        # a degree-d box holds at most p^(d+1) - 1 distinct elements
        feasible = [d for d in range(2, ctx.n) if ctx.p ** (d + 1) - 1 >= size]
        if not feasible:
            raise ValueError("height box family cannot reach the requested size")
        d = rng.choice(feasible)
        h = 1
        box = enumerate_height_box(ctx, d, h)
        while len(box) < size and h < 4 * ctx.p:
            h += 1
            box = enumerate_height_box(ctx, d, h)
        if len(box) < size:
            raise ValueError("height box family cannot reach the requested size")
        start = rng.randrange(max(1, len(box) - size + 1))
        return box[start : start + size]
    raise ValueError(f"unknown family {family!r}")


def threshold_experiment(
    ctx: FieldCtx,
    family: str,
    epsilon: float,
    trials: int,
    seed: int,
    multiplier: float = 1.0,
) -> dict:
    """Hit statistics for seeded nonstructured subsets at the threshold size.

    Returns per-trial rows (trial, size, hit, witnessCount), the hit
    fraction, witness-count extremes, and the smallest power-of-two size that
    hit on every trial in a doubling search.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    size = threshold_size(ctx, epsilon, multiplier)
    rows = []
    witness_counts = []
    for trial in range(trials):
        rng = rng_for(seed, "threshold", ctx.spec_string(), family, trial)
        subset = _draw_subset(ctx, family, size, rng)
        structured, _ = is_structured(ctx, subset)
        attempts = 0
        while structured and attempts < 16:
            subset = _draw_subset(ctx, family, size, rng)
            structured, _ = is_structured(ctx, subset)
            attempts += 1
        count = sum(1 for a in subset if a and ctx.is_primitive_normal(a))
        witness_counts.append(count)
        rows.append({"trial": trial, "size": len(subset), "hit": count > 0, "witnessCount": count})
    hits = sum(1 for r in rows if r["hit"])
    always_hit_size = None
    s = 1
    while s < ctx.order:
        all_hit = True
        for trial in range(trials):
            rng = rng_for(seed, "doubling", ctx.spec_string(), family, s, trial)
            subset = _draw_subset(ctx, family, min(s, ctx.order - 1), rng)
            if not any(a and ctx.is_primitive_normal(a) for a in subset):
                all_hit = False
                break
        if all_hit:
            always_hit_size = s
            break
        s *= 2
    return {
        "schema": "pnfield/1",
        "kind": "threshold-experiment",
        "field": ctx.spec_string(),
        "family": family,
        "epsilon": epsilon,
        "trials": trials,
        "thresholdSize": size,
        "rows": rows,
        "hitFraction": hits / trials,
        "minWitnessCount": min(witness_counts),
        "meanWitnessCount": sum(witness_counts) / trials,
        "alwaysHitSize": always_hit_size,
    }


def experiment_to_csv(report: dict) -> str:
    """Per-trial rows in the fixed column order trial,size,hit,witnessCount."""
    lines = ["trial,size,hit,witnessCount"]
    for row in report["rows"]:
        lines.append(f"{row['trial']},{row['size']},{row['hit']},{row['witnessCount']}")
    return "\n".join(lines) + "\n"
