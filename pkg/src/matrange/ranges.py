"""Decision procedure for solvability of f(X) = A over M_n(C) and the
per-dimension range classifier.

The scalar reduction: f(X) = A is solvable iff every eigenvalue a of A
admits a preimage structure compatible with A's Jordan blocks at a. A
Jordan block J_K(z0) of X, with z0 a root of f - a of multiplicity m, maps
to Jordan structure split_pattern(K, m) at a. Solvability at a TRV a is
therefore a partition-cover question: can A's Segre partition at a be
written as an exact multiset union of split patterns drawn from the
available preimage multiplicities?

split_pattern's closed form is anchored at both extremes (m = 1 gives one
full block; m >= K gives all-trivial blocks) and is permanently guarded by
the brute-force rank oracle split_pattern_oracle: if the two ever disagree,
the oracle wins and the build fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InternalInvariantError, PreconditionError, WitnessUnavailable
from .functions import (
    EntireFunction,
    RamificationProfile,
    TheoremCase,
    ramification_profile,
    validate,
)
from .matrices import (
    MatrixQi,
    SegrePartition,
    apply_poly,
    char_poly,
    is_in_E,
    jordan_decomposition,
    segre_at,
)
from .polynomials import Poly, gaussian_rational_roots
from .scalars import GaussianRational, Qi, render_scalar

__all__ = [
    "SplitPattern",
    "split_pattern",
    "split_pattern_oracle",
    "coverable",
    "BlockingReason",
    "BlockingInfo",
    "CoverPlanEntry",
    "RangeVerdict",
    "decide_range",
    "build_witness",
    "describe_range",
    "nontrivial_partitions",
]


@dataclass(frozen=True)
class SplitPattern:
    source_size: int  # K
    root_multiplicity: int  # m
    parts: tuple  # sorted descending, zero sizes discarded


def split_pattern(K: int, m: int) -> SplitPattern:
    """Jordan block sizes at a of f(J_K(z0)) when z0 is a root of f - a of
    multiplicity m: (K mod m) blocks of size ceil(K/m) and (m - K mod m)
    blocks of size floor(K/m), zero sizes discarded."""
    if K < 1 or m < 1:
        raise PreconditionError("split_pattern needs K >= 1 and m >= 1")
    q, r = divmod(K, m)
    parts = [q + 1] * r + [q] * (m - r)
    return SplitPattern(K, m, tuple(sorted((p for p in parts if p > 0), reverse=True)))


def split_pattern_oracle(K: int, m: int, variant: str = "simple") -> tuple:
    """Independent rank-based computation of the split pattern.

    variant "simple": f = z^m, block J_K(0), value 0 (root 0, multiplicity m).
    variant "two_factor": f = (z-1)^m (z+2), block J_K(1), value 0 (root 1 of
    multiplicity m plus an extra simple factor away from it)."""
    if variant == "simple":
        f = Poly.monomial(m)
        block = MatrixQi.jordan_block(K, 0)
    elif variant == "two_factor":
        f = Poly.from_roots([Qi(1)] * m) * Poly((Qi(2), Qi(1)))
        block = MatrixQi.jordan_block(K, 1)
    else:
        raise PreconditionError(f"unknown oracle variant {variant!r}")
    return segre_at(apply_poly(f, block), 0).parts


# -- partition covers ----------------------------------------------------------


def _multiset_subtract(target, parts):
    """target minus parts as descending tuples, or None if not a sub-multiset."""
    remaining = list(target)
    for p in parts:
        try:
            remaining.remove(p)
        except ValueError:
            return None
    return tuple(remaining)


def coverable(target, multiplicities, simple_available=False, unlimited_reuse=True):
    """Express `target` (a partition: multiset of block sizes) as an exact
    multiset union of split patterns whose root multiplicities come from
    `multiplicities` (all >= 2), plus multiplicity 1 if `simple_available`.

    Returns a sorted list of (K, m), or None when no cover exists (membership
    of the partition in S^f_a). Each multiplicity may be reused freely: each
    use is a distinct Jordan block of X, and distinct blocks may share the
    same scalar root.
    """
    target = tuple(sorted(target, reverse=True))
    if any(p < 1 for p in target):
        raise PreconditionError("partition parts must be >= 1")
    options = sorted(set(multiplicities) | ({1} if simple_available else set()))
    if any(m < 2 for m in multiplicities):
        raise PreconditionError("preimage multiplicities in M must be >= 2")
    if not unlimited_reuse:
        raise PreconditionError("consumable multiplicity pools are not supported")
    memo = {}

    def search(rest):
        if not rest:
            return []
        if rest in memo:
            return memo[rest]
        p = rest[0]
        # the largest remaining part must be the largest part of some pattern,
        # which pins ceil(K/m) = p
        moves = sorted(
            (K, m) for m in options for K in range(m * (p - 1) + 1, m * p + 1)
        )
        result = None
        for K, m in moves:
            rem = _multiset_subtract(rest, split_pattern(K, m).parts)
            if rem is None:
                continue
            tail = search(rem)
            if tail is not None:
                result = [(K, m)] + tail
                break
        memo[rest] = result
        return result

    cover = search(target)
    return None if cover is None else sorted(cover)


def nontrivial_partitions(n: int):
    """All partitions of every total 1..n that contain a part >= 2, i.e. the
    Segre partitions corresponding to membership in S_a for dimension n."""
    out = []

    def gen(total, largest, acc):
        if total == 0:
            if any(p >= 2 for p in acc):
                out.append(tuple(acc))
            return
        for p in range(min(total, largest), 0, -1):
            gen(total - p, p, acc + [p])

    for total in range(1, n + 1):
        gen(total, total, [])
    return out


# -- verdicts ------------------------------------------------------------------


class BlockingReason(Enum):
    OMITTED_EIGENVALUE = "omitted_eigenvalue"
    UNCOVERABLE_PARTITION = "uncoverable_partition"


@dataclass(frozen=True)
class BlockingInfo:
    value: GaussianRational
    reason: BlockingReason
    partition: SegrePartition


@dataclass(frozen=True)
class CoverPlanEntry:
    eigenvalue: GaussianRational
    preimage: str  # rendered root, or a symbolic description
    source_size: int  # K
    root_multiplicity: int  # m
    parts: tuple


@dataclass(frozen=True)
class RangeVerdict:
    solvable: bool
    theorem_case: TheoremCase
    blocking: BlockingInfo | None = None
    cover_plan: tuple | None = None
    witness: MatrixQi | None = None

    def render(self):
        out = {"solvable": self.solvable, "case": self.theorem_case.value}
        if self.blocking is not None:
            out["blocking"] = {
                "value": render_scalar(self.blocking.value),
                "reason": self.blocking.reason.value,
                "partition": list(self.blocking.partition.parts),
            }
        if self.cover_plan is not None:
            out["cover_plan"] = [
                {
                    "eigenvalue": render_scalar(e.eigenvalue),
                    "preimage": e.preimage,
                    "K": e.source_size,
                    "m": e.root_multiplicity,
                    "parts": list(e.parts),
                }
                for e in self.cover_plan
            ]
        if self.witness is not None:
            out["witness"] = self.witness.render()
        return out


def _trv_preimage_descriptor(f: EntireFunction, value, m: int) -> str:
    """Rendered root of multiplicity m when one is known in Q(i), else symbolic."""
    if f.kind == "polynomial":
        for r in gaussian_rational_roots(f.poly.shift(value)):
            if r.multiplicity == m:
                return render_scalar(r.root)
        return f"root of multiplicity {m} outside Q(i)"
    if f.kind == "exp_poly" and value == f.v:
        for r in gaussian_rational_roots(f.poly):
            if r.multiplicity == m:
                return render_scalar(r.root)
        return f"root of multiplicity {m} outside Q(i)"
    return f"critical preimage of multiplicity {m}"


def _simple_preimage_descriptor(f: EntireFunction, value) -> str:
    if f.kind == "polynomial":
        for r in gaussian_rational_roots(f.poly.shift(value)):
            if r.multiplicity == 1:
                return render_scalar(r.root)
        return "simple root outside Q(i)"
    return "simple preimage (transcendental)"


def decide_range(f: EntireFunction, a: MatrixQi) -> RangeVerdict:
    """Theorem-case classification plus solvability of f(X) = A.

    The verdict never needs A's full spectrum: only Jordan structure at the
    function's finitely many special values, which all lie in Q(i)."""
    profile = validate(f)
    case = profile.theorem_case
    for v in profile.omitted_values:
        if is_in_E(a, v):
            return RangeVerdict(
                False, case, BlockingInfo(v, BlockingReason.OMITTED_EIGENVALUE, segre_at(a, v))
            )
    plan = []
    for entry in profile.trv_entries:
        partition = segre_at(a, entry.value)
        if partition.is_empty():
            continue
        cover = coverable(partition.parts, set(entry.multiplicity_multiset))
        if cover is None:
            return RangeVerdict(
                False,
                case,
                BlockingInfo(entry.value, BlockingReason.UNCOVERABLE_PARTITION, partition),
            )
        for K, m in cover:
            plan.append(
                CoverPlanEntry(
                    entry.value,
                    _trv_preimage_descriptor(f, entry.value, m),
                    K,
                    m,
                    split_pattern(K, m).parts,
                )
            )
    # non-special eigenvalues never block; list the ones visible over Q(i)
    special = set(profile.omitted_values) | {e.value for e in profile.trv_entries}
    for r in gaussian_rational_roots(char_poly(a)):
        if r.root in special:
            continue
        for p in segre_at(a, r.root).parts:
            plan.append(
                CoverPlanEntry(r.root, _simple_preimage_descriptor(f, r.root), p, 1, (p,))
            )
    return RangeVerdict(True, case, cover_plan=tuple(plan))


# -- witness construction ------------------------------------------------------


def _roots_by_multiplicity(p: Poly):
    """{multiplicity: [roots in canonical order]} for Q(i) roots of p."""
    by_mult = {}
    for r in gaussian_rational_roots(p):
        by_mult.setdefault(r.multiplicity, []).append(r.root)
    for roots in by_mult.values():
        roots.sort(key=lambda z: z.sort_key())
    return by_mult


def build_witness(f: EntireFunction, a: MatrixQi, verdict: RangeVerdict | None = None) -> MatrixQi:
    """Exact X with f(X) = A, for polynomial f and solvable A with Q(i)
    spectrum and Q(i) preimage roots of the multiplicities the cover needs.

    Raises WitnessUnavailable when the verdict stands but no exact witness
    exists over Q(i); InternalInvariantError only on a bug."""
    if f.kind != "polynomial":
        raise PreconditionError("witness construction is polynomial-only")
    if verdict is None:
        verdict = decide_range(f, a)
    if not verdict.solvable:
        raise PreconditionError("no witness: the equation is unsolvable")
    try:
        dec_a = jordan_decomposition(a)
    except PreconditionError as e:
        raise WitnessUnavailable(
            "decision stands, but A's spectrum leaves Q(i)", {"cause": str(e)}
        ) from e
    # group A's Jordan blocks by eigenvalue, preserving canonical order
    partitions = {}
    order = []
    for lam, size in dec_a.ordering:
        if lam not in partitions:
            partitions[lam] = []
            order.append(lam)
        partitions[lam].append(size)
    blocks = []
    plan = []
    for lam in order:
        target = tuple(sorted(partitions[lam], reverse=True))
        by_mult = _roots_by_multiplicity(f.poly.shift(lam))
        cover = coverable(
            target,
            [m for m in by_mult if m >= 2],
            simple_available=1 in by_mult,
        )
        if cover is None:
            raise WitnessUnavailable(
                "decision stands, but the preimage roots available over Q(i) "
                f"cannot produce the Jordan structure at {render_scalar(lam)}",
                {"eigenvalue": render_scalar(lam), "partition": list(target)},
            )
        for K, m in cover:
            z0 = by_mult[m][0]  # canonical-least qualifying root
            blocks.append(MatrixQi.jordan_block(K, z0))
            plan.append((lam, z0, K, m))
    y = MatrixQi.block_diag(blocks)
    fy = apply_poly(f.poly, y)
    dec_f = jordan_decomposition(fy)
    if dec_f.j != dec_a.j:
        raise InternalInvariantError("f(Y) and A disagree on canonical Jordan form")
    s = dec_f.t
    x = dec_a.t @ s.inverse() @ y @ s @ dec_a.t_inverse()
    if apply_poly(f.poly, x) != a:
        raise InternalInvariantError("witness failed exact verification f(X) = A")
    return x


# -- per-dimension range description -------------------------------------------


@dataclass(frozen=True)
class RangeDescription:
    theorem_case: TheoremCase
    profile: RamificationProfile
    n: int
    uncoverable: tuple  # ((trv value, (partition, ...)), ...)

    def render(self):
        out = {
            "case": self.theorem_case.value,
            "n": self.n,
            "omitted_values": [render_scalar(v) for v in self.profile.omitted_values],
        }
        out["uncoverable_partitions"] = [
            {"value": render_scalar(v), "partitions": [list(p) for p in parts]}
            for v, parts in self.uncoverable
        ]
        return out


def describe_range(f: EntireFunction, n: int) -> RangeDescription:
    """Explicit description of the complement of the range inside M_n: for
    each TRV, the finite list of Jordan-structure partitions at that value
    that no f(X) can realize."""
    if n < 1:
        raise PreconditionError("dimension must be >= 1")
    profile = validate(f)
    uncoverable = []
    for entry in profile.trv_entries:
        bad = tuple(
            p
            for p in nontrivial_partitions(n)
            if coverable(p, set(entry.multiplicity_multiset)) is None
        )
        uncoverable.append((entry.value, bad))
    return RangeDescription(profile.theorem_case, profile, n, tuple(uncoverable))
