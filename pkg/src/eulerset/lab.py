"""Empirical checks of the coefficient conjecture and the limit
S(k,n) / (phi(n) n^k) -> 1/(k+1).

Nothing here asserts the conjecture. Every routine returns a report whose
verdict is decided by exact arithmetic on the data.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import InputError
from .numbers import euler_phi, factorize, format_rational, omega, radical
from .powersums import (
    coefficient_vector,
    powersum_closed,
    powersum_general,
    totatives,
)

BASIS_NAMES = ("1", "(-1)^w", "R(n)", "(-1)^w*R(n)")
DEFAULT_TRAINING = (2, 3, 6, 10)


def basis_row(n: int) -> tuple[int, int, int, int]:
    f = factorize(n)
    s = (-1) ** omega(f)
    R = radical(f)
    return (1, s, R, s * R)


# -- parallel helper ----------------------------------------------------------

def _chunks(items: Sequence, parts: int) -> list[list]:
    size = max(1, -(-len(items) // parts))
    return [list(items[i : i + size]) for i in range(0, len(items), size)]


def _map_sorted(fn: Callable[[list], list], items: Sequence, jobs: int) -> list:
    """Apply ``fn`` to contiguous chunks of ``items`` and concatenate, sorted."""
    if not items:
        return []
    if jobs <= 1:
        out = fn(list(items))
    else:
        out = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(fn, _chunks(items, jobs * 4)):
                out.extend(part)
    out.sort(key=lambda row: row[0])
    return out


# -- ansatz fitting -------------------------------------------------------------

class Verdict(str, enum.Enum):
    EXACT_FIT = "exact_fit"
    COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class Witness:
    n: int
    observed: Fraction
    fitted: Fraction

    def to_dict(self) -> dict:
        return {"n": str(self.n), "observed": format_rational(self.observed),
                "fitted": format_rational(self.fitted)}


@dataclass(frozen=True)
class AnsatzFit:
    k: int
    i: int
    weights: tuple[Fraction, ...] | None
    verdict: Verdict
    training: tuple[int, ...]
    validated: int
    witnesses: tuple[Witness, ...] = ()
    basis: tuple[str, ...] = BASIS_NAMES

    @property
    def witness(self) -> Witness | None:
        return self.witnesses[0] if self.witnesses else None

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "i": self.i,
            "basis": list(self.basis),
            "weights": None if self.weights is None else [format_rational(w) for w in self.weights],
            "verdict": self.verdict.value,
            "training": [str(n) for n in self.training],
            "validated": self.validated,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


def _solve(rows: list[tuple[int, ...]], rhs: list[Fraction]) -> tuple[Fraction, ...]:
    """Gauss-Jordan over the rationals for a square nonsingular system."""
    m = [[Fraction(v) for v in row] + [b] for row, b in zip(rows, rhs)]
    size = len(m)
    for col in range(size):
        piv = next(r for r in range(col, size) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        lead = m[col][col]
        m[col] = [v / lead for v in m[col]]
        for r in range(size):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return tuple(row[-1] for row in m)


def _rank(rows: list[tuple[int, ...]]) -> int:
    m = [[Fraction(v) for v in row] for row in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(rank + 1, len(m)):
            if m[r][col] != 0:
                factor = m[r][col] / m[rank][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _coefficient(k: int, i: int, n: int) -> Fraction:
    return coefficient_vector(k, n).c[i - 1]


@dataclass(frozen=True)
class _CoefficientRows:
    # picklable worker for _map_sorted
    k: int
    i: int

    def __call__(self, ns: list[int]) -> list[tuple[int, Fraction, tuple[int, ...]]]:
        return [(n, _coefficient(self.k, self.i, n), basis_row(n)) for n in ns]


def ansatz_fit(k: int, i: int, training: Iterable[int] | None = None,
               validation: Iterable[int] = (), *, max_witnesses: int | None = None,
               jobs: int = 1) -> AnsatzFit:
    """Fit c_i(n) = w1 + w2 (-1)^w + w3 R(n) + w4 (-1)^w R(n) exactly, then validate.

    The four weights come from the first linearly independent training rows
    (ascending n). Every other training and validation n is then checked;
    failures are collected as witnesses, smallest n first.
    """
    if k < 1 or not 1 <= i <= k:
        raise InputError(f"coefficient index must satisfy 1 <= i <= k, got k={k}, i={i}")
    train = sorted(set(DEFAULT_TRAINING if training is None else training))
    valid = sorted(set(validation))
    if any(n < 2 for n in train + valid):
        raise InputError("all n must be >= 2")
    overlap = set(train) & set(valid)
    if overlap:
        raise InputError(f"training and validation overlap at {sorted(overlap)}")

    rows = _CoefficientRows(k, i)(train)
    chosen: list[tuple[int, Fraction, tuple[int, ...]]] = []
    for row in rows:
        if _rank([r[2] for r in chosen] + [row[2]]) > len(chosen):
            chosen.append(row)
        if len(chosen) == 4:
            break
    if len(chosen) < 4:
        raise InputError(
            f"training set {train} gives rank {len(chosen)} < 4 for basis {BASIS_NAMES}; "
            "supply at least two n with omega even and two with omega odd, "
            "with distinct radicals within each parity"
        )
    weights = _solve([r[2] for r in chosen], [r[1] for r in chosen])

    checks = [r for r in rows if r not in chosen]
    checks += _map_sorted(_CoefficientRows(k, i), valid, jobs)
    witnesses = []
    for n, observed, b in sorted(checks, key=lambda r: r[0]):
        fitted = sum(w * x for w, x in zip(weights, b))
        if fitted != observed:
            witnesses.append(Witness(n, observed, fitted))
            if max_witnesses is not None and len(witnesses) >= max_witnesses:
                break
    verdict = Verdict.COUNTEREXAMPLE if witnesses else Verdict.EXACT_FIT
    return AnsatzFit(k, i, weights, verdict, tuple(train), len(checks), tuple(witnesses))


def compare_across_k(ks: Iterable[int], i: int, training: Iterable[int] | None = None,
                     validation: Iterable[int] = ()) -> dict:
    """Fit the same coefficient index for several k and report weight differences.

    Only consecutive pairs where both fits are exact get a difference entry;
    the report does not try to decide whether the dependence on k is linear.
    """
    fits = {k: ansatz_fit(k, i, training, validation) for k in sorted(set(ks)) if k >= i}
    diffs = []
    exact = [k for k, f in fits.items() if f.verdict is Verdict.EXACT_FIT]
    for a, b in zip(exact, exact[1:]):
        delta = [format_rational(y - x) for x, y in zip(fits[a].weights, fits[b].weights)]
        diffs.append({"from_k": a, "to_k": b, "delta": delta})
    return {"i": i, "fits": [f.to_dict() for f in fits.values()], "differences": diffs}


# -- ratio reports --------------------------------------------------------------

@dataclass(frozen=True)
class RatioEntry:
    n: int
    ratio: Fraction
    deviation: Fraction


@dataclass(frozen=True)
class RatioReport:
    k: int
    entries: tuple[RatioEntry, ...]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "limit": format_rational(Fraction(1, self.k + 1)),
            "entries": [{"n": str(e.n), "ratio": format_rational(e.ratio),
                         "deviation": format_rational(e.deviation)} for e in self.entries],
        }


@dataclass(frozen=True)
class _RatioRows:
    k: int

    def __call__(self, ns: list[int]) -> list[tuple[int, Fraction, Fraction]]:
        out = []
        target = Fraction(1, self.k + 1)
        for n in ns:
            f = factorize(n)
            ratio = Fraction(powersum_general(self.k, f).value, euler_phi(f) * n**self.k)
            out.append((n, ratio, abs(ratio - target)))
        return out


def ratio_report(k: int, n_list: Iterable[int], *, jobs: int = 1) -> RatioReport:
    """Exact S(k,n) / (phi(n) n^k) and its distance from 1/(k+1), sorted by n."""
    if k < 0:
        raise InputError("k must be >= 0")
    ns = sorted(set(n_list))
    if any(n < 2 for n in ns):
        raise InputError("ratio report needs n >= 2")
    rows = _map_sorted(_RatioRows(k), ns, jobs)
    return RatioReport(k, tuple(RatioEntry(*r) for r in rows))


# -- cross-method verification ------------------------------------------------------

@dataclass(frozen=True)
class VerifySummary:
    k_max: int
    n_max: int
    checks: int
    mismatches: tuple[dict, ...] = field(default=())

    def to_dict(self) -> dict:
        return {"k_max": self.k_max, "n_max": self.n_max, "checks": self.checks,
                "mismatch_count": len(self.mismatches), "mismatches": list(self.mismatches)}


@dataclass(frozen=True)
class _VerifyRows:
    k_max: int

    def __call__(self, ns: list[int]) -> list[tuple[int, int, list[dict]]]:
        out = []
        for n in ns:
            f = factorize(n)
            tots = totatives(n)
            bad = []
            for k in range(self.k_max + 1):
                values = {"bruteforce": sum(a**k for a in tots),
                          "general": powersum_general(k, f).value}
                if k <= 3:
                    values["closed"] = powersum_closed(k, f).value
                if k == 0:
                    values["phi"] = euler_phi(f)
                if len(set(values.values())) != 1:
                    bad.append({"k": k, "n": n, **{m: str(v) for m, v in values.items()}})
            out.append((n, self.k_max + 1, bad))
        return out


def verify_range(k_max: int, n_max: int, *, jobs: int = 1) -> VerifySummary:
    """Compare every available method against brute force for k <= k_max, 2 <= n <= n_max.

    One check is one (k, n) pair. The summary does not depend on ``jobs``.
    """
    if k_max < 0:
        raise InputError("k_max must be >= 0")
    rows = _map_sorted(_VerifyRows(k_max), range(2, n_max + 1), jobs)
    checks = sum(r[1] for r in rows)
    mismatches = tuple(m for r in rows for m in r[2])
    return VerifySummary(k_max, n_max, checks, mismatches)
