"""Iterated sumsets over Z, Z^d and Z/n, bound reports, and small extremal searches."""
from __future__ import annotations

import itertools
import math
import os
import random
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .arith import Enclosure, root_enclosure
from .macaulay import min_predecessor, successor
from .realbinom import DEFAULT_TOL, condensed_bounds, plunnecke_bounds, solve_x
from .theta import ThetaValue, theta_pow_from_root

__all__ = [
    "DEFAULT_CAP",
    "CapExceeded",
    "Ambient",
    "FiniteSet",
    "parse_set",
    "iterate_sumsets",
    "growth_bitmask",
    "BoundReport",
    "bound_report",
    "check_bounds",
    "SearchResult",
    "extremal_search",
]

DEFAULT_CAP = int(os.environ.get("SUMGROWTH_CAP", 10**7))


class CapExceeded(RuntimeError):
    """A sumset level outgrew the configured cardinality cap."""

    def __init__(self, message: str, partial: list[int]):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class Ambient:
    kind: str  # "Z", "Zd" or "Zn"
    param: int | None = None  # dimension for Zd, modulus for Zn

    def __post_init__(self):
        if self.kind not in ("Z", "Zd", "Zn"):
            raise ValueError(f"unknown ambient group {self.kind!r}")
        if self.kind != "Z" and (self.param is None or self.param < 1):
            raise ValueError(f"{self.kind} needs a positive parameter")

    @property
    def zero(self):
        return (0,) * self.param if self.kind == "Zd" else 0

    def add(self, a, b):
        if self.kind == "Z":
            return a + b
        if self.kind == "Zn":
            return (a + b) % self.param
        return tuple(u + v for u, v in zip(a, b))

    def normalize(self, a):
        if self.kind == "Zn":
            return a % self.param
        if self.kind == "Zd":
            a = tuple(a)
            if len(a) != self.param:
                raise ValueError(f"vector {a} is not in Z^{self.param}")
        return a

    def __str__(self) -> str:
        if self.kind == "Z":
            return "Z"
        if self.kind == "Zn":
            return f"Z/{self.param}"
        return f"Z^{self.param}"


@dataclass(frozen=True)
class FiniteSet:
    ambient: Ambient
    elements: tuple

    def __post_init__(self):
        elems = tuple(sorted({self.ambient.normalize(a) for a in self.elements}))
        if not elems:
            raise ValueError("A must be nonempty")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def of(cls, elements: Iterable, mod: int | None = None) -> "FiniteSet":
        elements = list(elements)
        if mod is not None:
            return cls(Ambient("Zn", mod), tuple(elements))
        if elements and isinstance(elements[0], tuple):
            return cls(Ambient("Zd", len(elements[0])), tuple(elements))
        return cls(Ambient("Z"), tuple(elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


_VEC = re.compile(r"\(([^()]*)\)")


def parse_set(text: str, mod: int | None = None) -> FiniteSet:
    """Parse ``0,1,5,8,49`` or ``(0,0),(1,2),(3,1)``."""
    text = text.strip()
    if not text:
        raise ValueError("empty set description")
    if "(" in text:
        if mod is not None:
            raise ValueError("--mod applies to integer sets only")
        vecs = _VEC.findall(text)
        if not vecs or _VEC.sub("", text).strip(" ,"):
            raise ValueError(f"malformed vector set: {text!r}")
        elems = [tuple(int(t) for t in v.split(",")) for v in vecs]
        if len({len(v) for v in elems}) != 1 or not elems[0]:
            raise ValueError("vectors must share a positive dimension")
        return FiniteSet.of(elems)
    try:
        elems = [int(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed integer set: {text!r}") from None
    return FiniteSet.of(elems, mod)


def iterate_sumsets(A: FiniteSet, H: int, cap: int | None = None, sets: bool = False):
    """(|0A|, |1A|, ..., |HA|) via (h+1)A = hA + A.

    With ``sets=True`` the sumsets themselves are returned as sorted tuples.
    """
    if H < 0:
        raise ValueError("H must be >= 0")
    cap = DEFAULT_CAP if cap is None else cap
    G = A.ambient
    level = {G.zero}
    sizes, levels = [1], [(G.zero,)]
    for h in range(1, H + 1):
        level = {G.add(s, a) for s in level for a in A.elements}
        if len(level) > cap:
            raise CapExceeded(f"|{h}A| = {len(level)} exceeds cap {cap}", sizes)
        sizes.append(len(level))
        if sets:
            levels.append(tuple(sorted(level)))
    return levels if sets else sizes


def growth_bitmask(elements: Sequence[int], H: int) -> list[int]:
    """Growth sequence of a set of nonnegative integers using int bitsets."""
    mask, out = 1, [1]
    shifts = list(elements)
    for _ in range(H):
        new = 0
        for a in shifts:
            new |= mask << a
        mask = new
        out.append(mask.bit_count())
    return out


@dataclass(frozen=True)
class BoundReport:
    m: int
    h: int
    x: Enclosure
    plunnecke: tuple[int, int]
    condensed: tuple[int, int]
    macaulay: tuple[int, int]
    theta: ThetaValue

    @property
    def lower_chain_ok(self) -> bool:
        return self.macaulay[0] >= self.condensed[0] >= self.plunnecke[0]

    @property
    def upper_chain_ok(self) -> bool:
        return self.macaulay[1] <= self.condensed[1] <= self.plunnecke[1]

    def to_dict(self, digits: int = 6) -> dict:
        def pair(p):
            return {"lower_prev": p[0], "upper_next": p[1]}

        lo, hi = self.x.decimal(digits)
        return {
            "m": self.m,
            "h": self.h,
            "x": {"lo": lo, "hi": hi, "exact": self.x.is_point},
            "plunnecke": pair(self.plunnecke),
            "condensed": pair(self.condensed),
            "macaulay": pair(self.macaulay),
            "macaulay_lower_method": "minimal predecessor under the successor map",
            "theta": self.theta.to_dict(digits),
            "dominance": self.lower_chain_ok and self.upper_chain_ok,
        }


def bound_report(m: int, h: int, digits: int = 12) -> BoundReport:
    """All three bound families on |(h-1)A| and |(h+1)A| given |hA| = m."""
    if m < 1 or h < 2:
        raise ValueError("need m >= 1 and h >= 2")
    x = solve_x(m, h, DEFAULT_TOL)
    tp = theta_pow_from_root(x, m, h)
    lo = root_enclosure(tp.lo, h, digits).lo
    hi = root_enclosure(tp.hi, h, digits).hi
    theta = ThetaValue(x if not x.is_point else x.lo, h, tp if not tp.is_point else tp.lo,
                       Enclosure(lo, hi))
    return BoundReport(
        m=m,
        h=h,
        x=x,
        plunnecke=plunnecke_bounds(m, h),
        condensed=condensed_bounds(m, h),
        macaulay=(min_predecessor(m, h - 1), successor(m, h)),
        theta=theta,
    )


def check_bounds(A: FiniteSet, H: int, cap: int | None = None) -> list[dict]:
    """Test the actual |(h-1)A| and |(h+1)A| against every bound, 2 <= h <= H-1.

    A verdict with ``ok`` false would mean a bug: all bounds are theorems.
    """
    if H < 2:
        raise ValueError("H must be >= 2")
    growth = iterate_sumsets(A, H, cap)
    verdicts = []
    for h in range(2, H):
        rep = bound_report(growth[h], h)
        prev, nxt = growth[h - 1], growth[h + 1]
        checks = {}
        for name in ("plunnecke", "condensed", "macaulay"):
            low, up = getattr(rep, name)
            checks[name] = {"lower_prev": low, "upper_next": up, "ok": prev >= low and nxt <= up}
        verdicts.append({
            "h": h,
            "m": growth[h],
            "prev": prev,
            "next": nxt,
            "bounds": checks,
            "ok": all(c["ok"] for c in checks.values()),
        })
    return verdicts


# --- extremal search -------------------------------------------------------


@dataclass
class SearchResult:
    h: int
    i: int
    m: int
    size: int
    max_elem: int
    mode: str  # "min" when i < h, "max" when i > h
    best: int | None = None
    witness: tuple[int, ...] | None = None
    exhaustive: bool = False
    examined: int = 0
    matched: int = 0
    group: str = "Z"
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "h": self.h,
            "i": self.i,
            "m": self.m,
            "size": self.size,
            "max_elem": self.max_elem,
            "mode": self.mode,
            "best": self.best,
            "witness": list(self.witness) if self.witness else None,
            "exhaustive": self.exhaustive,
            "examined": self.examined,
            "matched": self.matched,
            "label": self.label,
            "notes": self.notes,
        }

    @property
    def label(self) -> str:
        if self.best is None:
            return "no set with the required |hA| found"
        scope = (f"exhaustive over normalized sets with max element <= {self.max_elem}"
                 if self.exhaustive else "randomized search, not exhaustive")
        return f"{self.mode} |{self.i}A| = {self.best} ({scope})"


def _better(mode: str, val: int, wit: tuple, best: int | None, best_wit: tuple | None) -> bool:
    if best is None:
        return True
    if val != best:
        return val < best if mode == "min" else val > best
    return wit < best_wit


def _scan_chunk(args):
    first, size, max_elem, h, i, m, mod = args
    top = max(h, i)
    best = best_wit = None
    examined = matched = 0
    for rest in itertools.combinations(range(first + 1, max_elem + 1), size - 2):
        elems = (0, first) + rest
        if mod is None:
            if math.gcd(*elems) != 1:
                continue
            # A and max(A) - A have identical growth; keep one of the pair
            mx = elems[-1]
            if tuple(sorted(mx - a for a in elems)) < elems:
                continue
            g = growth_bitmask(elems, top)
        else:
            g = iterate_sumsets(FiniteSet.of(elems, mod), top)
        examined += 1
        if g[h] != m:
            continue
        matched += 1
        mode = "min" if i < h else "max"
        if _better(mode, g[i], elems, best, best_wit):
            best, best_wit = g[i], elems
    return best, best_wit, examined, matched


def _candidate_count(size: int, max_elem: int) -> int:
    return math.comb(max_elem, size - 1)


def extremal_search(h: int, i: int, m: int, size: int, max_elem: int,
                    budget: int = 2_000_000, mod: int | None = None,
                    seed: int = 0, workers: int = 1) -> SearchResult:
    """Extremal |iA| over sets A with |A| = size and |hA| = m.

    Over Z sets are normalized to min 0, gcd 1, elements <= max_elem, and
    one of each reflection pair A, max(A) - A.  Over Z/n (``mod``) sets
    contain 0 and elements are residues below min(max_elem + 1, n).  The
    scan is exhaustive when the candidate count fits ``budget``; otherwise
    a seeded random hill-climb spends ``budget`` evaluations.
    """
    if size < 1 or h < 1 or i < 1 or m < 1:
        raise ValueError("h, i, m and size must be positive")
    mode = "min" if i < h else "max"
    group = "Z" if mod is None else f"Z/{mod}"
    res = SearchResult(h, i, m, size, max_elem, mode, group=group)
    if mod is not None:
        max_elem = min(max_elem, mod - 1)
        res.max_elem = max_elem
    if i == h:
        res.best, res.exhaustive = m, True
        res.notes.append("i = h: the extremum is m itself")
        return res
    if size == 1:
        res.examined = 1
        if m == 1:
            res.best, res.witness, res.matched, res.exhaustive = 1, (0,), 1, True
        else:
            res.exhaustive = True
        return res
    if _candidate_count(size, max_elem) <= budget:
        chunks = [(first, size, max_elem, h, i, m, mod)
                  for first in range(1, max_elem - size + 3)]
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                parts = list(pool.map(_scan_chunk, chunks))
        else:
            parts = [_scan_chunk(c) for c in chunks]
        for best, wit, ex, mt in parts:  # deterministic reduction in chunk order
            res.examined += ex
            res.matched += mt
            if best is not None and _better(mode, best, wit, res.best, res.witness):
                res.best, res.witness = best, wit
        res.exhaustive = True
        return res
    _hill_climb(res, budget, seed, mod)
    return res


def _hill_climb(res: SearchResult, budget: int, seed: int, mod: int | None) -> None:
    rng = random.Random(seed)
    h, i, m, size, max_elem = res.h, res.i, res.m, res.size, res.max_elem
    top = max(h, i)
    sign = 1 if res.mode == "max" else -1

    def evaluate(elems):
        res.examined += 1
        if mod is None:
            return growth_bitmask(elems, top)
        return iterate_sumsets(FiniteSet.of(elems, mod), top)

    def score(g):
        return (-abs(g[h] - m), sign * g[i])

    def fresh():
        return tuple(sorted([0] + rng.sample(range(1, max_elem + 1), size - 1)))

    cur = fresh()
    cur_score = score(evaluate(cur))
    while res.examined < budget:
        if rng.random() < 0.01:
            cur = fresh()
            cur_score = score(evaluate(cur))
            continue
        pool = set(cur)
        idx = rng.randrange(1, size)
        new_val = rng.randrange(1, max_elem + 1)
        if new_val in pool:
            continue
        cand = tuple(sorted(cur[:idx] + cur[idx + 1:] + (new_val,)))
        g = evaluate(cand)
        sc = score(g)
        if g[h] == m:
            res.matched += 1
            if _better(res.mode, g[i], cand, res.best, res.witness):
                res.best, res.witness = g[i], cand
        if sc >= cur_score:
            cur, cur_score = cand, sc
