"""Monomial bookkeeping for the graded algebra R(A).

With A = {a_1, ..., a_n}, the map X_i -> t^{a_i} Y sends a monomial X^alpha
of degree h to t^b Y^h with b = sum alpha_i a_i.  Two monomials are
identified exactly when they share degree and image, so the degree-h
piece of R(A) has one basis vector per class, i.e. dimension |hA|.  The
kernel is generated by the differences of equivalent monomials, so no
field arithmetic is ever needed here.

Within a degree, monomials are listed in descending graded reverse
lexicographic order (X_1^h first); the first member of a class is its
representative.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Sequence

from .sumset import DEFAULT_CAP, CapExceeded, FiniteSet

__all__ = [
    "Monomial",
    "MonomialClass",
    "MonomialIdeal",
    "monomials",
    "format_monomial",
    "parse_ideal",
    "classes",
    "presentation_generators",
    "hilbert_monomial_quotient",
]

Monomial = tuple  # exponent vector (alpha_1, ..., alpha_n)


def _grevlex_desc_key(alpha: Monomial):
    # descending grevlex == ascending order of the reversed exponent vector
    return tuple(reversed(alpha))


def monomials(n: int, h: int, cap: int | None = None) -> list[Monomial]:
    """All degree-h monomials in n variables, descending grevlex."""
    cap = DEFAULT_CAP if cap is None else cap
    count = math.comb(n - 1 + h, h)
    if count > cap:
        raise CapExceeded(f"{count} monomials of degree {h} exceed cap {cap}", [])
    out = []
    for combo in itertools.combinations_with_replacement(range(n), h):
        alpha = [0] * n
        for v in combo:
            alpha[v] += 1
        out.append(tuple(alpha))
    out.sort(key=_grevlex_desc_key)
    return out


def format_monomial(alpha: Monomial) -> str:
    parts = []
    for idx, e in enumerate(alpha, start=1):
        if e == 1:
            parts.append(f"X{idx}")
        elif e > 1:
            parts.append(f"X{idx}^{e}")
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class MonomialClass:
    degree: int
    image: object  # the group element sum alpha_i a_i
    members: tuple[Monomial, ...]

    @property
    def representative(self) -> Monomial:
        return self.members[0]

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "image": list(self.image) if isinstance(self.image, tuple) else self.image,
            "members": [format_monomial(m) for m in self.members],
        }


def _image(A: FiniteSet, alpha: Monomial):
    G = A.ambient
    b = G.zero
    for e, a in zip(alpha, A.elements):
        for _ in range(e):
            b = G.add(b, a)
    return b


def classes(A: FiniteSet, h: int, cap: int | None = None) -> list[MonomialClass]:
    """Partition of the degree-h monomials by their image in hA, sorted by image."""
    buckets: dict = {}
    for alpha in monomials(len(A), h, cap):
        buckets.setdefault(_image(A, alpha), []).append(alpha)
    return [MonomialClass(h, b, tuple(ms)) for b, ms in sorted(buckets.items())]


def presentation_generators(A: FiniteSet, h_max: int,
                            cap: int | None = None) -> list[tuple[Monomial, Monomial]]:
    """Pairs (u, r) with u ~ r, r the class representative, degrees 1..h_max.

    The binomials u - r generate the kernel of X_i -> t^{a_i} Y up to degree
    h_max (they are not a minimal generating set).
    """
    pairs = []
    for h in range(1, h_max + 1):
        for cls in classes(A, h, cap):
            rep = cls.representative
            pairs.extend((u, rep) for u in cls.members[1:])
    return pairs


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal kept as its minimal generating set."""

    nvars: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = []
        for g in sorted(set(map(tuple, self.generators)), key=lambda a: (sum(a), _grevlex_desc_key(a))):
            if len(g) != self.nvars:
                raise ValueError(f"generator {g} has wrong number of variables")
            if not any(_divides(f, g) for f in gens):
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    def contains(self, alpha: Monomial) -> bool:
        return any(_divides(g, alpha) for g in self.generators)

    def __str__(self) -> str:
        return ",".join(format_monomial(g) for g in self.generators)


def _divides(g: Monomial, alpha: Monomial) -> bool:
    return all(x <= y for x, y in zip(g, alpha))


_FACTOR = re.compile(r"^X(\d+)(?:\^(\d+))?$")


def parse_ideal(text: str, nvars: int) -> MonomialIdeal:
    """Parse ``X5^3,X4*X5^2,X3^3*X5^2``; an empty string is the zero ideal."""
    gens = []
    for term in filter(None, (t.strip() for t in text.split(","))):
        alpha = [0] * nvars
        for factor in term.split("*"):
            m = _FACTOR.match(factor.strip())
            if not m:
                raise ValueError(f"malformed monomial factor {factor!r}")
            idx, exp = int(m.group(1)), int(m.group(2) or 1)
            if not 1 <= idx <= nvars:
                raise ValueError(f"variable X{idx} outside X1..X{nvars}")
            alpha[idx - 1] += exp
        gens.append(tuple(alpha))
    return MonomialIdeal(nvars, tuple(gens))


def hilbert_monomial_quotient(n: int, J: MonomialIdeal | Sequence[Monomial], H: int,
                              cap: int | None = None) -> list[int]:
    """dim_h S/J for h = 0..H: degree-h monomials outside J."""
    if not isinstance(J, MonomialIdeal):
        J = MonomialIdeal(n, tuple(J))
    return [sum(1 for alpha in monomials(n, h, cap) if not J.contains(alpha))
            for h in range(H + 1)]
