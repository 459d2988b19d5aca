"""Monomial ideals in k[x, y, z] described by their minimal generators."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

VARS = "xyz"

# A degree vector is a plain triple of non-negative ints.
DegreeVector = tuple[int, int, int]


class IdealSyntaxError(ValueError):
    """A token could not be read as a monomial or exponent triple."""


class EmptyIdeal(ValueError):
    pass


class NotAGenerator(ValueError):
    pass


def degree(values: Iterable[int]) -> DegreeVector:
    d = tuple(int(v) for v in values)
    if len(d) != 3 or any(v < 0 for v in d):
        raise ValueError(f"not a degree vector in N^3: {d!r}")
    return d  # type: ignore[return-value]


def leq(a: DegreeVector, b: DegreeVector) -> bool:
    """Componentwise order."""
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def lcm(a: DegreeVector, b: DegreeVector) -> DegreeVector:
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]))


def sub(b: DegreeVector, a: DegreeVector) -> DegreeVector:
    return (b[0] - a[0], b[1] - a[1], b[2] - a[2])


def norm1(d: DegreeVector) -> int:
    return d[0] + d[1] + d[2]


def support(d: DegreeVector) -> tuple[int, ...]:
    return tuple(v for v in range(3) if d[v] != 0)


def parse_degree(text: str) -> DegreeVector:
    """Read ``"131"`` (one digit per variable) or ``"1,3,1"`` / ``"1 3 1"``."""
    text = text.strip()
    if re.fullmatch(r"\d{3}", text):
        return degree(int(ch) for ch in text)
    parts = re.split(r"[,\s]+", text)
    if len(parts) != 3 or not all(p.isdigit() for p in parts):
        raise IdealSyntaxError(f"cannot read degree vector {text!r}")
    return degree(int(p) for p in parts)


def format_degree(d: DegreeVector) -> str:
    """Concatenated digits when every exponent is below 10, else comma separated."""
    if all(v < 10 for v in d):
        return "".join(str(v) for v in d)
    return ",".join(str(v) for v in d)


_MONOMIAL_FACTOR = re.compile(r"([xyz])(?:\^(\d+))?")


def parse_monomial(token: str) -> DegreeVector:
    tok = token.strip().replace(" ", "")
    if re.fullmatch(r"\d+(?:[\s,]+\d+){2}", token.strip()):
        return degree(int(p) for p in re.split(r"[\s,]+", token.strip()))
    if tok == "1":
        return (0, 0, 0)
    tok = tok.replace("*", "")
    if not tok:
        raise IdealSyntaxError("empty monomial")
    exps = [0, 0, 0]
    pos = 0
    for m in _MONOMIAL_FACTOR.finditer(tok):
        if m.start() != pos:
            break
        exps[VARS.index(m.group(1))] += int(m.group(2) or 1)
        pos = m.end()
    if pos != len(tok):
        raise IdealSyntaxError(f"cannot read monomial {token!r}")
    return tuple(exps)  # type: ignore[return-value]


def minimalize(gens: Iterable[DegreeVector]) -> tuple[DegreeVector, ...]:
    """Drop duplicates and any generator divisible by another; sorted output."""
    uniq = sorted(set(gens))
    keep = [g for g in uniq if not any(h != g and leq(h, g) for h in uniq)]
    return tuple(keep)


@dataclass(frozen=True)
class MonomialIdeal:
    gens: tuple[DegreeVector, ...]

    def __post_init__(self):
        if not self.gens:
            raise EmptyIdeal("an ideal needs at least one generator")
        object.__setattr__(self, "gens", minimalize(degree(g) for g in self.gens))

    @classmethod
    def from_gens(cls, gens: Iterable[Iterable[int]]) -> "MonomialIdeal":
        return cls(tuple(degree(g) for g in gens))

    def contains(self, b: DegreeVector) -> bool:
        return any(leq(g, b) for g in self.gens)

    def is_generator(self, b: DegreeVector) -> bool:
        return tuple(b) in self.gens

    def lcm_all(self) -> DegreeVector:
        return lcm_all(self)

    def render(self) -> str:
        return ", ".join(render_monomial(g) for g in self.gens)

    def __str__(self):
        return f"<{self.render()}>"


def contains(I: MonomialIdeal, b: DegreeVector) -> bool:
    return I.contains(b)


def lcm_all(I: MonomialIdeal) -> DegreeVector:
    out = (0, 0, 0)
    for g in I.gens:
        out = lcm(out, g)
    return out


def render_monomial(d: DegreeVector) -> str:
    parts = []
    for v, e in zip(VARS, d):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "".join(parts) or "1"


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse comma/newline separated monomials or exponent triples.

    ``#`` starts a comment.  A line holding three integers is one exponent
    triple; otherwise commas separate monomials.
    """
    gens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if re.fullmatch(r"\d+(?:[\s,]+\d+){2}", line):
            gens.append(parse_monomial(line))
            continue
        for tok in line.split(","):
            if tok.strip():
                gens.append(parse_monomial(tok))
    if not gens:
        raise EmptyIdeal("no generators found")
    return MonomialIdeal(tuple(gens))


def generators_behind(I: MonomialIdeal, b: DegreeVector, axes: Iterable[int]) -> list[DegreeVector]:
    """Generators a <= b with supp(b - a) inside ``axes``."""
    axes = set(axes)
    return [g for g in I.gens if leq(g, b) and set(support(sub(b, g))) <= axes]


def neighboring_syzygies(
    I: MonomialIdeal, a: DegreeVector, edge_dirs: tuple[int, int], b: DegreeVector | None = None
) -> list[DegreeVector]:
    """lcm of ``a`` with its neighbours in the chain of generators along an edge.

    The chain is the set of generators lying behind ``b`` in the two edge
    directions, ordered by increasing exponent in the second direction.  When
    ``b`` is omitted the chain is every generator agreeing with ``a`` in the
    third coordinate.
    """
    a = degree(a)
    if not I.is_generator(a):
        raise NotAGenerator(f"{a} is not a minimal generator")
    i, j = edge_dirs
    (k,) = {0, 1, 2} - {i, j}
    if b is None:
        chain = [g for g in I.gens if g[k] == a[k]]
    else:
        chain = generators_behind(I, b, (i, j))
        if a not in chain:
            raise NotAGenerator(f"{a} does not lie behind {b} in directions {edge_dirs}")
    chain.sort(key=lambda g: (g[j], -g[i]))
    pos = chain.index(a)
    out = []
    if pos > 0:
        out.append(lcm(a, chain[pos - 1]))
    if pos + 1 < len(chain):
        out.append(lcm(a, chain[pos + 1]))
    return out
