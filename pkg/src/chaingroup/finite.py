"""Finite abelian quotients via Smith normal form, and permutation searches.

The quotient family takes r commuting generators and imposes three relation
shapes: a common torsion order M on each generator, a common order m on each
difference of two generators, and one aggregate relation making the d-th
power of the full product equal a power of the first generator. The group is
computed exactly as Z^r modulo the row lattice of those relations; its
cardinality comes out as (M/m) * d * m^(r-1).

The permutation side enumerates all tuples of permutations satisfying the
braid and commutation relations by backtracking, and checks the orbit-size
law |orbit| = l * C(r, k) for equivariant spectra.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from typing import Iterable, Sequence

from .intmat import Matrix, as_matrix


@dataclasses.dataclass(frozen=True)
class LnParams:
    """Parameters (r, M, m, d, s) of the abelian quotient on r generators.

    With M nonzero the divisibility constraints are: m and d nonzero, m | M,
    d | m, m | s, and M | (r - s/d) * m. The all-zero quadruple is the free
    group Z^r.
    """

    r: int
    M: int
    m: int
    d: int
    s: int

    def __post_init__(self):
        if self.r < 2:
            raise ValueError("need at least 2 generators")
        if min(self.M, self.m, self.d, self.s) < 0:
            raise ValueError("parameters must be nonnegative")


def validate_params(p: LnParams) -> bool:
    """Check the divisibility constraints; the free all-zero case is valid."""
    if p.M == 0:
        return p.m == 0 and p.d == 0 and p.s == 0
    if p.m == 0 or p.d == 0:
        return False
    if p.M % p.m != 0 or p.m % p.d != 0 or p.s % p.m != 0:
        return False
    return ((p.r - p.s // p.d) * p.m) % p.M == 0


@dataclasses.dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors (each dividing the next) plus free rank."""

    factors: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        for a, b in itertools.pairwise(self.factors):
            if b % a != 0:
                raise ValueError(f"factors must form a divisibility chain: {self.factors}")

    def cardinality(self) -> int | None:
        """Group order, or None when the free rank is positive."""
        if self.free_rank > 0:
            return None
        return math.prod(self.factors)


def smith_normal_form(rows: Sequence[Sequence[int]]) -> AbelianInvariants:
    """Invariant factors of Z^cols modulo the row lattice."""
    a = [list(map(int, row)) for row in rows]
    ncols = len(a[0]) if a else 0
    if any(len(row) != ncols for row in a):
        raise ValueError("rows must have equal length")
    factors = []
    top = 0
    while top < min(len(a), ncols):
        pivot = None
        best = None
        for i in range(top, len(a)):
            for j in range(top, ncols):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        # clear the pivot row and column; restart if a smaller entry appears
        dirty = False
        piv = a[top][top]
        for i in range(top + 1, len(a)):
            if a[i][top]:
                q = a[i][top] // piv
                a[i] = [x - q * y for x, y in zip(a[i], a[top])]
                if a[i][top]:
                    dirty = True
        for j in range(top + 1, ncols):
            if a[top][j]:
                q = a[top][j] // piv
                for row in a:
                    row[j] -= q * row[top]
                if a[top][j]:
                    dirty = True
        if dirty:
            continue
        # pivot must divide every remaining entry for the chain property
        offender = None
        for i in range(top + 1, len(a)):
            for j in range(top + 1, ncols):
                if a[i][j] % piv != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            a[top] = [x + y for x, y in zip(a[top], a[offender])]
            continue
        factors.append(abs(piv))
        top += 1
    return AbelianInvariants(tuple(factors), ncols - len(factors))


def ln_params_rows(p: LnParams) -> Matrix:
    """Relation lattice rows in Z^r for the three relation shapes."""
    rows: list[list[int]] = []
    for i in range(p.r):
        row = [0] * p.r
        row[i] = p.M
        rows.append(row)
    for i in range(1, p.r):
        row = [0] * p.r
        row[0], row[i] = -p.m, p.m
        rows.append(row)
    rows.append([p.d - p.s] + [p.d] * (p.r - 1))
    return as_matrix(rows)


def ln_group(p: LnParams) -> AbelianInvariants:
    """Invariant factors of the quotient; cardinality (M/m) * d * m^(r-1).

    Requires validate_params and positive torsion (M > 0); the cardinality
    formula is stated for m >= 2 but degrades correctly to the trivial
    quotient at m = 1.
    """
    if not validate_params(p):
        raise ValueError(f"invalid parameters {p}")
    if p.M <= 0:
        raise ValueError("group computation needs positive torsion M > 0")
    inv = smith_normal_form(ln_params_rows(p))
    assert inv.free_rank == 0
    expected = (p.M // p.m) * p.d * p.m ** (p.r - 1)
    assert inv.cardinality() == expected, (inv, expected)
    return inv


@dataclasses.dataclass(frozen=True)
class PermRep:
    """Generator images in the symmetric group on {0..k-1}, relation-checked."""

    k: int
    images: tuple[tuple[int, ...], ...]

    def is_cyclic(self) -> bool:
        return all(g == self.images[0] for g in self.images[1:])


def _pmul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Composition: apply a first, then b."""
    return tuple(b[x] for x in a)


def perm_rep_satisfies_relations(rep: PermRep) -> bool:
    gs = rep.images
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            a, b = gs[i], gs[j]
            if j - i == 1:
                if _pmul(_pmul(a, b), a) != _pmul(_pmul(b, a), b):
                    return False
            else:
                if _pmul(a, b) != _pmul(b, a):
                    return False
    return True


def enum_perm_reps(
    n: int, k: int, dedup_conjugacy: bool = False, budget: int | None = None
) -> list[PermRep]:
    """All (n-1)-tuples of permutations of k symbols obeying the relations.

    Backtracking over generator images: each image must braid with its
    predecessor and commute with everything two or more steps back. Results
    come in lexicographic order of image tuples; with dedup_conjugacy only
    the lexicographically least simultaneous conjugate of each class is
    kept. Commutation constraints are tracked as bit masks over the whole
    symmetric group, which keeps the (n, k) = (6, 6) search affordable.
    """
    if n < 3 or k < 1:
        raise ValueError("need n >= 3 strands and k >= 1 symbols")
    cap = budget if budget is not None else 6
    if k > cap:
        raise ValueError(f"symbol count {k} exceeds the search budget {cap}")

    perms = sorted(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    size = len(perms)
    mul = [[index[_pmul(perms[a], perms[b])] for b in range(size)] for a in range(size)]

    braid_next: list[list[int]] = [[] for _ in range(size)]
    comm_mask = [0] * size
    for a in range(size):
        for b in range(size):
            ab = mul[a][b]
            ba = mul[b][a]
            if mul[ab][a] == mul[ba][b]:
                braid_next[a].append(b)
            if ab == ba:
                comm_mask[a] |= 1 << b

    results: list[tuple[int, ...]] = []
    chosen: list[int] = []
    prefix_masks: list[int] = []

    def rec(level: int):
        if level == n - 1:
            results.append(tuple(chosen))
            return
        pool: Iterable[int] = range(size) if level == 0 else braid_next[chosen[-1]]
        for b in pool:
            if level >= 2 and not (prefix_masks[level - 2] >> b) & 1:
                continue
            chosen.append(b)
            prefix_masks.append((prefix_masks[-1] if prefix_masks else (1 << size) - 1) & comm_mask[b])
            rec(level + 1)
            prefix_masks.pop()
            chosen.pop()

    rec(0)

    reps = [PermRep(k, tuple(perms[i] for i in tup)) for tup in sorted(results)]
    if dedup_conjugacy:
        seen = set()
        out = []
        for rep in reps:
            canon = min(
                tuple(_pmul(_pmul(_inv(c), g), c) for g in rep.images)
                for c in perms
            )
            if canon not in seen:
                seen.add(canon)
                out.append(rep)
        reps = out
    for rep in reps:
        assert perm_rep_satisfies_relations(rep)
    return reps


def _inv(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def orbit_spectrum_check(
    gens_set: Sequence[dict],
    gens_colors: Sequence[tuple[int, ...]],
    spectrum: dict,
    e,
    r: int,
) -> tuple[int, bool]:
    """Verify the orbit-size law |orbit(e)| = l * C(r, k) and return l.

    gens_set are the generator actions on the finite set (dicts element ->
    element); gens_colors the matching permutations of the r colors. The
    color action must generate the full symmetric group, and the spectrum
    (element -> frozenset of colors) must be equivariant; k is the spectrum
    size of e.
    """
    if len(gens_set) != len(gens_colors):
        raise ValueError("need one color permutation per set generator")
    for g in gens_colors:
        if sorted(g) != list(range(r)):
            raise ValueError("color maps must be permutations of range(r)")
    if _generated_order(gens_colors, r) != math.factorial(r):
        raise ValueError("color action must be the full symmetric action")
    for gs, gc in zip(gens_set, gens_colors):
        for x, colors in spectrum.items():
            if frozenset(gc[c] for c in colors) != frozenset(spectrum[gs[x]]):
                raise ValueError("spectrum is not equivariant")
    orbit = {e}
    frontier = [e]
    while frontier:
        x = frontier.pop()
        for gs in gens_set:
            y = gs[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    k = len(spectrum[e])
    binom = math.comb(r, k)
    if len(orbit) % binom != 0:
        raise ValueError(f"orbit size {len(orbit)} is not a multiple of C({r},{k}) = {binom}")
    ell = len(orbit) // binom
    return ell, True


def _generated_order(gens: Sequence[tuple[int, ...]], r: int) -> int:
    ident = tuple(range(r))
    seen = {ident}
    frontier = [ident]
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = _pmul(p, g)
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return len(seen)


def parse_params(text: str) -> LnParams:
    """Parse 'r M m d s' from one line."""
    parts = text.split()
    if len(parts) != 5:
        raise ValueError("parameter line must contain exactly r M m d s")
    r, M, m, d, s = (int(x) for x in parts)
    return LnParams(r, M, m, d, s)


def parse_permutation(text: str, k: int) -> tuple[int, ...]:
    """Parse cycle notation '(1 2)(3 4)' or an image map '1->2 2->1 ...'.

    Symbols are 1-based on input and 0-based internally.
    """
    text = text.strip()
    img = list(range(k))
    if "->" in text:
        for tok in text.split():
            a, _, b = tok.partition("->")
            img[int(a) - 1] = int(b) - 1
    elif text and text != "()":
        if not text.startswith("("):
            raise ValueError("permutation must be cycles or an image map")
        for cyc in text.replace(")", ")|").split("|"):
            cyc = cyc.strip().strip("()")
            if not cyc:
                continue
            elems = [int(t) - 1 for t in cyc.replace(",", " ").split()]
            for a, b in zip(elems, elems[1:] + elems[:1]):
                img[a] = b
    perm = tuple(img)
    if sorted(perm) != list(range(k)):
        raise ValueError(f"not a permutation of 1..{k}: {text!r}")
    return perm
