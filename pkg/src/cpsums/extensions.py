"""Middle terms of short exact sequences of f.g. abelian groups.

`middle_candidates` lists every isomorphism class G fitting into
0 -> A -> G -> B -> 0, working prime by prime: a p-group of type lambda
admits a subgroup of type mu with quotient of type nu exactly when a
Littlewood-Richardson tableau of shape lambda/mu and content nu exists
(Hall's subgroup count is nonzero iff the LR coefficient is).  The
independent oracle `brute_force_middle_terms` instead enumerates the
candidate groups element by element and searches for an actual subgroup
with the right quotient.

`resolve` intersects the candidate list with splitting filters (no
element of a given order, prescribed localization, ...) and either
returns the unique survivor or an `AmbiguousResult` listing all of
them; it never picks silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd, lcm, prod

from .fgab import FgAbGroup, factorint, is_prime


class ExtensionSizeError(ValueError):
    """The brute-force oracle only accepts |A| * |B| <= 2**12."""


class OracleBudgetError(RuntimeError):
    """Subgroup enumeration exceeded its work budget."""


class EmptyAfterFiltering(ValueError):
    """All middle-term candidates were rejected; the filters are inconsistent."""


ORACLE_ORDER_LIMIT = 2**12


def partitions(n: int):
    """Yield all partitions of n as descending tuples.

    >>> sorted(partitions(4))
    [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    """

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    yield from gen(n, n)


def _contains(lam: tuple[int, ...], mu: tuple[int, ...]) -> bool:
    if len(mu) > len(lam):
        return False
    return all(mu[i] <= lam[i] for i in range(len(mu)))


def lr_positive(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> bool:
    """Whether the Littlewood-Richardson coefficient c^lam_{mu,nu} is nonzero.

    Searches for a semistandard skew tableau of shape lam/mu and content
    nu whose reverse reading word is a lattice word.  Shapes here are
    tiny (|lam| <= 12), so plain backtracking is plenty.
    """
    if sum(lam) != sum(mu) + sum(nu):
        return False
    if not _contains(lam, mu) or not _contains(lam, nu):
        return False
    if not nu:
        return lam == mu
    mu_padded = mu + (0,) * (len(lam) - len(mu))
    # reverse reading order: rows top to bottom, right to left within a row
    cells = [
        (r, c)
        for r in range(len(lam))
        for c in range(lam[r] - 1, mu_padded[r] - 1, -1)
    ]
    nvals = len(nu)
    counts = [0] * (nvals + 1)
    grid: dict[tuple[int, int], int] = {}

    def place(idx: int) -> bool:
        if idx == len(cells):
            return True
        r, c = cells[idx]
        right = grid.get((r, c + 1))
        upper = grid.get((r - 1, c)) if r > 0 and c >= mu_padded[r - 1] else None
        for v in range(1, nvals + 1):
            if counts[v] == nu[v - 1]:
                continue
            if right is not None and v > right:
                continue
            if upper is not None and v <= upper:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            grid[(r, c)] = v
            counts[v] += 1
            if place(idx + 1):
                return True
            counts[v] -= 1
            del grid[(r, c)]
        return False

    return place(0)


def all_abelian_groups_of_order(n: int) -> list[FgAbGroup]:
    """Every abelian group of order n, canonically sorted.

    >>> [str(g) for g in all_abelian_groups_of_order(8)]
    ['Z_2^3', 'Z_2 + Z_4', 'Z_8']
    """
    if n < 1:
        raise ValueError("order must be positive")
    factored = factorint(n)
    primes = sorted(factored)
    choices = [list(partitions(factored[p])) for p in primes]
    groups = [
        FgAbGroup.from_primary(dict(zip(primes, combo)))
        for combo in product(*choices)
    ]
    return sorted(groups)


# -- candidate enumeration (Littlewood-Richardson route) ---------------------


def middle_candidates_between(sub: FgAbGroup, quot: FgAbGroup) -> list[FgAbGroup]:
    """All isomorphism classes of middle terms of 0 -> sub -> G -> quot -> 0.

    Free parts split off (a free quotient always splits; a free subgroup
    summand is carried across unchanged), leaving a torsion extension
    problem solved prime by prime via LR positivity.
    """
    rank = sub.free_rank + quot.free_rank
    mu_primary = sub.primary_exponents()
    nu_primary = quot.primary_exponents()
    primes = sorted(set(mu_primary) | set(nu_primary))
    per_prime: list[list[tuple[int, ...]]] = []
    for p in primes:
        mu = mu_primary.get(p, ())
        nu = nu_primary.get(p, ())
        total = sum(mu) + sum(nu)
        lams = [lam for lam in partitions(total) if lr_positive(lam, mu, nu)]
        per_prime.append(lams)
    out = [
        FgAbGroup.from_primary(dict(zip(primes, combo)), free_rank=rank)
        for combo in product(*per_prime)
    ]
    return sorted(out)


# -- brute-force oracle ------------------------------------------------------


def _element_order(vec: tuple[int, ...], orders: tuple[int, ...]) -> int:
    return lcm(*(o // gcd(o, x) for o, x in zip(orders, vec))) if vec else 1


class _Budget:
    __slots__ = ("left",)

    def __init__(self, amount: int):
        self.left = amount

    def spend(self, amount: int):
        self.left -= amount
        if self.left < 0:
            raise OracleBudgetError("subgroup enumeration budget exhausted")


@lru_cache(maxsize=None)
def _subgroup_census(p: int, lam: tuple[int, ...]) -> frozenset:
    """Every (subgroup type, quotient type) realized inside the p-group
    of type lam, by exhaustive subgroup enumeration.

    Subgroups are grown one cyclic generator at a time with set closure
    and deduplicated as bitmasks over the element list.  A type is
    recorded as its kill-count vector (|H[p^j]| for j = 1..max(lam)),
    which pins down an abelian p-group of exponent <= p^max(lam).
    """
    if not lam:
        return frozenset({((), ())})
    orders = tuple(p**e for e in lam)
    elements = list(product(*(range(o) for o in orders)))
    total = len(elements)
    index = {vec: i for i, vec in enumerate(elements)}
    zero = index[tuple(0 for _ in orders)]

    def add_idx(i: int, j: int) -> int:
        x, y = elements[i], elements[j]
        return index[tuple((a + b) % o for a, b, o in zip(x, y, orders))]

    checkpoints = [p**j for j in range(1, lam[0] + 1)]
    kill_masks = []
    cmul = []
    for c in checkpoints:
        mask = 0
        table = []
        for i, vec in enumerate(elements):
            ci = index[tuple((c * a) % o for a, o in zip(vec, orders))]
            table.append(ci)
            if ci == zero:
                mask |= 1 << i
        kill_masks.append(mask)
        cmul.append(table)

    # one candidate generator per cyclic subgroup: closure only depends
    # on the cyclic subgroup generated, so skip the other generators
    covered = set()
    candidates = []
    for i in range(total):
        if i == zero or i in covered:
            continue
        candidates.append(i)
        ord_i = _element_order(elements[i], orders)
        x = i
        for j in range(1, ord_i):
            x = add_idx(x, i)
            if gcd(j + 1, ord_i) == 1:
                covered.add(x)

    budget = _Budget(80_000_000)

    def closure(mask: int, members: tuple[int, ...], g: int):
        out = mask
        out_members = list(members)
        x = g
        while not (mask >> x) & 1:
            budget.spend(len(members))
            for s in members:
                t = add_idx(s, x)
                if not (out >> t) & 1:
                    out |= 1 << t
                    out_members.append(t)
            x = add_idx(x, g)
        return out, tuple(out_members)

    def type_pair(mask: int, members: tuple[int, ...]):
        size = len(members)
        member_set = set(members)
        sub_type = tuple((mask & km).bit_count() for km in kill_masks)
        quot_type = []
        for table in cmul:
            killed = sum(1 for i in range(total) if table[i] in member_set)
            quot_type.append(killed // size)
        return sub_type, tuple(quot_type)

    start = (1 << zero, (zero,))
    seen = {start[0]}
    stack = [start]
    census = set()
    while stack:
        mask, members = stack.pop()
        census.add(type_pair(mask, members))
        for g in candidates:
            if (mask >> g) & 1:
                continue
            bigger, bigger_members = closure(mask, members, g)
            if bigger not in seen:
                seen.add(bigger)
                stack.append((bigger, bigger_members))
    return frozenset(census)


def _type_counts(p: int, partition: tuple[int, ...], depth: int) -> tuple[int, ...]:
    """Kill-count vector (|H[p^j]| for j = 1..depth) of the p-group of
    the given type."""
    return tuple(
        prod(min(p**j, p**e) for e in partition) for j in range(1, depth + 1)
    )


def _primary_pair_realized(
    p: int, lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]
) -> bool:
    if sum(mu) + sum(nu) != sum(lam):
        return False
    if not lam:
        return True
    # subgroup and quotient types are dominated componentwise; refuting
    # here avoids pointless censuses of huge groups
    if not (_contains(lam, mu) and _contains(lam, nu)):
        return False
    depth = lam[0]
    key = (_type_counts(p, mu, depth), _type_counts(p, nu, depth))
    return key in _subgroup_census(p, lam)


def brute_force_middle_terms(a: FgAbGroup, b: FgAbGroup) -> list[FgAbGroup]:
    """Independent oracle: middle terms of 0 -> a -> G -> b -> 0 for finite
    a, b by exhaustive subgroup enumeration inside every abelian group of
    order |a||b|.

    The enumeration runs on each primary component (a sequence of finite
    abelian groups exists exactly when its p-primary pieces do), with the
    subgroup census cached per component.
    """
    if not (a.is_finite and b.is_finite):
        raise ExtensionSizeError("oracle requires finite groups")
    n = a.torsion_order() * b.torsion_order()
    if n > ORACLE_ORDER_LIMIT:
        raise ExtensionSizeError(f"|a|*|b| = {n} exceeds {ORACLE_ORDER_LIMIT}")
    mu_primary = a.primary_exponents()
    nu_primary = b.primary_exponents()
    out = []
    for g in all_abelian_groups_of_order(n):
        lam_primary = g.primary_exponents()
        if all(
            _primary_pair_realized(
                p,
                lam_primary.get(p, ()),
                mu_primary.get(p, ()),
                nu_primary.get(p, ()),
            )
            for p in lam_primary
        ):
            out.append(g)
    return sorted(out)


# -- sequences, filters, resolution ------------------------------------------


@dataclass(frozen=True)
class AmbiguousResult:
    """Several middle terms survive; the sequence does not determine G."""

    candidates: tuple[FgAbGroup, ...]

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(sorted(self.candidates)))

    def __iter__(self):
        return iter(self.candidates)

    def __len__(self):
        return len(self.candidates)

    def __contains__(self, g):
        return g in self.candidates

    def __str__(self):
        return "ambiguous: {" + ", ".join(str(g) for g in self.candidates) + "}"


@dataclass(frozen=True)
class SplittingFilter:
    """Decidable predicate on FgAbGroup used to cut down middle terms."""

    kind: str
    order: int | None = None
    prime: int | None = None
    target: FgAbGroup | None = None
    rank: int | None = None

    @classmethod
    def no_element_of_order(cls, n: int) -> "SplittingFilter":
        if n < 2:
            raise ValueError("order filter requires n >= 2")
        return cls(kind="no-element-of-order", order=n)

    @classmethod
    def localization_at(cls, p: int, equals: FgAbGroup) -> "SplittingFilter":
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls(kind="localization-equals", prime=p, target=equals)

    @classmethod
    def torsion_equals(cls, t: FgAbGroup) -> "SplittingFilter":
        return cls(kind="torsion-equals", target=t.torsion())

    @classmethod
    def free_rank_equals(cls, r: int) -> "SplittingFilter":
        return cls(kind="free-rank-equals", rank=r)

    def matches(self, g: FgAbGroup) -> bool:
        if self.kind == "no-element-of-order":
            return not g.has_element_of_order(self.order)
        if self.kind == "localization-equals":
            return g.localized_at(self.prime) == self.target
        if self.kind == "torsion-equals":
            return g.torsion() == self.target
        if self.kind == "free-rank-equals":
            return g.free_rank == self.rank
        raise ValueError(f"unknown filter kind {self.kind!r}")

    def describe(self) -> str:
        if self.kind == "no-element-of-order":
            return f"no element of order {self.order}"
        if self.kind == "localization-equals":
            return f"localization at {self.prime} equals {self.target}"
        if self.kind == "torsion-equals":
            return f"torsion subgroup equals {self.target}"
        if self.kind == "free-rank-equals":
            return f"free rank equals {self.rank}"
        return self.kind


@dataclass(frozen=True)
class ShortExactSequence:
    """Record of 0 -> sub -> middle -> quot -> 0 with middle optional.

    An asserted middle is validated: by the brute-force oracle when the
    torsion is small enough, by rank and torsion-order accounting
    otherwise.
    """

    sub: FgAbGroup
    quot: FgAbGroup
    middle: FgAbGroup | None = None
    provenance: str = ""

    def __post_init__(self):
        if self.middle is None:
            return
        g = self.middle
        if g.free_rank != self.sub.free_rank + self.quot.free_rank:
            raise ValueError("middle term has the wrong free rank")
        if (
            g.torsion().torsion_order()
            != self.sub.torsion_order() * self.quot.torsion_order()
        ):
            raise ValueError("middle term has the wrong torsion order")
        if (
            self.sub.is_finite
            and self.quot.is_finite
            and self.sub.torsion_order() * self.quot.torsion_order()
            <= ORACLE_ORDER_LIMIT
        ):
            if g not in brute_force_middle_terms(self.sub, self.quot):
                raise ValueError(
                    f"{g} is not a middle term of the sequence "
                    f"0 -> {self.sub} -> G -> {self.quot} -> 0"
                )


def middle_candidates(seq: ShortExactSequence) -> list[FgAbGroup]:
    """Complete duplicate-free list of middle terms of the sequence."""
    return middle_candidates_between(seq.sub, seq.quot)


def resolve(
    seq: ShortExactSequence, filters: list[SplittingFilter] | tuple[SplittingFilter, ...]
) -> FgAbGroup | AmbiguousResult:
    """Intersect middle terms with the filters.

    Returns the unique survivor, or an AmbiguousResult carrying all
    survivors.  Raises EmptyAfterFiltering when nothing survives, which
    signals an inconsistent (mistranscribed) filter set.
    """
    survivors = [g for g in middle_candidates(seq) if all(f.matches(g) for f in filters)]
    if not survivors:
        raise EmptyAfterFiltering(
            f"no middle term of 0 -> {seq.sub} -> G -> {seq.quot} -> 0 "
            "satisfies the filters"
        )
    if len(survivors) == 1:
        return survivors[0]
    return AmbiguousResult(tuple(survivors))
