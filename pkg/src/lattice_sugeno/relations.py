"""Agreement relations between vectors over a finite bounded lattice.

A vector is a tuple of element indices, one per coordinate.  The six
relations here all capture a flavour of "x and y do not pull in
opposite directions":

* comonotone: every coordinate pair is ordered the same way in x and y.
* comparable: x <= y or y <= x coordinatewise.
* g-comonotone and its dual: the pairwise interchange identity
  (x_i v y_i) ^ (x_j v y_j) == (x_i ^ x_j) v (y_i ^ y_j), and the dual
  with meets and joins swapped.  Comonotone or comparable vectors are
  always g-comonotone; on non-distributive lattices the two dual
  variants can disagree.
* subsetwise join / meet agreement: the same interchange quantified
  over every nonempty subset of coordinates instead of pairs.

Checks short-circuit on the first failing identity and report it as a
witness, along with how many identities were evaluated.
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .errors import ArityMismatch, EnumerationTooLarge
from .lattice import Lattice


class RelationKind(Enum):
    COMONOTONE = "comonotone"
    COMPARABLE = "comparable"
    G_COMONOTONE = "g-comonotone"
    DUAL_G_COMONOTONE = "dual-g-comonotone"
    SUBSETWISE_JOIN = "subsetwise-join"
    SUBSETWISE_MEET = "subsetwise-meet"

    @classmethod
    def from_token(cls, token: str) -> "RelationKind":
        for kind in cls:
            if kind.value == token:
                return kind
        raise ValueError("unknown relation %r (choose from %s)"
                         % (token, ", ".join(k.value for k in cls)))


#: kinds whose defining identity ranges over coordinate pairs
PAIRWISE_KINDS = frozenset({
    RelationKind.COMONOTONE,
    RelationKind.G_COMONOTONE,
    RelationKind.DUAL_G_COMONOTONE,
})


@dataclass(frozen=True)
class RelationResult:
    kind: RelationKind
    holds: bool
    witness: tuple | None
    identities_checked: int


def check_vector(lattice: Lattice, x: Sequence[int]) -> tuple:
    """Validate a vector of element indices; returns it as a tuple."""
    x = tuple(x)
    if not x:
        raise ArityMismatch("vectors need at least one coordinate")
    for v in x:
        lattice._check(v)
    return x


def _pair_identity(lattice: Lattice, kind: RelationKind,
                   xi, xj, yi, yj) -> bool:
    up, meet, join = lattice._up, lattice._meet, lattice._join
    if kind is RelationKind.COMONOTONE:
        return bool((up[xi] >> xj & 1 and up[yi] >> yj & 1) or
                    (up[xj] >> xi & 1 and up[yj] >> yi & 1))
    if kind is RelationKind.G_COMONOTONE:
        return (meet[join[xi][yi]][join[xj][yj]]
                == join[meet[xi][xj]][meet[yi][yj]])
    if kind is RelationKind.DUAL_G_COMONOTONE:
        return (join[meet[xi][yi]][meet[xj][yj]]
                == meet[join[xi][xj]][join[yi][yj]])
    raise ValueError("not a pairwise kind: %s" % kind)


def relation_check(lattice: Lattice, kind: RelationKind,
                   x: Sequence[int], y: Sequence[int]) -> RelationResult:
    """Test one relation, reporting the first failing identity if any.

    For pairwise kinds the witness is the coordinate pair (i, j); the
    diagonal identities hold trivially so only i < j is evaluated.  For
    the comparable relation the witness pairs the first coordinate
    breaking each direction.  For subsetwise kinds it is the first
    failing subset, as a tuple of coordinate positions.
    """
    x = check_vector(lattice, x)
    y = check_vector(lattice, y)
    if len(x) != len(y):
        raise ArityMismatch("vectors have %d and %d coordinates"
                            % (len(x), len(y)))
    n = len(x)
    checked = 0

    if kind in PAIRWISE_KINDS:
        for i in range(n):
            for j in range(i + 1, n):
                checked += 1
                if not _pair_identity(lattice, kind, x[i], x[j], y[i], y[j]):
                    return RelationResult(kind, False, (i, j), checked)
        return RelationResult(kind, True, None, checked)

    if kind is RelationKind.COMPARABLE:
        up = lattice._up
        below = above = None
        for i in range(n):
            checked += 1
            if not up[x[i]] >> y[i] & 1:
                below = i
                break
        for j in range(n):
            checked += 1
            if not up[y[j]] >> x[j] & 1:
                above = j
                break
        if below is None or above is None:
            return RelationResult(kind, True, None, checked)
        return RelationResult(kind, False, (below, above), checked)

    # subsetwise kinds: every nonempty subset of coordinates, masks in
    # increasing order, bit i <-> coordinate i
    meet_all, join_all = lattice.meet_all, lattice.join_all
    for mask in range(1, 1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        checked += 1
        if kind is RelationKind.SUBSETWISE_JOIN:
            lhs = meet_all(lattice._join[x[i]][y[i]] for i in idx)
            rhs = lattice._join[meet_all(x[i] for i in idx)][
                meet_all(y[i] for i in idx)]
        elif kind is RelationKind.SUBSETWISE_MEET:
            lhs = join_all(lattice._meet[x[i]][y[i]] for i in idx)
            rhs = lattice._meet[join_all(x[i] for i in idx)][
                join_all(y[i] for i in idx)]
        else:
            raise ValueError("unknown relation kind: %r" % (kind,))
        if lhs != rhs:
            return RelationResult(kind, False, tuple(idx), checked)
    return RelationResult(kind, True, None, checked)


def relation_holds(lattice: Lattice, kind: RelationKind,
                   x: Sequence[int], y: Sequence[int]) -> bool:
    return relation_check(lattice, kind, x, y).holds


def all_vectors(lattice: Lattice, n: int,
                limit: int = 10 ** 7) -> Iterator[tuple]:
    """All vectors of arity n in itertools.product order."""
    if n < 1:
        raise ArityMismatch("vectors need at least one coordinate")
    if lattice.size ** n > limit:
        raise EnumerationTooLarge("%d^%d vectors exceed the limit of %d"
                                  % (lattice.size, n, limit))
    return itertools.product(range(lattice.size), repeat=n)


def relation_region(lattice: Lattice, kind: RelationKind,
                    x: Sequence[int], limit: int = 10 ** 7) -> tuple:
    """All vectors y standing in the relation to x, in product order."""
    x = check_vector(lattice, x)
    return tuple(y for y in all_vectors(lattice, len(x), limit)
                 if relation_check(lattice, kind, x, y).holds)


def region_report(lattice: Lattice, x: Sequence[int],
                  kinds: Sequence[RelationKind] = (
                      RelationKind.COMONOTONE,
                      RelationKind.COMPARABLE,
                      RelationKind.G_COMONOTONE),
                  limit: int = 10 ** 7) -> dict:
    """Region sizes around x for several relations at once.

    Returns {kind: region tuple}.  Useful for eyeballing how much larger
    the join-meet agreement region is than the union of the comonotone
    and comparable ones.
    """
    x = check_vector(lattice, x)
    return {kind: relation_region(lattice, kind, x, limit) for kind in kinds}
