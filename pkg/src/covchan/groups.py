"""Finite group arithmetic via explicit multiplication tables.

Elements are dense integer indices ``0..order-1`` with index 0 the identity;
all higher layers address elements only by index.  Permutation composition
follows ``(sigma o tau)(x) = sigma(tau(x))``.  Groups are immutable after
construction and safe to share read-only across workers.
"""

from __future__ import annotations

import hashlib
import itertools
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DomainError, InternalConsistencyError


class GroupElement(NamedTuple):
    """An element index paired with its display label."""

    index: int
    label: str


def conjugacy_classes(cayley: np.ndarray, inverses: np.ndarray) -> tuple[tuple[int, ...], ...]:
    """Partition element indices into conjugacy classes by exhaustive conjugation.

    Classes are ordered by their minimal element index, so the identity's
    class comes first.  Within a class, elements are in ascending index order.
    """
    order = cayley.shape[0]
    seen = np.zeros(order, dtype=bool)
    classes = []
    for g in range(order):
        if seen[g]:
            continue
        orbit = sorted({int(cayley[cayley[a, g], inverses[a]]) for a in range(order)})
        for h in orbit:
            seen[h] = True
        classes.append(tuple(orbit))
    return tuple(classes)


class FiniteGroup:
    """A finite group defined by a Cayley table, with derived class data.

    Construction validates the identity law, inverses and full associativity
    (exhaustive, vectorized; cheap for every built-in order up to 120).
    """

    def __init__(self, name: str, labels: Sequence[str], cayley: np.ndarray):
        cayley = np.asarray(cayley, dtype=np.intp)
        order = cayley.shape[0]
        if cayley.shape != (order, order):
            raise DomainError("Cayley table must be square")
        if len(labels) != order:
            raise DomainError("need one label per element")
        self.name = name
        self.labels = tuple(str(s) for s in labels)
        self.cayley = cayley

        if not (np.array_equal(cayley[0], np.arange(order))
                and np.array_equal(cayley[:, 0], np.arange(order))):
            raise InternalConsistencyError("element 0 is not a two-sided identity")
        left = cayley[cayley, :]
        right = cayley[:, cayley]
        if not np.array_equal(left, right):
            raise InternalConsistencyError("multiplication table is not associative")

        inverses = np.full(order, -1, dtype=np.intp)
        rows, cols = np.nonzero(cayley == 0)
        inverses[rows] = cols
        if np.any(inverses < 0) or np.any(cayley[np.arange(order), inverses] != 0):
            raise InternalConsistencyError("some element has no two-sided inverse")
        self.inverses = inverses

        self.classes = conjugacy_classes(cayley, inverses)
        class_of = np.empty(order, dtype=np.intp)
        for k, cls in enumerate(self.classes):
            for g in cls:
                class_of[g] = k
        self.class_of = class_of

        for arr in (self.cayley, self.inverses, self.class_of):
            arr.flags.writeable = False

    @property
    def order(self) -> int:
        return self.cayley.shape[0]

    @property
    def identity(self) -> int:
        return 0

    def multiply(self, a: int, b: int) -> int:
        return int(self.cayley[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inverses[a])

    def element(self, index: int) -> GroupElement:
        return GroupElement(index, self.labels[index])

    def elements(self) -> range:
        return range(self.order)

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def cayley_checksum(self) -> str:
        """SHA-256 of the table in row-major int64; stable across runs."""
        return hashlib.sha256(np.ascontiguousarray(self.cayley, dtype=np.int64).tobytes()).hexdigest()

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


def _cycle_notation(perm: tuple[int, ...]) -> str:
    """One-based cycle notation, e.g. (1,0,3,2) -> '(12)(34)'; identity -> 'e'."""
    n = len(perm)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        out.append("(" + "".join(str(x + 1) for x in cycle) + ")")
    return "".join(out) if out else "e"


def symmetric_group(n: int) -> FiniteGroup:
    """S(n) for 2 <= n <= 5, elements in lexicographic one-line order.

    Index 0 is the identity; the table realises (sigma o tau)(x) = sigma(tau(x)).
    """
    if not 2 <= n <= 5:
        raise DomainError(f"symmetric_group supports 2 <= n <= 5, got {n}")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    order = len(perms)
    cayley = np.empty((order, order), dtype=np.intp)
    for i, sigma in enumerate(perms):
        for j, tau in enumerate(perms):
            cayley[i, j] = index[tuple(sigma[tau[x]] for x in range(n))]
    labels = [_cycle_notation(p) for p in perms]
    group = FiniteGroup(f"s{n}", labels, cayley)
    group.permutations = tuple(perms)
    return group


# Quaternion units as (sign, axis): axis 0 is the unit, 1..3 the imaginary units.
_QUAT_ORDER = [(1, 0), (-1, 0), (1, 1), (1, 2), (1, 3), (-1, 1), (-1, 2), (-1, 3)]
_QUAT_LABELS = ["Qe", "-Qe", "Q1", "Q2", "Q3", "-Q1", "-Q2", "-Q3"]


def _quat_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    sa, ka = a
    sb, kb = b
    if ka == 0:
        return (sa * sb, kb)
    if kb == 0:
        return (sa * sb, ka)
    if ka == kb:
        return (-sa * sb, 0)
    # cyclic rule Q1 Q2 = Q3 and anticommutation otherwise
    kc = ({1, 2, 3} - {ka, kb}).pop()
    sign = 1 if (ka, kb) in ((1, 2), (2, 3), (3, 1)) else -1
    return (sign * sa * sb, kc)


def quaternion_group() -> FiniteGroup:
    """The order-8 quaternion group on {+-Qe, +-Q1, +-Q2, +-Q3}.

    Satisfies Q1^2 = Q2^2 = Q3^2 = Q1 Q2 Q3 = -Qe; five conjugacy classes
    {Qe}, {-Qe}, {+-Q1}, {+-Q2}, {+-Q3}.
    """
    index = {q: i for i, q in enumerate(_QUAT_ORDER)}
    cayley = np.empty((8, 8), dtype=np.intp)
    for i, a in enumerate(_QUAT_ORDER):
        for j, b in enumerate(_QUAT_ORDER):
            cayley[i, j] = index[_quat_mul(a, b)]
    group = FiniteGroup("q8", _QUAT_LABELS, cayley)
    group.quaternion_units = tuple(_QUAT_ORDER)
    return group


_GROUP_FACTORIES = {
    "s2": lambda: symmetric_group(2),
    "s3": lambda: symmetric_group(3),
    "s4": lambda: symmetric_group(4),
    "s5": lambda: symmetric_group(5),
    "q8": quaternion_group,
}


def group_by_name(name: str) -> FiniteGroup:
    """Build a group from its short name: s2..s5 or q8."""
    try:
        factory = _GROUP_FACTORIES[name.lower()]
    except KeyError:
        raise DomainError(f"unknown group {name!r}; expected one of {sorted(_GROUP_FACTORIES)}") from None
    return factory()
