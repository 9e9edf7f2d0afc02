"""Finite groups as explicit Cayley tables, and conjugation-closed class sets.

Elements are indices 0..order-1 with 0 always the identity.  Tables
loaded from JSON are re-indexed if their identity is elsewhere.
All values are immutable after construction.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

ASSOC_CHECK_BOUND = 64
SUBGROUP_ORDER_BOUND = 48
SUBGROUP_3GEN_BOUND = 24


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple
    inverse: tuple
    name: str = "group"
    element_names: tuple = ()

    def __post_init__(self):
        n = self.order
        if n < 1 or len(self.table) != n:
            raise GroupError("table size does not match order")
        rng = set(range(n))
        for row in self.table:
            if set(row) != rng:
                raise GroupError("table rows must be permutations of 0..order-1")
        for j in range(n):
            if {self.table[i][j] for i in range(n)} != rng:
                raise GroupError("table columns must be permutations of 0..order-1")
        for x in range(n):
            if self.table[0][x] != x or self.table[x][0] != x:
                raise GroupError("element 0 must be the identity")
        for x in range(n):
            if self.table[x][self.inverse[x]] != 0:
                raise GroupError("inverse table is wrong")
        if n <= ASSOC_CHECK_BOUND:
            t = self.table
            for a in range(n):
                for b in range(n):
                    ab = t[a][b]
                    for c in range(n):
                        if t[ab][c] != t[a][t[b][c]]:
                            raise GroupError("multiplication is not associative")

    def mul(self, g, h):
        return self.table[g][h]

    def inv(self, g):
        return self.inverse[g]

    def conj(self, a, b):
        """a * b * a^-1."""
        return self.table[self.table[a][b]][self.inverse[a]]

    def elements(self):
        return range(self.order)

    def product(self, elems):
        acc = 0
        for g in elems:
            acc = self.table[acc][g]
        return acc

    def is_abelian(self):
        t = self.table
        return all(
            t[a][b] == t[b][a] for a in range(self.order) for b in range(self.order)
        )

    def closure(self, gens):
        """Subgroup generated by gens, as a frozenset of elements."""
        seen = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def subgroups(self):
        """All subgroups found by closing generating sets of size <= 2
        (size <= 3 when the order allows).

        Complete whenever every subgroup is 2-generated (3-generated for
        order <= 24); this covers the shipped builtin families.
        """
        if self.order > SUBGROUP_ORDER_BOUND:
            raise GroupError(
                f"subgroup enumeration refused for order {self.order} > "
                f"{SUBGROUP_ORDER_BOUND}"
            )
        found = {frozenset({0})}
        els = range(1, self.order)
        for a in els:
            found.add(self.closure([a]))
        for a, b in itertools.combinations(els, 2):
            found.add(self.closure([a, b]))
        if self.order <= SUBGROUP_3GEN_BOUND:
            for trip in itertools.combinations(els, 3):
                found.add(self.closure(trip))
        return sorted(found, key=lambda h: (len(h), sorted(h)))

    def conjugacy_class(self, g):
        return frozenset(self.conj(a, g) for a in self.elements())

    def conjugacy_classes(self):
        seen = set()
        classes = []
        for g in self.elements():
            if g not in seen:
                cl = self.conjugacy_class(g)
                seen |= cl
                classes.append(tuple(sorted(cl)))
        return classes

    def describe(self, g):
        if self.element_names:
            return self.element_names[g]
        return str(g)

    def to_json(self):
        return {"table": [list(row) for row in self.table], "name": self.name}

    # ------------------------------------------------------------------
    # builtin families

    @staticmethod
    def cyclic(n):
        if n < 1:
            raise GroupError("cyclic order must be >= 1")
        table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
        inverse = tuple((-i) % n for i in range(n))
        names = tuple("e" if i == 0 else f"r^{i}" if i > 1 else "r" for i in range(n))
        return FiniteGroup(n, table, inverse, f"cyclic:{n}", names)

    @staticmethod
    def dihedral(n):
        """Dihedral group of order 2n: rotations r^i, reflections r^i s."""
        if n < 1:
            raise GroupError("dihedral parameter must be >= 1")
        order = 2 * n

        def mul(a, b):
            ai, af = a % n, a // n
            bi, bf = b % n, b // n
            # (r^ai s^af)(r^bi s^bf): s r^b = r^-b s
            if af == 0:
                return (ai + bi) % n + n * bf
            return (ai - bi) % n + n * (1 - bf)

        table = tuple(tuple(mul(a, b) for b in range(order)) for a in range(order))
        inverse = tuple(next(b for b in range(order) if table[a][b] == 0)
                        for a in range(order))
        names = tuple(
            ("e" if i == 0 else f"r^{i}" if i > 1 else "r") if i < n
            else ("s" if i == n else f"r^{i - n}s" if i - n > 1 else "rs")
            for i in range(order)
        )
        return FiniteGroup(order, table, inverse, f"dihedral:{n}", names)

    @staticmethod
    def symmetric(n):
        """Symmetric group on {0..n-1}; composition applies the right
        factor first: (p*q)(x) = p(q(x))."""
        if not 1 <= n <= 6:
            raise GroupError("symmetric builtin supports 1 <= n <= 6")
        perms = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        order = len(perms)
        table = tuple(
            tuple(index[tuple(p[q[x]] for x in range(n))] for q in perms)
            for p in perms
        )
        inverse = tuple(
            index[tuple(sorted(range(n), key=lambda x: p[x]))] for p in perms
        )
        names = tuple(_cycle_name(p) for p in perms)
        return FiniteGroup(order, table, inverse, f"sym:{n}", names)

    @staticmethod
    def quaternion():
        """Quaternion group {1, -1, i, -i, j, -j, k, -k}."""
        names = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
        # encode as (sign, axis): 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k
        def unpack(x):
            return x % 2, x // 2  # (sign bit, axis 0=1,1=i,2=j,3=k)

        def pack(sign, axis):
            return axis * 2 + sign

        # i*j=k, j*k=i, k*i=j; squares of i,j,k are -1
        prod = {}
        for a in range(4):
            prod[(0, a)] = (0, a)
            prod[(a, 0)] = (0, a)
        for a in range(1, 4):
            prod[(a, a)] = (1, 0)
        cyc = {(1, 2): (0, 3), (2, 3): (0, 1), (3, 1): (0, 2)}
        for (a, b), (s, c) in list(cyc.items()):
            prod[(a, b)] = (s, c)
            prod[(b, a)] = (1 - s, c)

        def mul(x, y):
            sx, ax = unpack(x)
            sy, ay = unpack(y)
            s, a = prod[(ax, ay)]
            return pack((sx + sy + s) % 2, a)

        table = tuple(tuple(mul(a, b) for b in range(8)) for a in range(8))
        inverse = tuple(next(b for b in range(8) if table[a][b] == 0)
                        for a in range(8))
        return FiniteGroup(8, table, inverse, "quaternion", names)

    @staticmethod
    def from_table(rows, name="group"):
        """Build from a raw Cayley table, re-indexing so identity = 0."""
        n = len(rows)
        rows = [list(r) for r in rows]
        ident = None
        for e in range(n):
            if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise GroupError("table has no identity element")
        if ident != 0:
            perm = [ident] + [x for x in range(n) if x != ident]
            pos = {x: i for i, x in enumerate(perm)}
            rows = [[pos[rows[perm[i]][perm[j]]] for j in range(n)] for i in range(n)]
        table = tuple(tuple(r) for r in rows)
        inverse = []
        for a in range(n):
            invs = [b for b in range(n) if table[a][b] == 0]
            if len(invs) != 1 or table[invs[0]][a] != 0:
                raise GroupError("element has no two-sided inverse")
            inverse.append(invs[0])
        return FiniteGroup(n, table, tuple(inverse), name)

    @staticmethod
    def from_json(spec):
        """JSON spec: {"builtin": {"family": ..., "n": ...}} or {"table": [[...]]}."""
        if isinstance(spec, str):
            spec = json.loads(spec)
        if "builtin" in spec:
            b = spec["builtin"]
            family = b["family"]
            if family == "cyclic":
                return FiniteGroup.cyclic(int(b["n"]))
            if family == "dihedral":
                return FiniteGroup.dihedral(int(b["n"]))
            if family == "symmetric":
                return FiniteGroup.symmetric(int(b["n"]))
            if family == "quaternion":
                return FiniteGroup.quaternion()
            raise GroupError(f"unknown builtin family {family!r}")
        if "table" in spec:
            return FiniteGroup.from_table(spec["table"], spec.get("name", "group"))
        raise GroupError("group spec needs 'builtin' or 'table'")


def _cycle_name(p):
    n = len(p)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        parts.append("(" + " ".join(str(v + 1) for v in cyc) + ")")
    return "".join(parts) if parts else "e"


def conjugacy_closure(elements, group):
    """Smallest conjugation-closed superset of a non-empty element set."""
    elements = set(elements)
    if not elements:
        raise GroupError("class set may not be empty")
    closed = set()
    frontier = list(elements)
    while frontier:
        x = frontier.pop()
        if x in closed:
            continue
        closed.add(x)
        for a in group.elements():
            y = group.conj(a, x)
            if y not in closed:
                frontier.append(y)
    return ClassSet(group, tuple(sorted(closed)))


@dataclass(frozen=True)
class ClassSet:
    """A non-empty, conjugation-closed set of group elements."""

    group: FiniteGroup
    elements: tuple

    def __post_init__(self):
        if not self.elements:
            raise GroupError("class set may not be empty")
        if tuple(sorted(set(self.elements))) != self.elements:
            raise GroupError("class elements must be sorted and distinct")
        for x in self.elements:
            if not 0 <= x < self.group.order:
                raise GroupError("class element out of range")
            for a in self.group.elements():
                if self.group.conj(a, x) not in set(self.elements):
                    raise GroupError("class set is not closed under conjugation")

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in set(self.elements)

    def is_central(self):
        g = self.group
        return all(
            g.mul(x, a) == g.mul(a, x) for x in self.elements for a in g.elements()
        )

    def is_inversion_closed(self):
        els = set(self.elements)
        return all(self.group.inv(x) in els for x in els)

    def generates(self):
        return len(self.group.closure(self.elements)) == self.group.order

    def is_non_splitting(self):
        """Whether every subgroup meets this set in at most one of its
        own conjugacy classes (empty intersections allowed)."""
        els = set(self.elements)
        g = self.group
        for h in g.subgroups():
            meet = els & h
            if len(meet) <= 1:
                continue
            rep = next(iter(meet))
            h_class = {g.conj(a, rep) for a in h}
            if meet - h_class:
                return False
        return True

    @staticmethod
    def from_json(spec, group):
        """JSON spec: {"representative": i} or {"elements": [...]}."""
        if isinstance(spec, str):
            spec = json.loads(spec)
        if "representative" in spec:
            return conjugacy_closure({int(spec["representative"])}, group)
        if "elements" in spec:
            return ClassSet(group, tuple(sorted(set(int(x) for x in spec["elements"]))))
        raise GroupError("class spec needs 'representative' or 'elements'")
