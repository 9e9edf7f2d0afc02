"""Braid words, the Hurwitz action on tuples, and orbit enumeration.

Conventions (fixed here and documented in the CLI manual):

* Words act on the LEFT and letters compose as left actions, so for
  w = l1 l2 ... ln the rightmost letter acts first:
  act(w) = act(l1) o act(l2) o ... o act(ln).
* The generator rule is (..., a, b, ...) -> (..., a b a^-1, a, ...) at
  positions (i, i+1); the inverse generator applies (a, b) -> (b, b^-1 a b).
* Tuple products read left to right; the total product is conserved by
  the action in this convention.
* Serialized words are signed integer lists, e.g. [1, -2, 1] is
  sigma_1 sigma_2^-1 sigma_1 with the leftmost letter acting last.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from . import garside
from .groups import ClassSet

DEFAULT_ORBIT_BOUND = 10_000_000


class BraidError(ValueError):
    pass


class OrbitSizeError(RuntimeError):
    """Tuple space exceeds the configured memory bound."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError("strands must be >= 1")
        for idx, sign in self.letters:
            if not 1 <= idx <= self.strands - 1:
                raise BraidError(
                    f"letter index {idx} invalid with {self.strands} strands"
                )
            if sign not in (-1, 1):
                raise BraidError("letter sign must be +1 or -1")

    @staticmethod
    def from_signed(strands, signed):
        """[1, -2] -> sigma_1 sigma_2^-1."""
        letters = []
        for s in signed:
            if s == 0:
                raise BraidError("0 is not a valid signed letter")
            letters.append((abs(s), 1 if s > 0 else -1))
        return BraidWord(strands, tuple(letters))

    def to_signed(self):
        return [idx * sign for idx, sign in self.letters]

    def __mul__(self, other):
        if self.strands != other.strands:
            raise BraidError("strand count mismatch")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self):
        return BraidWord(
            self.strands, tuple((i, -s) for i, s in reversed(self.letters))
        )


def sigma_k(w):
    """Inclusion B_k -> B_{k+1} fixing the new last strand."""
    return BraidWord(w.strands + 1, w.letters)


def v_k_l(w, k):
    """B_l -> B_{k+l}: shift every letter index by k."""
    return BraidWord(
        w.strands + k, tuple((i + k, s) for i, s in w.letters)
    )


def normal_form(w):
    """Left-greedy Garside normal form; the word-problem oracle."""
    return garside.normal_form(w.strands, w.letters)


@dataclass(frozen=True)
class HurwitzTuple:
    classes: ClassSet
    entries: tuple

    def __post_init__(self):
        members = set(self.classes.elements)
        for g in self.entries:
            if g not in members:
                raise BraidError(f"tuple entry {g} is not in the class set")

    @property
    def length(self):
        return len(self.entries)


def _act_letter(entries, idx, sign, group):
    """Apply one generator in place on a list of element indices."""
    i = idx - 1
    a, b = entries[i], entries[i + 1]
    if sign == 1:
        entries[i] = group.conj(a, b)
        entries[i + 1] = a
    else:
        entries[i] = b
        entries[i + 1] = group.conj(group.inv(b), a)


def act_on_entries(letters, entries, group):
    """Raw Hurwitz action on a tuple of element indices (new tuple).

    Letters are applied rightmost first, making this a left action.
    """
    out = list(entries)
    for idx, sign in reversed(letters):
        _act_letter(out, idx, sign, group)
    return tuple(out)


def hurwitz_act(w, t):
    """The braid action on tuples over a conjugation-closed class set."""
    if w.strands != t.length:
        raise BraidError(
            f"word on {w.strands} strands cannot act on a length-{t.length} tuple"
        )
    group = t.classes.group
    out = act_on_entries(w.letters, t.entries, group)
    members = set(t.classes.elements)
    assert all(g in members for g in out), "action left the class set"
    return HurwitzTuple(t.classes, out)


def total_product(t):
    """Left-to-right product of the tuple entries; an orbit invariant."""
    return t.classes.group.product(t.entries)


def stabilize_tuple(t, g_hat):
    """Append the stabiliser element, modelling one added branch point."""
    if g_hat not in t.classes:
        raise BraidError("stabiliser element must lie in the class set")
    return HurwitzTuple(t.classes, t.entries + (g_hat,))


class OrbitPartition:
    """Partition of c^k under the Hurwitz action of B_k.

    Tuples are encoded as base-|c| integers, most significant digit
    first, so lexicographic order on tuples is numeric order on codes.
    Orbit representatives are the least codes.
    """

    __slots__ = ("classes", "k", "reps", "sizes", "_root", "_rep_index")

    def __init__(self, classes, k, reps, sizes, root):
        self.classes = classes
        self.k = k
        self.reps = reps
        self.sizes = sizes
        self._root = root
        self._rep_index = {r: i for i, r in enumerate(reps)}

    def __len__(self):
        return len(self.reps)

    def encode(self, entries):
        digit = {g: d for d, g in enumerate(self.classes.elements)}
        code = 0
        base = len(self.classes.elements)
        for g in entries:
            code = code * base + digit[g]
        return code

    def decode(self, code):
        base = len(self.classes.elements)
        digits = []
        for _ in range(self.k):
            digits.append(code % base)
            code //= base
        return tuple(self.classes.elements[d] for d in reversed(digits))

    def orbit_index_of(self, entries):
        return self._rep_index[self._root[self.encode(entries)]]

    def representative_tuples(self):
        return [self.decode(r) for r in self.reps]


def orbits(classes, k, max_tuples=DEFAULT_ORBIT_BOUND):
    """Orbit partition of c^k under sigma_1..sigma_{k-1}, via union-find."""
    base = len(classes.elements)
    total = base**k
    if total > max_tuples:
        raise OrbitSizeError(
            f"|c|^k = {total} exceeds the orbit enumeration bound {max_tuples}"
        )
    group = classes.group
    elems = classes.elements
    digit_conj = [
        [elems.index(group.conj(elems[da], elems[db])) for db in range(base)]
        for da in range(base)
    ]

    parent = array("q", range(total))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            if rx > ry:
                rx, ry = ry, rx
            parent[ry] = rx

    # generator sigma_i rewrites the digit pair at positions (i-1, i)
    for i in range(k - 1):
        right_width = base ** (k - 2 - i)
        pair_width = right_width * base * base
        for code in range(total):
            rest, low = divmod(code, pair_width)
            pair, tail = divmod(low, right_width)
            da, db = divmod(pair, base)
            new_pair = digit_conj[da][db] * base + da
            image = (rest * pair_width) + new_pair * right_width + tail
            union(code, image)

    # full path compression: parent becomes the root array, and with
    # union-by-min each root is the lexicographically least orbit member
    roots = {}
    for code in range(total):
        r = find(code)
        roots[r] = roots.get(r, 0) + 1
    reps = sorted(roots)
    sizes = [roots[r] for r in reps]
    return OrbitPartition(classes, k, reps, sizes, parent)
