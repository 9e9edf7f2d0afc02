#!/usr/bin/env python3
"""Standalone brute-force orbit counter for S3 transposition tuples.

Deliberately independent of the package: permutations are hard-coded as
index maps, the braid move is applied to explicit tuples, and orbits
are grown by breadth-first closure.  Output is frozen in
orbit_counts_s3_transpositions.json and pinned by the test suite.
"""

import itertools
import json
import os

# transpositions of {1,2,3} as mappings
A = {1: 2, 2: 1, 3: 3}  # (12)
B = {1: 3, 2: 2, 3: 1}  # (13)
C = {1: 1, 2: 3, 3: 2}  # (23)
TRANS = [A, B, C]


def compose(p, q):  # apply q first, then p
    return {x: p[q[x]] for x in (1, 2, 3)}


def key(p):
    return (p[1], p[2], p[3])


def move(t, i):  # sigma_i: (..., a, b, ...) -> (..., a b a^-1, a, ...)
    a, b = t[i], t[i + 1]
    conj = compose(compose(a, b), a)  # a b a^-1, transpositions self-inverse
    return t[:i] + (conj, a) + t[i + 2:]


def orbit_count(k):
    tuples = {tuple(map(key, t)): t
              for t in itertools.product(TRANS, repeat=k)}
    unseen = set(tuples)
    orbits = 0
    while unseen:
        frontier = [unseen.pop()]
        orbits += 1
        while frontier:
            tk = frontier.pop()
            t = tuples[tk]
            for i in range(k - 1):
                mk = tuple(map(key, move(t, i)))
                if mk in unseen:
                    unseen.remove(mk)
                    frontier.append(mk)
    return orbits


if __name__ == "__main__":
    counts = {str(k): orbit_count(k) for k in (1, 2, 3, 4)}
    path = os.path.join(os.path.dirname(__file__),
                        "orbit_counts_s3_transpositions.json")
    with open(path, "w") as fh:
        json.dump(counts, fh, indent=2, sort_keys=True)
    print(counts)
