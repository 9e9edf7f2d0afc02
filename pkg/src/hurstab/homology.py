"""Exact homology of integer complexes and classification of induced maps.

Homology groups over Z are computed from ranks and invariant factors
(sparse engine, no transforms).  Induced maps additionally need explicit
homology bases, which are extracted from dense Smith normal forms with
transforms; those are used at desk scale only.

Coefficient rings are Z, Q, or F_p, selected by a ``Coeff`` value.
A map of finitely generated abelian groups is presented by the orders
of its source/target generators (torsion orders first, 0 for free) and
an integer matrix of generator images; injectivity, surjectivity and
split-injectivity over Z are decided exactly, the last by solving an
integer linear system for a retraction.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intmat
from .intmat import GFp, QQ, smith_normal_form  # re-exported surface

__all__ = [
    "Coeff",
    "HomologyGroup",
    "InducedHomologyMap",
    "smith_normal_form",
    "homology",
    "induced_map",
    "is_split_injective",
    "HomologyError",
]


class HomologyError(ValueError):
    pass


@dataclass(frozen=True)
class Coeff:
    """Coefficient ring: Z, Q, or F_p."""

    kind: str
    p: int = 0

    @staticmethod
    def parse(text):
        if text == "Z":
            return Coeff("Z")
        if text == "Q":
            return Coeff("Q")
        if text.startswith("Fp:"):
            p = int(text[3:])
            if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
                raise HomologyError(f"{p} is not prime")
            return Coeff("Fp", p)
        raise HomologyError(f"cannot parse coefficient spec {text!r}")

    def __str__(self):
        return self.kind if self.kind != "Fp" else f"Fp:{self.p}"

    def field(self):
        if self.kind == "Q":
            return QQ
        if self.kind == "Fp":
            return GFp(self.p)
        raise HomologyError("Z is not a field")


Z = Coeff("Z")
Q = Coeff("Q")


@dataclass(frozen=True)
class HomologyGroup:
    """Isomorphism type: free rank plus invariant factors d1 | d2 | ...,
    each > 1."""

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        for d in self.torsion:
            if d <= 1:
                raise HomologyError("torsion coefficients must exceed 1")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise HomologyError("torsion must form a divisibility chain")

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def to_json(self):
        return {"free": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def _trusted_degree(C, i):
    if i < 0:
        raise HomologyError("negative homology degree")
    if i > C.top_degree:
        if C.complete:
            return  # zero beyond a complete resolution
        raise HomologyError(
            f"degree {i} exceeds the truncation (top degree {C.top_degree})"
        )
    if i == C.top_degree and not C.complete:
        raise HomologyError(
            f"degree {i} homology of a depth-{C.top_degree} truncation is not "
            "certified; rebuild with a deeper resolution"
        )


def _boundary_factors(C, j):
    """Invariant factors of the degree-j boundary, read through the
    complex's cache (idempotent writes)."""
    key = (j, "Z")
    if key not in C.snf_cache:
        C.snf_cache[key] = intmat.sparse_invariant_factors(C.mats[j])
    return C.snf_cache[key]


def _boundary_field_rank(C, j, coeff):
    key = (j, str(coeff))
    if key not in C.snf_cache:
        F = coeff.field()
        dense = intmat.sparse_to_dense(C.mats[j], C.dims[j], C.dims[j - 1])
        C.snf_cache[key] = intmat.field_rank(
            F, [[F.of_int(x) for x in row] for row in dense]
        )
    return C.snf_cache[key]


def homology(C, i, coeff=Z):
    """Homology of an integer complex in one degree.

    Degrees above a truncation are refused unless the complex is a
    complete resolution, in which case they are zero.
    """
    _trusted_degree(C, i)
    if i > C.top_degree:
        return HomologyGroup(0)
    n_i = C.dims[i]
    if coeff.kind in ("Z", "Q"):
        r_i = len(_boundary_factors(C, i)) if i >= 1 else 0
        upper = _boundary_factors(C, i + 1) if i + 1 <= C.top_degree else []
        free = n_i - r_i - len(upper)
        if coeff.kind == "Q":
            return HomologyGroup(free)
        return HomologyGroup(free, tuple(d for d in upper if d > 1))
    r_i = _boundary_field_rank(C, i, coeff) if i >= 1 else 0
    r_up = (
        _boundary_field_rank(C, i + 1, coeff)
        if i + 1 <= C.top_degree
        else 0
    )
    return HomologyGroup(n_i - r_i - r_up)


# ---------------------------------------------------------------------------
# explicit homology bases (dense tier)


class _ZHomologyBasis:
    """Kernel basis + presentation data for H_i(C; Z).

    Generator orders list torsion orders first (the SNF diagonal entries
    bigger than 1, in divisibility order) and then zeros for the free
    generators.
    """

    def __init__(self, C, i):
        _trusted_degree(C, i)
        self.trivial_beyond = i > C.top_degree
        if self.trivial_beyond:
            self.orders = []
            self.kernel = []
            return
        n_i = C.dims[i]
        if i >= 1:
            D_i = intmat.sparse_to_dense(C.mats[i], C.dims[i], C.dims[i - 1])
            self.kernel = intmat.left_kernel(D_i)
        else:
            self.kernel = [row[:] for row in intmat.identity(n_i)]
        z = len(self.kernel)
        self.kernel_t = intmat.transpose(self.kernel) if z else []
        if i + 1 <= C.top_degree:
            upper = intmat.sparse_to_dense(C.mats[i + 1], C.dims[i + 1], C.dims[i])
        else:
            upper = []
        cols = []
        for b in upper:
            y = self._kernel_coords(b)
            cols.append(y)
        P = [[cols[t][s] for t in range(len(cols))] for s in range(z)]
        self.snf = smith_normal_form(P) if z else None
        diag = list(self.snf.diag) if self.snf else []
        diag += [0] * (z - len(diag))
        self.kept = [j for j in range(z) if diag[j] != 1]
        self.orders = [diag[j] for j in self.kept]

    def _kernel_coords(self, vec):
        if not self.kernel:
            if any(vec):
                raise HomologyError("vector outside the cycle lattice")
            return []
        y = intmat.solve_int(self.kernel_t, list(vec))
        if y is None:
            raise HomologyError("vector is not an integral cycle combination")
        return y

    def group(self):
        free = sum(1 for d in self.orders if d == 0)
        torsion = tuple(d for d in self.orders if d > 1)
        return HomologyGroup(free, torsion)

    def class_of(self, chain_vec):
        """Coordinates of a cycle's homology class in the kept generators."""
        if self.trivial_beyond:
            return []
        y = self._kernel_coords(chain_vec)
        w = intmat.mat_vec(self.snf.U, y) if self.snf else []
        out = []
        for j, d in zip(self.kept, self.orders):
            v = w[j]
            out.append(v % d if d > 1 else v)
        return out

    def generator_chain(self, idx):
        """A cycle vector representing the idx-th kept generator."""
        j = self.kept[idx]
        y = [self.snf.uinv[t][j] for t in range(len(self.kernel))]
        n = len(self.kernel_t)
        return [
            sum(y[t] * self.kernel[t][s] for t in range(len(self.kernel)))
            for s in range(n)
        ]


class _FieldHomologyBasis:
    def __init__(self, C, i, F):
        _trusted_degree(C, i)
        self.F = F
        self.trivial_beyond = i > C.top_degree
        if self.trivial_beyond:
            self.dim = 0
            return
        n_i = C.dims[i]
        if i >= 1:
            D_i = intmat.sparse_to_dense(C.mats[i], C.dims[i], C.dims[i - 1])
            Df = [[F.of_int(x) for x in row] for row in D_i]
            self.kernel = intmat.field_left_kernel(F, Df)
        else:
            self.kernel = [
                [F.one if s == t else F.zero for s in range(n_i)] for t in range(n_i)
            ]
        z = len(self.kernel)
        if i + 1 <= C.top_degree:
            upper = intmat.sparse_to_dense(C.mats[i + 1], C.dims[i + 1], C.dims[i])
        else:
            upper = []
        img_coords = []
        for b in upper:
            bf = [F.of_int(x) for x in b]
            y = intmat.field_solve_in_rowspace(F, self.kernel, bf)
            if y is None:
                raise HomologyError("boundary escaped the cycle space")
            img_coords.append(y)
        self.img_rref, self.img_pivots = intmat.field_rref(F, img_coords) if (
            img_coords
        ) else ([], [])
        self.quotient_coords = [j for j in range(z) if j not in self.img_pivots]
        self.dim = len(self.quotient_coords)

    def class_of(self, chain_vec):
        if self.trivial_beyond:
            return []
        F = self.F
        vf = [F.of_int(x) if isinstance(x, int) else x for x in chain_vec]
        y = intmat.field_solve_in_rowspace(F, self.kernel, vf)
        if y is None:
            raise HomologyError("vector is not a cycle")
        y = list(y)
        for row, piv in zip(self.img_rref, self.img_pivots):
            c = y[piv]
            if c != F.zero:
                y = [F.sub(a, F.mul(c, b)) for a, b in zip(y, row)]
        return [y[j] for j in self.quotient_coords]

    def generator_chain(self, idx):
        j = self.quotient_coords[idx]
        return list(self.kernel[j])


# ---------------------------------------------------------------------------
# maps of presented abelian groups


def _relation_columns(orders):
    """Columns spanning the relation lattice of a presented group."""
    cols = []
    for j, d in enumerate(orders):
        if d > 1:
            col = [0] * len(orders)
            col[j] = d
            cols.append(col)
    return cols


def map_is_surjective(src_orders, tgt_orders, M):
    b = len(tgt_orders)
    if b == 0:
        return True
    cols = [[M[i][j] for i in range(b)] for j in range(len(src_orders))]
    cols += _relation_columns(tgt_orders)
    if not cols:
        return False
    A = [[col[i] for col in cols] for i in range(b)]
    factors = intmat.sparse_invariant_factors(intmat.dense_to_sparse(A))
    return len(factors) == b and all(d == 1 for d in factors)


def map_is_injective(src_orders, tgt_orders, M):
    a = len(src_orders)
    if a == 0:
        return True
    b = len(tgt_orders)
    rel_b = _relation_columns(tgt_orders)
    # solutions (x, y) of M x = R_B y; project to x and test containment
    # in the source relation lattice
    if b == 0:
        gens = intmat.identity(a)
    else:
        A = [
            [M[i][j] for j in range(a)] + [-rel_b[t][i] for t in range(len(rel_b))]
            for i in range(b)
        ]
        kern = intmat.right_kernel(A)
        gens = [row[:a] for row in kern]
    for v in gens:
        for j, d in enumerate(src_orders):
            if d > 1:
                if v[j] % d:
                    return False
            elif d == 0:
                if v[j]:
                    return False
    return True


def is_split_injective(src_orders, tgt_orders, M):
    """Whether the presented map admits an integer retraction r with
    r o f = id; decided by solving the linear system for r exactly."""
    a = len(src_orders)
    if a == 0:
        return True
    b = len(tgt_orders)
    rel_a = _relation_columns(src_orders)
    rel_b = _relation_columns(tgt_orders)
    ta = len(rel_a)
    tb = len(rel_b)
    # unknowns: X (a x b), V (ta x a), W (ta x tb)
    n_unknowns = a * b + ta * a + ta * tb

    def xi(i, k):
        return i * b + k

    def vi(t, j):
        return a * b + t * a + j

    def wi(t, l):
        return a * b + ta * a + t * tb + l

    rows = []
    rhs = []
    # X M - R_A V = I_a   (a x a equations)
    for i in range(a):
        for j in range(a):
            row = [0] * n_unknowns
            for k in range(b):
                row[xi(i, k)] = M[k][j]
            for t in range(ta):
                row[vi(t, j)] = -rel_a[t][i]
            rows.append(row)
            rhs.append(1 if i == j else 0)
    # X R_B - R_A W = 0    (a x tb equations)
    for i in range(a):
        for l in range(tb):
            row = [0] * n_unknowns
            for k in range(b):
                row[xi(i, k)] = rel_b[l][k]
            for t in range(ta):
                row[wi(t, l)] = -rel_a[t][i]
            rows.append(row)
            rhs.append(0)
    return intmat.solve_int(rows, rhs) is not None


@dataclass
class InducedHomologyMap:
    """Map on homology induced by a chain map, with decided properties.

    ``matrix[i][j]`` is the i-th target-generator coordinate of the
    image of the j-th source generator; generator orders follow the
    HomologyGroup convention (torsion first, then zeros for free).
    """

    source: HomologyGroup
    target: HomologyGroup
    src_orders: list
    tgt_orders: list
    matrix: list
    is_injective: bool
    is_surjective: bool
    is_split_injective: bool

    @property
    def is_iso(self):
        return self.is_injective and self.is_surjective

    def to_json(self):
        return {
            "iso": self.is_iso,
            "surj": self.is_surjective,
            "inj": self.is_injective,
            "split": self.is_split_injective,
        }


def induced_map(chain_map, i, coeff=Z):
    """The induced map on degree-i homology, with exact property flags.

    Commutation of the chain map with both boundaries is verified
    first (memoized); over fields split-injectivity equals injectivity.
    """
    chain_map.verify()
    src, tgt = chain_map.source, chain_map.target
    if coeff.kind == "Z":
        hb_s = _ZHomologyBasis(src, i)
        hb_t = _ZHomologyBasis(tgt, i)
        F_i = chain_map.mats.get(i, {})
        a = len(hb_s.orders)
        cols = []
        for idx in range(a):
            chain = hb_s.generator_chain(idx)
            pushed = _push_row(chain, F_i, tgt.dims[i] if i <= tgt.top_degree else 0)
            cols.append(hb_t.class_of(pushed))
        b = len(hb_t.orders)
        M = [[cols[j][t] for j in range(a)] for t in range(b)]
        inj = map_is_injective(hb_s.orders, hb_t.orders, M)
        surj = map_is_surjective(hb_s.orders, hb_t.orders, M)
        split = is_split_injective(hb_s.orders, hb_t.orders, M)
        return InducedHomologyMap(
            source=hb_s.group(),
            target=hb_t.group(),
            src_orders=list(hb_s.orders),
            tgt_orders=list(hb_t.orders),
            matrix=M,
            is_injective=inj,
            is_surjective=surj,
            is_split_injective=split,
        )
    F = coeff.field()
    hb_s = _FieldHomologyBasis(src, i, F)
    hb_t = _FieldHomologyBasis(tgt, i, F)
    F_i = chain_map.mats.get(i, {})
    cols = []
    for idx in range(hb_s.dim):
        chain = hb_s.generator_chain(idx)
        pushed = _push_row_field(F, chain, F_i, tgt.dims[i] if i <= tgt.top_degree else 0)
        cols.append(hb_t.class_of(pushed))
    M = [[cols[j][t] for j in range(hb_s.dim)] for t in range(hb_t.dim)]
    rank = intmat.field_rank(F, M) if M and M[0] else 0
    inj = rank == hb_s.dim
    surj = rank == hb_t.dim
    return InducedHomologyMap(
        source=HomologyGroup(hb_s.dim),
        target=HomologyGroup(hb_t.dim),
        src_orders=[0] * hb_s.dim,
        tgt_orders=[0] * hb_t.dim,
        matrix=M,
        is_injective=inj,
        is_surjective=surj,
        is_split_injective=inj,
    )


def _push_row(vec, sparse_rows, width):
    out = [0] * width
    for i, x in enumerate(vec):
        if x:
            row = sparse_rows.get(i)
            if row:
                for j, v in row.items():
                    out[j] += x * v
    return out


def _push_row_field(F, vec, sparse_rows, width):
    out = [F.zero] * width
    for i, x in enumerate(vec):
        if x != F.zero:
            row = sparse_rows.get(i)
            if row:
                for j, v in row.items():
                    out[j] = F.add(out[j], F.mul(x, F.of_int(v)))
    return out
