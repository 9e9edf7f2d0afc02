"""Truncated free resolutions over braid-group rings and their integer
specialisations with Hurwitz coefficients.

The chain model is the type-A Salvetti complex, truncated at d_max:
the degree-j basis is the set of j-element subsets Gamma of the
standard generators {s_1..s_{k-1}}, so rank_j = C(k-1, j), and

    d(Gamma) = sum over tau in Gamma, beta minimal coset rep of
               W_{Gamma - tau} in W_Gamma of
               (-1)^(l(beta) + position of tau in Gamma) lift(beta) (Gamma - tau)

with lift(beta) the positive braid word of any reduced word of beta
(well-defined; asserted against a second reduced word).  The sign
convention is validated, not trusted: every specialisation checks the
composite of consecutive boundaries is exactly zero, and the module
homology is cross-checked against the Fox presentation complex in
degrees 0 and 1.

Matrix conventions for the integer specialisation: the degree-j matrix
has shape dims_j x dims_{j-1} (rows are the source basis), acting on
row vectors, so the chain condition reads D_{j+1} * D_j = 0.  A
group-ring coefficient sum(n_w w) specialises to the integer block
sum(n_w P_w) where P_w[alpha, beta] = 1 iff alpha = w . beta under the
Hurwitz action; with these conventions homology of the specialised
complex is group homology of B_k with coefficients in the module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import garside, intmat
from .braid import act_on_entries


class ResolutionError(ValueError):
    pass


class GroupRingElement:
    """Element of the integral group ring of B_k, keyed by normal forms."""

    __slots__ = ("strands", "terms")

    def __init__(self, strands, terms=None):
        self.strands = strands
        self.terms = {}
        if terms:
            for form, coeff in terms.items():
                if coeff:
                    self.terms[form] = coeff

    @staticmethod
    def zero(strands):
        return GroupRingElement(strands)

    @staticmethod
    def one(strands):
        return GroupRingElement(strands, {garside.normal_form(strands, []): 1})

    @staticmethod
    def from_word(strands, letters, coeff=1):
        return GroupRingElement(
            strands, {garside.normal_form(strands, letters): coeff}
        )

    def __add__(self, other):
        out = dict(self.terms)
        for form, c in other.terms.items():
            v = out.get(form, 0) + c
            if v:
                out[form] = v
            else:
                del out[form]
        return GroupRingElement(self.strands, out)

    def __neg__(self):
        return GroupRingElement(self.strands, {f: -c for f, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for fa, ca in self.terms.items():
            wa = fa.to_word_letters()
            for fb, cb in other.terms.items():
                prod = garside.normal_form(self.strands, wa + fb.to_word_letters())
                v = out.get(prod, 0) + ca * cb
                if v:
                    out[prod] = v
                else:
                    del out[prod]
        return GroupRingElement(self.strands, out)

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElement)
            and self.strands == other.strands
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.strands, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def augmentation(self):
        """Image under the trivial character (all generators -> 1)."""
        return sum(self.terms.values())

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{f!r}" for f, c in self.terms.items())


@dataclass
class FreeComplex:
    """Free complex over Z[B_k], degrees 0..d_max.

    ``boundaries[j]`` (1 <= j <= d_max) is a sparse dict
    {(row, col): GroupRingElement} of shape ranks[j] x ranks[j-1].
    ``basis_labels[j]`` names the degree-j basis.
    """

    strands: int
    d_max: int
    ranks: list
    boundaries: dict
    basis_labels: list
    complete: bool = False

    def boundary_entry(self, j, row, col):
        return self.boundaries[j].get(
            (row, col), GroupRingElement.zero(self.strands)
        )

    def ring_square_is_zero(self):
        """Whether d_j o d_{j+1} = 0 holds already over the group ring."""
        for j in range(1, self.d_max):
            upper = self.boundaries[j + 1]
            lower = self.boundaries[j]
            acc = {}
            for (r, m), elt in upper.items():
                for (m2, c), elt2 in lower.items():
                    if m2 != m:
                        continue
                    key = (r, c)
                    prod = elt * elt2
                    acc[key] = acc.get(key, GroupRingElement.zero(self.strands)) + prod
            if any(not v.is_zero() for v in acc.values()):
                return False
        return True


def _parabolic_elements(k, gens):
    """All elements of the parabolic subgroup of S_k generated by the
    adjacent transpositions with 1-based indices in ``gens``."""
    ident = garside.perm_id(k)
    seen = {ident}
    frontier = [ident]
    ts = [garside.transposition(k, i) for i in gens]
    while frontier:
        nxt = []
        for p in frontier:
            for t in ts:
                q = garside.perm_mul(p, t)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def _min_coset_reps(k, gamma, sub):
    """Minimal-length representatives of cosets w W_sub inside W_gamma."""
    sub = set(sub)
    return [
        w
        for w in _parabolic_elements(k, gamma)
        if not (garside.right_descents(w) & sub)
    ]


def salvetti_complex(k, d_max):
    """The truncated type-A Salvetti free complex for B_k.

    Exact in degrees below d_max; the full complex (d_max = k-1) is a
    complete free resolution of the trivial module.
    """
    if not 1 <= d_max <= k - 1:
        raise ResolutionError(f"need 1 <= d_max <= k-1, got d_max={d_max}, k={k}")
    gens = list(range(1, k))
    basis_labels = [
        [tuple(c) for c in itertools.combinations(gens, j)]
        for j in range(d_max + 1)
    ]
    ranks = [len(b) for b in basis_labels]
    boundaries = {}
    for j in range(1, d_max + 1):
        index_below = {label: i for i, label in enumerate(basis_labels[j - 1])}
        mat = {}
        for row, gamma in enumerate(basis_labels[j]):
            for pos, tau in enumerate(gamma, start=1):
                sub = tuple(g for g in gamma if g != tau)
                col = index_below[sub]
                entry = GroupRingElement.zero(k)
                for beta in _min_coset_reps(k, gamma, sub):
                    lift = garside.form_from_positive_permutation(
                        k, beta, check_matsumoto=True
                    )
                    sign = -1 if (garside.perm_length(beta) + pos) % 2 else 1
                    entry = entry + GroupRingElement(k, {lift: sign})
                if not entry.is_zero():
                    key = (row, col)
                    mat[key] = mat.get(key, GroupRingElement.zero(k)) + entry
        boundaries[j] = mat
    return FreeComplex(
        strands=k,
        d_max=d_max,
        ranks=ranks,
        boundaries=boundaries,
        basis_labels=basis_labels,
        complete=(d_max == k - 1),
    )


def _fox_derivatives(strands, letters, gen_count):
    """Fox derivatives of a signed word, evaluated in the group ring.

    d(uv) = du + u dv; d(x_i)/d(x_j) = delta_ij; d(x^-1) = -x^-1 per
    generator.  Returns one GroupRingElement per generator.
    """
    derivs = [GroupRingElement.zero(strands) for _ in range(gen_count)]
    prefix = []
    for idx, sign in letters:
        if sign == 1:
            derivs[idx - 1] = derivs[idx - 1] + GroupRingElement.from_word(
                strands, prefix
            )
            prefix = prefix + [(idx, 1)]
        else:
            prefix = prefix + [(idx, -1)]
            derivs[idx - 1] = derivs[idx - 1] - GroupRingElement.from_word(
                strands, prefix
            )
    return derivs


def braid_relators(k):
    """Defining relators of B_k, labelled by the 2-subsets {i, j}."""
    rels = []
    for i, j in itertools.combinations(range(1, k), 2):
        if j == i + 1:
            word = [(i, 1), (j, 1), (i, 1), (j, -1), (i, -1), (j, -1)]
        else:
            word = [(i, 1), (j, 1), (i, -1), (j, -1)]
        rels.append(((i, j), word))
    return rels


def fox_complex(k):
    """Presentation complex of B_k with Fox-derivative second boundary.

    Computes H_0 and H_1 exactly for any coefficients; the independent
    oracle against the Salvetti model.
    """
    if k < 2:
        raise ResolutionError("fox complex needs k >= 2")
    gens = list(range(1, k))
    rels = braid_relators(k)
    basis_labels = [[()], [(i,) for i in gens], [lab for lab, _ in rels]]
    ranks = [1, len(gens), len(rels)]
    boundaries = {1: {}, 2: {}}
    for row, i in enumerate(gens):
        boundaries[1][(row, 0)] = GroupRingElement.from_word(
            k, [(i, 1)]
        ) - GroupRingElement.one(k)
    for row, (_, word) in enumerate(rels):
        for col, d in enumerate(_fox_derivatives(k, word, len(gens))):
            if not d.is_zero():
                boundaries[2][(row, col)] = d
    return FreeComplex(
        strands=k,
        d_max=2,
        ranks=ranks,
        boundaries=boundaries,
        basis_labels=basis_labels,
        complete=False,
    )


# ---------------------------------------------------------------------------
# coefficient modules


class HurwitzModule:
    """Free module on c^k with the Hurwitz permutation action.

    The basis is all tuples in c^k in lexicographic order.  ``g_hat``
    is the stabiliser element appended by the structure map into the
    (k+1)-module.
    """

    def __init__(self, classes, k, g_hat):
        if g_hat not in classes:
            raise ResolutionError("stabiliser element must lie in the class set")
        self.classes = classes
        self.k = k
        self.g_hat = g_hat
        self.basis = [
            tuple(t) for t in itertools.product(classes.elements, repeat=k)
        ]
        self._index = {t: i for i, t in enumerate(self.basis)}

    @property
    def dim(self):
        return len(self.basis)

    def index_of(self, entries):
        return self._index[tuple(entries)]

    def word_permutation(self, letters):
        """The permutation of the basis given by a braid word (array
        p with p[beta] = alpha meaning basis_beta maps to basis_alpha)."""
        group = self.classes.group
        return [
            self._index[act_on_entries(letters, t, group)] for t in self.basis
        ]

    def form_permutation(self, form):
        return self.word_permutation(form.to_word_letters())

    def stabilisation_rows(self, target):
        """Row indices in the (k+1)-module basis of each appended tuple."""
        return [target.index_of(t + (self.g_hat,)) for t in self.basis]


class TrivialModule:
    """Rank-r module with trivial braid action."""

    def __init__(self, k, rank=1):
        self.k = k
        self.rank = rank

    @property
    def dim(self):
        return self.rank


@dataclass
class IntegerComplex:
    """Specialised integer chain complex.

    ``mats[j]`` has shape dims[j] x dims[j-1] acting on row vectors;
    the chain condition is mats[j+1] * mats[j] = 0, verified exactly at
    construction.  ``complete`` marks a full (untruncated) resolution,
    whose top homology is also trustworthy.  ``cell_labels`` and
    ``module_dim`` remember the (cell, module-basis) block structure of
    each degree; dims[j] = len(cell_labels[j]) * module_dim.
    """

    dims: list
    mats: dict
    complete: bool = False
    strands: int = 0
    cell_labels: list = field(default_factory=list)
    module_dim: int = 1
    # read-through cache of boundary invariant factors / field ranks,
    # keyed by (degree, coefficient tag); writes are idempotent
    snf_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def top_degree(self):
        return len(self.dims) - 1

    def verify_chain(self):
        for j in range(1, self.top_degree):
            prod = intmat.sparse_mul(self.mats[j + 1], self.mats[j])
            if not intmat.sparse_is_zero(prod):
                raise ResolutionError(
                    f"boundary composite in degrees {j + 1},{j} is nonzero; "
                    "sign convention or action bug"
                )

    def to_json(self):
        return {
            "dims": list(self.dims),
            "complete": self.complete,
            "matrices": {
                str(j): sorted(
                    [i, c, v]
                    for i, row in self.mats[j].items()
                    for c, v in row.items()
                )
                for j in range(1, self.top_degree + 1)
            },
        }


def specialize(complex_, module):
    """Specialise a free complex at a coefficient module.

    Fails loudly if the composite of consecutive specialised boundaries
    is nonzero (which would signal a boundary-formula bug).
    """
    k = complex_.strands
    if getattr(module, "k", k) != k:
        raise ResolutionError("module strand count does not match the complex")
    m = module.dim
    dims = [r * m for r in complex_.ranks]
    mats = {}
    trivial = isinstance(module, TrivialModule)
    perm_cache = {}
    for j in range(1, complex_.d_max + 1):
        entries = []
        for (row, col), elt in complex_.boundaries[j].items():
            if trivial:
                a = elt.augmentation()
                if a:
                    for t in range(m):
                        entries.append((row * m + t, col * m + t, a))
                continue
            for form, coeff in elt.terms.items():
                perm = perm_cache.get(form)
                if perm is None:
                    perm = module.form_permutation(form)
                    perm_cache[form] = perm
                base_r = row * m
                base_c = col * m
                for beta in range(m):
                    entries.append((base_r + perm[beta], base_c + beta, coeff))
        mats[j] = intmat.sparse_from_entries(entries)
    out = IntegerComplex(
        dims=dims,
        mats=mats,
        complete=complex_.complete,
        strands=k,
        cell_labels=[list(lbls) for lbls in complex_.basis_labels],
        module_dim=m,
    )
    out.verify_chain()
    return out


def point_complex(module):
    """The complete complex for B_1 (trivial group): one degree, no
    boundaries.  Lets the stabilisation pipeline start at k = 1."""
    return IntegerComplex(
        dims=[module.dim],
        mats={},
        complete=True,
        strands=1,
        cell_labels=[[()]],
        module_dim=module.dim,
    )


@dataclass
class ChainMap:
    """Chain map between integer complexes, one matrix per shared degree.

    ``mats[j]`` has shape source.dims[j] x target.dims[j] (row
    convention).  Commutation with both boundaries is exact:
    D^src_j * F_{j-1} = F_j * D^tgt_j.
    """

    source: IntegerComplex
    target: IntegerComplex
    mats: dict
    verified: bool = field(default=False, repr=False, compare=False)

    def verify(self):
        if self.verified:
            return
        top = min(self.source.top_degree, self.target.top_degree)
        for j in range(1, top + 1):
            lhs = intmat.sparse_mul(self.source.mats[j], self.mats[j - 1])
            rhs = intmat.sparse_mul(self.mats[j], self.target.mats[j])
            if lhs != rhs:
                raise ResolutionError(
                    f"chain map fails to commute with boundaries in degree {j}"
                )
        self.verified = True


def stabilisation_chain_map(source_complex, target_complex, module_k, module_k1):
    """Chain-level stabilisation map from the k-complex to the (k+1)-complex.

    Degree-j basis subsets of {s_1..s_{k-1}} include into subsets of
    {s_1..s_k}; on coefficients, tuples are appended by the stabiliser.
    The square with both boundaries is asserted to commute exactly.
    """
    if module_k1.k != module_k.k + 1:
        raise ResolutionError("target module must have one more strand")
    if module_k1.classes is not module_k.classes and (
        module_k1.classes.elements != module_k.classes.elements
    ):
        raise ResolutionError("modules must share a class set")
    rows_map = module_k.stabilisation_rows(module_k1)
    m_src = module_k.dim
    m_tgt = module_k1.dim
    mats = {}
    shared = min(source_complex.top_degree, target_complex.top_degree)
    for j in range(0, shared + 1):
        # each source cell label (a generator subset) also names a
        # target cell; map labels explicitly rather than by position
        tgt_index = {lbl: i for i, lbl in enumerate(target_complex.cell_labels[j])}
        entries = []
        for cell, label in enumerate(source_complex.cell_labels[j]):
            tgt_cell = tgt_index[label]
            for beta in range(m_src):
                entries.append(
                    (cell * m_src + beta, tgt_cell * m_tgt + rows_map[beta], 1)
                )
        mats[j] = intmat.sparse_from_entries(entries)
    cm = ChainMap(source=source_complex, target=target_complex, mats=mats)
    cm.verify()
    return cm
