import math

import pytest

from hurstab import coeffsys as cs
from hurstab.groups import FiniteGroup, conjugacy_closure

S3 = FiniteGroup.symmetric(3)
TRANSPOSITIONS = conjugacy_closure({S3.element_names.index("(1 2)")}, S3)
Z2 = FiniteGroup.cyclic(2)
CENTRAL = conjugacy_closure({1}, Z2)


@pytest.fixture(scope="module")
def hurwitz_s3():
    return cs.build_hurwitz_system(S3, TRANSPOSITIONS, TRANSPOSITIONS.elements[0], 6)


@pytest.fixture(scope="module")
def hurwitz_z2():
    return cs.build_hurwitz_system(Z2, CENTRAL, 1, 6)


def test_hurwitz_system_shapes(hurwitz_s3, hurwitz_z2):
    assert hurwitz_z2.dims == [1] * 7
    assert all(cols == [{0: 1}] for cols in hurwitz_z2.structs)
    assert hurwitz_s3.dims == [3**k for k in range(7)]
    # k=2 generator is the 9x9 permutation of the move
    gen = hurwitz_s3.gens[2][0]
    assert all(len(col) == 1 and list(col.values()) == [1] for col in gen)
    image_rows = sorted(next(iter(col)) for col in gen)
    assert image_rows == list(range(9))


def test_braid_relation_validation_catches_mutants(hurwitz_s3):
    bad_gens = [list(m) for m in hurwitz_s3.gens]
    bad_gens[3] = list(bad_gens[3])
    # replace sigma_1 at k=3 by a wrong permutation (swap two columns)
    cols = [dict(c) for c in bad_gens[3][0]]
    cols[0], cols[1] = cols[1], cols[0]
    bad_gens[3][0] = cols
    with pytest.raises(cs.CoeffSystemError):
        cs.CoeffSystem.build(
            hurwitz_s3.K_max, hurwitz_s3.dims, bad_gens, hurwitz_s3.structs
        )


def test_check_extension_passes(hurwitz_s3, hurwitz_z2):
    assert cs.check_extension(hurwitz_z2, ell_max=3, samples=10, seed=0).passed
    rep = cs.check_extension(hurwitz_s3, ell_max=3, samples=25, seed=1)
    assert rep.passed
    assert any(c["diagram"] == "b" for c in rep.cells)


def test_check_extension_fails_with_witness(hurwitz_s3):
    mutant = cs.CoeffSystem(
        K_max=hurwitz_s3.K_max,
        dims=list(hurwitz_s3.dims),
        gens=[list(m) for m in hurwitz_s3.gens],
        gen_invs=[list(m) for m in hurwitz_s3.gen_invs],
        structs=list(hurwitz_s3.structs),
    )
    # transpose one generator matrix (turns the action into its inverse)
    k = 3
    cols = mutant.gens[k][0]
    transposed = [dict() for _ in cols]
    for j, col in enumerate(cols):
        for r, v in col.items():
            transposed[r][j] = v
    mutant.gens[k] = [transposed] + list(mutant.gens[k][1:])
    mutant.gen_invs[k] = [cols] + list(mutant.gen_invs[k][1:])
    rep = cs.check_extension(mutant, ell_max=2, samples=40, seed=0)
    assert not rep.passed
    assert rep.failure is not None and "k" in rep.failure


def test_delta_examples(hurwitz_s3, hurwitz_z2):
    # constant system: delta = 0
    const = cs.constant_system(5, rank=1)
    res = cs.delta(const)
    assert res.system.is_zero()
    # |c| = 1 Hurwitz: delta = 0, degree 0
    assert cs.degree(hurwitz_z2, 4).value == 0
    # |c| = 3: cokernel ranks 2 * 3^k
    res3 = cs.delta(hurwitz_s3)
    assert res3.system.dims == [2 * 3**k for k in range(6)]
    assert res3.objectwise_split and res3.naturally_split


def test_permutation_append_system_has_degree_one():
    # F(k) = Z^k with coordinate-transposition action and basis append
    K = 6
    dims = list(range(K + 1))
    gens = []
    for k in range(K + 1):
        mats = []
        for i in range(1, k):
            cols = []
            for j in range(k):
                tgt = j
                if j == i - 1:
                    tgt = i
                elif j == i:
                    tgt = i - 1
                cols.append({tgt: 1})
            mats.append(cols)
        gens.append(mats)
    structs = [[{j: 1} for j in range(k)] for k in range(K)]
    sys = cs.CoeffSystem.build(K, dims, gens, structs, name="coords")
    res = cs.delta(sys)
    assert res.system.dims == [1] * K  # constant Z
    assert cs.degree(sys, 3).value == 1


def test_degree_of_s3_exceeds_cutoff(hurwitz_s3):
    rep = cs.degree(hurwitz_s3, 4)
    assert rep.value == ">cutoff"
    assert rep.delta_ranks[1] == [2 * 3**k for k in range(6)]
    assert rep.k_max_consulted == 6


def test_degree_undefined_on_torsion_cokernel():
    # structure map Z --2--> Z is injective but not split
    K = 3
    dims = [1] * (K + 1)
    gens = [[cs.cols_identity(1) for _ in range(max(k - 1, 0))]
            for k in range(K + 1)]
    structs = [[{0: 2}] for _ in range(K)]
    sys = cs.CoeffSystem.build(K, dims, gens, structs, name="doubling")
    with pytest.raises(cs.DeltaUndefined):
        cs.delta(sys)
    rep = cs.degree(sys, 2)
    assert rep.value == "undefined"
    assert "split" in rep.reason


def test_kunneth_examples():
    point, circle = cs.GradedModule.point(), cs.GradedModule.circle()
    F1 = cs.build_kunneth_system(point, circle, 1, 8)
    assert F1.dims == [k for k in range(9)]
    F0 = cs.build_kunneth_system(point, circle, 0, 8)
    assert F0.dims == [1] * 9
    assert cs.degree(F0, 3).value == 0
    F2 = cs.build_kunneth_system(point, circle, 2, 8)
    assert F2.dims == [math.comb(k, 2) for k in range(9)]
    # Koszul sign: the generator on two degree-1 slots acts by -swap;
    # at k=2, i=2 the module is rank 1 and sigma_1 acts by -1
    assert F2.gens[2][0] == [{0: -1}]


def test_kunneth_rank_recursion():
    point, circle = cs.GradedModule.point(), cs.GradedModule.circle()
    for i in (1, 2, 3):
        F = cs.build_kunneth_system(point, circle, i, 9)
        rep = cs.degree(F, i)
        assert rep.value == i
        for m, ranks in enumerate(rep.delta_ranks):
            expect = [math.comb(k, i - m) if i - m >= 0 else 0
                      for k in range(10 - m)]
            assert ranks == expect


def test_kunneth_delta_rank_identity_multi_degree():
    # delta F_i should have rank sum_j F_{i-j}(k) * rank H_j degreewise,
    # here with a fibre factor carrying ranks (1, 2, 1) in degrees 0..2
    point = cs.GradedModule.point()
    HZ = cs.GradedModule(((0, 1), (1, 2), (2, 1)))
    K = 7
    systems = {i: cs.build_kunneth_system(point, HZ, i, K) for i in range(4)}
    for i in (1, 2, 3):
        res = cs.delta(systems[i])
        for k in range(K):
            expected = 2 * systems[i - 1].dims[k] + (
                systems[i - 2].dims[k] if i >= 2 else 0
            )
            assert res.system.dims[k] == expected, (i, k)
        assert res.naturally_split


def test_kunneth_validation():
    point = cs.GradedModule.point()
    disconnected = cs.GradedModule(((0, 2), (1, 1)))
    with pytest.raises(cs.CoeffSystemError):
        cs.build_kunneth_system(point, disconnected, 1, 4)
    torsion = cs.GradedModule(((0, 1),), torsion=((1, (2,)),))
    with pytest.raises(cs.CoeffSystemError):
        cs.build_kunneth_system(point, torsion, 1, 4)
    with pytest.raises(cs.CoeffSystemError):
        cs.build_kunneth_system(point, cs.GradedModule.circle(), 1, 4,
                                cZ={0: [[-1]]})


def test_kunneth_nontrivial_HY():
    # HY with two degree-0 classes doubles every rank
    HY = cs.GradedModule(((0, 2),))
    F1 = cs.build_kunneth_system(HY, cs.GradedModule.circle(), 1, 6)
    assert F1.dims == [2 * k for k in range(7)]
    assert cs.degree(F1, 3).value == 1


def test_degree_laws_on_generated_pairs():
    point, circle = cs.GradedModule.point(), cs.GradedModule.circle()
    pool = {
        i: cs.build_kunneth_system(point, circle, i, 8) for i in range(4)
    }
    checked = 0
    for a in range(4):
        for b in range(4):
            s = cs.direct_sum(pool[a], pool[b])
            assert cs.degree(s, 7).value == max(a, b)
            t = cs.tensor(pool[a], pool[b])
            tv = cs.degree(t, 7).value
            assert isinstance(tv, int) and tv <= a + b
            checked += 2
    assert checked >= 20


def test_tensor_with_constant_does_not_raise_degree():
    point, circle = cs.GradedModule.point(), cs.GradedModule.circle()
    F2 = cs.build_kunneth_system(point, circle, 2, 8)
    for rank in (1, 2, 3):
        t = cs.tensor(F2, cs.constant_system(8, rank))
        v = cs.degree(t, 6).value
        assert isinstance(v, int) and v <= 2


def test_extension_criterion_on_kunneth():
    F2 = cs.build_kunneth_system(
        cs.GradedModule.point(), cs.GradedModule.circle(), 2, 6
    )
    assert cs.check_extension(F2, ell_max=3, samples=15, seed=2).passed
