import itertools
from math import gcd

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from oracles import literal_cocycle_violations, rank_mod_p
from tlft.cocycles import (CocycleError, CocycleSystem, _condition_terms, _symmetry_terms,
                           carry_dw3, check_conditions, check_dw3, check_symmetries, combine,
                           cubic_dw3, parse_cocycle, parse_dw3, relation_matrix, search_dw3,
                           search_systems, serialize_cocycle, smith_kernel, solution_count,
                           trivial_dw3, trivial_system)
from tlft.groups import cyclic, group_from_spec, symmetric


@pytest.mark.parametrize("spec,N", [("Z2", 2), ("Z3", 3), ("Z2xZ2", 2), ("S3", 4), ("Z4", 4)])
def test_trivial_system_passes(spec, N):
    s = trivial_system(group_from_spec(spec), N)
    assert check_conditions(s) == []
    assert check_symmetries(s) == []


def test_instance_counts():
    G = cyclic(3)
    counts = {cid: len(free[0]) for cid, free, _ in _condition_terms(G)}
    # the beta pentagon has five free arguments like the others
    assert counts == {"i": 3 ** 5, "ii": 3 ** 5, "iii": 3 ** 5, "iv": 3 ** 5}
    ids = [cid for cid, _, _ in _symmetry_terms(G)]
    # identity plus the listed forms: alpha 4, phi 5, beta 4
    assert sum(i.startswith("alpha") for i in ids) + 1 == 4
    assert sum(i.startswith("phi") for i in ids) + 1 == 5
    assert sum(i.startswith("beta") for i in ids) + 1 == 4


def test_single_bumped_alpha_entry_fails():
    G = cyclic(2)
    failing = 0
    for idx in itertools.product(range(2), repeat=4):
        s = trivial_system(G, 2)
        s.alpha[idx] = 1
        v = check_conditions(s)
        failing += bool(v)
        assert v == sorted(v)
    # every entry except alpha(1,1,1;1) occurs an odd number of times in some instance
    assert failing == 15
    s = trivial_system(G, 2)
    s.alpha[0, 1, 1, 1] = 1
    assert {cid for cid, _ in check_conditions(s)} == {"i"}


def test_asymmetric_alpha_entry():
    s = trivial_system(cyclic(3), 3)
    s.alpha[1, 2, 1, 0] = 1
    assert check_symmetries(s)


def test_dw3_checks():
    G = cyclic(2)
    assert check_dw3(trivial_dw3(G, 2)) == []
    c = cubic_dw3(G)
    assert check_dw3(c) == []
    for idx in itertools.product(range(2), repeat=3):
        d = cubic_dw3(G)
        d.alpha3[idx] ^= 1
        # flipping (1,1,1) gives back the trivial cocycle
        assert bool(check_dw3(d)) == (idx != (1, 1, 1))
    assert check_dw3(carry_dw3(cyclic(3), 3)) == []
    assert check_dw3(carry_dw3(cyclic(4), 4, 3)) == []


def test_dw3_search_counts_cocycles():
    # Z^3(Z/2, Z/2) is the 3-cochains killed by the coboundary; its size is 2^(8 - rank)
    gens = search_dw3(cyclic(2), 2)
    assert all(check_dw3(c) == [] for c in gens)
    from tlft.cocycles import dw3_relation_matrix
    A = dw3_relation_matrix(cyclic(2))
    assert len(gens) == 8 - rank_mod_p(A.tolist(), 2)


def _snf_count(A, N):
    S = smith_normal_form(Matrix(A.tolist()), domain=ZZ)
    d = [int(S[i, i]) for i in range(min(S.shape)) if S[i, i] != 0]
    count = N ** (A.shape[1] - len(d))
    for x in d:
        count *= gcd(x, N)
    return count


@pytest.mark.parametrize("N", [2, 4])
@pytest.mark.parametrize("sym", [True, False])
def test_solution_count_matches_integer_smith_form(N, sym):
    A = relation_matrix(cyclic(2), sym)
    _, inv = smith_kernel(A, N)
    assert solution_count(inv, A.shape[1], N) == _snf_count(A, N)


@pytest.mark.parametrize("spec,N,sym", [("Z2", 2, True), ("Z2", 2, False), ("Z3", 3, True),
                                        ("Z3", 3, False), ("Z2xZ2", 2, True)])
def test_solver_rank_and_soundness(spec, N, sym):
    G = group_from_spec(spec)
    A = relation_matrix(G, sym)
    gens = search_systems(G, N, sym)
    assert len(gens) == A.shape[1] - rank_mod_p(A.tolist(), N)
    rev = search_systems(G, N, sym, column_order=np.arange(A.shape[1])[::-1])
    assert len(rev) == len(gens)
    for s in gens + rev:
        assert check_conditions(s) == []
        if sym:
            assert check_symmetries(s) == []
        assert literal_cocycle_violations(s, symmetries=sym) == 0


def test_search_values():
    assert len(search_systems(cyclic(2), 2)) == 5
    assert len(search_systems(cyclic(2), 2, include_symmetries=False)) == 14
    z3 = search_systems(cyclic(3), 3)
    assert len(z3) == 1
    assert not z3[0].alpha.any() and not z3[0].beta.any() and z3[0].phi.any()


def test_printed_variants_differ():
    G = cyclic(3)
    a = relation_matrix(G, True)
    b = relation_matrix(G, True, printed=True)
    assert a.shape != b.shape or (a != b).any()


@given(st.integers(0, 2 ** 16))
def test_combinations_of_generators_are_solutions(seed):
    gens = search_systems(cyclic(2), 2)
    rng = np.random.default_rng(seed)
    s = combine(gens, rng.integers(0, 2, len(gens)))
    assert check_conditions(s) == [] and check_symmetries(s) == []


@given(st.sampled_from([("Z2", 2), ("Z3", 3), ("Z2", 4)]), st.integers(0, 2 ** 16),
       st.floats(0.0, 0.2))
def test_checker_matches_literal_evaluation(spec_n, seed, density):
    # sparse random tables hit both satisfied and violated instances
    spec, N = spec_n
    G = group_from_spec(spec)
    rng = np.random.default_rng(seed)
    s = trivial_system(G, N)
    for t in (s.alpha, s.beta, s.phi):
        mask = rng.random(t.shape) < density
        t[mask] = rng.integers(0, N, int(mask.sum()))
    assert literal_cocycle_violations(s, False) == len(check_conditions(s))
    assert literal_cocycle_violations(s) == len(check_conditions(s)) + len(check_symmetries(s))


@given(st.integers(0, 2 ** 16))
def test_cocycle_file_round_trip(seed):
    G = symmetric(3)
    rng = np.random.default_rng(seed)
    s = CocycleSystem.from_vector(G, 5, rng.integers(0, 5, 3 * G.order ** 4) *
                                  (rng.random(3 * G.order ** 4) < 0.01))
    assert parse_cocycle(serialize_cocycle(s, "S3")) == s


def test_cocycle_file_errors():
    with pytest.raises(CocycleError):
        parse_cocycle("group Z2\nalpha 0 0 0 0 1\n")
    with pytest.raises(CocycleError):
        parse_cocycle("group Z2\nrootorder 2\nalpha 0 0 0 2 1\n")
    with pytest.raises(CocycleError):
        parse_cocycle("group Z2\nrootorder 2\ngamma 0 0 0 0 1\n")
    c = parse_dw3("group Z2\nrootorder 2\nalpha3 1 1 1 1\n")
    assert (c.alpha3 == cubic_dw3(cyclic(2)).alpha3).all()
