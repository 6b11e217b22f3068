import pytest

from affzig.rootdata import build_affine_type
from affzig.scalars import PrimeField, ZZ
from affzig.symalg import (
    SymmetricAlgebraSpec,
    dual_numbers,
    graded_dimension_counts,
    ground_ring_algebra,
    parse_graph,
    zigzag_algebra,
    zigzag_of_finite_type,
)


def a2_zigzag():
    return zigzag_algebra([1, 2], [(1, 2)])


def test_zigzag_a2_basis_and_dimension():
    alg = a2_zigzag()
    assert alg.dim == 6
    assert graded_dimension_counts(alg, 4) == [2, 2, 2, 0, 0]


def test_zigzag_products():
    alg = a2_zigzag()
    idx = {lbl: k for k, lbl in enumerate(alg.labels)}
    a12, a21 = alg.basis_elem(idx["a_1,2"]), alg.basis_elem(idx["a_2,1"])
    assert alg.mul(a12, a21) == alg.basis_elem(idx["c_1"])
    assert alg.mul(a21, a12) == alg.basis_elem(idx["c_2"])
    assert alg.mul(a12, a12) == {}
    e1 = alg.basis_elem(idx["e_1"])
    assert alg.mul(e1, a12) == a12
    assert alg.mul(a12, e1) == {}


def test_zigzag_rejects_bad_graphs():
    with pytest.raises(ValueError):
        zigzag_algebra([1, 2, 3], [(1, 2)])  # disconnected
    with pytest.raises(ValueError):
        zigzag_algebra([1], [(1, 1)])  # loop


def test_one_vertex_zigzag_is_dual_numbers():
    alg = zigzag_algebra([7], [])
    assert alg.labels == ["e_7", "c_7"]
    assert alg.top_degree == 2
    c = alg.basis_elem(1)
    assert alg.mul(c, c) == {}


def test_distinguished_element_ground_ring():
    alg = ground_ring_algebra()
    assert alg.distinguished_element() == [(0, 0, 1)]


def test_distinguished_element_dual_numbers():
    alg = dual_numbers()
    # oracle: dual basis of {1, c} under tr is {c*, 1*}: Delta(1) = 1(x)c + c(x)1
    assert sorted(alg.distinguished_element()) == [(0, 1, 1), (1, 0, 1)]


def test_distinguished_element_zigzag_matches_formula():
    alg = a2_zigzag()
    idx = {lbl: k for k, lbl in enumerate(alg.labels)}
    expect = set()
    for i in (1, 2):
        expect.add((idx[f"e_{i}"], idx[f"c_{i}"], 1))
        expect.add((idx[f"c_{i}"], idx[f"e_{i}"], 1))
    expect.add((idx["a_2,1"], idx["a_1,2"], 1))
    expect.add((idx["a_1,2"], idx["a_2,1"], 1))
    assert set(alg.distinguished_element()) == expect


def test_delta_symmetry_and_intertwining():
    for alg in (ground_ring_algebra(), dual_numbers(), a2_zigzag(), zigzag_of_finite_type(build_affine_type("D4"))):
        delta = alg.distinguished_element()
        # tau(Delta(1)) = Delta(1)
        assert sorted((l, k, c) for k, l, c in delta) == sorted(delta)
        # (a(x)1) Delta(1) = Delta(1) (1(x)a) and (1(x)a) Delta(1) = Delta(1) (a(x)1)
        for b in range(alg.dim):
            eb = alg.basis_elem(b)
            left1 = _pair_mul(alg, [(eb, None)], delta)
            right1 = _pair_mul(alg, [(None, eb)], delta, rightside=True)
            assert left1 == right1
            left2 = _pair_mul(alg, [(None, eb)], delta)
            right2 = _pair_mul(alg, [(eb, None)], delta, rightside=True)
            assert left2 == right2


def _pair_mul(alg, which, delta, rightside=False):
    """Multiply Delta(1) by a(x)b on the chosen side, in A(x)A coordinates."""
    (xa, xb), = which
    out = {}
    for k, l, c in delta:
        bk, bl = alg.basis_elem(k), alg.basis_elem(l)
        if not rightside:
            p = alg.mul(xa, bk) if xa else bk
            q = alg.mul(xb, bl) if xb else bl
        else:
            p = alg.mul(bk, xa) if xa else bk
            q = alg.mul(bl, xb) if xb else bl
        for i, ci in p.items():
            for j, cj in q.items():
                key = (i, j)
                out[key] = out.get(key, 0) + c * ci * cj
    return {k: v for k, v in out.items() if v}


def test_m_delta_one_zigzag():
    # m(Delta(1)) = sum_i (2 + deg i) c e_i, oracle: multiply out Delta(1)
    for t in ("A2", "A3", "D4"):
        alg = zigzag_of_finite_type(build_affine_type(t))
        idx = {lbl: k for k, lbl in enumerate(alg.labels)}
        ttype = build_affine_type(t)
        expect = {}
        for v in ttype.finite_vertices:
            deg = len([e for e in ttype.finite_edges() if v in e])
            expect[idx[f"c_{v}"]] = 2 + deg
        got = alg.m_delta_one()
        assert got == expect
        assert alg.is_central(got)


def test_center_of_zigzag():
    alg = a2_zigzag()
    idx = {lbl: k for k, lbl in enumerate(alg.labels)}
    center = alg.center_basis()
    assert len(center) == 3
    for x in center:
        assert alg.is_central(x)
    # span contains 1, c e_1, c e_2
    labels = {frozenset(x) for x in center}
    assert frozenset({idx["c_1"]}) in labels
    assert frozenset({idx["c_2"]}) in labels


def test_center_d4_rank():
    alg = zigzag_of_finite_type(build_affine_type("D4"))
    assert len(alg.center_basis()) == 5


def test_center_dual_numbers_whole_algebra():
    alg = dual_numbers()
    assert len(alg.center_basis()) == 2


def test_nu_antiautomorphism():
    alg = a2_zigzag()
    idx = {lbl: k for k, lbl in enumerate(alg.labels)}
    a12 = alg.basis_elem(idx["a_1,2"])
    a21 = alg.basis_elem(idx["a_2,1"])
    assert alg.nu(a12) == a21
    assert alg.nu(alg.basis_elem(idx["e_1"])) == alg.basis_elem(idx["e_1"])
    # nu(a12 a21) = nu(a21) nu(a12) = a12 a21 = c_1
    assert alg.nu(alg.mul(a12, a21)) == alg.mul(alg.nu(a21), alg.nu(a12))


def test_phi_duality_table():
    # phi(e_i) = (c e_i)*, phi(a_ij) = (a_ji)*, phi(c e_i) = e_i*
    alg = a2_zigzag()
    idx = {lbl: k for k, lbl in enumerate(alg.labels)}
    pair = {idx["e_1"]: idx["c_1"], idx["e_2"]: idx["c_2"],
            idx["a_1,2"]: idx["a_2,1"], idx["a_2,1"]: idx["a_1,2"],
            idx["c_1"]: idx["e_1"], idx["c_2"]: idx["e_2"]}
    for i in range(alg.dim):
        for j in range(alg.dim):
            val = alg.tr(alg.mul(alg.basis_elem(i), alg.basis_elem(j)))
            assert val == (1 if pair[i] == j else 0)


def test_json_roundtrip():
    alg = a2_zigzag()
    again = SymmetricAlgebraSpec.from_json(alg.to_json())
    assert again.labels == alg.labels
    nonzero = {k: v for k, v in alg.structure.items() if v}
    assert {k: v for k, v in again.structure.items() if v} == nonzero


def test_prime_field_zigzag():
    # m(Delta(1)) = 3(c_1 + c_2) on the one-edge graph: vanishes in char 3
    alg = zigzag_algebra([1, 2], [(1, 2)], ring=PrimeField(3))
    assert alg.dim == 6
    assert alg.m_delta_one() == {}
    alg5 = zigzag_algebra([1, 2], [(1, 2)], ring=PrimeField(5))
    assert alg5.m_delta_one()


def test_parse_graph():
    assert parse_graph("path:3") == ([1, 2, 3], [(1, 2), (2, 3)])
    assert parse_graph("1-2,2-3") == ([1, 2, 3], [(1, 2), (2, 3)])
