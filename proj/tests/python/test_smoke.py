import pytest

import trop

WORKED = "3 3\n1 4 -1\n1 0 6\n-4 1 3\n"


def test_scalar_arithmetic():
    two = trop.Scalar(2)
    assert str(two + two) == "2g"
    assert str(two * trop.Scalar("3/2")) == "7/2"
    assert (two / two) == trop.Scalar(0)
    assert trop.Scalar("-inf") < trop.Scalar(5) < trop.Scalar("5g")
    assert trop.Scalar("5g").is_ghost
    assert trop.Scalar("5g").project() == trop.Scalar(5)


def test_scalar_parse_errors():
    with pytest.raises(ValueError):
        trop.Scalar("nope")
    with pytest.raises(ValueError):
        trop.parse_matrix("1 1\n")


def test_matrix_roundtrip():
    a = trop.Matrix(WORKED)
    assert str(a) == WORKED
    assert trop.parse_matrix(a.to_json()) == a
    assert trop.Matrix([[1, 4, -1], [1, 0, 6], [-4, 1, 3]]) == a
    assert a.at(1, 2) == trop.Scalar(4)
    assert a.transpose().transpose() == a


def test_det_and_rank():
    a = trop.Matrix(WORKED)
    assert str(trop.det(a)) == "8g"
    assert trop.det(a, method="fast") == trop.det(a, method="brute")
    assert trop.is_singular(a)
    assert trop.rank(a) == 2
    assert trop.max_nonsingular_minor(a) == ([1, 2], [1, 2])
    perms = trop.achieving_permutations(a)
    assert [p[0] for p in perms] == [[1, 3, 2], [2, 1, 3]]


def test_witness():
    a = trop.Matrix(WORKED)
    w = trop.square_witness(a)
    assert [str(c) for c in w] == ["7", "7", "10"]
    assert trop.validate_witness(a, w)
    assert trop.is_dependent(a)
    assert trop.dependence_witness("2 2\n0 1\n1 2\n") is not None


def test_pseudo_inverse():
    a = trop.Matrix("2 2\n0 1\n2 0\n")
    p = trop.pseudo_inverse(a)
    assert str(p) == "2 2\n-3 -2\n-1 -3\n"
    assert trop.verify_pseudo_inverse(a, p)
    assert trop.is_pseudo_unit(a @ p)["verdict"]
    with pytest.raises(ValueError):
        trop.pseudo_inverse(trop.Matrix(WORKED))


def test_certificates_and_digraph():
    assert trop.rank_defect_certificate("2 2\n0 -inf\n0 -inf\n") == ([1, 2], [2])
    assert trop.rank_defect_certificate(WORKED) is None
    assert trop.digraph_edge_list("2 2\n-inf 1g\n-inf -inf\n") == "1 2 1g\n"
    assert str(trop.max_multicycle_weight(WORKED, 3)) == "8g"


def test_linear_system():
    sol = trop.find_pure_real_solution("2 2\n0 1\n0 1\n")
    assert sol is not None and sol["solves"] and sol["kind"] == "pure-real"
    assert trop.find_pure_real_solution(trop.Matrix.identity(2)) is None
    report = trop.is_solution("2 2\n0 1\n0 1\n", [trop.Scalar(1), trop.Scalar(0)])
    assert report["solves"]


def test_size_guard():
    with pytest.raises(ValueError):
        trop.rank(trop.Matrix.zero(9, 9))
