import pytest

import sofic

Z_LINE = {"group": "Z", "graph": {"kind": "cayley", "connection": ["(1)", "(-1)"]}, "action": "left-mult"}
C4_ROTATION = {
    "group": "F_1",
    "graph": {
        "kind": "explicit",
        "vertices": ["0", "1", "2", "3"],
        "edges": [["0", "1"], ["1", "2"], ["2", "3"], ["3", "0"]],
    },
    "action": "generator-images",
    "images": [[1, 2, 3, 0]],
}


def coset(reps, basis=None):
    H = {"kind": "sublattice", "basis": basis} if basis else {"kind": "trivial"}
    return {
        "group": "Z",
        "graph": {"kind": "coset", "H": H, "S": {"kind": "double-coset-union", "reps": reps}},
        "action": "coset",
    }


def box(n):
    return [f"({i})" for i in range(n)]


@pytest.fixture(scope="module")
def line_cert():
    return sofic.build_folner(Z_LINE, box(100), ["(-1)", "(0)", "(1)"], ["(-2)", "(-1)", "(0)", "(1)", "(2)"])


def test_folner_line(line_cert):
    report = sofic.verify(line_cert, Z_LINE)
    assert report["accepted"]
    assert report["s_fraction"] == "49/50"
    assert sofic.measured_delta(line_cert) == "1/50"
    assert sofic.verify(line_cert, Z_LINE, jobs=2) == report


def test_mutation_is_rejected(line_cert):
    bad = dict(line_cert)
    row = dict(bad["pi"][next(iter(bad["pi"]))])
    a, b = list(row)[:2]
    row[a], row[b] = row[b], row[a]
    bad["pi"] = {**bad["pi"], next(iter(bad["pi"])): row}
    report = sofic.verify(bad, Z_LINE)
    assert not report["accepted"]
    assert any(v["kind"] == "embedding" for v in report["violations"])


def test_small_box_raises():
    with pytest.raises(sofic.SoficError) as info:
        sofic.build_folner(Z_LINE, box(4), ["(-2)", "(0)", "(2)"], ["(0)"])
    assert info.value.kind == "folner-defect-too-large"


def test_finite_and_free():
    finite = sofic.build_finite(C4_ROTATION, ["1", "a", "A"], ["0", "1", "2", "3"])
    assert finite["carrier"] == 4
    assert sofic.verify(finite, C4_ROTATION)["accepted"]
    free = sofic.build_free(C4_ROTATION, ["1"], ["0", "1", "2", "3"])
    assert free["carrier"] == 8
    assert sofic.verify(free, C4_ROTATION)["accepted"]


def test_combinators(line_cert):
    c4 = sofic.build_finite(C4_ROTATION, ["1", "a", "A"], ["0", "1", "2", "3"])
    assert sofic.complement(sofic.complement(c4)) == c4
    prod = sofic.combine_product(line_cert, line_cert, "tensor")
    assert prod["carrier"] == 10000
    assert prod["epsilon"] == "19/100"
    restricted = sofic.restrict(line_cert, ["(0)", "(1)"])
    assert restricted["W"] == ["(0)", "(1)"]
    assert sofic.vertex_transform(c4, "edgeless")["B"]["edges"] == []


def test_eppa_shift():
    graph = {"vertices": ["0", "1", "2"], "edges": [["0", "1"], ["1", "2"]]}
    sol = sofic.eppa(graph, [{"0": "1", "1": "2"}])
    assert sol["valid"]
    assert len(sol["B"]["vertices"]) == 4


def test_tiling_and_defect():
    tiling = {"kind": "box", "d": 1, "L": 5}
    assert sofic.tile_of(tiling, "(7)") == box(10)[5:]
    assert sofic.invariance_defect("Z", box(10), ["(1)", "(-1)"]) == "1/5"


def test_gromov():
    cyc, line = coset(["(1)", "(-1)"], [[6]]), coset(["(1)", "(-1)"])
    assert sofic.gh_mismatch(cyc, line, ["(1)", "(2)", "(3)"]) is None
    assert sofic.gh_mismatch(cyc, line, ["(1)", "(6)"]) == "(6)"


def test_wreath_and_hamming():
    c4 = sofic.build_finite(C4_ROTATION, ["1", "a", "A"], ["0", "1", "2", "3"])
    report = sofic.wreath_check(c4, C4_ROTATION, samples=20, seed=1)
    assert report["bound_holds"] and report["separation_holds"]
    assert sofic.hamming([1, 0, 2, 3], [0, 1, 2, 3]) == "1/2"


def test_malformed_input():
    with pytest.raises(sofic.SoficError) as info:
        sofic.verify("{not json", Z_LINE)
    assert info.value.kind == "parse-error"
