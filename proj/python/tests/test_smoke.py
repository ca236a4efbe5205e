import json
import math

import pytest

import quadtile as qt


def test_eval_angle_exact():
    v = qt.eval_angle(("0", "4"), 8)  # (4/f) pi at f = 8
    assert v["pi_units"] == "1/2"
    assert abs(v["radians"] - math.pi / 2) < 1e-15
    with pytest.raises(qt.DomainError):
        qt.eval_angle("1/2", 7)


def test_recalibrate():
    r = qt.recalibrate(0.75 * math.pi)
    assert abs(r["reduced"] - 0.25 * math.pi) < 1e-12
    assert r["sign"] == 1 and r["reflected"]


def test_enumerate_vertices_census_row():
    vertices = qt.enumerate_vertices(["1", "1/2", "1/2", "1/4"], 16)
    assert (0, 0, 0, 8) in vertices
    assert len(vertices) == 13


def test_count_feasibility():
    counts = qt.count_feasibility([(1, 0, 1, 1), (0, 5, 0, 0)], [], 10)
    assert counts[(1, 0, 1, 1)] == 10
    assert counts[(0, 5, 0, 0)] == 2


def test_myerson_self_check():
    check = qt.myerson_self_check()
    assert check["failures"] == 0
    assert check["max_residual"] < 1e-12


def test_classify_rational_f36():
    rows = qt.classify_rational(36)
    assert len(rows) == 2
    sets = {tuple(sorted(tuple(v) for v in row["avc"])) for row in rows}
    s6 = tuple(sorted([(1, 0, 0, 2), (1, 3, 0, 0), (0, 0, 3, 1), (2, 1, 2, 0),
                       (6, 0, 0, 0)]))
    assert s6 in sets


def test_realize_s5():
    g = qt.realize_a3b(4 * math.pi / 9, 7 * math.pi / 9, math.pi / 3, 5 * math.pi / 9)
    assert abs(g["a"] / math.pi - 0.17) < 5e-3
    assert abs(g["b"] / math.pi - 0.26) < 5e-3
    assert g["closure_residual"] < 1e-9
    assert g["simple"]


def test_earth_map_generation_and_flip():
    doc = qt.generate_earth_map(12)
    report = qt.verify_tiling(doc)
    assert report["pass"]
    assert report["vertices"][(1, 0, 1, 1)] == 12

    flipped = qt.apply_flip(doc, "Ep", 2, [0, 2, 4],
                            ["2/3", ("0", "4"), "7/9", "5/9"])
    report2 = qt.verify_tiling(flipped)
    assert report2["pass"]
    assert report2["vertices"][(3, 0, 0, 0)] == 2

    with pytest.raises(qt.FlipPreconditionError):
        qt.apply_flip(doc, "Ep", 3, [0], ["2/3", ("0", "4"), "7/9", "5/9"])


def test_rearrangement():
    doc = qt.generate_rearrangement(1)
    data = json.loads(doc)
    assert data["f"] == 10
    report = qt.verify_tiling(doc)
    assert report["pass"]
    assert report["vertices"][(0, 0, 3, 1)] == 2


def test_solve_free_angle():
    def residual(d):
        f = 12
        return math.sin(d) * math.sin(d - 4 * math.pi / f) + \
            math.sin(4 * math.pi / f) * math.sin(2 * d - 4 * math.pi / f)

    roots = qt.solve_free_angle(residual, (1 - 4.0 / 12) * math.pi + 1e-9,
                                math.pi - 1e-9)
    assert len(roots) == 1
    assert abs(math.cos(roots[0][0]) + math.sqrt(10) / 4) < 1e-9


def test_render_svg():
    doc = qt.generate_earth_map(8)
    svg = qt.render_svg(doc)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")


def test_tables():
    csv = qt.tables_csv()
    assert "S1(12)" in csv and "QP6'" in csv
