import json
import math
import pathlib

import pytest

import geomkit

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMA = json.loads((ROOT / "schema" / "report.schema.json").read_text())

COMMANDS = [
    ["tiling", "enumerate", "--tiles", str(ROOT / "data" / "seven.tiles")],
    ["tiling", "hcn", "--hcn", "60", "--i", "5"],
    ["tiling", "search-iso", "--n", "3"],
    ["fairpart", "solve", "--shape", "rect:1x4", "--ratio", "1:3"],
    ["fairpart", "disc", "--ratio", "1:3"],
    ["shapes", "crossover"],
    ["poly", "compare", "--solids", "cube-pyramids-opposite,cube-pyramids-adjacent"],
]


@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: " ".join(a[:2]))
def test_reports_match_schema(args):
    jsonschema = pytest.importorskip("jsonschema")
    code, rep = geomkit.report(*args)
    assert code in (0, 1)
    jsonschema.validate(rep, SCHEMA)
    assert rep["status"] == ("ok" if code == 0 else "infeasible")


def test_usage_error_raises():
    with pytest.raises(ValueError):
        geomkit.report("fairpart", "solve", "--shape", "blob")


def test_rational_arith():
    assert geomkit.rational_arith("19/2", "10", "+") == "39/2"
    assert geomkit.rational_arith("1/3", "0", "/") is None


def test_polygon_and_fair_cut():
    rect = [(0, 0), (4, 0), (4, 1), (0, 1)]
    assert geomkit.polygon_metrics(rect) == pytest.approx({"area": 4.0, "perimeter": 10.0})
    assert geomkit.diameter(rect) == pytest.approx(math.sqrt(17))
    assert geomkit.min_width(rect) == pytest.approx(1.0)
    cut = geomkit.fair_cut(rect, 1, 3)
    assert cut["found"]
    assert cut["rho"] == pytest.approx(math.sqrt(1 / 3), abs=1e-9)


def test_lens_and_hcn():
    assert geomkit.max_diameter_lens(1.0, 3.0) is None
    assert geomkit.max_diameter_lens(math.pi, 2 * math.pi)["d"] == pytest.approx(2.0)
    assert geomkit.hcn_up_to(60) == [1, 2, 4, 6, 12, 24, 36, 48, 60]
    assert geomkit.divisor_count(720720) == 240


def test_solids():
    a = geomkit.solid_summary("cube-pyramids-opposite")
    b = geomkit.solid_summary("cube-pyramids-adjacent")
    assert a["face_labels"] == b["face_labels"] == {"isosceles_triangle": 8, "square": 4}
    assert a["volume"] == pytest.approx(1.2)
    with pytest.raises(ValueError):
        geomkit.solid_summary("dodecahedron")
