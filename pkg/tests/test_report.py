import json
import re

import pytest

from nilcover.partition import Algebra, OrbitId, iter_orbits
from nilcover.report import (
    describe_base,
    orbit_from_dict,
    orbit_to_dict,
    parse_json,
    render_json,
    render_text,
    report_from_dict,
    report_to_dict,
)
from nilcover.terminalization import build, build_all_covers
from nilcover.topology import parse_cover

O = OrbitId.of

TOP_KEYS = {
    "schema", "orbit", "cover", "chain", "flag_type", "levi_blocks", "base", "base_cover",
    "covering_group", "degrees", "q_factorial", "terminal", "crepant_resolution",
}


def test_schema_keys():
    d = report_to_dict(build(O("sp", "6^2,4^2")))
    assert set(d) == TOP_KEYS
    assert d["schema"] == 1
    assert d["flag_type"] == [4, 1, 3, 4, 3, 1, 4]
    step = d["chain"]["steps"][0]
    assert {"kind", "pivot", "block", "target", "springer_degree"} <= set(step)
    assert step["target"] == "4^2,2^2"


def test_orbit_dict_roundtrip():
    for o in (O("so", "2^4", "-"), O("sl", "9,6"), O("sp", "6")):
        assert orbit_from_dict(orbit_to_dict(o)) == o
    with pytest.raises(ValueError):
        orbit_from_dict({"algebra": "sp", "size": 5, "partition": "6"})


def test_unknown_schema_rejected():
    d = report_to_dict(build(O("sp", "6")))
    d["schema"] = 2
    with pytest.raises(ValueError):
        report_from_dict(d)


@pytest.mark.parametrize("n", range(1, 11))
def test_json_roundtrip_exhaustive(n):
    for alg in Algebra:
        for o in iter_orbits(alg, n):
            for r in build_all_covers(o):
                assert parse_json(render_json(r)) == r


def _numbers(line):
    return [int(x) for x in re.findall(r"(?<![\w^\[])\d+(?![\w^])", line)]


def _text_fields(text):
    out = {}
    for line in text.splitlines():
        if ":" in line and not line.startswith(" "):
            k, v = line.split(":", 1)
            out[k] = v.strip()
    return out


@pytest.mark.parametrize("alg,text,cover", [
    ("sp", "6^2,4^2", None), ("sp", "8,5^2,4,3^2", None), ("so", "15,8^2,3", None),
    ("so", "11^3,3^2,1", None), ("so", "13^2,3,1", None), ("sl", "9,6", "cyclic:3"), ("so", "5,3,1", "ycover"),
])
def test_text_and_json_agree(alg, text, cover):
    o = O(alg, text)
    r = build(o, parse_cover(cover, o))
    d = json.loads(render_json(r))
    f = _text_fields(render_text(r))
    assert [int(x) for x in f["flag_type"].split()] == d["flag_type"]
    deg = re.findall(r"\d+", f["degrees"])
    assert [int(x) for x in deg] == [d["degrees"][k] for k in ("cover_degree", "springer_total", "base_cover_degree")]
    assert int(f["covering_group"].split()[-1]) == d["covering_group"]["order"]
    assert int(f["cover"].split()[-1]) == d["cover"]["degree"]
    assert f["q_factorial"] == d["q_factorial"]
    assert f["crepant_resolution"].split()[0] == d["crepant_resolution"]["verdict"]
    steps = [l for l in render_text(r).splitlines() if re.match(r"\s+\d+\. ", l)]
    assert len(steps) == len(d["chain"]["steps"])
    for line, s in zip(steps, d["chain"]["steps"]):
        assert f"pivot {s['pivot']} block {s['block']}" in line
        assert line.endswith(f"springer_degree {s['springer_degree']}")


def test_describe_base():
    o = O("sl", "2")
    assert describe_base(build(o, parse_cover("cyclic:2", o))) == "C^2"
    assert describe_base(build(O("sp", "6^2,4^2"))) == "point"
    assert describe_base(build(O("so", "15,8^2,3"))) == "(C^2 x X[2^3] x X[7,4^2,3]) / H"
    assert describe_base(build(O("so", "13^2,3,1"))) == "Y[4^2,3,1]"
    o = O("sl", "4")
    assert describe_base(build(o, parse_cover("cyclic:2", o))) == "(C^2 x C^2) / H"
