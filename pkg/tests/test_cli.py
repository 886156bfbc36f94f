import json
import random

from oracles import random_class_of_order
from twistedflags import jsonio
from twistedflags.algebras import CSA, quaternion
from twistedflags.brauer import BrauerClass, quaternion_class
from twistedflags.class_ring import RingElement
from twistedflags.cli import main
from twistedflags.fields import DeclaredTorsion, PAdics, Rationals, Reals
from twistedflags.forms import albert_form, form
from twistedflags.varieties import (
    Grassmannian,
    Product,
    Quadric,
    SeveriBrauer,
    involution_from_biquaternion,
)

Q = Rationals()


def run_cli(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_measure_subcommand(capsys):
    rc, out, _ = run_cli(capsys, "measure", "--field", "Q", '{"sb":{"quat":[-1,3]}}')
    assert rc == 0
    data = json.loads(out)
    assert data["count"] == 2
    assert data["canonical"]["aug"] == 2
    assert data["canonical"]["primary"] == [
        [2, {"backend": "Q", "inv": [["2", "1/2"], ["3", "1/2"]]}, 1]
    ]


def test_cli_determinism(capsys):
    payload = '{"product":[{"sb":{"quat":[-1,3]}},{"quadric":{"albert":[1,1,-1,7]}}]}'
    outs = set()
    for _ in range(3):
        rc, out, _ = run_cli(capsys, "measure", payload)
        assert rc == 0
        outs.add(out)
    assert len(outs) == 1


def test_rt_equal_on_defining_relation(capsys):
    b = jsonio.brauer_to_json(quaternion_class(-1, 3))
    c = jsonio.brauer_to_json(
        BrauerClass.from_invariants(
            {jsonio.place_from_str("3"): jsonio.frac_from_str("1/3"),
             jsonio.place_from_str("5"): jsonio.frac_from_str("2/3")}
        )
    )
    bc = jsonio.brauer_to_json(
        quaternion_class(-1, 3)
        + BrauerClass.from_invariants(
            {jsonio.place_from_str("3"): jsonio.frac_from_str("1/3"),
             jsonio.place_from_str("5"): jsonio.frac_from_str("2/3")}
        )
    )
    k = jsonio.brauer_to_json(BrauerClass.zero(Q))
    payload = json.dumps(
        {"left": [[1, b], [1, c]], "right": [[1, k], [1, bc]]}
    )
    rc, out, _ = run_cli(capsys, "rt", "equal", payload)
    assert rc == 0
    assert json.loads(out) == {"equal": True}


def test_rt_normalize_and_mul(capsys):
    k = jsonio.brauer_to_json(BrauerClass.zero(Q))
    a = jsonio.brauer_to_json(quaternion_class(-1, 3))
    payload = json.dumps([[1, k], [1, a]])
    rc, out, _ = run_cli(capsys, "rt", "normalize", payload)
    assert rc == 0
    assert json.loads(out)["aug"] == 2
    rc, out, _ = run_cli(
        capsys, "rt", "mul", json.dumps({"left": [[1, k], [1, a]], "right": [[1, k], [1, a]]})
    )
    assert rc == 0
    assert json.loads(out)["canonical"]["aug"] == 4


def test_compare_subcommand(capsys):
    payload = json.dumps(
        {"left": {"quat": [-1, 3]}, "right": {"quat": [-1, 7]}}
    )
    rc, out, _ = run_cli(capsys, "compare", "--family", "sb", payload)
    assert rc == 0
    data = json.loads(out)
    assert data["measure_equal"] is False
    assert data["isomorphic"] == "no"
    assert isinstance(data["chain"], list) and data["chain"]


def test_compare_quadric_family(capsys):
    payload = json.dumps(
        {"left": {"coeffs": [1, 1, -1, 1, -3, -3]},
         "right": {"coeffs": [1, 1, -1, 1, -7, -7]}}
    )
    rc, out, _ = run_cli(capsys, "compare", "--family", "quadric", payload)
    assert rc == 0
    assert json.loads(out)["measure_equal"] is False


def test_compare_involution_and_conics_families(capsys):
    payload = json.dumps(
        {"left": {"albert_pairs": [-1, 3, -1, 7]},
         "right": {"albert_pairs": [-1, 7, -1, 3]}}
    )
    rc, out, _ = run_cli(capsys, "compare", "--family", "iv", payload)
    assert rc == 0
    data = json.loads(out)
    assert data["measure_equal"] is True and data["isomorphic"] == "yes"

    payload = json.dumps(
        {"left": [[-1, 3], [-1, 7]], "right": [[-1, 7], [-1, 3]]}
    )
    rc, out, _ = run_cli(capsys, "compare", "--family", "conics", payload)
    assert rc == 0
    data = json.loads(out)
    assert data["subgroup_equal"] is True and data["birational"] == "yes"

    payload = json.dumps(
        {"left": [{"quat": [-1, 3]}, {"quat": [-1, 7]}],
         "right": [{"quat": [-1, 7]}, {"quat": [-1, 3]}]}
    )
    rc, out, _ = run_cli(capsys, "compare", "--family", "sb_products", payload)
    assert rc == 0 and json.loads(out)["isomorphic"] == "yes"

    payload = json.dumps(
        {"left": [{"albert": [1, 1, -1, 3]}, {"albert": [1, 1, -1, 7]}],
         "right": [{"albert": [1, 1, -1, 7]}, {"albert": [1, 1, -1, 3]}]}
    )
    rc, out, _ = run_cli(capsys, "compare", "--family", "quadric_products", payload)
    assert rc == 0 and json.loads(out)["isomorphic"] == "yes"

    payload = json.dumps(
        {"left": {"d": 1, "factors": [{"quat": [-1, 3], "deg": 4}, {"quat": [-1, 7], "deg": 4}]},
         "right": {"d": 3, "factors": [{"quat": [-1, 7], "deg": 4}, {"quat": [-1, 3], "deg": 4}]}}
    )
    rc, out, _ = run_cli(capsys, "compare", "--family", "gr_products", payload)
    assert rc == 0 and json.loads(out)["isomorphic"] == "yes"

    payload = json.dumps(
        {"left": {"d": 2, "quat": [-1, 3], "deg": 4},
         "right": {"d": 2, "quat": [-1, 3], "deg": 4}}
    )
    rc, out, _ = run_cli(capsys, "compare", "--family", "gr", payload)
    assert rc == 0 and json.loads(out)["isomorphic"] == "yes"

    payload = json.dumps(
        {"left": {"quat": [-1, 3], "deg": 6}, "right": {"quat": [-1, 3], "deg": 6}}
    )
    rc, out, _ = run_cli(capsys, "compare", "--family", "hp", payload)
    assert rc == 0 and json.loads(out)["isomorphic"] == "unknown"


def test_csa_subcommand(capsys):
    rc, out, _ = run_cli(capsys, "csa", "quat", "[-1, 3]")
    assert rc == 0
    data = json.loads(out)
    assert data["deg"] == 2 and data["index"] == 2
    rc, out, _ = run_cli(capsys, "csa", "biquat", "[-1,3,-1,7]")
    assert json.loads(out)["deg"] == 4
    rc, out, _ = run_cli(
        capsys, "csa", "raw", json.dumps({"class": data["class"], "deg": 6})
    )
    assert rc == 0 and json.loads(out)["deg"] == 6


def test_qform_subcommands(capsys):
    rc, out, _ = run_cli(capsys, "qform", "disc", '{"coeffs":[1,2]}')
    assert rc == 0 and json.loads(out) == {"disc": "-2"}
    rc, out, _ = run_cli(capsys, "qform", "clifford", '{"coeffs":[-1,3,3]}')
    assert rc == 0
    assert json.loads(out) == jsonio.brauer_to_json(quaternion_class(-1, 3))
    rc, out, _ = run_cli(capsys, "qform", "albert", "[1,1,-1,3]")
    assert rc == 0
    assert json.loads(out)["coeffs"] == ["1", "1", "-1", "1", "-3", "-3"]
    rc, out, _ = run_cli(capsys, "qform", "realize", '{"pairs":[[-1,3],[-1,7]]}')
    assert rc == 0
    data = json.loads(out)
    assert len(data["coeffs"]) == 5
    rc, out, _ = run_cli(
        capsys, "qform", "anisotropic", '{"coeffs":[1,1,1,1,1]}'
    )
    assert rc == 0 and json.loads(out) == {"anisotropic": True}
    rc, out, _ = run_cli(
        capsys,
        "qform",
        "similar",
        '{"left":{"coeffs":[-1,3,3]},"right":{"coeffs":[-2,6,3]}}',
    )
    assert rc == 0


def test_exit_codes(capsys):
    rc, _, err = run_cli(capsys, "measure", "not json")
    assert rc == 2
    rc, _, err = run_cli(capsys, "measure", '{"bogus_family": {}}')
    assert rc == 2
    # domain error: even-dimensional quadric with nontrivial discriminant
    rc, _, err = run_cli(capsys, "measure", '{"quadric":{"coeffs":[1,2,3,5]}}')
    assert rc == 3
    # capability error: quadratic forms over Qp are unsupported
    rc, _, err = run_cli(capsys, "qform", "--field", "Qp:5", "disc", '{"coeffs":[1,2]}')
    assert rc == 4
    # schema error: malformed field token
    rc, _, err = run_cli(capsys, "measure", "--field", "Z", '{"sb":{"quat":[-1,3]}}')
    assert rc == 2


def test_abstract_field_file(tmp_path, capsys):
    decl = {
        "orders": [2, 2],
        "relations": [[2, 0]],
        "index": [[[1, 1], 4]],
    }
    path = tmp_path / "field.json"
    path.write_text(json.dumps(decl))
    payload = json.dumps(
        {
            "left": [{"exp": [1, 0]}, {"exp": [0, 1]}],
            "right": [{"exp": [0, 1]}, {"exp": [1, 0]}],
            "division": True,
        }
    )
    rc, out, _ = run_cli(
        capsys, "compare", "--field", f"abstract:{path}", "--family", "conics", payload
    )
    assert rc == 0
    data = json.loads(out)
    assert data["isomorphic"] == "yes"


def test_corpus_subcommand(capsys):
    rc, out, _ = run_cli(capsys, "corpus")
    assert rc == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert all(case["ok"] for case in data["cases"])
    rc, out, _ = run_cli(capsys, "corpus", "--filter", "no-such-case")
    assert rc == 0
    rc, out, _ = run_cli(capsys, "corpus", "--output", "table", "--filter", "hilbert")
    assert rc == 0 and "PASS" in out


def test_corpus_failure_reporting(capsys, monkeypatch):
    import twistedflags.corpus as corpus_mod

    broken = corpus_mod.CorpusCase(
        "always-fails", "deliberately broken", lambda: (False, "forced failure")
    )
    monkeypatch.setattr(corpus_mod, "_CASES", list(corpus_mod._CASES) + [broken])
    rc, out, _ = run_cli(capsys, "corpus")
    assert rc == 1
    data = json.loads(out)
    assert data["passed"] is False
    named = [c for c in data["cases"] if not c["ok"]]
    assert named and named[0]["id"] == "always-fails"


def test_table_output(capsys):
    rc, out, _ = run_cli(
        capsys, "measure", "--output", "table", '{"sb":{"quat":[-1,3]}}'
    )
    assert rc == 0 and "count 2" in out


# ---------------------------------------------------------------------------
# JSON round-trips


def test_brauer_roundtrip_exact():
    rng = random.Random(8)
    for _ in range(60):
        c = random_class_of_order(rng, rng.choice([1, 2, 3, 4, 6, 12]))
        data = jsonio.brauer_to_json(c)
        assert jsonio.brauer_from_json(data, Q) == c
        assert jsonio.dumps(data) == jsonio.dumps(jsonio.brauer_to_json(c))


def test_brauer_roundtrip_other_backends():
    r = quaternion_class(-1, -1, Reals())
    assert jsonio.brauer_from_json(jsonio.brauer_to_json(r), Reals()) == r
    p = BrauerClass.local(jsonio.frac_from_str("2/3"), PAdics(5))
    assert jsonio.brauer_from_json(jsonio.brauer_to_json(p), PAdics(5)) == p
    field = DeclaredTorsion((2, 3))
    d = BrauerClass.declared((1, 2), field)
    assert jsonio.brauer_from_json(jsonio.brauer_to_json(d), field) == d


def test_csa_and_form_roundtrip():
    A = CSA(quaternion_class(-1, 3), 6)
    assert jsonio.csa_from_json(jsonio.csa_to_json(A), Q) == A
    q = form([1, -2, 15])
    assert jsonio.form_from_json(jsonio.form_to_json(q), Q) == q


def test_ring_roundtrip():
    e = RingElement.one(Q).scaled(3) - RingElement.of_class(quaternion_class(-1, 3)).scaled(2)
    data = jsonio.ring_to_json(e)
    back = jsonio.ring_from_json(data, Q)
    assert back == e and back.terms == e.terms


def test_variety_roundtrip():
    vs = [
        SeveriBrauer(quaternion(-1, 3)),
        Grassmannian(2, CSA(quaternion_class(-1, 3), 4)),
        Quadric(albert_form(1, 1, -1, 3, Q)),
        involution_from_biquaternion(-1, 3, -1, 7, Q),
        Product((SeveriBrauer(quaternion(-1, 3)), Quadric(albert_form(1, 1, -1, 7, Q)))),
    ]
    for v in vs:
        data = jsonio.variety_to_json(v)
        back = jsonio.variety_from_json(data, Q)
        assert back.measure() == v.measure()
        assert back.cell_count() == v.cell_count()
        assert jsonio.variety_to_json(back) == data
