import json

import pytest

from psolv.catalog import (
    CATALOG,
    FiniteField,
    catalog_get,
    catalog_names,
    general_linear_2,
    load_group_file,
    mat_det,
    special_linear_2,
)
from psolv.cli import main
from psolv.errors import InputError
from psolv.perm import PermGroup, format_group_text, parse_group_text, quotient_group
from psolv.subgroups import derived_subgroup, subgroup_from_elements
from psolv.sylow import sylow_subgroup

DEGREES = {"S4": 4, "SL(2,3)": 8, "GL(2,3)": 8, "SL(2,5)": 24, "2.S5": 48, "2.S5-plus": 48, "Q8": 8, "D8": 4}


def center(G):
    return subgroup_from_elements(
        [g for g in G.elements() if all(g * x == x * g for x in G.generators)], G.degree
    )


class TestCatalog:
    @pytest.mark.parametrize("name", list(CATALOG))
    def test_orders(self, name):
        assert catalog_get(name).order == CATALOG[name].expected_order

    @pytest.mark.parametrize("name,degree", DEGREES.items())
    def test_degrees(self, name, degree):
        assert catalog_get(name).degree == degree

    def test_unknown(self):
        with pytest.raises(InputError, match="catalog: C2"):
            catalog_get("S7")

    def test_names_include_required(self):
        required = "C2 C3 C6 C15 S3 S4 S5 A4 A5 D8 Q8 SL(2,3) GL(2,3) SL(2,5) 2.S5 A5xC2 A5xA5 A5xS4".split()
        assert set(required) <= set(catalog_names())

    @pytest.mark.parametrize("name", ["2.S5", "2.S5-plus"])
    def test_schur_covers(self, name):
        G = catalog_get(name)
        Z = center(G)
        assert Z.order == 2
        Q, _ = quotient_group(G, Z)
        assert Q.order == 120
        # order 120, trivial centre, perfect normal subgroup of index 2: S5
        assert center(Q).order == 1
        D = derived_subgroup(Q)
        assert D.order == 60 and derived_subgroup(D).order == 60
        # the cover is non-split: derived subgroup is SL(2,5), not A5 x C2
        DG = derived_subgroup(G)
        assert DG.order == 120 and Z.is_subgroup_of(DG)

    def test_covers_differ(self):
        def involutions(name):
            P = sylow_subgroup(catalog_get(name), 2)
            return sum(1 for g in P.elements() if g.order() == 2)

        assert involutions("2.S5") == 1  # generalized quaternion
        assert involutions("2.S5-plus") == 5  # semidihedral

    def test_field(self):
        F = FiniteField(5, 2)
        t = F.elem(0, 1)
        assert F.mul(t, t) == F.elem(F.r)
        for x in range(1, F.q):
            assert any(F.mul(x, y) == F.elem(1) for y in range(1, F.q))

    def test_matrix_groups(self):
        assert special_linear_2(3).order == 24
        assert general_linear_2(3).order == 48
        assert general_linear_2(5).order == 480
        F = FiniteField(3)
        assert mat_det(F, ((1, 2), (0, 1))) == 1

    @pytest.mark.parametrize("name", list(CATALOG))
    def test_text_round_trip(self, name):
        G = catalog_get(name)
        H = parse_group_text(format_group_text(G, comment=name))
        assert H.degree == G.degree and H.order == G.order
        assert all(H.contains(g) for g in G.generators)
        assert all(G.contains(h) for h in H.generators)


class TestGroupFiles:
    def test_load(self, tmp_path):
        f = tmp_path / "s4.txt"
        f.write_text("degree 4\ngen (1 2)\ngen (1 2 3 4)\n")
        assert load_group_file(f).order == 24

    def test_empty_generators(self, tmp_path):
        f = tmp_path / "t.txt"
        f.write_text("# nothing\ndegree 5\n")
        G = load_group_file(f)
        assert G.order == 1 and G.degree == 5

    def test_malformed(self, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("degree 4\ngen (1 2)\ngen (1 2\n")
        with pytest.raises(InputError, match="line 3"):
            load_group_file(f)

    def test_degree_violation(self, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("degree 3\ngen (1 4)\n")
        with pytest.raises(InputError):
            load_group_file(f)

    def test_missing(self, tmp_path):
        with pytest.raises(InputError):
            load_group_file(tmp_path / "nope.txt")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCli:
    def test_analyze_schur_cover_json(self, capsys):
        code, out, _ = run(capsys, "analyze", "2.S5", "-p", "2", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["generalized_p_length"] == 3 and data["d"] == 2
        assert data["p_solvable"] == {"criterion": False, "direct": False}

    def test_analyze_table(self, capsys):
        code, out, _ = run(capsys, "analyze", "S4", "-p", "2")
        assert code == 0
        lines = dict(line.split(None, 1) for line in out.splitlines())
        assert lines["p_solvable"].strip() == "yes"
        assert lines["p_length"].strip() == "2"

    def test_analyze_coprime(self, capsys):
        code, out, _ = run(capsys, "analyze", "S4", "-p", "7", "--json")
        data = json.loads(out)
        assert code == 0
        for k in ("p_length", "non_p_solvable_length", "generalized_p_length", "pperfect_length"):
            assert data[k] == 0

    def test_analyze_file(self, capsys, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("degree 4\ngen (1 2)\ngen (1 2 3 4)\n")
        code, out, _ = run(capsys, "analyze", "--file", str(f), "-p", "2", "--json")
        assert code == 0 and json.loads(out)["order"] == 24

    def test_json_deterministic(self, capsys):
        outs = {run(capsys, "analyze", "GL(2,3)", "-p", "2", "--json")[1] for _ in range(2)}
        outs |= {run(capsys, "filtration", "2.S5", "-p", "2", "--json")[1] for _ in range(2)}
        assert len(outs) == 2

    def test_filtration(self, capsys):
        code, out, _ = run(capsys, "filtration", "S4", "-p", "2", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["theorem_a"]["term_orders"] == [24, 4, 1]
        assert data["pperfect_filtration"]["member_orders"] == [24, 12, 1]
        code, out, _ = run(capsys, "filtration", "S4", "-p", "2")
        assert "p-perfect length = 2" in out

    def test_verify_small(self, capsys):
        code, out, _ = run(capsys, "verify", "all", "--group", "C2", "-p", "2")
        assert code == 0
        assert "FAIL" not in out

    def test_verify_theorem_b_schur(self, capsys):
        code, out, _ = run(capsys, "verify", "theorem-b", "--group", "2.S5", "-p", "2", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["violations"] == [] and data["cases"] == 1

    def test_verify_violation_exit(self, capsys, monkeypatch):
        import psolv.verify as v

        monkeypatch.setitem(v.SUITES, "theorem-b", lambda name, G, p: [v.Case("theorem-b", name, p, False, 0, 1)])
        code, out, _ = run(capsys, "verify", "theorem-b", "--group", "S3", "--json")
        assert code == 1
        assert json.loads(out)["violations"][0] == {
            "suite": "theorem-b", "group": "S3", "prime": 2, "expected": 0, "actual": 1,
        }

    def test_catalog_list(self, capsys):
        code, out, _ = run(capsys, "catalog", "list")
        assert code == 0
        assert len(out.splitlines()) == len(CATALOG)

    @pytest.mark.parametrize("argv", [
        ["analyze", "S7", "-p", "2"],
        ["analyze", "S4", "-p", "4"],
        ["analyze", "-p", "2"],
        ["verify", "all", "--group", "nope"],
        ["verify", "all", "-p", "9"],
    ])
    def test_input_errors(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2 and "error" in err

    def test_bad_flags(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "nonsense"])
        assert exc.value.code == 2

    def test_capacity_exit(self, capsys, monkeypatch, tmp_path):
        from psolv.config import LIMITS

        f = tmp_path / "s5.txt"
        f.write_text("degree 5\ngen (1 2)\ngen (1 2 3 4 5)\n")
        monkeypatch.setattr(LIMITS, "normal_subgroup_cap", 5)
        code, _, err = run(capsys, "analyze", "--file", str(f), "-p", "2")
        assert code == 3 and "capacity" in err
