import json
import math

import pytest

from loepage.cli import build_parser, run
from loepage.montecarlo import EntropyCurve


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestValidation:
    def test_unknown_subcommand(self, capsys):
        code, _, err = invoke(capsys, "frobnicate")
        assert code == 2

    def test_guard_violation_maps_to_2(self, capsys):
        code, _, err = invoke(capsys, "exact-purity", "--k", "9", "--dimA", "2",
                              "--dimB", "2", "--moments", "0,1")
        assert code == 2
        assert err.startswith("invalid-argument:")
        assert "\n" not in err.strip()

    def test_missing_seed(self, capsys, monkeypatch):
        monkeypatch.delenv("LOE_SEED", raising=False)
        code, _, err = invoke(capsys, "mc", "--qubits", "2", "--samples", "3")
        assert code == 2
        assert "seed" in err.lower() or "LOE_SEED" in err

    def test_env_seed_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("LOE_SEED", "7")
        code, out, _ = invoke(capsys, "mc", "--qubits", "2", "--samples", "3", "--k", "2")
        assert code == 0
        assert out.splitlines()[0] == EntropyCurve.CSV_HEADER

    def test_bad_moments(self, capsys):
        code, _, err = invoke(capsys, "cumulants", "--moments", "0,abc")
        assert code == 2

    def test_help_lists_subcommands(self, capsys):
        parser = build_parser()
        text = parser.format_help()
        for name in ("exact-purity", "asym-purity", "page-curve", "mc", "state-mc",
                     "fluct", "wg", "nc", "cumulants", "ose-const"):
            assert name in text

    def test_subcommand_help_lists_flags(self):
        parser = build_parser()
        # every subcommand's help mentions its flags with defaults visible
        sub = next(a for a in parser._actions if hasattr(a, "choices") and a.choices)
        for name, p in sub.choices.items():
            text = p.format_help()
            assert "--" in text or name in ("ose-const",)


class TestScalarCommands:
    def test_exact_purity(self, capsys):
        code, out, _ = invoke(capsys, "exact-purity", "--k", "2", "--dimA", "4",
                              "--dimB", "4", "--moments", "0,1,0,1")
        assert code == 0
        assert out.startswith("509/4199 = ")

    def test_exact_purity_breakdown(self, capsys):
        code, out, _ = invoke(capsys, "exact-purity", "--k", "2", "--dimA", "4",
                              "--dimB", "4", "--moments", "0,1,0,1", "--breakdown")
        assert code == 0
        assert "cycle_type,contribution" in out

    def test_state_purity(self, capsys):
        code, out, _ = invoke(capsys, "exact-purity", "--k", "2", "--dimA", "4",
                              "--dimB", "4", "--state")
        assert code == 0
        assert out.startswith("32/257 = ")

    def test_asym_purity(self, capsys):
        code, out, _ = invoke(capsys, "asym-purity", "--k", "2", "--dimA", "8", "--dimB", "32")
        assert code == 0
        assert float(out) == pytest.approx(8**-2 + 32**-2, rel=1e-12)

    def test_ose_const(self, capsys):
        code, out, _ = invoke(capsys, "ose-const", "--k", "2")
        assert code == 0
        assert float(out) == pytest.approx(-math.log(3), abs=1e-12)

    def test_wg_table(self, capsys):
        code, out, _ = invoke(capsys, "wg", "--n", "2", "--dim", "5")
        assert code == 0
        lines = out.strip().splitlines()
        assert "1+1, 1/24" in lines
        assert "2, -1/120" in lines

    def test_wg_backends_agree(self, capsys):
        _, a, _ = invoke(capsys, "wg", "--n", "3", "--dim", "7", "--backend", "gram")
        _, b, _ = invoke(capsys, "wg", "--n", "3", "--dim", "7", "--backend", "characters")
        assert a == b

    def test_nc_count(self, capsys):
        code, out, _ = invoke(capsys, "nc", "--k", "4", "--count")
        assert code == 0
        assert out.strip() == "14"

    def test_nc_list(self, capsys):
        code, out, _ = invoke(capsys, "nc", "--k", "3")
        assert code == 0
        assert len(out.strip().splitlines()) == 5

    def test_nc_pairings(self, capsys):
        code, out, _ = invoke(capsys, "nc", "--k", "3", "--pairings", "--count")
        assert code == 0
        assert out.strip() == "5"

    def test_cumulants_pauli(self, capsys):
        code, out, _ = invoke(capsys, "cumulants", "--operator", "pauli", "--order", "4")
        assert code == 0
        assert "kappa4 = -1" in out

    def test_cumulants_moments(self, capsys):
        code, out, _ = invoke(capsys, "cumulants", "--moments", "0,1,0,3")
        assert code == 0
        assert "kappa4 = 1" in out


class TestCurveCommands:
    def test_page_curve_vn(self, capsys):
        code, out, _ = invoke(capsys, "page-curve", "--k", "vn", "--qubits", "8")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == EntropyCurve.CSV_HEADER
        assert len(lines) == 10
        half = lines[5].split(",")
        assert float(half[2]) == pytest.approx(8 * math.log(2) - 0.5, abs=1e-9)

    def test_page_curve_bits(self, capsys):
        _, nats, _ = invoke(capsys, "page-curve", "--k", "2", "--qubits", "4")
        _, bits, _ = invoke(capsys, "page-curve", "--k", "2", "--qubits", "4", "--bits")
        vn = float(nats.strip().splitlines()[3].split(",")[2])
        vb = float(bits.strip().splitlines()[3].split(",")[2])
        assert vb == pytest.approx(vn / math.log(2), rel=1e-12)

    def test_mc_csv_deterministic(self, capsys):
        args = ("mc", "--qubits", "3", "--samples", "5", "--k", "vn,2", "--seed", "11")
        _, a, _ = invoke(capsys, *args)
        _, b, _ = invoke(capsys, *args)
        assert a == b
        assert a.splitlines()[0] == EntropyCurve.CSV_HEADER

    def test_mc_json_mirrors_csv(self, capsys):
        _, csv_out, _ = invoke(capsys, "mc", "--qubits", "2", "--samples", "4",
                               "--k", "2", "--seed", "1")
        _, json_out, _ = invoke(capsys, "mc", "--qubits", "2", "--samples", "4",
                                "--k", "2", "--seed", "1", "--format", "json")
        objs = json.loads(json_out)
        lines = csv_out.strip().splitlines()
        assert len(objs) == len(lines) - 1
        fields = lines[0].split(",")
        assert list(objs[0].keys()) == fields

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "curve.csv"
        code, out, _ = invoke(capsys, "mc", "--qubits", "2", "--samples", "3",
                              "--k", "2", "--seed", "1", "--out", str(path))
        assert code == 0
        assert out == ""
        assert path.read_text().splitlines()[0] == EntropyCurve.CSV_HEADER

    def test_state_mc(self, capsys):
        code, out, _ = invoke(capsys, "state-mc", "--qubits", "2", "--samples", "5",
                              "--k", "2", "--seed", "4")
        assert code == 0
        assert len(out.strip().splitlines()) == 4

    def test_fluct(self, capsys):
        code, out, err = invoke(capsys, "fluct", "--qubits", "2,4", "--k", "2",
                                "--samples", "40", "--seed", "6", "--slope")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "qubits,dim,k,mean_purity,relative_variance,samples"
        assert len(lines) == 3
        assert err.startswith("slope,2,")
