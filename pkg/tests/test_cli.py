"""End-to-end command-line tests; every invocation goes through main()."""

import json

import pytest

from qcong import count_ck
from qcong.cli import main

EQ_2_2_RHS = "2*q*f[2]*f[4]/f[1]^2*B(-q) - q*omega(-q)"


class TestExpand:
    def test_plain_dump(self, capsys):
        assert main(["expand", "q", "--order", "2"]) == 0
        assert capsys.readouterr().out.splitlines() == ["0\t0", "1\t1"]

    def test_json_dump(self, capsys):
        assert main(["expand", "1 + q", "--order", "3", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc == {"order": 3, "ring": "exact", "coeffs": ["1", "1", "0"]}

    def test_mod64_ring(self, capsys):
        assert main(["expand", "-1", "--order", "1", "--ring", "mod64"]) == 0
        out = capsys.readouterr().out.strip()
        assert out == f"0\t{2**64 - 1}"

    def test_parse_error_exits_2(self, capsys):
        assert main(["expand", "f[", "--order", "5"]) == 2
        err = capsys.readouterr().err
        assert "error:" in err and "integer" in err

    def test_nonunit_division_exits_2(self, capsys):
        assert main(["expand", "1/q", "--order", "4"]) == 2
        assert "error:" in capsys.readouterr().err


class TestVerify:
    def test_equal_expressions_pass(self, capsys):
        assert main(["verify", "q", "q", "--order", "10"]) == 0
        assert capsys.readouterr().out.strip() == "pass"

    def test_unequal_expressions_fail_with_witness(self, capsys):
        assert main(["verify", "q", "q + q^2", "--order", "10"]) == 1
        out = capsys.readouterr().out
        assert out.startswith("fail")
        witness = json.loads(out.split("witness:", 1)[1])
        assert witness == {"n": 2, "lhs": 0, "rhs": 1}

    def test_counting_series_display(self, capsys):
        assert main(["verify", "C", EQ_2_2_RHS, "--order", "80"]) == 0

    def test_congruence_mode(self, capsys):
        assert main(["verify", "f[1]^2", "f[2]", "--order", "60",
                     "--mod", "2"]) == 0
        assert main(["verify", "f[1]^2", "f[2]", "--order", "60",
                     "--mod", "4"]) == 1

    def test_mod64_requires_mod(self):
        with pytest.raises(SystemExit) as err:
            main(["verify", "q", "q", "--order", "10", "--ring", "mod64"])
        assert err.value.code == 2

    def test_mod64_with_mod_allowed(self, capsys):
        assert main(["verify", "f[1]^8", "f[2]^4", "--order", "60",
                     "--mod", "8", "--ring", "mod64"]) == 0


class TestCheck:
    def test_known_progression_passes(self, capsys):
        assert main(["check", "--series", "C", "--progression", "8,6",
                     "--mod", "8", "--nmax", "200"]) == 0
        assert capsys.readouterr().out.strip() == "pass"

    def test_failing_progression_prints_witness(self, capsys):
        assert main(["check", "--series", "C", "--progression", "8,4",
                     "--mod", "8", "--nmax", "200"]) == 1
        out = capsys.readouterr().out
        witness = json.loads(out.split("witness:", 1)[1])
        assert witness == {"n": 1, "argument": 12, "value": 284, "residue": 4}

    def test_ck_series_verdict_matches_enumeration(self, capsys):
        code = main(["check", "--series", "Ck:2", "--progression", "2,0",
                     "--mod", "2", "--nmax", "8"])
        expected = all(count_ck(2, 2 * n) % 2 == 0 for n in range(9))
        assert code == (0 if expected else 1)

    def test_bad_series_spec(self):
        with pytest.raises(SystemExit) as err:
            main(["check", "--series", "Ck:0", "--progression", "8,6",
                  "--mod", "8", "--nmax", "10"])
        assert err.value.code == 2

    def test_bad_progression_spec(self):
        with pytest.raises(SystemExit) as err:
            main(["check", "--series", "C", "--progression", "8",
                  "--mod", "8", "--nmax", "10"])
        assert err.value.code == 2


class TestRelation:
    def test_known_relation_passes(self, capsys):
        assert main(["relation", "--series", "C", "--lhs", "8,7",
                     "--rhs", "2,2", "--sign", "-", "--mod", "4",
                     "--nmax", "100"]) == 0
        assert capsys.readouterr().out.strip() == "pass"

    def test_plus_sign_self_relation(self, capsys):
        assert main(["relation", "--series", "C", "--lhs", "1,0",
                     "--rhs", "1,0", "--sign", "+", "--mod", "8",
                     "--nmax", "50"]) == 0

    def test_failing_relation(self, capsys):
        assert main(["relation", "--series", "C", "--lhs", "4,1",
                     "--rhs", "4,3", "--sign", "+", "--mod", "4",
                     "--nmax", "5"]) == 1
        witness = json.loads(capsys.readouterr().out.split("witness:", 1)[1])
        assert witness["n"] == 2 and witness["residue"] == 3


class TestOracle:
    def test_limit_counts(self, capsys):
        assert main(["oracle", "--k", "limit", "--nmax", "8"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines == [f"{n}\t{c}" for n, c in
                         enumerate([0, 1, 2, 5, 8, 14, 24, 38, 58])]

    def test_finite_k_counts(self, capsys):
        assert main(["oracle", "--k", "2", "--nmax", "6"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines == [f"{n}\t{count_ck(2, n)}" for n in range(7)]

    def test_bad_k(self):
        with pytest.raises(SystemExit) as err:
            main(["oracle", "--k", "0", "--nmax", "5"])
        assert err.value.code == 2


class TestScan:
    def test_finds_published_progressions(self, capsys):
        assert main(["scan", "--amax", "8", "--mods", "4,8",
                     "--nmax", "40"]) == 0
        out = capsys.readouterr().out
        assert "c(8n+4) == 0 mod 4" in out
        assert "c(8n+6) == 0 mod 8" in out
        assert "c(8n+4) == 0 mod 8" not in out

    def test_non_power_of_two_modulus_uses_exact_ring(self, capsys):
        assert main(["scan", "--amax", "3", "--mods", "3", "--nmax", "20"]) == 0


class TestSuite:
    def test_small_suite_passes_and_writes_json(self, tmp_path, capsys):
        path = tmp_path / "report.json"
        assert main(["suite", "--order-identity", "40", "--order-scan", "400",
                     "--kmax", "0", "--json", str(path)]) == 0
        out = capsys.readouterr().out
        assert "eq-1-2" in out and "oracle-c-limit" in out
        assert ", 0 fail, " in out.splitlines()[-1]
        doc = json.loads(path.read_text())
        assert doc["order_identity"] == 40 and doc["order_scan"] == 400
        assert doc["k_max"] == 0
        assert all(c["status"] == "pass" for c in doc["claims"])
        ids = [c["id"] for c in doc["claims"]]
        assert "eq-2-13-k4-m5" in ids and "eq-2-27" in ids


class TestUsage:
    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as err:
            main(["bogus"])
        assert err.value.code == 2

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as err:
            main([])
        assert err.value.code == 2
