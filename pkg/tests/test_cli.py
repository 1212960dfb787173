import json

import pytest

from semialg import cli
from semialg import gap_polynomials as gp
from semialg import graded_hilbert as gh
from semialg import semigroup_core as sc


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFrobeniusCommand:
    def test_basic(self, capsys):
        code, out, _ = run(capsys, "frobenius", "3", "5")
        assert code == 0
        assert "frobenius=7 genus=4" in out

    def test_singleton_one(self, capsys):
        code, out, _ = run(capsys, "frobenius", "1")
        assert code == 0
        assert "frobenius=-1 genus=0" in out

    def test_non_coprime_exit_2(self, capsys):
        code, _, err = run(capsys, "frobenius", "4", "6")
        assert code == 2
        assert "gcd(A)=2, not a numerical semigroup" in err

    def test_gaps_and_witness(self, capsys):
        code, out, _ = run(capsys, "frobenius", "3", "5", "--gaps", "--witness", "8")
        assert code == 0
        assert "gaps: 1 2 4 7" in out
        assert "r=[1, 1]" in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "frobenius", "3", "5", "--json", "--gaps")
        payload = json.loads(out)
        table = sc.build_table(sc.validate_generators([3, 5]))
        assert payload["result"]["frobenius"] == table.frobenius
        assert payload["result"]["genus"] == table.genus
        assert payload["result"]["gaps"] == list(table.gaps)


class TestGapsAndGapPoly:
    def test_gaps(self, capsys):
        code, out, _ = run(capsys, "gaps", "3", "5")
        assert code == 0
        assert out.strip() == "1 2 4 7"

    def test_gap_poly_text(self, capsys):
        code, out, _ = run(capsys, "gap-poly", "3", "5")
        assert code == 0
        assert out.strip() == "q + q^2 + q^4 + q^7"

    def test_gap_poly_json(self, capsys):
        code, out, _ = run(capsys, "gap-poly", "3", "5", "--json")
        payload = json.loads(out)
        f = gp.gap_polynomial(sc.validate_generators([3, 5]))
        assert payload["result"]["terms"] == [list(t) for t in gp.poly_to_json(f)]


class TestVerifyCommand:
    def test_pair(self, capsys):
        code, out, _ = run(capsys, "verify", "3", "5")
        assert code == 0
        assert out.count("PASS") == 4
        assert "FAIL" not in out

    def test_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "--sweep", "10")
        assert code == 0
        # 22 coprime pairs with 2 <= a < b <= 10 (counted by brute force)
        assert "22 pairs, 22 PASS" in out

    def test_sweep_20_pair_count(self, capsys):
        import math

        expected = sum(
            1 for a in range(2, 21) for b in range(a + 1, 21) if math.gcd(a, b) == 1
        )
        code, out, _ = run(capsys, "verify", "--sweep", "20")
        assert code == 0
        assert f"{expected} pairs, {expected} PASS" in out

    def test_invalid_pair_exit_2(self, capsys):
        code, _, err = run(capsys, "verify", "6", "9")
        assert code == 2
        assert "gcd" in err


class TestDivideAndKernel:
    def test_divisor_itself(self, capsys):
        code, out, _ = run(capsys, "divide", "x^3 - y^2", "2", "3")
        assert code == 0
        assert "quotient: 1" in out
        assert "remainder: 0" in out
        assert "in_kernel(evaluate)=true in_kernel(divide)=true" in out

    def test_non_member(self, capsys):
        code, out, _ = run(capsys, "divide", "x", "2", "3")
        assert code == 0
        assert "quotient: 0" in out
        assert "remainder: x" in out
        assert "in_kernel(evaluate)=false" in out

    def test_hand_example(self, capsys):
        code, out, _ = run(capsys, "divide", "x^4", "2", "3")
        assert code == 0
        assert "quotient: x" in out
        assert "remainder: x*y^2" in out

    def test_kernel_command(self, capsys):
        code, out, _ = run(capsys, "kernel", "x^3 - y^2", "2", "3")
        assert code == 0
        assert "in_kernel(evaluate)=true in_kernel(divide)=true" in out

    def test_parse_error_exit_3(self, capsys):
        code, _, err = run(capsys, "divide", "x^2 + @", "2", "3")
        assert code == 3
        assert "column 7" in err


class TestHilbertCommand:
    def test_semigroup_ring(self, capsys):
        code, out, _ = run(capsys, "hilbert", "semigroup_ring", "3", "5", "10", "--json")
        payload = json.loads(out)
        assert payload["result"]["coefficients"] == [1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1]

    def test_univariate_with_dashes(self, capsys):
        code, out, _ = run(capsys, "hilbert", "univariate", "-", "-", "4", "--json")
        assert json.loads(out)["result"]["coefficients"] == [1, 1, 1, 1, 1]

    def test_frobenius_grading_coefficient(self, capsys):
        code, out, _ = run(capsys, "hilbert", "full_ring_frobenius", "3", "5", "15", "--json")
        assert json.loads(out)["result"]["coefficients"][15] == 2

    def test_order_flag(self, capsys):
        code, out, _ = run(capsys, "hilbert", "univariate", "-", "-", "--order", "2")
        assert code == 0
        assert "O(q^3)" in out

    def test_missing_order_exit_2(self, capsys):
        code, _, err = run(capsys, "hilbert", "univariate", "-", "-")
        assert code == 2

    def test_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "hilbert", "kernel", "3", "5", "25", "--json")
        payload = json.loads(out)
        s = gh.hilbert_series("kernel", 3, 5, 25)
        assert payload["result"]["order"] == s.order
        assert tuple(payload["result"]["coefficients"]) == s.coefficients


class TestRankNullityCommand:
    def test_default_order(self, capsys):
        code, out, _ = run(capsys, "rank-nullity", "3", "5")
        assert code == 0
        assert "rank_nullity up to n=45: PASS" in out

    def test_explicit_order(self, capsys):
        code, out, _ = run(capsys, "rank-nullity", "2", "7", "--order", "100")
        assert code == 0
        assert "PASS" in out


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["frobenius", "3", "5", "--gaps", "--json"],
            ["verify", "3", "5"],
            ["divide", "x^4 - y^2 + 3", "2", "3", "--json"],
            ["hilbert", "full_ring_frobenius", "3", "5", "20", "--json"],
        ],
    )
    def test_byte_identical(self, capsys, argv):
        _, out1, _ = run(capsys, *argv)
        _, out2, _ = run(capsys, *argv)
        assert out1 == out2
