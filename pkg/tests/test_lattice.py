import pytest

from cremona.errors import NotHomaloidalError, ParseError
from cremona.lattice import (HomaloidalType, IntegerMatrix, LatticeVector,
                             Perm, Sigma0, WeylWord, apply_sigma0,
                             characteristic_matrix, dual_type, format_type,
                             hudson_test, is_proper, noether_check,
                             parse_type_literal, sigma0_matrix)

from oracles import hudson_plain


def T(s):
    return HomaloidalType.parse(s)


class TestParsing:
    def test_exponents_expand(self):
        assert parse_type_literal("8;4^3,2^3,1^3") == (8, [4, 4, 4, 2, 2, 2, 1, 1, 1])

    def test_parentheses_and_spaces(self):
        assert parse_type_literal(" (5; 2^6) ") == (5, [2] * 6)

    def test_negative_entries_parse(self):
        assert parse_type_literal("3;1^7,-1") == (3, [1] * 7 + [-1])

    def test_degree_only(self):
        assert T("1") == HomaloidalType(1, ())

    @pytest.mark.parametrize("bad", ["", "x;1", "5;2^", "5;2,,1", "5;a"])
    def test_rejects_garbage(self, bad):
        with pytest.raises(ParseError):
            parse_type_literal(bad)

    def test_format_round_trip(self):
        t = T("10;5^3,2^6")
        assert t.literal() == "10;5^3,2^6"
        assert T(t.literal()) == t
        assert str(t) == "(10;5^3,2^6)"

    def test_json_round_trip(self):
        t = T("9;4^4,2^4")
        assert HomaloidalType.from_json(t.to_json()) == t
        assert t.to_json()["mults"] == [4, 4, 4, 4, 2, 2, 2, 2]

    def test_format_type_no_runs(self):
        assert format_type(2, [1, 1, 1]) == "2;1^3"


class TestHomaloidalType:
    def test_sorted_and_zero_free(self):
        t = HomaloidalType(2, (1, 0, 1, 1))
        assert t.mults == (1, 1, 1)

    @pytest.mark.parametrize("d,m", [(5, (2,) * 5), (0, ()), (3, (1,) * 7 + (-1,))])
    def test_rejects(self, d, m):
        with pytest.raises(NotHomaloidalError):
            HomaloidalType(d, m)

    def test_noether(self):
        assert noether_check(5, [2] * 6)
        assert noether_check(3, [1] * 7 + [-1])
        assert not noether_check(4, [2, 2, 2])


class TestSigma0:
    def test_matrix(self):
        assert sigma0_matrix().tolist() == [[2, -1, -1, -1], [1, 0, -1, -1],
                                            [1, -1, 0, -1], [1, -1, -1, 0]]

    def test_quadratic_to_linear(self):
        assert apply_sigma0(LatticeVector.of(2, (1, 1, 1))) == LatticeVector.of(1)

    def test_involution(self):
        m = sigma0_matrix(6)
        assert m @ m == IntegerMatrix.identity(6)

    def test_form_preserved(self):
        assert sigma0_matrix(7).preserves_form()
        assert sigma0_matrix(7).preserves_canonical_class()


class TestMatrix:
    def test_inverse(self):
        m = sigma0_matrix(5) @ Perm((2, 1, 4, 3)).matrix(5)
        assert m @ m.inverse() == IntegerMatrix.identity(5)

    def test_negative_power(self):
        m = sigma0_matrix(4) @ Perm((3, 1, 2)).matrix(4)
        assert m ** -2 @ m ** 2 == IntegerMatrix.identity(4)

    def test_embed(self):
        assert sigma0_matrix(4).embed(6).dim == 6


class TestHudson:
    def test_proper_example(self):
        assert is_proper(T("5;2^6"))

    def test_improper_example(self):
        res = hudson_test(T("5;3^2,1^6"))
        assert not res.proper
        assert res.witness.has_negative

    def test_negative_input_immediate(self):
        res = hudson_test(LatticeVector.of(3, (1,) * 7 + (-1,)))
        assert not res.proper
        assert res.trace == ()

    def test_not_homaloidal(self):
        with pytest.raises(NotHomaloidalError):
            hudson_test(LatticeVector.of(5, (2,) * 5))

    def test_word_reaches_e0(self, table1):
        for t in table1:
            res = hudson_test(t)
            assert res.word.apply(t.vector()) == LatticeVector.of(1)

    def test_matches_plain_oracle(self, table1):
        for t in table1:
            assert hudson_test(t).proper == hudson_plain(t.degree, list(t.mults))

    def test_word_str(self):
        w = WeylWord((Sigma0(),), 4)
        assert str(w) and w.sigma_count == 1


class TestDual:
    @pytest.mark.parametrize("t,d", [
        ("6;4,2^4,1^3", "6;3^3,2,1^4"),   # the degree-6 example
        ("2;1^3", "2;1^3"),
        ("5;2^6", "5;2^6"),
        ("8;6,2^6,1^3", "8;4^3,3,1^6"),
    ])
    def test_examples(self, t, d):
        assert dual_type(T(t)) == T(d)

    def test_involutive_on_table(self, table1):
        for t in table1:
            assert dual_type(dual_type(t)) == t

    def test_dual_via_characteristic_matrix(self, table1):
        # g = characteristic matrix; the inverse has type g^-1(e_0)
        for t in table1:
            g = characteristic_matrix(t)
            col = g.inverse().column(0)
            assert HomaloidalType(col[0], col[1:]) == dual_type(t)
            assert g.apply((1,) + (0,) * (g.dim - 1))[:t.r + 1] == t.vector().padded(g.dim)[:t.r + 1]

    def test_characteristic_matrix_quadratic(self):
        assert characteristic_matrix(T("2;1^3")) == sigma0_matrix(4)

    def test_identity_type(self):
        assert characteristic_matrix(T("1")) == IntegerMatrix.identity(1)
