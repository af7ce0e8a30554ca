from fractions import Fraction

import pytest

from behrend import (
    MAXIMAL_IDEAL,
    DomainError,
    MonomialIdeal,
    ParseError,
    UnsupportedError,
    factor_normal,
    factors_text,
    ideal_text,
    make_tower,
    n_ab,
    parse,
    product_text,
    tower_text,
)


class TestParsing:
    def test_maximal_power(self):
        assert parse("m^3").ideal == MAXIMAL_IDEAL**3

    def test_generator_list(self):
        assert parse("(x^7, x^3 y, x^2 y^3, x y^4, y^6)").ideal == MonomialIdeal(
            [(7, 0), (3, 1), (2, 3), (1, 4), (0, 6)]
        )

    def test_whitespace_insensitive(self):
        assert parse("( x^7,x^3 y, x^2y^3, xy^4, y^6 )").ideal == parse(
            "(x^7, x^3 y, x^2 y^3, x y^4, y^6)"
        ).ideal

    def test_exponent_one_optional(self):
        assert parse("(x^1 y^1)").ideal == parse("(x y)").ideal

    def test_unit_ideal(self):
        assert parse("(1)").ideal == MonomialIdeal([(0, 0)])

    def test_list_with_alias_product(self):
        value = parse("(x^2, x y^2, y^3) * n(1,1)")
        assert value.ideal == n_ab(2, 3) * MAXIMAL_IDEAL

    def test_tower_pair(self):
        value = parse("tower(x; g=0; exps=[2]) * tower(y; g=0; exps=[3])")
        assert value.ideal == MonomialIdeal([(1, 1), (4, 0), (0, 3)])
        product = value.require_towers()
        assert len(product.towers) == 2

    def test_tangent_coefficients(self):
        value = parse("tower(x; g = 1/2*y^2 - y^3; exps = [4, 5])")
        (tower,) = value.require_towers().towers
        assert tower.tangent == (Fraction(0), Fraction(1, 2), Fraction(-1))

    def test_non_monomial_tower_has_no_ideal(self):
        value = parse("tower(x; g = y; exps = [2])")
        assert value.ideal is None
        with pytest.raises(UnsupportedError):
            value.require_ideal()

    def test_mixed_product_rejected_both_ways(self):
        value = parse("(x^2, y^2) * tower(x; g = y; exps = [2])")
        assert value.ideal is None and value.factors is None

    def test_three_variables_rejected(self):
        with pytest.raises(UnsupportedError):
            parse("(x, y, z)")

    def test_unknown_variable_is_syntax_error(self):
        with pytest.raises(ParseError):
            parse("(x, w)")

    def test_caret_position(self):
        with pytest.raises(ParseError) as info:
            parse("(x^2, )")
        assert info.value.position == 6
        assert "^" in info.value.diagnostic()

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse("m^2 extra")

    def test_tower_validation_propagates(self):
        with pytest.raises(DomainError):
            parse("tower(x; g = y^3; exps = [2])")  # deg g >= height

    def test_constant_tangent_rejected(self):
        with pytest.raises(ParseError):
            parse("tower(x; g = 1; exps = [2])")

    def test_tangent_in_wrong_variable(self):
        with pytest.raises(ParseError):
            parse("tower(x; g = x^2; exps = [3])")

    def test_repeated_variable_rejected(self):
        with pytest.raises(ParseError):
            parse("(x x)")


class TestPrinting:
    def test_ideal_text_descending(self):
        I = MonomialIdeal([(0, 6), (1, 4), (2, 3), (3, 1), (7, 0)])
        assert ideal_text(I) == "(x^7, x^3 y, x^2 y^3, x y^4, y^6)"

    def test_unit_text(self):
        assert ideal_text(MonomialIdeal([(0, 0)])) == "(1)"

    def test_factors_text(self):
        villa = MonomialIdeal([(6, 0), (4, 1), (2, 2), (1, 3), (0, 5)])
        assert factors_text(factor_normal(villa)) == "n(1,2) * n(1,1) * n(2,1)^2"

    def test_tower_text(self):
        t = make_tower("x", (0, Fraction(1, 2), -1), (4, 5))
        assert tower_text(t) == "tower(x; g = 1/2*y^2 - y^3; exps = [4, 5])"

    def test_monomial_tower_text(self):
        t = make_tower("y", (), (1, 2, 3))
        assert tower_text(t) == "tower(y; g = 0; exps = [1, 2, 3])"


class TestRoundTrips:
    def test_ideal_roundtrip(self):
        for I in (
            MAXIMAL_IDEAL**4,
            n_ab(5, 7),
            MonomialIdeal([(7, 0), (3, 1), (2, 3), (1, 4), (0, 6)]),
            MonomialIdeal([(0, 0)]),
        ):
            assert parse(ideal_text(I)).ideal == I

    def test_factorization_roundtrip(self):
        villa = MonomialIdeal([(6, 0), (4, 1), (2, 2), (1, 3), (0, 5)])
        assert parse(factors_text(factor_normal(villa))).ideal == villa

    def test_tower_roundtrip(self):
        towers = [
            make_tower("x", (), (1, 2, 3)),
            make_tower("y", (Fraction(2, 3),), (2, 5)),
            make_tower("x", (0, Fraction(1, 2), -1), (4, 7)),
        ]
        for t in towers:
            (back,) = parse(tower_text(t)).require_towers().towers
            assert back == t

    def test_product_roundtrip(self):
        from behrend import TowerProduct

        product = TowerProduct(
            [make_tower("x", (), (1, 2)), make_tower("y", (1,), (2, 3))]
        )
        assert parse(product_text(product)).require_towers().towers == product.towers


class TestParserFuzz:
    def test_never_crashes_with_foreign_exceptions(self):
        # any input must either parse or raise one of the package's errors
        import random

        from behrend import BehrendError

        alphabet = "xy zmn towerg=exps[]()^*,;+-/123 "
        rng = random.Random(47)
        for _ in range(3000):
            text = "".join(
                rng.choice(alphabet) for _ in range(rng.randint(1, 40))
            )
            try:
                parse(text)
            except BehrendError:
                pass

    def test_valid_prefixes_with_junk_suffix_fail_cleanly(self):
        for text in ("m^", "(x", "(x,", "n(1", "tower(x; g = y; exps = [2", "m *"):
            with pytest.raises(ParseError):
                parse(text)
