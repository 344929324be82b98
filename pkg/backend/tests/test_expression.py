import pytest
from hypothesis import given

from models.algebra import ChainSpec
from services.core_algebra import idempotent_on_complement, shift_by
from services.expression import (
    Compose,
    Invert,
    Literal,
    Power,
    evaluate_text,
    format_element,
    parse,
    parse_chain,
    parse_prefix,
    tokenize,
)
from utils.errors import InjectivityViolation, InvalidArgument, ParseError, TailCollision, ValidationError

from tests.strategies import EPS0, ID, SHIFT1, TRANS01, chain_specs, elements, random_element


class TestTokenizer:
    def test_arrow_and_undefined(self):
        kinds = [token.kind for token in tokenize("1->_")]
        assert kinds == ["number", "arrow", "undefined", "end"]

    def test_negative_integer(self):
        texts = [token.text for token in tokenize("k=-1")]
        assert texts == ["k", "=", "-", "1", ""]

    def test_unknown_character(self):
        with pytest.raises(ParseError) as info:
            tokenize("idem{0} $")
        assert info.value.position == 8

    def test_digits_are_ascii_only(self):
        with pytest.raises(ParseError) as info:
            tokenize("idem{٣}")
        assert info.value.position == 5


class TestParser:
    def test_tree_shape(self):
        node = parse("shift(1) * id'^2")
        assert isinstance(node, Compose)
        assert isinstance(node.left, Literal)
        assert isinstance(node.right, Power) and node.right.exponent == 2
        assert isinstance(node.right.operand, Invert)

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("id", "cfinj{k=0; N=0; t=[]}"),
            ("shift(1) * shift(1)'", "cfinj{k=0; N=0; t=[]}"),
            ("idem{0} * perm(0 1)", "cfinj{k=0; N=2; t=[0->_, 1->0]}"),
            ("idem{1,3}", "cfinj{k=0; N=4; t=[0->0, 1->_, 2->2, 3->_]}"),
            ("shift(-1)", "cfinj{k=-1; N=1; t=[0->_]}"),
            ("shift(1)' * shift(1)", "cfinj{k=0; N=1; t=[0->_]}"),
            ("perm(0 1)(2 3)", "cfinj{k=0; N=4; t=[0->1, 1->0, 2->3, 3->2]}"),
            ("perm()", "cfinj{k=0; N=0; t=[]}"),
            ("(shift(2) * idem{}) ^ -1", "cfinj{k=-2; N=2; t=[0->_, 1->_]}"),
            ("cfinj{k=0; N=1; t=[0->0]}", "cfinj{k=0; N=0; t=[]}"),
        ],
    )
    def test_evaluation(self, text, expected):
        assert format_element(evaluate_text(text)) == expected

    def test_whitespace_is_ignored(self):
        assert evaluate_text("  idem{ 0 }*perm( 0 1 ) ") == evaluate_text("idem{0} * perm(0 1)")

    def test_powers(self):
        assert evaluate_text("shift(1)^3") == shift_by(3)
        assert evaluate_text("shift(1)^-2") == shift_by(-2)
        assert evaluate_text("perm(0 1)^2") == ID

    def test_rows_in_any_order(self):
        assert evaluate_text("cfinj{k=0; N=2; t=[1->0, 0->1]}") == TRANS01


class TestParserErrors:
    @pytest.mark.parametrize("text", ["shift(", "foo", "id *", "idem{0", "(id", "id id", "cfinj{k=0; N=1; t=[0->0, 0->0]}"])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            evaluate_text(text)

    def test_missing_row(self):
        with pytest.raises(ValidationError):
            evaluate_text("cfinj{k=0; N=2; t=[0->1]}")

    def test_repeated_value(self):
        with pytest.raises(InjectivityViolation):
            evaluate_text("cfinj{k=0; N=2; t=[0->1, 1->1]}")

    def test_value_in_the_tail(self):
        with pytest.raises(TailCollision) as info:
            evaluate_text("cfinj{k=0; N=1; t=[0->5]}")
        assert "position 0" in info.value.message

    def test_overlapping_cycles(self):
        with pytest.raises(InvalidArgument):
            evaluate_text("perm(0 1)(1 2)")

    def test_parse_errors_are_validation_errors(self):
        with pytest.raises(ValidationError) as info:
            evaluate_text("shift(")
        assert info.value.exit_code == 1


class TestRoundTrip:
    @given(elements())
    def test_format_then_parse(self, alpha):
        assert evaluate_text(format_element(alpha)) == alpha

    def test_seeded_round_trip(self, rng):
        for _ in range(1000):
            alpha = random_element(rng)
            assert evaluate_text(format_element(alpha)) == alpha

    def test_text_of_fixed_elements(self):
        assert format_element(SHIFT1) == "cfinj{k=1; N=0; t=[]}"
        assert format_element(EPS0) == "cfinj{k=0; N=1; t=[0->_]}"
        assert str(EPS0) == format_element(EPS0)


class TestChainSyntax:
    def test_parse_chain(self):
        chain = parse_chain("chain{start=idem{0}; prefix=[3]}")
        assert chain == ChainSpec(start=EPS0, prefix=(3,))

    def test_parse_chain_with_empty_prefix(self):
        assert parse_chain("chain{start=id; prefix=[]}") == ChainSpec(start=ID)

    @given(chain_specs())
    def test_chain_round_trip(self, chain):
        assert parse_chain(chain.to_text()) == chain

    def test_prefix(self):
        assert parse_prefix("[3, 1,2]") == (3, 1, 2)
        assert parse_prefix("[]") == ()

    def test_bad_prefix(self):
        with pytest.raises(ParseError):
            parse_prefix("[1,]")

    def test_idempotent_literal(self):
        assert evaluate_text("idem{2}") == idempotent_on_complement({2})
