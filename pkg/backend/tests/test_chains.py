import pytest
from hypothesis import given

from models.algebra import ChainSpec
from services.chains import ChainEngine, hole_sequence
from services.core_algebra import IDENTITY, compose, idempotent_on_complement, is_idempotent, natural_leq, power
from utils.errors import HRelated, InvalidArgument, NotAChain, NotIdempotent

from tests.strategies import BACK1, EPS0, ID, SHIFT1, TRANS01, chain_specs, idempotents, random_chain_spec, random_idempotent

CANONICAL = ChainSpec(start=ID)


def grid(chains: ChainEngine, pair, size: int = 11):
    return {(i, j): chains.bicyclic_element(pair, i, j) for i in range(size) for j in range(size)}


class TestChainSpec:
    def test_start_must_be_idempotent(self):
        with pytest.raises(NotIdempotent):
            ChainSpec(start=SHIFT1)

    def test_prefix_must_lie_in_the_domain(self):
        with pytest.raises(InvalidArgument):
            ChainSpec(start=EPS0, prefix=(0,))

    def test_prefix_without_repeats(self):
        with pytest.raises(InvalidArgument):
            ChainSpec(start=ID, prefix=(2, 2))

    def test_hole_sequence(self):
        assert hole_sequence(ChainSpec(start=EPS0, prefix=(3,)), 4) == [3, 1, 2, 4]
        assert hole_sequence(CANONICAL, 3) == [0, 1, 2]

    def test_text(self):
        assert ChainSpec(start=ID, prefix=(2,)).to_text() == "chain{start=cfinj{k=0; N=0; t=[]}; prefix=[2]}"


class TestChainElements:
    def test_members_of_canonical_chain(self, chains):
        assert chains.chain_element(CANONICAL, 1) == ID
        assert chains.chain_element(CANONICAL, 2) == EPS0
        assert chains.chain_element(CANONICAL, 4).to_text() == "cfinj{k=0; N=3; t=[0->_, 1->_, 2->_]}"

    def test_positions_start_at_one(self, chains):
        with pytest.raises(InvalidArgument):
            chains.chain_element(CANONICAL, 0)

    def test_canonical_chain_steps_by_single_points(self, chains):
        for i in range(1, 21):
            assert chains.covers(chains.chain_element(CANONICAL, i + 1), chains.chain_element(CANONICAL, i))

    @given(chain_specs())
    def test_every_chain_steps_by_single_points(self, chains, chain):
        for i in range(1, 21):
            lower, upper = chains.chain_element(chain, i + 1), chains.chain_element(chain, i)
            assert chains.covers(lower, upper)
            assert not chains.covers(upper, lower)

    def test_covers_examples(self, chains):
        assert chains.covers(EPS0, ID)
        assert not chains.covers(idempotent_on_complement({0, 1}), ID)
        assert chains.covers(idempotent_on_complement({0, 1}), EPS0)

    def test_covers_needs_idempotents(self, chains):
        with pytest.raises(NotIdempotent):
            chains.covers(SHIFT1, ID)


class TestBicyclicGenerators:
    def test_canonical_generators_are_the_shifts(self, chains):
        pair = chains.bicyclic_generators(CANONICAL)
        assert (pair.p, pair.q, pair.unit) == (SHIFT1, BACK1, ID)
        assert compose(pair.p, pair.q) == ID
        assert compose(pair.q, pair.p) == EPS0

    def test_generators_with_prefix(self, chains):
        pair = chains.bicyclic_generators(ChainSpec(start=EPS0, prefix=(3,)))
        assert pair.p.to_text() == "cfinj{k=1; N=4; t=[0->_, 1->2, 2->4, 3->1]}"
        assert pair.q.to_text() == "cfinj{k=-1; N=5; t=[0->_, 1->3, 2->1, 3->_, 4->2]}"
        assert pair.unit == EPS0

    def test_diagonal_walks_down_the_chain(self, chains):
        pair = chains.bicyclic_generators(CANONICAL)
        for m in range(1, 21):
            assert compose(power(pair.q, m), power(pair.p, m)) == chains.chain_element(CANONICAL, m + 1)
            assert compose(power(pair.p, m), power(pair.q, m)) == chains.chain_element(CANONICAL, 1)

    def test_canonical_grid_is_bicyclic(self, chains):
        elements = grid(chains, chains.bicyclic_generators(CANONICAL))
        assert len(set(elements.values())) == 121
        idempotent_cells = {cell for cell, element in elements.items() if is_idempotent(element)}
        assert idempotent_cells == {(m, m) for m in range(11)}

    def test_random_chains(self, chains, rng):
        for _ in range(100):
            chain = random_chain_spec(rng)
            pair = chains.bicyclic_generators(chain)
            assert compose(pair.p, pair.q) == chain.start
            assert pair.q == power(pair.p, -1)
            for m in range(1, 21):
                assert chains.bicyclic_element(pair, m, m) == chains.chain_element(chain, m + 1)
            assert len(set(grid(chains, pair).values())) == 121

    def test_deeper_self_check(self, rng):
        engine = ChainEngine(check_depth=12)
        for _ in range(20):
            engine.bicyclic_generators(random_chain_spec(rng))

    def test_zero_depth_skips_the_self_check(self):
        engine = ChainEngine(check_depth=0)
        assert engine.check_depth == 0
        assert engine.bicyclic_generators(CANONICAL).p == SHIFT1

    def test_negative_exponents_rejected(self, chains):
        with pytest.raises(InvalidArgument):
            chains.bicyclic_element(chains.bicyclic_generators(CANONICAL), -1, 0)


class TestEmbedding:
    def test_two_member_chain(self, chains):
        chain, pair = chains.embed_finite_chain([ID, idempotent_on_complement({2})])
        assert chain.prefix == (2,)
        assert pair.p.to_text() == "cfinj{k=1; N=3; t=[0->1, 1->3, 2->0]}"
        assert pair.q.to_text() == "cfinj{k=-1; N=4; t=[0->2, 1->0, 2->_, 3->1]}"

    def test_members_at_forced_positions(self, chains, rng):
        for _ in range(1000):
            source = random_chain_spec(rng)
            positions = sorted(rng.sample(range(1, 12), rng.randint(1, 4)))
            members = [chains.chain_element(source, i) for i in positions]
            chain, _ = chains.embed_finite_chain(members)
            for member in members:
                position = chains.chain_position(chain, member)
                assert chains.chain_element(chain, position) == member

    def test_single_step_chain(self, chains):
        chain, pair = chains.embed_finite_chain([ID, EPS0])
        assert chain == ChainSpec(start=ID, prefix=(0,))
        assert (pair.p, pair.q, pair.unit) == (SHIFT1, BACK1, ID)

    def test_ascending_chain_rejected(self, chains):
        with pytest.raises(NotAChain):
            chains.embed_finite_chain([EPS0, ID])

    def test_rejection_is_logged(self, chains, log_records):
        with pytest.raises(NotAChain):
            chains.embed_finite_chain([EPS0, ID])
        assert any(record.startswith("WARNING Chain members out of order") for record in log_records)

    def test_repeated_member_rejected(self, chains):
        with pytest.raises(NotAChain):
            chains.embed_finite_chain([EPS0, EPS0])

    def test_empty_chain_rejected(self, chains):
        with pytest.raises(NotAChain):
            chains.embed_finite_chain([])

    def test_non_idempotent_rejected(self, chains):
        with pytest.raises(NotIdempotent):
            chains.embed_finite_chain([ID, TRANS01])


class TestTranslation:
    def test_translate_canonical_chain(self, chains):
        members = chains.translate_chain(EPS0, CANONICAL, 3)
        assert members == [EPS0, chains.chain_element(CANONICAL, 3), chains.chain_element(CANONICAL, 4)]

    def test_translated_chains_descend(self, chains, rng):
        for _ in range(1000):
            nu, chain = random_idempotent(rng, max_point=8, max_holes=3), random_chain_spec(rng)
            members = chains.translate_chain(nu, chain, 5)
            assert len(members) == 5
            for upper, lower in zip(members, members[1:]):
                assert lower != upper
                assert natural_leq(lower, upper)

    def test_identity_translate_is_the_chain(self, chains):
        assert chains.translate_chain(ID, CANONICAL, 3) == [ID, EPS0, idempotent_on_complement({0, 1})]

    def test_translation_is_logged(self, chains, log_records):
        chains.translate_chain(EPS0, CANONICAL, 2)
        assert any(record.startswith("DEBUG Translating") for record in log_records)

    def test_translate_needs_idempotent(self, chains):
        with pytest.raises(NotIdempotent):
            chains.translate_chain(TRANS01, CANONICAL, 2)

    def test_count_must_be_positive(self, chains):
        with pytest.raises(InvalidArgument):
            chains.translate_chain(EPS0, CANONICAL, 0)

    @given(idempotents(max_point=8), chain_specs())
    def test_collapse_contains_identity_and_nu(self, chains, nu, chain):
        collapsed, pair = chains.collapse_chain(nu, chain, 4)
        assert collapsed.start == IDENTITY
        assert chains.chain_element(collapsed, chains.chain_position(collapsed, nu)) == nu
        for member in chains.translate_chain(nu, chain, 4):
            assert chains.chain_element(collapsed, chains.chain_position(collapsed, member)) == member
        assert compose(pair.p, pair.q) == IDENTITY


class TestSeparation:
    def test_shift_and_identity(self, chains):
        lower, upper, chain, _ = chains.separation_chain(SHIFT1, ID)
        assert (lower, upper) == (EPS0, ID)
        assert chain.start == ID

    def test_h_related_rejected(self, chains):
        with pytest.raises(HRelated):
            chains.separation_chain(ID, TRANS01)

    def test_random_pairs(self, chains, rng):
        for _ in range(300):
            alpha = random_idempotent(rng)
            beta = random_idempotent(rng)
            if alpha == beta:
                continue
            lower, upper, chain, _ = chains.separation_chain(alpha, beta)
            assert lower != upper and natural_leq(lower, upper)
            assert chains.chain_element(chain, 1) == upper
            assert chains.chain_element(chain, chains.chain_position(chain, lower)) == lower

