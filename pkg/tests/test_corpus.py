"""Tests for the builtin registry and the exhaustive census."""

import pytest

import _oracles
from quandles import core, corpus, grouptables, permgroup
from quandles.core import Quandle
from quandles.errors import CapExceeded, UnknownName


class TestBuiltinRegistry:
    def test_quandle_names_are_stable(self):
        names = corpus.builtin_quandle_names()
        assert len(names) == 24
        assert len(set(names)) == 24
        for expected in ["t1", "d3", "d16", "affine-5-2", "conj-q8",
                         "s3-transpositions", "d4-plus-d4", "d3-times-d3",
                         "paper-example-16"]:
            assert expected in names

    def test_group_names_carry_suffix(self):
        names = corpus.builtin_group_names()
        assert len(names) == 16
        assert all(name.endswith("-group") for name in names)
        for expected in ["s3-group", "q8-group", "h27-group", "s4-group"]:
            assert expected in names

    def test_combined_listing_keeps_order(self):
        assert (corpus.builtin_names()
                == corpus.builtin_quandle_names() + corpus.builtin_group_names())

    def test_lookup_dispatches_on_kind(self):
        q = corpus.builtin("d4")
        assert isinstance(q, Quandle) and q.order == 4
        table = corpus.builtin("q8-group")
        assert not isinstance(table, Quandle)
        assert grouptables.validate_group(table) == table
        assert len(table) == 8

    def test_labels_match_registry_names(self):
        for name in corpus.builtin_quandle_names():
            assert corpus.builtin_quandle(name).label == name

    def test_unknown_names_rejected_with_listing(self):
        with pytest.raises(UnknownName) as info:
            corpus.builtin("not-a-thing")
        message = str(info.value)
        assert "not-a-thing" in message
        assert "d3" in message

    def test_quandle_lookup_rejects_group_names(self):
        with pytest.raises(UnknownName):
            corpus.builtin_quandle("q8-group")
        with pytest.raises(UnknownName):
            corpus.builtin_group("d3")

    def test_every_builtin_quandle_passes_validation(self):
        for name in corpus.builtin_quandle_names():
            q = corpus.builtin_quandle(name)
            assert core.validate(q.table).table == q.table, name

    def test_every_builtin_group_passes_validation(self):
        for name, table in corpus.builtin_groups():
            assert grouptables.validate_group(table) == table, name

    def test_group_pairs_align_with_names(self):
        pairs = corpus.builtin_groups()
        assert [name for name, _ in pairs] == list(corpus.builtin_group_names())

    def test_sixteen_element_member_shape(self):
        q = corpus.builtin_quandle("paper-example-16")
        assert q.order == 16
        sizes = sorted((len(o) for o in permgroup.orbits(q.table)),
                       reverse=True)
        assert sizes == [8, 4, 4]

    def test_dihedral_entries_match_family_builders(self):
        assert corpus.builtin_quandle("d6").table == core.dihedral(6).table
        assert corpus.builtin_quandle("t4").table == core.trivial(4).table
        assert (corpus.builtin_quandle("affine-7-3").table
                == core.affine(7, 3).table)


class TestDefaultCorpus:
    def test_default_is_the_builtin_registry(self):
        members = corpus.default_corpus()
        assert [q.label for q in members] == list(corpus.builtin_quandle_names())

    def test_family_rows_are_appended(self):
        spec = corpus.CorpusSpec(
            include_builtins=False,
            families=(("dihedral", ((3,), (5,))), ("trivial", ((2,),))))
        members = corpus.default_corpus(spec)
        assert [q.order for q in members] == [3, 5, 2]

    def test_unknown_family_rejected(self):
        spec = corpus.CorpusSpec(families=(("octonion", ((3,),)),))
        with pytest.raises(UnknownName):
            corpus.default_corpus(spec)

    def test_exhaustive_block_appends_census(self):
        spec = corpus.CorpusSpec(include_builtins=False, exhaustive_up_to=3)
        members = corpus.default_corpus(spec)
        assert [q.order for q in members] == [1, 2, 3, 3, 3]

    def test_spec_defaults(self):
        spec = corpus.CorpusSpec()
        assert spec.include_builtins
        assert spec.exhaustive_up_to == 0
        assert spec.families == ()
        assert spec.enumeration_cap == corpus.DEFAULT_ENUMERATION_CAP


class TestEnumerateQuandles:
    def test_census_counts_through_order_five(self):
        assert [len(corpus.enumerate_quandles(n))
                for n in range(1, 6)] == [1, 1, 3, 7, 22]

    def test_complete_and_irredundant_up_to_order_four(self):
        for n in range(1, 5):
            found = corpus.enumerate_quandles(n)
            canon = {_oracles.canonical_form(q.table) for q in found}
            assert len(canon) == len(found), n
            everything = {_oracles.canonical_form(t)
                          for t in _oracles.all_quandle_tables(n)}
            assert canon == everything, n

    def test_order_three_classes_include_the_familiar_pair(self):
        found = corpus.enumerate_quandles(3)
        assert any(core.is_isomorphic(q, core.trivial(3)) is not None
                   for q in found)
        assert any(core.is_isomorphic(q, core.dihedral(3)) is not None
                   for q in found)

    def test_members_carry_census_labels(self):
        labels = [q.label for q in corpus.enumerate_quandles(3)]
        assert labels == ["enum3-0", "enum3-1", "enum3-2"]

    def test_nonpositive_order_rejected(self):
        with pytest.raises(ValueError):
            corpus.enumerate_quandles(0)
        with pytest.raises(ValueError):
            corpus.enumerate_quandles(-2)

    def test_orders_beyond_the_cap_rejected(self):
        with pytest.raises(CapExceeded):
            corpus.enumerate_quandles(7)
        assert len(corpus.enumerate_quandles(3, cap=3)) == 3
        with pytest.raises(CapExceeded):
            corpus.enumerate_quandles(4, cap=3)
