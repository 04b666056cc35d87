"""Namespace table: derivation from the root, curie compression, prefixes."""

import pytest

from wbforge.errors import DuplicateDeclarationError, UnknownPrefixError, WbforgeError
from wbforge.namespaces import (
    DEFAULT_ROOT,
    FIXED_PREFIX_ORDER,
    Iri,
    NamespaceTable,
    expand_iri,
    namespaced_property,
)


def test_iri_rejects_garbage():
    for bad in ("", "has space", "<http://x.example/>", "http://x\n.example/"):
        with pytest.raises(WbforgeError):
            Iri(bad)


def test_iri_local_name():
    assert Iri("http://x.example/path/Leaf").local_name == "Leaf"
    assert Iri("http://wikiba.se/ontology#Item").local_name == "Item"
    assert Iri("urn:sha:abc").local_name == "abc"


def test_default_bases_derive_from_root():
    t = NamespaceTable()
    assert t.base("wd") == DEFAULT_ROOT + "entity/"
    assert t.base("s") == DEFAULT_ROOT + "entity/statement/"
    assert t.base("psv") == DEFAULT_ROOT + "prop/statement/value/"
    assert t.base("wikibase") == "http://wikiba.se/ontology#"


def test_rebased_root_moves_all_derived_namespaces():
    t = NamespaceTable("http://my.example/base/")
    assert t.base("pqv") == "http://my.example/base/prop/qualifier/value/"
    assert t.base("ref") == "http://my.example/base/reference/"
    # absolute families do not move
    assert t.base("xsd") == "http://www.w3.org/2001/XMLSchema#"


def test_root_must_end_in_separator():
    with pytest.raises(WbforgeError):
        NamespaceTable("http://my.example/base")


def test_curie_prefers_longest_base():
    t = NamespaceTable()
    assert t.curie(Iri(DEFAULT_ROOT + "prop/statement/age")) == "ps:age"
    assert t.curie(Iri(DEFAULT_ROOT + "prop/statement/value/age")) == "psv:age"
    assert t.curie(Iri(DEFAULT_ROOT + "entity/statement/q1-abc")) == "s:q1-abc"


def test_curie_refuses_structured_locals():
    t = NamespaceTable()
    assert t.curie(Iri(DEFAULT_ROOT + "prop/statement/value/deep/leaf")) is None
    assert t.curie(Iri("http://elsewhere.example/x")) is None
    assert t.curie(Iri(DEFAULT_ROOT + "entity/")) is None


def test_split():
    t = NamespaceTable()
    assert t.split(Iri(DEFAULT_ROOT + "prop/qualifier/atTime")) == ("pq", "atTime")
    assert t.split(Iri("http://elsewhere.example/x")) is None


def test_user_prefix_round_trip_and_shadowing():
    t = NamespaceTable().with_prefix("rec", "http://records.example/vocab/")
    assert t.curie(Iri("http://records.example/vocab/Agent")) == "rec:Agent"
    with pytest.raises(DuplicateDeclarationError):
        t.with_prefix("wdt", "http://records.example/other/")
    with pytest.raises(WbforgeError):
        t.with_prefix("bad", "http://records.example/no-separator")


def test_prefixes_fixed_order_then_user():
    t = NamespaceTable().with_prefix("rec", "http://records.example/vocab/")
    listed = [p for p, _ in t.prefixes()]
    assert tuple(listed[:len(FIXED_PREFIX_ORDER)]) == FIXED_PREFIX_ORDER
    assert listed[-1] == "rec"


def test_expand_iri():
    t = NamespaceTable()
    assert expand_iri("<http://x.example/a>", t) == Iri("http://x.example/a")
    assert expand_iri("wd:employee", t) == Iri(DEFAULT_ROOT + "entity/employee")
    with pytest.raises(UnknownPrefixError):
        expand_iri("nope:x", t)
    with pytest.raises(UnknownPrefixError):
        expand_iri("noseparator", t)


def test_namespaced_property():
    t = NamespaceTable()
    assert namespaced_property("hasJob", "pq", t) == Iri(DEFAULT_ROOT + "prop/qualifier/hasJob")
    with pytest.raises(WbforgeError):
        namespaced_property("hasJob", "wd", t)
