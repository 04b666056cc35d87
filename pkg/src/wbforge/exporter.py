"""Instance export: reified statement triples with content-derived names.

Statements, references, and metadata value nodes have no authored
identifiers; each gets an IRI derived from a canonical text rendering
of its content, hashed with SHA-256 and truncated to 40 hex digits.
Equal content therefore shares nodes across the whole graph, and the
exported triple set is byte-deterministic under canonical ordering.
"""

from __future__ import annotations

import hashlib

from .errors import (
    MissingRequiredError,
    TypeMismatchError,
    UnresolvedNameError,
)
from .expander import object_datatype
from .model import (
    DataObject,
    Datatype,
    DateTimeValue,
    DecimalValue,
    InstanceDoc,
    ItemRef,
    QualifierDecl,
    RefData,
    SchemaDocument,
    StatementData,
    StringValue,
    Value,
)
from .namespaces import Iri, NamespaceTable, namespaced_property, prov_was_derived_from, rdf_type, wikibase, xsd
from .rdf import Graph, Literal, Term, Triple, escape_literal

HASH_LENGTH = 40                  # hex digits kept from the SHA-256 digest


def _sha40(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:HASH_LENGTH]


def canonical_value(value: Value) -> str:
    """Stable one-line text form used inside hash preimages."""
    if isinstance(value, ItemRef):
        return value.iri.value
    if isinstance(value, StringValue):
        return escape_literal(value.text)
    if isinstance(value, DecimalValue):
        return f"{value.amount}|{value.unit.value}"
    return f"{value.iso}|{value.precision}|{value.timezone}|{value.calendar.value}"


def canonical_content(subject: Iri, stmt: StatementData, table: NamespaceTable) -> str:
    """The statement's hash preimage: S, P, V, sorted Q, sorted R lines."""
    wdt = namespaced_property(stmt.property, "wdt", table)
    lines = [f"S|{subject.value}", f"P|{wdt.value}", f"V|{canonical_value(stmt.value)}"]
    q_lines = []
    for q in stmt.qualifiers:
        pq = namespaced_property(q.name, "pq", table)
        q_lines.append(f"Q|{pq.value}|{canonical_value(q.value)}")
    lines.extend(sorted(q_lines))
    r_lines = []
    for ref in stmt.references:
        snaks = sorted(
            f"{namespaced_property(s.name, 'pr', table).value}|{s.target.value}"
            for s in ref.snaks)
        r_lines.append("R|" + ";".join(snaks))
    lines.extend(sorted(r_lines))
    return "".join(line + "\n" for line in lines)


def statement_hash(subject: Iri, stmt: StatementData, table: NamespaceTable) -> str:
    return _sha40(canonical_content(subject, stmt, table))


def statement_node(subject: Iri, stmt: StatementData, table: NamespaceTable) -> Iri:
    h = statement_hash(subject, stmt, table)
    return Iri(f"{table.base('s')}{subject.local_name}-{h}")


def value_hash(value: DateTimeValue | DecimalValue) -> str:
    tag = "T" if isinstance(value, DateTimeValue) else "N"
    return _sha40(f"{tag}|{canonical_value(value)}")


def value_node(value: DateTimeValue | DecimalValue, table: NamespaceTable) -> Iri:
    return Iri(table.base("v") + value_hash(value))


def reference_hash(ref: RefData, table: NamespaceTable) -> str:
    lines = sorted(
        f"R|{namespaced_property(s.name, 'pr', table).value}|{s.target.value}\n"
        for s in ref.snaks)
    return _sha40("".join(lines))


def reference_node(ref: RefData, stmt_hash: str, table: NamespaceTable) -> Iri:
    # scoped to the owning statement so provenance stays one-to-one
    return Iri(f"{table.base('ref')}{reference_hash(ref, table)}-{stmt_hash[:8]}")


_KIND = {
    ItemRef: "item",
    StringValue: "string",
    DecimalValue: "decimal",
    DateTimeValue: "datetime",
}


def _check_kind(name: str, value: Value, expected: str) -> None:
    got = _KIND[type(value)]
    if got != expected:
        raise TypeMismatchError(name, expected, got)


def _literal(value: Value, table: NamespaceTable) -> Term:
    if isinstance(value, ItemRef):
        return value.iri
    if isinstance(value, StringValue):
        return Literal(value.text, xsd(table, "string"))
    if isinstance(value, DecimalValue):
        return Literal(value.amount, xsd(table, "decimal"))
    return Literal(value.iso, xsd(table, "dateTime"))


def _emit_time_node(g: Graph, value: DateTimeValue, table: NamespaceTable) -> Iri:
    node = value_node(value, table)
    g.add(Triple(node, rdf_type(table), wikibase(table, "TimeValue")))
    g.add(Triple(node, wikibase(table, "timeValue"),
                 Literal(value.iso, xsd(table, "dateTime"))))
    g.add(Triple(node, wikibase(table, "timePrecision"),
                 Literal(str(value.precision), xsd(table, "int"))))
    g.add(Triple(node, wikibase(table, "timeTimezone"),
                 Literal(str(value.timezone), xsd(table, "int"))))
    g.add(Triple(node, wikibase(table, "timeCalendarModel"), value.calendar))
    return node


def _emit_quantity_node(g: Graph, value: DecimalValue, table: NamespaceTable) -> Iri:
    node = value_node(value, table)
    g.add(Triple(node, rdf_type(table), wikibase(table, "QuantityValue")))
    g.add(Triple(node, wikibase(table, "quantityValue"),
                 Literal(value.amount, xsd(table, "decimal"))))
    g.add(Triple(node, wikibase(table, "quantityUnit"), value.unit))
    return node


def _check_item_target(iri: Iri, instances: InstanceDoc, context: str) -> None:
    if instances.item(iri) is None:
        raise UnresolvedNameError(iri.value, f"item not declared ({context})")


def _check_qualifier_value(q: QualifierDecl, value: Value,
                           instances: InstanceDoc, context: str) -> None:
    if q.qtype.item_class is not None:
        _check_kind(context, value, "item")
        _check_item_target(value.iri, instances, context)
    else:
        _check_kind(context, value, q.qtype.datatype.value)


def export(schema: SchemaDocument, instances: InstanceDoc) -> Graph:
    """Deterministic instance graph for the declared statements.

    Raises on data that cannot be exported faithfully: values of the
    wrong kind, missing required qualifiers or references, and names or
    items that no declaration covers.
    """
    table = schema.namespaces
    g = Graph()
    wb_item = wikibase(table, "Item")
    a = rdf_type(table)
    for item in instances.items:
        if (schema.class_decl(item.type_class) is None
                and item.type_class != wb_item):
            raise UnresolvedNameError(item.type_class.value, "class not declared")
        g.add(Triple(item.iri, a, item.type_class))
        g.add(Triple(item.iri, a, wb_item))
        for stmt in item.statements:
            _export_statement(g, item.iri, stmt, schema, instances)
    return g


def _export_statement(g: Graph, subject: Iri, stmt: StatementData,
                      schema: SchemaDocument, instances: InstanceDoc) -> None:
    table = schema.namespaces
    decl = schema.statement_decl(stmt.property)
    if decl is None:
        raise UnresolvedNameError(stmt.property, "statement property not declared")
    if isinstance(decl.object_spec, DataObject):
        _check_kind(stmt.property, stmt.value, decl.object_spec.datatype.value)
    else:
        _check_kind(stmt.property, stmt.value, "item")
        _check_item_target(stmt.value.iri, instances, stmt.property)

    quals_by_name: dict[str, QualifierDecl] = {q.name: q for q in decl.qualifiers}
    for q in stmt.qualifiers:
        decl_q = quals_by_name.get(q.name)
        if decl_q is None:
            raise UnresolvedNameError(q.name, f"qualifier not declared on {stmt.property}")
        _check_qualifier_value(decl_q, q.value, instances, f"{stmt.property}/{q.name}")
    present = {q.name for q in stmt.qualifiers}
    for decl_q in decl.qualifiers:
        if decl_q.required and decl_q.name not in present:
            raise MissingRequiredError(f"{stmt.property}/{decl_q.name}")

    refs_by_name = {r.name: r for r in decl.references}
    for ref in stmt.references:
        for snak in ref.snaks:
            if snak.name not in refs_by_name:
                raise UnresolvedNameError(
                    snak.name, f"reference not declared on {stmt.property}")
            _check_item_target(snak.target, instances, f"{stmt.property}/{snak.name}")
    snak_names = {s.name for ref in stmt.references for s in ref.snaks}
    for decl_r in decl.references:
        if decl_r.required and decl_r.name not in snak_names:
            raise MissingRequiredError(f"{stmt.property}/{decl_r.name}")

    a = rdf_type(table)
    h = statement_hash(subject, stmt, table)
    node = statement_node(subject, stmt, table)
    value_term = _literal(stmt.value, table)
    g.add(Triple(subject, namespaced_property(stmt.property, "p", table), node))
    g.add(Triple(node, a, wikibase(table, "Statement")))
    g.add(Triple(node, namespaced_property(stmt.property, "ps", table), value_term))
    g.add(Triple(subject, namespaced_property(stmt.property, "wdt", table), value_term))

    obj_dt = object_datatype(decl)
    if obj_dt is Datatype.DATETIME:
        vnode = _emit_time_node(g, stmt.value, table)
        g.add(Triple(node, namespaced_property(stmt.property, "psv", table), vnode))
    elif obj_dt is Datatype.DECIMAL:
        vnode = _emit_quantity_node(g, stmt.value, table)
        g.add(Triple(node, namespaced_property(stmt.property, "psv", table), vnode))

    for q in stmt.qualifiers:
        g.add(Triple(node, namespaced_property(q.name, "pq", table),
                     _literal(q.value, table)))
        if isinstance(q.value, DateTimeValue):
            vnode = _emit_time_node(g, q.value, table)
            g.add(Triple(node, namespaced_property(q.name, "pqv", table), vnode))
        elif isinstance(q.value, DecimalValue):
            vnode = _emit_quantity_node(g, q.value, table)
            g.add(Triple(node, namespaced_property(q.name, "pqv", table), vnode))

    prov = prov_was_derived_from(table)
    for ref in stmt.references:
        rnode = reference_node(ref, h, table)
        g.add(Triple(node, prov, rnode))
        g.add(Triple(rnode, a, wikibase(table, "Reference")))
        for snak in ref.snaks:
            g.add(Triple(rnode, namespaced_property(snak.name, "pr", table),
                         snak.target))
