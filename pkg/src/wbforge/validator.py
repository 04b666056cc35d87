"""Schema-aware checking of exported or hand-edited instance graphs.

A report is a flat list of findings, each carrying a severity, one of
thirteen stable codes, a focus node, and a one-line detail. Errors mark
graphs that contradict the generated axioms (wrong classes, broken
cardinalities, dangling reification); warnings mark suspicious but
tolerated content (bare truthy edges, stale content hashes, names no
declaration covers). Validation never mutates the graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .axioms import CATALOG
from .errors import UnknownCodeError
from .exporter import statement_hash, value_hash
from .model import (
    DataObject,
    Datatype,
    DateTimeValue,
    DecimalValue,
    InstanceDoc,
    ItemRef,
    QualifierData,
    RefData,
    SchemaDocument,
    SnakData,
    StatementData,
    StatementDecl,
    StringValue,
    Value,
    CANONICAL_DATETIME,
    CANONICAL_DECIMAL,
)
from .namespaces import (
    Iri,
    NamespaceTable,
    namespaced_property,
    prov_was_derived_from,
    rdf_type,
    wikibase,
    xsd,
)
from .rdf import Graph, Literal, Term, Triple

ERROR = "ERROR"
WARNING = "WARNING"

# every code the checker can emit, with its severity
CODES: dict[str, str] = {
    "BareTruthy": WARNING,
    "ChainGap": ERROR,
    "DomainViolation": ERROR,
    "ExistenceViolation": ERROR,
    "FunctionalityViolation": ERROR,
    "HashMismatch": WARNING,
    "OrphanStatement": ERROR,
    "QualifierTypeViolation": ERROR,
    "RangeViolation": ERROR,
    "SharedReference": ERROR,
    "SharedStatement": ERROR,
    "UnknownProperty": WARNING,
    "ValueNodeMalformed": ERROR,
}

# code -> axiom origin keys its findings trace back to
_CODE_ORIGINS: dict[str, tuple[str, ...]] = {
    "BareTruthy": ("Ax9",),
    "ChainGap": ("Ax9",),
    "DomainViolation": ("Ax1", "Ax9-c1", "Pattern:Domain"),
    "ExistenceViolation": ("Ax7", "AxReq"),
    "FunctionalityViolation": ("Ax7", "AxFunc"),
    "HashMismatch": (),
    "OrphanStatement": ("Ax3+4",),
    "QualifierTypeViolation": ("Ax10", "Ax11"),
    "RangeViolation": ("Ax6", "Ax50", "Ax53", "Pattern:Range"),
    "SharedReference": ("Ax54",),
    "SharedStatement": ("Ax3+4",),
    "UnknownProperty": (),
    "ValueNodeMalformed": ("Ax19", "Ax23", "Ax27", "AxQ-val-range", "AxQ-unit-range"),
}

_CODE_SUMMARY: dict[str, str] = {
    "BareTruthy": "a truthy direct edge has no reified statement behind it",
    "ChainGap": "a reified statement is missing its truthy direct edge",
    "DomainViolation": "a statement subject lacks the declared subject class",
    "ExistenceViolation": "a mandatory value, qualifier, or reference is absent",
    "FunctionalityViolation": "an at-most-one property carries several values",
    "HashMismatch": "a node name no longer matches its content hash",
    "OrphanStatement": "a statement node has no owning item",
    "QualifierTypeViolation": "a qualifier value does not fit its declaration",
    "RangeViolation": "a statement or reference value lacks the declared class or type",
    "SharedReference": "a reference node is derived from several statements",
    "SharedStatement": "a statement node is claimed by several item edges",
    "UnknownProperty": "a family property matches no declaration",
    "ValueNodeMalformed": "a metadata value node has missing or ill-typed fields",
}

_INT_RE = re.compile(r"-?(0|[1-9][0-9]*)$")


@dataclass(frozen=True, order=True)
class Finding:
    code: str
    focus: str                    # IRI or name the finding is about
    detail: str
    severity: str

    def render(self) -> str:
        return f"{self.severity} {self.code} <{self.focus}> : {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...]

    @property
    def errors(self) -> int:
        return sum(1 for f in self.findings if f.severity == ERROR)

    @property
    def warnings(self) -> int:
        return sum(1 for f in self.findings if f.severity == WARNING)

    @property
    def passed(self) -> bool:
        return self.errors == 0

    def by_code(self, code: str) -> tuple[Finding, ...]:
        if code not in CODES:
            raise UnknownCodeError(code)
        return tuple(f for f in self.findings if f.code == code)


def render_report(report: ValidationReport) -> str:
    lines = [f.render() for f in report.findings]
    lines.append(f"errors={report.errors} warnings={report.warnings}")
    return "".join(line + "\n" for line in lines)


def render_report_tsv(report: ValidationReport) -> str:
    lines = ["severity\tcode\tfocus\tdetail"]
    lines.extend(f"{f.severity}\t{f.code}\t{f.focus}\t{f.detail}"
                 for f in report.findings)
    return "".join(line + "\n" for line in lines)


def explain(report: ValidationReport, code: str) -> str:
    """Prose for one finding code, citing the axiom origins behind it."""
    if code not in CODES:
        raise UnknownCodeError(code)
    hits = report.by_code(code)
    lines = [f"{code} ({CODES[code]}, {len(hits)} finding(s)): {_CODE_SUMMARY[code]}."]
    for key in _CODE_ORIGINS[code]:
        gloss = CATALOG.get(key, "named axiom pattern chosen in the schema")
        lines.append(f"  {key} | {gloss}")
    if not _CODE_ORIGINS[code]:
        lines.append("  (integrity check; not tied to a generated axiom)")
    return "".join(line + "\n" for line in lines)


# ---------------------------------------------------------------------------

class _Checker:
    def __init__(self, schema: SchemaDocument, graph: Graph) -> None:
        self.schema = schema
        self.g = graph
        self.table = schema.namespaces
        self.a = rdf_type(self.table)
        self.prov = prov_was_derived_from(self.table)
        self.findings: set[Finding] = set()
        # family edges bucketed as (prefix, local) -> [(subject, object)]
        self.fam: dict[tuple[str, str], list[tuple[Iri, Term]]] = {}
        for t in graph:
            spl = self.table.split(t.p)
            if spl is not None and spl[0] in ("wdt", "p", "ps", "psv", "pq", "pqv", "pr"):
                self.fam.setdefault(spl, []).append((t.s, t.o))
        self.stmt_nodes = sorted(
            set(graph.subjects(self.a, wikibase(self.table, "Statement"))))
        self.qual_decls: dict[str, list[tuple[StatementDecl, object]]] = {}
        self.ref_decls: dict[str, list[tuple[StatementDecl, object]]] = {}
        for decl in schema.statements:
            for q in decl.qualifiers:
                self.qual_decls.setdefault(q.name, []).append((decl, q))
            for r in decl.references:
                self.ref_decls.setdefault(r.name, []).append((decl, r))

    def wb(self, local: str) -> Iri:
        return wikibase(self.table, local)

    def add(self, code: str, focus: Iri | str, detail: str) -> None:
        f = focus.value if isinstance(focus, Iri) else focus
        self.findings.add(Finding(code, f, detail, CODES[code]))

    def has_type(self, node: Term, cls: Iri) -> bool:
        return isinstance(node, Iri) and Triple(node, self.a, cls) in self.g

    # -- property name coverage -------------------------------------------

    def check_unknown_properties(self) -> None:
        stmt_names = {d.property_name for d in self.schema.statements}
        for (prefix, local) in sorted(self.fam):
            if prefix in ("wdt", "p", "ps", "psv"):
                known = local in stmt_names
            elif prefix in ("pq", "pqv"):
                known = local in self.qual_decls
            else:
                known = local in self.ref_decls
            if not known:
                self.add("UnknownProperty",
                         namespaced_property(local, prefix, self.table),
                         f"{prefix}:{local} matches no declaration")

    # -- reification shape --------------------------------------------------

    def in_edges(self, node: Iri) -> list[tuple[Iri, str]]:
        """Incoming p: edges as (subject, property local name)."""
        out = []
        for (prefix, local), pairs in self.fam.items():
            if prefix != "p":
                continue
            out.extend((s, local) for s, o in pairs if o == node)
        return sorted(set(out))

    def resolve_decl(self, node: Iri) -> tuple[StatementDecl | None, Iri | None]:
        """(declaration, owning subject) for a statement node, best effort."""
        edges = self.in_edges(node)
        subject = edges[0][0] if len(edges) == 1 else None
        names = {name for _, name in edges}
        if len(names) != 1:
            names = {local for (prefix, local), pairs in self.fam.items()
                     if prefix == "ps" and any(s == node for s, _ in pairs)}
        if len(names) == 1:
            decl = self.schema.statement_decl(next(iter(names)))
            return decl, subject
        return None, subject

    def check_statement_nodes(self) -> None:
        for node in self.stmt_nodes:
            edges = self.in_edges(node)
            if not edges:
                self.add("OrphanStatement", node,
                         "statement node has no incoming p: edge")
            elif len(edges) > 1:
                self.add("SharedStatement", node,
                         f"{len(edges)} incoming p: edges")
            decl, subject = self.resolve_decl(node)
            if decl is not None:
                self.check_against_decl(node, decl, subject)

    def check_against_decl(self, node: Iri, decl: StatementDecl,
                           subject: Iri | None) -> None:
        name = decl.property_name
        if subject is not None:
            if not self.has_type(subject, decl.subject_class):
                cls = self.table.curie(decl.subject_class) or decl.subject_class.value
                self.add("DomainViolation", subject,
                         f"subject of p:{name} lacks rdf:type {cls}")
            if not self.has_type(subject, self.wb("Item")):
                self.add("DomainViolation", subject,
                         f"subject of p:{name} lacks rdf:type wikibase:Item")

        ps_values = self.g.objects(node, namespaced_property(name, "ps", self.table))
        if not ps_values:
            self.add("ExistenceViolation", node, f"statement has no ps:{name} value")
        elif len(ps_values) > 1:
            self.add("FunctionalityViolation", node,
                     f"{len(ps_values)} ps:{name} values")
        for v in ps_values:
            self.check_object_value(node, decl, v)

        self.check_qualifiers(node, decl)
        self.check_references(node, decl)
        self.check_hash(node, decl, subject)

    def check_object_value(self, node: Iri, decl: StatementDecl, v: Term) -> None:
        name = decl.property_name
        if isinstance(decl.object_spec, DataObject):
            problem = self.literal_problem(v, decl.object_spec.datatype)
            if problem:
                self.add("RangeViolation", node, f"value of ps:{name} {problem}")
            return
        cls = decl.object_spec.iri
        if not isinstance(v, Iri):
            self.add("RangeViolation", node, f"value of ps:{name} is not an item")
            return
        if not self.has_type(v, cls):
            curie = self.table.curie(cls) or cls.value
            self.add("RangeViolation", v, f"value of ps:{name} lacks rdf:type {curie}")
        if not self.has_type(v, self.wb("Item")):
            self.add("RangeViolation", v,
                     f"value of ps:{name} lacks rdf:type wikibase:Item")

    def literal_problem(self, v: Term, dt: Datatype) -> str | None:
        if not isinstance(v, Literal):
            return f"is not an xsd:{dt.xsd_local} literal"
        if v.datatype != xsd(self.table, dt.xsd_local):
            return f"is not typed xsd:{dt.xsd_local}"
        lexical_ok = {
            Datatype.STRING: lambda s: True,
            Datatype.DECIMAL: lambda s: bool(CANONICAL_DECIMAL.match(s)) and s != "-0",
            Datatype.DATETIME: lambda s: bool(CANONICAL_DATETIME.match(s)),
            Datatype.INT: lambda s: bool(_INT_RE.match(s)),
        }[dt]
        if not lexical_ok(v.lexical):
            return f"has non-canonical xsd:{dt.xsd_local} lexical {v.lexical!r}"
        return None

    def check_qualifiers(self, node: Iri, decl: StatementDecl) -> None:
        declared = {q.name: q for q in decl.qualifiers}
        seen: dict[str, list[Term]] = {}
        for (prefix, local), pairs in sorted(self.fam.items()):
            if prefix != "pq":
                continue
            values = [o for s, o in pairs if s == node]
            if values:
                seen[local] = values
        for qname, values in seen.items():
            q = declared.get(qname)
            if q is None:
                if qname in self.qual_decls:
                    self.add("QualifierTypeViolation", node,
                             f"qualifier pq:{qname} not declared for {decl.property_name}")
                continue      # globally unknown names are covered elsewhere
            if q.functional and len(set(values)) > 1:
                self.add("FunctionalityViolation", node,
                         f"{len(set(values))} values for functional qualifier pq:{qname}")
            for v in values:
                self.check_qualifier_value(node, qname, q, v)
        for qname, q in declared.items():
            if q.required and qname not in seen:
                self.add("ExistenceViolation", node,
                         f"required qualifier pq:{qname} missing")

    def check_qualifier_value(self, node: Iri, qname: str, q, v: Term) -> None:
        if q.qtype.item_class is not None:
            if not self.has_type(v, q.qtype.item_class):
                cls = self.table.curie(q.qtype.item_class) or q.qtype.item_class.value
                self.add("QualifierTypeViolation", node,
                         f"value of pq:{qname} is not an item of {cls}")
            return
        problem = self.literal_problem(v, q.qtype.datatype)
        if problem:
            self.add("QualifierTypeViolation", node, f"value of pq:{qname} {problem}")

    def check_references(self, node: Iri, decl: StatementDecl) -> None:
        declared = {r.name: r for r in decl.references}
        snak_names: set[str] = set()
        for rnode in self.g.objects(node, self.prov):
            if not self.has_type(rnode, self.wb("Reference")):
                self.add("RangeViolation", node,
                         "prov:wasDerivedFrom value is not typed wikibase:Reference")
                continue
            for (prefix, local), pairs in sorted(self.fam.items()):
                if prefix != "pr":
                    continue
                targets = [o for s, o in pairs if s == rnode]
                if targets:
                    snak_names.add(local)
                r = declared.get(local)
                if r is None:
                    continue
                for target in targets:
                    if not self.has_type(target, r.target_class):
                        cls = self.table.curie(r.target_class) or r.target_class.value
                        self.add("RangeViolation", target,
                                 f"target of pr:{local} lacks rdf:type {cls}")
        for rname, r in declared.items():
            if r.required and rname not in snak_names:
                self.add("ExistenceViolation", node,
                         f"required reference pr:{rname} missing")

    # -- provenance sharing --------------------------------------------------

    def check_references_shared(self) -> None:
        derived: dict[Iri, set[Iri]] = {}
        for t in self.g.match(None, self.prov, None):
            if not self.has_type(t.s, self.wb("Statement")):
                continue          # non-statement provenance is out of scope
            if isinstance(t.o, Iri):
                derived.setdefault(t.o, set()).add(t.s)
        for rnode, owners in sorted(derived.items()):
            if len(owners) > 1:
                self.add("SharedReference", rnode,
                         f"reference derived by {len(owners)} statements")

    # -- truthy chain ----------------------------------------------------------

    def check_chain(self) -> None:
        for decl in self.schema.statements:
            name = decl.property_name
            p = namespaced_property(name, "p", self.table)
            ps = namespaced_property(name, "ps", self.table)
            wdt = namespaced_property(name, "wdt", self.table)
            reified: set[tuple[Iri, Term]] = set()
            for t in self.g.match(None, p, None):
                if not isinstance(t.o, Iri):
                    continue
                for y in self.g.objects(t.o, ps):
                    reified.add((t.s, y))
                    if Triple(t.s, wdt, y) not in self.g:
                        self.add("ChainGap", t.o, f"missing truthy edge wdt:{name}")
            for t in self.g.match(None, wdt, None):
                if (t.s, t.o) not in reified:
                    self.add("BareTruthy", t.s,
                             f"truthy edge wdt:{name} has no reified statement")

    # -- metadata value nodes ---------------------------------------------------

    def check_value_nodes(self) -> None:
        for node in sorted(set(self.g.subjects(self.a, self.wb("TimeValue")))):
            problems = self.time_node_problems(node)
            if problems:
                self.add("ValueNodeMalformed", node, "; ".join(problems))
            else:
                self.check_value_node_hash(node, self.reconstruct_time(node))
        for node in sorted(set(self.g.subjects(self.a, self.wb("QuantityValue")))):
            problems = self.quantity_node_problems(node)
            if problems:
                self.add("ValueNodeMalformed", node, "; ".join(problems))
            else:
                self.check_value_node_hash(node, self.reconstruct_quantity(node))

    def field_problems(self, node: Iri, field_types: dict[str, Datatype | None]) -> list[str]:
        problems = []
        for fname, dt in field_types.items():
            values = self.g.objects(node, self.wb(fname))
            if not values:
                problems.append(f"missing wikibase:{fname}")
            elif len(values) > 1:
                problems.append(f"{len(values)} wikibase:{fname} values")
            elif dt is None:
                if not isinstance(values[0], Iri):
                    problems.append(f"wikibase:{fname} is not an IRI")
            else:
                problem = self.literal_problem(values[0], dt)
                if problem:
                    problems.append(f"wikibase:{fname} {problem}")
        return problems

    def time_node_problems(self, node: Iri) -> list[str]:
        return self.field_problems(node, {
            "timeValue": Datatype.DATETIME,
            "timePrecision": Datatype.INT,
            "timeTimezone": Datatype.INT,
            "timeCalendarModel": None,
        })

    def quantity_node_problems(self, node: Iri) -> list[str]:
        return self.field_problems(node, {
            "quantityValue": Datatype.DECIMAL,
            "quantityUnit": None,
        })

    def reconstruct_time(self, node: Iri) -> DateTimeValue:
        iso = self.g.objects(node, self.wb("timeValue"))[0].lexical
        prec = int(self.g.objects(node, self.wb("timePrecision"))[0].lexical)
        tz = int(self.g.objects(node, self.wb("timeTimezone"))[0].lexical)
        cal = self.g.objects(node, self.wb("timeCalendarModel"))[0]
        return DateTimeValue(iso, prec, tz, cal)

    def reconstruct_quantity(self, node: Iri) -> DecimalValue:
        amount = self.g.objects(node, self.wb("quantityValue"))[0].lexical
        unit = self.g.objects(node, self.wb("quantityUnit"))[0]
        return DecimalValue(amount, unit)

    def check_value_node_hash(self, node: Iri, value: DateTimeValue | DecimalValue) -> None:
        base = self.table.base("v")
        if not node.value.startswith(base):
            return
        want = value_hash(value)
        got = node.value[len(base):]
        if got != want:
            self.add("HashMismatch", node,
                     f"node hash {got} does not match content hash {want}")

    # -- content-hash recomputation ---------------------------------------------

    def check_hash(self, node: Iri, decl: StatementDecl, subject: Iri | None) -> None:
        base = self.table.base("s")
        if subject is None or not node.value.startswith(base):
            return
        tail = node.value.rsplit("-", 1)
        if len(tail) != 2 or len(tail[1]) != 40:
            return
        stmt = self.reconstruct_statement(node, decl)
        if stmt is None:
            return
        want = statement_hash(subject, stmt, self.table)
        if tail[1] != want:
            self.add("HashMismatch", node,
                     f"node hash {tail[1]} does not match content hash {want}")

    def reconstruct_statement(self, node: Iri,
                              decl: StatementDecl) -> StatementData | None:
        """Best-effort content readback; None when too broken to hash."""
        name = decl.property_name
        ps_values = self.g.objects(node, namespaced_property(name, "ps", self.table))
        if len(ps_values) != 1:
            return None
        value = self.reconstruct_value(node, "psv", name, ps_values[0])
        if value is None:
            return None
        quals: list[QualifierData] = []
        for q in decl.qualifiers:
            pq = namespaced_property(q.name, "pq", self.table)
            for v in self.g.objects(node, pq):
                qv = self.reconstruct_value(node, "pqv", q.name, v)
                if qv is None:
                    return None
                quals.append(QualifierData(q.name, qv))
        refs: list[RefData] = []
        declared_refs = {r.name for r in decl.references}
        for rnode in self.g.objects(node, self.prov):
            if not self.has_type(rnode, self.wb("Reference")):
                return None
            snaks: list[SnakData] = []
            for rname in sorted(declared_refs):
                pr = namespaced_property(rname, "pr", self.table)
                for target in self.g.objects(rnode, pr):
                    if not isinstance(target, Iri):
                        return None
                    snaks.append(SnakData(rname, target))
            refs.append(RefData(tuple(snaks)))
        return StatementData(name, value, tuple(quals), tuple(refs))

    def reconstruct_value(self, node: Iri, value_ns: str, name: str,
                          v: Term) -> Value | None:
        """Interpret one edge value, pulling unit/calendar from its value node."""
        if isinstance(v, Iri):
            return ItemRef(v)
        if v.datatype == xsd(self.table, "string"):
            return StringValue(v.lexical)
        vp = namespaced_property(name, value_ns, self.table)
        if v.datatype == xsd(self.table, "dateTime"):
            for vnode in self.g.objects(node, vp):
                if (isinstance(vnode, Iri) and not self.time_node_problems(vnode)):
                    full = self.reconstruct_time(vnode)
                    if full.iso == v.lexical:
                        return full
            return None
        if v.datatype == xsd(self.table, "decimal"):
            for vnode in self.g.objects(node, vp):
                if (isinstance(vnode, Iri) and not self.quantity_node_problems(vnode)):
                    full = self.reconstruct_quantity(vnode)
                    if full.amount == v.lexical:
                        return full
            return None
        return None

    def run(self) -> ValidationReport:
        self.check_unknown_properties()
        self.check_statement_nodes()
        self.check_references_shared()
        self.check_chain()
        self.check_value_nodes()
        ordered = sorted(self.findings, key=lambda f: (f.code, f.focus, f.detail))
        return ValidationReport(tuple(ordered))


def validate(schema: SchemaDocument, graph: Graph) -> ValidationReport:
    return _Checker(schema, graph).run()


def infer_truthy(schema: SchemaDocument, graph: Graph) -> Graph:
    """A new graph with the missing truthy edges added.

    For every reified statement of a declared property the direct edge
    implied by the p:/ps: chain is inserted; repeated application is a
    fixed point and never removes triples.
    """
    table = schema.namespaces
    out = graph.copy()
    for decl in schema.statements:
        name = decl.property_name
        p = namespaced_property(name, "p", table)
        ps = namespaced_property(name, "ps", table)
        wdt = namespaced_property(name, "wdt", table)
        for t in graph.match(None, p, None):
            if not isinstance(t.o, Iri):
                continue
            for y in graph.objects(t.o, ps):
                out.add(Triple(t.s, wdt, y))
    return out
