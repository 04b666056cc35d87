"""Schema and instance document model.

Schema documents declare classes and statement blocks; statement blocks
declare a subject class, an object spec (item class or literal
datatype), qualifiers, references, and optional axiom patterns.
Instance documents hold items and the statement data to be exported.
All types are immutable value objects so documents hash and compare
structurally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .errors import MalformedValueError
from .namespaces import DEFAULT_ROOT, Iri, NamespaceTable


class Datatype(Enum):
    STRING = "string"
    DECIMAL = "decimal"
    DATETIME = "datetime"
    INT = "int"                   # metadata fields only, not a declarable type

    @property
    def xsd_local(self) -> str:
        return {"string": "string", "decimal": "decimal",
                "datetime": "dateTime", "int": "int"}[self.value]


class AxiomPattern(Enum):
    DOMAIN = "Domain"
    RANGE = "Range"
    SCOPED_DOMAIN = "ScopedDomain"
    SCOPED_RANGE = "ScopedRange"
    FUNCTIONALITY = "Functionality"
    INVERSE_FUNCTIONALITY = "InverseFunctionality"
    SCOPED_FUNCTIONALITY = "ScopedFunctionality"
    QUALIFIED_FUNCTIONALITY = "QualifiedFunctionality"
    QUALIFIED_SCOPED_FUNCTIONALITY = "QualifiedScopedFunctionality"
    INVERSE_QUALIFIED_SCOPED_FUNCTIONALITY = "InverseQualifiedScopedFunctionality"
    EXISTENTIAL = "Existential"
    INVERSE_EXISTENTIAL = "InverseExistential"


PATTERN_BY_NAME = {p.value: p for p in AxiomPattern}


# object specs -----------------------------------------------------------

@dataclass(frozen=True)
class ItemClass:
    iri: Iri


@dataclass(frozen=True)
class DataObject:
    datatype: Datatype


ObjectSpec = ItemClass | DataObject


@dataclass(frozen=True)
class QualifierType:
    """Qualifier value type: a literal datatype or (flag-gated) an item class."""

    datatype: Datatype | None = None
    item_class: Iri | None = None

    def __post_init__(self) -> None:
        if (self.datatype is None) == (self.item_class is None):
            raise ValueError("exactly one of datatype/item_class must be set")


@dataclass(frozen=True)
class QualifierDecl:
    name: str                     # local name, minted under pq:/pqv:
    qtype: QualifierType
    scoped: bool = False          # scoped range vs global range axioms
    functional: bool = True
    required: bool = False


@dataclass(frozen=True)
class ReferenceDecl:
    name: str                     # local name, minted under pr:
    target_class: Iri
    required: bool = False


@dataclass(frozen=True)
class ClassDecl:
    iri: Iri
    controlled: bool = False      # closed value vocabulary


@dataclass(frozen=True)
class StatementDecl:
    property_iri: Iri             # declared name; the local part mints the family
    subject_class: Iri
    object_spec: ObjectSpec
    qualifiers: tuple[QualifierDecl, ...] = ()
    references: tuple[ReferenceDecl, ...] = ()
    patterns: tuple[AxiomPattern, ...] = ()

    @property
    def property_name(self) -> str:
        return self.property_iri.local_name


@dataclass(frozen=True)
class SchemaDocument:
    namespaces: NamespaceTable = field(default_factory=NamespaceTable)
    flags: tuple[str, ...] = ()
    classes: tuple[ClassDecl, ...] = ()
    statements: tuple[StatementDecl, ...] = ()

    def class_decl(self, iri: Iri) -> ClassDecl | None:
        for c in self.classes:
            if c.iri == iri:
                return c
        return None

    def statement_decl(self, property_name: str) -> StatementDecl | None:
        for s in self.statements:
            if s.property_name == property_name:
                return s
        return None


# instance values --------------------------------------------------------

CANONICAL_DECIMAL = re.compile(r"-?(0|[1-9][0-9]*)(\.[0-9]*[1-9])?$")
CANONICAL_DATETIME = re.compile(
    r"[0-9]{4}-[0-9]{2}-[0-9]{2}T[0-9]{2}:[0-9]{2}:[0-9]{2}Z$")

DEFAULT_PRECISION = 11            # day precision
DEFAULT_TIMEZONE = 0
DEFAULT_CALENDAR = Iri(DEFAULT_ROOT + "entity/ProlepticGregorian")
DEFAULT_UNIT = Iri(DEFAULT_ROOT + "entity/One")


@dataclass(frozen=True)
class ItemRef:
    iri: Iri


@dataclass(frozen=True)
class StringValue:
    text: str


@dataclass(frozen=True)
class DecimalValue:
    amount: str                   # canonical lexical form, kept textual
    unit: Iri = DEFAULT_UNIT

    def __post_init__(self) -> None:
        if not CANONICAL_DECIMAL.match(self.amount) or self.amount == "-0":
            raise MalformedValueError("decimal", self.amount)


@dataclass(frozen=True)
class DateTimeValue:
    iso: str                      # UTC, second resolution, Z suffix
    precision: int = DEFAULT_PRECISION
    timezone: int = DEFAULT_TIMEZONE
    calendar: Iri = DEFAULT_CALENDAR

    def __post_init__(self) -> None:
        if not CANONICAL_DATETIME.match(self.iso):
            raise MalformedValueError("datetime", self.iso)


Value = ItemRef | StringValue | DecimalValue | DateTimeValue


@dataclass(frozen=True)
class QualifierData:
    name: str
    value: Value


@dataclass(frozen=True)
class SnakData:
    name: str                     # reference property local name
    target: Iri


@dataclass(frozen=True)
class RefData:
    snaks: tuple[SnakData, ...]


@dataclass(frozen=True)
class StatementData:
    property: str                 # statement property local name
    value: Value
    qualifiers: tuple[QualifierData, ...] = ()
    references: tuple[RefData, ...] = ()


@dataclass(frozen=True)
class ItemData:
    iri: Iri
    type_class: Iri
    statements: tuple[StatementData, ...] = ()


@dataclass(frozen=True)
class InstanceDoc:
    namespaces: NamespaceTable = field(default_factory=NamespaceTable)
    items: tuple[ItemData, ...] = ()

    def item(self, iri: Iri) -> ItemData | None:
        for it in self.items:
            if it.iri == iri:
                return it
        return None
