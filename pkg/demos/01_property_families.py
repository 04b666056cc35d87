"""One declared property name fans out into a whole Wikibase family.

Declaring `rec:hasAgeRecord` is enough to mint the direct edge (wdt:),
the reification pair (p:/ps:), qualifier edges (pq:/pqv:), reference
edges (pr:), and the fixed metadata vocabulary the value nodes need.
This script prints the full expansion for one small schema.
"""

from wbforge import expand, expansion_report, parse_schema

SCHEMA = """
prefix rec: <http://records.example/vocab/>

class rec:Agent
controlled class rec:AgeCategory
class rec:SourceDocument

statement rec:hasAgeRecord {
  subject rec:Agent
  object item rec:AgeCategory
  qualifier rec:ageValue : decimal required
  qualifier rec:atTime : datetime
  reference rec:isDirectlyBasedOn -> item rec:SourceDocument required
}
"""

doc = parse_schema(SCHEMA)
expanded = expand(doc)

print("Declared: 3 classes, 1 statement, 2 qualifiers, 1 reference.")
print("Minted property inventory:")
print()
print(expansion_report(expanded), end="")

st = expanded.statements[0]
print()
print(f"Family arithmetic for {st.source.property_name}: "
      f"{len(st.family_properties())} family properties "
      f"(3 statement roles + pq/pqv per qualifier + pr per reference).")
