"""Tabular dataset loading and per-attribute semantic type inference.

Values stay as raw text; profiling decides whether a column is quantitative,
temporal, ordinal or nominal, which drives attribute selection when a chart
template is fitted. A column counts as quantitative (or temporal) when at
least 95% of its non-empty values parse, so a handful of sentinel strings
does not flip a numeric column to nominal.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field
from datetime import datetime

from .errors import (
    AllValuesMissing,
    DatasetParseError,
    EmptyDataset,
    NoCompatibleAttribute,
)

PARSE_THRESHOLD = 0.95

# Quantitative columns with at most this many distinct values may also be
# used where a categorical attribute is expected (discrete data).
DISCRETE_MAX_DISTINCT = 12

# Ordered vocabularies recognized as ordinal scales (matched case-insensitively).
ORDINAL_VOCABULARIES: tuple[tuple[str, ...], ...] = (
    ("low", "medium", "high"),
    ("small", "medium", "large"),
    ("xs", "s", "m", "l", "xl"),
    ("poor", "fair", "good", "excellent"),
)


class AttributeType(enum.Enum):
    QUANTITATIVE = "quantitative"
    TEMPORAL = "temporal"
    NOMINAL = "nominal"
    ORDINAL = "ordinal"


@dataclass(frozen=True)
class Attribute:
    name: str
    inferred_type: AttributeType
    distinct_count: int
    null_count: int

    @property
    def usable_as_categorical(self) -> bool:
        if self.inferred_type in (AttributeType.NOMINAL, AttributeType.ORDINAL):
            return True
        return (
            self.inferred_type is AttributeType.QUANTITATIVE
            and self.distinct_count <= DISCRETE_MAX_DISTINCT
        )


@dataclass
class Dataset:
    name: str
    attributes: list[Attribute]
    rows: list[dict[str, str]]

    def attribute(self, name: str) -> Attribute | None:
        for attr in self.attributes:
            if attr.name == name:
                return attr
        return None

    @property
    def attribute_names(self) -> list[str]:
        return [a.name for a in self.attributes]

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(self.attribute_names)
        for row in self.rows:
            writer.writerow([row.get(a, "") for a in self.attribute_names])
        return out.getvalue()


def _parses_number(value: str) -> bool:
    try:
        float(value)
    except ValueError:
        return False
    return True


def _parses_date(value: str) -> bool:
    text = value.strip()
    if not text or _parses_number(text):
        return False
    candidate = text[:-1] if text.endswith("Z") else text
    try:
        datetime.fromisoformat(candidate)
        return True
    except ValueError:
        pass
    try:
        datetime.strptime(text, "%d-%b-%y")
        return True
    except ValueError:
        return False


def infer_attribute_type(
    values: list[str],
    ordinal_vocabularies: tuple[tuple[str, ...], ...] = ORDINAL_VOCABULARIES,
) -> AttributeType:
    """Classify one column of raw text values.

    Missing (empty) values are excluded. Raises AllValuesMissing when nothing
    is left to classify.
    """
    present = [v for v in values if v.strip() != ""]
    if not present:
        raise AllValuesMissing("attribute has no non-empty values")
    numeric = sum(1 for v in present if _parses_number(v))
    if numeric / len(present) >= PARSE_THRESHOLD:
        return AttributeType.QUANTITATIVE
    dates = sum(1 for v in present if _parses_date(v))
    if dates / len(present) >= PARSE_THRESHOLD:
        return AttributeType.TEMPORAL
    lowered = {v.strip().lower() for v in present}
    for vocabulary in ordinal_vocabularies:
        if len(lowered) >= 2 and lowered <= set(vocabulary):
            return AttributeType.ORDINAL
    return AttributeType.NOMINAL


def _profile(name: str, header: list[str], rows: list[dict[str, str]]) -> Dataset:
    attributes = []
    for column in header:
        values = [row[column] for row in rows]
        non_empty = [v for v in values if v.strip() != ""]
        attributes.append(
            Attribute(
                name=column,
                inferred_type=infer_attribute_type(values),
                distinct_count=len(set(non_empty)),
                null_count=len(values) - len(non_empty),
            )
        )
    return Dataset(name=name, attributes=attributes, rows=rows)


def load_dataset(payload: bytes | str, format: str, name: str = "dataset") -> Dataset:
    """Parse a CSV or JSON payload and profile every attribute.

    CSV needs a header row; JSON is an array of flat objects. Raises
    DatasetParseError (with the offending row index) or EmptyDataset.
    """
    text = payload.decode("utf-8") if isinstance(payload, bytes) else payload
    if not text.strip():
        raise EmptyDataset("empty payload")
    if format == "csv":
        reader = csv.reader(io.StringIO(text))
        try:
            table = list(reader)
        except csv.Error as exc:
            raise DatasetParseError(f"malformed csv: {exc}") from exc
        if not table:
            raise EmptyDataset("no header row")
        header = [h.strip() for h in table[0]]
        if len(set(header)) != len(header):
            raise DatasetParseError("duplicate attribute names in header")
        if any(not h for h in header):
            raise DatasetParseError("empty attribute name in header")
        rows = []
        for index, raw in enumerate(table[1:], start=1):
            if not raw or all(cell.strip() == "" for cell in raw):
                continue
            if len(raw) != len(header):
                raise DatasetParseError(
                    f"row {index} has {len(raw)} values, expected {len(header)}",
                    row=index,
                )
            rows.append(dict(zip(header, raw)))
        if not rows:
            raise EmptyDataset("csv has a header but no data rows")
        return _profile(name, header, rows)
    if format == "json":
        try:
            records = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DatasetParseError(f"malformed json: {exc}") from exc
        if not isinstance(records, list) or not records:
            raise EmptyDataset("json payload is not a non-empty array")
        header: list[str] = []
        for record in records:
            if not isinstance(record, dict):
                raise DatasetParseError("json rows must be flat objects")
            for key in record:
                if key not in header:
                    header.append(key)
        rows = []
        for index, record in enumerate(records, start=1):
            row = {}
            for key in header:
                value = record.get(key, "")
                if isinstance(value, (dict, list)):
                    raise DatasetParseError(f"nested value in row {index}", row=index)
                row[key] = "" if value is None else str(value)
            rows.append(row)
        return _profile(name, header, rows)
    raise DatasetParseError(f"unknown format: {format}")


@dataclass
class AttributeBinding:
    """Slot name to attribute name assignment plus the scale kind per slot."""

    slots: dict[str, str]
    scales: dict[str, str] = field(default_factory=dict)

    def with_slot(self, slot: str, attribute: str, scale: str) -> "AttributeBinding":
        slots = dict(self.slots)
        scales = dict(self.scales)
        slots[slot] = attribute
        scales[slot] = scale
        return AttributeBinding(slots=slots, scales=scales)


def _compatible(attr: Attribute, allowed: frozenset[AttributeType], categorical_ok: bool) -> bool:
    if attr.inferred_type in allowed:
        return True
    return categorical_ok and attr.usable_as_categorical


def select_attributes(
    dataset: Dataset, viz, already_used: set[str] | frozenset[str] = frozenset()
) -> AttributeBinding:
    """First-match attribute selection for a visualization's slot signature.

    Walks the slots left to right, assigning the first attribute (in dataset
    order) whose type satisfies the slot and that is not already used. Raises
    NoCompatibleAttribute naming the slot that cannot be filled.
    """
    from .templates import get_viz_template, scale_kind_for

    template = get_viz_template(viz)
    used = set(already_used)
    binding = AttributeBinding(slots={}, scales={})
    for slot in template.slots:
        chosen = None
        for attr in dataset.attributes:
            if attr.name in used:
                continue
            if _compatible(attr, slot.types, slot.accepts_discrete):
                chosen = attr
                break
        if chosen is None:
            required = "|".join(sorted(t.value for t in slot.types))
            if slot.accepts_discrete:
                required += "|discrete"
            raise NoCompatibleAttribute(slot=slot.name, required=required)
        used.add(chosen.name)
        binding = binding.with_slot(slot.name, chosen.name, scale_kind_for(slot, chosen))
    return binding
