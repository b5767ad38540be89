"""Binding chart templates to concrete datasets.

Fitting replaces every placeholder in a chart template with attribute
accessors, picks scale constructors from the bound attribute types
(quantitative -> linear, temporal -> time, categories -> band or point),
points the data-load call at the session's data URL, and emits rows-dropped
bookkeeping for missing values. Fitting is deterministic: the same template,
dataset and binding always produce byte-identical source.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .datasets import AttributeBinding, Dataset
from .errors import SlotTypeMismatch, UnknownAttribute
from .jsast import Ast, Node, NodeKind, SLOT_PATTERN_RE, print_source
from .jsast import nodes as b
from .templates import Slot, Template, VizType, scale_kind_for

_SCALE_CTORS = {
    "linear": "scaleLinear",
    "time": "scaleTime",
    "band": "scaleBand",
    "point": "scalePoint",
    "ordinal": "scaleOrdinal",
}


@dataclass
class FittedProgram:
    source: str
    binding: AttributeBinding
    viz: VizType
    template_id: str
    data_url: str
    dropped_rows: int
    dataset: Dataset


def _validate_binding(
    template: Template, dataset: Dataset, binding: AttributeBinding
) -> AttributeBinding:
    scales: dict[str, str] = {}
    for slot in template.slots:
        if slot.name not in binding.slots:
            raise SlotTypeMismatch(slot.name, f"binding is missing slot {slot.name!r}")
        attr_name = binding.slots[slot.name]
        attr = dataset.attribute(attr_name)
        if attr is None:
            raise UnknownAttribute(f"dataset has no attribute {attr_name!r}")
        compatible = attr.inferred_type in slot.types or (
            slot.accepts_discrete and attr.usable_as_categorical
        )
        if not compatible:
            allowed = "|".join(sorted(t.value for t in slot.types))
            raise SlotTypeMismatch(
                slot.name,
                f"attribute {attr_name!r} is {attr.inferred_type.value}, "
                f"slot {slot.name!r} requires {allowed}",
            )
        expected = scale_kind_for(slot, attr)
        provided = binding.scales.get(slot.name)
        if provided is not None and provided != expected:
            raise SlotTypeMismatch(
                slot.name,
                f"scale {provided!r} is incompatible with "
                f"{attr.inferred_type.value} attribute {attr_name!r}",
            )
        scales[slot.name] = expected
    return AttributeBinding(slots=dict(binding.slots), scales=scales)


def _count_dropped(dataset: Dataset, bound: list[str]) -> int:
    return sum(
        1
        for row in dataset.rows
        if any(row.get(attr, "").strip() == "" for attr in bound)
    )


def _slot_by_name(template: Template, name: str) -> Slot:
    for slot in template.slots:
        if slot.name == name:
            return slot
    raise SlotTypeMismatch(name, f"template has no slot {name!r}")


def _value_expr(attr_name: str, scale_kind: str) -> Node:
    accessor = b.member(b.ident("d"), attr_name)
    if scale_kind == "time":
        return b.call(b.member(b.ident("d3"), "isoParse"), accessor)
    return b.unary("+", accessor)


def _substitute(text: str, replacements: dict[str, str]) -> str:
    def repl(match):
        name = match.group(1)
        return replacements.get(name, match.group(0))

    return SLOT_PATTERN_RE.sub(repl, text)


def _transform(node: Node, binding: AttributeBinding, text_subs: dict[str, str]) -> Node:
    if node.kind is NodeKind.PLACEHOLDER:
        name = node.token
        if name in binding.slots:
            return b.ident(binding.slots[name])
        if name.endswith("_SCALE_CTOR"):
            slot = name.removesuffix("_SCALE_CTOR") + "_ATTR"
            kind = binding.scales[slot]
            return b.member(b.ident("d3"), _SCALE_CTORS[kind])
        if name.endswith("_VALUE_EXPR"):
            slot = name.removesuffix("_VALUE_EXPR") + "_ATTR"
            return _value_expr(binding.slots[slot], binding.scales[slot])
        return node  # unresolved; caught by print_source
    if node.kind in (NodeKind.STRING_LITERAL, NodeKind.COMMENT) and node.token:
        new_token = _substitute(node.token, text_subs)
        if new_token != node.token:
            return Node(node.kind, new_token, node.children, None)
        return node
    if not node.children:
        return node
    new_children = tuple(_transform(c, binding, text_subs) for c in node.children)
    if all(nc is oc for nc, oc in zip(new_children, node.children)):
        return node
    return node.with_children(new_children)


def fit_template(
    template: Template,
    dataset: Dataset,
    binding: AttributeBinding,
    data_url: str | None = None,
) -> FittedProgram:
    """Produce runnable source for a chart template over a dataset."""
    validated = _validate_binding(template, dataset, binding)
    url = data_url if data_url is not None else f"{dataset.name}.csv"
    bound_attrs = [validated.slots[s.name] for s in template.slots]
    dropped = _count_dropped(dataset, bound_attrs)
    text_subs = {name: attr for name, attr in validated.slots.items()}
    text_subs["DATA_URL"] = url
    text_subs["DROPPED"] = str(dropped)
    root = _transform(template.body.root, validated, text_subs)
    source = print_source(Ast(root=root))
    if SLOT_PATTERN_RE.search(source):
        leftover = SLOT_PATTERN_RE.search(source).group(1)
        raise SlotTypeMismatch(leftover, f"slot {leftover!r} was never filled")
    return FittedProgram(
        source=source,
        binding=validated,
        viz=template.viz,
        template_id=template.id,
        data_url=url,
        dropped_rows=dropped,
        dataset=dataset,
    )


def refit_encoding(
    program: FittedProgram, slot: str, new_attribute: str
) -> FittedProgram:
    """Rebind one slot to a different attribute.

    Only the accessors, scale constructor and domain tied to that slot can
    change in the emitted source; rebinding a slot to its current attribute
    reproduces the program byte for byte.
    """
    from .templates import get_viz_template

    template = get_viz_template(program.viz)
    target = _slot_by_name(template, slot)
    attr = program.dataset.attribute(new_attribute)
    if attr is None:
        raise UnknownAttribute(f"dataset has no attribute {new_attribute!r}")
    compatible = attr.inferred_type in target.types or (
        target.accepts_discrete and attr.usable_as_categorical
    )
    if not compatible:
        allowed = "|".join(sorted(t.value for t in target.types))
        raise SlotTypeMismatch(
            slot,
            f"attribute {new_attribute!r} is {attr.inferred_type.value}, "
            f"slot {slot!r} requires {allowed}",
        )
    new_binding = replace(
        program.binding,
        slots={**program.binding.slots, slot: new_attribute},
        scales={**program.binding.scales, slot: scale_kind_for(target, attr)},
    )
    return fit_template(template, program.dataset, new_binding, data_url=program.data_url)
