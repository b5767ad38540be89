"""Splicing interaction code into user programs.

The pipeline: (1) resolve the template's inputs by searching the user's
declarations and mark chain, falling back to documented defaults, (2) fill
the interaction template with those inputs, (3) locate the unique anchor
node for the (interaction, visualization) pair, (4) insert the filled
template at the anchor, either wrapping the anchor chain (replace) or adding
statements around the anchor's statement (prepend/append).

Insertion works on the original text through the anchor's source span, so
every byte outside the inserted ranges is identical to the input program,
whatever its formatting. The result is reparsed to guarantee validity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    AlreadyImplemented,
    AnchorAmbiguous,
    AnchorNotFound,
    NoMarkFound,
    NothingToUndo,
    PlaceholderRemaining,
)
from .jsast import Ast, Node, NodeKind, SLOT_PATTERN_RE, find, parse
from .jsast import nodes as b
from .jsast.printer import _Printer, decompose_chain
from .templates import (
    AnchorSpec,
    InteractionType,
    Template,
    VizType,
    default_library,
)

# Documented fallback values used when a template input cannot be found in
# the user's code.
DEFAULT_MARK_COLOR = "#69b3a2"
DEFAULT_HIGHLIGHT_COLOR = "#e4572e"
DEFAULT_SELECT_COLOR = "#ff7f0e"
DEFAULT_TRANSITION_MS = 200
DEFAULT_ZOOM_EXTENT = (1, 8)
DEFAULT_WIDTH = 640
DEFAULT_HEIGHT = 400

# Property names that never denote dataset attributes when scanning accessors.
_NON_ATTRIBUTE_PROPS = frozenset(
    {
        "x", "y", "source", "target", "row", "data", "length", "index", "id",
        "transform", "selection",
    }
)

FOUND = "found-in-code"
DEFAULT = "default"


@dataclass(frozen=True)
class BoundValue:
    value: Node | str | int | float
    provenance: str  # found-in-code | default

    @property
    def display(self) -> str:
        if isinstance(self.value, Node):
            if self.value.kind in (
                NodeKind.STRING_LITERAL,
                NodeKind.NUMBER_LITERAL,
                NodeKind.IDENTIFIER,
            ):
                return self.value.token
            return self.value.kind.value
        return str(self.value)


@dataclass
class VariableBindings:
    values: dict[str, BoundValue] = field(default_factory=dict)

    def get(self, name: str) -> BoundValue | None:
        return self.values.get(name)

    def __contains__(self, name: str) -> bool:
        return name in self.values


@dataclass
class AugmentResult:
    source: str
    inserted_ranges: list[tuple[int, int]]
    summary: str
    new_state: frozenset[InteractionType]


# --- variable identification -----------------------------------------------------


def _chain_links(expr: Node) -> list[tuple[str, tuple[Node, ...]]]:
    _, links = decompose_chain(expr)
    return [(name, args) for name, args, _ in links]


def _declarations(ast: Ast) -> list[tuple[str, Node]]:
    decls = []
    for node in ast.root.walk():
        if node.kind is NodeKind.VARIABLE_DECLARATION:
            name_node, init = node.children
            if name_node.kind is NodeKind.IDENTIFIER:
                decls.append((name_node.token, init))
    return decls


def _find_svg_root(ast: Ast) -> BoundValue:
    for name, init in _declarations(ast):
        for link_name, args in _chain_links(init):
            if (
                link_name == "append"
                and args
                and args[0].kind is NodeKind.STRING_LITERAL
                and args[0].token == "svg"
            ):
                return BoundValue(b.ident(name), FOUND)
    return BoundValue(b.ident("svg"), DEFAULT)


def _find_mark_chain(ast: Ast, viz: VizType) -> Node | None:
    pattern = default_library().get_viz_template(viz).anchors["mark_chain"].pattern
    matches = find(ast, pattern)
    return matches[0] if matches else None


def _find_mark_color(ast: Ast, viz: VizType) -> BoundValue:
    channel = default_library().get_viz_template(viz).mark.channel
    chain = _find_mark_chain(ast, viz)
    if chain is not None:
        for link_name, args in _chain_links(chain):
            if (
                link_name == "attr"
                and len(args) >= 2
                and args[0].kind is NodeKind.STRING_LITERAL
                and args[0].token == channel
            ):
                return BoundValue(args[1], FOUND)
    return BoundValue(b.string(DEFAULT_MARK_COLOR), DEFAULT)


def _find_mark_selector(ast: Ast, viz: VizType) -> BoundValue:
    mark = default_library().get_viz_template(viz).mark
    chain = _find_mark_chain(ast, viz)
    if chain is not None:
        for link_name, args in _chain_links(chain):
            if (
                link_name == "attr"
                and len(args) >= 2
                and args[0].kind is NodeKind.STRING_LITERAL
                and args[0].token == "class"
                and args[1].kind is NodeKind.STRING_LITERAL
            ):
                cls = args[1].token.split()[0]
                return BoundValue(f"{mark.kind}.{cls}", FOUND)
    return BoundValue(mark.kind, DEFAULT)


def _find_scale_declarations(ast: Ast) -> list[str]:
    names = []
    for name, init in _declarations(ast):
        links = _chain_links(init)
        base, _ = decompose_chain(init)
        if (
            links
            and links[0][0].startswith("scale")
            and base.kind is NodeKind.IDENTIFIER
            and base.token == "d3"
        ):
            names.append(name)
    return names


def _find_dimension(ast: Ast, name: str, fallback: int) -> BoundValue:
    for decl_name, _ in _declarations(ast):
        if decl_name == name:
            return BoundValue(b.ident(name), FOUND)
    return BoundValue(b.number(fallback), DEFAULT)


def _find_encodable_attrs(ast: Ast) -> BoundValue:
    # Method accesses (the member is a call's callee) are not data accessors.
    callee_ids = {
        id(node.children[0])
        for node in ast.root.walk()
        if node.kind is NodeKind.CALL_EXPRESSION
        and node.children[0].kind is NodeKind.MEMBER_EXPRESSION
    }
    names: list[str] = []
    for node in ast.root.walk():
        if node.kind not in (NodeKind.ARROW_FUNCTION, NodeKind.FUNCTION_EXPRESSION):
            continue
        *params, body = node.children
        param_names = {p.token for p in params if p.kind is NodeKind.IDENTIFIER}
        if not param_names:
            continue
        for inner in body.walk():
            if (
                inner.kind is NodeKind.MEMBER_EXPRESSION
                and inner.token is None
                and id(inner) not in callee_ids
                and inner.children[0].kind is NodeKind.IDENTIFIER
                and inner.children[0].token in param_names
                and inner.children[1].kind is NodeKind.IDENTIFIER
            ):
                prop = inner.children[1].token
                if prop not in _NON_ATTRIBUTE_PROPS and prop not in names:
                    names.append(prop)
    if names:
        return BoundValue(b.array(*(b.string(n) for n in names)), FOUND)
    return BoundValue(b.array(), DEFAULT)


def _find_rollup_parts(ast: Ast) -> tuple[BoundValue, BoundValue]:
    """(data variable, category key) taken from the first rollup call."""
    for node in ast.root.walk():
        if node.kind is not NodeKind.CALL_EXPRESSION:
            continue
        callee = node.children[0]
        if (
            callee.kind is NodeKind.MEMBER_EXPRESSION
            and callee.token is None
            and callee.children[0].kind is NodeKind.IDENTIFIER
            and callee.children[0].token == "d3"
            and callee.children[1].kind is NodeKind.IDENTIFIER
            and callee.children[1].token == "rollups"
            and len(node.children) >= 4
        ):
            args = node.children[1:]
            data_var = (
                BoundValue(args[0], FOUND)
                if args[0].kind is NodeKind.IDENTIFIER
                else BoundValue(b.ident("data"), DEFAULT)
            )
            key_arg = args[2]
            if key_arg.kind is NodeKind.ARROW_FUNCTION:
                body = key_arg.children[-1]
                if (
                    body.kind is NodeKind.MEMBER_EXPRESSION
                    and body.token is None
                    and body.children[1].kind is NodeKind.IDENTIFIER
                ):
                    return data_var, BoundValue(body.children[1], FOUND)
            return data_var, BoundValue(b.ident("category"), DEFAULT)
    return BoundValue(b.ident("data"), DEFAULT), BoundValue(b.ident("category"), DEFAULT)


def _find_generator(ast: Ast, ctor: str, fallback: str) -> BoundValue:
    for name, init in _declarations(ast):
        links = _chain_links(init)
        base, _ = decompose_chain(init)
        if (
            links
            and links[0][0] == ctor
            and base.kind is NodeKind.IDENTIFIER
            and base.token == "d3"
        ):
            return BoundValue(b.ident(name), FOUND)
    return BoundValue(b.ident(fallback), DEFAULT)


def _find_x_value_fn(ast: Ast) -> BoundValue:
    for name, init in _declarations(ast):
        if name == "xValue" and init.kind is NodeKind.ARROW_FUNCTION:
            return BoundValue(b.ident(name), FOUND)
    return BoundValue(b.arrow(["d"], b.unary("+", b.member(b.ident("d"), "value"))), DEFAULT)


def identify_variables(
    ast: Ast, interaction: InteractionType, viz: VizType
) -> VariableBindings:
    """Resolve every input the (interaction, viz) template needs.

    Inputs are searched in declarations and mark-chain attributes; anything
    not found takes its documented default. Raises NoMarkFound when the
    program has no mark-creation chain for the visualization's mark kind.
    """
    library = default_library()
    template = library.get_interaction_template(interaction, viz)
    mark = library.get_viz_template(viz).mark
    if _find_mark_chain(ast, viz) is None:
        raise NoMarkFound(
            f"no {mark.kind} mark chain found; cannot augment a {viz.value} program"
        )

    scale_names = _find_scale_declarations(ast)
    resolved: dict[str, BoundValue] = {}
    for name in template.slot_names:
        if name == "ANCHOR":
            continue
        if name == "SVG_ROOT":
            resolved[name] = _find_svg_root(ast)
        elif name == "MARK_COLOR":
            resolved[name] = _find_mark_color(ast, viz)
        elif name == "HIGHLIGHT_COLOR":
            resolved[name] = BoundValue(DEFAULT_HIGHLIGHT_COLOR, DEFAULT)
        elif name == "SELECT_COLOR":
            resolved[name] = BoundValue(DEFAULT_SELECT_COLOR, DEFAULT)
        elif name == "MARK_SELECTOR":
            resolved[name] = _find_mark_selector(ast, viz)
        elif name == "POS_X":
            resolved[name] = BoundValue(mark.pos_x, DEFAULT)
        elif name == "POS_Y":
            resolved[name] = BoundValue(mark.pos_y, DEFAULT)
        elif name == "ZOOM_MIN":
            resolved[name] = BoundValue(DEFAULT_ZOOM_EXTENT[0], DEFAULT)
        elif name == "ZOOM_MAX":
            resolved[name] = BoundValue(DEFAULT_ZOOM_EXTENT[1], DEFAULT)
        elif name == "TRANSITION_MS":
            resolved[name] = BoundValue(DEFAULT_TRANSITION_MS, DEFAULT)
        elif name == "WIDTH_EXPR":
            resolved[name] = _find_dimension(ast, "width", DEFAULT_WIDTH)
        elif name == "HEIGHT_EXPR":
            resolved[name] = _find_dimension(ast, "height", DEFAULT_HEIGHT)
        elif name == "X_SCALE":
            resolved[name] = (
                BoundValue(b.ident(scale_names[0]), FOUND)
                if scale_names
                else BoundValue(b.ident("x"), DEFAULT)
            )
        elif name == "Y_SCALE":
            resolved[name] = (
                BoundValue(b.ident(scale_names[1]), FOUND)
                if len(scale_names) > 1
                else BoundValue(b.ident("y"), DEFAULT)
            )
        elif name == "ENCODABLE_ATTRS":
            resolved[name] = _find_encodable_attrs(ast)
        elif name == "DATA_VAR":
            resolved[name] = _find_rollup_parts(ast)[0]
        elif name == "CAT_KEY":
            resolved[name] = _find_rollup_parts(ast)[1]
        elif name == "PIE_LAYOUT":
            resolved[name] = _find_generator(ast, "pie", "pie")
        elif name == "ARC_GEN":
            resolved[name] = _find_generator(ast, "arc", "arc")
        elif name == "X_VALUE_FN":
            resolved[name] = _find_x_value_fn(ast)
    return VariableBindings(values=resolved)


# --- template population -----------------------------------------------------------


def _to_node(value: Node | str | int | float) -> Node:
    if isinstance(value, Node):
        return value
    if isinstance(value, str):
        return b.string(value)
    return b.number(value)


def _populate_node(node: Node, bindings: VariableBindings, anchor: Node | None) -> Node:
    if node.kind is NodeKind.PLACEHOLDER:
        if node.token == "ANCHOR":
            if anchor is None:
                raise PlaceholderRemaining("ANCHOR")
            return anchor
        bound = bindings.get(node.token)
        if bound is None:
            raise PlaceholderRemaining(node.token)
        return _to_node(bound.value)
    if node.kind in (NodeKind.STRING_LITERAL, NodeKind.COMMENT) and node.token:
        def repl(match):
            bound = bindings.get(match.group(1))
            if bound is None or isinstance(bound.value, Node):
                return match.group(0)
            return str(bound.value)

        new_token = SLOT_PATTERN_RE.sub(repl, node.token)
        if new_token != node.token:
            return Node(node.kind, new_token, node.children, None)
        return node
    if not node.children:
        return node
    children = tuple(_populate_node(c, bindings, anchor) for c in node.children)
    if all(nc is oc for nc, oc in zip(children, node.children)):
        return node
    return node.with_children(children)


def populate_interaction_template(
    template: Template, bindings: VariableBindings, anchor: Node | None = None
) -> Node:
    """Fill a template body; the result carries no placeholder.

    ``anchor`` supplies the subtree wrap-style templates build on; raises
    PlaceholderRemaining naming any slot the bindings do not cover.
    """
    root = _populate_node(template.body.root, bindings, anchor)
    for node in root.walk():
        if node.kind is NodeKind.PLACEHOLDER and (anchor is None or node is not anchor):
            raise PlaceholderRemaining(node.token)
        if node.kind is NodeKind.STRING_LITERAL and node.token:
            leftover = SLOT_PATTERN_RE.search(node.token)
            if leftover:
                raise PlaceholderRemaining(leftover.group(1))
    return root


# --- anchor location ------------------------------------------------------------------


def locate_anchor(ast: Ast, spec: AnchorSpec) -> Node:
    """The unique node matching the anchor pattern.

    Raises AnchorNotFound, or AnchorAmbiguous with every match location so a
    caller can ask the user instead of silently picking one.
    """
    matches = find(ast, spec.pattern)
    if not matches:
        raise AnchorNotFound(f"no node matches the anchor for {spec.description}")
    if len(matches) > 1:
        locations = [m.span if m.span else (-1, -1) for m in matches]
        raise AnchorAmbiguous(count=len(matches), locations=locations)
    return matches[0]


# --- insertion --------------------------------------------------------------------


def _line_indent(source: str, offset: int) -> str:
    line_start = source.rfind("\n", 0, offset) + 1
    indent = []
    for ch in source[line_start:offset]:
        if ch in " \t":
            indent.append(ch)
        else:
            break
    return "".join(indent)


def _wrap_snippet(populated_root: Node, anchor: Node, indent: str) -> str:
    statements = [
        s for s in populated_root.children if s.kind is NodeKind.EXPRESSION_STATEMENT
    ]
    expr = statements[0].children[0]
    _, all_links = decompose_chain(expr)
    _, anchor_links = decompose_chain(anchor)
    new_links = all_links[len(anchor_links) :]
    level = len(indent) // 2 + 1
    printer = _Printer(allow_placeholders=False)
    parts = []
    for name, args, _ in new_links:
        parts.append("\n" + indent + "  " + "." + printer.link((name, args, None), level))
    return "".join(parts)


def _statement_snippet(populated_root: Node, indent: str, before: bool) -> str:
    level = len(indent) // 2
    printer = _Printer(allow_placeholders=False)
    lines = [printer.statement(s, level) for s in populated_root.children]
    block = "\n".join(lines)
    if before:
        # Inserted at the statement's first character, which already sits
        # after the line's indentation.
        return block.lstrip() + "\n" + indent if block else ""
    return "\n" + block


def augment(
    source: str,
    interaction: InteractionType,
    viz: VizType,
    state: frozenset[InteractionType] = frozenset(),
) -> AugmentResult:
    """Add one interaction to a program, leaving all other bytes untouched."""
    if interaction in state:
        raise AlreadyImplemented(f"{interaction.value} is already implemented")
    library = default_library()
    template = library.get_interaction_template(interaction, viz)
    ast = parse(source)
    bindings = identify_variables(ast, interaction, viz)
    anchor = locate_anchor(ast, template.anchor)
    populated = populate_interaction_template(template, bindings, anchor=anchor)

    stmt = ast.statement_of(anchor)
    if template.anchor.mode == "replace":
        position = anchor.span[1]
        snippet = _wrap_snippet(populated, anchor, _line_indent(source, stmt.span[0]))
    elif template.anchor.mode == "append":
        position = stmt.span[1]
        snippet = _statement_snippet(populated, _line_indent(source, stmt.span[0]), False)
    elif template.anchor.mode == "prepend":
        position = stmt.span[0]
        snippet = _statement_snippet(populated, _line_indent(source, stmt.span[0]), True)
    else:
        raise ValueError(f"unknown anchor mode {template.anchor.mode!r}")

    new_source = source[:position] + snippet + source[position:]
    parse(new_source)  # inserted code must leave the program parseable
    return AugmentResult(
        source=new_source,
        inserted_ranges=[(position, position + len(snippet))],
        summary=template.summary,
        new_state=frozenset(state) | {interaction},
    )


# --- undo history ------------------------------------------------------------------


@dataclass
class HistoryEntry:
    source: str
    state: frozenset[InteractionType]
    interaction: InteractionType


@dataclass
class SessionHistory:
    """Immutable source snapshots; undo restores exact prior bytes."""

    entries: list[HistoryEntry] = field(default_factory=list)

    def push(
        self,
        source: str,
        state: frozenset[InteractionType],
        interaction: InteractionType,
    ) -> None:
        self.entries.append(HistoryEntry(source=source, state=state, interaction=interaction))

    def undo(self) -> HistoryEntry:
        if not self.entries:
            raise NothingToUndo("no augmentation to undo")
        return self.entries.pop()

    @property
    def depth(self) -> int:
        return len(self.entries)
