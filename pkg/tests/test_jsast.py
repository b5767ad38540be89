import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vizsmith.errors import (
    PlaceholderRemaining,
    SourceSyntaxError,
    TargetNotInTree,
    UnsupportedConstruct,
)
from vizsmith.jsast import (
    ChainLink,
    Node,
    NodeKind,
    NodePattern,
    find,
    parse,
    print_source,
    rewrite,
    structural_equal,
)
from vizsmith.jsast import nodes as b

SCATTER_CHAIN = 'svg.append("circle").attr("cx", d => x(d.sepalLength));'


class TestParse:
    def test_minimal_declaration(self):
        ast = parse("const w = 450;")
        program = ast.root
        assert program.kind is NodeKind.PROGRAM
        decl = program.children[0]
        assert decl.kind is NodeKind.VARIABLE_DECLARATION
        assert decl.token == "const"
        name, init = decl.children
        assert name == b.ident("w")
        assert init.kind is NodeKind.NUMBER_LITERAL and init.token == "450"

    def test_chain_against_hand_built_tree(self):
        ast = parse(SCATTER_CHAIN)
        expected = b.expression_statement(
            b.method_call(
                b.method_call(b.ident("svg"), "append", b.string("circle")),
                "attr",
                b.string("cx"),
                b.arrow(["d"], b.call(b.ident("x"), b.member(b.ident("d"), "sepalLength"))),
            )
        )
        assert structural_equal(ast.root.children[0], expected)

    def test_syntax_error_position(self):
        with pytest.raises(SourceSyntaxError) as err:
            parse("const x = ???;")
        assert err.value.line == 1
        assert err.value.col == 11
        assert err.value.lexeme == "?"

    def test_unsupported_keyword_statement(self):
        with pytest.raises(UnsupportedConstruct):
            parse("if (a) { b(); }")

    def test_unsupported_assignment(self):
        with pytest.raises(UnsupportedConstruct):
            parse("x = 1;")

    def test_unsupported_template_literal(self):
        with pytest.raises(SourceSyntaxError):
            parse("const s = `hi`;")

    def test_unsupported_multi_declarator(self):
        with pytest.raises(UnsupportedConstruct):
            parse("const a = 1, b = 2;")

    def test_comment_attached_before_following_statement(self):
        ast = parse("// setup\nconst a = 1;\nconst b = 2; // trailing\nconst c = 3;")
        kinds = [n.kind for n in ast.root.children]
        assert kinds == [
            NodeKind.COMMENT,
            NodeKind.VARIABLE_DECLARATION,
            NodeKind.VARIABLE_DECLARATION,
            NodeKind.COMMENT,
            NodeKind.VARIABLE_DECLARATION,
        ]

    def test_placeholder_identifier(self):
        ast = parse("const v = d.__X_ATTR__;")
        member = ast.root.children[0].children[1]
        assert member.children[1].kind is NodeKind.PLACEHOLDER
        assert member.children[1].token == "X_ATTR"

    def test_source_map_covers_parsed_nodes(self):
        src = "const a = fn(1);"
        ast = parse(src)
        spans = ast.source_map()
        assert all(0 <= s < e <= len(src) for s, e in spans.values())

    def test_computed_member_and_object_arrow(self):
        ast = parse("rows.map((d, i) => ({ id: i, at: d[i] }));")
        printed = print_source(ast)
        assert printed == "rows.map((d, i) => ({ id: i, at: d[i] }));\n"


class TestPrint:
    def test_idempotent(self):
        src = 'const a = { k: [1, 2] };\nfn(d => d.x > 1 ? "y" : "n");\n'
        once = print_source(parse(src))
        assert print_source(parse(once)) == once

    def test_placeholder_rejected(self):
        ast = parse("const v = d.__X_ATTR__;")
        with pytest.raises(PlaceholderRemaining) as err:
            print_source(ast)
        assert err.value.slot == "X_ATTR"

    def test_chain_breaking_threshold(self):
        short = parse('d3.csv("f.csv").then(cb);')
        assert print_source(short) == 'd3.csv("f.csv").then(cb);\n'
        long = parse("a.b().c().d();")
        assert print_source(long) == "a.b()\n  .c()\n  .d();\n"

    def test_operator_parentheses_round_trip(self):
        src = "const v = a - (b - c) * 2;"
        printed = print_source(parse(src))
        assert printed == "const v = a - (b - c) * 2;\n"
        assert structural_equal(parse(printed).root, parse(src).root)

    def test_deterministic_bytes(self):
        src = 'svg.on("end", function(event) { return event.x >= s[0][0]; });'
        assert print_source(parse(src)) == print_source(parse(src))


class TestRoundTrip:
    @pytest.mark.parametrize(
        "src",
        [
            "const margin = { top: 20, right: 30, bottom: 40, left: 50 };",
            'const svg = d3.select("#chart")\n  .append("svg")\n  .append("g");',
            "fn(() => { const i = 1; return i; });",
            'x.filter(d => d.a !== "" && d.b !== "");',
            "const t = cond ? -1 : +d.v;",
            "// top\nconst a = 1;\n/* block */\nconst b = 2;",
        ],
    )
    def test_reparse_stability(self, src):
        first = parse(src)
        printed = print_source(first)
        second = parse(printed)
        assert structural_equal(first.root, second.root)
        assert print_source(second) == printed


# Strategy for synthesized expression trees within the grammar subset.
_identifiers = st.sampled_from(["a", "b", "data", "svg", "x9"])
_leaves = st.one_of(
    _identifiers.map(b.ident),
    st.integers(0, 999).map(b.number),
    st.text(st.characters(codec="ascii", exclude_characters='"\\\x00'), max_size=6).map(
        b.string
    ),
    st.booleans().map(b.boolean),
)


def _compound(children):
    return st.one_of(
        st.tuples(children, children).map(lambda p: b.binary("+", *p)),
        st.tuples(_identifiers, children).map(lambda p: b.member(p[1], p[0])),
        st.tuples(children, st.lists(children, max_size=2)).map(
            lambda p: b.call(b.member(p[0], "m"), *p[1])
        ),
        st.tuples(children).map(lambda p: b.unary("+", p[0])),
        st.tuples(children).map(lambda p: b.arrow(["d"], p[0])),
        st.lists(children, max_size=3).map(lambda items: b.array(*items)),
    )


_expressions = st.recursive(_leaves, _compound, max_leaves=12)


class TestRoundTripProperty:
    @settings(max_examples=80, deadline=None)
    @given(exprs=st.lists(_expressions, min_size=1, max_size=4))
    def test_synthesized_trees_round_trip(self, exprs):
        root = Node(
            NodeKind.PROGRAM, None, tuple(b.expression_statement(e) for e in exprs)
        )
        printed = print_source(root)
        reparsed = parse(printed)
        assert structural_equal(reparsed.root, root)
        assert print_source(reparsed) == printed


class TestFind:
    def test_chain_suffix_on_scatter_chain(self):
        ast = parse(SCATTER_CHAIN)
        pattern = NodePattern(chain_suffix=(ChainLink("append", ("circle",)),))
        assert len(find(ast, pattern)) == 1

    def test_empty_program(self):
        pattern = NodePattern(chain_suffix=(ChainLink("append", ("circle",)),))
        assert find(parse(""), pattern) == []

    def test_no_match_for_other_mark(self):
        ast = parse('svg.append("rect").attr("x", 0);')
        pattern = NodePattern(chain_suffix=(ChainLink("append", ("circle",)),))
        assert find(ast, pattern) == []

    def test_contains_matches_chain_head_once(self):
        ast = parse('svg.selectAll("circle").data(rows).join("circle").attr("r", 4);')
        pattern = NodePattern(
            chain_contains=(ChainLink("join", ("circle",)),), head=True
        )
        matches = find(ast, pattern)
        assert len(matches) == 1
        # The head is the whole chain, whose last link is attr.
        assert matches[0] is ast.root.children[0].children[0]

    def test_document_order(self):
        ast = parse('a.append("g");\nb.append("g");')
        pattern = NodePattern(chain_suffix=(ChainLink("append", ("g",)),))
        matches = find(ast, pattern)
        spans = [m.span for m in matches]
        assert spans == sorted(spans)

    def test_numeric_argument_constraint(self):
        ast = parse("s.attr(1).attr(2);")
        pattern = NodePattern(chain_suffix=(ChainLink("attr", (2,)),))
        assert len(find(ast, pattern)) == 1


class TestRewrite:
    def test_replace_wraps_anchor_as_child(self):
        ast = parse('svg.join("circle");')
        anchor = find(ast, NodePattern(chain_suffix=(ChainLink("join", ("circle",)),)))[0]
        wrapped = b.method_call(anchor, "on", b.string("click"), b.ident("handler"))
        new_ast = rewrite(ast, anchor, wrapped, mode="replace")
        assert print_source(new_ast) == 'svg.join("circle").on("click", handler);\n'
        # The original tree is untouched.
        assert print_source(ast) == 'svg.join("circle");\n'

    def test_append_comment_after_statement(self):
        ast = parse("const a = 1;\nconst b = 2;")
        target = ast.root.children[0].children[1]  # the literal inside the first decl
        new_ast = rewrite(ast, target, b.comment("// note"), mode="append")
        assert print_source(new_ast) == "const a = 1;\n// note\nconst b = 2;\n"

    def test_prepend_statement(self):
        ast = parse("const b = 2;")
        new_ast = rewrite(
            ast, ast.root.children[0], b.const_declaration("a", b.number(1)), mode="prepend"
        )
        assert print_source(new_ast) == "const a = 1;\nconst b = 2;\n"

    def test_detached_target_rejected(self):
        ast = parse("const a = 1;")
        with pytest.raises(TargetNotInTree):
            rewrite(ast, b.ident("zzz"), b.ident("y"), mode="replace")

    def test_locality_outside_subtree(self):
        ast = parse("const a = 1;\nconst b = old;\nconst c = 3;")
        target = ast.root.children[1].children[1]
        new_ast = rewrite(ast, target, b.ident("fresh"), mode="replace")
        old_lines = print_source(ast).splitlines()
        new_lines = print_source(new_ast).splitlines()
        assert new_lines[0] == old_lines[0]
        assert new_lines[2] == old_lines[2]
        assert new_lines[1] == "const b = fresh;"
        # Untouched statement subtrees are shared, not copied.
        assert new_ast.root.children[0] is ast.root.children[0]

    def test_inserted_nodes_marked_synthesized(self):
        ast = parse("const a = 1;")
        new_ast = rewrite(
            ast, ast.root.children[0], b.comment("// synthesized"), mode="append"
        )
        inserted = new_ast.root.children[1]
        assert inserted.span is None
