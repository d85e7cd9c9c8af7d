"""
JavaScript 解析器

使用 tree-sitter-javascript 解析源码，并把原始语法树归一化为固定的节点词表
（见 NODE_KINDS）。不在词表中的语法节点是透明的：其子节点直接提升到父节点。
注释不进入 AST，单独作为 trivia 保存在 ParsedUnit.comments 中。
"""

from typing import Any, Dict, List, Optional, Tuple

import tree_sitter as ts
import tree_sitter_javascript as tsjs

from jscefr.core.exceptions import ParseError
from jscefr.core.logger import get_logger
from jscefr.schemas.source import AstNode, Comment, ParsedUnit, SourceFile, Span
from jscefr.toolkit.converter import snake_to_pascal

logger = get_logger(__name__)

JS_LANGUAGE = ts.Language(tsjs.language())
_parser: Optional[ts.Parser] = None


def _get_parser() -> ts.Parser:
    global _parser
    if _parser is None:
        _parser = ts.Parser(JS_LANGUAGE)
    return _parser


# 固定节点词表
NODE_KINDS = frozenset(
    {
        "Program",
        "VariableDeclaration",
        "AssignmentExpression",
        "Identifier",
        "ThisExpression",
        "FunctionDeclaration",
        "FunctionExpression",
        "ArrowFunction",
        "ClassDeclaration",
        "ClassExpression",
        "MethodDefinition",
        "TryStatement",
        "CatchClause",
        "ThrowStatement",
        "IfStatement",
        "SwitchStatement",
        "ForStatement",
        "ForInStatement",
        "ForOfStatement",
        "WhileStatement",
        "DoWhileStatement",
        "ReturnStatement",
        "BreakStatement",
        "ContinueStatement",
        "LabeledStatement",
        "CallExpression",
        "NewExpression",
        "MemberExpression",
        "ArrayLiteral",
        "ElementList",
        "ObjectLiteral",
        "Property",
        "TemplateLiteral",
        "TaggedTemplate",
        "RegExpLiteral",
        "SpreadElement",
        "RestElement",
        "ObjectPattern",
        "ArrayPattern",
        "AwaitExpression",
        "YieldExpression",
        "UnaryExpression",
        "BinaryExpression",
        "LogicalExpression",
        "ConditionalExpression",
        "UpdateExpression",
        "SequenceExpression",
        "OptionalChaining",
        "NullishCoalescing",
        "ImportDeclaration",
        "ExportDeclaration",
        "DebuggerStatement",
        "StrictModeDirective",
        # 扩展词表
        "VariableDeclarator",
        "BlockStatement",
        "ExpressionStatement",
        "EmptyStatement",
        "StringLiteral",
        "NumericLiteral",
        "BooleanLiteral",
        "NullLiteral",
        "Super",
        "MetaProperty",
        "ClassBody",
        "FieldDefinition",
        "SwitchCase",
        "FinallyClause",
        "AssignmentPattern",
        "WithStatement",
    }
)

FUNCTION_KINDS = frozenset(
    {"FunctionDeclaration", "FunctionExpression", "ArrowFunction", "MethodDefinition"}
)

# 一对一映射：tree-sitter 类型 -> 词表类型（tree-sitter 的 snake_case 名称转为 PascalCase 后
# 已经在词表中的类型无需列出，例如 if_statement -> IfStatement）
_RENAMED = {
    "this": "ThisExpression",
    "do_statement": "DoWhileStatement",
    "array": "ArrayLiteral",
    "object": "ObjectLiteral",
    "pair": "Property",
    "pair_pattern": "Property",
    "template_string": "TemplateLiteral",
    "regex": "RegExpLiteral",
    "rest_pattern": "RestElement",
    "ternary_expression": "ConditionalExpression",
    "import_statement": "ImportDeclaration",
    "export_statement": "ExportDeclaration",
    "statement_block": "BlockStatement",
    "number": "NumericLiteral",
    "null": "NullLiteral",
    "super": "Super",
    "field_definition": "FieldDefinition",
    "object_assignment_pattern": "AssignmentPattern",
    "optional_chain": "OptionalChaining",
}

_IDENTIFIER_TYPES = frozenset(
    {
        "identifier",
        "property_identifier",
        "private_property_identifier",
        "shorthand_property_identifier",
        "shorthand_property_identifier_pattern",
        "statement_identifier",
        "undefined",
        "import",
    }
)

_FUNCTION_TYPES = frozenset(
    {
        "function_declaration",
        "generator_function_declaration",
        "function_expression",
        "function",
        "generator_function",
        "arrow_function",
        "method_definition",
    }
)

_LITERAL_TYPES = frozenset({"string", "number", "regex", "true", "false", "null"})


class _Locator:
    """把 tree-sitter 的 (行, 字节列) 转换为 (1 起始行, 字符列)"""

    def __init__(self, source: bytes, is_ascii: bool):
        self.source = source
        self.is_ascii = is_ascii
        self._lines: Optional[List[bytes]] = None

    def point(self, point: Tuple[int, int]) -> Tuple[int, int]:
        row, column = point[0], point[1]
        if self.is_ascii:
            return row + 1, column
        if self._lines is None:
            self._lines = self.source.split(b"\n")
        line = self._lines[row] if row < len(self._lines) else b""
        return row + 1, len(line[:column].decode("utf-8", errors="ignore"))

    def span(self, node: ts.Node) -> Span:
        start_line, start_col = self.point(node.start_point)
        end_line, end_col = self.point(node.end_point)
        return Span(start_line, start_col, end_line, end_col)


class _Frame:
    __slots__ = ("node", "kids", "index", "out")

    def __init__(self, node: ts.Node):
        self.node = node
        self.kids = node.named_children if node.type not in _LITERAL_TYPES else []
        self.index = 0
        self.out: List[AstNode] = []


class _Normalizer:
    """把 tree-sitter 语法树转换为归一化 AST（显式栈，避免深层递归）"""

    def __init__(self, source: bytes, text: str):
        self.source = source
        self.text = text
        self.locator = _Locator(source, text.isascii())
        self.comments: List[Comment] = []

    def text_of(self, node: Optional[ts.Node]) -> str:
        if node is None:
            return ""
        return self.source[node.start_byte : node.end_byte].decode(
            "utf-8", errors="replace"
        )

    def run(self, tree_root: ts.Node) -> AstNode:
        stack = [_Frame(tree_root)]
        produced: List[AstNode] = []
        while stack:
            frame = stack[-1]
            if frame.index < len(frame.kids):
                child = frame.kids[frame.index]
                frame.index += 1
                if child.type == "comment":
                    self.comments.append(
                        Comment(span=self.locator.span(child), text=self.text_of(child))
                    )
                    continue
                stack.append(_Frame(child))
                continue
            stack.pop()
            produced = self.make(frame.node, frame.out)
            if stack:
                stack[-1].out.extend(produced)
        self.comments.sort(key=lambda c: (c.span.start_line, c.span.start_col))
        return produced[0]

    # ==================== 节点构造 ====================

    def node(
        self,
        node_kind: str,
        ts_node: ts.Node,
        children: List[AstNode],
        span: Optional[Span] = None,
        **attrs: Any,
    ) -> AstNode:
        return AstNode(
            kind=node_kind,
            span=span or self.locator.span(ts_node),
            attrs=attrs,
            children=tuple(children),
        )

    def make(self, ts_node: ts.Node, children: List[AstNode]) -> List[AstNode]:
        t = ts_node.type

        if t == "program":
            return [self.make_program(ts_node, children)]
        if t in _IDENTIFIER_TYPES:
            return [self.node("Identifier", ts_node, [], name=self.text_of(ts_node))]
        if t in _FUNCTION_TYPES:
            return [self.make_function(ts_node, children)]
        if t in ("lexical_declaration", "variable_declaration"):
            kind = ts_node.children[0].type if ts_node.child_count else "var"
            return [self.node("VariableDeclaration", ts_node, children, kind=kind)]
        if t == "assignment_expression":
            return [self.node("AssignmentExpression", ts_node, children, op="=")]
        if t == "augmented_assignment_expression":
            op = ts_node.child_by_field_name("operator")
            return [
                self.node("AssignmentExpression", ts_node, children, op=op.type if op else "=")
            ]
        if t == "class_declaration":
            name = self.text_of(ts_node.child_by_field_name("name"))
            return [self.node("ClassDeclaration", ts_node, children, name=name)]
        if t == "for_in_statement":
            op = ts_node.child_by_field_name("operator")
            is_of = op is not None and op.type == "of"
            kind = "ForOfStatement" if is_of else "ForInStatement"
            is_await = any(c.type == "await" for c in ts_node.children)
            return [self.node(kind, ts_node, children, **({"await": True} if is_await else {}))]
        if t == "call_expression":
            args = ts_node.child_by_field_name("arguments")
            if args is not None and args.type == "template_string":
                return [self.node("TaggedTemplate", ts_node, children)]
            return [
                self.node(
                    "CallExpression", ts_node, children, optional=self.has_optional(ts_node)
                )
            ]
        if t == "new_expression":
            callee = self.static_name(ts_node.child_by_field_name("constructor"))
            attrs = {"callee": callee} if callee else {}
            return [self.node("NewExpression", ts_node, children, **attrs)]
        if t in ("member_expression", "subscript_expression"):
            return [
                self.node(
                    "MemberExpression",
                    ts_node,
                    children,
                    computed=t == "subscript_expression",
                    optional=self.has_optional(ts_node),
                )
            ]
        if t == "array":
            return [self.make_array(ts_node, children)]
        if t == "binary_expression":
            op = self.operator(ts_node)
            if op == "??":
                return [self.node("NullishCoalescing", ts_node, children, op=op)]
            if op in ("&&", "||"):
                return [self.node("LogicalExpression", ts_node, children, op=op)]
            return [self.node("BinaryExpression", ts_node, children, op=op)]
        if t == "unary_expression":
            return [self.node("UnaryExpression", ts_node, children, op=self.operator(ts_node))]
        if t == "update_expression":
            op = self.operator(ts_node)
            prefix = ts_node.child_count > 0 and ts_node.children[0].type == op
            return [self.node("UpdateExpression", ts_node, children, op=op, prefix=prefix)]
        if t == "yield_expression":
            delegate = any(c.type == "*" for c in ts_node.children)
            return [self.node("YieldExpression", ts_node, children, delegate=delegate)]
        if t == "export_statement":
            default = any(c.type == "default" for c in ts_node.children)
            return [self.node("ExportDeclaration", ts_node, children, default=default)]
        if t == "string":
            raw = self.text_of(ts_node)
            return [self.node("StringLiteral", ts_node, [], value=raw[1:-1], raw=raw)]
        if t in ("true", "false"):
            return [self.node("BooleanLiteral", ts_node, [], value=t)]
        if t == "number":
            return [self.node("NumericLiteral", ts_node, [], raw=self.text_of(ts_node))]
        if t == "statement_block":
            parent = ts_node.parent
            if parent is not None and parent.type in _FUNCTION_TYPES:
                children = self.mark_directives(children)
            return [self.node("BlockStatement", ts_node, children)]
        if t in ("switch_case", "switch_default"):
            return [self.node("SwitchCase", ts_node, children, default=t == "switch_default")]
        if t == "field_definition":
            static = any(c.type == "static" for c in ts_node.children)
            return [self.node("FieldDefinition", ts_node, children, static=static)]
        if t == "class":
            name = self.text_of(ts_node.child_by_field_name("name"))
            attrs = {"name": name} if name else {}
            # export default class {} 是声明
            parent = ts_node.parent
            if (
                parent is not None
                and parent.type == "export_statement"
                and any(c.type == "default" for c in parent.children)
            ):
                return [self.node("ClassDeclaration", ts_node, children, **attrs)]
            return [self.node("ClassExpression", ts_node, children, **attrs)]

        kind = _RENAMED.get(t) or snake_to_pascal(t)
        if kind in NODE_KINDS:
            return [self.node(kind, ts_node, children)]
        # 透明节点：子节点提升到父节点
        return children

    def make_program(self, ts_node: ts.Node, children: List[AstNode]) -> AstNode:
        lines = self.text.split("\n")
        span = Span(1, 0, len(lines), len(lines[-1]))
        return self.node("Program", ts_node, self.mark_directives(children), span=span)

    def make_function(self, ts_node: ts.Node, children: List[AstNode]) -> AstNode:
        t = ts_node.type
        tokens = [c.type for c in ts_node.children if not c.is_named]
        is_async = "async" in tokens
        is_generator = t.startswith("generator_") or "*" in tokens
        name = self.text_of(ts_node.child_by_field_name("name"))

        if t == "arrow_function":
            return self.node("ArrowFunction", ts_node, children, **{"async": is_async})
        if t == "method_definition":
            if name == "constructor":
                kind = "constructor"
            elif "get" in tokens:
                kind = "get"
            elif "set" in tokens:
                kind = "set"
            else:
                kind = "method"
            return self.node(
                "MethodDefinition",
                ts_node,
                children,
                kind=kind,
                static="static" in tokens,
                generator=is_generator,
                **{"async": is_async},
            )

        kind = "FunctionDeclaration" if t.endswith("_declaration") else "FunctionExpression"
        attrs: Dict[str, Any] = {"async": is_async, "generator": is_generator}
        if name:
            attrs["name"] = name
        return self.node(kind, ts_node, children, **attrs)

    def make_array(self, ts_node: ts.Node, children: List[AstNode]) -> AstNode:
        inner = [c for c in ts_node.children if c.type != "comment"]
        if inner and inner[0].type == "[":
            inner = inner[1:]
        if inner and inner[-1].type == "]":
            inner = inner[:-1]

        holes = 0
        expect_element = True
        for token in inner:
            if token.type == ",":
                if expect_element:
                    holes += 1
                expect_element = True
            else:
                expect_element = False

        elements: List[AstNode] = []
        if inner:
            start = self.locator.point(inner[0].start_point)
            end = self.locator.point(inner[-1].end_point)
            elements.append(
                AstNode(
                    kind="ElementList",
                    span=Span(start[0], start[1], end[0], end[1]),
                    attrs={},
                    children=tuple(children),
                )
            )
        return self.node("ArrayLiteral", ts_node, elements, holes=holes)

    def mark_directives(self, children: List[AstNode]) -> List[AstNode]:
        """识别指令序言中的 "use strict" """
        marked = list(children)
        for index, child in enumerate(marked):
            if child.kind != "ExpressionStatement" or len(child.children) != 1:
                break
            literal = child.children[0]
            if literal.kind != "StringLiteral" or literal.span[:2] != child.span[:2]:
                break
            if literal.attrs.get("value") == "use strict":
                marked[index] = AstNode(
                    kind="StrictModeDirective",
                    span=child.span,
                    attrs={"value": "use strict"},
                    children=(),
                )
        return marked

    # ==================== 辅助方法 ====================

    @staticmethod
    def has_optional(ts_node: ts.Node) -> bool:
        return any(c.type == "optional_chain" for c in ts_node.children)

    @staticmethod
    def operator(ts_node: ts.Node) -> str:
        op = ts_node.child_by_field_name("operator")
        return op.type if op is not None else ""

    def static_name(self, ts_node: Optional[ts.Node]) -> str:
        """返回 a.b.C 形式的静态名称，无法静态确定时返回空串"""
        parts: List[str] = []
        while ts_node is not None:
            if ts_node.type == "identifier":
                parts.append(self.text_of(ts_node))
                return ".".join(reversed(parts))
            if ts_node.type != "member_expression":
                return ""
            parts.append(self.text_of(ts_node.child_by_field_name("property")))
            ts_node = ts_node.child_by_field_name("object")
        return ""


def _first_error(tree_root: ts.Node) -> ts.Node:
    """找到源码中最靠前的 ERROR / MISSING 节点"""
    best: Optional[ts.Node] = None
    stack = [tree_root]
    while stack:
        node = stack.pop()
        if node.is_error or node.is_missing:
            if best is None or node.start_byte < best.start_byte:
                best = node
            continue
        if node.has_error:
            stack.extend(node.children)
    return best or tree_root


def parse_source(file: SourceFile) -> ParsedUnit:
    """解析单个源文件

    Args:
        file: 源文件

    Returns:
        ParsedUnit: 归一化后的解析结果

    Raises:
        ParseError: 源码存在语法错误
    """
    source = file.text.encode("utf-8")
    tree = _get_parser().parse(source)
    root = tree.root_node

    normalizer = _Normalizer(source, file.text)
    if root.has_error:
        bad = _first_error(root)
        line, col = normalizer.locator.point(bad.start_point)
        what = f"missing {bad.type}" if bad.is_missing else "syntax error"
        raise ParseError(file.path, line, col, what)

    unit = ParsedUnit(file=file, root=normalizer.run(root), comments=normalizer.comments)
    logger.debug(f"解析完成: {file.path} ({len(unit.comments)} 条注释)")
    return unit
