import pytest

from conftest import parse_text
from jscefr.core.exceptions import DiscoveryError, ParseError
from jscefr.schemas.source import DiscoveryConfig, Span
from jscefr.services.discovery import discover_js_files, load_source_file, repo_name
from jscefr.services.parser import NODE_KINDS

SAMPLE = """\
"use strict";
// entry point
import { render } from "./view.js";

/** Counter widget */
class Counter extends Base {
  static count = 0;
  constructor(el) {
    super();
    this.el = el;
  }
  get value() { return this.el?.dataset.value ?? 0; }
  *ticks() { yield* [1, , 3]; }
}

async function load(url) {
  try {
    const res = await fetch(`${url}/data`);
    return res.json();
  } catch (e) {
    throw new Error("failed");
  } finally {
    done();
  }
}

for (const [k, v] of Object.entries({ a: 1, ...rest })) {
  if (k in obj && !v) { continue; }
  label: for (let i = 0; i < 3; i++) { break label; }
}
const f = (a = 1, ...more) => a + more.length;
x = typeof y === "string" ? /ab+c/i.test(y) : null;
export default Counter;
"""


def kinds(unit):
    return [node.kind for node in unit.root.walk()]


def find(unit, kind):
    return [node for node in unit.root.walk() if node.kind == kind]


# ==================== 发现 ====================


def test_discover_filters_and_sorts(make_project):
    """测试按扩展名过滤、排除目录并按字节序排序"""
    root = make_project(
        {
            "b.js": "",
            "a/z.mjs": "",
            "a/y.cjs": "",
            "C.JS": "",
            "style.css": "",
            "lib/util.ts": "",
            "node_modules/pkg/index.js": "",
            ".git/hooks/x.js": "",
            "src/node_modules/deep.js": "",
        }
    )
    assert discover_js_files(root) == ["C.JS", "a/y.cjs", "a/z.mjs", "b.js"]


def test_discover_custom_config(make_project):
    """测试自定义扩展名和排除目录"""
    root = make_project({"a.js": "", "b.jsx": "", "dist/c.js": "", "node_modules/d.js": ""})
    config = DiscoveryConfig(extensions={"js", ".JSX"}, excludes={"dist"})
    assert discover_js_files(root, config) == ["a.js", "b.jsx", "node_modules/d.js"]


def test_discover_missing_root(tmp_path):
    """测试根目录不存在"""
    with pytest.raises(DiscoveryError) as exc_info:
        discover_js_files(tmp_path / "missing")
    assert exc_info.value.exit_code == 2


def test_discover_empty_directory(tmp_path):
    """测试空目录"""
    assert discover_js_files(tmp_path) == []


def test_repo_name_and_load(make_project):
    """测试项目名取根目录基本名，读取时去掉 BOM"""
    root = make_project({"app.js": "\ufeffvar a = 1;\n"})
    assert repo_name(root) == "App"
    source = load_source_file(root, "app.js", "App")
    assert source.text == "var a = 1;\n"
    assert source.display_path == "App/app.js"


def test_load_non_utf8(make_project):
    """测试非 UTF-8 文件抛出 UnicodeDecodeError"""
    root = make_project({})
    (root / "bad.js").write_bytes(b"var s = '\xff\xfe';\n")
    with pytest.raises(UnicodeDecodeError):
        load_source_file(root, "bad.js", "App")


# ==================== 解析 ====================


def test_parse_empty_file():
    """测试空文件得到空 Program"""
    unit = parse_text("")
    assert unit.root.kind == "Program"
    assert unit.root.children == ()
    assert unit.comments == []


def test_parse_declaration():
    """测试 const 声明"""
    unit = parse_text("const x = 1;")
    declaration = unit.root.children[0]
    assert declaration.kind == "VariableDeclaration"
    assert declaration.attrs["kind"] == "const"
    assert declaration.span == Span(1, 0, 1, 12)
    declarator = declaration.children[0]
    assert declarator.kind == "VariableDeclarator"
    assert [c.kind for c in declarator.children] == ["Identifier", "NumericLiteral"]


def test_parse_declaration_kinds_and_methods():
    """测试 let / var 声明与对象、类方法的 kind 属性"""
    unit = parse_text(
        "let a = 1; var b;\n"
        "const o = { m() {}, get g() { return 1; } };\n"
        "class C { set s(v) {} }\n"
    )
    assert [d.attrs["kind"] for d in find(unit, "VariableDeclaration")] == ["let", "var", "const"]
    assert [m.attrs["kind"] for m in find(unit, "MethodDefinition")] == ["method", "get", "set"]


def test_parse_export_default_anonymous_class():
    """测试 export default class {} 归一化为类声明"""
    unit = parse_text("export default class { run() {} }\nconst K = class {};\n")
    declarations = find(unit, "ClassDeclaration")
    assert len(declarations) == 1
    assert "name" not in declarations[0].attrs
    assert declarations[0].span.start_line == 1
    assert len(find(unit, "ClassExpression")) == 1


def test_parse_sample_vocabulary():
    """测试样例中出现的节点类型都在词表内，且包含预期的构造"""
    unit = parse_text(SAMPLE)
    seen = set(kinds(unit))
    assert seen <= NODE_KINDS
    for expected in (
        "StrictModeDirective",
        "ImportDeclaration",
        "ClassDeclaration",
        "FieldDefinition",
        "MethodDefinition",
        "Super",
        "ThisExpression",
        "OptionalChaining",
        "NullishCoalescing",
        "YieldExpression",
        "ArrayLiteral",
        "ElementList",
        "FunctionDeclaration",
        "TryStatement",
        "CatchClause",
        "FinallyClause",
        "AwaitExpression",
        "TemplateLiteral",
        "ThrowStatement",
        "NewExpression",
        "ForOfStatement",
        "ArrayPattern",
        "ObjectLiteral",
        "SpreadElement",
        "LogicalExpression",
        "UnaryExpression",
        "LabeledStatement",
        "ForStatement",
        "UpdateExpression",
        "BreakStatement",
        "ContinueStatement",
        "ArrowFunction",
        "AssignmentPattern",
        "RestElement",
        "ConditionalExpression",
        "RegExpLiteral",
        "NullLiteral",
        "ExportDeclaration",
    ):
        assert expected in seen, expected


def test_parse_spans_nested():
    """测试所有跨度合法且子节点在父节点之内"""
    unit = parse_text(SAMPLE)
    for node in unit.root.walk():
        assert node.span.is_well_formed(), node.kind
        for child in node.children:
            assert node.span.contains(child.span), (node.kind, child.kind)


def test_parse_comments_as_trivia():
    """测试注释不进入 AST，单独按位置记录"""
    unit = parse_text(SAMPLE)
    assert [c.trivia_class for c in unit.comments] == ["line", "doc"]
    assert unit.comments[0].span == Span(2, 0, 2, 14)
    assert unit.comments[0].text == "// entry point"


def test_parse_comment_coordinates():
    """测试第 7 行第 2 列开始、28 个字符的注释"""
    text = "\n" * 6 + "  // show the first item later\n"
    unit = parse_text(text)
    assert unit.comments[0].span == Span(7, 2, 7, 30)


def test_parse_comment_classes():
    """测试行注释、块注释与文档注释"""
    unit = parse_text("// a\n/* b */\n/** c */\n/**/\nx;\n")
    assert [c.trivia_class for c in unit.comments] == ["line", "block", "doc", "block"]


def test_parse_attributes():
    """测试归一化后的节点属性"""
    unit = parse_text(SAMPLE)
    methods = {m.attrs["kind"]: m for m in find(unit, "MethodDefinition")}
    assert set(methods) == {"constructor", "get", "method"}
    assert methods["method"].attrs["generator"] is True
    assert find(unit, "FieldDefinition")[0].attrs["static"] is True
    assert find(unit, "FunctionDeclaration")[0].attrs["async"] is True
    assert find(unit, "FunctionDeclaration")[0].attrs["name"] == "load"
    assert find(unit, "NewExpression")[0].attrs["callee"] == "Error"
    assert find(unit, "YieldExpression")[0].attrs["delegate"] is True
    assert find(unit, "ArrayLiteral")[-1].attrs["holes"] == 1
    assert find(unit, "ExportDeclaration")[0].attrs["default"] is True
    assert find(unit, "UpdateExpression")[0].attrs["prefix"] is False
    assert find(unit, "ClassDeclaration")[0].attrs["name"] == "Counter"


def test_parse_member_expressions():
    """测试点访问与下标访问"""
    unit = parse_text("a.b; a[b]; a?.b;")
    members = find(unit, "MemberExpression")
    assert [m.attrs["computed"] for m in members] == [False, True, False]
    assert [m.attrs["optional"] for m in members] == [False, False, True]
    assert members[0].span == Span(1, 0, 1, 3)


def test_parse_operators():
    """测试二元运算符归类"""
    unit = parse_text("a + b; a && b; a ?? b; a = b; a += b;")
    assert find(unit, "BinaryExpression")[0].attrs["op"] == "+"
    assert find(unit, "LogicalExpression")[0].attrs["op"] == "&&"
    assert find(unit, "NullishCoalescing")[0].attrs["op"] == "??"
    assert [a.attrs["op"] for a in find(unit, "AssignmentExpression")] == ["=", "+="]


def test_parse_arrays():
    """测试数组字面量与 ElementList"""
    unit = parse_text("[]; [1, 2]; [1, , 3];")
    arrays = find(unit, "ArrayLiteral")
    assert [a.attrs["holes"] for a in arrays] == [0, 0, 1]
    assert arrays[0].children == ()
    elements = arrays[1].children[0]
    assert elements.kind == "ElementList"
    assert elements.span == Span(1, 5, 1, 9)
    assert [c.kind for c in elements.children] == ["NumericLiteral", "NumericLiteral"]


def test_parse_for_loops():
    """测试 for-in / for-of / for-await 的区分"""
    unit = parse_text(
        "for (k in o) {}\nfor (v of a) {}\nasync function f() { for await (x of s) {} }\n"
    )
    assert len(find(unit, "ForInStatement")) == 1
    loops = find(unit, "ForOfStatement")
    assert len(loops) == 2
    assert "await" not in loops[0].attrs
    assert loops[1].attrs["await"] is True


def test_parse_tagged_template_and_calls():
    """测试标签模板替代调用表达式"""
    unit = parse_text("tag`x${y}`; f(1); f?.(2);")
    assert len(find(unit, "TaggedTemplate")) == 1
    calls = find(unit, "CallExpression")
    assert [c.attrs["optional"] for c in calls] == [False, True]


def test_parse_strict_directive_only_in_prologue():
    """测试只有指令序言中的 "use strict" 才算指令"""
    assert find(parse_text('"use strict";\nx;'), "StrictModeDirective")
    assert not find(parse_text('x;\n"use strict";'), "StrictModeDirective")
    assert not find(parse_text('("use strict");'), "StrictModeDirective")
    inner = parse_text('function f() { "use strict"; return 1; }')
    assert len(find(inner, "StrictModeDirective")) == 1


def test_parse_non_ascii_columns():
    """测试列号按字符而不是字节计算"""
    text = 'const s = "héllo"; a.b;'
    unit = parse_text(text)
    member = find(unit, "MemberExpression")[0]
    start = text.index("a.b")
    assert member.span == Span(1, start, 1, start + 3)


def test_parse_program_span_covers_file():
    """测试 Program 跨度覆盖整个文件"""
    unit = parse_text("x;\n\n  // tail")
    assert unit.root.span == Span(1, 0, 3, 9)
    assert unit.root.span.contains(unit.comments[0].span)


@pytest.mark.parametrize(
    "text,line",
    [
        ("function (", 1),
        ("let x = ;", 1),
        ("a;\nb;\nif (x {\n}", 3),
    ],
)
def test_parse_error(text, line):
    """测试语法错误抛出带位置的 ParseError"""
    with pytest.raises(ParseError) as exc_info:
        parse_text(text, path="src/bad.js")
    assert exc_info.value.path == "src/bad.js"
    assert exc_info.value.line >= line
    assert exc_info.value.col >= 0
