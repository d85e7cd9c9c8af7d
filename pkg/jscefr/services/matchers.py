"""
匹配器参数的解析与公共匹配逻辑

目录加载（校验）和检测引擎（匹配）共用这里的定义。
"""

import re
from typing import Any, List, Optional, Sequence, Tuple

from jscefr.schemas.source import AstNode

TRIVIA_CLASSES = frozenset({"comment", "line", "block", "doc"})

# 关键字匹配比较的字符串属性
KEYWORD_ATTRS = ("kind", "op")

_NODE_KIND_ARG = re.compile(r"^([A-Za-z]+)((?:\[[A-Za-z_]+=[^\]]*\])*)$")
_CONSTRAINT = re.compile(r"\[([A-Za-z_]+)=([^\]]*)\]")
_SEGMENT = re.compile(r"^(?:\*|[A-Za-z_$][A-Za-z0-9_$]*)$")

Constraint = Tuple[str, str]


def parse_node_kind_arg(arg: str) -> Tuple[str, List[Constraint]]:
    """解析 "Kind" 或 "Kind[attr=value][attr=value]"

    Raises:
        ValueError: 参数格式不正确
    """
    match = _NODE_KIND_ARG.match(arg)
    if match is None:
        raise ValueError(f"malformed node-kind argument: {arg!r}")
    return match.group(1), _CONSTRAINT.findall(match.group(2))


def parse_callee_path(arg: str) -> List[str]:
    """解析点分隔的调用路径，例如 "Promise.all"、"*.then"

    Raises:
        ValueError: 存在空段或非法段
    """
    segments = arg.split(".")
    for segment in segments:
        if not _SEGMENT.match(segment):
            raise ValueError(f"malformed callee path: {arg!r}")
    return segments


def attr_text(value: Any) -> str:
    """属性值的字符串形式，布尔值为 true / false"""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def constraints_hold(node: AstNode, constraints: Sequence[Constraint]) -> bool:
    for name, expected in constraints:
        if name not in node.attrs or attr_text(node.attrs[name]) != expected:
            return False
    return True


def keyword_tokens(node: AstNode) -> List[str]:
    """节点可被关键字匹配的词元"""
    tokens = []
    if node.kind == "Identifier":
        tokens.append(node.attrs.get("name", ""))
    for name in KEYWORD_ATTRS:
        value = node.attrs.get(name)
        if isinstance(value, str):
            tokens.append(value)
    return tokens


def member_chain(node: AstNode) -> List[Optional[str]]:
    """表达式的成员访问链，无法静态命名的对象用 None 表示

    foo.bar.baz -> ["foo", "bar", "baz"]
    this.x      -> ["this", "x"]
    f().then    -> [None, "then"]
    """
    parts: List[Optional[str]] = []
    while True:
        if node.kind == "Identifier":
            parts.append(node.attrs.get("name"))
            break
        if node.kind == "ThisExpression":
            parts.append("this")
            break
        if node.kind == "MemberExpression" and not node.attrs.get("computed"):
            parts.append(node.children[-1].attrs.get("name"))
            node = node.children[0]
            continue
        parts.append(None)
        break
    parts.reverse()
    return parts


def callee_chain(call: AstNode) -> List[Optional[str]]:
    """调用表达式被调用者的成员链"""
    if not call.children:
        return [None]
    return member_chain(call.children[0])


def call_arguments(call: AstNode) -> List[AstNode]:
    """调用表达式的实参节点"""
    return [c for c in call.children[1:] if c.kind != "OptionalChaining"]


def chain_matches(chain: Sequence[Optional[str]], pattern: Sequence[str]) -> bool:
    """模式匹配调用链的末尾若干段，"*" 匹配任意单个段"""
    if len(chain) < len(pattern):
        return False
    tail = chain[len(chain) - len(pattern) :]
    return all(p == "*" or (s is not None and s == p) for p, s in zip(pattern, tail))
