"""
结构谓词注册表

用于无法用单个节点类型表达的抽象构造（例如“函数中返回函数”）。
注册表在构建时固定，映射文件只能引用、不能定义谓词。
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional

from jscefr.schemas.source import AstNode, ParsedUnit, Span
from jscefr.services.matchers import call_arguments, callee_chain, chain_matches, member_chain
from jscefr.services.parser import FUNCTION_KINDS


@dataclass
class MatchContext:
    """谓词求值时的上下文：当前文件和从根到父节点的祖先链"""

    unit: Optional[ParsedUnit] = None
    ancestors: List[AstNode] = field(default_factory=list)

    def inside_function(self) -> bool:
        return any(a.kind in FUNCTION_KINDS for a in self.ancestors)


Predicate = Callable[[MatchContext, AstNode], Optional[Span]]

WEBGL_CONTEXTS = frozenset({"webgl", "webgl2", "experimental-webgl"})

TYPED_ARRAYS = frozenset(
    {
        "Int8Array",
        "Uint8Array",
        "Uint8ClampedArray",
        "Int16Array",
        "Uint16Array",
        "Int32Array",
        "Uint32Array",
        "Float32Array",
        "Float64Array",
        "BigInt64Array",
        "BigUint64Array",
        "ArrayBuffer",
        "DataView",
    }
)


def is_function(node: AstNode) -> bool:
    return node.kind in FUNCTION_KINDS


def own_returns(function: AstNode) -> Iterator[AstNode]:
    """函数自身的 return 语句（不进入嵌套函数）"""
    stack = list(reversed(function.children))
    while stack:
        node = stack.pop()
        if is_function(node):
            continue
        if node.kind == "ReturnStatement":
            yield node
        stack.extend(reversed(node.children))


# ==================== 谓词 ====================


def predicate_anonymous_function(ctx: MatchContext, node: AstNode) -> Optional[Span]:
    """没有名字的函数表达式，以及所有箭头函数"""
    if node.kind == "ArrowFunction":
        return node.span
    if node.kind == "FunctionExpression" and not node.attrs.get("name"):
        return node.span
    return None


def predicate_closure_return_function(ctx: MatchContext, node: AstNode) -> Optional[Span]:
    """函数自身的 return 返回了一个函数（闭包）"""
    if not is_function(node):
        return None
    # 简写箭头函数的函数体本身就是返回值
    if node.kind == "ArrowFunction" and node.children and is_function(node.children[-1]):
        return node.span
    for ret in own_returns(node):
        if ret.children and is_function(ret.children[0]):
            return node.span
    return None


def predicate_nested_function(ctx: MatchContext, node: AstNode) -> Optional[Span]:
    """词法上位于另一个函数内部的函数"""
    if is_function(node) and ctx.inside_function():
        return node.span
    return None


def predicate_sparse_array(ctx: MatchContext, node: AstNode) -> Optional[Span]:
    """含有空位的数组字面量，例如 [1,,3]"""
    if node.kind == "ArrayLiteral" and node.attrs.get("holes", 0) > 0:
        return node.span
    return None


def predicate_async_function(ctx: MatchContext, node: AstNode) -> Optional[Span]:
    if is_function(node) and node.attrs.get("async"):
        return node.span
    return None


def predicate_generator_function(ctx: MatchContext, node: AstNode) -> Optional[Span]:
    if is_function(node) and node.attrs.get("generator"):
        return node.span
    return None


def predicate_json_usage(ctx: MatchContext, node: AstNode) -> Optional[Span]:
    """JSON.parse / JSON.stringify 调用"""
    if node.kind != "CallExpression":
        return None
    chain = callee_chain(node)
    if chain_matches(chain, ("JSON", "parse")) or chain_matches(chain, ("JSON", "stringify")):
        return node.span
    return None


def predicate_strict_mode_directive(ctx: MatchContext, node: AstNode) -> Optional[Span]:
    if node.kind == "StrictModeDirective":
        return node.span
    return None


def predicate_date_coercion(ctx: MatchContext, node: AstNode) -> Optional[Span]:
    """一元 + 作用于 new Date(...)"""
    if node.kind != "UnaryExpression" or node.attrs.get("op") != "+" or not node.children:
        return None
    operand = node.children[0]
    if operand.kind == "NewExpression" and operand.attrs.get("callee") == "Date":
        return node.span
    return None


def predicate_webgl_context(ctx: MatchContext, node: AstNode) -> Optional[Span]:
    """canvas.getContext("webgl") 等 3D 上下文"""
    if node.kind != "CallExpression":
        return None
    if not chain_matches(callee_chain(node), ("*", "getContext")):
        return None
    args = call_arguments(node)
    if args and args[0].kind == "StringLiteral" and args[0].attrs.get("value") in WEBGL_CONTEXTS:
        return node.span
    return None


def predicate_prototype_chain(ctx: MatchContext, node: AstNode) -> Optional[Span]:
    """给 *.prototype 成员赋值，或调用 Object.setPrototypeOf / Object.create"""
    if node.kind == "AssignmentExpression" and node.children:
        target = node.children[0]
        if target.kind == "MemberExpression" and "prototype" in member_chain(target):
            return node.span
    if node.kind == "CallExpression":
        chain = callee_chain(node)
        if chain_matches(chain, ("Object", "setPrototypeOf")) or chain_matches(
            chain, ("Object", "create")
        ):
            return node.span
    return None


def predicate_typed_array(ctx: MatchContext, node: AstNode) -> Optional[Span]:
    if node.kind == "NewExpression" and node.attrs.get("callee") in TYPED_ARRAYS:
        return node.span
    return None


PREDICATE_REGISTRY: Dict[str, Predicate] = {
    "anonymous_function": predicate_anonymous_function,
    "closure_return_function": predicate_closure_return_function,
    "nested_function": predicate_nested_function,
    "sparse_array": predicate_sparse_array,
    "async_function": predicate_async_function,
    "generator_function": predicate_generator_function,
    "json_usage": predicate_json_usage,
    "strict_mode_directive": predicate_strict_mode_directive,
    "date_coercion": predicate_date_coercion,
    "webgl_context": predicate_webgl_context,
    "prototype_chain": predicate_prototype_chain,
    "typed_array": predicate_typed_array,
}


def registered_predicates() -> frozenset:
    """已注册的谓词 ID 集合"""
    return frozenset(PREDICATE_REGISTRY)
