"""
构造检测引擎

对 ParsedUnit 做先序遍历，在每个节点上依次测试目录中的规则，
每个 (规则, 匹配节点/注释) 产生一个 Occurrence。
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from jscefr.schemas.catalog import Catalog, ConstructRule, MatcherKind
from jscefr.schemas.report import Occurrence
from jscefr.schemas.source import AstNode, ParsedUnit, Span
from jscefr.services.matchers import (
    Constraint,
    callee_chain,
    chain_matches,
    constraints_hold,
    keyword_tokens,
    parse_callee_path,
    parse_node_kind_arg,
)
from jscefr.services.predicates import PREDICATE_REGISTRY, MatchContext, Predicate


@dataclass
class _CompiledRule:
    index: int
    rule: ConstructRule
    node_kind: Optional[str] = None
    constraints: List[Constraint] = field(default_factory=list)
    path: List[str] = field(default_factory=list)
    predicate: Optional[Predicate] = None

    def match(self, ctx: MatchContext, node: AstNode) -> Optional[Span]:
        kind = self.rule.matcher.kind
        if kind is MatcherKind.NODE_KIND:
            if node.kind == self.node_kind and constraints_hold(node, self.constraints):
                return node.span
        elif kind is MatcherKind.KEYWORD:
            if self.rule.matcher.arg in keyword_tokens(node):
                return node.span
        elif kind is MatcherKind.CALLEE_PATH:
            if node.kind == "CallExpression" and chain_matches(callee_chain(node), self.path):
                return node.span
        elif kind is MatcherKind.PREDICATE:
            return self.predicate(ctx, node)
        return None


class CompiledCatalog:
    """预编译的目录：按节点类型缓存候选规则列表（保持目录顺序）"""

    def __init__(self, catalog: Catalog):
        self.catalog = catalog
        self.trivia: List[Tuple[str, ConstructRule]] = []
        self._node_kind: Dict[str, List[_CompiledRule]] = {}
        self._generic: List[_CompiledRule] = []
        self._callee: List[_CompiledRule] = []
        self._cache: Dict[str, List[_CompiledRule]] = {}

        for index, rule in enumerate(catalog.rules):
            kind = rule.matcher.kind
            arg = rule.matcher.arg
            if kind is MatcherKind.TRIVIA:
                self.trivia.append((arg, rule))
            elif kind is MatcherKind.NODE_KIND:
                node_kind, constraints = parse_node_kind_arg(arg)
                compiled = _CompiledRule(index, rule, node_kind=node_kind, constraints=constraints)
                self._node_kind.setdefault(node_kind, []).append(compiled)
            elif kind is MatcherKind.CALLEE_PATH:
                self._callee.append(_CompiledRule(index, rule, path=parse_callee_path(arg)))
            elif kind is MatcherKind.PREDICATE:
                self._generic.append(
                    _CompiledRule(index, rule, predicate=PREDICATE_REGISTRY[arg])
                )
            else:
                self._generic.append(_CompiledRule(index, rule))

    def candidates(self, node_kind: str) -> List[_CompiledRule]:
        cached = self._cache.get(node_kind)
        if cached is None:
            cached = list(self._node_kind.get(node_kind, [])) + self._generic
            if node_kind == "CallExpression":
                cached += self._callee
            cached.sort(key=lambda c: c.index)
            self._cache[node_kind] = cached
        return cached


def _occurrence(unit: ParsedUnit, rule: ConstructRule, span: Span) -> Occurrence:
    return Occurrence(
        repo=unit.file.repo,
        file=unit.file.display_path,
        class_name=rule.class_name,
        level=rule.level,
        start_line=span.start_line,
        start_col=span.start_col,
        end_line=span.end_line,
        end_col=span.end_col,
    )


def detect(
    unit: ParsedUnit, catalog: Catalog, compiled: Optional[CompiledCatalog] = None
) -> List[Occurrence]:
    """检测一个文件中的所有构造

    Args:
        unit: 解析结果
        catalog: 构造目录（需已通过覆盖检查）
        compiled: 可选的预编译目录，批量检测时复用

    Returns:
        List[Occurrence]: 按 (起始行, 起始列, 类名) 排序的出现列表
    """
    compiled = compiled or CompiledCatalog(catalog)
    found: List[Occurrence] = []

    # 注释只参与 trivia 规则
    for comment in unit.comments:
        trivia_class = comment.trivia_class
        for arg, rule in compiled.trivia:
            if arg == "comment" or arg == trivia_class:
                found.append(_occurrence(unit, rule, comment.span))

    ctx = MatchContext(unit=unit, ancestors=[])
    stack: List[Tuple[AstNode, int]] = [(unit.root, 0)]
    while stack:
        node, depth = stack.pop()
        del ctx.ancestors[depth:]
        for candidate in compiled.candidates(node.kind):
            span = candidate.match(ctx, node)
            if span is not None:
                found.append(_occurrence(unit, candidate.rule, span))
        ctx.ancestors.append(node)
        for child in reversed(node.children):
            stack.append((child, depth + 1))

    found.sort(key=lambda o: o.sort_key)
    return found
