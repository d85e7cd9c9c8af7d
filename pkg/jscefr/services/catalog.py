"""
构造目录：加载、校验、导出与覆盖检查

映射文件是 UTF-8 CSV，表头为 ``id,class,level,matcher,arg``，可带第六列 ``note``。
以 ``#`` 开头的行和空行被忽略。错误信息中的行号从第一条数据行开始计为 1。
"""

import csv
import io
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import AbstractSet, Iterable, List, Optional, Union

from jscefr.core.exceptions import CatalogError, InvalidLevelError
from jscefr.core.logger import get_logger
from jscefr.schemas.catalog import (
    Catalog,
    ConstructRule,
    CoverageDiagnostics,
    MatcherKind,
    MatcherSpec,
)
from jscefr.schemas.level import format_level, parse_level
from jscefr.services.matchers import TRIVIA_CLASSES, parse_callee_path, parse_node_kind_arg
from jscefr.services.parser import NODE_KINDS
from jscefr.services.predicates import registered_predicates
from jscefr.toolkit.file import read_text_file

logger = get_logger(__name__)

BASE_COLUMNS = ("id", "class", "level", "matcher", "arg")
FULL_COLUMNS = BASE_COLUMNS + ("note",)

DEFAULT_CATALOG_RESOURCE = "data/default_catalog.csv"


def _data_lines(text: str) -> List[str]:
    return [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]


def _validate_matcher(
    kind: MatcherKind, arg: str, predicates: AbstractSet[str]
) -> Optional[str]:
    """返回参数错误描述，参数合法时返回 None"""
    if kind is MatcherKind.NODE_KIND:
        try:
            parse_node_kind_arg(arg)
        except ValueError as e:
            return str(e)
    elif kind is MatcherKind.CALLEE_PATH:
        try:
            parse_callee_path(arg)
        except ValueError as e:
            return str(e)
    elif kind is MatcherKind.TRIVIA:
        if arg not in TRIVIA_CLASSES:
            return f"unknown trivia class: {arg!r}"
    elif kind is MatcherKind.PREDICATE:
        if arg not in predicates:
            return f"predicate not registered: {arg!r}"
    return None


def parse_catalog(
    text: str,
    source: str = "<catalog>",
    predicates: Optional[AbstractSet[str]] = None,
) -> Catalog:
    """从 CSV 文本解析目录

    Args:
        text: 映射文件内容
        source: 用于错误信息和 Catalog.source 的来源名
        predicates: 允许引用的谓词 ID，默认是内置注册表

    Returns:
        Catalog: 保持文件行序的目录

    Raises:
        CatalogError: 列数不对、ID 重复、等级非法、匹配器未知或参数非法
    """
    predicates = registered_predicates() if predicates is None else predicates
    rows = list(csv.reader(io.StringIO("\n".join(_data_lines(text)))))

    width = len(BASE_COLUMNS)
    if rows:
        header = tuple(cell.strip().lower() for cell in rows[0])
        if header in (BASE_COLUMNS, FULL_COLUMNS):
            width = len(header)
            rows = rows[1:]

    rules: List[ConstructRule] = []
    seen = set()
    for number, row in enumerate(rows, start=1):
        cells = [cell.strip() for cell in row]
        if len(cells) != width:
            raise CatalogError(
                f"expected {width} columns, got {len(cells)}", row=number, path=source
            )
        rule_id, class_name, level_text, kind_text, arg = cells[:5]
        note = cells[5] if width == len(FULL_COLUMNS) else ""

        if not rule_id or not class_name or not arg:
            raise CatalogError("id, class and arg must not be empty", row=number, path=source)
        if rule_id in seen:
            raise CatalogError(f"duplicate id: {rule_id!r}", row=number, path=source)
        seen.add(rule_id)

        try:
            level = parse_level(level_text)
        except InvalidLevelError as e:
            raise CatalogError(e.message, row=number, path=source) from e

        try:
            kind = MatcherKind(kind_text)
        except ValueError:
            raise CatalogError(f"unknown matcher kind: {kind_text!r}", row=number, path=source)

        problem = _validate_matcher(kind, arg, predicates)
        if problem:
            raise CatalogError(problem, row=number, path=source)

        rules.append(
            ConstructRule(
                id=rule_id,
                class_name=class_name,
                level=level,
                matcher=MatcherSpec(kind=kind, arg=arg),
                note=note,
            )
        )

    logger.debug(f"目录已加载: {source} ({len(rules)} 条规则)")
    return Catalog(rules=rules, source=source)


def default_catalog_text() -> str:
    """内置默认目录的 CSV 文本"""
    return resources.files("jscefr").joinpath(DEFAULT_CATALOG_RESOURCE).read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def default_catalog() -> Catalog:
    return parse_catalog(default_catalog_text(), source="default")


def load_catalog(path: Optional[Union[str, Path]] = None) -> Catalog:
    """加载目录

    Args:
        path: 映射文件路径；为 None 时返回内置默认目录

    Raises:
        CatalogError: 文件不存在、不是 UTF-8 或内容非法
    """
    if path is None:
        return default_catalog()
    try:
        text = read_text_file(path)
    except FileNotFoundError:
        raise CatalogError("mapping file not found", path=str(path))
    except UnicodeDecodeError:
        raise CatalogError("mapping file is not valid UTF-8", path=str(path))
    except OSError as e:
        raise CatalogError(f"cannot read mapping file ({e.strerror})", path=str(path))
    return parse_catalog(text, source=str(path))


def dump_catalog(catalog: Catalog) -> str:
    """把目录序列化为可被 load_catalog 重新读取的 CSV 文本（带 note 列）"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(FULL_COLUMNS)
    for rule in catalog.rules:
        writer.writerow(
            [
                rule.id,
                rule.class_name,
                format_level(rule.level),
                rule.matcher.kind.value,
                rule.matcher.arg,
                rule.note,
            ]
        )
    return buffer.getvalue()


def catalog_coverage(
    catalog: Catalog,
    node_vocabulary: Optional[Iterable[str]] = None,
    predicates: Optional[AbstractSet[str]] = None,
) -> CoverageDiagnostics:
    """检查目录与前端节点词表、谓词注册表的一致性

    Args:
        catalog: 待检查的目录
        node_vocabulary: 前端可能产生的节点类型，默认是 NODE_KINDS
        predicates: 已注册谓词，默认是内置注册表

    Returns:
        CoverageDiagnostics: unknown_node_kinds / unregistered_predicates 为规则 ID，
        unmatched_node_kinds 为没有 node-kind 规则覆盖的节点类型（按字母序）
    """
    vocabulary = frozenset(NODE_KINDS if node_vocabulary is None else node_vocabulary)
    predicates = registered_predicates() if predicates is None else predicates

    unknown: List[str] = []
    unregistered: List[str] = []
    covered = set()
    for rule in catalog.rules:
        kind = rule.matcher.kind
        if kind is MatcherKind.NODE_KIND:
            try:
                node_kind, _ = parse_node_kind_arg(rule.matcher.arg)
            except ValueError:
                unknown.append(rule.id)
                continue
            if node_kind in vocabulary:
                covered.add(node_kind)
            else:
                unknown.append(rule.id)
        elif kind is MatcherKind.PREDICATE and rule.matcher.arg not in predicates:
            unregistered.append(rule.id)

    return CoverageDiagnostics(
        unknown_node_kinds=unknown,
        unregistered_predicates=unregistered,
        unmatched_node_kinds=sorted(vocabulary - covered),
    )
