from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, NamedTuple, Set, Tuple

from pydantic import BaseModel, Field, field_validator

DEFAULT_EXTENSIONS = (".js", ".mjs", ".cjs")
DEFAULT_EXCLUDES = ("node_modules", ".git")


class DiscoveryConfig(BaseModel):
    """文件发现配置"""

    extensions: Set[str] = Field(default_factory=lambda: set(DEFAULT_EXTENSIONS))
    excludes: Set[str] = Field(default_factory=lambda: set(DEFAULT_EXCLUDES))

    @field_validator("extensions")
    @classmethod
    def normalize_extensions(cls, value: Set[str]) -> Set[str]:
        """统一为小写并带前导点"""
        return {ext.lower() if ext.startswith(".") else f".{ext.lower()}" for ext in value}


class SourceFile(BaseModel):
    """一个待分析的 JavaScript 源文件"""

    repo: str = Field(..., description="项目根目录名")
    path: str = Field(..., description="相对根目录的路径，以 / 分隔")
    text: str = Field(default="", description="UTF-8 解码后的源码")

    @property
    def display_path(self) -> str:
        """报告中使用的路径，例如 App/app.js"""
        return f"{self.repo}/{self.path}"


class Span(NamedTuple):
    """源码区间：行从 1 开始，列从 0 开始，结束列不包含"""

    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def contains(self, other: "Span") -> bool:
        return (self.start_line, self.start_col) <= (
            other.start_line,
            other.start_col,
        ) and (other.end_line, other.end_col) <= (self.end_line, self.end_col)

    def is_well_formed(self) -> bool:
        return (self.start_line, self.start_col) <= (self.end_line, self.end_col)


@dataclass(frozen=True)
class AstNode:
    """归一化后的 AST 节点"""

    kind: str
    span: Span
    attrs: Dict[str, Any] = field(default_factory=dict)
    children: Tuple["AstNode", ...] = ()

    def walk(self) -> Iterator["AstNode"]:
        """先序遍历（非递归）"""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))


@dataclass(frozen=True)
class Comment:
    """注释（trivia）"""

    span: Span
    text: str

    @property
    def trivia_class(self) -> str:
        if self.text.startswith("//"):
            return "line"
        if self.text.startswith("/**") and self.text != "/**/":
            return "doc"
        return "block"


@dataclass(frozen=True)
class ParsedUnit:
    """一个文件的解析结果"""

    file: SourceFile
    root: AstNode
    comments: List[Comment] = field(default_factory=list)
