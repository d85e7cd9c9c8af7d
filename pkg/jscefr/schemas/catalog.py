from enum import Enum
from typing import List

from pydantic import BaseModel, Field

from jscefr.schemas.level import Level


class MatcherKind(str, Enum):
    """匹配器类型"""

    NODE_KIND = "node-kind"
    KEYWORD = "keyword"
    CALLEE_PATH = "callee-path"
    TRIVIA = "trivia"
    PREDICATE = "predicate"


class MatcherSpec(BaseModel):
    """匹配器定义"""

    kind: MatcherKind = Field(..., description="匹配器类型")
    arg: str = Field(..., min_length=1, description="匹配参数")

    class Config:
        frozen = True


class ConstructRule(BaseModel):
    """目录中的一条构造规则"""

    id: str = Field(..., min_length=1, description="唯一且稳定的规则 ID")
    class_name: str = Field(..., min_length=1, description="报告中输出的类名")
    level: Level = Field(..., description="熟练度等级")
    matcher: MatcherSpec
    note: str = Field(default="", description="来源备注")

    class Config:
        frozen = True


class Catalog(BaseModel):
    """构造目录（加载后不可变）"""

    rules: List[ConstructRule] = Field(default_factory=list)
    source: str = Field(default="default", description="default 或映射文件路径")

    class Config:
        frozen = True

    def __len__(self) -> int:
        return len(self.rules)

    def get(self, rule_id: str) -> ConstructRule:
        """按 ID 获取规则"""
        for rule in self.rules:
            if rule.id == rule_id:
                return rule
        raise KeyError(rule_id)

    def without(self, rule_id: str) -> "Catalog":
        """返回去掉指定规则后的新目录"""
        return Catalog(
            rules=[rule for rule in self.rules if rule.id != rule_id],
            source=self.source,
        )


class CoverageDiagnostics(BaseModel):
    """目录覆盖诊断结果"""

    unknown_node_kinds: List[str] = Field(
        default_factory=list, description="引用了未知节点类型的规则 ID"
    )
    unregistered_predicates: List[str] = Field(
        default_factory=list, description="引用了未注册谓词的规则 ID"
    )
    unmatched_node_kinds: List[str] = Field(
        default_factory=list, description="没有任何规则匹配的节点类型"
    )

    @property
    def is_clean(self) -> bool:
        """没有未知节点类型和未注册谓词"""
        return not self.unknown_node_kinds and not self.unregistered_predicates
