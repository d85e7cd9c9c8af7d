import os
from pathlib import Path
from typing import Optional, Set

from pydantic import BaseModel, Field, field_validator

from jscefr.schemas.source import DEFAULT_EXCLUDES, DEFAULT_EXTENSIONS, DiscoveryConfig

EMIT_CHOICES = ("csv", "json", "summary", "histogram")


class RunConfig(BaseModel):
    """一次分析运行的配置"""

    root: Path = Field(..., description="项目根目录")
    mapping_path: Optional[Path] = Field(default=None, description="映射文件路径")
    out_dir: Path = Field(default=Path("./jscefr-out"), description="报告输出目录")
    extensions: Set[str] = Field(default_factory=lambda: set(DEFAULT_EXTENSIONS))
    excludes: Set[str] = Field(default_factory=lambda: set(DEFAULT_EXCLUDES))
    jobs: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
    emit: Set[str] = Field(default_factory=lambda: set(EMIT_CHOICES))

    @field_validator("emit")
    @classmethod
    def check_emit(cls, value: Set[str]) -> Set[str]:
        unknown = sorted(value - set(EMIT_CHOICES))
        if unknown:
            raise ValueError(f"unknown emit target(s): {', '.join(unknown)}")
        return value

    @property
    def discovery(self) -> DiscoveryConfig:
        return DiscoveryConfig(extensions=self.extensions, excludes=self.excludes)
