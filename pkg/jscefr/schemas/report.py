from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from jscefr.schemas.level import LEVELS, Level


def empty_counts() -> Dict[Level, int]:
    """六个等级全部为 0 的计数表"""
    return {level: 0 for level in LEVELS}


class Occurrence(BaseModel):
    """一次检测到的构造实例（CSV 报告的一行）"""

    repo: str
    file: str
    class_name: str
    level: Level
    start_line: int = Field(..., ge=1)
    start_col: int = Field(..., ge=0)
    end_line: int = Field(..., ge=1)
    end_col: int = Field(..., ge=0)

    class Config:
        frozen = True

    @property
    def sort_key(self):
        return (self.start_line, self.start_col, self.class_name)


class FileReport(BaseModel):
    """单个文件的等级统计"""

    file: str
    counts: Dict[Level, int] = Field(default_factory=empty_counts)
    file_level: Optional[Level] = None

    @property
    def total(self) -> int:
        return sum(self.counts.values())


class ProjectReport(BaseModel):
    """项目级汇总"""

    repo: str = ""
    analyzed_files: int = 0
    skipped_files: int = 0
    element_counts: Dict[Level, int] = Field(default_factory=empty_counts)
    file_level_counts: Dict[Level, int] = Field(default_factory=empty_counts)
    files: List[FileReport] = Field(default_factory=list)

    @property
    def files_without_constructs(self) -> List[str]:
        return [report.file for report in self.files if report.file_level is None]


class ReportBundle(BaseModel):
    """四种输出格式的文本"""

    csv_text: str = ""
    json_text: str = ""
    summary_text: str = ""
    histogram_csv: str = ""


class FileOutcome(BaseModel):
    """单个文件的分析结果（工作进程返回值）"""

    path: str = Field(..., description="相对根目录的路径")
    display_path: str = Field(..., description="报告中使用的 <repo>/<path>")
    occurrences: List[Occurrence] = Field(default_factory=list)
    error: Optional[str] = Field(default=None, description="跳过原因，成功时为 None")
    line: Optional[int] = None
    col: Optional[int] = None

    @property
    def skipped(self) -> bool:
        return self.error is not None


class AnalysisResult(BaseModel):
    """一次完整分析的结果"""

    occurrences: List[Occurrence] = Field(default_factory=list)
    report: ProjectReport = Field(default_factory=ProjectReport)
    skipped: List[FileOutcome] = Field(default_factory=list)
