"""
等级聚合

文件等级 = 该文件所有出现中的最高等级；项目统计 = 元素计数与文件等级直方图。
"""

from typing import Iterable, List, Sequence

from jscefr.core.exceptions import IntegrityError
from jscefr.schemas.level import max_level
from jscefr.schemas.report import FileReport, Occurrence, ProjectReport, empty_counts


def file_report(file: str, occurrences: Iterable[Occurrence]) -> FileReport:
    """汇总单个文件的出现

    Args:
        file: 文件显示路径（与 Occurrence.file 一致）
        occurrences: 该文件的出现列表

    Raises:
        IntegrityError: 出现的 file 字段与 file 不一致
    """
    counts = empty_counts()
    for occurrence in occurrences:
        if occurrence.file != file:
            raise IntegrityError(
                f"occurrence of {occurrence.file!r} aggregated into {file!r}"
            )
        counts[occurrence.level] += 1
    return FileReport(
        file=file,
        counts=counts,
        file_level=max_level(level for level, n in counts.items() if n > 0),
    )


def project_report(
    files: Sequence[FileReport], skipped: int = 0, repo: str = ""
) -> ProjectReport:
    """汇总项目

    Args:
        files: 已分析文件的报告，路径必须唯一
        skipped: 被跳过（无法解析或读取）的文件数
        repo: 项目名

    Raises:
        IntegrityError: 文件路径重复
    """
    seen = set()
    element_counts = empty_counts()
    file_level_counts = empty_counts()
    ordered: List[FileReport] = []
    for report in files:
        if report.file in seen:
            raise IntegrityError(f"duplicate file in project report: {report.file!r}")
        seen.add(report.file)
        for level, n in report.counts.items():
            element_counts[level] += n
        if report.file_level is not None:
            file_level_counts[report.file_level] += 1
        ordered.append(report)

    return ProjectReport(
        repo=repo,
        analyzed_files=len(ordered),
        skipped_files=skipped,
        element_counts=element_counts,
        file_level_counts=file_level_counts,
        files=ordered,
    )
