"""
报告输出

四种格式：逐出现的 CSV、终端摘要、JSON、按等级的直方图数据。
所有输出使用 LF 换行，相同输入得到逐字节相同的输出。
"""

import csv
import io
from typing import Dict, List, Sequence

from jscefr.schemas.level import LEVELS, Level, format_level
from jscefr.schemas.report import Occurrence, ProjectReport, ReportBundle
from jscefr.toolkit.converter import dict_to_json_str

CSV_HEADER = ("Repo", "File", "Class", "Level", "StartLine", "StartCol", "EndLine", "EndCol")
HISTOGRAM_HEADER = ("Level", "Elements", "Files")
JSON_SCHEMA_VERSION = "1"

SUMMARY_INDENT = " " * 4
SUMMARY_RULE = "=" * 28
SUMMARY_TITLE = "RESULT OF THE ANALYSIS:"


def _csv_writer(buffer: io.StringIO):
    return csv.writer(buffer, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)


def emit_csv(occurrences: Sequence[Occurrence]) -> str:
    """逐出现的 CSV 报告，表头之后每个出现一行"""
    buffer = io.StringIO()
    writer = _csv_writer(buffer)
    writer.writerow(CSV_HEADER)
    for o in occurrences:
        writer.writerow(
            [
                o.repo,
                o.file,
                o.class_name,
                format_level(o.level),
                o.start_line,
                o.start_col,
                o.end_line,
                o.end_col,
            ]
        )
    return buffer.getvalue()


def emit_summary(report: ProjectReport) -> str:
    """终端摘要，计数为 0 的等级不输出"""
    lines = [SUMMARY_RULE, SUMMARY_TITLE, f"Analyzed .js files: {report.analyzed_files}"]
    for level in LEVELS:
        count = report.element_counts.get(level, 0)
        if count:
            lines.append(f"Elements of level {format_level(level)}: {count}")
    lines.append(SUMMARY_RULE)
    return "".join(f"{SUMMARY_INDENT}{line}\n" for line in lines)


def _level_table(counts: Dict[Level, int]) -> Dict[str, int]:
    return {format_level(level): counts.get(level, 0) for level in LEVELS}


def emit_json(report: ProjectReport, occurrences: Sequence[Occurrence]) -> str:
    """JSON 报告，键顺序固定，六个等级总是全部输出"""
    by_file: Dict[str, List[Occurrence]] = {}
    for o in occurrences:
        by_file.setdefault(o.file, []).append(o)

    files = []
    for file_report in report.files:
        files.append(
            {
                "path": file_report.file,
                "file_level": (
                    format_level(file_report.file_level) if file_report.file_level else None
                ),
                "counts": _level_table(file_report.counts),
                "occurrences": [
                    {
                        "class": o.class_name,
                        "level": format_level(o.level),
                        "start_line": o.start_line,
                        "start_col": o.start_col,
                        "end_line": o.end_line,
                        "end_col": o.end_col,
                    }
                    for o in by_file.get(file_report.file, [])
                ],
            }
        )

    data = {
        "schema_version": JSON_SCHEMA_VERSION,
        "repo": report.repo,
        "analyzed_files": report.analyzed_files,
        "skipped_files": report.skipped_files,
        "element_counts": _level_table(report.element_counts),
        "file_level_counts": _level_table(report.file_level_counts),
        "files_without_constructs": report.files_without_constructs,
        "files": files,
    }
    return dict_to_json_str(data)


def emit_level_histogram(report: ProjectReport) -> str:
    """按等级的元素数与文件数，固定 A1..C2 六行"""
    buffer = io.StringIO()
    writer = _csv_writer(buffer)
    writer.writerow(HISTOGRAM_HEADER)
    for level in LEVELS:
        writer.writerow(
            [
                format_level(level),
                report.element_counts.get(level, 0),
                report.file_level_counts.get(level, 0),
            ]
        )
    return buffer.getvalue()


def build_bundle(report: ProjectReport, occurrences: Sequence[Occurrence]) -> ReportBundle:
    return ReportBundle(
        csv_text=emit_csv(occurrences),
        json_text=emit_json(report, occurrences),
        summary_text=emit_summary(report),
        histogram_csv=emit_level_histogram(report),
    )
