import pytest

from jscefr.core.exceptions import IntegrityError
from jscefr.schemas.level import Level
from jscefr.schemas.report import FileReport, Occurrence
from jscefr.services.aggregator import file_report, project_report

FILE = "App/app.js"


def occ(level: str, cls: str = "x", line: int = 1, file: str = FILE) -> Occurrence:
    return Occurrence(
        repo="App",
        file=file,
        class_name=cls,
        level=Level(level),
        start_line=line,
        start_col=0,
        end_line=line,
        end_col=1,
    )


# CSV 报告样例中 App/app.js 的七行：A1×3、A2×1、B1×2、B2×1
SAMPLE_ROWS = [
    occ("A1", "comment", 7),
    occ("B2", "arrayLiteral", 1),
    occ("A2", "elementList", 1),
    occ("B1", "memberDotExpression", 2),
    occ("A1", "querySelector", 3),
    occ("B1", "memberDotExpression", 5),
    occ("A1", "querySelector", 6),
]


def test_file_report_sample():
    """测试样例文件的等级为 B2"""
    report = file_report(FILE, SAMPLE_ROWS)
    assert report.file_level is Level.B2
    assert report.counts[Level.A1] == 3
    assert report.counts[Level.B1] == 2
    assert report.counts[Level.C2] == 0
    assert report.total == 7


def test_file_report_single_and_empty():
    """测试单个出现和没有出现的文件"""
    assert file_report(FILE, [occ("C1")]).file_level is Level.C1
    empty = file_report(FILE, [])
    assert empty.file_level is None
    assert empty.total == 0
    assert set(empty.counts) == set(Level)


def test_file_report_rejects_foreign_occurrence():
    """测试混入其他文件的出现"""
    with pytest.raises(IntegrityError):
        file_report(FILE, [occ("A1"), occ("A2", file="App/other.js")])


def test_project_report_totals():
    """测试项目级元素计数与文件等级直方图"""
    a = file_report("App/a.js", [occ("A1", file="App/a.js"), occ("B1", file="App/a.js")])
    b = file_report("App/b.js", [occ("B1", file="App/b.js")])
    c = file_report("App/c.js", [])
    report = project_report([a, b, c], skipped=1, repo="App")
    assert report.analyzed_files == 3
    assert report.skipped_files == 1
    assert report.element_counts[Level.A1] == 1
    assert report.element_counts[Level.B1] == 2
    assert report.file_level_counts[Level.B1] == 2
    assert sum(report.file_level_counts.values()) == 2
    assert report.files_without_constructs == ["App/c.js"]
    assert report.repo == "App"


def test_project_report_empty():
    """测试空项目"""
    report = project_report([])
    assert report.analyzed_files == 0
    assert all(n == 0 for n in report.element_counts.values())
    assert all(n == 0 for n in report.file_level_counts.values())


def test_project_report_rejects_duplicate_paths():
    """测试重复的文件路径"""
    report = FileReport(file="App/a.js")
    with pytest.raises(IntegrityError):
        project_report([report, report])
