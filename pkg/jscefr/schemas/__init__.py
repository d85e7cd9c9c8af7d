from jscefr.schemas.level import LEVELS, Level, format_level, level_max, max_level, parse_level
from jscefr.schemas.catalog import (
    Catalog,
    ConstructRule,
    CoverageDiagnostics,
    MatcherKind,
    MatcherSpec,
)
from jscefr.schemas.source import (
    AstNode,
    Comment,
    DiscoveryConfig,
    ParsedUnit,
    SourceFile,
    Span,
)
from jscefr.schemas.report import (
    AnalysisResult,
    FileOutcome,
    FileReport,
    Occurrence,
    ProjectReport,
    ReportBundle,
    empty_counts,
)
from jscefr.schemas.run import EMIT_CHOICES, RunConfig

__all__ = [
    "LEVELS",
    "Level",
    "format_level",
    "level_max",
    "max_level",
    "parse_level",
    "Catalog",
    "ConstructRule",
    "CoverageDiagnostics",
    "MatcherKind",
    "MatcherSpec",
    "AstNode",
    "Comment",
    "DiscoveryConfig",
    "ParsedUnit",
    "SourceFile",
    "Span",
    "AnalysisResult",
    "FileOutcome",
    "FileReport",
    "Occurrence",
    "ProjectReport",
    "ReportBundle",
    "empty_counts",
    "EMIT_CHOICES",
    "RunConfig",
]
