import os
import sys
from pathlib import Path
from typing import Dict

import pytest

# 测试环境：日志输出 DEBUG，且不读取开发者本地的 .env
os.environ.setdefault("JSCEFR_APP_ENV", "testing")

sys.path.insert(0, str(Path(__file__).parent.parent))
sys.path.insert(0, str(Path(__file__).parent))

from jscefr.schemas.source import SourceFile  # noqa: E402
from jscefr.services.parser import parse_source  # noqa: E402


def parse_text(text: str, path: str = "app.js", repo: str = "App"):
    """直接解析一段源码"""
    return parse_source(SourceFile(repo=repo, path=path, text=text))


def write_project(root: Path, files: Dict[str, str]) -> Path:
    """在 root 下按相对路径写入文件"""
    root.mkdir(parents=True, exist_ok=True)
    for rel_path, text in files.items():
        target = root / rel_path
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8", newline="\n")
    return root


@pytest.fixture
def make_project(tmp_path):
    """创建一个名为 name 的临时项目目录"""

    def _make(files: Dict[str, str], name: str = "App") -> Path:
        return write_project(tmp_path / name, files)

    return _make


@pytest.fixture
def write_mapping(tmp_path):
    """写入一个映射文件并返回路径"""

    def _write(text: str, name: str = "mapping.csv") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8", newline="\n")
        return path

    return _write
