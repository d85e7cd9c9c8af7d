"""
源文件发现
"""

import os
from pathlib import Path
from typing import List, Optional

from jscefr.core.exceptions import DiscoveryError
from jscefr.core.logger import get_logger
from jscefr.schemas.source import DiscoveryConfig, SourceFile
from jscefr.toolkit.file import get_file_extension, is_directory_exists, read_text_file

logger = get_logger(__name__)


def repo_name(root: Path) -> str:
    """项目名 = 解析后根目录的基本名"""
    return Path(root).resolve().name


def discover_js_files(root: Path, config: Optional[DiscoveryConfig] = None) -> List[str]:
    """列出根目录下所有 JavaScript 文件

    Args:
        root: 项目根目录
        config: 扩展名与排除目录配置

    Returns:
        List[str]: 相对根目录、以 / 分隔的路径，按 UTF-8 字节序升序

    Raises:
        DiscoveryError: 根目录不存在或不是目录
    """
    config = config or DiscoveryConfig()
    if not is_directory_exists(str(root)):
        raise DiscoveryError(f"project root is not a directory: {root}")

    def on_error(error: OSError) -> None:
        logger.warning(f"无法读取目录，已跳过: {error.filename} ({error.strerror})")

    found: List[str] = []
    for dirpath, dirnames, filenames in os.walk(root, onerror=on_error):
        # 原地修改 dirnames 以剪掉排除目录
        dirnames[:] = [d for d in dirnames if d not in config.excludes]
        for filename in filenames:
            if get_file_extension(filename) not in config.extensions:
                continue
            full = Path(dirpath) / filename
            if not full.is_file():
                continue
            found.append(full.relative_to(root).as_posix())

    found.sort(key=os.fsencode)
    logger.info(f"发现 {len(found)} 个 JavaScript 文件: {root}")
    return found


def load_source_file(root: Path, rel_path: str, repo: str) -> SourceFile:
    """读取源文件内容

    Raises:
        UnicodeDecodeError: 文件不是合法的 UTF-8
        OSError: 文件不可读
    """
    text = read_text_file(Path(root) / rel_path)
    return SourceFile(repo=repo, path=rel_path, text=text)
