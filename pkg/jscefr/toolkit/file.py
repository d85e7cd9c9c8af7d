# jscefr/toolkit/file.py
import os
from pathlib import Path


def create_directory(directory: str) -> None:
    """创建目录(如果不存在)

    Args:
        directory: 目录路径

    Returns:
        None
    """
    os.makedirs(directory, exist_ok=True)


def write_text_file(file_path: Path, text: str) -> None:
    """以 UTF-8 和 LF 换行写入文本文件

    Args:
        file_path: 文件路径
        text: 文件内容
    """
    with open(file_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def read_text_file(file_path: Path) -> str:
    """严格按 UTF-8 读取文本文件，去掉开头的 BOM

    Args:
        file_path: 文件路径

    Returns:
        str: 文件内容

    Raises:
        UnicodeDecodeError: 文件不是合法的 UTF-8
    """
    with open(file_path, "rb") as f:
        data = f.read()
    text = data.decode("utf-8")
    return text[1:] if text.startswith("\ufeff") else text


def get_file_extension(file_path: str) -> str:
    """获取文件扩展名

    Args:
        file_path: 文件路径

    Returns:
        str: 文件扩展名
    """
    return os.path.splitext(file_path)[1].lower()


def is_directory_exists(directory: str) -> bool:
    """检查目录是否存在

    Args:
        directory: 目录路径

    Returns:
        bool: 目录是否存在
    """
    return os.path.isdir(directory)
