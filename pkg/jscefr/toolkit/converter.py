# jscefr/toolkit/converter.py
import json
from typing import Any, Dict


def dict_to_json_str(data: Dict[str, Any], indent: int = 2) -> str:
    """字典转JSON字符串

    保持键的插入顺序，输出以换行结尾，相同输入得到逐字节相同的输出。

    Args:
        data: 要转换的字典数据
        indent: 缩进空格数

    Returns:
        str: JSON格式的字符串
    """
    return json.dumps(data, ensure_ascii=False, indent=indent) + "\n"


def snake_to_pascal(s: str) -> str:
    """蛇形命名转帕斯卡命名

    Args:
        s: 蛇形命名的字符串

    Returns:
        str: 帕斯卡命名的字符串
    """
    components = s.split('_')
    return ''.join(x.title() for x in components)
