from enum import Enum
from functools import reduce
from typing import Iterable, Optional

from jscefr.core.exceptions import InvalidLevelError


class Level(str, Enum):
    """CEFR 熟练度等级，全序 A1 < A2 < B1 < B2 < C1 < C2"""

    A1 = "A1"
    A2 = "A2"
    B1 = "B1"
    B2 = "B2"
    C1 = "C1"
    C2 = "C2"

    @property
    def rank(self) -> int:
        return _RANK[self]

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Level):
            return NotImplemented
        return self.rank < other.rank

    def __le__(self, other: object) -> bool:
        if not isinstance(other, Level):
            return NotImplemented
        return self.rank <= other.rank

    def __gt__(self, other: object) -> bool:
        if not isinstance(other, Level):
            return NotImplemented
        return self.rank > other.rank

    def __ge__(self, other: object) -> bool:
        if not isinstance(other, Level):
            return NotImplemented
        return self.rank >= other.rank

    def __str__(self) -> str:
        return self.value


LEVELS = tuple(Level)
_RANK = {level: index for index, level in enumerate(LEVELS)}
_BY_TEXT = {level.value: level for level in LEVELS}


def parse_level(text: str) -> Level:
    """解析等级字符串

    区分大小写且不去除空白，只接受 "A1".."C2" 六个字符串。

    Args:
        text: 等级字符串

    Returns:
        Level: 对应的等级

    Raises:
        InvalidLevelError: 字符串不是六个等级之一
    """
    level = _BY_TEXT.get(text) if isinstance(text, str) else None
    if level is None:
        raise InvalidLevelError(text)
    return level


def format_level(level: Level) -> str:
    """等级转字符串"""
    return level.value


def level_max(a: Level, b: Level) -> Level:
    """返回两个等级中较高的一个"""
    return a if a.rank >= b.rank else b


def max_level(levels: Iterable[Level]) -> Optional[Level]:
    """对一组等级求最大值，空集合返回 None"""
    return reduce(lambda acc, lv: lv if acc is None else level_max(acc, lv), levels, None)
