import pytest

from jscefr.core.exceptions import InvalidLevelError
from jscefr.schemas.level import LEVELS, Level, format_level, level_max, max_level, parse_level


def test_parse_level_accepts_six_strings():
    """测试六个等级字符串都能解析"""
    assert parse_level("A1") is Level.A1
    assert parse_level("C2") is Level.C2
    assert [parse_level(format_level(level)) for level in LEVELS] == list(LEVELS)


@pytest.mark.parametrize("text", ["D1", "a1", " A1", "A1 ", "", "A", "B12", "c2"])
def test_parse_level_rejects_other_strings(text):
    """测试非法等级字符串（区分大小写、不去空白）"""
    with pytest.raises(InvalidLevelError) as exc_info:
        parse_level(text)
    assert exc_info.value.text == text


def test_level_total_order():
    """测试 A1 < A2 < B1 < B2 < C1 < C2"""
    assert Level.A1 < Level.A2 < Level.B1 < Level.B2 < Level.C1 < Level.C2
    assert sorted([Level.C1, Level.A1, Level.B2]) == [Level.A1, Level.B2, Level.C1]
    assert Level.B1 >= Level.B1


def test_level_max():
    """测试 level_max 的基本例子"""
    assert level_max(Level.A1, Level.B2) is Level.B2
    assert level_max(Level.C2, Level.C2) is Level.C2
    assert max_level([Level.A1, Level.B2, Level.A2]) is Level.B2
    assert max_level([]) is None


def test_level_string_form():
    """测试等级的字符串形式"""
    assert str(Level.B1) == "B1"
    assert format_level(Level.A2) == "A2"
