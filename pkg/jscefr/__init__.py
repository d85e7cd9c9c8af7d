"""jscefr - 按 CEFR 六级评估 JavaScript 源码体现的熟练度"""

__version__ = "0.1.0"
