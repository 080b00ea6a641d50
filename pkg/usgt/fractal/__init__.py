from .base import FractalGraph
from . import builtin
from . import decimation
